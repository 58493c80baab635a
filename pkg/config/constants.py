"""
技术常量定义

说明：
- 这些是代码级常量，开发者维护，用户通常不需要修改
- 运行参数（种子、输出格式、规模上限等）请在 config/config.ini 中配置
"""

from pathlib import Path

PROJECT_ROOT = Path(__file__).resolve().parent.parent

# 报告格式
REPORT_SCHEMA_VERSION = 1  # JSON 报告的 schema_version
REPORT_FORMATS = ("tsv", "json")
CLAIM_COLUMNS = ("command", "claim_id", "locator", "r", "d", "computed", "expected", "passed")

# 随机检验
DEFAULT_SEED = 20240917  # 未指定 --seed 时的默认种子
RANDOM_ENTRY_RANGE = (-9, 9)  # 随机整数矩阵元素的取值区间（含端点）
ROTH_RANDOM_CASES = 50  # verify 中每个 r 的随机 Roth 右端个数

# 规模保护
DEFAULT_MAX_R = 6  # 超过此 r 需要 --force

# 随仓库发布的三角剖分文档
DATA_DIR = PROJECT_ROOT / "data"
DELTA_S_DOCUMENT = DATA_DIR / "delta_s.yaml"
DELTA_S_ALIAS = "deltaS"  # 命令行中 --tri deltaS 指向 DELTA_S_DOCUMENT

# 日志
DEFAULT_LOG_DIR = "logs"
DEFAULT_LOG_RETENTION_HOURS = 24

# LU 问题随机搜索
DEFAULT_LU_SEARCH_TRIALS = 200

# 退出码
EXIT_PASS = 0
EXIT_VERIFICATION_FAILED = 1
EXIT_INPUT_ERROR = 2
EXIT_SIZE_GUARD = 3
EXIT_INTERNAL_ERROR = 4
