"""
命令基类

所有验证命令的通用逻辑：
- 配置加载
- 规模保护
- 统计数据
- 日志记录
- 报告渲染
- 依赖注入支持

子类需要实现：
- collect(): 计算并返回结论行
"""

from abc import ABC, abstractmethod
from typing import Any, Dict, List, Optional, Tuple

from config.config_loader import load_config
from config.constants import EXIT_PASS, EXIT_VERIFICATION_FAILED
from core.logger import logger_from_config
from core.report_writer import ClaimResult, ReportWriter
from exceptions.verification import SizeGuardError
from interfaces.interfaces import IConfigLoader, ILogger, IReportWriter


class BaseCommand(ABC):
    """
    命令基类（抽象类）

    使用依赖注入：
        command = MyCommand(options, config_loader=loader, logger=log, writer=writer)

    不传参数时自动创建：
        command = MyCommand(options)
    """

    name = "command"

    def __init__(
        self,
        options: Any,
        config_loader: Optional[IConfigLoader] = None,
        logger: Optional[ILogger] = None,
        writer: Optional[IReportWriter] = None,
    ):
        """
        初始化命令（支持依赖注入）

        Args:
            options: 解析后的命令行选项（RunConfig）
            config_loader: 配置加载器实例（可选，不传则自动创建）
            logger: 日志记录器实例（可选，不传则按 [logging] 配置创建）
            writer: 报告输出器（可选，不传则按 options.format 创建）
        """
        self.options = options
        self.config_loader = config_loader if config_loader is not None else load_config()
        self.config = self.config_loader.get_all_config()
        self.log = logger if logger is not None else logger_from_config(self.config["logging"])
        self.writer = writer if writer is not None else ReportWriter(options.format)

        self.stats: Dict[str, int] = {"claims": 0, "passed": 0, "failed": 0}

    @property
    def max_r(self) -> int:
        return self.config["guards"]["max_r"]

    def guard(self, r: int):
        """
        规模保护

        Raises:
            SizeGuardError: r 超过 [guards] max_r 且未指定 --force
        """
        if r > self.max_r:
            if not self.options.force:
                raise SizeGuardError(r, self.max_r)
            self.log(f"r={r} 超过规模上限 {self.max_r}，已按 --force 继续", "WARNING")

    @abstractmethod
    def collect(self) -> List[ClaimResult]:
        """
        计算本命令的全部结论行

        Returns:
            List[ClaimResult]: 结论行（顺序无关，输出时统一排序）
        """
        pass

    def render(self, rows: List[ClaimResult]) -> str:
        return self.writer.render(self.name, rows)

    def run(self) -> Tuple[int, str]:
        """
        执行命令

        Returns:
            (退出码, 报告文本)：全部通过为 0，否则为 1
        """
        self.log(f"开始执行 {self.name}", "DEBUG")
        rows = self.collect()
        self.stats["claims"] = len(rows)
        self.stats["passed"] = sum(1 for row in rows if row.passed)
        self.stats["failed"] = self.stats["claims"] - self.stats["passed"]

        for row in rows:
            if not row.passed:
                self.log(
                    f"{row.claim_id} 未通过 (r={row.r}, d={row.d}): "
                    f"计算值 {row.computed}, 期望值 {row.expected}",
                    "ERROR",
                )
        if self.stats["failed"]:
            self.log(f"{self.name}: {self.stats['failed']}/{self.stats['claims']} 条结论未通过", "ERROR")
            code = EXIT_VERIFICATION_FAILED
        else:
            self.log(f"{self.name}: {self.stats['claims']} 条结论全部通过", "SUCCESS")
            code = EXIT_PASS
        return code, self.render(rows)
