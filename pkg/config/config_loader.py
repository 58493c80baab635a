"""
统一配置加载模块
提供命令行与各验证组件的配置加载接口

配置说明：
- 运行参数优先从环境变量 SPLINE_VERIFY_* 读取
- 环境变量未配置时读取 config.ini，再 fallback 到 config/constants.py 中的默认值
- 项目根目录下的 .env 文件会先被加载到环境变量
"""

import configparser
import os
from pathlib import Path
from typing import Any, Dict, Optional

from config.constants import (
    DEFAULT_LOG_DIR,
    DEFAULT_LOG_RETENTION_HOURS,
    DEFAULT_LU_SEARCH_TRIALS,
    DEFAULT_MAX_R,
    DEFAULT_SEED,
    REPORT_FORMATS,
)
from exceptions.base import ConfigurationException


class ConfigLoader:
    """配置加载器类（支持环境变量优先）"""

    # "节.键" → 环境变量
    ENV_MAPPING = {
        "run.seed": "SPLINE_VERIFY_SEED",
        "run.format": "SPLINE_VERIFY_FORMAT",
        "run.workers": "SPLINE_VERIFY_WORKERS",
        "guards.max_r": "SPLINE_VERIFY_MAX_R",
        "logging.log_dir": "SPLINE_VERIFY_LOG_DIR",
        "search.lu_question_search": "SPLINE_VERIFY_LU_SEARCH",
    }

    def __init__(self, config_file: Optional[str] = None, load_env_file: bool = True):
        """
        初始化配置加载器

        Args:
            config_file: 配置文件路径，默认为 config/config.ini
            load_env_file: 是否加载项目根目录的 .env
        """
        if config_file is None:
            project_root = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
            config_file = os.path.join(project_root, "config", "config.ini")

        self.config_file = config_file

        if load_env_file:
            self._load_env()

        self.config = configparser.ConfigParser()
        self._load_config()

    def _load_env(self):
        """从项目根目录加载 .env 文件到环境变量（已存在的变量不覆盖）"""
        env_file = Path(__file__).parent.parent / ".env"

        if env_file.exists():
            with open(env_file, encoding="utf-8") as f:
                for line in f:
                    line = line.strip()
                    if not line or line.startswith("#"):
                        continue
                    if "=" in line:
                        key, value = line.split("=", 1)
                        os.environ.setdefault(key.strip(), value.strip())

    def _load_config(self):
        """加载配置文件"""
        if os.path.exists(self.config_file):
            try:
                self.config.read(self.config_file, encoding="utf-8")
            except configparser.Error as e:
                raise ConfigurationException(f"配置文件格式错误: {e}") from e
        # 配置文件不存在时不报错，使用默认值

    def _get_value(self, section: str, key: str, fallback: Any = None) -> Any:
        """
        获取配置值

        优先级: 环境变量 > config.ini > fallback
        """
        env_name = self.ENV_MAPPING.get(f"{section}.{key}")
        if env_name:
            env_value = os.environ.get(env_name)
            if env_value:
                return env_value

        if self.config.has_section(section) and self.config.has_option(section, key):
            return self.config.get(section, key)

        return fallback

    def _get_int(self, section: str, key: str, fallback: int, minimum: int = 0) -> int:
        raw = self._get_value(section, key, fallback)
        try:
            value = int(raw)
        except (TypeError, ValueError):
            raise ConfigurationException(
                f"配置值必须是整数，得到 {raw!r}", config_section=section, config_key=key
            )
        if value < minimum:
            raise ConfigurationException(
                f"配置值必须 ≥ {minimum}，得到 {value}", config_section=section, config_key=key
            )
        return value

    def _get_bool(self, section: str, key: str, fallback: bool) -> bool:
        raw = self._get_value(section, key, fallback)
        if isinstance(raw, bool):
            return raw
        text = str(raw).strip().lower()
        if text in ("1", "true", "yes", "on"):
            return True
        if text in ("0", "false", "no", "off"):
            return False
        raise ConfigurationException(
            f"配置值必须是布尔值，得到 {raw!r}", config_section=section, config_key=key
        )

    def get_run_config(self) -> Dict[str, Any]:
        """
        获取运行配置

        Returns:
            Dict[str, Any]: {'seed': int, 'format': 'tsv'|'json', 'workers': int}
        """
        report_format = str(self._get_value("run", "format", "tsv")).strip().lower()
        if report_format not in REPORT_FORMATS:
            raise ConfigurationException(
                f"不支持的报告格式 {report_format!r}", config_section="run", config_key="format"
            )
        return {
            "seed": self._get_int("run", "seed", DEFAULT_SEED),
            "format": report_format,
            "workers": self._get_int("run", "workers", 1, minimum=1),
        }

    def get_guards_config(self) -> Dict[str, int]:
        """获取规模保护配置"""
        return {"max_r": self._get_int("guards", "max_r", DEFAULT_MAX_R, minimum=1)}

    def get_logging_config(self) -> Dict[str, Any]:
        """获取日志配置"""
        return {
            "log_dir": self._get_value("logging", "log_dir", DEFAULT_LOG_DIR),
            "retention_hours": self._get_int(
                "logging", "retention_hours", DEFAULT_LOG_RETENTION_HOURS, minimum=1
            ),
            "file_logging": self._get_bool("logging", "file_logging", False),
        }

    def get_search_config(self) -> Dict[str, Any]:
        """获取 LU 问题随机搜索配置"""
        return {
            "lu_question_search": self._get_bool("search", "lu_question_search", False),
            "lu_question_trials": self._get_int(
                "search", "lu_question_trials", DEFAULT_LU_SEARCH_TRIALS, minimum=1
            ),
        }

    def get_config(self, section: str) -> Dict[str, Any]:
        """
        获取单个配置节

        Raises:
            ConfigurationException: 未知的配置节
        """
        getters = {
            "run": self.get_run_config,
            "guards": self.get_guards_config,
            "logging": self.get_logging_config,
            "search": self.get_search_config,
        }
        if section not in getters:
            raise ConfigurationException(f"未知的配置节 {section!r}", config_section=section)
        return getters[section]()

    def get_all_config(self) -> Dict[str, Any]:
        """
        获取所有配置

        Returns:
            Dict[str, Any]: 包含所有配置节的字典
        """
        return {
            "run": self.get_run_config(),
            "guards": self.get_guards_config(),
            "logging": self.get_logging_config(),
            "search": self.get_search_config(),
        }


# 全局实例（延迟加载）
_config_loader_instance = None


def load_config(config_file: Optional[str] = None) -> ConfigLoader:
    """
    获取配置加载器实例（单例模式）

    Args:
        config_file: 指定配置文件时返回新的加载器，不替换全局实例
    """
    global _config_loader_instance
    if config_file is not None:
        return ConfigLoader(config_file)
    if _config_loader_instance is None:
        _config_loader_instance = ConfigLoader()
    return _config_loader_instance
