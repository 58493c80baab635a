"""
日志记录模块
提供统一的日志记录功能，自动清理过期日志

控制台输出写入 stderr，stdout 只留给报告内容。
"""

import os
import sys
from datetime import datetime, timedelta
from typing import Callable, Optional, TextIO

LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "SUCCESS")


def get_logger(
    log_dir: Optional[str] = None,
    hours: int = 24,
    stream: Optional[TextIO] = None,
    min_level: str = "INFO",
) -> Callable:
    """
    获取一个日志记录器函数

    Args:
        log_dir: 日志文件存储目录，None 表示只输出到控制台
        hours: 日志保留时间（小时）
        stream: 控制台输出流，默认 sys.stderr
        min_level: 最低输出级别（SUCCESS 与 INFO 同级）

    Returns:
        Callable: 日志记录函数

    Example:
        >>> log = get_logger()
        >>> log("K(3) 维数: 2")
        >>> log("规模超过上限", "WARNING")
    """
    log_path = None
    if log_dir:
        os.makedirs(log_dir, exist_ok=True)
        cleanup_old_logs(log_dir, hours)
        log_path = os.path.join(log_dir, datetime.now().strftime("%Y-%m-%d.log"))

    threshold = _rank(min_level)

    def logger(message: str, level: str = "INFO"):
        """
        记录日志消息

        Args:
            message: 日志消息
            level: 日志级别 (DEBUG, INFO, WARNING, ERROR, SUCCESS)
        """
        if _rank(level) < threshold:
            return
        timestamp = datetime.now().strftime("%Y-%m-%d %H:%M:%S")
        log_line = f"[{timestamp}] [{level}] {message}"

        print(log_line, file=stream or sys.stderr)

        if log_path:
            try:
                with open(log_path, "a", encoding="utf-8") as f:
                    f.write(log_line + "\n")
            except OSError as e:
                print(f"❌ 写入日志失败: {e}", file=stream or sys.stderr)

    return logger


def _rank(level: str) -> int:
    level = level.upper()
    if level == "SUCCESS":
        level = "INFO"
    return LEVELS.index(level) if level in LEVELS else LEVELS.index("INFO")


def cleanup_old_logs(log_dir: str, hours: int = 24):
    """
    清理超过指定时间的旧日志文件

    Args:
        log_dir: 日志文件目录
        hours: 保留时间（小时）
    """
    if not os.path.exists(log_dir):
        return

    cutoff_time = datetime.now() - timedelta(hours=hours)

    for filename in os.listdir(log_dir):
        if not filename.endswith(".log"):
            continue

        filepath = os.path.join(log_dir, filename)
        try:
            file_mtime = datetime.fromtimestamp(os.path.getmtime(filepath))
            if file_mtime < cutoff_time:
                os.remove(filepath)
        except OSError as e:
            print(f"[ERROR] 删除日志文件失败 {filename}: {e}", file=sys.stderr)


def logger_from_config(logging_config: dict, stream: Optional[TextIO] = None) -> Callable:
    """按 [logging] 配置节构造日志记录器"""
    log_dir = logging_config.get("log_dir") if logging_config.get("file_logging") else None
    return get_logger(log_dir, logging_config.get("retention_hours", 24), stream=stream)
