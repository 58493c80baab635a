"""
Core System Module - 核心系统模块

This module provides the shared infrastructure behind every verification
command: logging, report rendering, the command template and the r sweep.

## Components（组件列表）

### Commands（命令框架）

#### base_command.py - BaseCommand
Template method for verification commands.
Handles config loading, the r size guard, logging and report rendering,
and maps claim outcomes to exit codes.

#### sweep.py - sweep()
Runs a per-r task serially or on a process pool, results in input order.

### Reporting（报告输出）

#### report_writer.py - ReportWriter, ClaimResult
Renders claim rows to TSV or JSON with pandas.
Exact rational text only ("1/5"), deterministic row order.

### Logging（日志系统）

#### logger.py - get_logger(), logger_from_config()
Unified logging to stderr with optional daily log files.
Log retention: 24 hours. Log directory: logs/

## Usage Example

```python
from core import ClaimResult, ReportWriter, get_logger

logger = get_logger()
logger("开始验证", "INFO")

row = ClaimResult.compare("k.dim", "dim K(r)", computed=2, expected=2, r=3)
print(ReportWriter("tsv").render("k-dim", [row]))
```
"""

# 延迟导入，避免加载 pandas
__all__ = [
    "BaseCommand",
    "ClaimResult",
    "ReportWriter",
    "exact_text",
    "get_logger",
    "logger_from_config",
    "sweep",
]


def __getattr__(name):
    """延迟导入，只在需要时加载模块"""
    if name == "BaseCommand":
        from .base_command import BaseCommand

        return BaseCommand
    elif name in ("ClaimResult", "ReportWriter", "exact_text"):
        from . import report_writer

        return getattr(report_writer, name)
    elif name in ("get_logger", "logger_from_config"):
        from . import logger

        return getattr(logger, name)
    elif name == "sweep":
        from .sweep import sweep

        return sweep
    raise AttributeError(f"module {__name__} has no attribute {name}")
