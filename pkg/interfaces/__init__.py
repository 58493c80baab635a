"""
Interfaces Module - 接口层定义

Interface contracts for the verification CLI. Commands receive their logger,
configuration and report writer through the constructor, so tests can inject
doubles without touching config files or stdout.

### ILogger
Callable logger: logger(message, level).

### IConfigLoader
get_all_config() and get_config(section) over the run / guards / logging /
search sections.

### IReportWriter
render(command, rows) -> report text (TSV or JSON).

Usage:
```python
from interfaces import ILogger

class MyCommand:
    def __init__(self, logger: ILogger | None = None):
        self.logger = logger or get_logger()
```
"""

from .interfaces import IConfigLoader, ILogger, IReportWriter

__all__ = ["ILogger", "IConfigLoader", "IReportWriter"]
