"""
Configuration Module - 配置管理模块

Unified configuration for the spline verification CLI and library.

## Components（组件列表）

### config_loader.py
ConfigLoader class reading config/config.ini.
- Environment variable priority (SPLINE_VERIFY_* > config.ini > default)
- .env at the project root loaded first
- Type conversion and validation (ConfigurationException on bad values)

### constants.py
Code-level constants: report schema version, claim column order, default
seed, random entry range, size guard, shipped data documents, exit codes.

### config.ini
Sections: run, guards, logging, search

## Usage

```python
from config import load_config

config = load_config()
seed = config.get_run_config()["seed"]
max_r = config.get_guards_config()["max_r"]
```
"""

from .config_loader import ConfigLoader, load_config

__all__ = ["ConfigLoader", "load_config"]
