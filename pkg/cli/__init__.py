"""
CLI Module - 命令行层

- main.py: argparse 解析、配置合并、退出码
- commands.py: 各验证命令（BaseCommand 子类）与 RunConfig
- claims.py: 结论登记表
"""

from .claims import CLAIM_ORDER, CLAIMS, claim
from .commands import COMMANDS, RunConfig
from .main import build_parser, exit_code_for, main, run

__all__ = [
    "CLAIMS",
    "CLAIM_ORDER",
    "claim",
    "COMMANDS",
    "RunConfig",
    "build_parser",
    "exit_code_for",
    "main",
    "run",
]
