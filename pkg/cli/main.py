"""
命令行入口

splinecheck [--format tsv|json] [--seed N] [--force] [--workers N] [--config FILE]
            <group> <command> ...

退出码：0 全部通过，1 验证未通过，2 输入/解析/几何错误，3 规模保护拒绝，
4 内部一致性错误。报告写入 stdout，日志写入 stderr。
"""

import argparse
import sys
from typing import Callable, List, Optional, TextIO

from config.config_loader import load_config
from config.constants import (
    DELTA_S_ALIAS,
    EXIT_INPUT_ERROR,
    EXIT_INTERNAL_ERROR,
    EXIT_SIZE_GUARD,
    EXIT_VERIFICATION_FAILED,
    REPORT_FORMATS,
)
from core.logger import logger_from_config
from core.report_writer import ReportWriter
from exceptions.algebra import InconsistentSystemError
from exceptions.base import (
    AlgebraException,
    ConfigurationException,
    GeometryException,
    InputException,
    SplineVerifyException,
)
from exceptions.verification import (
    InternalConsistencyError,
    NotInKSpaceError,
    SizeGuardError,
    VerificationFailedError,
)
from interfaces.interfaces import IConfigLoader, ILogger

from .claims import CLAIM_ORDER
from .commands import COMMANDS, RunConfig


def positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"必须 ≥ 1，得到 {value}")
    return value


def non_negative_int(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"必须 ≥ 0，得到 {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="splinecheck", description="样条维数与 K(r) 相关结论的精确验证"
    )
    parser.add_argument("--format", choices=REPORT_FORMATS, help="报告格式（默认取配置 [run] format）")
    parser.add_argument("--seed", type=int, help="随机检验种子（默认取配置 [run] seed）")
    parser.add_argument("--force", action="store_true", help="跳过 r 的规模保护")
    parser.add_argument("--workers", type=positive_int, help="按 r 并行的进程数")
    parser.add_argument("--config", help="配置文件路径（默认 config/config.ini）")
    groups = parser.add_subparsers(dest="group", required=True)

    # ========== spline ==========
    spline = groups.add_parser("spline", help="样条空间维数").add_subparsers(
        dest="command", required=True
    )
    dim = spline.add_parser("dim", help="单个 (r, d) 的维数")
    dim.add_argument("--tri", required=True, help=f"三角剖分文件或 {DELTA_S_ALIAS}")
    dim.add_argument("--r", type=non_negative_int, required=True)
    dim.add_argument("--d", type=non_negative_int, required=True)
    check = spline.add_parser("check", help="d ∈ {2r, 2r+1, 3r+1} 上与维数公式比较")
    check.add_argument("--tri", required=True, help=f"三角剖分文件或 {DELTA_S_ALIAS}")
    check.add_argument("--r-max", type=positive_int, required=True)

    # ========== deltastar ==========
    deltastar = groups.add_parser("deltastar", help="Δ_S 与 K(r)").add_subparsers(
        dest="command", required=True
    )
    deltastar.add_parser("k-dim", help="dim K(r)").add_argument(
        "--r", type=positive_int, required=True
    )
    deltastar.add_parser("epsilon", help="原坐标下的 ε(r)").add_argument(
        "--r", type=positive_int, required=True
    )
    deltastar.add_parser("verify", help="K(r) 相关结论全集").add_argument(
        "--r-max", type=positive_int, required=True
    )
    deltastar.add_parser("tri", help="内置 Δ_S 文档").add_argument(
        "--emit", action="store_true", help="输出 YAML 文档"
    )

    # ========== structmat ==========
    structmat = groups.add_parser("structmat", help="结构矩阵").add_subparsers(
        dest="command", required=True
    )
    structmat.add_parser("kdim", help="M(k) 核维数与 𝒰 的性质").add_argument(
        "--r", type=positive_int, required=True
    )
    schur = structmat.add_parser("schur", help="Schur 模维数")
    schur.add_argument("--lambda", dest="partition", required=True, help="分拆，如 2,1")
    schur.add_argument("--t", type=positive_int, required=True)
    roth = structmat.add_parser("roth", help="三角形 Roth 方程求解")
    roth.add_argument("--w", dest="w_path", required=True, help="W 的矩阵文本文件")
    roth.add_argument("--c", dest="c_path", required=True, help="C 的矩阵文本文件")
    roth.add_argument("--mode", choices=("upper", "lower"), default="upper")
    positivity = structmat.add_parser("positivity", help="全正性")
    positivity.add_argument("--r", type=positive_int, required=True)
    positivity.add_argument("--max-order", type=positive_int, required=True)
    lu_search = structmat.add_parser("lu-search", help="LU 问题随机搜索")
    lu_search.add_argument("--trials", type=positive_int)
    lu_search.add_argument("--size", type=positive_int, required=True)
    lu_search.add_argument("--enable-lu-search", action="store_true")

    # ========== verify ==========
    groups.add_parser("verify", help="在内置 Δ_S 上运行全部检查").add_argument(
        "--r-max", type=positive_int, required=True
    )
    return parser


def to_run_config(args: argparse.Namespace, config_loader: IConfigLoader) -> RunConfig:
    """命令行参数与 [run] 配置合并为 RunConfig（命令行优先）"""
    run = config_loader.get_config("run")
    command = args.group if args.group == "verify" else f"{args.group} {args.command}"
    return RunConfig(
        command=command,
        format=args.format or run["format"],
        seed=run["seed"] if args.seed is None else args.seed,
        force=args.force,
        workers=args.workers or run["workers"],
        r=getattr(args, "r", None),
        r_max=getattr(args, "r_max", None),
        d=getattr(args, "d", None),
        tri=getattr(args, "tri", None),
        partition=getattr(args, "partition", None),
        t=getattr(args, "t", None),
        w_path=getattr(args, "w_path", None),
        c_path=getattr(args, "c_path", None),
        mode=getattr(args, "mode", "upper"),
        max_order=getattr(args, "max_order", None),
        trials=getattr(args, "trials", None),
        size=getattr(args, "size", None),
        enable_lu_search=getattr(args, "enable_lu_search", False),
        emit=getattr(args, "emit", False),
    )


def exit_code_for(error: BaseException) -> int:
    """异常 → 退出码"""
    if isinstance(error, SizeGuardError):
        return EXIT_SIZE_GUARD
    if isinstance(error, (InternalConsistencyError, InconsistentSystemError, NotInKSpaceError)):
        return EXIT_INTERNAL_ERROR
    if isinstance(error, VerificationFailedError):
        return EXIT_VERIFICATION_FAILED
    if isinstance(
        error,
        (
            InputException,
            GeometryException,
            AlgebraException,
            ConfigurationException,
            OSError,
            ValueError,
        ),
    ):
        return EXIT_INPUT_ERROR
    return EXIT_INTERNAL_ERROR


def run(
    config: RunConfig,
    config_loader: IConfigLoader,
    logger: ILogger,
    stdout: Optional[TextIO] = None,
) -> int:
    """
    执行一条命令并把报告写入 stdout

    Returns:
        int: 退出码
    """
    command_class = COMMANDS[config.command]
    writer = ReportWriter(config.format, CLAIM_ORDER)
    try:
        command = command_class(config, config_loader=config_loader, logger=logger, writer=writer)
        code, report = command.run()
    except (SplineVerifyException, OSError, ValueError) as e:
        code = exit_code_for(e)
        logger(f"{config.command} 失败 (退出码 {code}): {e}", "ERROR")
        return code
    (stdout or sys.stdout).write(report)
    return code


def main(
    argv: Optional[List[str]] = None,
    config_loader: Optional[IConfigLoader] = None,
    logger: Optional[Callable] = None,
    stdout: Optional[TextIO] = None,
) -> int:
    """
    命令行主函数（支持依赖注入，便于测试）

    Returns:
        int: 退出码
    """
    args = build_parser().parse_args(argv)
    try:
        loader = config_loader or load_config(args.config)
        log = logger or logger_from_config(loader.get_config("logging"))
        config = to_run_config(args, loader)
    except ConfigurationException as e:
        print(f"配置错误: {e}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    return run(config, loader, log, stdout)


if __name__ == "__main__":
    sys.exit(main())
