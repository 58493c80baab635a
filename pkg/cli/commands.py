"""
验证命令

每个命令继承 BaseCommand，collect() 返回结论行；按 r 扫描的部分交给 core.sweep，
各任务函数定义在模块级以便多进程调用。
"""

import random
from dataclasses import dataclass
from pathlib import Path
from typing import List, Optional, Tuple

from config.constants import DELTA_S_ALIAS, RANDOM_ENTRY_RANGE, ROTH_RANDOM_CASES
from core.base_command import BaseCommand
from core.report_writer import ClaimResult
from core.sweep import sweep
from deltastar import (
    cf_generators,
    decomposition_value,
    delta_s,
    derivative_image_dim,
    epsilon,
    epsilon_transport,
    expected_generator_degrees,
    expected_k_dim,
    k_space,
    verify_colon_exclusions,
    verify_complete_intersection,
    verify_derivative_map,
    verify_hilbert_identity,
    verify_lower_bound,
    verify_min_degree,
    verify_slicing,
    verify_support_bound,
    verify_symmetry,
)
from exactla import QMatrix, det_ff, exchange_matrix
from splinecore import (
    Triangulation,
    dim_report,
    dump_triangulation,
    load_triangulation_file,
    report_degrees,
    sigma_closed_form,
    spline_dim,
)
from structmat import (
    block_spec,
    check_partition,
    expected_kernel_dim_total,
    hook_dimension_formula,
    jd_is_symmetric,
    jn_is_symmetric,
    jut_has_lu,
    kernel_dim_total,
    lower_solution_holds,
    lu_question_search,
    n_block,
    n_block_minors,
    north_east_minors,
    param_extract,
    parse_partition,
    random_matrix,
    roth_lower_solve,
    roth_residual,
    roth_solvable,
    roth_triangular_solve,
    schur_dim_det,
    schur_dim_weyl,
    triangular_roth_operator_rank,
    u_is_symmetric,
    u_matrix,
    window_minors,
)

from .claims import claim, informational

# d = 2r 处 dim ≠ L 的锐性只对 r ≤ 3 断言
SHARPNESS_R_MAX = 3


@dataclass
class RunConfig:
    """
    解析后的命令行选项

    Attributes:
        command: "组 命令"，如 "deltastar k-dim"
        r, r_max, d: 整数参数（不适用时为 None）
        tri: 三角剖分文件路径或 "deltaS"
        format: "tsv" 或 "json"
        seed: 随机种子
        force: 跳过规模保护
        workers: 并行进程数
    """

    command: str
    format: str = "tsv"
    seed: int = 0
    force: bool = False
    workers: int = 1
    r: Optional[int] = None
    r_max: Optional[int] = None
    d: Optional[int] = None
    tri: Optional[str] = None
    partition: Optional[str] = None
    t: Optional[int] = None
    w_path: Optional[str] = None
    c_path: Optional[str] = None
    mode: str = "upper"
    max_order: Optional[int] = None
    trials: Optional[int] = None
    size: Optional[int] = None
    enable_lu_search: bool = False
    emit: bool = False


def resolve_triangulation(source: str) -> Tuple[Triangulation, bool]:
    """
    --tri 参数 → (三角剖分, 是否为 Δ_S)

    Raises:
        OSError / TriangulationParseError / GeometryException: 文件无法读取或不合法
    """
    if source == DELTA_S_ALIAS:
        return delta_s().triangulation, True
    return load_triangulation_file(source), False


# ========== 按 r 的任务（模块级，可 pickle） ==========


def spline_rows(task: Tuple[Triangulation, int, bool]) -> List[ClaimResult]:
    """单个 r 的样条维数结论：d ∈ {2r, 2r+1, 3r+1}"""
    triangulation, r, is_delta_s = task
    eps = epsilon(r) if is_delta_s else None
    rows = []
    sigma = None
    for d in report_degrees(r):
        decomposition = decomposition_value(r, d, eps) if is_delta_s and d == 2 * r + 1 else None
        report = dim_report(triangulation, r, d, decomposition)
        sigma = report.sigma
        rows.append(informational("spline.dim", report.dim_spline, r, d))
        if d >= 3 * r + 1:
            rows.append(claim("spline.alfeld_schumaker", report.dim_spline, report.L_value, r, d))
        elif d == 2 * r + 1:
            rows.append(claim("spline.conjecture", report.dim_spline, report.L_value, r, d))
        elif is_delta_s and r <= SHARPNESS_R_MAX:
            rows.append(
                claim(
                    "spline.sharpness",
                    report.dim_spline,
                    f"!={report.L_value}",
                    r,
                    d,
                    passed=not report.equal,
                )
            )
        if decomposition is not None:
            rows.append(claim("spline.decomposition", report.dim_spline, decomposition, r, d))
    if is_delta_s:
        rows.append(claim("spline.sigma", sigma, sigma_closed_form(r), r))
    return rows


def k_space_rows(r: int) -> List[ClaimResult]:
    """单个 r 的 K(r) 结论"""
    k = k_space(r)
    rows = [
        claim("k.dim", k.dim, expected_k_dim(r), r),
        claim("k.lower_bound", verify_lower_bound(r), True, r),
        claim("k.epsilon", epsilon(r), k.dim, r),
        claim("k.transport", epsilon_transport(r), True, r),
        claim("k.slicing", all(verify_slicing(f, r) for f in k.polys()), True, r),
        claim("k.symmetry", verify_symmetry(r), True, r),
        claim("k.generator_degrees", cf_generators(r).degrees, expected_generator_degrees(r), r),
        claim("k.complete_intersection", verify_complete_intersection(r), True, r),
        claim("k.hilbert_identity", verify_hilbert_identity(r), True, r),
        claim("k.colon_exclusions", verify_colon_exclusions(r), True, r),
        claim("k.support_bound", verify_support_bound(r), True, r),
    ]
    if r >= 2:
        rows.append(claim("k.derivative", verify_derivative_map(r), True, r))
        image_dim = derivative_image_dim(r)
        bound = k_space(r - 1).dim
        rows.append(
            claim("k.derivative_image", image_dim, f"<={bound}", r, passed=image_dim <= bound)
        )
        rows.append(claim("k.min_degree", verify_min_degree(r), True, r))
    return rows


def _random_roth_cases(r: int, seed: int) -> bool:
    """以 (seed, r) 为种子的随机 C，分别求上三角解与下三角解"""
    rng = random.Random(seed * 1000 + r)
    low, high = RANDOM_ENTRY_RANGE
    u = u_matrix(r)
    j = exchange_matrix(u.rows)
    w = j @ u @ j
    for _ in range(ROTH_RANDOM_CASES):
        c = random_matrix(rng, u.rows, u.rows, low, high)
        x, y = roth_triangular_solve(w, c)
        if not (x.is_upper_triangular() and y.is_upper_triangular()):
            return False
        if not lower_solution_holds(r, c):
            return False
    return True


def structmat_rows(task: Tuple[int, int]) -> List[ClaimResult]:
    """单个 r 的结构矩阵结论"""
    r, seed = task
    spec = block_spec(r)
    operator = triangular_roth_operator_rank(r)
    rectangle = (spec.p,) * spec.n
    return [
        claim("structmat.kernel_dim_total", kernel_dim_total(r), expected_kernel_dim_total(r), r),
        claim("structmat.u_symmetric", u_is_symmetric(r), True, r),
        claim("structmat.jut_lu", jut_has_lu(r), True, r),
        claim(
            "structmat.roth_operator",
            operator.surjective,
            k_space(r).dim == spec.p,
            r,
        ),
        claim(
            "structmat.params",
            all(param_extract(f).all_relations_hold() for f in k_space(r).polys()),
            True,
            r,
        ),
        claim("structmat.roth_random", _random_roth_cases(r, seed), True, r),
        claim(
            "structmat.n_block_schur",
            det_ff(n_block(r)),
            schur_dim_weyl(rectangle, r + 1),
            r,
        ),
    ]


def positivity_rows(r: int, max_order: int) -> List[ClaimResult]:
    """𝒩 与 Toeplitz 窗口的正性（计数非正子式）"""

    def non_positive(values) -> int:
        return sum(1 for v in values if v <= 0)

    return [
        claim("positivity.n_block", non_positive(n_block_minors(r, max_order)), 0, r),
        claim("positivity.north_east", non_positive(north_east_minors(r)), 0, r),
        claim(
            "positivity.windows",
            non_positive(v for _, _, v in window_minors(r, max_order)),
            0,
            r,
        ),
        claim("positivity.jn_symmetric", jn_is_symmetric(r), True, r),
        claim("positivity.jd_symmetric", jd_is_symmetric(r), True, r),
    ]


# ========== 命令 ==========


class SplineDimCommand(BaseCommand):
    """spline dim --tri FILE|deltaS --r R --d D"""

    name = "spline dim"

    def collect(self) -> List[ClaimResult]:
        r, d = self.options.r, self.options.d
        self.guard(r)
        triangulation, _ = resolve_triangulation(self.options.tri)
        result = spline_dim(triangulation, r, d)
        self.log(f"dim C^{r}_{d} = {result.dim} (rank {result.rank}, HF(N,d) = {result.hf_n})")
        rows = [
            informational("spline.dim", result.dim, r, d),
            claim("spline.exactness", result.exactness_defect, 0, r, d),
        ]
        if d >= 3 * r + 1:
            report = dim_report(triangulation, r, d)
            rows.append(claim("spline.alfeld_schumaker", result.dim, report.L_value, r, d))
        return rows


class SplineCheckCommand(BaseCommand):
    """spline check --tri FILE|deltaS --r-max N"""

    name = "spline check"

    def collect(self) -> List[ClaimResult]:
        r_max = self.options.r_max
        self.guard(r_max)
        triangulation, is_delta_s = resolve_triangulation(self.options.tri)
        tasks = [(triangulation, r, is_delta_s) for r in range(1, r_max + 1)]
        results = sweep(spline_rows, tasks, self.options.workers, self.log)
        return [row for rows in results for row in rows]


class KDimCommand(BaseCommand):
    """deltastar k-dim --r N"""

    name = "deltastar k-dim"

    def collect(self) -> List[ClaimResult]:
        r = self.options.r
        self.guard(r)
        k = k_space(r)
        self.log(f"K({r}) 维数 {k.dim}，基: {', '.join(str(f) for f in k.polys())}", "DEBUG")
        return [
            claim("k.dim", k.dim, expected_k_dim(r), r),
            claim("k.generator_degrees", cf_generators(r).degrees, expected_generator_degrees(r), r),
        ]


class EpsilonCommand(BaseCommand):
    """deltastar epsilon --r N"""

    name = "deltastar epsilon"

    def collect(self) -> List[ClaimResult]:
        r = self.options.r
        self.guard(r)
        return [
            claim("k.epsilon", epsilon(r), k_space(r).dim, r),
            claim("k.transport", epsilon_transport(r), True, r),
        ]


class DeltaStarVerifyCommand(BaseCommand):
    """deltastar verify --r-max N"""

    name = "deltastar verify"

    def collect(self) -> List[ClaimResult]:
        r_max = self.options.r_max
        self.guard(r_max)
        results = sweep(k_space_rows, range(1, r_max + 1), self.options.workers, self.log)
        return [row for rows in results for row in rows]


class DeltaStarTriCommand(BaseCommand):
    """deltastar tri --emit：输出内置 Δ_S 文档"""

    name = "deltastar tri"

    def collect(self) -> List[ClaimResult]:
        return []

    def run(self) -> Tuple[int, str]:
        document = dump_triangulation(delta_s().triangulation)
        return 0, document if self.options.emit else ""


class StructKDimCommand(BaseCommand):
    """structmat kdim --r N"""

    name = "structmat kdim"

    def collect(self) -> List[ClaimResult]:
        r = self.options.r
        self.guard(r)
        return structmat_rows((r, self.options.seed))


class SchurCommand(BaseCommand):
    """structmat schur --lambda 2,1 --t 3"""

    name = "structmat schur"

    def collect(self) -> List[ClaimResult]:
        t = self.options.t
        partition = check_partition(parse_partition(self.options.partition), t)
        by_det = schur_dim_det(partition, t)
        rows = [claim("schur.det_vs_weyl", by_det, schur_dim_weyl(partition, t))]
        if partition == (2, 1):
            rows.append(claim("schur.hook", by_det, hook_dimension_formula(t)))
        return rows


class RothCommand(BaseCommand):
    """structmat roth --w FILE --c FILE --mode upper|lower"""

    name = "structmat roth"

    @staticmethod
    def _read(path: str) -> QMatrix:
        return QMatrix.from_text(Path(path).read_text(encoding="utf-8").strip())

    def collect(self) -> List[ClaimResult]:
        w, c = self._read(self.options.w_path), self._read(self.options.c_path)
        if self.options.mode == "lower":
            x, y = roth_lower_solve(w, c)
            residual = w @ x - y.T @ w - c
            shaped = x.is_lower_triangular() and y.is_lower_triangular()
            solvable = roth_solvable(w, w, c)
        else:
            x, y = roth_triangular_solve(w, c)
            residual = roth_residual(w, x, y, c)
            shaped = x.is_upper_triangular() and y.is_upper_triangular()
            solvable = roth_solvable(w, w.T, c)
        return [
            claim("roth.solvable", solvable, True),
            claim("roth.residual", residual.is_zero(), True),
            claim("roth.triangular", shaped, True),
            informational("roth.x", x.to_text()),
            informational("roth.y", y.to_text()),
        ]


class PositivityCommand(BaseCommand):
    """structmat positivity --r N --max-order K"""

    name = "structmat positivity"

    def collect(self) -> List[ClaimResult]:
        r = self.options.r
        self.guard(r)
        max_order = self.options.max_order
        if max_order is None or max_order < 1:
            raise ValueError(f"--max-order 必须 ≥ 1，得到 {max_order}")
        return positivity_rows(r, max_order)


class LUSearchCommand(BaseCommand):
    """structmat lu-search --trials N --size P [--enable-lu-search]"""

    name = "structmat lu-search"

    def collect(self) -> List[ClaimResult]:
        search = self.config["search"]
        enabled = self.options.enable_lu_search or search["lu_question_search"]
        trials = self.options.trials or search["lu_question_trials"]
        result = lu_question_search(trials, self.options.size, self.options.seed, enabled, self.log)
        self.log(
            f"LU 问题搜索: {trials} 次尝试，检验 {result.tested} 个，"
            f"发现 {len(result.surjective_without_lu)} 个满射而无 LU 分解的 W"
        )
        rows = [
            informational("lu_search.tested", result.tested),
            informational("lu_search.surjective_without_lu", len(result.surjective_without_lu)),
        ]
        return rows


class VerifyCommand(BaseCommand):
    """verify --r-max N：在内置 Δ_S 上运行全部检查"""

    name = "verify"

    def collect(self) -> List[ClaimResult]:
        r_max = self.options.r_max
        self.guard(r_max)
        workers, seed = self.options.workers, self.options.seed
        triangulation = delta_s().triangulation
        r_values = range(1, r_max + 1)

        rows: List[ClaimResult] = []
        for results in (
            sweep(spline_rows, [(triangulation, r, True) for r in r_values], workers, self.log),
            sweep(k_space_rows, r_values, workers, self.log),
            sweep(structmat_rows, [(r, seed) for r in r_values], workers, self.log),
        ):
            for batch in results:
                rows.extend(batch)
        for r in r_values:
            rows.extend(positivity_rows(r, block_spec(r).n))
        self.log(f"verify: r = 1..{r_max}，共 {len(rows)} 条结论")
        return rows


COMMANDS = {
    "spline dim": SplineDimCommand,
    "spline check": SplineCheckCommand,
    "deltastar k-dim": KDimCommand,
    "deltastar epsilon": EpsilonCommand,
    "deltastar verify": DeltaStarVerifyCommand,
    "deltastar tri": DeltaStarTriCommand,
    "structmat kdim": StructKDimCommand,
    "structmat schur": SchurCommand,
    "structmat roth": RothCommand,
    "structmat positivity": PositivityCommand,
    "structmat lu-search": LUSearchCommand,
    "verify": VerifyCommand,
}
