"""
维数公式与对比报告

Alfeld–Schumaker 下界 L(Δ,r,d)、σ 项及其闭式，以及把 Billera–Rose 计算结果
与公式值放在一起的 DimReport。
"""

from dataclasses import dataclass
from math import comb
from typing import Callable, List, Optional

from exceptions.verification import InternalConsistencyError

from .billera_rose import spline_dim
from .triangulation import Triangulation, slope_count


def binom2(m: int) -> int:
    """C(m, 2)，m < 2 时为 0"""
    return comb(m, 2) if m >= 2 else 0


def sigma_term(r: int, slopes: int) -> int:
    """
    单个内部顶点的 σᵢ = Σ_{j≥1} max(r + 1 + j(1 − n), 0)

    Raises:
        InternalConsistencyError: n < 2（求和不终止）
    """
    if slopes < 2:
        raise InternalConsistencyError("sigma_term", r=r, detail=f"斜率数 n={slopes} < 2")
    total = 0
    j = 1
    while True:
        term = r + 1 + j * (1 - slopes)
        if term <= 0:
            return total
        total += term
        j += 1


def alfeld_schumaker(triangulation: Triangulation, r: int, d: int) -> tuple:
    """
    L(Δ, r, d) = C(d+2,2) + C(d−r+1,2)·f₁⁰ − (C(d+2,2) − C(r+2,2))·f₀⁰ + σ

    Returns:
        (L, σ)
    """
    sigma = sum(sigma_term(r, slope_count(triangulation, v)) for v in triangulation.interior_vertices)
    value = (
        binom2(d + 2)
        + binom2(d - r + 1) * triangulation.f1_interior
        - (binom2(d + 2) - binom2(r + 2)) * triangulation.f0_interior
        + sigma
    )
    return value, sigma


def sigma_closed_form(r: int) -> int:
    """两个三斜率内部顶点的 σ 闭式 2rα − 2α²，α = ⌊(r+1)/2⌋"""
    alpha = (r + 1) // 2
    return 2 * r * alpha - 2 * alpha * alpha


@dataclass(frozen=True)
class DimReport:
    """
    单个 (r, d) 的维数对比

    Attributes:
        dim_spline: Billera–Rose 零度
        L_value: Alfeld–Schumaker 公式值
        sigma: σ 项
        hf_N: HF(N, d)
        equal: dim_spline == L_value
        hf_h0: dim_spline − L_value（局部上同调项，只记录不断言符号）
        decomposition: 可选的分解式取值（Δ_S 在 d = 2r+1 时提供）
    """

    r: int
    d: int
    dim_spline: int
    L_value: int  # noqa: N815
    sigma: int
    hf_N: int  # noqa: N815
    equal: bool
    hf_h0: int
    decomposition: Optional[int] = None


def dim_report(
    triangulation: Triangulation, r: int, d: int, decomposition: Optional[int] = None
) -> DimReport:
    """计算单个 (r, d) 的 DimReport"""
    computed = spline_dim(triangulation, r, d)
    if computed.exactness_defect != 0:
        raise InternalConsistencyError(
            "exactness", r=r, detail=f"d={d}, defect={computed.exactness_defect}"
        )
    value, sigma = alfeld_schumaker(triangulation, r, d)
    return DimReport(
        r=r,
        d=d,
        dim_spline=computed.dim,
        L_value=value,
        sigma=sigma,
        hf_N=computed.hf_n,
        equal=computed.dim == value,
        hf_h0=computed.dim - value,
        decomposition=decomposition,
    )


def report_degrees(r: int) -> List[int]:
    """每个 r 抽样的次数：2r, 2r+1, 3r+1（去重、升序）"""
    return sorted({2 * r, 2 * r + 1, 3 * r + 1})


def conjecture_report(
    triangulation: Triangulation,
    r_max: int,
    decomposition: Optional[Callable[[int, int], Optional[int]]] = None,
) -> List[DimReport]:
    """
    对 r = 1..r_max 与 d ∈ {2r, 2r+1, 3r+1} 逐一给出 DimReport

    Args:
        triangulation: 三角剖分
        r_max: 最大光滑度（≥ 1）
        decomposition: 可选 (r, d) ↦ 分解式取值
    """
    if r_max < 1:
        raise ValueError(f"r_max 必须 ≥ 1，得到 {r_max}")
    reports = []
    for r in range(1, r_max + 1):
        for d in report_degrees(r):
            extra = decomposition(r, d) if decomposition else None
            reports.append(dim_report(triangulation, r, d, extra))
    return reports
