"""
Billera–Rose 矩阵

φ = [∂₂ | diag(ℓ_e^{r+1})] 在 d 次上的矩阵表示。

- 行：每条内部边 e 一个块，块内为 d 次单项式（行号 e·C(d+2,2) + m）
- 列：先是每个三角形的 d 次多项式（列号 t·C(d+2,2) + m），
  再是每条内部边的 d−r−1 次乘子（偏移 f₂·C(d+2,2) + e·C(d−r+1,2)）
- ∂₂ 的符号：三角形第三个顶点位于 u→v 左侧记 +1，右侧记 −1；
  flipped 中的三角形整体取反（用于验证定向无关性）

ker φ_d ≅ C^r(Δ̂)_d，因此 spline_dim = nullity。
"""

from dataclasses import dataclass
from typing import Dict, Iterable, List, Tuple

from exactla import QMatrix, sparse_rank
from polyring import VARIABLES_R, HPoly, basis_size, monomial_basis

from .triangulation import Edge, Triangulation, signed_area2

SparseRow = Dict[int, int]


@dataclass(frozen=True)
class SplineDimension:
    """
    Attributes:
        r, d: 光滑度与次数
        dim: dim C^r(Δ̂)_d = nullity(φ_d)
        rank: rank(φ_d)
        hf_n: HF(N, d) = f₁⁰·C(d+2,2) − rank(φ_d)
        domain: φ_d 的列数
        codomain: φ_d 的行数
    """

    r: int
    d: int
    dim: int
    rank: int
    hf_n: int
    domain: int
    codomain: int

    @property
    def exactness_defect(self) -> int:
        """dim ker − domain + codomain − HF(N,d)，恒为 0"""
        return self.dim - self.domain + self.codomain - self.hf_n


def boundary_sign(triangulation: Triangulation, edge: Edge, triangle: int) -> int:
    """∂₂ 在 (边, 三角形) 处的符号"""
    u, v = edge.u, edge.v
    (w,) = [k for k in triangulation.triangles[triangle] if k not in (u, v)]
    points = triangulation.vertices
    return 1 if signed_area2(points[u], points[v], points[w]) > 0 else -1


def _power_terms(edge_form: HPoly, exponent: int) -> Dict[Tuple[int, ...], int]:
    power = edge_form**exponent
    return {e: int(c) for e, c in power.terms().items()}


def billera_rose_rows(
    triangulation: Triangulation, r: int, d: int, flipped: Iterable[int] = ()
) -> Tuple[List[SparseRow], int]:
    """
    稀疏整数行形式的 φ_d

    Returns:
        (行列表, 列数)
    """
    flipped = set(flipped)
    target = monomial_basis(VARIABLES_R, d)
    nb = len(target)
    multiplier_degree = d - r - 1
    ng = basis_size(3, multiplier_degree) if multiplier_degree >= 0 else 0
    f2 = triangulation.f2
    ncols = f2 * nb + triangulation.f1_interior * ng

    rows: List[SparseRow] = []
    for e, edge in enumerate(triangulation.interior_edges):
        block = [dict() for _ in range(nb)]
        for t in edge.triangles:
            sign = boundary_sign(triangulation, edge, t)
            if t in flipped:
                sign = -sign
            for m in range(nb):
                block[m][t * nb + m] = sign
        if ng:
            power = _power_terms(triangulation.edge_form(edge).form, r + 1)
            offset = f2 * nb + e * ng
            source = monomial_basis(VARIABLES_R, multiplier_degree)
            for k, mono in enumerate(source.monomials):
                for exps, c in power.items():
                    row = target.position(tuple(a + b for a, b in zip(mono, exps)))
                    block[row][offset + k] = c
        rows.extend(block)
    return rows, ncols


def billera_rose_matrix(
    triangulation: Triangulation, r: int, d: int, flipped: Iterable[int] = ()
) -> QMatrix:
    """
    φ_d 的稠密矩阵

    Args:
        triangulation: 三角剖分
        r: 光滑度 r ≥ 0
        d: 次数 d ≥ 0
        flipped: 取反定向的三角形编号

    Returns:
        f₁⁰·C(d+2,2) 行、f₂·C(d+2,2) + f₁⁰·C(d−r+1,2) 列的矩阵
    """
    rows, ncols = billera_rose_rows(triangulation, r, d, flipped)
    dense = []
    for row in rows:
        line = [0] * ncols
        for j, v in row.items():
            line[j] = v
        dense.append(line)
    return QMatrix.from_rows(dense, ncols)


def spline_dim(
    triangulation: Triangulation, r: int, d: int, flipped: Iterable[int] = ()
) -> SplineDimension:
    """
    计算 dim C^r(Δ̂)_d 以及 HF(N, d)

    Args:
        triangulation: 三角剖分
        r: 光滑度
        d: 次数

    Returns:
        SplineDimension
    """
    rows, ncols = billera_rose_rows(triangulation, r, d, flipped)
    rk = sparse_rank(rows, ncols)
    nrows = len(rows)
    return SplineDimension(
        r=r,
        d=d,
        dim=ncols - rk,
        rank=rk,
        hf_n=nrows - rk,
        domain=ncols,
        codomain=nrows,
    )
