"""
理想的分次片

所有计算都在单一次数上做线性代数：乘法映射、理想次数片、交、商（colon）、
极小生成元计数、Hilbert 函数。不使用 Gröbner 基。
"""

from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from exactla import QMatrix, rref_rank_nullspace
from exceptions.algebra import DegreeMismatchError

from .hpoly import HPoly
from .monomials import check_variables, monomial_basis
from .subspace import GradedSubspace


def mult_map(f: HPoly, d: int) -> QMatrix:
    """
    乘法映射 g ↦ f·g 的矩阵（d 次 → d + deg f 次，均用规范基）

    Args:
        f: 非零齐次多项式
        d: 源空间次数
    """
    if f.is_zero():
        raise DegreeMismatchError("mult_map", "f = 0", "f ≠ 0")
    source = monomial_basis(f.variables, d)
    target = monomial_basis(f.variables, d + f.degree)
    terms = f.terms()
    columns = []
    for m in source.monomials:
        column = [Fraction(0)] * len(target)
        for e, c in terms.items():
            column[target.position(tuple(a + b for a, b in zip(m, e)))] = c
        columns.append(column)
    return QMatrix.from_columns(columns, len(target))


def _variables_of(gens: Sequence[HPoly], variables: Optional[Sequence[str]]) -> Tuple[str, ...]:
    if variables is not None:
        variables = check_variables(variables)
    elif gens:
        variables = gens[0].variables
    else:
        raise DegreeMismatchError("ideal_piece", "空生成元", "需要显式变量集")
    for g in gens:
        if g.variables != variables:
            raise DegreeMismatchError("ideal_piece", str(g.variables), str(variables))
    return variables


def ideal_piece(
    gens: Sequence[HPoly], d: int, variables: Optional[Sequence[str]] = None
) -> GradedSubspace:
    """
    理想 ⟨gens⟩ 的 d 次片：所有 mult_map(g, d − deg g) 的列空间

    Args:
        gens: 齐次生成元（零多项式与次数大于 d 的生成元不贡献）
        d: 次数
        variables: 变量集；gens 为空时必须给出
    """
    variables = _variables_of(gens, variables)
    vectors = []
    for g in gens:
        if g.is_zero() or g.degree > d:
            continue
        vectors.extend(mult_map(g, d - g.degree).columns())
    return GradedSubspace.span(vectors, variables, d)


def sum_spaces(first: GradedSubspace, second: GradedSubspace) -> GradedSubspace:
    _check_same_piece(first, second, "sum")
    return GradedSubspace.span(
        first.basis_matrix.columns() + second.basis_matrix.columns(), first.variables, first.degree
    )


def _check_same_piece(first: GradedSubspace, second: GradedSubspace, operation: str):
    if first.degree != second.degree or first.variables != second.variables:
        raise DegreeMismatchError(
            operation,
            f"deg {first.degree} in {first.variables}",
            f"deg {second.degree} in {second.variables}",
        )


def intersect(first: GradedSubspace, second: GradedSubspace) -> GradedSubspace:
    """
    S1 ∩ S2：[B1 | −B2] 的零空间投影到 B1 坐标

    Raises:
        DegreeMismatchError: 次数或变量集不同
    """
    _check_same_piece(first, second, "intersect")
    if first.dim == 0 or second.dim == 0:
        return GradedSubspace.zero(first.variables, first.degree)
    _, kernel = rref_rank_nullspace(first.basis_matrix.hstack(-second.basis_matrix))
    vectors = [first.basis_matrix.apply(col[: first.dim]) for col in kernel.columns()]
    return GradedSubspace.span(vectors, first.variables, first.degree)


def colon_piece(
    gens: Sequence[HPoly], f: HPoly, d: int, variables: Optional[Sequence[str]] = None
) -> GradedSubspace:
    """
    (⟨gens⟩ : f) 的 d 次片：{ g : f·g ∈ ⟨gens⟩_{d + deg f} }

    通过 [mult_map(f, d) | −basis(I_{d+deg f})] 的零空间投影到 g 坐标得到。
    """
    variables = _variables_of(list(gens) + [f], variables)
    multiply = mult_map(f, d)
    target = ideal_piece(gens, d + f.degree, variables)
    width = multiply.cols
    if target.dim == 0:
        return GradedSubspace.zero(variables, d)
    _, kernel = rref_rank_nullspace(multiply.hstack(-target.basis_matrix))
    return GradedSubspace.span([col[:width] for col in kernel.columns()], variables, d)


def linear_multiples(space: GradedSubspace) -> GradedSubspace:
    """R₁·S：所有变量乘以 S 的基，落在 degree + 1 次"""
    vectors = []
    for v in space.variables:
        x = HPoly.variable(v, space.variables)
        for p in space.basis_polys():
            vectors.append((x * p).coeffs)
    return GradedSubspace.span(vectors, space.variables, space.degree + 1)


def generators_in_degree(piece: GradedSubspace, lower: Optional[GradedSubspace]) -> int:
    """
    d 次极小生成元个数 = dim I_d − dim(R₁·I_{d−1})

    Args:
        piece: I_d
        lower: I_{d−1}（d = 0 时传 None）
    """
    if lower is None or lower.dim == 0:
        return piece.dim
    return piece.dim - linear_multiples(lower).dim


def min_gens_count(gens: Sequence[HPoly], d: int, variables: Optional[Sequence[str]] = None) -> int:
    """理想 ⟨gens⟩ 在 d 次的极小生成元个数"""
    variables = _variables_of(gens, variables)
    piece = ideal_piece(gens, d, variables)
    lower = ideal_piece(gens, d - 1, variables) if d >= 1 else None
    return generators_in_degree(piece, lower)


def hilbert_function(gens: Sequence[HPoly], d: int, variables: Optional[Sequence[str]] = None) -> int:
    """HF(S/⟨gens⟩, d) = dim S_d − dim ⟨gens⟩_d"""
    return ideal_piece(gens, d, variables).codim


def minimal_generators(
    piece_of_degree, max_degree: int, variables: Sequence[str]
) -> List[Tuple[int, HPoly]]:
    """
    逐次提取极小生成元

    Args:
        piece_of_degree: d ↦ I_d 的函数
        max_degree: 搜索的最高次数
        variables: 变量集

    Returns:
        [(次数, 生成元)]，每个次数内按规范基顺序贪心选取，不属于
        R₁·I_{d−1} + 已选生成元张成空间的元素才被选中
    """
    generators: List[Tuple[int, HPoly]] = []
    lower = None
    for d in range(max_degree + 1):
        piece = piece_of_degree(d)
        covered = linear_multiples(lower) if lower is not None else GradedSubspace.zero(variables, d)
        for candidate in piece.basis_polys():
            if covered.contains(candidate):
                continue
            generators.append((d, candidate))
            covered = sum_spaces(covered, GradedSubspace.from_polys([candidate], variables, d))
        lower = piece
    return generators
