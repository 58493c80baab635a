"""
K(r) 相关结论的可执行验证

每个验证器对给定的 r 做精确计算并返回布尔结果；前置条件不满足时抛异常。
"""

from math import comb
from typing import Dict, List

from exactla import QMatrix, nullity
from exceptions.verification import NotInKSpaceError
from polyring import (
    VARIABLES_A,
    VARIABLES_B,
    VARIABLES_R,
    GradedSubspace,
    HPoly,
    generators_in_degree,
    hilbert_function,
    ideal_piece,
    intersect,
    partial_derivative,
    swap_variables,
)

from .kspace import (
    cf_generators,
    cf_generators_b,
    colon_first,
    colon_second,
    expected_k_dim,
    half_index,
    intersection_colon_piece,
    k_space,
)


def _require(condition: bool, name: str, r: int, minimum: int):
    if not condition:
        raise ValueError(f"{name} 要求 r ≥ {minimum}，得到 r={r}")


def verify_slicing(F: HPoly, r: int) -> bool:  # noqa: N803
    """
    按 z 与 x 的幂次切片：F = Σ z^{r−i} f_i = Σ x^{r−i} g_i

    f_i ∈ ⟨C1,F1⟩A_i，g_i ∈ ⟨C2,F2⟩B_i，且 f_0..f_{n−1}、g_0..g_{n−1} 全为 0。

    Raises:
        NotInKSpaceError: F 不属于 K(r)
    """
    if F.degree != r or F.variables != VARIABLES_R or not k_space(r).contains(F):
        raise NotInKSpaceError(r, str(F))
    n = half_index(r)
    first, second = cf_generators(r), cf_generators_b(r)
    for i in range(r + 1):
        f_i = F.coefficient_of_power("z", r - i)
        g_i = F.coefficient_of_power("x", r - i)
        if i < n and not (f_i.is_zero() and g_i.is_zero()):
            return False
        if not ideal_piece([first.C, first.F], i, VARIABLES_A).contains(f_i):
            return False
        if not ideal_piece([second.C, second.F], i, VARIABLES_B).contains(g_i):
            return False
    return True


def swap_matrix(basis: GradedSubspace, sign: int) -> QMatrix:
    """列为 swap(F) − sign·F 的矩阵（F 取遍 basis 的规范基）"""
    columns = [
        (swap_variables(f, "x", "z") - f.scale(sign)).coeffs for f in basis.basis_polys()
    ]
    return QMatrix.from_columns(columns, len(basis.ambient))


def symmetric_part_dim(basis: GradedSubspace) -> int:
    """{F ∈ S : F(x,y,z) = F(z,y,x)} 的维数"""
    if basis.dim == 0:
        return 0
    return nullity(swap_matrix(basis, 1))


def antisymmetric_part_dim(basis: GradedSubspace) -> int:
    """{F ∈ S : F(x,y,z) = −F(z,y,x)} 的维数"""
    if basis.dim == 0:
        return 0
    return nullity(swap_matrix(basis, -1))


def symmetric_space(r: int) -> GradedSubspace:
    """Sym_r：R_r 中关于 x↔z 对称的多项式"""
    vectors = []
    for f in GradedSubspace.full(VARIABLES_R, r).basis_polys():
        vectors.append((f + swap_variables(f, "x", "z")).coeffs)
    return GradedSubspace.span(vectors, VARIABLES_R, r)


def verify_symmetry(r: int) -> bool:
    """
    x↔z 对称性：K(r) = W := colon_first ∩ Sym_r，且 K(r) 的反对称部分为 0
    """
    _require(r >= 1, "verify_symmetry", r, 1)
    k = k_space(r)
    w = intersect(colon_first(r, r), symmetric_space(r))
    return (
        w == k.basis
        and symmetric_part_dim(k.basis) == k.dim
        and antisymmetric_part_dim(k.basis) == 0
    )


def derivative_image(r: int) -> List[HPoly]:
    """y·∂x∂z F，F 取遍 K(r) 的规范基"""
    y = HPoly.variable("y", VARIABLES_R)
    return [
        y * partial_derivative(partial_derivative(f, "x"), "z") for f in k_space(r).polys()
    ]


def verify_derivative_map(r: int) -> bool:
    """F ∈ K(r) ⇒ y·F_xz ∈ K(r−1)"""
    _require(r >= 2, "verify_derivative_map", r, 2)
    target = k_space(r - 1)
    return all(target.contains(g) for g in derivative_image(r))


def derivative_image_dim(r: int) -> int:
    images = [g for g in derivative_image(r) if not g.is_zero()]
    return GradedSubspace.from_polys(images, VARIABLES_R, r - 1).dim if images else 0


def verify_min_degree(r: int) -> bool:
    """𝓘(r)_{r−1} = 0，且 r 次极小生成元个数 = dim K(r)"""
    _require(r >= 2, "verify_min_degree", r, 2)
    lower = intersection_colon_piece(r, r - 1)
    piece = intersection_colon_piece(r, r)
    return lower.dim == 0 and generators_in_degree(piece, lower) == k_space(r).dim


def koszul_hilbert(d: int, a: int, b: int) -> int:
    """两变量中次数 (a, b) 完全交的商环 Hilbert 函数"""

    def plus(m: int) -> int:
        return max(m, 0)

    return (d + 1) - (plus(d - a + 1) + plus(d - b + 1) - plus(d - a - b + 1))


def verify_complete_intersection(r: int) -> bool:
    """HF(A/⟨C1,F1⟩, d) 对 d = 0..2r+1 与 Koszul 计数一致（使用实测的生成元次数）"""
    gens = cf_generators(r)
    a, b = gens.degrees
    return all(
        hilbert_function([gens.C, gens.F], d, VARIABLES_A) == koszul_hilbert(d, a, b)
        for d in range(2 * r + 2)
    )


def hilbert_values(r: int) -> Dict[str, int]:
    """
    Returns:
        {"single": HF(R/⟨C1,F1⟩R, r), "joint": HF(R/⟨C1,F1,C2,F2⟩, r), "k_dim": dim K(r)}
    """
    first, second = cf_generators(r), cf_generators_b(r)
    single = [first.C.embed(VARIABLES_R), first.F.embed(VARIABLES_R)]
    joint = single + [second.C.embed(VARIABLES_R), second.F.embed(VARIABLES_R)]
    return {
        "single": hilbert_function(single, r, VARIABLES_R),
        "joint": hilbert_function(joint, r, VARIABLES_R),
        "k_dim": k_space(r).dim,
    }


def expected_single_hilbert(r: int) -> int:
    """r 为奇数时 n²，偶数时 n(n+1)"""
    n = half_index(r)
    return n * n if r % 2 == 1 else n * (n + 1)


def verify_hilbert_identity(r: int) -> bool:
    """C(r+2,2) − dim K(r) = 2·HF(R/⟨C1,F1⟩R, r) − HF(R/⟨C1,F1,C2,F2⟩, r)"""
    values = hilbert_values(r)
    return (
        values["single"] == expected_single_hilbert(r)
        and values["joint"] == 0
        and comb(r + 2, 2) - values["k_dim"] == 2 * values["single"] - values["joint"]
    )


def verify_lower_bound(r: int) -> bool:
    """dim K(r) ≥ n（r 奇）或 n+1（r 偶）"""
    return k_space(r).dim >= expected_k_dim(r)


def verify_colon_exclusions(r: int) -> bool:
    """j ≤ r−1 时 y^j 不在 A、B 中的商理想里；y^r ∈ K(r)"""
    for j in range(r):
        y_a = HPoly.variable("y", VARIABLES_A) ** j
        y_b = HPoly.variable("y", VARIABLES_B) ** j
        if colon_first(r, j, VARIABLES_A).contains(y_a):
            return False
        if colon_second(r, j, VARIABLES_B).contains(y_b):
            return False
    return k_space(r).contains(HPoly.variable("y", VARIABLES_R) ** r)


def verify_support_bound(r: int) -> bool:
    """K(r) 中每个基元素的单项式 x^a y^b z^c 满足 a ≤ r−n 且 c ≤ r−n"""
    bound = r - half_index(r)
    return all(
        e[0] <= bound and e[2] <= bound for f in k_space(r).polys() for e in f.terms()
    )


def verify_k_dim(r: int) -> bool:
    return k_space(r).dim == expected_k_dim(r)
