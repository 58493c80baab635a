"""
K(r)、ε(r) 与 C_i/F_i 生成元

在变换后的坐标中（ℓ26 = y）：

    K(r) = ((⟨x^{r+1},(x+y)^{r+1}⟩ ∩ ⟨z^{r+1},(z+y)^{r+1}⟩) : y^{r+1})_r

商与交可交换，因此逐次数地先求两个商片再取交。
"""

from dataclasses import dataclass
from functools import lru_cache
from typing import List, Tuple

from exceptions.verification import InternalConsistencyError
from polyring import (
    VARIABLES_A,
    VARIABLES_B,
    VARIABLES_R,
    GradedSubspace,
    HPoly,
    colon_piece,
    intersect,
    linear_substitute,
    minimal_generators,
)

from .complex import CHANGE_OF_VARIABLES, original_forms


def half_index(r: int) -> int:
    """n = ⌊(r+1)/2⌋：r = 2n−1 或 r = 2n"""
    return (r + 1) // 2


def expected_k_dim(r: int) -> int:
    """dim K(2n−1) = n，dim K(2n) = n+1"""
    return r // 2 + 1


def _var(name: str, variables=VARIABLES_R) -> HPoly:
    return HPoly.variable(name, variables)


def first_pair(r: int, variables=VARIABLES_R) -> List[HPoly]:
    """[x^{r+1}, (x+y)^{r+1}]"""
    x, y = _var("x", variables), _var("y", variables)
    return [x ** (r + 1), (x + y) ** (r + 1)]


def second_pair(r: int, variables=VARIABLES_R) -> List[HPoly]:
    """[z^{r+1}, (z+y)^{r+1}]"""
    z, y = _var("z", variables), _var("y", variables)
    return [z ** (r + 1), (z + y) ** (r + 1)]


def y_power(r: int, variables=VARIABLES_R) -> HPoly:
    return _var("y", variables) ** (r + 1)


def colon_first(r: int, d: int, variables=VARIABLES_R) -> GradedSubspace:
    """(⟨x^{r+1},(x+y)^{r+1}⟩ : y^{r+1})_d"""
    return colon_piece(first_pair(r, variables), y_power(r, variables), d, variables)


def colon_second(r: int, d: int, variables=VARIABLES_R) -> GradedSubspace:
    """(⟨z^{r+1},(z+y)^{r+1}⟩ : y^{r+1})_d"""
    return colon_piece(second_pair(r, variables), y_power(r, variables), d, variables)


@lru_cache(maxsize=64)
def intersection_colon_piece(r: int, d: int) -> GradedSubspace:
    """𝓘(r)_d = colon_first ∩ colon_second（在 R 中）"""
    return intersect(colon_first(r, d), colon_second(r, d))


@dataclass(frozen=True)
class KSpace:
    """
    Attributes:
        r: 光滑度
        basis: K(r) 作为 R_r 的子空间（规范基）
    """

    r: int
    basis: GradedSubspace

    @property
    def dim(self) -> int:
        return self.basis.dim

    @property
    def n(self) -> int:
        return half_index(self.r)

    def contains(self, poly: HPoly) -> bool:
        return self.basis.contains(poly)

    def polys(self) -> List[HPoly]:
        return self.basis.basis_polys()


def k_space(r: int) -> KSpace:
    """
    计算 K(r)

    Args:
        r: 光滑度 r ≥ 1
    """
    if r < 1:
        raise ValueError(f"r 必须 ≥ 1，得到 {r}")
    return KSpace(r, intersection_colon_piece(r, r))


def epsilon_piece(r: int) -> GradedSubspace:
    """原坐标下 I_r = (⟨ℓ12^{r+1},ℓ67^{r+1}⟩ : ℓ26^{r+1})_r ∩ (⟨ℓ23^{r+1},ℓ34^{r+1}⟩ : ℓ26^{r+1})_r"""
    first, second, divisor = original_forms(r)
    return intersect(
        colon_piece(first, divisor, r, VARIABLES_R),
        colon_piece(second, divisor, r, VARIABLES_R),
    )


def epsilon(r: int) -> int:
    """ε(r) = dim I_r（原坐标）"""
    if r < 1:
        raise ValueError(f"r 必须 ≥ 1，得到 {r}")
    return epsilon_piece(r).dim


def epsilon_transport(r: int) -> bool:
    """原坐标下的 I_r 经变量替换后恰好等于 K(r)"""
    transported = [linear_substitute(f, CHANGE_OF_VARIABLES) for f in epsilon_piece(r).basis_polys()]
    return GradedSubspace.from_polys(transported, VARIABLES_R, r) == k_space(r).basis


@dataclass(frozen=True)
class CFGenerators:
    """
    商理想的两个极小生成元

    Attributes:
        C: 次数较低（或相等时在规范基中靠前）的生成元
        F: 另一个生成元
        degrees: (deg C, deg F)
    """

    C: HPoly  # noqa: N815
    F: HPoly  # noqa: N815
    degrees: Tuple[int, int]


def _two_generators(found: List[Tuple[int, HPoly]], r: int, ring: str) -> CFGenerators:
    if len(found) != 2:
        raise InternalConsistencyError(
            "cf_generators", r=r, detail=f"{ring} 中找到 {len(found)} 个极小生成元（期望 2）"
        )
    (a, first), (b, second) = found
    return CFGenerators(first, second, (a, b))


@lru_cache(maxsize=32)
def cf_generators(r: int) -> CFGenerators:
    """
    ⟨C1, F1⟩ = ⟨x^{r+1},(x+y)^{r+1}⟩ : y^{r+1}（A = ℚ[x,y]），逐次提取极小生成元

    Raises:
        InternalConsistencyError: 0..r 次内找到的极小生成元不是恰好两个
    """
    found = minimal_generators(lambda d: colon_first(r, d, VARIABLES_A), r, VARIABLES_A)
    return _two_generators(found, r, "A")


@lru_cache(maxsize=32)
def cf_generators_b(r: int) -> CFGenerators:
    """⟨C2, F2⟩ = ⟨z^{r+1},(z+y)^{r+1}⟩ : y^{r+1}（B = ℚ[y,z]）"""
    found = minimal_generators(lambda d: colon_second(r, d, VARIABLES_B), r, VARIABLES_B)
    return _two_generators(found, r, "B")


def expected_generator_degrees(r: int) -> Tuple[int, int]:
    """r+1 = 2n 时 (n, n)，r+1 = 2n+1 时 (n, n+1)"""
    n = half_index(r)
    return (n, n) if r % 2 == 1 else (n, n + 1)
