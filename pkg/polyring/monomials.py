"""
单项式基

固定使用分次反字典序（grevlex），x ≻ y ≻ z。同一次数内，比较最后一个
指数不同的变量，指数较小者更大。因此降序排列等价于按"反转后的指数元组"升序。
"""

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations_with_replacement
from math import comb
from typing import Dict, Sequence, Tuple

from exceptions.algebra import DegreeMismatchError

ALL_VARIABLES = ("x", "y", "z")
VARIABLES_R = ("x", "y", "z")
VARIABLES_A = ("x", "y")
VARIABLES_B = ("y", "z")

Exponents = Tuple[int, ...]


@dataclass(frozen=True)
class MonomialBasis:
    """
    某个次数的单项式有序基

    Attributes:
        variables: 变量（{x, y, z} 的有序子集）
        degree: 次数
        monomials: grevlex 降序的指数元组
    """

    variables: Tuple[str, ...]
    degree: int
    monomials: Tuple[Exponents, ...]
    _index: Dict[Exponents, int] = field(default=None, compare=False, hash=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "_index", {m: i for i, m in enumerate(self.monomials)})

    def __len__(self) -> int:
        return len(self.monomials)

    def position(self, exponents: Exponents) -> int:
        """单项式在基中的下标"""
        return self._index[exponents]


def check_variables(variables: Sequence[str]) -> Tuple[str, ...]:
    """校验变量集为 (x, y, z) 的有序子集"""
    variables = tuple(variables)
    positions = [ALL_VARIABLES.index(v) if v in ALL_VARIABLES else -1 for v in variables]
    if not variables or -1 in positions or positions != sorted(set(positions)):
        raise DegreeMismatchError("variables", str(variables), str(ALL_VARIABLES))
    return variables


def _exponent_tuples(nvars: int, degree: int):
    for choice in combinations_with_replacement(range(nvars), degree):
        exps = [0] * nvars
        for v in choice:
            exps[v] += 1
        yield tuple(exps)


@lru_cache(maxsize=None)
def monomial_basis(variables: Tuple[str, ...], degree: int) -> MonomialBasis:
    """
    构造（并缓存）单项式基；缓存只读，线程安全

    Args:
        variables: 变量元组
        degree: 非负次数
    """
    variables = check_variables(variables)
    if degree < 0:
        raise DegreeMismatchError("monomial_basis", f"degree={degree}", "degree ≥ 0")
    monomials = sorted(_exponent_tuples(len(variables), degree), key=lambda e: e[::-1])
    return MonomialBasis(variables, degree, tuple(monomials))


def basis_size(nvars: int, degree: int) -> int:
    """C(degree + nvars − 1, nvars − 1)；负次数为 0"""
    if degree < 0:
        return 0
    return comb(degree + nvars - 1, nvars - 1)
