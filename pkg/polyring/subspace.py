"""
分次子空间

GradedSubspace 表示某个次数的多项式空间中的线性子空间（如理想的次数片 I_d）。
基矩阵的列是规范基（行最简形的转置），因此两个子空间相等当且仅当对象相等。
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence, Tuple

from exactla import QMatrix, rank, row_space_basis
from exceptions.algebra import DegreeMismatchError

from .hpoly import HPoly
from .monomials import MonomialBasis, check_variables, monomial_basis


@dataclass(frozen=True)
class GradedSubspace:
    """
    Attributes:
        degree: 次数
        variables: 变量元组
        basis_matrix: 列为基多项式系数向量的矩阵（规范化后）
    """

    degree: int
    variables: Tuple[str, ...]
    basis_matrix: QMatrix

    @classmethod
    def span(
        cls, vectors: Sequence[Sequence[Fraction]], variables: Sequence[str], degree: int
    ) -> "GradedSubspace":
        """由任意向量组张成并规范化"""
        variables = check_variables(variables)
        length = len(monomial_basis(variables, degree))
        basis = row_space_basis([list(v) for v in vectors], length)
        return cls(degree, variables, QMatrix.from_columns(basis, length))

    @classmethod
    def from_polys(
        cls, polys: Sequence[HPoly], variables: Sequence[str], degree: int
    ) -> "GradedSubspace":
        for p in polys:
            if p.degree != degree or p.variables != tuple(variables):
                raise DegreeMismatchError(
                    "from_polys", f"deg {p.degree} in {p.variables}", f"deg {degree} in {variables}"
                )
        return cls.span([p.coeffs for p in polys], variables, degree)

    @classmethod
    def zero(cls, variables: Sequence[str], degree: int) -> "GradedSubspace":
        return cls.span([], variables, degree)

    @classmethod
    def full(cls, variables: Sequence[str], degree: int) -> "GradedSubspace":
        n = len(monomial_basis(check_variables(variables), degree))
        return cls.span(QMatrix.identity(n).to_rows(), variables, degree)

    @property
    def ambient(self) -> MonomialBasis:
        return monomial_basis(self.variables, self.degree)

    @property
    def dim(self) -> int:
        return self.basis_matrix.cols

    @property
    def codim(self) -> int:
        return len(self.ambient) - self.dim

    def basis_polys(self) -> List[HPoly]:
        return [HPoly.from_vector(self.ambient, col) for col in self.basis_matrix.columns()]

    def contains(self, poly: HPoly) -> bool:
        """多项式是否属于该子空间（零多项式总是属于）"""
        if poly.is_zero():
            return True
        if poly.degree != self.degree or poly.variables != self.variables:
            return False
        if self.dim == 0:
            return False
        extended = self.basis_matrix.hstack(QMatrix.from_columns([poly.coeffs], len(self.ambient)))
        return rank(extended) == self.dim

    def is_subspace_of(self, other: "GradedSubspace") -> bool:
        return all(other.contains(p) for p in self.basis_polys())

    def __len__(self) -> int:
        return self.dim
