"""
齐次多项式

HPoly 把一个齐次多项式存为其所在次数的单项式基上的系数向量。
零多项式可以取任意次数。
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, Sequence, Tuple

from exactla import QMatrix, det_ff, to_rational
from exactla.qmatrix import Scalar
from exceptions.algebra import DegreeMismatchError, ShapeMismatchError, SingularMatrixError

from .monomials import Exponents, MonomialBasis, check_variables, monomial_basis


@dataclass(frozen=True)
class HPoly:
    """
    齐次多项式

    Attributes:
        basis: 所在次数的单项式基
        coeffs: 与 basis 对齐的系数
    """

    basis: MonomialBasis
    coeffs: Tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.coeffs) != len(self.basis):
            raise ShapeMismatchError("HPoly", f"系数个数 {len(self.coeffs)} ≠ 基长度 {len(self.basis)}")
        object.__setattr__(self, "coeffs", tuple(to_rational(c) for c in self.coeffs))

    # ========== 构造 ==========

    @classmethod
    def from_terms(
        cls, terms: Dict[Exponents, Scalar], variables: Sequence[str], degree: int = None
    ) -> "HPoly":
        """
        由 {指数元组: 系数} 构造

        Args:
            terms: 项字典，系数为 0 的项被忽略
            variables: 变量元组
            degree: 次数；terms 全为零时必须给出
        """
        variables = check_variables(variables)
        nonzero = {e: to_rational(c) for e, c in terms.items() if to_rational(c) != 0}
        degrees = {sum(e) for e in nonzero}
        if degree is None:
            if not degrees:
                raise DegreeMismatchError("from_terms", "零多项式", "需要显式次数")
            degree = degrees.pop() if len(degrees) == 1 else -1
        if any(sum(e) != degree for e in nonzero) or degree < 0:
            raise DegreeMismatchError("from_terms", str(sorted(degrees)), "单一次数")
        basis = monomial_basis(variables, degree)
        coeffs = [Fraction(0)] * len(basis)
        for e, c in nonzero.items():
            if len(e) != len(variables):
                raise DegreeMismatchError("from_terms", str(e), str(variables))
            coeffs[basis.position(e)] = c
        return cls(basis, tuple(coeffs))

    @classmethod
    def zero(cls, variables: Sequence[str], degree: int) -> "HPoly":
        basis = monomial_basis(check_variables(variables), degree)
        return cls(basis, (Fraction(0),) * len(basis))

    @classmethod
    def monomial(cls, exponents: Exponents, variables: Sequence[str], coeff: Scalar = 1) -> "HPoly":
        return cls.from_terms({tuple(exponents): coeff}, variables, sum(exponents))

    @classmethod
    def variable(cls, name: str, variables: Sequence[str]) -> "HPoly":
        variables = check_variables(variables)
        return cls.monomial(tuple(int(v == name) for v in variables), variables)

    @classmethod
    def linear(cls, coefficients: Sequence[Scalar], variables: Sequence[str]) -> "HPoly":
        """一次型 Σ cᵢ·vᵢ"""
        variables = check_variables(variables)
        terms = {
            tuple(int(k == i) for k in range(len(variables))): c for i, c in enumerate(coefficients)
        }
        return cls.from_terms(terms, variables, 1)

    @classmethod
    def from_vector(cls, basis: MonomialBasis, vector: Iterable[Scalar]) -> "HPoly":
        return cls(basis, tuple(vector))

    # ========== 属性 ==========

    @property
    def degree(self) -> int:
        return self.basis.degree

    @property
    def variables(self) -> Tuple[str, ...]:
        return self.basis.variables

    def terms(self) -> Dict[Exponents, Fraction]:
        """非零项字典"""
        return {m: c for m, c in zip(self.basis.monomials, self.coeffs) if c}

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def coefficient(self, exponents: Exponents) -> Fraction:
        return self.coeffs[self.basis.position(tuple(exponents))]

    # ========== 运算 ==========

    def _check_compatible(self, other: "HPoly", operation: str):
        if self.basis != other.basis:
            raise DegreeMismatchError(
                operation,
                f"deg {self.degree} in {self.variables}",
                f"deg {other.degree} in {other.variables}",
            )

    def __add__(self, other: "HPoly") -> "HPoly":
        self._check_compatible(other, "add")
        return HPoly(self.basis, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "HPoly") -> "HPoly":
        self._check_compatible(other, "sub")
        return HPoly(self.basis, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "HPoly":
        return HPoly(self.basis, tuple(-a for a in self.coeffs))

    def scale(self, factor: Scalar) -> "HPoly":
        c = to_rational(factor)
        return HPoly(self.basis, tuple(c * a for a in self.coeffs))

    def __mul__(self, other) -> "HPoly":
        if not isinstance(other, HPoly):
            return self.scale(other)
        if self.variables != other.variables:
            raise DegreeMismatchError("mul", str(self.variables), str(other.variables))
        product: Dict[Exponents, Fraction] = {}
        for e1, c1 in self.terms().items():
            for e2, c2 in other.terms().items():
                e = tuple(a + b for a, b in zip(e1, e2))
                product[e] = product.get(e, Fraction(0)) + c1 * c2
        return HPoly.from_terms(product, self.variables, self.degree + other.degree)

    def __rmul__(self, other) -> "HPoly":
        return self.scale(other)

    def __pow__(self, exponent: int) -> "HPoly":
        if exponent < 0:
            raise DegreeMismatchError("pow", f"exponent={exponent}", "exponent ≥ 0")
        result = HPoly.from_terms({(0,) * len(self.variables): 1}, self.variables, 0)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def embed(self, variables: Sequence[str]) -> "HPoly":
        """嵌入到更大的变量集（补零指数），例如 A = ℚ[x,y] → R = ℚ[x,y,z]"""
        variables = check_variables(variables)
        missing = [v for v in self.variables if v not in variables]
        if missing:
            raise DegreeMismatchError("embed", str(self.variables), str(variables))
        slots = [variables.index(v) for v in self.variables]
        terms = {}
        for e, c in self.terms().items():
            padded = [0] * len(variables)
            for slot, power in zip(slots, e):
                padded[slot] = power
            terms[tuple(padded)] = c
        return HPoly.from_terms(terms, variables, self.degree)

    def coefficient_of_power(self, variable: str, power: int) -> "HPoly":
        """
        按某变量的幂次切片：返回 variable^power 的系数（去掉该变量后的多项式）

        例如 F = Σ z^{r−i}·f_i 时，f_i = F.coefficient_of_power("z", r − i)。
        """
        k = self.variables.index(variable)
        rest = tuple(v for v in self.variables if v != variable)
        terms = {e[:k] + e[k + 1 :]: c for e, c in self.terms().items() if e[k] == power}
        return HPoly.from_terms(terms, rest, self.degree - power)

    def __str__(self) -> str:
        terms = self.terms()
        if not terms:
            return "0"
        pieces = []
        for e, c in terms.items():
            factors = [
                v if p == 1 else f"{v}^{p}" for v, p in zip(self.variables, e) if p
            ]
            if not factors:
                pieces.append(str(c))
            elif c == 1:
                pieces.append("*".join(factors))
            elif c == -1:
                pieces.append("-" + "*".join(factors))
            else:
                pieces.append(f"{c}*" + "*".join(factors))
        return " + ".join(pieces).replace("+ -", "- ")


def partial_derivative(f: HPoly, variable: str) -> HPoly:
    """形式偏导；次数为 0 的输入返回 0（次数记为 0）"""
    if f.degree == 0:
        return HPoly.zero(f.variables, 0)
    k = f.variables.index(variable)
    terms = {}
    for e, c in f.terms().items():
        if e[k]:
            lowered = e[:k] + (e[k] - 1,) + e[k + 1 :]
            terms[lowered] = c * e[k]
    return HPoly.from_terms(terms, f.variables, f.degree - 1)


def linear_substitute(f: HPoly, matrix: QMatrix) -> HPoly:
    """
    线性变量替换 g(v) = f(A·v)

    A 的第 i 行给出第 i 个变量在新坐标下的表达式。

    Raises:
        ShapeMismatchError: A 的尺寸与变量数不符
        SingularMatrixError: A 不可逆
    """
    k = len(f.variables)
    if matrix.shape != (k, k):
        raise ShapeMismatchError("linear_substitute", f"需要 {k}×{k} 矩阵", matrix.shape)
    if det_ff(matrix) == 0:
        raise SingularMatrixError("linear_substitute", matrix.shape)

    images = [HPoly.linear(matrix.row(i), f.variables) for i in range(k)]
    powers = [{} for _ in range(k)]

    def power(i: int, p: int) -> HPoly:
        if p not in powers[i]:
            powers[i][p] = images[i] ** p
        return powers[i][p]

    result = HPoly.zero(f.variables, f.degree)
    for e, c in f.terms().items():
        term = HPoly.from_terms({(0,) * k: c}, f.variables, 0)
        for i, p in enumerate(e):
            if p:
                term = term * power(i, p)
        result = result + term
    return result


def swap_variables(f: HPoly, first: str, second: str) -> HPoly:
    """交换两个变量，例如 f(x,y,z) ↦ f(z,y,x)"""
    i, j = f.variables.index(first), f.variables.index(second)
    terms = {}
    for e, c in f.terms().items():
        swapped = list(e)
        swapped[i], swapped[j] = swapped[j], swapped[i]
        terms[tuple(swapped)] = c
    return HPoly.from_terms(terms, f.variables, f.degree)
