"""
系数参数化

F ∈ K(r) 按 z 的幂次写作 F = Σ_k z^{r−k} f_k（f_k ∈ A_k），按 x 的幂次写作
F = Σ_i x^{r−i} g_i（g_i ∈ B_i）。对 k = n..r 唯一求解

    y^{r+1} f_k = P_k x^{r+1} + Q_k (x+y)^{r+1}
    y^{r+1} g_i = R_i z^{r+1} + S_i (z+y)^{r+1}

q 向量按 x 的指数编号，s 向量按 z 的指数编号，由此组装 𝒬、𝒮、Q̃、S̃、𝒜、ℬ，
并逐条检验它们之间的矩阵关系。
"""

from dataclasses import dataclass
from math import comb
from typing import Dict, List, Tuple

from deltastar.kspace import k_space
from exactla import QMatrix, exchange_matrix, solve_exact
from exceptions.verification import NotInKSpaceError
from polyring import VARIABLES_A, VARIABLES_B, VARIABLES_R, HPoly, monomial_basis, mult_map

from .blocks import block_spec, d_matrix, m_block, n_bar, u_matrix

Vector = Tuple


def _main_exponent_vector(poly: HPoly, variable: str) -> Vector:
    """按 variable 的指数 j = 0..deg 排列的系数"""
    slot = poly.variables.index(variable)
    other = 1 - slot
    values = []
    for j in range(poly.degree + 1):
        exps = [0, 0]
        exps[slot], exps[other] = j, poly.degree - j
        values.append(poly.coefficient(tuple(exps)))
    return tuple(values)


def _solve_pair(f: HPoly, gens: List[HPoly], divisor: HPoly) -> Tuple[HPoly, HPoly]:
    """
    求 (P, Q) 使 divisor·f = P·gens[0] + Q·gens[1]

    Raises:
        InconsistentSystemError: 无解
    """
    k = f.degree
    system = mult_map(gens[0], k).hstack(mult_map(gens[1], k))
    solution = solve_exact(system, (divisor * f).coeffs)
    basis = monomial_basis(f.variables, k)
    size = len(basis)
    return HPoly(basis, solution[:size]), HPoly(basis, solution[size:])


@dataclass(frozen=True)
class ParamMatrices:
    """
    Attributes:
        r: 光滑度
        Q, S: p×p 参数矩阵
        Qtilde, Stilde: p×p 上三角参数矩阵
        A, B: F 的系数矩阵
        P, R: P_k、R_i（k, i = n..r）
        q_vectors, s_vectors: 各 Q_k、S_i 的系数向量
    """

    r: int
    Q: QMatrix  # noqa: N815
    S: QMatrix  # noqa: N815
    Qtilde: QMatrix  # noqa: N815
    Stilde: QMatrix  # noqa: N815
    A: QMatrix  # noqa: N815
    B: QMatrix  # noqa: N815
    P: Tuple[HPoly, ...]  # noqa: N815
    R: Tuple[HPoly, ...]  # noqa: N815
    q_vectors: Tuple[Vector, ...]
    s_vectors: Tuple[Vector, ...]

    def relations(self) -> Dict[str, bool]:
        """逐条检验矩阵关系"""
        r = self.r
        spec = block_spec(r)
        d, j, u, nb = d_matrix(r), exchange_matrix(spec.p), u_matrix(r), n_bar(r)
        checks = {
            "A=DQ": self.A == d @ self.Q,
            "B=DS": self.B == d @ self.S,
            "JA^TJ=B": j @ self.A.T @ j == self.B,
            "DS=JQ^TD^TJ": d @ self.S == j @ self.Q.T @ d.T @ j,
            "Q=-NbarDQtilde": self.Q == -(nb @ d @ self.Qtilde),
            "S=-NbarDStilde": self.S == -(nb @ d @ self.Stilde),
            "U*Stilde=(U*Qtilde)^T": u @ self.Stilde == (u @ self.Qtilde).T,
            "M(k)q=0": all(
                not any(m_block(r, k).apply(q))
                for k, q in zip(spec.k_range, self.q_vectors)
            ),
            "M(k)s=0": all(
                not any(m_block(r, k).apply(s))
                for k, s in zip(spec.k_range, self.s_vectors)
            ),
            "P_k from Q_k": all(
                _main_exponent_vector(p, "x") == _lift(q, r)
                for p, q in zip(self.P, self.q_vectors)
            ),
            "R_i from S_i": all(
                _main_exponent_vector(rr, "z") == _lift(s, r)
                for rr, s in zip(self.R, self.s_vectors)
            ),
        }
        return checks

    def all_relations_hold(self) -> bool:
        return all(self.relations().values())


def _lift(q: Vector, r: int) -> Vector:
    """p_i = −Σ_{j≥i} C(r+1, r+1−(j−i)) q_j"""
    return tuple(
        -sum(comb(r + 1, r + 1 - (j - i)) * q[j] for j in range(i, len(q)))
        for i in range(len(q))
    )


def param_extract(F: HPoly) -> ParamMatrices:  # noqa: N803
    """
    从 F ∈ K(r) 提取参数矩阵

    Raises:
        NotInKSpaceError: F 不属于 K(r)
        InconsistentSystemError: 某个 (**) 方程无解（实现缺陷）
    """
    r = F.degree
    if F.variables != VARIABLES_R or r < 1 or not k_space(r).contains(F):
        raise NotInKSpaceError(r, str(F))
    spec = block_spec(r)
    n, p = spec.n, spec.p
    x_a, y_a = HPoly.variable("x", VARIABLES_A), HPoly.variable("y", VARIABLES_A)
    y_b, z_b = HPoly.variable("y", VARIABLES_B), HPoly.variable("z", VARIABLES_B)
    a_gens = [x_a ** (r + 1), (x_a + y_a) ** (r + 1)]
    b_gens = [z_b ** (r + 1), (z_b + y_b) ** (r + 1)]

    p_polys, q_vectors, r_polys, s_vectors = [], [], [], []
    for k in spec.k_range:
        f_k = F.coefficient_of_power("z", r - k)
        p_k, q_k = _solve_pair(f_k, a_gens, y_a ** (r + 1))
        p_polys.append(p_k)
        q_vectors.append(_main_exponent_vector(q_k, "x"))
        g_k = F.coefficient_of_power("x", r - k)
        r_k, s_k = _solve_pair(g_k, b_gens, y_b ** (r + 1))
        r_polys.append(r_k)
        s_vectors.append(_main_exponent_vector(s_k, "z"))

    def square(vectors) -> QMatrix:
        return QMatrix.from_rows([[vectors[c][row] for c in range(p)] for row in range(p)])

    def tilde(vectors) -> QMatrix:
        return QMatrix.from_rows(
            [[vectors[c][n + a] if a <= c else 0 for c in range(p)] for a in range(p)]
        )

    a_matrix = QMatrix.from_rows(
        [[F.coefficient((i, n + c - i, r - n - c)) for c in range(p)] for i in range(p)]
    )
    b_matrix = QMatrix.from_rows(
        [[F.coefficient((r - n - c, n + c - j, j)) for c in range(p)] for j in range(p)]
    )
    return ParamMatrices(
        r=r,
        Q=square(q_vectors),
        S=square(s_vectors),
        Qtilde=tilde(q_vectors),
        Stilde=tilde(s_vectors),
        A=a_matrix,
        B=b_matrix,
        P=tuple(p_polys),
        R=tuple(r_polys),
        q_vectors=tuple(q_vectors),
        s_vectors=tuple(s_vectors),
    )
