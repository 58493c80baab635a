"""
Roth 方程 AX − YB = C

- roth_solvable：秩判据 rank[[A,0],[0,B]] = rank[[A,C],[0,B]]
- roth_triangular_solve：W 有 LU 分解时构造上三角解 W·X − Yᵀ·Wᵀ = C
- roth_lower_solve：对称 U 经 𝒥 共轭得到下三角解 U·X − Yᵀ·U = C
- roth_operator_matrix：上三角参数对 (X, Y) ↦ W·X − Yᵀ·Wᵀ 的 p²×p(p+1) 矩阵
"""

import random
from dataclasses import dataclass, field
from typing import List, Tuple

from exactla import (
    QMatrix,
    det_ff,
    exchange_matrix,
    has_lu,
    lu_decompose,
    rank,
    triangular_inverse,
)
from exceptions.algebra import NotSymmetricError, ShapeMismatchError
from exceptions.base import ConfigurationException
from exceptions.verification import InternalConsistencyError

from .blocks import block_spec, u_matrix


def roth_solvable(a: QMatrix, b: QMatrix, c: QMatrix) -> bool:
    """
    AX − YB = C 是否有解

    Raises:
        ShapeMismatchError: A 与 C 行数不同或 B 与 C 列数不同
    """
    if a.rows != c.rows or b.cols != c.cols:
        raise ShapeMismatchError(
            "roth_solvable", f"A {a.shape}, B {b.shape}, C {c.shape} 不相容", c.shape
        )
    upper_zero = QMatrix.zeros(a.rows, b.cols)
    lower_zero = QMatrix.zeros(b.rows, a.cols)
    plain = QMatrix.block([[a, upper_zero], [lower_zero, b]])
    bordered = QMatrix.block([[a, c], [lower_zero, b]])
    return rank(plain) == rank(bordered)


def upper_part(matrix: QMatrix) -> QMatrix:
    """含对角线的上三角部分"""
    n = matrix.rows
    return QMatrix.from_rows(
        [[matrix[i, j] if j >= i else 0 for j in range(n)] for i in range(n)]
    )


def strict_lower_part(matrix: QMatrix) -> QMatrix:
    n = matrix.rows
    return QMatrix.from_rows(
        [[matrix[i, j] if j < i else 0 for j in range(n)] for i in range(n)]
    )


def roth_residual(w: QMatrix, x: QMatrix, y: QMatrix, c: QMatrix) -> QMatrix:
    """W·X − Yᵀ·Wᵀ − C"""
    return w @ x - y.T @ w.T - c


def _check_square_pair(operation: str, w: QMatrix, c: QMatrix):
    if not w.is_square or w.shape != c.shape:
        raise ShapeMismatchError(operation, f"W {w.shape} 与 C {c.shape} 必须为同阶方阵", c.shape)


def roth_triangular_solve(w: QMatrix, c: QMatrix) -> Tuple[QMatrix, QMatrix]:
    """
    求上三角 X、Y 使 W·X − Yᵀ·Wᵀ = C

    W = V·U，C′ = V⁻¹·C·V⁻ᵀ = C′_u − C′_l（对角线归入 C′_u），
    X = U⁻¹·C′_u·Vᵀ，Y = U⁻¹·(C′_l)ᵀ·Vᵀ。

    Raises:
        NoLUError / SingularMatrixError: W 没有 LU 分解或不可逆
        InternalConsistencyError: 残差非零
    """
    _check_square_pair("roth_triangular_solve", w, c)
    v, u = lu_decompose(w)
    v_inv = triangular_inverse(v, lower=True)
    u_inv = triangular_inverse(u, lower=False)
    c_prime = v_inv @ c @ v_inv.T
    c_upper = upper_part(c_prime)
    c_lower = -strict_lower_part(c_prime)
    x = u_inv @ c_upper @ v.T
    y = u_inv @ c_lower.T @ v.T
    if not roth_residual(w, x, y, c).is_zero() or not (
        x.is_upper_triangular() and y.is_upper_triangular()
    ):
        raise InternalConsistencyError("roth_triangular_solve", detail="残差非零或解不是上三角")
    return x, y


def roth_lower_solve(u: QMatrix, c: QMatrix) -> Tuple[QMatrix, QMatrix]:
    """
    对称 U：求下三角 X、Y 使 U·X − Yᵀ·U = C

    以 W = 𝒥U𝒥、右端 𝒥C𝒥 调用 roth_triangular_solve，再取 X = 𝒥X′𝒥、Y = 𝒥Y′𝒥。

    Raises:
        NotSymmetricError: U 不对称
    """
    _check_square_pair("roth_lower_solve", u, c)
    if not u.is_symmetric():
        raise NotSymmetricError("roth_lower_solve", u.shape)
    j = exchange_matrix(u.rows)
    x_prime, y_prime = roth_triangular_solve(j @ u @ j, j @ c @ j)
    x, y = j @ x_prime @ j, j @ y_prime @ j
    if not (u @ x - y.T @ u - c).is_zero():
        raise InternalConsistencyError("roth_lower_solve", detail="残差非零")
    return x, y


def upper_positions(p: int) -> List[Tuple[int, int]]:
    """上三角位置 (a, c)，a ≤ c，行优先"""
    return [(a, c) for a in range(p) for c in range(a, p)]


def roth_operator_matrix(w: QMatrix) -> QMatrix:
    """
    φ(X, Y) = W·X − Yᵀ·Wᵀ 在上三角参数对上的矩阵

    列：先 X 的 p(p+1)/2 个上三角单位阵，再 Y 的；行：结果矩阵按行展平。
    X 的单位阵 E_ac 贡献 (i, c) ← W[i][a]；Y 的 E_ac 贡献 (c, j) ← −W[j][a]。
    """
    if not w.is_square:
        raise ShapeMismatchError("roth_operator_matrix", "需要方阵", w.shape)
    p = w.rows
    positions = upper_positions(p)
    columns = []
    for a, c in positions:
        column = [0] * (p * p)
        for i in range(p):
            column[i * p + c] += w[i, a]
        columns.append(column)
    for a, c in positions:
        column = [0] * (p * p)
        for j in range(p):
            column[c * p + j] -= w[j, a]
        columns.append(column)
    return QMatrix.from_columns(columns, p * p)


@dataclass(frozen=True)
class RothOperatorReport:
    """
    Attributes:
        r: 光滑度
        p: 𝒰 的阶
        rank: φ 的秩
        surjective: rank = p²
        kernel_dim: p(p+1) − rank
    """

    r: int
    p: int
    rank: int
    surjective: bool
    kernel_dim: int


def triangular_roth_operator_rank(r: int) -> RothOperatorReport:
    """以 W = 𝒰(r) 构造 φ 并计算秩"""
    p = block_spec(r).p
    rk = rank(roth_operator_matrix(u_matrix(r)))
    return RothOperatorReport(r=r, p=p, rank=rk, surjective=rk == p * p, kernel_dim=p * (p + 1) - rk)


def random_matrix(rng: random.Random, rows: int, cols: int, low: int = -9, high: int = 9) -> QMatrix:
    """整数元素均匀取自 [low, high] 的随机矩阵"""
    return QMatrix.from_rows([[rng.randint(low, high) for _ in range(cols)] for _ in range(rows)])


@dataclass
class LUSearchResult:
    """
    Attributes:
        trials: 尝试次数
        tested: 实际检验的（可逆且无 LU 分解的）W 个数
        surjective_without_lu: φ 满射但 W 无 LU 分解的反例
    """

    trials: int
    tested: int = 0
    surjective_without_lu: List[QMatrix] = field(default_factory=list)


def _without_lu(rng: random.Random, size: int) -> QMatrix:
    """随机矩阵并令某个顺序主子式为 0"""
    rows = random_matrix(rng, size, size).to_rows()
    k = rng.randint(1, size - 1)
    if k == 1:
        rows[0][0] = 0
    else:
        rows[k - 1][:k] = rows[0][:k]
    return QMatrix.from_rows(rows)


def lu_question_search(
    trials: int, size: int, seed: int, enabled: bool = False, logger=None
) -> LUSearchResult:
    """
    随机搜索：可逆但没有 LU 分解、而 φ 仍满射的 W

    Raises:
        ConfigurationException: 搜索未启用
    """
    if not enabled:
        raise ConfigurationException(
            "LU 问题随机搜索未启用（[search] lu_question_search = true 或 --enable-lu-search）",
            config_section="search",
            config_key="lu_question_search",
        )
    if size < 2:
        raise ShapeMismatchError("lu_question_search", f"size 必须 ≥ 2，得到 {size}")
    rng = random.Random(seed)
    result = LUSearchResult(trials=trials)
    for _ in range(trials):
        w = _without_lu(rng, size)
        if det_ff(w) == 0 or has_lu(w):
            continue
        result.tested += 1
        if rank(roth_operator_matrix(w)) == size * size:
            result.surjective_without_lu.append(w)
            if logger:
                logger(f"发现满射但无 LU 分解的 W:\n{w}", "WARNING")
    return result


def lower_solution_holds(r: int, c: QMatrix) -> bool:
    """𝒰(r) 与给定 C 的下三角解：X、Y 下三角且残差为 0"""
    u = u_matrix(r)
    x, y = roth_lower_solve(u, c)
    return (
        x.is_lower_triangular()
        and y.is_lower_triangular()
        and (u @ x - y.T @ u - c).is_zero()
    )


def jut_has_lu(r: int) -> bool:
    """𝒥·𝒰·𝒥 是否存在 LU 分解"""
    u = u_matrix(r)
    j = exchange_matrix(u.rows)
    return has_lu(j @ u @ j)


def u_is_symmetric(r: int) -> bool:
    return u_matrix(r).is_symmetric()
