"""
二项式 Toeplitz 块

m_ℓ = C(r+1, ℓ)。r = 2n−1 或 r = 2n，p = r − n + 1（即 n 或 n+1）。

- M(k)：n×(k+1)，(i, j) 元为 m_{r−n+1+i−j}（下标越界记 0），k = n..r
- 𝒩：M(k) 左侧的 n×n 块
- 𝒩′：r 为偶数时的 (n+1)×(n+1) 加边矩阵 [[0 | 𝒩⁻¹], [−1 | 0]]
- 𝒟：p×p 下三角，(i, j) 元为 C(r+1, i−j)
- 𝒰 = 𝒥·𝒟·𝒩̄·𝒟，𝒩̄ = 𝒩⁻¹（r 奇）或 𝒩′（r 偶）
"""

from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Tuple

from exactla import QMatrix, exchange_matrix, inverse, rank
from exceptions.algebra import ShapeMismatchError
from exceptions.verification import InternalConsistencyError


@dataclass(frozen=True)
class BlockSpec:
    """
    Attributes:
        r: 光滑度
        n: r = 2n−1 或 r = 2n
        m_coeffs: (m_0, …, m_{r+1})
    """

    r: int
    n: int
    m_coeffs: Tuple[int, ...]

    @property
    def p(self) -> int:
        """参数矩阵的阶：r 奇为 n，r 偶为 n+1"""
        return self.r - self.n + 1

    @property
    def is_odd(self) -> bool:
        return self.r % 2 == 1

    def m(self, index: int) -> int:
        """m_ℓ，ℓ ∉ [0, r+1] 时为 0"""
        if 0 <= index <= self.r + 1:
            return self.m_coeffs[index]
        return 0

    @property
    def k_range(self) -> range:
        return range(self.n, self.r + 1)


def block_spec(r: int) -> BlockSpec:
    if r < 1:
        raise ShapeMismatchError("block_spec", f"r 必须 ≥ 1，得到 {r}")
    return BlockSpec(r, (r + 1) // 2, tuple(comb(r + 1, ell) for ell in range(r + 2)))


def m_block(r: int, k: int) -> QMatrix:
    """
    M(k)

    Raises:
        ShapeMismatchError: k ∉ [n, r]
    """
    spec = block_spec(r)
    if k not in spec.k_range:
        raise ShapeMismatchError("m_block", f"k={k} 不在 [{spec.n}, {r}] 内")
    top = r - spec.n + 1
    return QMatrix.from_rows(
        [[spec.m(top + i - j) for j in range(k + 1)] for i in range(spec.n)]
    )


def kernel_dim_total(r: int) -> int:
    """
    Σ_k nullity(M(k))，k = n..r

    Raises:
        InternalConsistencyError: 某个 M(k) 的秩不等于 n
    """
    spec = block_spec(r)
    total = 0
    for k in spec.k_range:
        block = m_block(r, k)
        rk = rank(block)
        if rk != spec.n:
            raise InternalConsistencyError("m_block_rank", r=r, detail=f"k={k}, rank={rk}")
        total += block.cols - rk
    return total


def expected_kernel_dim_total(r: int) -> int:
    """n(n+1)/2（r 奇）或 (n+1)(n+2)/2（r 偶）"""
    n = (r + 1) // 2
    return n * (n + 1) // 2 if r % 2 == 1 else (n + 1) * (n + 2) // 2


@lru_cache(maxsize=32)
def n_block(r: int) -> QMatrix:
    """𝒩：r = 2n−1 时 C(2n, n+i−j)，r = 2n 时 C(2n+1, n+1+i−j)"""
    spec = block_spec(r)
    top = r - spec.n + 1
    return QMatrix.from_rows(
        [[spec.m(top + i - j) for j in range(spec.n)] for i in range(spec.n)]
    )


def n_prime(r: int) -> QMatrix:
    """
    𝒩′ = [[0 | 𝒩⁻¹], [−1 | 0]]（仅 r 偶）

    Raises:
        ShapeMismatchError: r 为奇数
    """
    spec = block_spec(r)
    if spec.is_odd:
        raise ShapeMismatchError("n_prime", f"𝒩′ 只对偶数 r 定义，得到 r={r}")
    n = spec.n
    top = QMatrix.zeros(n, 1).hstack(inverse(n_block(r)))
    bottom = QMatrix.from_rows([[-1] + [0] * n])
    return top.vstack(bottom)


def n_bar(r: int) -> QMatrix:
    """𝒩̄：r 奇为 𝒩⁻¹，r 偶为 𝒩′"""
    return inverse(n_block(r)) if r % 2 == 1 else n_prime(r)


@lru_cache(maxsize=32)
def d_matrix(r: int) -> QMatrix:
    """𝒟：p×p 下三角，(i, j) 元为 C(r+1, i−j)"""
    spec = block_spec(r)
    return QMatrix.from_rows([[spec.m(i - j) for j in range(spec.p)] for i in range(spec.p)])


@lru_cache(maxsize=32)
def u_matrix(r: int) -> QMatrix:
    """𝒰 = 𝒥·𝒟·𝒩̄·𝒟"""
    d = d_matrix(r)
    return exchange_matrix(d.rows) @ d @ n_bar(r) @ d
