"""
Toeplitz 全正性检查

A_T = (a_{j−i}) 对应 T(x) = (1+x)^{r+1}。检查 𝒩 的全部子式（阶数不超过上限）
以及 A_T 中偏移 s ∈ [0, r+1] 的连续 k×k 窗口 det(a_{s+j−i}) 均严格为正。
"""

from fractions import Fraction
from typing import List, Tuple

from exactla import ALL_UP_TO_ORDER, NORTH_EAST, QMatrix, det_ff, exchange_matrix, minors

from .blocks import block_spec, d_matrix, n_block


def toeplitz_window(r: int, offset: int, order: int) -> QMatrix:
    """A_T 的连续窗口 (a_{offset+j−i})，0 ≤ i, j < order"""
    spec = block_spec(r)
    return QMatrix.from_rows(
        [[spec.m(offset + j - i) for j in range(order)] for i in range(order)]
    )


def window_minors(r: int, max_order: int) -> List[Tuple[int, int, Fraction]]:
    """[(offset, order, det)]，offset = 0..r+1，order = 1..max_order"""
    return [
        (offset, order, det_ff(toeplitz_window(r, offset, order)))
        for offset in range(r + 2)
        for order in range(1, max_order + 1)
    ]


def n_block_minors(r: int, max_order: int) -> List[Fraction]:
    """𝒩 的全部子式（阶数 ≤ min(n, max_order)）"""
    block = n_block(r)
    return minors(block, ALL_UP_TO_ORDER, min(block.rows, max_order))


def north_east_minors(r: int) -> List[Fraction]:
    """𝒩 以右上角为锚的连续子式，即 𝒥𝒩 存在 UL 分解的判据"""
    return minors(n_block(r), NORTH_EAST)


def toeplitz_positivity(r: int, max_order: int) -> bool:
    """
    𝒩 的子式与 A_T 的连续窗口子式是否全部严格为正

    Args:
        r: 光滑度 r ≥ 1
        max_order: 最高阶数 ≥ 1
    """
    if max_order < 1:
        raise ValueError(f"max_order 必须 ≥ 1，得到 {max_order}")
    return (
        all(v > 0 for v in n_block_minors(r, max_order))
        and all(v > 0 for v in north_east_minors(r))
        and all(v > 0 for _, _, v in window_minors(r, max_order))
    )


def jn_is_symmetric(r: int) -> bool:
    """𝒥𝒩 对称"""
    block = n_block(r)
    return (exchange_matrix(block.rows) @ block).is_symmetric()


def jd_is_symmetric(r: int) -> bool:
    """𝒥𝒟 对称"""
    d = d_matrix(r)
    return (exchange_matrix(d.rows) @ d).is_symmetric()
