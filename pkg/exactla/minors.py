"""
子式枚举

三种模式：
- leading_principal: 1..n 阶顺序主子式
- all_up_to_order: 1..k 阶全部子式，阶数优先，行子集、列子集按字典序
- north_east: 以右上角为锚的连续子式（行取前 o 行，列取后 o 列）
"""

from fractions import Fraction
from itertools import combinations
from typing import Iterator, List, Optional, Tuple

from exceptions.algebra import ShapeMismatchError

from .elimination import det_ff
from .qmatrix import QMatrix

LEADING_PRINCIPAL = "leading_principal"
ALL_UP_TO_ORDER = "all_up_to_order"
NORTH_EAST = "north_east"

MINOR_MODES = (LEADING_PRINCIPAL, ALL_UP_TO_ORDER, NORTH_EAST)


def enumerate_minors(
    matrix: QMatrix, max_order: int
) -> Iterator[Tuple[Tuple[int, ...], Tuple[int, ...], Fraction]]:
    """按确定顺序产出 (行下标, 列下标, 子式值)"""
    for order in range(1, max_order + 1):
        for rows in combinations(range(matrix.rows), order):
            for cols in combinations(range(matrix.cols), order):
                yield rows, cols, det_ff(matrix.submatrix(rows, cols))


def minors(matrix: QMatrix, mode: str, k: Optional[int] = None) -> List[Fraction]:
    """
    计算子式序列

    Args:
        matrix: 输入矩阵
        mode: LEADING_PRINCIPAL / ALL_UP_TO_ORDER / NORTH_EAST
        k: 最高阶数（默认 min(rows, cols)）

    Raises:
        ShapeMismatchError: 模式未知或 k 越界
    """
    limit = min(matrix.rows, matrix.cols)
    order = limit if k is None else k
    if not 1 <= order <= limit:
        raise ShapeMismatchError("minors", f"阶数 k={order} 超出 [1, {limit}]", matrix.shape)

    if mode == LEADING_PRINCIPAL:
        return [det_ff(matrix.submatrix(range(o), range(o))) for o in range(1, order + 1)]
    if mode == NORTH_EAST:
        return [
            det_ff(matrix.submatrix(range(o), range(matrix.cols - o, matrix.cols)))
            for o in range(1, order + 1)
        ]
    if mode == ALL_UP_TO_ORDER:
        return [value for _, _, value in enumerate_minors(matrix, order)]
    raise ShapeMismatchError("minors", f"未知模式 {mode}", matrix.shape)
