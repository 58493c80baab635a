"""
无主元选取的 LU 分解

W = V·U，V 为单位下三角、U 为上三角。分解存在当且仅当所有顺序主子式非零。
"""

from fractions import Fraction
from typing import List, Tuple

from exceptions.algebra import NoLUError, ShapeMismatchError, SingularMatrixError

from .elimination import det_ff
from .qmatrix import QMatrix


def lu_decompose(matrix: QMatrix) -> Tuple[QMatrix, QMatrix]:
    """
    Doolittle 分解（不选主元）

    Args:
        matrix: 可逆方阵

    Returns:
        (V, U)：V 单位下三角，U 上三角，V·U = matrix

    Raises:
        ShapeMismatchError: 非方阵
        SingularMatrixError: 行列式为 0
        NoLUError: 某个顺序主子式为 0
    """
    if not matrix.is_square:
        raise ShapeMismatchError("lu_decompose", "需要方阵", matrix.shape)
    if det_ff(matrix) == 0:
        raise SingularMatrixError("lu_decompose", matrix.shape)

    n = matrix.rows
    upper: List[List[Fraction]] = matrix.to_rows()
    lower: List[List[Fraction]] = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for k in range(n):
        pivot = upper[k][k]
        if pivot == 0:
            raise NoLUError(k + 1, matrix.shape)
        for i in range(k + 1, n):
            factor = upper[i][k] / pivot
            if not factor:
                continue
            lower[i][k] = factor
            upper[i] = [a - factor * b for a, b in zip(upper[i], upper[k])]
    return QMatrix.from_rows(lower), QMatrix.from_rows(upper)


def has_lu(matrix: QMatrix) -> bool:
    """是否存在 LU 分解（奇异矩阵视为不存在）"""
    try:
        lu_decompose(matrix)
    except (NoLUError, SingularMatrixError):
        return False
    return True


def triangular_inverse(matrix: QMatrix, lower: bool) -> QMatrix:
    """
    三角矩阵求逆（前代/回代）

    Args:
        matrix: 对角元非零的三角方阵
        lower: True 表示下三角，False 表示上三角
    """
    n = matrix.rows
    if not matrix.is_square:
        raise ShapeMismatchError("triangular_inverse", "需要方阵", matrix.shape)
    if any(matrix[i, i] == 0 for i in range(n)):
        raise SingularMatrixError("triangular_inverse", matrix.shape)

    order = range(n) if lower else range(n - 1, -1, -1)
    columns = []
    for e in range(n):
        x = [Fraction(0)] * n
        for i in order:
            inner = range(i) if lower else range(i + 1, n)
            acc = Fraction(int(i == e)) - sum((matrix[i, j] * x[j] for j in inner), Fraction(0))
            x[i] = acc / matrix[i, i]
        columns.append(x)
    return QMatrix.from_columns(columns, n)
