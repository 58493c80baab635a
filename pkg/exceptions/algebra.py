"""
代数运算相关异常类

覆盖精确有理矩阵与齐次多项式运算中的前置条件失败。
"""

from typing import Optional, Tuple

from .base import AlgebraException


def _shape(shape: Optional[Tuple[int, int]]) -> Optional[str]:
    return None if shape is None else f"{shape[0]}x{shape[1]}"


class ShapeMismatchError(AlgebraException):
    """矩阵形状不符合运算要求"""

    def __init__(self, operation: str, reason: str, shape: Optional[Tuple[int, int]] = None):
        """
        Args:
            operation: 运算名称（如 "det_ff"、"roth_solvable"）
            reason: 不符原因
            shape: 出问题的矩阵形状
        """
        message = f"形状不匹配 - {operation}: {reason}"
        super().__init__(message, shape=_shape(shape), context={"operation": operation})


class SingularMatrixError(AlgebraException):
    """矩阵奇异（行列式为 0）"""

    def __init__(self, operation: str, shape: Optional[Tuple[int, int]] = None):
        message = f"矩阵奇异 - {operation}: 行列式为 0"
        super().__init__(message, shape=_shape(shape), context={"operation": operation})


class NoLUError(AlgebraException):
    """
    矩阵不存在（无主元选取的）LU 分解

    当某个顺序主子式为 0 时抛出。
    """

    def __init__(self, minor_order: int, shape: Optional[Tuple[int, int]] = None):
        """
        Args:
            minor_order: 第一个为 0 的顺序主子式的阶数（从 1 开始）
            shape: 矩阵形状
        """
        message = f"不存在 LU 分解: 第 {minor_order} 阶顺序主子式为 0"
        super().__init__(message, shape=_shape(shape), context={"minor_order": minor_order})


class InconsistentSystemError(AlgebraException):
    """线性方程组无解"""

    def __init__(self, operation: str, shape: Optional[Tuple[int, int]] = None):
        message = f"线性方程组无解 - {operation}"
        super().__init__(message, shape=_shape(shape), context={"operation": operation})


class NotSymmetricError(AlgebraException):
    """要求对称矩阵但输入不对称"""

    def __init__(self, operation: str, shape: Optional[Tuple[int, int]] = None):
        message = f"矩阵不对称 - {operation}"
        super().__init__(message, shape=_shape(shape), context={"operation": operation})


class DegreeMismatchError(AlgebraException):
    """多项式次数或变量集不一致"""

    def __init__(self, operation: str, left: str, right: str):
        """
        Args:
            operation: 运算名称
            left: 左操作数描述（次数/变量）
            right: 右操作数描述（次数/变量）
        """
        message = f"次数或变量不一致 - {operation}: {left} vs {right}"
        super().__init__(message, context={"operation": operation, "left": left, "right": right})
