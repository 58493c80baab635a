"""
输入数据相关异常类

处理三角剖分文档、矩阵文本、多项式文本、划分参数等输入层异常。
"""

from typing import Optional

from .base import InputException


class TriangulationParseError(InputException):
    """
    三角剖分文档解析失败异常

    当 YAML/JSON 文档格式错误或字段缺失时抛出，携带出错位置。
    """

    def __init__(
        self,
        source: str,
        reason: str,
        line: Optional[int] = None,
        column: Optional[int] = None,
    ):
        """
        初始化三角剖分解析异常

        Args:
            source: 文档来源（文件路径）
            reason: 解析失败原因
            line: 错误行号（可选）
            column: 错误列号（可选）
        """
        message = f"三角剖分文档解析失败 - {source}: {reason}"
        if line is not None:
            message += f" (行 {line}"
            if column is not None:
                message += f", 列 {column}"
            message += ")"

        super().__init__(message, source=source, line=line, column=column)


class MatrixParseError(InputException):
    """
    矩阵文本解析失败异常

    矩阵文本格式：行以 ';' 分隔，元素以 ',' 分隔，有理数写作 "p/q"。
    """

    def __init__(self, text: str, reason: str, position: Optional[int] = None):
        """
        初始化矩阵解析异常

        Args:
            text: 原始矩阵文本
            reason: 解析失败原因
            position: 出错字符位置（从 1 开始，可选）
        """
        context = {"text_preview": text[:100]}
        message = f"矩阵文本解析失败: {reason}"
        if position is not None:
            message += f" (位置 {position})"

        super().__init__(message, source="<matrix>", column=position, context=context)


class PolynomialParseError(InputException):
    """
    多项式文本解析失败异常

    当项格式错误、变量未知或输入不齐次时抛出。
    """

    def __init__(self, text: str, reason: str, position: Optional[int] = None):
        """
        初始化多项式解析异常

        Args:
            text: 原始多项式文本
            reason: 解析失败原因
            position: 出错字符位置（从 1 开始，可选）
        """
        context = {"text_preview": text[:100]}
        message = f"多项式解析失败: {reason}"
        if position is not None:
            message += f" (位置 {position})"

        super().__init__(message, source="<polynomial>", column=position, context=context)


class PartitionError(InputException):
    """划分参数非法（非递增、含非正元素、t ≤ d₁ 等）"""

    def __init__(self, partition: str, reason: str):
        """
        初始化划分参数异常

        Args:
            partition: 划分的文本形式
            reason: 非法原因
        """
        message = f"划分参数非法 - {partition}: {reason}"
        super().__init__(message, source="<partition>", context={"partition": partition})
