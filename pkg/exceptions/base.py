"""
基础异常类定义

提供样条维数验证系统的根异常类和主要分类。
"""

from typing import Any, Dict, Optional


class SplineVerifyException(Exception):
    """
    样条维数验证系统基础异常类

    所有自定义异常的父类，提供统一的异常接口和上下文信息存储。
    """

    def __init__(self, message: str, context: Optional[Dict[str, Any]] = None):
        """
        初始化异常

        Args:
            message: 错误消息
            context: 额外的上下文信息字典（如 r、d、矩阵形状等）
        """
        super().__init__(message)
        self.message = message
        self.context = context or {}

    def __str__(self) -> str:
        """提供包含上下文的详细错误信息"""
        if self.context:
            context_str = ", ".join(f"{k}={v}" for k, v in self.context.items())
            return f"{self.message} [{context_str}]"
        return self.message

    def to_dict(self) -> Dict[str, Any]:
        """将异常转换为字典，便于日志记录和报告输出"""
        return {
            "exception_type": self.__class__.__name__,
            "message": self.message,
            "context": self.context,
        }


def _merged(context: Optional[Dict[str, Any]], **fields: Any) -> Dict[str, Any]:
    """把非 None 的字段并入上下文"""
    merged = dict(context or {})
    merged.update({key: value for key, value in fields.items() if value is not None})
    return merged


class InputException(SplineVerifyException):
    """
    输入相关异常（文件读取、文本解析、参数格式错误等）

    source 为文件路径或 "<string>"，line / column 从 1 开始。
    """

    def __init__(
        self,
        message: str,
        source: Optional[str] = None,
        line: Optional[int] = None,
        column: Optional[int] = None,
        context: Optional[Dict[str, Any]] = None,
    ):
        super().__init__(message, _merged(context, source=source, line=line, column=column))


class AlgebraException(SplineVerifyException):
    """精确线性代数/多项式运算异常，shape 形如 "3x4" """

    def __init__(
        self, message: str, shape: Optional[str] = None, context: Optional[Dict[str, Any]] = None
    ):
        super().__init__(message, _merged(context, shape=shape))


class GeometryException(SplineVerifyException):
    """三角剖分几何/拓扑异常（非圆盘、退化三角形、悬挂边等）"""

    def __init__(
        self,
        message: str,
        triangle: Optional[int] = None,
        vertex: Optional[int] = None,
        context: Optional[Dict[str, Any]] = None,
    ):
        super().__init__(message, _merged(context, triangle=triangle, vertex=vertex))


class VerificationException(SplineVerifyException):
    """验证流程异常（验证失败、规模保护、内部一致性错误等）"""

    def __init__(
        self,
        message: str,
        r: Optional[int] = None,
        claim_id: Optional[str] = None,
        context: Optional[Dict[str, Any]] = None,
    ):
        super().__init__(message, _merged(context, r=r, claim_id=claim_id))


class ConfigurationException(SplineVerifyException):
    """
    配置相关异常

    Args:
        message: 错误消息
        config_section: 相关的配置节，如 "run"
        config_key: 相关的配置键，如 "format"
        context: 额外的上下文信息
    """

    def __init__(
        self,
        message: str,
        config_section: Optional[str] = None,
        config_key: Optional[str] = None,
        context: Optional[Dict[str, Any]] = None,
    ):
        super().__init__(
            message, _merged(context, config_section=config_section, config_key=config_key)
        )
