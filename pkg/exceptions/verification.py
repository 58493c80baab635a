"""
验证流程相关异常类

区分三类情况：输入不满足前置条件、规模保护拒绝、内部一致性错误。
"""

from typing import Optional

from .base import VerificationException


class NotInKSpaceError(VerificationException):
    """多项式不属于 K(r)"""

    def __init__(self, r: int, polynomial: str):
        message = f"多项式不属于 K({r}): {polynomial}"
        super().__init__(message, r=r, context={"polynomial": polynomial[:100]})


class SizeGuardError(VerificationException):
    """规模保护：r 超过上限且未指定 --force"""

    def __init__(self, r: int, max_r: int):
        message = f"r={r} 超过规模上限 {max_r}，如需继续请使用 --force"
        super().__init__(message, r=r, context={"max_r": max_r})


class InternalConsistencyError(VerificationException):
    """内部一致性检查失败（意味着实现缺陷而非数学反例）"""

    def __init__(self, check: str, r: Optional[int] = None, detail: Optional[str] = None):
        message = f"内部一致性检查失败 - {check}"
        if detail:
            message += f": {detail}"
        super().__init__(message, r=r, context={"check": check})


class VerificationFailedError(VerificationException):
    """某条结论验证未通过"""

    def __init__(self, claim_id: str, computed: str, expected: str, r: Optional[int] = None):
        message = f"验证失败 - {claim_id}: 计算值 {computed}, 期望值 {expected}"
        super().__init__(
            message,
            r=r,
            claim_id=claim_id,
            context={"computed": computed, "expected": expected},
        )
