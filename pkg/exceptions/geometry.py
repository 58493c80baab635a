"""
三角剖分几何/拓扑相关异常类
"""

from typing import Optional, Tuple

from .base import GeometryException


class NotADiskError(GeometryException):
    """三角剖分不是拓扑圆盘（不连通、欧拉示性数 ≠ 1 或存在孤立顶点）"""

    def __init__(self, reason: str, euler_characteristic: Optional[int] = None):
        """
        Args:
            reason: 失败原因
            euler_characteristic: 计算得到的 V − E + F（可选）
        """
        context = {}
        if euler_characteristic is not None:
            context["euler_characteristic"] = euler_characteristic
        super().__init__(f"三角剖分不是拓扑圆盘: {reason}", context=context)


class DegenerateTriangleError(GeometryException):
    """三角形退化（有向面积为 0 或顶点重复）"""

    def __init__(self, triangle: int, vertices: Tuple[int, int, int]):
        message = f"三角形退化 - 第 {triangle} 个三角形 {vertices}"
        super().__init__(message, triangle=triangle, context={"vertices": vertices})


class DanglingEdgeError(GeometryException):
    """一条边被超过两个三角形共享"""

    def __init__(self, edge: Tuple[int, int], count: int):
        message = f"边 {edge} 被 {count} 个三角形共享（最多 2 个）"
        super().__init__(message, context={"edge": edge, "count": count})


class NotInteriorVertexError(GeometryException):
    """要求内部顶点但给出的是边界顶点"""

    def __init__(self, vertex: int):
        super().__init__(f"顶点 {vertex} 不是内部顶点", vertex=vertex)
