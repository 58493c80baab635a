"""
平面三角剖分

顶点坐标为有理数；边、内部边、内部顶点由三角形关联关系推导。
构造时校验：三角形非退化、每条边至多被两个三角形共享、所有顶点被使用、
三角形经由公共边连通、欧拉示性数 V − E + F = 1。
"""

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd
from typing import Dict, List, Sequence, Tuple

from exceptions.geometry import (
    DanglingEdgeError,
    DegenerateTriangleError,
    NotADiskError,
    NotInteriorVertexError,
)
from polyring import VARIABLES_R, HPoly

Point = Tuple[Fraction, Fraction]
Triple = Tuple[int, int, int]


def signed_area2(p: Point, q: Point, s: Point) -> Fraction:
    """两倍有向面积（逆时针为正）"""
    return (q[0] - p[0]) * (s[1] - p[1]) - (q[1] - p[1]) * (s[0] - p[0])


def line_coefficients(p: Point, q: Point) -> Tuple[int, int, int]:
    """
    过两点直线的齐次化方程系数 (a, b, c)：a·x + b·y + c·z

    系数为互素整数，首个非零系数为正。
    """
    raw = (p[1] - q[1], q[0] - p[0], p[0] * q[1] - q[0] * p[1])
    denominator = reduce(lambda a, b: a * b // gcd(a, b), (c.denominator for c in raw), 1)
    ints = [int(c * denominator) for c in raw]
    content = reduce(gcd, ints, 0)
    ints = [c // content for c in ints]
    if next(c for c in ints if c) < 0:
        ints = [-c for c in ints]
    return tuple(ints)


@dataclass(frozen=True)
class Edge:
    """边 (u, v)，u < v，附带共享它的三角形编号"""

    u: int
    v: int
    triangles: Tuple[int, ...]

    @property
    def key(self) -> Tuple[int, int]:
        return (self.u, self.v)

    @property
    def is_interior(self) -> bool:
        return len(self.triangles) == 2


@dataclass(frozen=True)
class EdgeForm:
    """内部边所在直线的齐次化一次型（互素整数系数、规范符号）"""

    edge: Tuple[int, int]
    form: HPoly


@dataclass(frozen=True)
class Triangulation:
    """
    Attributes:
        vertices: 顶点坐标
        triangles: 三角形（顶点下标三元组，保持文档中的顺序）
        edges: 全部边，按 (u, v) 排序
        interior_edges: 被两个三角形共享的边
        interior_vertices: 不在任何边界边上的顶点
        name: 名称
    """

    vertices: Tuple[Point, ...]
    triangles: Tuple[Triple, ...]
    edges: Tuple[Edge, ...]
    interior_edges: Tuple[Edge, ...]
    interior_vertices: Tuple[int, ...]
    name: str = ""

    @classmethod
    def build(
        cls, vertices: Sequence[Point], triangles: Sequence[Sequence[int]], name: str = ""
    ) -> "Triangulation":
        """
        校验并构造三角剖分

        Raises:
            DegenerateTriangleError: 下标重复/越界或面积为 0
            DanglingEdgeError: 边被超过两个三角形共享
            NotADiskError: 孤立顶点、不连通或欧拉示性数 ≠ 1
        """
        points = tuple((Fraction(x), Fraction(y)) for x, y in vertices)
        tris = tuple(tuple(int(i) for i in t) for t in triangles)
        nverts = len(points)

        for index, t in enumerate(tris):
            if len(t) != 3 or len(set(t)) != 3 or not all(0 <= i < nverts for i in t):
                raise DegenerateTriangleError(index, t)
            if signed_area2(points[t[0]], points[t[1]], points[t[2]]) == 0:
                raise DegenerateTriangleError(index, t)

        incidence: Dict[Tuple[int, int], List[int]] = {}
        for index, t in enumerate(tris):
            for a, b in ((t[0], t[1]), (t[1], t[2]), (t[0], t[2])):
                incidence.setdefault((min(a, b), max(a, b)), []).append(index)
        for key, owners in incidence.items():
            if len(owners) > 2:
                raise DanglingEdgeError(key, len(owners))

        used = {i for t in tris for i in t}
        if not tris or len(used) != nverts:
            raise NotADiskError(f"存在未被三角形使用的顶点（共 {nverts - len(used)} 个）")

        if not _connected(tris, incidence):
            raise NotADiskError("三角形不经由公共边连通")

        euler = nverts - len(incidence) + len(tris)
        if euler != 1:
            raise NotADiskError("欧拉示性数 ≠ 1", euler_characteristic=euler)

        edges = tuple(Edge(u, v, tuple(incidence[(u, v)])) for u, v in sorted(incidence))
        boundary_vertices = {i for e in edges if not e.is_interior for i in (e.u, e.v)}
        return cls(
            vertices=points,
            triangles=tris,
            edges=edges,
            interior_edges=tuple(e for e in edges if e.is_interior),
            interior_vertices=tuple(i for i in range(nverts) if i not in boundary_vertices),
            name=name,
        )

    # ========== 计数 ==========

    @property
    def f2(self) -> int:
        return len(self.triangles)

    @property
    def f1_interior(self) -> int:
        return len(self.interior_edges)

    @property
    def f0_interior(self) -> int:
        return len(self.interior_vertices)

    # ========== 几何 ==========

    def edge_coefficients(self, edge: Edge) -> Tuple[int, int, int]:
        return line_coefficients(self.vertices[edge.u], self.vertices[edge.v])

    def edge_form(self, edge: Edge) -> EdgeForm:
        return EdgeForm(edge.key, HPoly.linear(self.edge_coefficients(edge), VARIABLES_R))

    def edge_forms(self) -> Tuple[EdgeForm, ...]:
        """全部内部边的一次型，顺序与 interior_edges 一致"""
        return tuple(self.edge_form(e) for e in self.interior_edges)

    def is_interior_vertex(self, vertex: int) -> bool:
        return vertex in self.interior_vertices

    def totally_interior_edges(self) -> Tuple[Edge, ...]:
        """两端都是内部顶点的内部边"""
        inner = set(self.interior_vertices)
        return tuple(e for e in self.interior_edges if e.u in inner and e.v in inner)


def _connected(tris: Sequence[Triple], incidence: Dict[Tuple[int, int], List[int]]) -> bool:
    neighbours: Dict[int, List[int]] = {i: [] for i in range(len(tris))}
    for owners in incidence.values():
        if len(owners) == 2:
            a, b = owners
            neighbours[a].append(b)
            neighbours[b].append(a)
    seen = {0}
    queue = deque([0])
    while queue:
        current = queue.popleft()
        for nxt in neighbours[current]:
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return len(seen) == len(tris)


def slope_count(triangulation: Triangulation, vertex: int) -> int:
    """
    内部顶点处不同直线（斜率）的个数 n(v)

    Raises:
        NotInteriorVertexError: 顶点不是内部顶点
    """
    if not triangulation.is_interior_vertex(vertex):
        raise NotInteriorVertexError(vertex)
    lines = {
        triangulation.edge_coefficients(e)
        for e in triangulation.interior_edges
        if vertex in (e.u, e.v)
    }
    return len(lines)
