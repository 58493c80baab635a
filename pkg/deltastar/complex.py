"""
Δ_S 三角剖分

内置 8 顶点、8 三角形的 Δ_S 文档，构造时由几何重新推导九条内部边的一次型
并与期望列表逐一比对；任何不一致都会抛出 InternalConsistencyError。
"""

from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Dict, Tuple

from config.constants import DELTA_S_DOCUMENT
from exactla import QMatrix
from exceptions.verification import InternalConsistencyError
from polyring import VARIABLES_R, HPoly
from splinecore import Triangulation, load_triangulation_file

# 三角形编号（从 1 开始）对 → 公共边直线 (a, b, c)，即 a·x + b·y + c·z
EXPECTED_FORMS: Dict[Tuple[int, int], Tuple[int, int, int]] = {
    (1, 2): (1, -1, 0),  # ℓ12 = x − y
    (7, 8): (1, -1, 0),  # ℓ78
    (2, 3): (1, 1, -4),  # ℓ23 = x + y − 4z
    (4, 5): (1, 1, -4),  # ℓ45
    (3, 4): (1, -1, -2),  # ℓ34 = x − y − 2z
    (5, 6): (1, -1, -2),  # ℓ56
    (6, 7): (1, 1, -2),  # ℓ67 = x + y − 2z
    (1, 8): (1, 1, -2),  # ℓ18
    (2, 6): (0, 1, -1),  # ℓ26 = y − z
}

TOTALLY_INTERIOR_PAIR = (2, 6)

# 第 i 行：旧变量 i 在新坐标 (x̄, ȳ, z̄) 下的表达式
# 使 ℓ12 → x̄，ℓ67 → x̄ + ȳ，ℓ34 → z̄，ℓ23 → ȳ + z̄，ℓ26 → ȳ/2
CHANGE_OF_VARIABLES = QMatrix.from_rows(
    [
        ["3/2", "1/2", "-1/2"],
        ["1/2", "1/2", "-1/2"],
        ["1/2", "0", "-1/2"],
    ]
)


@dataclass(frozen=True)
class DeltaS:
    """
    Attributes:
        triangulation: Δ_S
        edge_forms: 三角形编号对（从 1 开始）→ 公共边的一次型
    """

    triangulation: Triangulation
    edge_forms: Dict[Tuple[int, int], HPoly]

    def form(self, first: int, second: int) -> HPoly:
        return self.edge_forms[(min(first, second), max(first, second))]


def _pair_of(edge) -> Tuple[int, int]:
    a, b = sorted(edge.triangles)
    return (a + 1, b + 1)


def check_delta_s(triangulation: Triangulation) -> DeltaS:
    """
    校验三角剖分是否就是 Δ_S，并返回带一次型的 DeltaS

    Raises:
        InternalConsistencyError: 内部边、一次型或全内部边与期望不符
    """
    forms: Dict[Tuple[int, int], HPoly] = {}
    for edge in triangulation.interior_edges:
        pair = _pair_of(edge)
        expected = EXPECTED_FORMS.get(pair)
        derived = triangulation.edge_coefficients(edge)
        if expected is None or derived != expected:
            raise InternalConsistencyError(
                "delta_s_edge_forms", detail=f"三角形对 {pair}: 推导 {derived}，期望 {expected}"
            )
        forms[pair] = HPoly.linear(derived, VARIABLES_R)
    if set(forms) != set(EXPECTED_FORMS):
        missing = sorted(set(EXPECTED_FORMS) - set(forms))
        raise InternalConsistencyError("delta_s_edge_forms", detail=f"缺少内部边 {missing}")

    inner = [_pair_of(e) for e in triangulation.totally_interior_edges()]
    if inner != [TOTALLY_INTERIOR_PAIR]:
        raise InternalConsistencyError("delta_s_totally_interior", detail=f"得到 {inner}")
    return DeltaS(triangulation, forms)


@lru_cache(maxsize=1)
def delta_s() -> DeltaS:
    """读取随仓库发布的 Δ_S 文档并校验"""
    return check_delta_s(load_triangulation_file(DELTA_S_DOCUMENT))


def original_forms(r: int) -> Tuple[list, list, HPoly]:
    """
    原坐标下定义 ε 的两组生成元与除数

    Returns:
        ([ℓ12^{r+1}, ℓ67^{r+1}], [ℓ23^{r+1}, ℓ34^{r+1}], ℓ26^{r+1})
    """
    complex_ = delta_s()
    power = r + 1
    first = [complex_.form(1, 2) ** power, complex_.form(6, 7) ** power]
    second = [complex_.form(2, 3) ** power, complex_.form(3, 4) ** power]
    return first, second, complex_.form(2, 6) ** power


def decomposition_value(r: int, d: int, epsilon_value: int) -> int:
    """dim C^r(Δ̂_S)_d 在 d = 2r+1 处的分解 C(d+2,2) + 4·C(r+2,2) + ε"""
    return comb(d + 2, 2) + 4 * comb(r + 2, 2) + epsilon_value
