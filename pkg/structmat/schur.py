"""
Schur 模维数

schur_dim_det 取 s×s 二项式矩阵 M_{i,j} = C(t, d_j + i − j) 的行列式；
schur_dim_weyl 是独立的 Weyl 乘积公式。二项式行列式按外幂展开，
因此它给出的是共轭分拆的 Weyl 维数，Weyl 一侧先取共轭再求积。
"""

from fractions import Fraction
from math import comb
from typing import Iterator, List, Sequence, Tuple

from exactla import QMatrix, det_ff
from exceptions.data import PartitionError

Partition = Tuple[int, ...]


def _binom(t: int, k: int) -> int:
    return comb(t, k) if 0 <= k <= t else 0


def _text(parts: Sequence[int]) -> str:
    return ",".join(str(p) for p in parts)


def check_partition(partition: Sequence[int], t: int) -> Partition:
    """
    校验分拆 d₁ ≥ … ≥ d_s > 0 且 t > d₁

    Raises:
        PartitionError: 不满足条件
    """
    parts = tuple(int(p) for p in partition)
    if not parts:
        raise PartitionError(_text(parts), "分拆不能为空")
    if any(p <= 0 for p in parts):
        raise PartitionError(_text(parts), "各部分必须为正整数")
    if any(a < b for a, b in zip(parts, parts[1:])):
        raise PartitionError(_text(parts), "分拆必须非增")
    if t <= parts[0]:
        raise PartitionError(_text(parts), f"需要 t > d₁，得到 t={t}")
    return parts


def parse_partition(text: str) -> Partition:
    """'2,1' → (2, 1)"""
    try:
        return tuple(int(piece) for piece in text.split(",") if piece.strip())
    except ValueError:
        raise PartitionError(text, "分拆必须是逗号分隔的整数")


def conjugate(partition: Sequence[int]) -> Partition:
    """共轭分拆"""
    if not partition:
        return ()
    return tuple(sum(1 for p in partition if p > i) for i in range(partition[0]))


def schur_matrix(partition: Sequence[int], t: int) -> QMatrix:
    """M_{i,j} = C(t, d_j + i − j)"""
    parts = check_partition(partition, t)
    s = len(parts)
    return QMatrix.from_rows([[_binom(t, parts[j] + i - j) for j in range(s)] for i in range(s)])


def schur_dim_det(partition: Sequence[int], t: int) -> int:
    """二项式行列式给出的维数"""
    value = det_ff(schur_matrix(partition, t))
    return int(value)


def weyl_product(partition: Sequence[int], t: int) -> int:
    """Weyl 维数公式 Π_{i<j} (λ_i − λ_j + j − i)/(j − i)，λ 补零到长度 t"""
    padded = list(partition) + [0] * (t - len(partition))
    value = Fraction(1)
    for i in range(t):
        for j in range(i + 1, t):
            value *= Fraction(padded[i] - padded[j] + j - i, j - i)
    return int(value)


def schur_dim_weyl(partition: Sequence[int], t: int) -> int:
    """独立预言机：对共轭分拆应用 Weyl 乘积公式"""
    parts = check_partition(partition, t)
    return weyl_product(conjugate(parts), t)


def hook_dimension_formula(t: int) -> Fraction:
    """(2,1) 的闭式维数 t(t−1)(t+1)/3"""
    return Fraction(t * (t - 1) * (t + 1), 3)


def partitions(max_parts: int, max_part: int) -> Iterator[Partition]:
    """枚举 s ≤ max_parts、d₁ ≤ max_part 的所有分拆（字典序降序）"""

    def extend(prefix: List[int], limit: int) -> Iterator[Partition]:
        if prefix:
            yield tuple(prefix)
        if len(prefix) == max_parts:
            return
        for part in range(limit, 0, -1):
            yield from extend(prefix + [part], part)

    yield from extend([], max_part)
