"""
无分数消元

秩、零空间、RREF、线性方程组和逆矩阵共用同一套消元核心：
先按行清分母得到整数行，再做保整消元（每次消元后除以行内容 gcd），
最后只在回代阶段使用 Fraction。行列式使用 Bareiss 算法。

主元选取规则固定为"按列顺序，取当前剩余行中第一个非零元"，保证输出确定。
"""

from fractions import Fraction
from functools import reduce
from math import gcd
from typing import Dict, List, Sequence, Tuple

from exceptions.algebra import InconsistentSystemError, ShapeMismatchError, SingularMatrixError

from .qmatrix import QMatrix

SparseRow = Dict[int, int]


def _lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


def _integer_rows(matrix: QMatrix) -> List[SparseRow]:
    """每行乘以分母的最小公倍数，得到稀疏整数行（行缩放不改变行空间）"""
    rows = []
    for i in range(matrix.rows):
        row = matrix.row(i)
        scale = reduce(_lcm, (x.denominator for x in row if x), 1)
        rows.append({j: int(x * scale) for j, x in enumerate(row) if x})
    return rows


def _primitive(row: SparseRow) -> SparseRow:
    content = reduce(gcd, row.values(), 0)
    if content > 1:
        return {j: v // content for j, v in row.items()}
    return row


def _echelon(rows: List[SparseRow], ncols: int) -> List[Tuple[int, SparseRow]]:
    """
    保整行阶梯化

    Args:
        rows: 稀疏整数行
        ncols: 列数

    Returns:
        按主元列升序排列的 (主元列, 主元行) 列表
    """
    pool = [row for row in rows if row]
    pivots: List[Tuple[int, SparseRow]] = []
    for col in range(ncols):
        if not pool:
            break
        index = next((k for k, row in enumerate(pool) if col in row), None)
        if index is None:
            continue
        pivot = pool.pop(index)
        pv = pivot[col]
        remaining = []
        for row in pool:
            a = row.get(col)
            if a is None:
                remaining.append(row)
                continue
            combined = {j: pv * v for j, v in row.items()}
            for j, v in pivot.items():
                value = combined.get(j, 0) - a * v
                if value:
                    combined[j] = value
                else:
                    combined.pop(j, None)
            if combined:
                remaining.append(_primitive(combined))
        pool = remaining
        pivots.append((col, pivot))
    return pivots


def rank(matrix: QMatrix) -> int:
    """矩阵的秩"""
    return len(_echelon(_integer_rows(matrix), matrix.cols))


def sparse_rank(rows: Sequence[Dict[int, int]], ncols: int) -> int:
    """
    稀疏整数行组成的矩阵的秩

    供大型稀疏矩阵（如 Billera–Rose 矩阵）直接使用，不经过稠密 QMatrix。
    """
    return len(_echelon([_primitive({j: v for j, v in row.items() if v}) for row in rows], ncols))


def rref(matrix: QMatrix) -> Tuple[List[Dict[int, Fraction]], Tuple[int, ...]]:
    """
    行最简形

    Returns:
        (非零行列表（稀疏 Fraction 行，主元为 1）, 主元列元组)
    """
    pivots = _echelon(_integer_rows(matrix), matrix.cols)
    reduced: List[Dict[int, Fraction]] = []
    for col, row in pivots:
        pv = row[col]
        reduced.append({j: Fraction(v, pv) for j, v in row.items()})
    pivot_cols = tuple(col for col, _ in pivots)

    # 回代：自下而上消去主元列上方的元素
    for i in range(len(reduced) - 1, -1, -1):
        col = pivot_cols[i]
        source = reduced[i]
        for k in range(i):
            factor = reduced[k].get(col)
            if not factor:
                continue
            target = reduced[k]
            for j, v in source.items():
                value = target.get(j, Fraction(0)) - factor * v
                if value:
                    target[j] = value
                else:
                    target.pop(j, None)
    return reduced, pivot_cols


def rref_rank_nullspace(matrix: QMatrix) -> Tuple[int, QMatrix]:
    """
    秩与零空间基

    零空间基以列向量给出，为自由变量基而非约化列阶梯形：每个自由列对应
    一个基向量，该自由坐标为 1、其余自由坐标为 0，主元坐标由 RREF 回代。
    基矩阵限制到自由列上是单位阵，因此由零空间唯一确定，可跨运行比较。

    Returns:
        (rank, nullspace_basis)，nullspace_basis 形状为 cols × (cols − rank)
    """
    reduced, pivot_cols = rref(matrix)
    pivot_set = set(pivot_cols)
    free_cols = [j for j in range(matrix.cols) if j not in pivot_set]
    basis = []
    for f in free_cols:
        vector = [Fraction(0)] * matrix.cols
        vector[f] = Fraction(1)
        for row, col in zip(reduced, pivot_cols):
            value = row.get(f)
            if value:
                vector[col] = -value
        basis.append(vector)
    return len(pivot_cols), QMatrix.from_columns(basis, matrix.cols)


def nullity(matrix: QMatrix) -> int:
    return matrix.cols - rank(matrix)


def row_space_basis(vectors: Sequence[Sequence[Fraction]], length: int) -> List[Tuple[Fraction, ...]]:
    """
    一组向量张成空间的规范基（RREF 的非零行）

    Args:
        vectors: 向量列表
        length: 向量长度

    Returns:
        规范基向量列表，按主元位置升序
    """
    if not vectors:
        return []
    reduced, _ = rref(QMatrix.from_rows([list(v) for v in vectors], cols=length))
    return [tuple(row.get(j, Fraction(0)) for j in range(length)) for row in reduced]


def solve_exact(matrix: QMatrix, rhs: Sequence[Fraction]) -> Tuple[Fraction, ...]:
    """
    求解 M·x = b，自由变量取 0

    Raises:
        ShapeMismatchError: b 的长度与行数不符
        InconsistentSystemError: 方程组无解
    """
    if len(rhs) != matrix.rows:
        raise ShapeMismatchError("solve_exact", f"右端长度 {len(rhs)} ≠ {matrix.rows}", matrix.shape)
    augmented = matrix.hstack(QMatrix.from_columns([list(rhs)], matrix.rows))
    reduced, pivot_cols = rref(augmented)
    if pivot_cols and pivot_cols[-1] == matrix.cols:
        raise InconsistentSystemError("solve_exact", matrix.shape)
    solution = [Fraction(0)] * matrix.cols
    for row, col in zip(reduced, pivot_cols):
        solution[col] = row.get(matrix.cols, Fraction(0))
    return tuple(solution)


def inverse(matrix: QMatrix) -> QMatrix:
    """Gauss–Jordan 求逆"""
    if not matrix.is_square:
        raise ShapeMismatchError("inverse", "需要方阵", matrix.shape)
    n = matrix.rows
    reduced, pivot_cols = rref(matrix.hstack(QMatrix.identity(n)))
    if len(pivot_cols) < n or pivot_cols[n - 1] >= n:
        raise SingularMatrixError("inverse", matrix.shape)
    return QMatrix.from_rows([[row.get(n + j, Fraction(0)) for j in range(n)] for row in reduced])


def det_ff(matrix: QMatrix) -> Fraction:
    """
    Bareiss 无分数消元求行列式

    先逐行乘以分母最小公倍数得到整数矩阵，消元过程中所有除法都是整除。

    Raises:
        ShapeMismatchError: 非方阵
    """
    if not matrix.is_square:
        raise ShapeMismatchError("det_ff", "需要方阵", matrix.shape)
    n = matrix.rows
    if n == 0:
        return Fraction(1)

    scales = 1
    a: List[List[int]] = []
    for i in range(n):
        row = matrix.row(i)
        scale = reduce(_lcm, (x.denominator for x in row if x), 1)
        scales *= scale
        a.append([int(x * scale) for x in row])

    sign = 1
    previous = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return Fraction(0)
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        pivot = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i = a[i]
            row_k = a[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot - aik * row_k[j]) // previous
            row_i[k] = 0
        previous = pivot
    return Fraction(sign * a[n - 1][n - 1], scales)
