"""
精确有理矩阵

QMatrix 是系统中唯一的矩阵类型：行优先存储的 Fraction 元组，构造后不可变。
文本格式：行以 ';' 分隔，元素以 ',' 分隔，有理数写作 "p/q" 或整数，例如
"1,1/2;0,-3"。
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Sequence, Tuple, Union

from exceptions.algebra import ShapeMismatchError
from exceptions.data import MatrixParseError

Rational = Fraction
Scalar = Union[int, Fraction, str]


def to_rational(value: Scalar) -> Fraction:
    """
    将整数、Fraction 或 "p/q" 字符串转换为约分后的 Fraction

    Args:
        value: 待转换的值

    Returns:
        Fraction: 分母为正、已约分的有理数
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("布尔值不是有理数")
    if isinstance(value, (int, str)):
        return Fraction(value)
    raise TypeError(f"不支持的标量类型: {type(value).__name__}")


@dataclass(frozen=True)
class QMatrix:
    """
    稠密精确有理矩阵

    Attributes:
        rows: 行数（可为 0）
        cols: 列数（可为 0）
        entries: 行优先的元素序列，长度 = rows × cols
    """

    rows: int
    cols: int
    entries: Tuple[Fraction, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ShapeMismatchError("QMatrix", "行数和列数必须非负", (self.rows, self.cols))
        if len(self.entries) != self.rows * self.cols:
            raise ShapeMismatchError(
                "QMatrix",
                f"元素个数 {len(self.entries)} ≠ {self.rows}×{self.cols}",
                (self.rows, self.cols),
            )
        object.__setattr__(self, "entries", tuple(to_rational(x) for x in self.entries))

    # ========== 构造 ==========

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Scalar]], cols: int = None) -> "QMatrix":
        """
        由二维列表构造矩阵

        Args:
            rows: 行列表
            cols: 列数（仅在 rows 为空时用于确定 0×cols 形状）
        """
        nrows = len(rows)
        ncols = len(rows[0]) if nrows else (cols or 0)
        for i, row in enumerate(rows):
            if len(row) != ncols:
                raise ShapeMismatchError("from_rows", f"第 {i} 行长度 {len(row)} ≠ {ncols}")
        return cls(nrows, ncols, tuple(x for row in rows for x in row))

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[Scalar]], rows: int) -> "QMatrix":
        """由列向量列表构造 rows×len(columns) 矩阵"""
        for j, col in enumerate(columns):
            if len(col) != rows:
                raise ShapeMismatchError("from_columns", f"第 {j} 列长度 {len(col)} ≠ {rows}")
        ncols = len(columns)
        return cls(rows, ncols, tuple(columns[j][i] for i in range(rows) for j in range(ncols)))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "QMatrix":
        return cls(rows, cols, (Fraction(0),) * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> "QMatrix":
        return cls(n, n, tuple(Fraction(int(i == j)) for i in range(n) for j in range(n)))

    @classmethod
    def from_text(cls, text: str) -> "QMatrix":
        """
        解析矩阵文本

        Args:
            text: 形如 "1,2;3,4" 的文本

        Returns:
            QMatrix: 解析结果

        Raises:
            MatrixParseError: 格式错误时抛出，携带出错字符位置
        """
        if not text or not text.strip():
            raise MatrixParseError(text or "", "空矩阵文本")

        rows: List[List[Fraction]] = []
        offset = 0
        for row_text in text.split(";"):
            row: List[Fraction] = []
            entry_offset = offset
            for entry in row_text.split(","):
                token = entry.strip()
                if not token:
                    raise MatrixParseError(text, "空元素", entry_offset + 1)
                try:
                    value = Fraction(token)
                except (ValueError, ZeroDivisionError):
                    raise MatrixParseError(text, f"无法解析的有理数 '{token}'", entry_offset + 1)
                if "." in token or "e" in token.lower():
                    raise MatrixParseError(text, f"不接受小数写法 '{token}'", entry_offset + 1)
                row.append(value)
                entry_offset += len(entry) + 1
            if rows and len(row) != len(rows[0]):
                raise MatrixParseError(
                    text, f"第 {len(rows) + 1} 行有 {len(row)} 个元素，应为 {len(rows[0])}", offset + 1
                )
            rows.append(row)
            offset += len(row_text) + 1
        return cls.from_rows(rows)

    # ========== 访问 ==========

    @property
    def shape(self) -> Tuple[int, int]:
        return (self.rows, self.cols)

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, index: Tuple[int, int]) -> Fraction:
        i, j = index
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(f"下标 ({i}, {j}) 超出 {self.rows}×{self.cols}")
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> Tuple[Fraction, ...]:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def column(self, j: int) -> Tuple[Fraction, ...]:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def to_rows(self) -> List[List[Fraction]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def columns(self) -> List[Tuple[Fraction, ...]]:
        return [self.column(j) for j in range(self.cols)]

    def submatrix(self, row_indices: Iterable[int], col_indices: Iterable[int]) -> "QMatrix":
        rows = list(row_indices)
        cols = list(col_indices)
        return QMatrix(len(rows), len(cols), tuple(self[i, j] for i in rows for j in cols))

    # ========== 运算 ==========

    def transpose(self) -> "QMatrix":
        return QMatrix(
            self.cols,
            self.rows,
            tuple(self.entries[i * self.cols + j] for j in range(self.cols) for i in range(self.rows)),
        )

    @property
    def T(self) -> "QMatrix":  # noqa: N802
        return self.transpose()

    def _check_same_shape(self, other: "QMatrix", operation: str):
        if self.shape != other.shape:
            raise ShapeMismatchError(operation, f"{self.shape} vs {other.shape}", self.shape)

    def __add__(self, other: "QMatrix") -> "QMatrix":
        self._check_same_shape(other, "add")
        return QMatrix(self.rows, self.cols, tuple(a + b for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other: "QMatrix") -> "QMatrix":
        self._check_same_shape(other, "sub")
        return QMatrix(self.rows, self.cols, tuple(a - b for a, b in zip(self.entries, other.entries)))

    def __neg__(self) -> "QMatrix":
        return QMatrix(self.rows, self.cols, tuple(-a for a in self.entries))

    def scale(self, factor: Scalar) -> "QMatrix":
        c = to_rational(factor)
        return QMatrix(self.rows, self.cols, tuple(c * a for a in self.entries))

    def __matmul__(self, other: "QMatrix") -> "QMatrix":
        if self.cols != other.rows:
            raise ShapeMismatchError("matmul", f"{self.shape} @ {other.shape}", self.shape)
        other_cols = other.columns()
        entries = []
        for i in range(self.rows):
            row = self.row(i)
            for col in other_cols:
                entries.append(sum((a * b for a, b in zip(row, col) if a and b), Fraction(0)))
        return QMatrix(self.rows, other.cols, tuple(entries))

    def apply(self, vector: Sequence[Scalar]) -> Tuple[Fraction, ...]:
        """矩阵乘列向量"""
        if len(vector) != self.cols:
            raise ShapeMismatchError("apply", f"向量长度 {len(vector)} ≠ {self.cols}", self.shape)
        vec = [to_rational(v) for v in vector]
        return tuple(
            sum((a * b for a, b in zip(self.row(i), vec) if a and b), Fraction(0))
            for i in range(self.rows)
        )

    def hstack(self, other: "QMatrix") -> "QMatrix":
        if self.rows != other.rows:
            raise ShapeMismatchError("hstack", f"{self.shape} | {other.shape}", self.shape)
        return QMatrix.from_rows(
            [list(self.row(i)) + list(other.row(i)) for i in range(self.rows)],
            cols=self.cols + other.cols,
        )

    def vstack(self, other: "QMatrix") -> "QMatrix":
        if self.cols != other.cols:
            raise ShapeMismatchError("vstack", f"{self.shape} / {other.shape}", self.shape)
        return QMatrix(self.rows + other.rows, self.cols, self.entries + other.entries)

    @staticmethod
    def block(blocks: Sequence[Sequence["QMatrix"]]) -> "QMatrix":
        """按分块拼接矩阵，每一行分块的行数需一致，每一列分块的列数需一致"""
        result = None
        for block_row in blocks:
            row = block_row[0]
            for piece in block_row[1:]:
                row = row.hstack(piece)
            result = row if result is None else result.vstack(row)
        return result

    # ========== 判定 ==========

    def is_zero(self) -> bool:
        return not any(self.entries)

    def is_symmetric(self) -> bool:
        return self.is_square and self == self.transpose()

    def is_upper_triangular(self) -> bool:
        return all(self[i, j] == 0 for i in range(self.rows) for j in range(min(i, self.cols)))

    def is_lower_triangular(self) -> bool:
        return all(self[i, j] == 0 for i in range(self.rows) for j in range(i + 1, self.cols))

    # ========== 输出 ==========

    def to_text(self) -> str:
        return ";".join(",".join(str(x) for x in self.row(i)) for i in range(self.rows))

    def __str__(self) -> str:
        return self.to_text()


def exchange_matrix(p: int) -> QMatrix:
    """
    交换矩阵 𝒥（反对角线为 1）

    满足 J = J⁻¹ = Jᵀ；共轭 M ↦ JMJ 同时反转行序和列序。
    """
    if p < 1:
        raise ShapeMismatchError("exchange_matrix", f"p={p} 必须 ≥ 1")
    return QMatrix(p, p, tuple(Fraction(int(i + j == p - 1)) for i in range(p) for j in range(p)))
