"""
Exact Linear Algebra Module - 精确有理线性代数

Arbitrary-precision rational dense linear algebra: the computational substrate
for every other package. No floating point anywhere.

## Components（组件列表）

### qmatrix.py
- **QMatrix**: immutable dense matrix of `fractions.Fraction`
- **exchange_matrix(p)**: anti-diagonal involution 𝒥
- text format "1,1/2;0,-3" (`QMatrix.from_text` / `to_text`)

### elimination.py
- **rref_rank_nullspace(M)**: rank plus canonical nullspace basis
- **rank / nullity / rref / row_space_basis / sparse_rank**
- **solve_exact(M, b)**, **inverse(M)**
- **det_ff(M)**: Bareiss fraction-free determinant

### lu.py
- **lu_decompose(M)**: Doolittle without pivoting (NoLUError / SingularMatrixError)
- **triangular_inverse(M, lower)**

### minors.py
- **minors(M, mode, k)**: leading principal, all up to order k, north-east anchored
"""

from .elimination import (
    det_ff,
    inverse,
    nullity,
    rank,
    row_space_basis,
    rref,
    rref_rank_nullspace,
    solve_exact,
    sparse_rank,
)
from .lu import has_lu, lu_decompose, triangular_inverse
from .minors import (
    ALL_UP_TO_ORDER,
    LEADING_PRINCIPAL,
    NORTH_EAST,
    enumerate_minors,
    minors,
)
from .qmatrix import QMatrix, Rational, exchange_matrix, to_rational

__all__ = [
    "QMatrix",
    "Rational",
    "to_rational",
    "exchange_matrix",
    "rref_rank_nullspace",
    "rref",
    "rank",
    "nullity",
    "row_space_basis",
    "solve_exact",
    "sparse_rank",
    "inverse",
    "det_ff",
    "lu_decompose",
    "has_lu",
    "triangular_inverse",
    "minors",
    "enumerate_minors",
    "LEADING_PRINCIPAL",
    "ALL_UP_TO_ORDER",
    "NORTH_EAST",
]
