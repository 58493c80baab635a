"""
Structured Matrix Module - 结构矩阵层

Binomial Toeplitz blocks and the matrices built from them, Schur-module
dimensions, total positivity, Roth's equation with triangular solutions, and
the coefficient parameterization of K(r).

## Components（组件列表）

### blocks.py
- **BlockSpec / block_spec(r)**, **m_block(r, k)**, **kernel_dim_total(r)**
- **n_block(r)**, **n_prime(r)**, **n_bar(r)**, **d_matrix(r)**, **u_matrix(r)**

### schur.py
- **schur_dim_det(λ, t)** and the independent **schur_dim_weyl(λ, t)**

### positivity.py
- **toeplitz_positivity(r, max_order)**
- **jn_is_symmetric(r)**, **jd_is_symmetric(r)**: 𝒥𝒩 与 𝒥𝒟 的对称性

### roth.py
- **roth_solvable**, **roth_triangular_solve**, **roth_lower_solve**
- **roth_operator_matrix(W)**, **triangular_roth_operator_rank(r)**
- **lu_question_search(trials, size, seed)** (disabled by default)

### params.py
- **param_extract(F)** → ParamMatrices with **relations()**
"""

from .blocks import (
    BlockSpec,
    block_spec,
    d_matrix,
    expected_kernel_dim_total,
    kernel_dim_total,
    m_block,
    n_bar,
    n_block,
    n_prime,
    u_matrix,
)
from .params import ParamMatrices, param_extract
from .positivity import (
    jd_is_symmetric,
    jn_is_symmetric,
    n_block_minors,
    north_east_minors,
    toeplitz_positivity,
    toeplitz_window,
    window_minors,
)
from .roth import (
    LUSearchResult,
    RothOperatorReport,
    jut_has_lu,
    lower_solution_holds,
    lu_question_search,
    random_matrix,
    roth_lower_solve,
    roth_operator_matrix,
    roth_residual,
    roth_solvable,
    roth_triangular_solve,
    triangular_roth_operator_rank,
    u_is_symmetric,
)
from .schur import (
    check_partition,
    conjugate,
    hook_dimension_formula,
    parse_partition,
    partitions,
    schur_dim_det,
    schur_dim_weyl,
    schur_matrix,
    weyl_product,
)

__all__ = [
    "BlockSpec",
    "block_spec",
    "m_block",
    "kernel_dim_total",
    "expected_kernel_dim_total",
    "n_block",
    "n_prime",
    "n_bar",
    "d_matrix",
    "u_matrix",
    "schur_dim_det",
    "schur_dim_weyl",
    "schur_matrix",
    "weyl_product",
    "conjugate",
    "check_partition",
    "parse_partition",
    "partitions",
    "hook_dimension_formula",
    "toeplitz_positivity",
    "toeplitz_window",
    "window_minors",
    "n_block_minors",
    "north_east_minors",
    "jn_is_symmetric",
    "jd_is_symmetric",
    "roth_solvable",
    "roth_triangular_solve",
    "roth_lower_solve",
    "roth_residual",
    "roth_operator_matrix",
    "triangular_roth_operator_rank",
    "RothOperatorReport",
    "lu_question_search",
    "LUSearchResult",
    "random_matrix",
    "lower_solution_holds",
    "jut_has_lu",
    "u_is_symmetric",
    "ParamMatrices",
    "param_extract",
]
