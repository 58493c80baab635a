"""
Polynomial Ring Module - 齐次多项式与理想次数片

Graded pieces of homogeneous ideals in R = ℚ[x,y,z] and the subrings
A = ℚ[x,y], B = ℚ[y,z], handled as linear subspaces of coefficient space.

## Components（组件列表）

### monomials.py
- **MonomialBasis** / **monomial_basis(variables, degree)**: grevlex (x ≻ y ≻ z) ordered bases
- **VARIABLES_R / VARIABLES_A / VARIABLES_B**

### hpoly.py
- **HPoly**: homogeneous polynomial as a coefficient vector
- **partial_derivative(f, v)**, **linear_substitute(f, A)**, **swap_variables(f, u, v)**

### subspace.py
- **GradedSubspace**: canonical basis of a subspace of one graded piece

### ideals.py
- **mult_map(f, d)**, **ideal_piece(gens, d)**, **intersect(S1, S2)**, **colon_piece(gens, f, d)**
- **min_gens_count(gens, d)**, **generators_in_degree(I_d, I_{d-1})**, **hilbert_function**
- **minimal_generators(piece_of_degree, max_degree, variables)**

### parser.py
- **parse_hpoly(text, variables)**: "x^2*y - 3/2*z^3" style input, homogeneous only

Usage:
```python
from polyring import VARIABLES_A, colon_piece, parse_hpoly

gens = [parse_hpoly("x^2", VARIABLES_A), parse_hpoly("x^2 + 2*x*y + y^2", VARIABLES_A)]
piece = colon_piece(gens, parse_hpoly("y^2", VARIABLES_A), 1)
assert piece.dim >= 1
```
"""

from .hpoly import HPoly, linear_substitute, partial_derivative, swap_variables
from .ideals import (
    colon_piece,
    generators_in_degree,
    hilbert_function,
    ideal_piece,
    intersect,
    linear_multiples,
    min_gens_count,
    minimal_generators,
    mult_map,
    sum_spaces,
)
from .monomials import (
    VARIABLES_A,
    VARIABLES_B,
    VARIABLES_R,
    MonomialBasis,
    basis_size,
    monomial_basis,
)
from .parser import parse_hpoly
from .subspace import GradedSubspace

__all__ = [
    "HPoly",
    "MonomialBasis",
    "GradedSubspace",
    "VARIABLES_R",
    "VARIABLES_A",
    "VARIABLES_B",
    "monomial_basis",
    "basis_size",
    "partial_derivative",
    "linear_substitute",
    "swap_variables",
    "mult_map",
    "ideal_piece",
    "sum_spaces",
    "intersect",
    "colon_piece",
    "linear_multiples",
    "generators_in_degree",
    "min_gens_count",
    "hilbert_function",
    "minimal_generators",
    "parse_hpoly",
]
