"""
Spline Core Module - 三角剖分与样条空间维数

Planar triangulations, the Billera–Rose matrix in a fixed degree, the exact
dimension of C^r splines and the Alfeld–Schumaker lower bound.

## Components（组件列表）

### triangulation.py
- **Triangulation.build(vertices, triangles)**: validated topological disk
- **slope_count(T, v)**: distinct lines through an interior vertex

### loader.py
- **load_triangulation(doc)** / **load_triangulation_file(path)**: YAML or JSON documents
- **dump_triangulation(T)**: canonical YAML text

### billera_rose.py
- **billera_rose_matrix(T, r, d)**: degree-d piece of φ
- **spline_dim(T, r, d)**: nullity of φ_d plus HF(N, d)

### formulas.py
- **alfeld_schumaker(T, r, d)** → (L, σ), **sigma_closed_form(r)**
- **DimReport**, **dim_report**, **conjecture_report(T, r_max)**
"""

from .billera_rose import (
    SplineDimension,
    billera_rose_matrix,
    billera_rose_rows,
    boundary_sign,
    spline_dim,
)
from .formulas import (
    DimReport,
    alfeld_schumaker,
    binom2,
    conjecture_report,
    dim_report,
    report_degrees,
    sigma_closed_form,
    sigma_term,
)
from .loader import (
    dump_triangulation,
    load_triangulation,
    load_triangulation_file,
    parse_triangulation_text,
    triangulation_document,
)
from .triangulation import (
    Edge,
    EdgeForm,
    Triangulation,
    line_coefficients,
    signed_area2,
    slope_count,
)

__all__ = [
    "Triangulation",
    "Edge",
    "EdgeForm",
    "signed_area2",
    "line_coefficients",
    "slope_count",
    "load_triangulation",
    "load_triangulation_file",
    "parse_triangulation_text",
    "triangulation_document",
    "dump_triangulation",
    "SplineDimension",
    "billera_rose_matrix",
    "billera_rose_rows",
    "boundary_sign",
    "spline_dim",
    "DimReport",
    "dim_report",
    "conjecture_report",
    "report_degrees",
    "alfeld_schumaker",
    "sigma_term",
    "sigma_closed_form",
    "binom2",
]
