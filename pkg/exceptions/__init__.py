"""
Spline Dimension Verifier - Custom Exception Hierarchy

This module provides a structured exception hierarchy for the verifier.
All exceptions carry a context dictionary for debugging and report output.

## Exception Categories

### Input Errors（输入异常）

#### data.py
- **TriangulationParseError**: Triangulation document is malformed (carries line/column)
- **MatrixParseError**: Matrix literal text is malformed
- **PolynomialParseError**: Polynomial text is malformed or not homogeneous
- **PartitionError**: Partition argument is not a valid partition for the requested t

### Algebra Errors（代数异常）

#### algebra.py
- **ShapeMismatchError**: Matrix shapes incompatible with the operation
- **SingularMatrixError**: Determinant is zero
- **NoLUError**: A leading principal minor vanishes
- **InconsistentSystemError**: Linear system has no solution
- **NotSymmetricError**: Symmetric input required
- **DegreeMismatchError**: Polynomial degrees or variable sets differ

### Geometry Errors（几何异常）

#### geometry.py
- **NotADiskError**: Complex is not a topological disk
- **DegenerateTriangleError**: Triangle with zero signed area
- **DanglingEdgeError**: Edge shared by more than two triangles
- **NotInteriorVertexError**: Interior vertex required

### Verification Errors（验证异常）

#### verification.py
- **NotInKSpaceError**: Polynomial is not in K(r)
- **SizeGuardError**: r above the desk-scale bound without --force
- **InternalConsistencyError**: An internal cross-check failed (implementation defect)
- **VerificationFailedError**: A claim did not hold

### Base Exception（基础异常）

#### base.py
- **SplineVerifyException**: Base exception for all custom exceptions
- **InputException**, **AlgebraException**, **GeometryException**,
  **VerificationException**, **ConfigurationException**: category bases

## Exit Codes（退出码）

The CLI maps categories to exit codes: InputException / GeometryException → 2,
SizeGuardError → 3, InternalConsistencyError / InconsistentSystemError → 4,
any failed claim → 1.

```python
from exceptions import NoLUError

try:
    V, U = lu_decompose(W)
except NoLUError as e:
    log(f"LU 失败: {e}", "WARNING")
    log(str(e.to_dict()), "DEBUG")
```
"""

from .algebra import (
    DegreeMismatchError,
    InconsistentSystemError,
    NoLUError,
    NotSymmetricError,
    ShapeMismatchError,
    SingularMatrixError,
)
from .base import (
    AlgebraException,
    ConfigurationException,
    GeometryException,
    InputException,
    SplineVerifyException,
    VerificationException,
)
from .data import (
    MatrixParseError,
    PartitionError,
    PolynomialParseError,
    TriangulationParseError,
)
from .geometry import (
    DanglingEdgeError,
    DegenerateTriangleError,
    NotADiskError,
    NotInteriorVertexError,
)
from .verification import (
    InternalConsistencyError,
    NotInKSpaceError,
    SizeGuardError,
    VerificationFailedError,
)

__all__ = [
    # Base
    "SplineVerifyException",
    "InputException",
    "AlgebraException",
    "GeometryException",
    "VerificationException",
    "ConfigurationException",
    # Input
    "TriangulationParseError",
    "MatrixParseError",
    "PolynomialParseError",
    "PartitionError",
    # Algebra
    "ShapeMismatchError",
    "SingularMatrixError",
    "NoLUError",
    "InconsistentSystemError",
    "NotSymmetricError",
    "DegreeMismatchError",
    # Geometry
    "NotADiskError",
    "DegenerateTriangleError",
    "DanglingEdgeError",
    "NotInteriorVertexError",
    # Verification
    "NotInKSpaceError",
    "SizeGuardError",
    "InternalConsistencyError",
    "VerificationFailedError",
]
