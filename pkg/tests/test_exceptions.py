"""
异常处理测试

测试自定义异常类的基本功能和上下文信息。
"""

import pytest

from exceptions.algebra import (
    DegreeMismatchError,
    InconsistentSystemError,
    NoLUError,
    NotSymmetricError,
    ShapeMismatchError,
    SingularMatrixError,
)
from exceptions.base import (
    AlgebraException,
    ConfigurationException,
    GeometryException,
    InputException,
    SplineVerifyException,
    VerificationException,
)
from exceptions.data import (
    MatrixParseError,
    PartitionError,
    PolynomialParseError,
    TriangulationParseError,
)
from exceptions.geometry import (
    DanglingEdgeError,
    DegenerateTriangleError,
    NotADiskError,
    NotInteriorVertexError,
)
from exceptions.verification import (
    InternalConsistencyError,
    NotInKSpaceError,
    SizeGuardError,
    VerificationFailedError,
)


class TestBaseExceptions:
    """测试基础异常类"""

    def test_base_exception_basic(self):
        """测试基础异常类"""
        exc = SplineVerifyException("测试错误")
        assert str(exc) == "测试错误"
        assert exc.message == "测试错误"
        assert exc.context == {}

    def test_base_exception_with_context(self):
        """测试带上下文的异常"""
        exc = SplineVerifyException("测试错误", context={"r": 3, "d": 7})
        assert "r=3" in str(exc)
        assert "d=7" in str(exc)

    def test_input_exception_position(self):
        """测试输入异常携带位置"""
        exc = InputException("解析失败", source="a.yaml", line=3, column=5)
        assert exc.context == {"source": "a.yaml", "line": 3, "column": 5}

    def test_algebra_exception_shape(self):
        """测试代数异常携带形状"""
        exc = AlgebraException("形状错误", shape="2x3")
        assert "shape=2x3" in str(exc)

    def test_geometry_exception(self):
        """测试几何异常"""
        exc = GeometryException("几何错误", triangle=2, vertex=5)
        assert exc.context["triangle"] == 2
        assert exc.context["vertex"] == 5

    def test_verification_exception(self):
        """测试验证异常"""
        exc = VerificationException("验证错误", r=4, claim_id="k.dim")
        assert "claim_id=k.dim" in str(exc)

    def test_configuration_exception(self):
        """测试配置异常"""
        exc = ConfigurationException("配置错误", config_section="guards", config_key="max_r")
        assert "config_section=guards" in str(exc)
        assert "config_key=max_r" in str(exc)

    def test_exception_to_dict(self):
        """测试异常转换为字典"""
        exc = SplineVerifyException("测试错误", context={"r": 1})
        result = exc.to_dict()
        assert result["exception_type"] == "SplineVerifyException"
        assert result["message"] == "测试错误"
        assert result["context"] == {"r": 1}


class TestInputExceptions:
    """测试输入数据异常"""

    def test_triangulation_parse_error(self):
        """测试三角剖分解析异常带行列"""
        exc = TriangulationParseError("tri.yaml", "缺少 triangles", line=4, column=2)
        assert "tri.yaml" in str(exc)
        assert "行 4" in str(exc)
        assert exc.context["line"] == 4
        assert isinstance(exc, InputException)

    def test_matrix_parse_error(self):
        """测试矩阵解析异常"""
        exc = MatrixParseError("1,2;3", "行长度不一致", position=5)
        assert exc.context["column"] == 5
        assert exc.context["text_preview"] == "1,2;3"

    def test_polynomial_parse_error(self):
        """测试多项式解析异常"""
        exc = PolynomialParseError("x^2 + y", "输入不齐次", position=7)
        assert "位置 7" in str(exc)

    def test_partition_error(self):
        """测试分拆异常"""
        exc = PartitionError("1,2", "分拆必须非增")
        assert exc.context["partition"] == "1,2"


class TestAlgebraExceptions:
    """测试代数异常"""

    def test_shape_mismatch(self):
        """测试形状不匹配"""
        exc = ShapeMismatchError("matmul", "(2, 3) @ (2, 3)", (2, 3))
        assert "shape=2x3" in str(exc)
        assert isinstance(exc, AlgebraException)

    def test_singular_matrix(self):
        """测试奇异矩阵"""
        exc = SingularMatrixError("inverse", (2, 2))
        assert exc.context["operation"] == "inverse"

    def test_no_lu(self):
        """测试无 LU 分解"""
        exc = NoLUError(1, (2, 2))
        assert exc.context["minor_order"] == 1

    def test_other_algebra_errors(self):
        """测试其他代数异常"""
        assert isinstance(InconsistentSystemError("solve_exact"), AlgebraException)
        assert isinstance(NotSymmetricError("roth_lower_solve"), AlgebraException)
        assert "left=a" in str(DegreeMismatchError("add", "a", "b"))


class TestGeometryAndVerification:
    """测试几何与验证异常"""

    def test_geometry_errors(self):
        """测试几何异常的继承关系"""
        for exc in (
            NotADiskError("不连通", euler_characteristic=2),
            DegenerateTriangleError(0, (0, 1, 2)),
            DanglingEdgeError((0, 1), 3),
            NotInteriorVertexError(4),
        ):
            assert isinstance(exc, GeometryException)

    def test_size_guard(self):
        """测试规模保护异常"""
        exc = SizeGuardError(9, 6)
        assert "--force" in str(exc)
        assert exc.context["max_r"] == 6

    def test_internal_consistency(self):
        """测试内部一致性异常"""
        exc = InternalConsistencyError("exactness", r=2, detail="defect=1")
        assert "defect=1" in str(exc)
        assert exc.context["check"] == "exactness"

    def test_not_in_k_space(self):
        """测试 K(r) 成员异常"""
        exc = NotInKSpaceError(3, "x^3")
        assert exc.context["r"] == 3

    def test_verification_failed(self):
        """测试验证失败异常"""
        exc = VerificationFailedError("k.dim", "3", "2", r=3)
        assert exc.context["computed"] == "3"


class TestExceptionCatching:
    """测试异常捕获层次"""

    def test_catch_by_base(self):
        """测试用根异常捕获"""
        with pytest.raises(SplineVerifyException):
            raise SingularMatrixError("det")

    def test_catch_by_category(self):
        """测试用分类捕获"""
        with pytest.raises(InputException):
            raise PartitionError("0", "各部分必须为正整数")


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
