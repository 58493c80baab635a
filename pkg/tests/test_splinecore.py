"""
样条核心测试

测试三角剖分校验、文档读写、Billera–Rose 维数与 Alfeld–Schumaker 公式。
"""

from math import comb

import pytest

from config.constants import DATA_DIR, DELTA_S_DOCUMENT
from exceptions.data import TriangulationParseError
from exceptions.geometry import (
    DanglingEdgeError,
    DegenerateTriangleError,
    NotADiskError,
    NotInteriorVertexError,
)
from deltastar import decomposition_value, epsilon
from splinecore import (
    Triangulation,
    alfeld_schumaker,
    billera_rose_matrix,
    conjecture_report,
    dim_report,
    dump_triangulation,
    load_triangulation,
    load_triangulation_file,
    parse_triangulation_text,
    report_degrees,
    sigma_closed_form,
    sigma_term,
    slope_count,
    spline_dim,
)

PINWHEEL_VERTICES = [(0, 0), (1, 0), (1, 2), (-1, 1), (-2, -1), (1, -1)]
PINWHEEL_TRIANGLES = [[0, 1, 2], [0, 2, 3], [0, 3, 4], [0, 4, 5], [0, 5, 1]]


@pytest.fixture(scope="module")
def delta_s_tri():
    return load_triangulation_file(DELTA_S_DOCUMENT)


@pytest.fixture
def single_triangle():
    return load_triangulation_file(DATA_DIR / "single_triangle.yaml")


@pytest.fixture
def square_diagonal():
    return load_triangulation_file(DATA_DIR / "square_diagonal.yaml")


@pytest.fixture
def pinwheel():
    return Triangulation.build(PINWHEEL_VERTICES, PINWHEEL_TRIANGLES, name="pinwheel")


class TestTriangulation:
    """测试三角剖分构造与计数"""

    def test_counts(self, single_triangle, square_diagonal, delta_s_tri):
        """测试 f₂、f₁⁰、f₀⁰"""
        assert (single_triangle.f2, single_triangle.f1_interior, single_triangle.f0_interior) == (1, 0, 0)
        assert (square_diagonal.f2, square_diagonal.f1_interior, square_diagonal.f0_interior) == (2, 1, 0)
        assert (delta_s_tri.f2, delta_s_tri.f1_interior, delta_s_tri.f0_interior) == (8, 9, 2)

    def test_slope_count(self, delta_s_tri, pinwheel):
        """测试内部顶点处的斜率数"""
        assert [slope_count(delta_s_tri, v) for v in delta_s_tri.interior_vertices] == [3, 3]
        assert slope_count(pinwheel, 0) == 4

    def test_slope_count_boundary_vertex(self, delta_s_tri):
        """测试边界顶点被拒绝"""
        with pytest.raises(NotInteriorVertexError):
            slope_count(delta_s_tri, 0)

    def test_degenerate_triangle(self):
        """测试共线三角形"""
        with pytest.raises(DegenerateTriangleError):
            Triangulation.build([(0, 0), (1, 1), (2, 2)], [[0, 1, 2]])

    def test_dangling_edge(self):
        """测试一条边被三个三角形共享"""
        vertices = [(0, 0), (1, 0), (0, 1), (1, -1), (1, 1)]
        with pytest.raises(DanglingEdgeError):
            Triangulation.build(vertices, [[0, 1, 2], [0, 1, 3], [0, 1, 4]])

    def test_not_connected(self):
        """测试只共享顶点的两个三角形"""
        vertices = [(0, 0), (1, 0), (0, 1), (-1, 0), (0, -1)]
        with pytest.raises(NotADiskError):
            Triangulation.build(vertices, [[0, 1, 2], [0, 3, 4]])

    def test_unused_vertex(self):
        """测试孤立顶点"""
        with pytest.raises(NotADiskError):
            Triangulation.build([(0, 0), (1, 0), (0, 1), (5, 5)], [[0, 1, 2]])


class TestLoader:
    """测试三角剖分文档读写"""

    def test_dump_and_reload(self, delta_s_tri):
        """测试导出后重新读入得到同一三角剖分"""
        again = parse_triangulation_text(dump_triangulation(delta_s_tri))
        assert again.vertices == delta_s_tri.vertices
        assert again.triangles == delta_s_tri.triangles

    def test_parsed_document(self):
        """测试直接由文档字典构造"""
        doc = {"vertices": [[0, 0], [1, 0], [1, 1], [0, 1]], "triangles": [[0, 1, 2], [0, 2, 3]]}
        tri = load_triangulation(doc)
        assert tri.f2 == 2
        with pytest.raises(TriangulationParseError):
            load_triangulation({"vertices": [[0, 0]]})

    def test_json_document(self):
        """测试 JSON 文档"""
        text = '{"vertices": [[0, 0], ["1/2", 0], [0, 1]], "triangles": [[0, 1, 2]]}'
        tri = parse_triangulation_text(text)
        assert tri.f2 == 1

    def test_syntax_error_has_position(self):
        """测试 YAML 语法错误携带行号"""
        with pytest.raises(TriangulationParseError) as exc_info:
            parse_triangulation_text("name: broken\nvertices: [\n")
        assert exc_info.value.context.get("line") is not None

    def test_missing_field(self):
        """测试缺少 triangles 字段"""
        with pytest.raises(TriangulationParseError) as exc_info:
            parse_triangulation_text("vertices:\n  - [0, 0]\n")
        assert "triangles" in exc_info.value.message

    def test_decimal_coordinate_rejected(self):
        """测试小数坐标被拒绝"""
        text = 'vertices:\n  - ["0.5", 0]\n  - [1, 0]\n  - [0, 1]\ntriangles:\n  - [0, 1, 2]\n'
        with pytest.raises(TriangulationParseError) as exc_info:
            parse_triangulation_text(text)
        assert exc_info.value.context["line"] == 2

    def test_file(self, tmp_path):
        """测试从文件读取"""
        path = tmp_path / "tri.yaml"
        path.write_text("vertices: [[0, 0], [1, 0], [0, 1]]\ntriangles: [[0, 1, 2]]\n", encoding="utf-8")
        assert load_triangulation_file(path).f2 == 1

    def test_missing_file(self, tmp_path):
        """测试文件不存在"""
        with pytest.raises(OSError):
            load_triangulation_file(tmp_path / "missing.yaml")


class TestSplineDimension:
    """测试 Billera–Rose 维数"""

    def test_matrix_shape(self, delta_s_tri):
        """测试 Δ_S、r=1、d=3 的矩阵为 90×107"""
        assert billera_rose_matrix(delta_s_tri, 1, 3).shape == (90, 107)

    def test_delta_s_r1_d3(self, delta_s_tri):
        """测试 dim C¹(Δ̂_S)₃ = 23"""
        result = spline_dim(delta_s_tri, 1, 3)
        assert result.dim == 23
        assert result.exactness_defect == 0

    @pytest.mark.parametrize("r,d", [(0, 0), (1, 2), (2, 4)])
    def test_single_triangle(self, single_triangle, r, d):
        """测试单个三角形的维数为 C(d+2,2)"""
        assert spline_dim(single_triangle, r, d).dim == comb(d + 2, 2)

    def test_square_diagonal(self, square_diagonal):
        """测试对角线剖分的正方形"""
        assert spline_dim(square_diagonal, 0, 1).dim == 4
        for r, d in [(0, 1), (1, 3), (2, 5)]:
            assert spline_dim(square_diagonal, r, d).dim == alfeld_schumaker(square_diagonal, r, d)[0]

    def test_orientation_independent(self, delta_s_tri):
        """测试翻转部分三角形的定向不改变维数"""
        plain = spline_dim(delta_s_tri, 1, 3)
        flipped = spline_dim(delta_s_tri, 1, 3, flipped=[0, 3, 5])
        assert flipped.dim == plain.dim
        assert flipped.hf_n == plain.hf_n

    def test_pinwheel_matches_lower_bound(self, pinwheel):
        """测试单个内部顶点的星形剖分与下界一致"""
        assert spline_dim(pinwheel, 1, 4).dim == alfeld_schumaker(pinwheel, 1, 4)[0]


class TestFormulas:
    """测试 Alfeld–Schumaker 公式与 σ 项"""

    def test_delta_s_r1_d3(self, delta_s_tri):
        """测试 L(Δ_S,1,3) = 23，σ = 0"""
        assert alfeld_schumaker(delta_s_tri, 1, 3) == (23, 0)

    def test_sigma_closed_form(self, delta_s_tri):
        """测试 σ 求和与闭式一致（r = 1..10）"""
        for r in range(1, 11):
            _, sigma = alfeld_schumaker(delta_s_tri, r, 3 * r + 1)
            assert sigma == sigma_closed_form(r)
        assert sigma_closed_form(2) == 2

    def test_sigma_term(self):
        """测试单顶点 σᵢ"""
        assert sigma_term(1, 3) == 0
        assert sigma_term(2, 3) == 1
        assert sigma_term(3, 2) == 3 + 2 + 1

    def test_report_degrees(self):
        """测试抽样次数"""
        assert report_degrees(1) == [2, 3, 4]
        assert report_degrees(2) == [4, 5, 7]

    def test_conjecture_report_r1(self, delta_s_tri):
        """测试 r=1：d=2 不等，d=3、d=4 相等"""
        reports = {rep.d: rep for rep in conjecture_report(delta_s_tri, 1)}
        assert not reports[2].equal
        assert reports[2].L_value == 9
        assert reports[3].equal
        assert reports[4].equal

    @pytest.mark.parametrize("r", [1, 2, 3, 4])
    def test_formula_holds_at_2r_plus_1(self, delta_s_tri, r):
        """测试 d = 2r+1 时维数等于公式值，且与分解式一致"""
        expected = decomposition_value(r, 2 * r + 1, epsilon(r))
        report = dim_report(delta_s_tri, r, 2 * r + 1, expected)
        assert report.equal
        assert report.dim_spline == report.decomposition

    @pytest.mark.parametrize("r,dim,lower", [(2, 27, 26), (3, 52, 50)])
    def test_bound_is_sharp_at_2r(self, delta_s_tri, r, dim, lower):
        """测试 d = 2r 时维数严格大于公式值"""
        report = dim_report(delta_s_tri, r, 2 * r)
        assert (report.dim_spline, report.L_value) == (dim, lower)
        assert not report.equal

    @pytest.mark.parametrize("r", [1, 2, 3])
    def test_formula_holds_at_3r_plus_1(self, delta_s_tri, r):
        """测试 d = 3r+1 时维数等于公式值"""
        assert dim_report(delta_s_tri, r, 3 * r + 1).equal

    @pytest.mark.parametrize("r,dim", [(2, 47), (3, 78)])
    def test_decomposition_values(self, r, dim):
        """测试分解式 C(2r+3,2) + 4·C(r+2,2) + ε(r)"""
        assert decomposition_value(r, 2 * r + 1, epsilon(r)) == dim

    def test_conjecture_report_bad_range(self, delta_s_tri):
        """测试 r_max < 1"""
        with pytest.raises(ValueError):
            conjecture_report(delta_s_tri, 0)


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
