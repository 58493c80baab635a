"""
Δ_S 与 K(r) 测试

测试内置 Δ_S 的一次型、K(r) 维数、ε(r)、C/F 生成元以及各验证器。
"""

from math import comb

import pytest

from deltastar import (
    EXPECTED_FORMS,
    cf_generators,
    cf_generators_b,
    decomposition_value,
    derivative_image_dim,
    delta_s,
    epsilon,
    epsilon_transport,
    expected_generator_degrees,
    expected_k_dim,
    hilbert_values,
    k_space,
    koszul_hilbert,
    verify_colon_exclusions,
    verify_complete_intersection,
    verify_derivative_map,
    verify_hilbert_identity,
    verify_k_dim,
    verify_lower_bound,
    verify_min_degree,
    verify_slicing,
    verify_support_bound,
    verify_symmetry,
)
from exceptions.verification import NotInKSpaceError
from polyring import VARIABLES_R, HPoly, parse_hpoly
from splinecore import spline_dim


def y_power(r: int) -> HPoly:
    return HPoly.variable("y", VARIABLES_R) ** r


class TestDeltaS:
    """测试内置三角剖分"""

    def test_edge_forms(self):
        """测试九条内部边的一次型"""
        complex_ = delta_s()
        assert len(complex_.edge_forms) == len(EXPECTED_FORMS) == 9
        assert complex_.form(2, 6) == parse_hpoly("y - z")
        assert complex_.form(2, 1) == parse_hpoly("x - y")

    def test_decomposition_r1(self):
        """测试 d = 2r+1 处的分解式 10 + 12 + ε(1) = 23"""
        assert decomposition_value(1, 3, epsilon(1)) == 23
        assert spline_dim(delta_s().triangulation, 1, 3).dim == 23


class TestKSpace:
    """测试 K(r)"""

    @pytest.mark.parametrize("r", range(1, 13))
    def test_dimension(self, r):
        """测试 dim K(2n−1) = n，dim K(2n) = n+1（r ≤ 12）"""
        n = (r + 1) // 2
        assert k_space(r).dim == expected_k_dim(r) == (n if r % 2 else n + 1)
        assert verify_k_dim(r)

    @pytest.mark.parametrize("r,dim", [(1, 1), (2, 2), (3, 2), (4, 3)])
    def test_small_dimensions(self, r, dim):
        assert k_space(r).dim == dim

    def test_r1_basis(self):
        """测试 K(1) = span{y}"""
        assert k_space(1).polys() == [HPoly.variable("y", VARIABLES_R)]

    def test_y_power_in_k(self):
        """测试 y^r ∈ K(r)"""
        for r in range(1, 4):
            assert k_space(r).contains(y_power(r))

    def test_bad_r(self):
        """测试 r < 1"""
        with pytest.raises(ValueError):
            k_space(0)


class TestEpsilon:
    """测试 ε(r)"""

    @pytest.mark.parametrize("r", range(1, 9))
    def test_matches_k_dim(self, r):
        """测试原坐标下的 ε(r) 等于 dim K(r)（r ≤ 8）"""
        assert epsilon(r) == k_space(r).dim

    @pytest.mark.parametrize("r", [1, 2])
    def test_transport(self, r):
        """测试变量替换后恰好得到 K(r)"""
        assert epsilon_transport(r)


class TestGenerators:
    """测试商理想的极小生成元"""

    @pytest.mark.parametrize("r", [1, 2, 3])
    def test_degrees(self, r):
        """测试生成元次数"""
        assert cf_generators(r).degrees == expected_generator_degrees(r)
        assert cf_generators_b(r).degrees == expected_generator_degrees(r)

    def test_expected_degrees(self):
        """测试 r+1 奇偶对应的次数"""
        assert expected_generator_degrees(3) == (2, 2)
        assert expected_generator_degrees(4) == (2, 3)

    def test_koszul(self):
        """测试两变量完全交的 Hilbert 函数"""
        assert [koszul_hilbert(d, 2, 2) for d in range(5)] == [1, 2, 1, 0, 0]
        assert [koszul_hilbert(d, 1, 2) for d in range(4)] == [1, 1, 0, 0]


class TestVerifiers:
    """测试可执行验证器"""

    @pytest.mark.parametrize("r", [1, 2, 3])
    def test_ideal_statements(self, r):
        """测试完全交、Hilbert 恒等式、商排除与支撑界"""
        assert verify_complete_intersection(r)
        assert verify_hilbert_identity(r)
        assert verify_colon_exclusions(r)
        assert verify_support_bound(r)

    def test_hilbert_values_r3(self):
        """测试 r=3 的 Hilbert 值"""
        values = hilbert_values(3)
        assert values == {"single": 4, "joint": 0, "k_dim": 2}
        assert comb(5, 2) - values["k_dim"] == 2 * values["single"] - values["joint"]

    @pytest.mark.parametrize("r", range(1, 9))
    def test_symmetry_and_lower_bound(self, r):
        """测试 x↔z 对称性与维数下界（r ≤ 8）"""
        assert verify_symmetry(r)
        assert verify_lower_bound(r)

    @pytest.mark.parametrize("r", range(2, 9))
    def test_derivative_and_min_degree(self, r):
        """测试导数映射与最低生成次数（r ≤ 8）"""
        assert verify_derivative_map(r)
        assert verify_min_degree(r)
        assert derivative_image_dim(r) <= k_space(r - 1).dim

    def test_derivative_image_r3(self):
        """测试 r=3 的导数像落在 2 维的 K(2) 中"""
        assert k_space(2).dim == 2
        assert 0 <= derivative_image_dim(3) <= 2
        assert derivative_image_dim(2) <= 1

    def test_derivative_needs_r2(self):
        """测试 r = 1 时导数映射前置条件不满足"""
        with pytest.raises(ValueError):
            verify_derivative_map(1)

    @pytest.mark.parametrize("r", range(1, 9))
    def test_slicing(self, r):
        """测试切片：y^r 与 K(r) 的每个基元素（r ≤ 8）"""
        assert verify_slicing(y_power(r), r)
        for f in k_space(r).polys():
            assert verify_slicing(f, r)

    def test_slicing_rejects_outside_k(self):
        """测试 x^r 不属于 K(r)"""
        with pytest.raises(NotInKSpaceError):
            verify_slicing(HPoly.variable("x", VARIABLES_R) ** 3, 3)


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
