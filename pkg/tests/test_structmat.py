"""
结构矩阵测试

测试二项式块、𝒰、Schur 维数、全正性、Roth 方程与系数参数化。
"""

import random
from fractions import Fraction

import pytest

from deltastar import k_space
from exactla import QMatrix, det_ff, exchange_matrix, has_lu, rank
from exceptions.algebra import NotSymmetricError, ShapeMismatchError
from exceptions.base import ConfigurationException
from exceptions.data import PartitionError
from exceptions.verification import NotInKSpaceError
from polyring import VARIABLES_R, HPoly
from structmat import (
    block_spec,
    check_partition,
    conjugate,
    d_matrix,
    expected_kernel_dim_total,
    hook_dimension_formula,
    jd_is_symmetric,
    jn_is_symmetric,
    jut_has_lu,
    kernel_dim_total,
    lower_solution_holds,
    lu_question_search,
    m_block,
    n_block,
    n_block_minors,
    n_prime,
    param_extract,
    parse_partition,
    partitions,
    random_matrix,
    roth_lower_solve,
    roth_operator_matrix,
    roth_residual,
    roth_solvable,
    roth_triangular_solve,
    schur_dim_det,
    schur_dim_weyl,
    toeplitz_positivity,
    triangular_roth_operator_rank,
    u_is_symmetric,
    u_matrix,
)


class TestBlocks:
    """测试二项式 Toeplitz 块"""

    def test_block_spec(self):
        """测试 n、p 与 m 系数"""
        spec = block_spec(3)
        assert (spec.n, spec.p) == (2, 2)
        assert spec.m_coeffs == (1, 4, 6, 4, 1)
        assert spec.m(-1) == 0 and spec.m(5) == 0
        assert block_spec(4).p == 3
        with pytest.raises(ShapeMismatchError):
            block_spec(0)

    def test_m_blocks_r3(self):
        """测试 r=3 的 M(2)、M(3)"""
        assert m_block(3, 2).to_rows() == [[6, 4, 1], [4, 6, 4]]
        assert m_block(3, 3).to_rows() == [[6, 4, 1, 0], [4, 6, 4, 1]]
        with pytest.raises(ShapeMismatchError):
            m_block(3, 1)

    def test_m_block_r2(self):
        """测试 r=2、k=1"""
        assert m_block(2, 1).to_rows() == [[3, 3]]

    @pytest.mark.parametrize("r,total", [(1, 1), (2, 3), (3, 3), (4, 6), (5, 6)])
    def test_kernel_dim_total(self, r, total):
        """测试 M(k) 核维数之和"""
        assert kernel_dim_total(r) == expected_kernel_dim_total(r) == total

    @pytest.mark.parametrize("r", range(1, 13))
    def test_kernel_dim_total_closed_form(self, r):
        """测试 n(n+1)/2（r 奇）与 (n+1)(n+2)/2（r 偶），且每个 M(k) 秩为 n（r ≤ 12）"""
        n = (r + 1) // 2
        expected = n * (n + 1) // 2 if r % 2 else (n + 1) * (n + 2) // 2
        assert kernel_dim_total(r) == expected
        for k in block_spec(r).k_range:
            assert rank(m_block(r, k)) == n

    def test_n_block(self):
        """测试 𝒩 与 𝒩′"""
        assert n_block(3).to_rows() == [[6, 4], [4, 6]]
        assert det_ff(n_block(3)) == 20
        assert n_block(2).to_rows() == [[3]]
        assert n_prime(2).to_rows() == [[0, Fraction(1, 3)], [-1, 0]]
        with pytest.raises(ShapeMismatchError):
            n_prime(3)

    def test_d_matrix(self):
        """测试 𝒟 为单位下三角"""
        d = d_matrix(4)
        assert d.to_rows() == [[1, 0, 0], [5, 1, 0], [10, 5, 1]]

    @pytest.mark.parametrize("r", range(1, 13))
    def test_jn_and_jd_symmetric(self, r):
        """测试 𝒥𝒩 与 𝒥𝒟 对称（r ≤ 12）"""
        assert jn_is_symmetric(r)
        assert jd_is_symmetric(r)
        assert d_matrix(r).is_lower_triangular()

    def test_u_matrix_r3(self):
        """测试 r=3 的 𝒰"""
        assert u_matrix(3).to_rows() == [
            [-1, Fraction(-1, 2)],
            [Fraction(-1, 2), Fraction(-1, 5)],
        ]

    @pytest.mark.parametrize("r", range(1, 13))
    def test_u_symmetric_and_lu(self, r):
        """测试 𝒰 对称且 𝒥𝒰𝒥 有 LU 分解（r ≤ 12）"""
        assert u_is_symmetric(r)
        assert jut_has_lu(r)


class TestSchur:
    """测试 Schur 模维数"""

    def test_examples(self):
        """测试小例子"""
        assert schur_dim_det((1,), 5) == schur_dim_weyl((1,), 5) == 5
        assert schur_dim_det((2, 1), 3) == schur_dim_weyl((2, 1), 3) == 8
        assert schur_dim_det((2, 2), 4) == schur_dim_weyl((2, 2), 4) == 20

    def test_hook(self):
        """测试 (2,1) 的闭式"""
        for t in range(3, 8):
            assert schur_dim_det((2, 1), t) == hook_dimension_formula(t)

    def test_all_small_partitions(self):
        """测试 s ≤ 4、d₁ ≤ 5、t ≤ 8 的全部分拆上行列式与 Weyl 公式一致"""
        cases = 0
        for partition in partitions(4, 5):
            for t in range(partition[0] + 1, 9):
                assert schur_dim_det(partition, t) == schur_dim_weyl(partition, t)
                cases += 1
        assert cases >= 300

    def test_n_block_is_rectangle(self):
        """测试 det 𝒩 等于矩形分拆的维数且为正（r ≤ 9）"""
        for r in range(1, 10):
            spec = block_spec(r)
            value = det_ff(n_block(r))
            assert value == schur_dim_weyl((spec.p,) * spec.n, r + 1)
            assert value > 0

    def test_conjugate(self):
        """测试共轭分拆"""
        assert conjugate((3, 1)) == (2, 1, 1)
        assert conjugate(()) == ()

    @pytest.mark.parametrize("partition,t", [((1, 2), 4), ((2, 0), 4), ((3,), 3), ((), 2)])
    def test_bad_partitions(self, partition, t):
        """测试非法分拆"""
        with pytest.raises(PartitionError):
            check_partition(partition, t)

    def test_parse_partition(self):
        """测试分拆文本解析"""
        assert parse_partition("2,1") == (2, 1)
        with pytest.raises(PartitionError):
            parse_partition("2,a")


class TestPositivity:
    """测试全正性"""

    @pytest.mark.parametrize("r", range(1, 9))
    def test_positive(self, r):
        """测试 𝒩 的全部子式（n ≤ 4）与 Toeplitz 窗口为正"""
        n = block_spec(r).n
        assert toeplitz_positivity(r, n)
        assert all(v > 0 for v in n_block_minors(r, n))

    def test_windows_beyond_n(self):
        """测试高阶连续窗口仍为正"""
        assert toeplitz_positivity(3, 4)

    def test_bad_order(self):
        """测试 max_order < 1"""
        with pytest.raises(ValueError):
            toeplitz_positivity(3, 0)


class TestRoth:
    """测试 Roth 方程"""

    def test_solvable(self):
        """测试秩判据"""
        i, z = QMatrix.identity(2), QMatrix.zeros(2, 2)
        c = QMatrix.from_rows([[1, 2], [3, 4]])
        assert roth_solvable(i, i, c)
        assert not roth_solvable(z, z, c)
        with pytest.raises(ShapeMismatchError):
            roth_solvable(i, QMatrix.identity(3), c)

    def test_worked_example(self):
        """测试 W=[[1,0],[1,1]]、C=[[0,0],[1,0]]"""
        w = QMatrix.from_rows([[1, 0], [1, 1]])
        c = QMatrix.from_rows([[0, 0], [1, 0]])
        x, y = roth_triangular_solve(w, c)
        assert x.to_rows() == [[0, 0], [0, -1]]
        assert y.to_rows() == [[0, -1], [0, 0]]
        assert roth_residual(w, x, y, c).is_zero()

    def test_identity_upper(self):
        """测试 W = I、C 上三角时 X = C、Y = 0"""
        c = QMatrix.from_rows([[1, 2], [0, 3]])
        x, y = roth_triangular_solve(QMatrix.identity(2), c)
        assert x == c
        assert y.is_zero()

    def test_identity_lower(self):
        """测试 U = I、C 下三角时 X = C、Y = 0"""
        c = QMatrix.from_rows([[1, 0], [2, 3]])
        x, y = roth_lower_solve(QMatrix.identity(2), c)
        assert x == c
        assert y.is_zero()

    def test_zero_rhs(self):
        """测试 C = 0"""
        x, y = roth_lower_solve(u_matrix(3), QMatrix.zeros(2, 2))
        assert x.is_zero() and y.is_zero()

    @pytest.mark.parametrize("r", range(2, 13))
    def test_random_rhs(self, r):
        """测试 𝒰(r) 与 50 个随机 C：上三角解与下三角解（r ≤ 12）"""
        rng = random.Random(r)
        u = u_matrix(r)
        j = exchange_matrix(u.rows)
        w = j @ u @ j
        for _ in range(50):
            c = random_matrix(rng, u.rows, u.rows)
            x, y = roth_triangular_solve(w, c)
            assert x.is_upper_triangular() and y.is_upper_triangular()
            assert roth_residual(w, x, y, c).is_zero()
            assert lower_solution_holds(r, c)

    def test_lower_needs_symmetric(self):
        """测试非对称 U 被拒绝"""
        with pytest.raises(NotSymmetricError):
            roth_lower_solve(QMatrix.from_rows([[1, 2], [3, 4]]), QMatrix.zeros(2, 2))

    def test_operator_matrix(self):
        """测试算子矩阵与直接计算一致"""
        w = QMatrix.from_rows([[2, 1], [1, 3]])
        operator = roth_operator_matrix(w)
        assert operator.shape == (4, 6)
        # X = E_00，Y = 0
        column = operator.column(0)
        x = QMatrix.from_rows([[1, 0], [0, 0]])
        expected = w @ x
        assert column == expected.entries

    @pytest.mark.parametrize("r", range(1, 10))
    def test_operator_surjective(self, r):
        """测试 W = 𝒰(r) 时三角 Roth 算子满射"""
        report = triangular_roth_operator_rank(r)
        assert report.surjective
        assert report.kernel_dim == report.p

    def test_lu_search_disabled(self):
        """测试搜索默认关闭"""
        with pytest.raises(ConfigurationException):
            lu_question_search(10, 3, seed=1)

    def test_lu_search_enabled(self):
        """测试启用后的搜索只检验无 LU 分解的可逆矩阵"""
        result = lu_question_search(30, 3, seed=1, enabled=True)
        assert result.trials == 30
        assert 0 <= result.tested <= 30
        for w in result.surjective_without_lu:
            assert not has_lu(w)


class TestParams:
    """测试系数参数化"""

    @pytest.mark.parametrize("r", range(1, 7))
    def test_relations(self, r):
        """测试 K(r) 每个基元素的参数矩阵关系"""
        for f in k_space(r).polys():
            params = param_extract(f)
            failed = [name for name, ok in params.relations().items() if not ok]
            assert failed == []

    def test_shapes(self):
        """测试参数矩阵形状"""
        params = param_extract(k_space(4).polys()[0])
        assert params.Q.shape == params.Qtilde.shape == (3, 3)
        assert params.Qtilde.is_upper_triangular()

    def test_rejects_outside_k(self):
        """测试不在 K(r) 中的多项式"""
        with pytest.raises(NotInKSpaceError):
            param_extract(HPoly.variable("x", VARIABLES_R) ** 3)


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
