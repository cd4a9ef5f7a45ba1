"""
X_E kei 族与下界计数测试
"""
import math

import numpy as np
import pytest

from rack_framework.families import trivial_rack
from rack_framework.lower_bound import (
    SEVEN_POINT_TABLE, EMatrix, all_ematrices, build_xe, check_xe_family_cap, lower_bound_report,
    random_ematrix, xe_blueprint, xe_collision_report, xe_distinctness, xe_family_size, xe_group
)
from rack_framework.rack_core import RackKind, RackTable, translation, validate
from rack_framework.utils.error_handler import BlueprintError, DimensionError, ResourceCapError
from tests.unit.factories import EMatrixFactory, XeCaseFactory


@pytest.mark.unit
class TestEMatrix:
    """E 矩阵测试"""

    def test_should_reject_non_square(self):
        """测试非方阵"""
        with pytest.raises(DimensionError):
            EMatrix(((0, 1),))

    def test_should_reject_non_binary_entry(self):
        """测试元素不是0或1"""
        with pytest.raises(BlueprintError):
            EMatrix(((0, 2), (1, 0)))

    def test_should_reject_nonzero_diagonal(self):
        """测试对角线非零"""
        with pytest.raises(BlueprintError):
            EMatrix(((1, 0), (0, 0)))

    def test_should_enumerate_all_matrices(self):
        """测试 k=3 时共 2^6 个不同矩阵，第一个为零矩阵"""
        matrices = list(all_ematrices(3))
        assert len(matrices) == 64
        assert len(set(matrices)) == 64
        assert matrices[0] == EMatrix.zero(3)

    def test_should_draw_valid_random_matrix(self):
        """测试随机矩阵对角线为0"""
        E = random_ematrix(5, np.random.default_rng(7))
        assert E.k == 5
        assert not np.diag(E.as_array()).any()


@pytest.mark.unit
class TestBuildXe:
    """X_E 构造测试"""

    def test_should_reproduce_seven_point_table(self, seven_point_ematrix):
        """测试 n=7 参考 E 给出参考运算表"""
        assert build_xe(7, seven_point_ematrix) == RackTable.from_rows(SEVEN_POINT_TABLE)

    def test_should_give_trivial_kei_for_zero_matrix(self):
        """测试 E = 0 时为平凡 kei"""
        for n in (2, 5, 8):
            assert build_xe(n, EMatrix.zero(n // 2)) == trivial_rack(n)

    def test_should_read_pi_from_matrix_column(self, seven_point_ematrix):
        """测试参考表中 f_3 = (1 2)、f_1 = (3 4)(5 6)"""
        t = build_xe(7, seven_point_ematrix)
        assert translation(t, 2).cycle_string() == "(1 2)"
        assert translation(t, 0).cycle_string() == "(3 4)(5 6)"

    def test_should_reject_wrong_matrix_size(self, seven_point_ematrix):
        """测试 E 的阶与 floor(n/2) 不符"""
        with pytest.raises(DimensionError):
            build_xe(8, seven_point_ematrix)
        with pytest.raises(DimensionError):
            xe_blueprint(1, EMatrix.zero(1))

    def test_should_use_disjoint_transposition_group(self):
        """测试 ⟨τ_1, ..., τ_k⟩ 的阶为 2^k"""
        assert xe_group(9).order == 16
        assert xe_group(9).is_abelian()

    def test_should_always_build_kei(self):
        """测试随机 (n, E) 总是 kei"""
        for _ in range(30):
            case = XeCaseFactory()
            assert validate(build_xe(case['n'], case['matrix'])).kind == RackKind.KEI


@pytest.mark.unit
class TestDistinctness:
    """X_E 单射性测试"""

    def test_should_detect_repeated_matrix(self):
        """测试重复的 E 给出相同运算表"""
        E = EMatrixFactory(k=3)
        assert not xe_distinctness(6, [E, E], jobs=1)

    def test_should_separate_small_family(self):
        """测试 n=6 全部64个矩阵的运算表两两不同"""
        assert xe_distinctness(6, list(all_ematrices(3)), jobs=1)

    @pytest.mark.slow
    def test_should_be_injective_at_order_eight(self):
        """测试 n=8 全部4096个矩阵的运算表两两不同"""
        matrices = list(all_ematrices(4))
        assert len(matrices) == 4096
        assert xe_distinctness(8, matrices)

    @pytest.mark.parametrize("n,size", [(1, 1), (4, 4), (7, 64), (9, 4096), (10, 2 ** 20)])
    def test_should_count_family_size(self, n, size):
        """测试完整族的矩阵个数 2^{k(k-1)}"""
        assert xe_family_size(n) == size

    def test_should_gate_family_on_matrix_count(self):
        """测试族规模上限按矩阵个数判断，默认上限允许 n=9"""
        assert check_xe_family_cap(9) == 4096
        with pytest.raises(ResourceCapError) as exc_info:
            check_xe_family_cap(10)
        assert exc_info.value.details == {'cap': 'xe_family_cap', 'limit': 4096, 'requested': 2 ** 20}
        assert "--xe-family-cap" in exc_info.value.message
        assert check_xe_family_cap(10, cap=2 ** 20) == 2 ** 20


@pytest.mark.unit
class TestLowerBoundReport:
    """下界报告测试"""

    def test_should_report_order_twenty(self):
        """测试 n=20 的 log₂ 下界约为 28.92"""
        report = lower_bound_report(20)
        assert report.k == 10
        assert report.matrix_count == 2 ** 90
        assert report.factorial == math.factorial(20)
        assert report.log2_bound == pytest.approx(28.92, abs=0.01)
        assert report.guaranteed_classes == -(-2 ** 90 // math.factorial(20))

    def test_should_report_order_seven(self):
        """测试 n=7 时保证至少1个同构类"""
        report = lower_bound_report(7)
        assert report.matrix_count == 64
        assert report.guaranteed_classes == 1
        assert report.log2_bound < 0

    def test_should_report_order_two(self):
        """测试 n=2 时只有零矩阵"""
        report = lower_bound_report(2)
        assert report.matrix_count == 1
        assert report.log2_bound == pytest.approx(-1.0)
        assert "k=1" in report.lines()

    def test_should_reject_order_one(self):
        """测试 n=1 报错"""
        with pytest.raises(DimensionError):
            lower_bound_report(1)


@pytest.mark.unit
class TestCollisionReport:
    """同构碰撞报告测试"""

    def test_should_count_collisions_at_order_four(self):
        """测试 n=4：4个运算表，单边 E 两者同构，共3个同构类"""
        report = xe_collision_report(4, jobs=1)
        assert report.distinct_tables == 4
        assert report.isomorphism_classes == 3
        assert report.collisions == 1
        assert report.to_dict()['collisions'] == 1

    def test_should_respect_canonical_cap(self):
        """测试超过规范形阶上限"""
        with pytest.raises(ResourceCapError):
            xe_collision_report(6, jobs=1, cap=5)
