"""
结构定理测试
包含蓝图检查、由蓝图构造 rack、分解、陪集实现与算子群障碍
"""
import pytest

from rack_framework.construction import (
    BlueprintFlags, RackBlueprint, blueprint_sequences_bound, build_rack, check_blueprint,
    condition_a_witness, decompose, has_full_normal_closure_element, operator_group_obstruction,
    realize_kei_operator_group, realize_operator_group, transversal_independent
)
from rack_framework.group_table import cyclic_group_table, klein_four_table, symmetric_group_table
from rack_framework.lower_bound import xe_blueprint
from rack_framework.perm_group import Permutation, generate, symmetric_group
from rack_framework.rack_core import RackKind, operator_group, translation, validate
from rack_framework.utils.error_handler import (
    BlueprintError, ConditionAError, InvariantViolation, NormalClosureError
)
from tests.unit.factories import RackBlueprintFactory


def _cycle(text_cycles, degree):
    return Permutation.from_cycles(text_cycles, degree)


@pytest.fixture
def sym3():
    return symmetric_group(3)


@pytest.mark.unit
class TestBlueprint:
    """蓝图构造与检查测试"""

    def test_should_reject_non_minimal_representative(self, sym3):
        """测试代表元不是轨道最小点"""
        with pytest.raises(BlueprintError):
            RackBlueprint(sym3, (1,), (Permutation.identity(3),))

    def test_should_reject_pi_outside_group(self):
        """测试 π 不在群中"""
        G = generate([_cycle([(1, 2)], 3)])
        with pytest.raises(BlueprintError):
            RackBlueprint(G, G.orbit_data.representatives,
                          (Permutation.identity(3), _cycle([(2, 3)], 3)))

    def test_should_flag_dihedral_quandle_blueprint(self, sym3):
        """测试 Sym(3)、π = (2 3) 满足全部标志"""
        flags = check_blueprint(RackBlueprint(sym3, (0,), (_cycle([(2, 3)], 3),)))
        assert flags.describe() == "condition_b=true quandle_ok=true kei_ok=true"

    def test_should_flag_identity_pi_as_proper_closure(self, sym3):
        """测试 π = 1 时正规闭包为平凡群"""
        flags = check_blueprint(RackBlueprint(sym3, (0,), (Permutation.identity(3),)))
        assert not flags.condition_b
        assert flags.kei_ok

    def test_should_raise_condition_a_error(self, sym3):
        """测试 π = (1 2 3) 不与稳定子 ⟨(2 3)⟩ 交换"""
        pi = _cycle([(1, 2, 3)], 3)
        assert condition_a_witness(sym3, 0, pi) == _cycle([(2, 3)], 3)
        with pytest.raises(ConditionAError):
            check_blueprint(RackBlueprint(sym3, (0,), (pi,)))
        with pytest.raises(ConditionAError):
            build_rack(RackBlueprint(sym3, (0,), (pi,)))

    def test_should_flag_seven_point_blueprint(self, seven_point_ematrix):
        """测试 n=7 的 X_E 蓝图是 kei 蓝图但不满足条件B"""
        flags = check_blueprint(xe_blueprint(7, seven_point_ematrix))
        assert flags.to_dict() == {'condition_b': False, 'quandle_ok': True, 'kei_ok': True}


@pytest.mark.unit
class TestBuildAndDecompose:
    """构造与分解测试"""

    def test_should_build_dihedral_quandle(self, sym3):
        """测试 Sym(3)、π = (2 3) 给出三角形的对换共轭 quandle"""
        t = build_rack(RackBlueprint(sym3, (0,), (_cycle([(2, 3)], 3),)))
        assert validate(t).kind == RackKind.KEI
        assert [translation(t, y).cycle_string() for y in range(3)] == ["(2 3)", "(1 3)", "(1 2)"]

    def test_should_build_permutation_rack(self):
        """测试循环群 C3 上 π = (1 2 3) 给出常值列 rack"""
        pi = _cycle([(1, 2, 3)], 3)
        t = build_rack(RackBlueprint(generate([pi]), (0,), (pi,)))
        assert validate(t).kind == RackKind.RACK
        assert all(translation(t, y) == pi for y in range(3))

    def test_should_decompose_seven_point_table(self, seven_point_table):
        """测试参考 kei 的分解"""
        b = decompose(seven_point_table)
        assert b.reps == (0, 2, 4, 6)
        assert b.group.order == 8
        assert build_rack(b) == seven_point_table

    @pytest.mark.slow
    def test_should_round_trip_small_racks(self, small_racks):
        """测试 n ≤ 4 全部 rack 的分解可还原"""
        for t in small_racks:
            b = decompose(t)
            assert b.group == operator_group(t)
            assert check_blueprint(b).condition_b
            assert build_rack(b) == t

    def test_should_round_trip_random_blueprints(self):
        """测试100个随机蓝图：构造后分解再构造不变，且与陪集代表选择无关"""
        for _ in range(100):
            b = RackBlueprintFactory()
            assert transversal_independent(b)
            t = build_rack(b)
            assert validate(t).is_rack
            assert operator_group(t).is_subgroup_of(b.group)
            assert build_rack(decompose(t)) == t

    def test_should_match_flags_on_random_blueprints(self):
        """测试100个随机蓝图：条件B ⇔ 算子群等于 G，quandle/kei 标志 ⇔ 构造结果的分类"""
        for _ in range(100):
            b = RackBlueprintFactory()
            flags = check_blueprint(b)
            t = build_rack(b)
            verdict = validate(t)
            assert (operator_group(t) == b.group) == flags.condition_b
            assert verdict.satisfies(RackKind.QUANDLE) == flags.quandle_ok
            assert verdict.satisfies(RackKind.KEI) == flags.kei_ok

    def test_should_reach_whole_group_only_under_condition_b(self, sym3, seven_point_ematrix):
        """测试条件B成立与不成立的两个蓝图"""
        b = RackBlueprint(sym3, (0,), (_cycle([(2, 3)], 3),))
        assert check_blueprint(b).condition_b
        assert operator_group(build_rack(b)) == sym3
        xe = xe_blueprint(7, seven_point_ematrix)
        assert not check_blueprint(xe).condition_b
        assert operator_group(build_rack(xe)) != xe.group

    def test_should_raise_invariant_violation_when_flags_disagree(self, sym3, mocker):
        """测试标志与构造结果不一致时构造自检报错"""
        b = RackBlueprint(sym3, (0,), (_cycle([(2, 3)], 3),))
        mocker.patch('rack_framework.construction.check_blueprint',
                     return_value=BlueprintFlags(condition_b=True, quandle_ok=False, kei_ok=False))
        with pytest.raises(InvariantViolation):
            build_rack(b)

    def test_should_detect_transversal_dependence(self, sym3):
        """测试条件A不成立时结果依赖陪集代表选择"""
        assert not transversal_independent(RackBlueprint(sym3, (0,), (_cycle([(1, 2, 3)], 3),)))
        assert transversal_independent(RackBlueprint(sym3, (0,), (_cycle([(2, 3)], 3),)))


@pytest.mark.unit
class TestRealization:
    """抽象群实现测试"""

    def test_should_realize_trivial_group(self):
        """测试平凡群给出1阶 quandle"""
        t = realize_operator_group(cyclic_group_table(1))
        assert t.n == 1

    def test_should_realize_cyclic_group_of_order_two(self):
        """测试 C2：正则块2点加1个陪集点"""
        t = realize_operator_group(cyclic_group_table(2))
        assert t.n == 3
        assert validate(t).satisfies(RackKind.QUANDLE)
        assert operator_group(t).order == 2

    def test_should_realize_sym3_with_transposition_seeds(self):
        """测试 Sym(3) 以全部对换为种子"""
        G = symmetric_group_table(3)
        t = realize_operator_group(G, G.involutions())
        assert t.n == 6 + 3 * 3
        assert validate(t).kind == RackKind.KEI
        assert operator_group(t).order == 6

    def test_should_realize_kei_for_klein_four(self):
        """测试 Klein 四元群由对合生成，kei 实现成功"""
        t = realize_kei_operator_group(klein_four_table())
        assert validate(t).kind == RackKind.KEI
        assert operator_group(t).order == 4

    def test_should_reject_seeds_with_proper_closure(self):
        """测试种子正规闭包为真子群"""
        G = cyclic_group_table(4)
        with pytest.raises(NormalClosureError):
            realize_operator_group(G, [2])

    def test_should_reject_kei_for_odd_cyclic_group(self):
        """测试 C3 没有对合，无法实现为 kei 的算子群"""
        with pytest.raises(NormalClosureError):
            realize_kei_operator_group(cyclic_group_table(3))


@pytest.mark.unit
class TestObstruction:
    """算子群障碍测试"""

    def test_should_find_transposition_in_sym3(self, sym3):
        """测试 Sym(3) 中对换的正规闭包为全群"""
        element = has_full_normal_closure_element(sym3)
        assert element is not None
        assert element.cycle_type() == (1, 2)
        assert not operator_group_obstruction(sym3)

    def test_should_find_generator_in_cyclic_group(self):
        """测试 C3 的生成元"""
        C3 = generate([_cycle([(1, 2, 3)], 3)])
        assert has_full_normal_closure_element(C3) is not None
        assert not operator_group_obstruction(C3)

    def test_should_obstruct_regular_klein_group(self):
        """测试正则作用的 Klein 四元群不是任何传递 rack 的算子群"""
        V = generate([_cycle([(1, 2), (3, 4)], 4), _cycle([(1, 3), (2, 4)], 4)])
        assert has_full_normal_closure_element(V) is None
        assert operator_group_obstruction(V)

    def test_should_bound_sequences_for_sym3(self, sym3):
        """测试 k(G)^s · ∏ n_i = 3 · 3"""
        assert blueprint_sequences_bound(sym3) == 9
