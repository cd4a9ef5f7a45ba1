"""
置换群引擎测试
包含复合约定、闭包、轨道、稳定子、中心化子、共轭类、正规闭包与子群共轭类
"""
import itertools

import pytest

from rack_framework.perm_group import (
    Permutation, alternating_group, are_conjugate, centralizer, compose, conjugacy_classes,
    conjugate, derived_subgroup, generate, identity, maroti_bound_holds, normal_closure,
    normalizer_in_symmetric, orbit_data, stabilizer, subgroup_classes, symmetric_group
)
from rack_framework.utils.error_handler import (
    DegreeMismatchError, NormalClosureError, PointRangeError, ResourceCapError
)
from tests.unit.factories import PermutationFactory


def cyc(text_cycles, degree):
    return Permutation.from_cycles(text_cycles, degree)


@pytest.mark.unit
class TestPermutation:
    """置换基础操作测试"""

    def test_should_reject_non_bijective_images(self):
        """测试像序列不是排列时报错"""
        with pytest.raises(ValueError):
            Permutation((0, 0, 1))

    def test_should_print_identity_as_empty_cycle(self):
        """测试恒等置换输出为 ()"""
        assert identity(4).cycle_string() == "()"
        assert identity(4).images == (0, 1, 2, 3)

    def test_should_print_one_based_cycles(self):
        """测试轮换记号从1开始编号"""
        p = cyc([(3, 4), (5, 6)], 7)
        assert p.cycle_string() == "(3 4)(5 6)"
        assert p.one_based_images() == [1, 2, 4, 3, 6, 5, 7]

    def test_should_compose_left_then_right(self):
        """测试 compose(p, q) 先作用 p 再作用 q"""
        result = compose(cyc([(1, 2)], 3), cyc([(2, 3)], 3))
        assert result.one_based_images() == [3, 1, 2]
        assert result.cycle_string() == "(1 3 2)"

    def test_should_square_involution_to_identity(self):
        """测试对合的平方为恒等"""
        t = cyc([(1, 2)], 3)
        assert compose(t, t).is_identity()

    def test_should_keep_permutation_under_identity(self):
        """测试恒等元律"""
        p = PermutationFactory(degree=6)
        assert compose(p, identity(6)) == p
        assert compose(identity(6), p) == p

    def test_should_conjugate_as_inverse_g_p_g(self):
        """测试共轭为 g^{-1} p g"""
        p, g = cyc([(1, 2)], 3), cyc([(2, 3)], 3)
        assert conjugate(p, g) == cyc([(1, 3)], 3)
        assert conjugate(p, g) == compose(compose(g.inverse(), p), g)

    def test_should_conjugate_trivially(self):
        """测试与恒等置换相关的平凡共轭"""
        p = PermutationFactory(degree=5)
        assert conjugate(p, identity(5)) == p
        assert conjugate(identity(5), p).is_identity()

    def test_should_preserve_cycle_type_under_conjugation(self):
        """测试共轭保持轮换型"""
        for _ in range(50):
            p = PermutationFactory(degree=7)
            g = PermutationFactory(degree=7)
            assert conjugate(p, g).cycle_type() == p.cycle_type()

    def test_should_be_associative(self):
        """测试复合满足结合律"""
        for _ in range(20):
            p, q, r = (PermutationFactory(degree=6) for _ in range(3))
            assert compose(compose(p, q), r) == compose(p, compose(q, r))

    def test_should_report_degree_mismatch(self):
        """测试次数不一致时报错"""
        with pytest.raises(DegreeMismatchError):
            compose(identity(2), identity(3))
        with pytest.raises(DegreeMismatchError):
            conjugate(identity(2), identity(3))

    def test_should_compute_order_and_cycle_type(self):
        """测试阶与轮换型"""
        p = cyc([(1, 2, 3), (4, 5)], 6)
        assert p.order == 6
        assert p.cycle_type() == (1, 2, 3)
        assert not p.is_involution()
        assert cyc([(1, 2), (3, 4)], 4).is_involution()

    def test_should_compare_lexicographically_by_images(self):
        """测试置换按像序列字典序比较"""
        assert identity(3) < cyc([(2, 3)], 3) < cyc([(1, 2)], 3)


@pytest.mark.unit
class TestGenerate:
    """群闭包测试"""

    def test_should_generate_elementary_abelian_group(self):
        """测试三个不交对换生成8阶群"""
        G = generate([cyc([(1, 2)], 7), cyc([(3, 4)], 7), cyc([(5, 6)], 7)])
        assert G.order == 8
        assert G.is_abelian()

    def test_should_generate_trivial_group_from_empty_list(self):
        """测试空生成元给出平凡群"""
        G = generate([], degree=4)
        assert G.order == 1
        assert G.elements == (identity(4),)

    def test_should_generate_symmetric_group_of_degree_three(self):
        """测试 (1 2) 与 (1 2 3) 生成 Sym(3)"""
        G = generate([cyc([(1, 2)], 3), cyc([(1, 2, 3)], 3)])
        assert G.order == 6
        assert G == symmetric_group(3)

    def test_should_close_under_composition_and_inverse(self):
        """测试元素集合在复合与求逆下封闭"""
        G = generate([PermutationFactory(degree=5), PermutationFactory(degree=5)])
        for a in G.elements:
            assert a.inverse() in G
            for b in G.elements[:10]:
                assert compose(a, b) in G
        assert all(g in G for g in G.generators)

    def test_should_sort_elements_by_images(self):
        """测试元素按像序列排序"""
        G = symmetric_group(4)
        assert list(G.elements) == sorted(G.elements)

    def test_should_raise_resource_error_over_order_cap(self):
        """测试超过群阶上限时报资源错误而不是截断"""
        with pytest.raises(ResourceCapError) as exc_info:
            generate([cyc([(1, 2)], 5), cyc([(1, 2, 3, 4, 5)], 5)], cap=100)
        assert exc_info.value.exit_code == 3


@pytest.mark.unit
class TestOrbitsAndStabilizers:
    """轨道、稳定子与中心化子测试"""

    def test_should_find_orbits_with_minimal_representatives(self):
        """测试轨道划分与最小点代表元"""
        G = generate([cyc([(1, 2)], 7), cyc([(3, 4)], 7), cyc([(5, 6)], 7)])
        od = orbit_data(G)
        assert od.orbits == ((0, 1), (2, 3), (4, 5), (6,))
        assert od.representatives == (0, 2, 4, 6)
        assert od.orbit_sizes == (1, 2, 2, 2)

    def test_should_find_singleton_orbits_of_trivial_group(self):
        """测试平凡群的轨道全为单点"""
        assert orbit_data(generate([], degree=3)).orbits == ((0,), (1,), (2,))

    def test_should_find_single_orbit_of_symmetric_group(self):
        """测试 Sym(3) 传递"""
        od = orbit_data(symmetric_group(3))
        assert od.orbits == ((0, 1, 2),)
        assert od.representatives == (0,)

    def test_should_record_transversal_mapping_rep_to_point(self):
        """测试横截元素把代表元映到该点"""
        for _ in range(10):
            G = generate([PermutationFactory(degree=6)])
            od = G.orbit_data
            for x in range(6):
                assert od.transversal[x].apply(od.representative_of(x)) == x

    def test_should_compute_point_stabilizer(self):
        """测试 Sym(3) 中点3的稳定子"""
        stab = stabilizer(symmetric_group(3), 2)
        assert stab.order == 2
        assert set(stab.elements) == {identity(3), cyc([(1, 2)], 3)}

    def test_should_compute_trivial_stabilizers(self):
        """测试平凡群与 ⟨(1 2)⟩ 的稳定子"""
        assert stabilizer(generate([], degree=3), 1).order == 1
        assert stabilizer(generate([cyc([(1, 2)], 2)]), 0).order == 1

    def test_should_satisfy_orbit_stabilizer(self):
        """测试 |G| = |G_α|·|α^G|"""
        for _ in range(10):
            G = generate([PermutationFactory(degree=5), PermutationFactory(degree=5)])
            for point in range(5):
                assert G.order == stabilizer(G, point).order * len(G.orbit_data.orbit_of(point))

    def test_should_reject_point_out_of_range(self):
        """测试点越界"""
        with pytest.raises(PointRangeError):
            stabilizer(symmetric_group(3), 3)

    def test_should_compute_centralizers(self):
        """测试中心化子"""
        S3 = symmetric_group(3)
        assert centralizer(S3, cyc([(1, 2, 3)], 3)).order == 3
        assert centralizer(S3, identity(3)) == S3
        V = generate([cyc([(1, 2)], 4), cyc([(3, 4)], 4)])
        assert centralizer(V, cyc([(1, 2)], 4)) == V

    def test_should_allow_centralizer_of_outside_element(self):
        """测试 p 不必属于 G"""
        G = generate([cyc([(1, 2)], 4)])
        assert centralizer(G, cyc([(3, 4)], 4)) == G
        assert centralizer(G, cyc([(2, 3)], 4)).order == 1


@pytest.mark.unit
class TestConjugacyAndClosure:
    """共轭类与正规闭包测试"""

    def test_should_partition_symmetric_group_into_three_classes(self):
        """测试 Sym(3) 的共轭类大小为 1, 3, 2"""
        classes = conjugacy_classes(symmetric_group(3))
        assert [len(c) for c in classes] == [1, 3, 2]

    def test_should_give_singletons_for_abelian_group(self):
        """测试交换群的共轭类全为单点"""
        G = generate([cyc([(1, 2)], 6), cyc([(3, 4)], 6), cyc([(5, 6)], 6)])
        assert all(len(c) == 1 for c in conjugacy_classes(G))

    def test_should_satisfy_class_equation(self):
        """测试类方程"""
        G = symmetric_group(5)
        classes = conjugacy_classes(G)
        assert sum(len(c) for c in classes) == G.order
        assert len(classes) == 7

    def test_should_take_normal_closure_of_transposition(self):
        """测试对换的正规闭包为 Sym(3)"""
        S3 = symmetric_group(3)
        assert normal_closure(S3, [cyc([(1, 2)], 3)]) == S3

    def test_should_take_normal_closure_of_identity(self):
        """测试恒等置换的正规闭包为平凡群"""
        assert normal_closure(symmetric_group(4), [identity(4)]).order == 1

    def test_should_keep_normal_closure_small_in_klein_group(self):
        """测试 Klein 四元群中单个元素的正规闭包阶至多为2"""
        V = generate([cyc([(1, 2), (3, 4)], 4), cyc([(1, 3), (2, 4)], 4)])
        assert V.order == 4
        for element in V.elements:
            closure = normal_closure(V, [element])
            assert closure.order <= 2
            assert closure != V

    def test_should_reject_element_outside_group(self):
        """测试 S 中元素不属于 G 时报错"""
        with pytest.raises(NormalClosureError):
            normal_closure(generate([cyc([(1, 2)], 3)]), [cyc([(2, 3)], 3)])

    def test_should_compute_normal_closure_that_is_normal(self):
        """测试正规闭包在生成元共轭下不变"""
        S4 = symmetric_group(4)
        N = normal_closure(S4, [cyc([(1, 2), (3, 4)], 4)])
        assert N.order == 4
        for g in S4.generators:
            for h in N.elements:
                assert conjugate(h, g) in N

    def test_should_compute_derived_subgroups(self):
        """测试换位子群"""
        assert derived_subgroup(symmetric_group(4)) == alternating_group(4)
        A5 = alternating_group(5)
        assert derived_subgroup(A5) == A5

    def test_should_find_conjugating_element(self):
        """测试共轭子群的见证 σ"""
        H = generate([cyc([(1, 2)], 4)])
        K = generate([cyc([(3, 4)], 4)])
        sigma = are_conjugate(H, K)
        assert sigma is not None
        assert all(conjugate(h, sigma) in K for h in H.elements)
        assert are_conjugate(H, generate([cyc([(1, 2), (3, 4)], 4)])) is None

    def test_should_compute_normalizer_in_symmetric_group(self):
        """测试 ⟨(1 2 3)⟩ 在 Sym(3) 中的正规化子"""
        C3 = generate([cyc([(1, 2, 3)], 3)])
        assert normalizer_in_symmetric(C3).order == 6


def _all_subgroups_by_pairs(n):
    sym = symmetric_group(n)
    found = {}
    for a, b in itertools.combinations_with_replacement(sym.elements, 2):
        G = generate([a, b], degree=n)
        found.setdefault(G.element_set, G)
    return list(found.values())


@pytest.mark.unit
class TestSubgroupClasses:
    """子群共轭类枚举测试"""

    @pytest.mark.parametrize("n, expected", [(1, 1), (2, 2), (3, 4), (4, 11)])
    def test_should_count_subgroup_classes_of_small_symmetric_groups(self, n, expected):
        """测试 Sym(n) 子群共轭类个数"""
        assert len(subgroup_classes(n)) == expected

    def test_should_list_degree_three_classes_by_order(self):
        """测试 Sym(3) 代表元按阶排序"""
        assert [G.order for G in subgroup_classes(3)] == [1, 2, 3, 6]

    def test_should_agree_with_exhaustive_oracle_at_degree_four(self):
        """测试与两元生成子群的穷举结果一致（Sym(4) 的子群都由两个元素生成）"""
        sym = symmetric_group(4)
        oracle = []
        for H in _all_subgroups_by_pairs(4):
            if not any(are_conjugate(H, K, sym) is not None for K in oracle):
                oracle.append(H)
        reps = subgroup_classes(4)
        assert len(oracle) == len(reps) == 11
        for H in oracle:
            assert sum(1 for K in reps if are_conjugate(H, K, sym) is not None) == 1

    def test_should_be_deterministic(self):
        """测试输出顺序确定"""
        first = [G.sort_key() for G in subgroup_classes(4)]
        second = [G.sort_key() for G in subgroup_classes(4)]
        assert first == second

    def test_should_reject_degree_over_cap(self):
        """测试超过次数上限时报资源错误"""
        with pytest.raises(ResourceCapError):
            subgroup_classes(5, degree_cap=4)

    @pytest.mark.slow
    def test_should_count_subgroup_classes_of_degree_five(self):
        """测试 Sym(5) 有19个子群共轭类"""
        assert len(subgroup_classes(5)) == 19

    @pytest.mark.slow
    def test_should_count_subgroup_classes_of_degree_six_within_class_bound(self):
        """测试 Sym(6) 有56个子群共轭类，且每个代表元的共轭类个数满足上界"""
        reps = subgroup_classes(6)
        assert len(reps) == 56
        for G in reps:
            assert len(G.conjugacy_classes) ** 2 <= 3 ** 5

    @pytest.mark.slow
    @pytest.mark.parametrize("n", [3, 4, 5])
    def test_should_bound_class_count_for_every_representative(self, n):
        """测试共轭类个数 ≤ 3^{(n-1)/2}"""
        for G in subgroup_classes(n):
            assert maroti_bound_holds(G)
            assert len(G.conjugacy_classes) ** 2 <= 3 ** (n - 1)
