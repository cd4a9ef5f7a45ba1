"""
抽象群乘法表测试
"""
import pytest

from rack_framework.group_table import (
    GroupTable, cyclic_group_table, klein_four_table, symmetric_group_table
)
from rack_framework.perm_group import symmetric_group
from rack_framework.utils.error_handler import NotAGroupError, ResourceCapError


@pytest.mark.unit
class TestGroupAxioms:
    """群公理校验测试"""

    def test_should_accept_cyclic_table(self):
        """测试 Z/3 的1起始乘法表"""
        G = GroupTable.from_rows([[1, 2, 3], [2, 3, 1], [3, 1, 2]])
        assert G.order == 3
        assert G.identity == 0
        assert G == cyclic_group_table(3)

    def test_should_find_identity_anywhere(self):
        """测试单位元不在第一个位置"""
        G = GroupTable.from_rows([[2, 1], [1, 2]])
        assert G.identity == 1
        assert G.inverse(0) == 0

    @pytest.mark.parametrize("rows,axiom", [
        ([[1, 2], [2, 3]], 'closure'),
        ([[1, 1], [1, 1]], 'identity'),
        ([[1, 2, 3], [2, 3, 3], [3, 3, 3]], 'inverse'),
        ([[1, 2, 3], [2, 1, 3], [3, 3, 1]], 'associativity'),
        ([[1, 2]], 'closure'),
    ])
    def test_should_name_failing_axiom(self, rows, axiom):
        """测试失败的公理名称"""
        with pytest.raises(NotAGroupError) as exc_info:
            GroupTable.from_rows(rows)
        assert exc_info.value.axiom == axiom

    def test_should_respect_order_cap(self):
        """测试阶超过上限"""
        rows = cyclic_group_table(5).rows_one_based()
        with pytest.raises(ResourceCapError):
            GroupTable.from_rows(rows, cap=4)


@pytest.mark.unit
class TestGroupOperations:
    """群运算测试"""

    def test_should_conjugate_in_sym3(self):
        """测试 Sym(3) 乘法表中对换类大小3、中心化子阶2"""
        G = symmetric_group_table(3)
        t = G.involutions()[0]
        assert len(G.conjugacy_class(t)) == 3
        assert len(G.centralizer(t)) == 2
        assert len(G.right_cosets(G.centralizer(t))) == 3
        assert G.element_order(t) == 2

    def test_should_match_permutation_group(self):
        """测试乘法表与置换群的乘积一致"""
        S = symmetric_group(3)
        G = GroupTable.from_perm_group(S)
        for a, x in enumerate(S.elements):
            for b, y in enumerate(S.elements):
                assert S.elements[G.multiply(a, b)] == x * y

    def test_should_compute_normal_closure(self):
        """测试 Sym(3) 中三轮换的正规闭包为 A3"""
        G = symmetric_group_table(3)
        three_cycle = next(a for a in range(6) if G.element_order(a) == 3)
        assert len(G.normal_closure([three_cycle])) == 3
        assert len(G.normal_closure(G.involutions())) == 6

    def test_should_sort_right_cosets(self):
        """测试 Z/4 中 {0, 2} 的右陪集"""
        G = cyclic_group_table(4)
        assert G.right_cosets([0, 2]) == [[0, 2], [1, 3]]

    def test_should_detect_involution_generation(self):
        """测试 Klein 群由对合生成、Z/4 不是"""
        assert klein_four_table().is_generated_by_involutions()
        assert not cyclic_group_table(4).is_generated_by_involutions()
        assert cyclic_group_table(4).subgroup_generated([1]) == [0, 1, 2, 3]
