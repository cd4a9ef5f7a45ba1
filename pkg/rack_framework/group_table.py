#!/usr/bin/env python3
"""
抽象群乘法表
以乘法表给出的有限群：群公理校验、逆元、共轭、中心化子、正规闭包与右陪集
"""

import logging
from collections import deque
from typing import Iterable, List, Optional, Sequence

import numpy as np

from .config import get_config
from .perm_group import PermGroup, symmetric_group
from .utils.error_handler import NotAGroupError, ResourceCapError

logger = logging.getLogger(__name__)


class GroupTable:
    """有限群乘法表，table[a, b] = a·b（0起始）"""

    def __init__(self, table: np.ndarray, identity: int):
        self._table = np.asarray(table, dtype=np.int64)
        self._table.setflags(write=False)
        self.identity = identity
        rows = self._table.tolist()
        self._inverse = [row.index(identity) for row in rows]
        self._rows = rows

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], one_based: bool = True,
                  cap: Optional[int] = None) -> 'GroupTable':
        """
        从乘法表行创建群并校验群公理

        Args:
            rows: 乘法表，rows[i][j] = i·j
            one_based: 是否为1起始编号
            cap: 群阶上限，默认取配置 group_table_cap

        Returns:
            GroupTable

        Raises:
            NotAGroupError: 封闭性、单位元、逆元或结合律不成立
            ResourceCapError: 阶超过上限
        """
        arr = np.array(rows, dtype=np.int64)
        if one_based:
            arr = arr - 1
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] == 0:
            raise NotAGroupError('closure')
        m = arr.shape[0]
        cap = cap if cap is not None else get_config().group_table_cap
        if m > cap:
            raise ResourceCapError(f"group table of order {m} exceeds cap {cap}", 'group_table_cap', cap, m)

        outside = np.argwhere((arr < 0) | (arr >= m))
        if len(outside):
            raise NotAGroupError('closure', tuple(int(v) for v in outside[0]))

        ar = np.arange(m)
        identities = [e for e in range(m) if (arr[e] == ar).all() and (arr[:, e] == ar).all()]
        if not identities:
            raise NotAGroupError('identity')
        identity = identities[0]

        for a in range(m):
            if not ((arr[a] == identity) & (arr[:, a] == identity)).any():
                raise NotAGroupError('inverse', (a,))

        for a in range(m):
            # (a·b)·c 与 a·(b·c)
            left = arr[arr[a][:, None], ar[None, :]]
            right = arr[a][arr]
            bad = np.argwhere(left != right)
            if len(bad):
                raise NotAGroupError('associativity', (a, int(bad[0][0]), int(bad[0][1])))

        logger.debug(f"乘法表校验通过: 阶 {m}, 单位元 {identity + 1}")
        return cls(arr, identity)

    @classmethod
    def from_perm_group(cls, G: PermGroup) -> 'GroupTable':
        """置换群的乘法表，元素按排序编号，乘积为先左后右"""
        index = {e: i for i, e in enumerate(G.elements)}
        rows = [[index[a * b] for b in G.elements] for a in G.elements]
        return cls(np.array(rows, dtype=np.int64), index[G.identity])

    @property
    def order(self) -> int:
        return self._table.shape[0]

    @property
    def table(self) -> np.ndarray:
        return self._table

    def multiply(self, a: int, b: int) -> int:
        return self._rows[a][b]

    def inverse(self, a: int) -> int:
        return self._inverse[a]

    def conjugate(self, x: int, g: int) -> int:
        """g^{-1}·x·g"""
        return self._rows[self._rows[self._inverse[g]][x]][g]

    def element_order(self, a: int) -> int:
        k, power = 1, a
        while power != self.identity:
            power = self._rows[power][a]
            k += 1
        return k

    def centralizer(self, x: int) -> List[int]:
        return [g for g in range(self.order) if self._rows[g][x] == self._rows[x][g]]

    def conjugacy_class(self, x: int) -> List[int]:
        return sorted({self.conjugate(x, g) for g in range(self.order)})

    def subgroup_generated(self, elements: Iterable[int]) -> List[int]:
        """生成的子群（排序后的元素列表）"""
        gens = sorted(set(elements))
        seen = {self.identity}
        queue = deque([self.identity])
        while queue:
            a = queue.popleft()
            for s in gens:
                b = self._rows[a][s]
                if b not in seen:
                    seen.add(b)
                    queue.append(b)
        return sorted(seen)

    def normal_closure(self, elements: Iterable[int]) -> List[int]:
        """包含全部共轭的最小子群"""
        conjugates = {c for x in elements for c in self.conjugacy_class(x)}
        return self.subgroup_generated(conjugates)

    def right_cosets(self, subgroup: Sequence[int]) -> List[List[int]]:
        """右陪集 H·g，每个陪集排序，陪集按最小元素排序"""
        subgroup = list(subgroup)
        assigned = set()
        cosets = []
        for g in range(self.order):
            if g in assigned:
                continue
            coset = sorted({self._rows[h][g] for h in subgroup})
            assigned.update(coset)
            cosets.append(coset)
        return sorted(cosets)

    def involutions(self) -> List[int]:
        """阶恰为2的元素"""
        return [a for a in range(self.order)
                if a != self.identity and self._rows[a][a] == self.identity]

    def is_generated_by_involutions(self) -> bool:
        return len(self.subgroup_generated(self.involutions())) == self.order

    def rows_one_based(self) -> List[List[int]]:
        return (self._table + 1).tolist()

    def __eq__(self, other) -> bool:
        return isinstance(other, GroupTable) and np.array_equal(self._table, other._table)

    def __hash__(self):
        return hash(self._table.tobytes())

    def __repr__(self):
        return f"GroupTable(order={self.order}, identity={self.identity + 1})"


def cyclic_group_table(m: int) -> GroupTable:
    """循环群 Z/m"""
    ar = np.arange(m)
    return GroupTable((ar[:, None] + ar[None, :]) % m, 0)


def klein_four_table() -> GroupTable:
    """Klein四元群 Z/2 × Z/2"""
    ar = np.arange(4)
    return GroupTable(ar[:, None] ^ ar[None, :], 0)


def symmetric_group_table(n: int) -> GroupTable:
    """Sym(n) 的乘法表"""
    return GroupTable.from_perm_group(symmetric_group(n))
