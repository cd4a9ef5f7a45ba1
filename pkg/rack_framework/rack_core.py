#!/usr/bin/env python3
"""
Rack运算表
运算表表示、公理校验与分类、右平移、算子群、指纹、同构判定与规范形

约定：table[x, y] = x ▷ y，行为 x、列为 y，内部编号从0开始
"""

import logging
from collections import deque
from dataclasses import dataclass
from enum import Enum
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from .config import get_config
from .perm_group import Permutation, PermGroup, conjugate, generate
from .utils.error_handler import (
    MalformedTableError, PointRangeError, ResourceCapError, check_invariant
)

logger = logging.getLogger(__name__)


class RackKind(str, Enum):
    """分类标签，按强度递增"""
    NOT_RACK = 'not_rack'
    RACK = 'rack'
    QUANDLE = 'quandle'
    KEI = 'kei'

    @property
    def rank(self) -> int:
        return _KIND_RANK[self]

    def implies(self, other: 'RackKind') -> bool:
        """kei ⇒ quandle ⇒ rack"""
        return self.rank >= other.rank


_KIND_RANK = {RackKind.NOT_RACK: 0, RackKind.RACK: 1, RackKind.QUANDLE: 2, RackKind.KEI: 3}


class RackTable:
    """
    n×n 运算表（numpy只读数组）
    构造时只检查形状与取值范围，rack公理由 validate 检查
    """

    def __init__(self, table):
        arr = np.array(table, dtype=np.int64)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] == 0:
            raise MalformedTableError(f"table must be a non-empty square array, got shape {arr.shape}")
        n = arr.shape[0]
        if arr.min() < 0 or arr.max() >= n:
            bad = np.argwhere((arr < 0) | (arr >= n))[0]
            raise MalformedTableError(
                f"entry {int(arr[bad[0], bad[1]]) + 1} at row {bad[0] + 1} column {bad[1] + 1} "
                f"out of range 1..{n}")
        arr.setflags(write=False)
        self._table = arr
        self._key = tuple(arr.ravel().tolist())

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], one_based: bool = True) -> 'RackTable':
        """
        从行列表创建运算表

        Args:
            rows: 行列表，rows[x][y] = x ▷ y
            one_based: 取值是否为1起始编号

        Returns:
            运算表
        """
        arr = np.array(rows, dtype=np.int64)
        return cls(arr - 1 if one_based else arr)

    @classmethod
    def from_columns(cls, columns: Sequence[Permutation]) -> 'RackTable':
        """由右平移 f_y 列表创建运算表：table[x, y] = f_y(x)"""
        return cls(np.array([c.images for c in columns], dtype=np.int64).T)

    @property
    def n(self) -> int:
        return self._table.shape[0]

    @property
    def table(self) -> np.ndarray:
        return self._table

    def entry(self, x: int, y: int) -> int:
        return int(self._table[x, y])

    def rows_one_based(self) -> List[List[int]]:
        return (self._table + 1).tolist()

    def relabeled(self, images: Sequence[int]) -> 'RackTable':
        """沿双射 s 搬运运算表：T'[s(x), s(y)] = s(T[x, y])"""
        s = np.asarray(images, dtype=np.int64)
        out = np.empty_like(self._table)
        out[s[:, None], s[None, :]] = s[self._table]
        return RackTable(out)

    def sort_key(self) -> Tuple[int, Tuple[int, ...]]:
        return (self.n, self._key)

    def __eq__(self, other) -> bool:
        return isinstance(other, RackTable) and self.sort_key() == other.sort_key()

    def __lt__(self, other: 'RackTable') -> bool:
        return self.sort_key() < other.sort_key()

    def __hash__(self):
        return hash(self.sort_key())

    def __repr__(self):
        return f"RackTable(n={self.n}, rows={self.rows_one_based()})"

    def __getstate__(self):
        return {'table': self._table.tolist()}

    def __setstate__(self, state):
        self.__init__(state['table'])


@dataclass(frozen=True)
class RackClass:
    """validate 的结果：分类标签，非rack时附带见证"""
    kind: RackKind
    column_witness: Optional[int] = None
    triple_witness: Optional[Tuple[int, int, int]] = None

    @property
    def is_rack(self) -> bool:
        return self.kind != RackKind.NOT_RACK

    def satisfies(self, kind: RackKind) -> bool:
        return self.kind.implies(kind)

    def describe(self) -> str:
        """1起始编号的结论文本"""
        if self.column_witness is not None:
            return f"malformed: column {self.column_witness + 1} not a bijection"
        if self.triple_witness is not None:
            x, y, z = (w + 1 for w in self.triple_witness)
            return f"not_rack: self-distributivity fails at ({x}, {y}, {z})"
        return self.kind.value


def validate(t: RackTable) -> RackClass:
    """
    校验 rack 公理并给出最强分类

    Args:
        t: 运算表

    Returns:
        RackClass：非双射列（最小列号）或第一个违反自分配律的三元组，
        否则为 rack / quandle / kei 中最强者
    """
    A = t.table
    n = t.n
    ar = np.arange(n)

    columns_ok = (np.sort(A, axis=0) == ar[:, None]).all(axis=0)
    if not columns_ok.all():
        return RackClass(RackKind.NOT_RACK, column_witness=int(np.argmin(columns_ok)))

    # left[x, y, z] = (x▷y)▷z, right[x, y, z] = (x▷z)▷(y▷z)
    left = A[A[:, :, None], ar[None, None, :]]
    right = A[A[:, None, :], A[None, :, :]]
    violations = np.argwhere(left != right)
    if len(violations):
        x, y, z = (int(v) for v in violations[0])
        return RackClass(RackKind.NOT_RACK, triple_witness=(x, y, z))

    if not (np.diag(A) == ar).all():
        return RackClass(RackKind.RACK)
    # f_y 的阶整除2：(x▷y)▷y = x
    if not (A[A, ar[None, :]] == ar[:, None]).all():
        return RackClass(RackKind.QUANDLE)
    return RackClass(RackKind.KEI)


def translation(t: RackTable, y: int) -> Permutation:
    """
    右平移 f_y：x ↦ x ▷ y（第 y 列）

    Raises:
        PointRangeError: y 越界
        MalformedTableError: 该列不是双射
    """
    if not 0 <= y < t.n:
        raise PointRangeError(y, t.n)
    column = tuple(int(v) for v in t.table[:, y])
    if sorted(column) != list(range(t.n)):
        raise MalformedTableError(f"column {y + 1} not a bijection")
    return Permutation._trusted(column)


def translations(t: RackTable) -> List[Permutation]:
    """全部右平移（增广映射 y ↦ f_y）"""
    return [translation(t, y) for y in range(t.n)]


def operator_group(t: RackTable, cap: Optional[int] = None) -> PermGroup:
    """算子群 ⟨f_y : y ∈ X⟩"""
    return generate(translations(t), degree=t.n, cap=cap)


def translation_orbits(t: RackTable) -> List[int]:
    """算子群轨道编号（只用生成元，不物化群）"""
    A = t.table
    n = t.n
    orbit = [-1] * n
    next_id = 0
    for start in range(n):
        if orbit[start] != -1:
            continue
        orbit[start] = next_id
        queue = deque([start])
        while queue:
            x = queue.popleft()
            for z in set(A[x].tolist()):
                if orbit[z] == -1:
                    orbit[z] = next_id
                    queue.append(z)
        next_id += 1
    return orbit


def check_augmentation_identity(t: RackTable, G: Optional[PermGroup] = None) -> bool:
    """
    检查 f_{(y)g} = g^{-1} f_y g 对全部 y 与算子群元素 g 成立

    Args:
        t: rack 运算表
        G: 预先计算的算子群

    Returns:
        是否全部成立
    """
    G = G or operator_group(t)
    fs = translations(t)
    for g in G.elements:
        for y in range(t.n):
            if fs[g.images[y]] != conjugate(fs[y], g):
                logger.debug(f"增广恒等式失败: y={y + 1}, g={g.cycle_string()}")
                return False
    return True


PointInvariant = Tuple[Tuple[int, ...], bool, int]


def point_invariants(t: RackTable) -> List[PointInvariant]:
    """每个点的 (f_y 轮换型, 是否幂等, 轨道长度)"""
    orbit = translation_orbits(t)
    sizes = np.bincount(orbit)
    return [(translation(t, y).cycle_type(), t.entry(y, y) == y, int(sizes[orbit[y]]))
            for y in range(t.n)]


@dataclass(frozen=True)
class Fingerprint:
    """同构不变量摘要（必要条件）"""
    n: int
    point_invariants: Tuple[PointInvariant, ...]
    group_order: int
    orbit_sizes: Tuple[int, ...]

    def differences(self, other: 'Fingerprint') -> Dict[str, Tuple]:
        """不同的字段 → (self值, other值)"""
        return {name: (getattr(self, name), getattr(other, name))
                for name in ('n', 'point_invariants', 'group_order', 'orbit_sizes')
                if getattr(self, name) != getattr(other, name)}


def fingerprint(t: RackTable) -> Fingerprint:
    """
    计算指纹

    Args:
        t: rack 运算表

    Returns:
        Fingerprint
    """
    G = operator_group(t)
    return Fingerprint(
        n=t.n,
        point_invariants=tuple(sorted(point_invariants(t))),
        group_order=G.order,
        orbit_sizes=G.orbit_data.orbit_sizes,
    )


@dataclass(frozen=True)
class Isomorphism:
    """同构 θ：mapping[x] = θ(x)（0起始）"""
    mapping: Tuple[int, ...]

    def as_permutation(self) -> Permutation:
        return Permutation(self.mapping)

    def verify(self, a: RackTable, b: RackTable) -> bool:
        """θ(x) ▷' θ(y) = θ(x ▷ y) 对全部 x, y 成立"""
        theta = np.asarray(self.mapping, dtype=np.int64)
        return bool((b.table[theta[:, None], theta[None, :]] == theta[a.table]).all())

    def cycle_string(self) -> str:
        return self.as_permutation().cycle_string()


def _canonical_cap(n: int, cap: Optional[int]) -> None:
    cap = cap if cap is not None else get_config().canonical_cap
    if n > cap:
        raise ResourceCapError(f"order {n} exceeds canonical-form cap {cap}", 'canonical_cap', cap, n)


def is_isomorphic(a: RackTable, b: RackTable, cap: Optional[int] = None) -> Optional[Isomorphism]:
    """
    同构判定：先比指纹，再按点不变量回溯搜索 θ

    Args:
        a: rack 运算表
        b: rack 运算表
        cap: 阶上限

    Returns:
        经过验证的同构，不同构时返回 None
    """
    if a.n != b.n:
        return None
    n = a.n
    _canonical_cap(n, cap)
    if fingerprint(a) != fingerprint(b):
        return None

    inv_a = point_invariants(a)
    inv_b = point_invariants(b)
    A = a.table.tolist()
    B = b.table.tolist()

    # preimages[w] = 以 w 为结果的 (u, v)
    preimages: List[List[Tuple[int, int]]] = [[] for _ in range(n)]
    for u in range(n):
        for v in range(n):
            preimages[A[u][v]].append((u, v))

    theta = [-1] * n
    used = [False] * n

    def consistent(x: int) -> bool:
        tx = theta[x]
        for u in range(x + 1):
            tu = theta[u]
            for p, q, tp, tq in ((x, u, tx, tu), (u, x, tu, tx)):
                w = A[p][q]
                if theta[w] != -1 and theta[w] != B[tp][tq]:
                    return False
        for u, v in preimages[x]:
            if theta[u] != -1 and theta[v] != -1 and B[theta[u]][theta[v]] != tx:
                return False
        return True

    def search(x: int) -> bool:
        if x == n:
            return True
        for y in range(n):
            if used[y] or inv_b[y] != inv_a[x]:
                continue
            theta[x] = y
            used[y] = True
            if consistent(x) and search(x + 1):
                return True
            theta[x] = -1
            used[y] = False
        return False

    if not search(0):
        return None
    iso = Isomorphism(tuple(theta))
    check_invariant(iso.verify(a, b), "isomorphism witness does not verify")
    return iso


def _twin_classes(t: RackTable) -> List[int]:
    """孪生点划分：对换 (p q) 为自同构的点归为一类"""
    n = t.n
    twin = list(range(n))
    for p in range(n):
        if twin[p] != p:
            continue
        for q in range(p + 1, n):
            if twin[q] != q:
                continue
            images = list(range(n))
            images[p], images[q] = q, p
            if t.relabeled(images) == t:
                twin[q] = p
    return twin


def canonical_form(t: RackTable, cap: Optional[int] = None) -> RackTable:
    """
    规范形：n! 种重新编号中按行优先字典序最小的运算表

    第0行逐位置确定标签：结果点未编号时只能取下一个空闲标签（强制），
    否则只在取到当前位置最小值的候选上分支，并与已知最优第0行做分支限界；
    孪生点只展开一个

    Args:
        t: rack 运算表
        cap: 阶上限，默认取配置 canonical_cap

    Returns:
        规范形运算表
    """
    n = t.n
    _canonical_cap(n, cap)
    T = t.table.tolist()
    twin = _twin_classes(t)

    label = [-1] * n
    inv = [-1] * n
    best: Dict[str, Optional[object]] = {'table': None, 'row0': None}

    def assign(point: int, lab: int) -> None:
        label[point] = lab
        inv[lab] = point

    def unassign(point: int) -> None:
        inv[label[point]] = -1
        label[point] = -1

    def leaf() -> None:
        candidate = t.relabeled(label)
        if best['table'] is None or candidate.sort_key() < best['table'].sort_key():
            best['table'] = candidate
            best['row0'] = candidate.table[0].tolist()

    def extend(j: int, count: int, row0: List[int], better: bool) -> None:
        if j == n:
            leaf()
            return

        if inv[j] != -1:
            choices = [inv[j]]
        else:
            # label j 未分配时 count == j
            def value_for(q: int) -> int:
                p0 = q if j == 0 else inv[0]
                v = T[p0][q]
                if v == q:
                    return j
                if label[v] != -1:
                    return label[v]
                return j + 1

            unassigned = [q for q in range(n) if label[q] == -1]
            values = {q: value_for(q) for q in unassigned}
            least = min(values.values())
            seen_twins = set()
            choices = []
            for q in unassigned:
                if values[q] == least and twin[q] not in seen_twins:
                    seen_twins.add(twin[q])
                    choices.append(q)

        for q in choices:
            added = []
            if inv[j] == -1:
                assign(q, count)
                added.append(q)
            p0 = inv[0]
            v = T[p0][q]
            if label[v] == -1:
                assign(v, count + len(added))
                added.append(v)
            value = label[v]

            prune = False
            now_better = better
            reference = best['row0']
            if reference is not None and not better:
                if value > reference[j]:
                    prune = True
                elif value < reference[j]:
                    now_better = True
            if not prune:
                row0.append(value)
                extend(j + 1, count + len(added), row0, now_better)
                row0.pop()
            for point in reversed(added):
                unassign(point)

    extend(0, 0, [], False)
    result = best['table']
    check_invariant(result is not None and result.n == n, "canonical search produced no table")
    return result
