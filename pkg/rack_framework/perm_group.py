#!/usr/bin/env python3
"""
置换群引擎
{1..n} 上的最小置换群实现：闭包、轨道、稳定子、中心化子、共轭类、正规闭包，
以及小对称群子群共轭类的枚举

约定：
- 右作用，compose(p, q) 表示先作用 p 再作用 q，即 x(pq) = ((x)p)q
- 内部点编号从0开始，所有对外文本格式从1开始
"""

import itertools
import logging
import math
from collections import Counter, deque
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Set, Tuple

from .config import get_config
from .utils.error_handler import (
    DegreeMismatchError, NormalClosureError, PointRangeError, ResourceCapError,
    check_invariant
)

logger = logging.getLogger(__name__)

Images = Tuple[int, ...]


@dataclass(frozen=True, order=True)
class Permutation:
    """
    置换：像数组 images[x] 为点 x 的像（0起始）
    比较顺序为像序列的字典序
    """
    images: Images

    def __post_init__(self):
        """双射检查"""
        if len(self.images) == 0:
            raise ValueError("置换的次数必须为正整数")
        if sorted(self.images) != list(range(len(self.images))):
            raise ValueError(f"像序列不是 0..{len(self.images) - 1} 的排列: {self.images}")

    @classmethod
    def _trusted(cls, images: Images) -> 'Permutation':
        # 内部已知为双射时跳过检查
        p = object.__new__(cls)
        object.__setattr__(p, 'images', images)
        return p

    @classmethod
    def identity(cls, degree: int) -> 'Permutation':
        """恒等置换"""
        return cls(tuple(range(degree)))

    @classmethod
    def from_images(cls, images: Sequence[int], one_based: bool = False) -> 'Permutation':
        """
        从像序列创建置换

        Args:
            images: 像序列
            one_based: 序列是否为1起始编号

        Returns:
            置换
        """
        offset = 1 if one_based else 0
        return cls(tuple(int(v) - offset for v in images))

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], degree: int,
                    one_based: bool = True) -> 'Permutation':
        """
        从轮换列表创建置换，轮换依次复合（先左后右）

        Args:
            cycles: 轮换序列，例如 [(1, 2), (3, 4)]
            degree: 次数
            one_based: 轮换中的点是否为1起始编号

        Returns:
            置换
        """
        offset = 1 if one_based else 0
        result = cls.identity(degree)
        for cycle in cycles:
            points = [int(c) - offset for c in cycle]
            for x in points:
                if not 0 <= x < degree:
                    raise PointRangeError(x, degree)
            if len(set(points)) != len(points):
                raise ValueError(f"轮换中出现重复点: {tuple(cycle)}")
            images = list(range(degree))
            for a, b in zip(points, points[1:] + points[:1]):
                images[a] = b
            result = result * cls._trusted(tuple(images))
        return result

    @property
    def degree(self) -> int:
        return len(self.images)

    def apply(self, x: int) -> int:
        """点 x 在置换下的像"""
        return self.images[x]

    def __mul__(self, other: 'Permutation') -> 'Permutation':
        return compose(self, other)

    def inverse(self) -> 'Permutation':
        inv = [0] * self.degree
        for x, y in enumerate(self.images):
            inv[y] = x
        return Permutation._trusted(tuple(inv))

    def conjugate(self, g: 'Permutation') -> 'Permutation':
        """g^{-1} self g"""
        return conjugate(self, g)

    def power(self, k: int) -> 'Permutation':
        if k < 0:
            return self.inverse().power(-k)
        result = Permutation.identity(self.degree)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def is_identity(self) -> bool:
        return all(x == y for x, y in enumerate(self.images))

    def cycles(self) -> List[Tuple[int, ...]]:
        """非平凡轮换（0起始），每个轮换以最小点开头，按首点排序"""
        seen = [False] * self.degree
        result = []
        for start in range(self.degree):
            if seen[start]:
                continue
            cycle = [start]
            seen[start] = True
            x = self.images[start]
            while x != start:
                cycle.append(x)
                seen[x] = True
                x = self.images[x]
            if len(cycle) > 1:
                result.append(tuple(cycle))
        return result

    def cycle_type(self) -> Tuple[int, ...]:
        """轮换型：所有轮换长度（含不动点）的升序元组"""
        return _cycle_type(self.images)

    @property
    def order(self) -> int:
        return math.lcm(*self.cycle_type())

    def is_involution(self) -> bool:
        """阶整除2（恒等也算）"""
        return all(self.images[y] == x for x, y in enumerate(self.images))

    def is_even(self) -> bool:
        return sum(length - 1 for length in self.cycle_type()) % 2 == 0

    def fixes(self, x: int) -> bool:
        return self.images[x] == x

    def commutes_with(self, other: 'Permutation') -> bool:
        a, b = self.images, other.images
        return all(b[a[x]] == a[b[x]] for x in range(len(a)))

    def one_based_images(self) -> List[int]:
        return [y + 1 for y in self.images]

    def cycle_string(self) -> str:
        """1起始轮换记号，恒等置换为 "()" """
        cycles = self.cycles()
        if not cycles:
            return "()"
        return "".join("(" + " ".join(str(x + 1) for x in cycle) + ")" for cycle in cycles)

    def __str__(self):
        return self.cycle_string()

    def __repr__(self):
        return f"Permutation('{self.cycle_string()}', degree={self.degree})"


def _cycle_type(images: Images) -> Tuple[int, ...]:
    seen = [False] * len(images)
    lengths = []
    for start in range(len(images)):
        if seen[start]:
            continue
        length = 0
        x = start
        while not seen[x]:
            seen[x] = True
            x = images[x]
            length += 1
        lengths.append(length)
    return tuple(sorted(lengths))


def _mul(a: Images, b: Images) -> Images:
    # 先a后b
    return tuple(map(b.__getitem__, a))


def identity(degree: int) -> Permutation:
    """恒等置换"""
    return Permutation.identity(degree)


def compose(p: Permutation, q: Permutation) -> Permutation:
    """
    复合置换：先作用 p 再作用 q

    Args:
        p: 第一个置换
        q: 第二个置换

    Returns:
        x ↦ q(p(x))
    """
    if p.degree != q.degree:
        raise DegreeMismatchError(p.degree, q.degree)
    return Permutation._trusted(_mul(p.images, q.images))


def inverse(p: Permutation) -> Permutation:
    """逆置换"""
    return p.inverse()


def conjugate(p: Permutation, g: Permutation) -> Permutation:
    """
    共轭 g^{-1} p g（右作用约定），保持轮换型

    Args:
        p: 被共轭的置换
        g: 共轭元

    Returns:
        g^{-1} p g
    """
    if p.degree != g.degree:
        raise DegreeMismatchError(p.degree, g.degree)
    # x ↦ g(p(g^{-1}(x)))，等价于 images[g[y]] = g[p[y]]
    gi, pi = g.images, p.images
    out = [0] * len(gi)
    for y in range(len(gi)):
        out[gi[y]] = gi[pi[y]]
    return Permutation._trusted(tuple(out))


@dataclass(frozen=True)
class OrbitData:
    """轨道数据：轨道划分、最小点代表元、点到轨道映射、陪集代表（横截）"""
    orbits: Tuple[Tuple[int, ...], ...]
    representatives: Tuple[int, ...]
    orbit_index: Tuple[int, ...]
    transversal: Tuple[Permutation, ...]

    @property
    def orbit_sizes(self) -> Tuple[int, ...]:
        return tuple(sorted(len(o) for o in self.orbits))

    def orbit_of(self, x: int) -> Tuple[int, ...]:
        return self.orbits[self.orbit_index[x]]

    def representative_of(self, x: int) -> int:
        return self.representatives[self.orbit_index[x]]


class PermGroup:
    """
    置换群：生成元列表 + 物化的元素集合（只适用于小阶）
    元素按像序列排序；轨道与共轭类惰性缓存（幂等填充）
    """

    def __init__(self, degree: int, generators: Sequence[Permutation],
                 elements: Sequence[Permutation]):
        self.degree = degree
        self.generators = tuple(generators)
        self.elements = tuple(sorted(elements))
        self._element_set = frozenset(self.elements)
        self._stabilizers: Dict[int, "PermGroup"] = {}

    @classmethod
    def _from_images(cls, degree: int, generators: Iterable[Images],
                     elements: Iterable[Images]) -> 'PermGroup':
        return cls(degree,
                   [Permutation._trusted(g) for g in generators],
                   [Permutation._trusted(e) for e in elements])

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def element_set(self) -> FrozenSet[Permutation]:
        return self._element_set

    @property
    def identity(self) -> Permutation:
        return Permutation.identity(self.degree)

    def __contains__(self, p: Permutation) -> bool:
        return p in self._element_set

    def __iter__(self):
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __eq__(self, other) -> bool:
        return (isinstance(other, PermGroup) and self.degree == other.degree
                and self._element_set == other._element_set)

    def __hash__(self):
        return hash((self.degree, self._element_set))

    def sort_key(self) -> Tuple[int, Tuple[Images, ...]]:
        """确定性排序键：(阶, 排序后的元素列表)"""
        return (self.order, tuple(e.images for e in self.elements))

    def __repr__(self):
        gens = ", ".join(g.cycle_string() for g in self.generators) or "()"
        return f"PermGroup(degree={self.degree}, order={self.order}, gens=[{gens}])"

    def is_trivial(self) -> bool:
        return self.order == 1

    def is_abelian(self) -> bool:
        return all(a.commutes_with(b) for a, b in itertools.combinations(self.generators, 2))

    def is_transitive(self) -> bool:
        return len(self.orbit_data.orbits) == 1

    def is_subgroup_of(self, other: 'PermGroup') -> bool:
        return self.degree == other.degree and self._element_set <= other._element_set

    @cached_property
    def orbit_data(self) -> OrbitData:
        return orbit_data(self)

    @cached_property
    def conjugacy_classes(self) -> Tuple[Tuple[Permutation, ...], ...]:
        return tuple(_compute_conjugacy_classes(self))

    @cached_property
    def class_index(self) -> Dict[Permutation, int]:
        """元素 → 共轭类编号"""
        return {p: i for i, cls in enumerate(self.conjugacy_classes) for p in cls}

    def class_of(self, p: Permutation) -> Tuple[Permutation, ...]:
        return self.conjugacy_classes[self.class_index[p]]

    def cycle_type_profile(self) -> Tuple[Tuple[Tuple[int, ...], int], ...]:
        """元素轮换型的多重集，用于共轭判定的快速剪枝"""
        return tuple(sorted(Counter(e.cycle_type() for e in self.elements).items()))


def _order_cap(cap: Optional[int]) -> int:
    return cap if cap is not None else get_config().order_cap


def _closure(degree: int, generators: Sequence[Images], cap: int) -> Set[Images]:
    """生成元在复合下的闭包（从恒等出发右乘生成元的广度优先搜索）"""
    ident = tuple(range(degree))
    elements = {ident}
    queue = deque([ident])
    while queue:
        e = queue.popleft()
        for s in generators:
            r = tuple(map(s.__getitem__, e))
            if r not in elements:
                elements.add(r)
                if len(elements) > cap:
                    raise ResourceCapError(
                        f"group order exceeds cap {cap}; raise --order-cap to allow larger groups",
                        'order_cap', cap)
                queue.append(r)
    return elements


def _reduce_generators(degree: int, elements: Iterable[Images], cap: int) -> List[Images]:
    """贪心选取小生成元集：按排序依次加入尚未被生成的元素"""
    gens: List[Images] = []
    current = {tuple(range(degree))}
    for e in sorted(elements):
        if e not in current:
            gens.append(e)
            current = _closure(degree, gens, cap)
    return gens


def _group_from_elements(degree: int, elements: Iterable[Images], cap: Optional[int] = None) -> PermGroup:
    elements = set(elements)
    gens = _reduce_generators(degree, elements, _order_cap(cap))
    return PermGroup._from_images(degree, gens, elements)


def generate(gens: Sequence[Permutation], degree: Optional[int] = None,
             cap: Optional[int] = None) -> PermGroup:
    """
    生成置换群 ⟨gens⟩

    Args:
        gens: 生成元（次数必须一致）
        degree: 次数，gens为空时必须给出
        cap: 群阶上限，默认取配置 order_cap

    Returns:
        物化的置换群

    Raises:
        ResourceCapError: 群阶超过上限
    """
    gens = list(gens)
    if degree is None:
        if not gens:
            raise ValueError("生成元为空时必须指定 degree")
        degree = gens[0].degree
    for g in gens:
        if g.degree != degree:
            raise DegreeMismatchError(g.degree, degree)

    # 去掉恒等与重复的生成元，保持给定顺序
    unique: List[Permutation] = []
    for g in gens:
        if not g.is_identity() and g not in unique:
            unique.append(g)

    elements = _closure(degree, [g.images for g in unique], _order_cap(cap))
    group = PermGroup._from_images(degree, [g.images for g in unique], elements)
    logger.debug(f"生成置换群: degree={degree}, 生成元 {len(unique)} 个, 阶 {group.order}")
    return group


def orbit_data(G: PermGroup) -> OrbitData:
    """
    计算轨道、最小点代表元与横截

    Args:
        G: 置换群

    Returns:
        OrbitData，满足 rep(x) · transversal[x] = x
    """
    n = G.degree
    orbit_index = [-1] * n
    transversal: List[Optional[Permutation]] = [None] * n
    orbits: List[Tuple[int, ...]] = []
    representatives: List[int] = []
    ident = G.identity

    for start in range(n):
        if orbit_index[start] != -1:
            continue
        oid = len(orbits)
        orbit_index[start] = oid
        transversal[start] = ident
        members = [start]
        queue = deque([start])
        while queue:
            y = queue.popleft()
            for s in G.generators:
                z = s.images[y]
                if orbit_index[z] == -1:
                    orbit_index[z] = oid
                    transversal[z] = transversal[y] * s
                    members.append(z)
                    queue.append(z)
        orbits.append(tuple(sorted(members)))
        representatives.append(start)

    return OrbitData(
        orbits=tuple(orbits),
        representatives=tuple(representatives),
        orbit_index=tuple(orbit_index),
        transversal=tuple(transversal),
    )


def stabilizer(G: PermGroup, point: int) -> PermGroup:
    """
    点稳定子 G_point

    Args:
        G: 置换群
        point: 点（0起始）

    Returns:
        固定该点的全部元素构成的子群
    """
    if not 0 <= point < G.degree:
        raise PointRangeError(point, G.degree)
    if point in G._stabilizers:
        return G._stabilizers[point]
    elements = [e.images for e in G.elements if e.images[point] == point]
    stab = _group_from_elements(G.degree, elements)
    orbit_size = len(G.orbit_data.orbit_of(point))
    check_invariant(G.order == stab.order * orbit_size,
                    "orbit-stabilizer violated", order=G.order, stabilizer=stab.order, orbit=orbit_size)
    G._stabilizers[point] = stab
    return stab


def centralizer(G: PermGroup, p: Permutation) -> PermGroup:
    """
    中心化子 C_G(p)，p 不必属于 G

    Args:
        G: 置换群
        p: 置换

    Returns:
        G 中与 p 交换的全部元素构成的子群
    """
    if p.degree != G.degree:
        raise DegreeMismatchError(p.degree, G.degree)
    elements = [e.images for e in G.elements if e.commutes_with(p)]
    return _group_from_elements(G.degree, elements)


def _conjugacy_class_images(G: PermGroup, x: Permutation) -> Set[Images]:
    return {conjugate(x, g).images for g in G.elements}


def _compute_conjugacy_classes(G: PermGroup) -> List[Tuple[Permutation, ...]]:
    assigned: Set[Images] = set()
    classes: List[Tuple[Permutation, ...]] = []
    for x in G.elements:
        if x.images in assigned:
            continue
        cls = _conjugacy_class_images(G, x)
        assigned |= cls
        centralizer_order = sum(1 for e in G.elements if e.commutes_with(x))
        check_invariant(len(cls) * centralizer_order == G.order,
                        "class size differs from |G|/|C_G(x)|",
                        element=x.cycle_string(), size=len(cls), centralizer=centralizer_order)
        classes.append(tuple(Permutation._trusted(c) for c in sorted(cls)))

    check_invariant(sum(len(c) for c in classes) == G.order, "class equation violated", order=G.order)
    n = G.degree
    if n > 2:
        # 共轭类个数 ≤ 3^{(n-1)/2}，用整数平方比较避免浮点
        check_invariant(len(classes) ** 2 <= 3 ** (n - 1),
                        "conjugacy class count exceeds 3^((n-1)/2)", degree=n, classes=len(classes))
    return classes


def conjugacy_classes(G: PermGroup) -> List[Tuple[Permutation, ...]]:
    """
    共轭类划分，按类中最小元素排序

    Args:
        G: 置换群

    Returns:
        共轭类列表（每个类为排序后的元素元组）
    """
    return list(G.conjugacy_classes)


def maroti_bound_holds(G: PermGroup) -> bool:
    """共轭类个数是否满足 3^{(n-1)/2} 上界（n ≤ 2 时不适用，返回True）"""
    n = G.degree
    return n <= 2 or len(G.conjugacy_classes) ** 2 <= 3 ** (n - 1)


def normal_closure(G: PermGroup, S: Sequence[Permutation]) -> PermGroup:
    """
    S 在 G 中的正规闭包：包含 S 所有 G-共轭的最小子群

    Args:
        G: 置换群
        S: G 的元素列表

    Returns:
        正规闭包

    Raises:
        NormalClosureError: S 中有元素不属于 G
    """
    generators: Set[Images] = set()
    for s in S:
        if s not in G:
            raise NormalClosureError(f"{s.cycle_string()} is not an element of the group",
                                     {'element': s.cycle_string()})
        generators.update(c.images for c in G.class_of(s) if not c.is_identity())

    elements = _closure(G.degree, sorted(generators), _order_cap(None))
    closure = _group_from_elements(G.degree, elements)
    for g in G.generators:
        for h in closure.generators:
            check_invariant(conjugate(h, g) in closure, "normal closure is not normal",
                            generator=g.cycle_string(), element=h.cycle_string())
    return closure


def normal_closure_order(G: PermGroup, class_ids: Iterable[int]) -> int:
    """若干共轭类并集生成的子群的阶（正规闭包只依赖共轭类）"""
    generators = sorted({c.images for i in class_ids for c in G.conjugacy_classes[i]
                         if not c.is_identity()})
    return len(_closure(G.degree, generators, _order_cap(None)))


def derived_subgroup(G: PermGroup) -> PermGroup:
    """换位子群：生成元换位子的正规闭包"""
    commutators = [a.inverse() * b.inverse() * a * b
                   for a, b in itertools.product(G.generators, repeat=2)]
    return normal_closure(G, commutators or [G.identity])


def is_subgroup(H: PermGroup, G: PermGroup) -> bool:
    """H 是否为 G 的子群"""
    return H.is_subgroup_of(G)


def symmetric_group(n: int, cap: Optional[int] = None) -> PermGroup:
    """
    对称群 Sym(n)

    Args:
        n: 次数
        cap: 群阶上限

    Returns:
        物化的 Sym(n)
    """
    cap = _order_cap(cap)
    if math.factorial(n) > cap:
        raise ResourceCapError(f"Sym({n}) has order {math.factorial(n)} > cap {cap}",
                               'order_cap', cap, math.factorial(n))
    gens = []
    if n >= 2:
        gens.append(Permutation.from_cycles([(1, 2)], n))
    if n >= 3:
        gens.append(Permutation.from_cycles([tuple(range(1, n + 1))], n))
    elements = list(itertools.permutations(range(n)))
    return PermGroup._from_images(n, [g.images for g in gens], elements)


def alternating_group(n: int, cap: Optional[int] = None) -> PermGroup:
    """交错群 Alt(n)"""
    sym = symmetric_group(n, cap)
    elements = [e.images for e in sym.elements if e.is_even()]
    return _group_from_elements(n, elements, cap)


def _bucket_key(H: PermGroup) -> tuple:
    return (H.order, H.cycle_type_profile(), H.orbit_data.orbit_sizes)


def are_conjugate(H: PermGroup, K: PermGroup,
                  sym: Optional[PermGroup] = None) -> Optional[Permutation]:
    """
    判定 H 与 K 在 Sym(n) 中是否共轭

    Args:
        H: 子群
        K: 子群
        sym: 预先物化的 Sym(n)

    Returns:
        σ 使得 σ^{-1} H σ = K，不共轭时返回 None
    """
    if H.degree != K.degree or H.order != K.order:
        return None
    if _bucket_key(H) != _bucket_key(K):
        return None
    sym = sym or symmetric_group(H.degree)
    gens = H.generators
    for sigma in sym.elements:
        if all(conjugate(h, sigma) in K for h in gens):
            return sigma
    return None


def normalizer_in_symmetric(H: PermGroup, sym: Optional[PermGroup] = None) -> PermGroup:
    """H 在 Sym(n) 中的正规化子"""
    sym = sym or symmetric_group(H.degree)
    elements = [s.images for s in sym.elements
                if all(conjugate(h, s) in H for h in H.generators)]
    return _group_from_elements(H.degree, elements)


def _coset_prime_order(x: Permutation, H: PermGroup) -> bool:
    """x 模 H 的阶是否为素数"""
    power = x
    k = 1
    while power not in H:
        power = power * x
        k += 1
    return k > 1 and all(k % p for p in range(2, math.isqrt(k) + 1))


def _perfect_seeds(sym: PermGroup) -> List[Set[Images]]:
    """由偶对合与一个偶置换生成的非平凡完全子群"""
    n = sym.degree
    if n < 5:
        return []
    even = [e for e in sym.elements if e.is_even()]
    involution_reps: Dict[Tuple[int, ...], Permutation] = {}
    for e in even:
        if e.order == 2 and e.cycle_type() not in involution_reps:
            involution_reps[e.cycle_type()] = e

    cap = _order_cap(None)
    seen: Set[FrozenSet[Images]] = set()
    seeds: List[Set[Images]] = []
    for a in involution_reps.values():
        for b in even:
            elements = _closure(n, [a.images, b.images], cap)
            key = frozenset(elements)
            if key in seen:
                continue
            seen.add(key)
            if len(elements) < 60:
                continue
            group = PermGroup._from_images(n, [a.images, b.images], elements)
            if derived_subgroup(group) == group:
                seeds.append(elements)
    logger.debug(f"Sym({n}) 完全子群种子 {len(seeds)} 个")
    return seeds


def subgroup_classes(n: int, degree_cap: Optional[int] = None) -> List[PermGroup]:
    """
    Sym(n) 子群共轭类代表元（每类恰好一个）

    以循环扩张分层构造：对已知代表元 H，用正规化 H 且模 H 阶为素数的元素扩张，
    并按 Sym(n)-共轭去重；完全子群无法由循环扩张得到，预先作为种子加入

    Args:
        n: 次数
        degree_cap: 次数上限，默认取配置 degree_cap

    Returns:
        按 (阶, 元素列表) 排序的代表元列表

    Raises:
        ResourceCapError: n 超过上限
    """
    cap = degree_cap if degree_cap is not None else get_config().degree_cap
    if n > cap:
        raise ResourceCapError(f"subgroup classes of Sym({n}) exceed degree cap {cap}; "
                               f"raise --degree-cap to allow it", 'degree_cap', cap, n)
    if n < 1:
        raise ValueError("n必须为正整数")

    sym = symmetric_group(n)
    order_cap = _order_cap(None)
    trivial = PermGroup._from_images(n, [], [tuple(range(n))])
    representatives: List[PermGroup] = []
    buckets: Dict[tuple, List[PermGroup]] = {}
    queue: deque = deque()

    def register(group: PermGroup) -> None:
        key = _bucket_key(group)
        for known in buckets.get(key, []):
            if are_conjugate(group, known, sym) is not None:
                return
        buckets.setdefault(key, []).append(group)
        representatives.append(group)
        queue.append(group)

    register(trivial)
    for elements in _perfect_seeds(sym):
        register(_group_from_elements(n, elements))

    while queue:
        H = queue.popleft()
        normalizer = [s for s in sym.elements
                      if s not in H and all(conjugate(h, s) in H for h in H.generators)]
        covered: Set[Permutation] = set()
        for x in normalizer:
            if x in covered or not _coset_prime_order(x, H):
                continue
            gens = [h.images for h in H.generators] + [x.images]
            elements = _closure(n, gens, order_cap)
            extension = PermGroup._from_images(n, gens, elements)
            covered |= extension.element_set
            register(extension)

    representatives.sort(key=PermGroup.sort_key)
    logger.info(f"Sym({n}) 子群共轭类: {len(representatives)} 个")
    return representatives
