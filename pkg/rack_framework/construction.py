#!/usr/bin/env python3
"""
结构定理
由 (G, 轨道代表元 α_i, π_i) 构造 rack、把 rack 分解回这组数据、
检查两个附加条件，以及用抽象群实现 quandle/kei 的算子群
"""

import logging
import math
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from .group_table import GroupTable
from .perm_group import (
    OrbitData, Permutation, PermGroup, conjugate, generate, normal_closure, stabilizer
)
from .rack_core import RackKind, RackTable, operator_group, translation, validate
from .utils.error_handler import (
    BlueprintError, ConditionAError, DegreeMismatchError, InvariantViolation,
    NormalClosureError, check_invariant
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RackBlueprint:
    """rack 的结构数据：群 G、最小点轨道代表元、每个轨道一个 π_i ∈ G"""
    group: PermGroup
    reps: Tuple[int, ...]
    pis: Tuple[Permutation, ...]

    def __post_init__(self):
        """代表元与 π_i 的一致性检查（条件A由 check_blueprint 检查）"""
        object.__setattr__(self, 'reps', tuple(self.reps))
        object.__setattr__(self, 'pis', tuple(self.pis))
        expected = self.group.orbit_data.representatives
        if self.reps != expected:
            raise BlueprintError(
                f"representatives {[r + 1 for r in self.reps]} do not match the minimal orbit "
                f"representatives {[r + 1 for r in expected]}")
        if len(self.pis) != len(self.reps):
            raise BlueprintError(f"expected {len(self.reps)} pi entries, got {len(self.pis)}")
        for i, pi in enumerate(self.pis):
            if pi.degree != self.group.degree:
                raise DegreeMismatchError(pi.degree, self.group.degree)
            if pi not in self.group:
                raise BlueprintError(f"pi {pi.cycle_string()} of orbit {i + 1} is not in the group")

    @property
    def degree(self) -> int:
        return self.group.degree

    @property
    def orbit_data(self) -> OrbitData:
        return self.group.orbit_data


@dataclass(frozen=True)
class BlueprintFlags:
    """蓝图标志：条件B、quandle条件与kei条件"""
    condition_b: bool
    quandle_ok: bool
    kei_ok: bool

    def describe(self) -> str:
        return (f"condition_b={str(self.condition_b).lower()} "
                f"quandle_ok={str(self.quandle_ok).lower()} kei_ok={str(self.kei_ok).lower()}")

    def to_dict(self) -> Dict[str, bool]:
        return {'condition_b': self.condition_b, 'quandle_ok': self.quandle_ok, 'kei_ok': self.kei_ok}


def condition_a_witness(G: PermGroup, rep: int, pi: Permutation) -> Optional[Permutation]:
    """G_rep 中第一个不与 π 交换的元素，条件A成立时返回 None"""
    for h in stabilizer(G, rep).elements:
        if not h.commutes_with(pi):
            return h
    return None


def _require_condition_a(b: RackBlueprint) -> None:
    for i, (rep, pi) in enumerate(zip(b.reps, b.pis)):
        witness = condition_a_witness(b.group, rep, pi)
        if witness is not None:
            raise ConditionAError(i, witness, pi)


def check_blueprint(b: RackBlueprint) -> BlueprintFlags:
    """
    检查条件A并计算标志

    Args:
        b: 蓝图

    Returns:
        BlueprintFlags

    Raises:
        ConditionAError: 某个轨道上 C_G(π_i) 不包含 G_{α_i}
    """
    _require_condition_a(b)
    closure = normal_closure(b.group, list(b.pis))
    quandle_ok = all(pi.fixes(rep) for rep, pi in zip(b.reps, b.pis))
    kei_ok = quandle_ok and all(pi.is_involution() for pi in b.pis)
    flags = BlueprintFlags(condition_b=closure.order == b.group.order,
                           quandle_ok=quandle_ok, kei_ok=kei_ok)
    logger.debug(f"蓝图检查: {flags.describe()}")
    return flags


def build_rack(b: RackBlueprint, self_check: bool = True) -> RackTable:
    """
    由蓝图构造 rack：x = α_i·g 时 f_x = g^{-1} π_i g

    Args:
        b: 满足条件A的蓝图
        self_check: 为 False 时只检查条件A与 rack 公理，跳过标志与算子群的核对

    Returns:
        运算表，其算子群包含于 G，且恰在条件B成立时等于 G
    """
    flags = check_blueprint(b) if self_check else None
    if flags is None:
        _require_condition_a(b)
    od = b.orbit_data
    columns = [conjugate(b.pis[od.orbit_index[x]], od.transversal[x]) for x in range(b.degree)]
    table = RackTable.from_columns(columns)
    verdict = validate(table)
    check_invariant(verdict.is_rack, "built table is not a rack")
    check_invariant(all(f in b.group for f in columns), "translation outside the group")
    if flags is None:
        return table
    check_invariant(verdict.satisfies(RackKind.QUANDLE) == flags.quandle_ok,
                    f"built table is {verdict.kind.value} but quandle_ok={flags.quandle_ok}")
    check_invariant(verdict.satisfies(RackKind.KEI) == flags.kei_ok,
                    f"built table is {verdict.kind.value} but kei_ok={flags.kei_ok}")
    check_invariant((operator_group(table) == b.group) == flags.condition_b,
                    "operator group equality disagrees with condition (B)")
    return table


def transversal_independent(b: RackBlueprint) -> bool:
    """对每个点 x，所有满足 α_i·g = x 的 g 给出同一个 g^{-1} π_i g"""
    od = b.orbit_data
    values: Dict[int, Permutation] = {}
    for i, (rep, pi) in enumerate(zip(b.reps, b.pis)):
        for g in b.group.elements:
            x = g.images[rep]
            f = conjugate(pi, g)
            if values.setdefault(x, f) != f:
                return False
    return len(values) == b.degree


def decompose(t: RackTable) -> RackBlueprint:
    """
    把 rack 分解为蓝图：G 为算子群，α_i 为最小点代表元，π_i = f_{α_i}

    Args:
        t: rack 运算表

    Returns:
        满足条件A与条件B的蓝图，build_rack 可逐项还原 t
    """
    G = operator_group(t)
    reps = G.orbit_data.representatives
    blueprint = RackBlueprint(G, reps, tuple(translation(t, r) for r in reps))
    try:
        flags = check_blueprint(blueprint)
    except ConditionAError as e:
        raise InvariantViolation(f"decomposition violates condition (A): {e.message}") from e
    check_invariant(flags.condition_b, "decomposition violates condition (B)")
    check_invariant(build_rack(blueprint) == t, "build_rack(decompose(t)) differs from t")
    return blueprint


def _right_regular_images(G: GroupTable, h: int, blocks: List[Tuple[List[List[int]], Dict[int, int]]],
                          offsets: List[int]) -> Tuple[int, ...]:
    m = G.order
    images = [G.multiply(x, h) for x in range(m)]
    for (cosets, lookup), offset in zip(blocks, offsets):
        for coset in cosets:
            images.append(offset + lookup[G.multiply(coset[0], h)])
    return tuple(images)


def realize_operator_group(mult_table: GroupTable, seeds: Optional[Sequence[int]] = None) -> RackTable:
    """
    以给定抽象群为算子群的 quandle

    点集为 G 的正则拷贝（π = 1）与各种子 π 的 C_G(π) 右陪集空间的不交并；
    正则块在前（按元素编号），陪集块按种子顺序，块内陪集按最小元素排序

    Args:
        mult_table: 群乘法表
        seeds: 元素编号列表（0起始），默认取全部非单位元

    Returns:
        quandle 运算表

    Raises:
        NormalClosureError: 种子的正规闭包不是整个群
    """
    G = mult_table
    m = G.order
    if seeds is None:
        seeds = [a for a in range(m) if a != G.identity]
    seeds = list(seeds)
    for s in seeds:
        if not 0 <= s < m:
            raise NormalClosureError(f"seed {s + 1} is not an element of the group")
    if len(G.normal_closure(seeds)) != m:
        raise NormalClosureError("normal closure of the seeds is a proper subgroup",
                                 {'seeds': [s + 1 for s in seeds]})

    blocks: List[Tuple[List[List[int]], Dict[int, int]]] = []
    for pi in seeds:
        cosets = G.right_cosets(G.centralizer(pi))
        lookup = {x: idx for idx, coset in enumerate(cosets) for x in coset}
        blocks.append((cosets, lookup))
    offsets = []
    total = m
    for cosets, _ in blocks:
        offsets.append(total)
        total += len(cosets)

    rho = [_right_regular_images(G, h, blocks, offsets) for h in range(m)]
    for a in range(m):
        for b in range(m):
            ab = rho[G.multiply(a, b)]
            composed = tuple(rho[b][x] for x in rho[a])
            check_invariant(composed == ab, "coset action is not a homomorphism", a=a + 1, b=b + 1)

    image = generate([Permutation._trusted(r) for r in rho], degree=total)
    check_invariant(image.order == m, "regular action is not faithful", order=image.order)

    # 每块代表元为块内最小点，对应陪集的最小元素 x，π 取 x^{-1} π x
    pis = [Permutation.identity(total)]
    for pi, (cosets, _) in zip(seeds, blocks):
        x = cosets[0][0]
        pis.append(Permutation._trusted(rho[G.conjugate(pi, x)]))
    reps = tuple([0] + offsets)

    blueprint = RackBlueprint(image, reps, tuple(pis))
    flags = check_blueprint(blueprint)
    check_invariant(flags.condition_b and flags.quandle_ok, "realization is not a quandle blueprint")
    table = build_rack(blueprint)
    check_invariant(validate(table).satisfies(RackKind.QUANDLE), "realization is not a quandle")
    check_invariant(operator_group(table).order == m, "operator group order differs from the input")
    logger.info(f"抽象群实现: 阶 {m}, 种子 {len(seeds)} 个, quandle 阶 {total}")
    return table


def realize_kei_operator_group(mult_table: GroupTable) -> RackTable:
    """
    以给定抽象群为算子群的 kei（种子取全部对合）

    Raises:
        NormalClosureError: 群不由对合生成
    """
    if not mult_table.is_generated_by_involutions():
        raise NormalClosureError("group is not generated by its involutions")
    table = realize_operator_group(mult_table, mult_table.involutions())
    check_invariant(validate(table).satisfies(RackKind.KEI), "involution realization is not a kei")
    return table


def has_full_normal_closure_element(G: PermGroup) -> Optional[Permutation]:
    """
    正规闭包等于 G 的元素（取所在共轭类排序最前者），不存在时返回 None

    正规闭包只依赖共轭类，逐类检查代表元即可
    """
    for cls in G.conjugacy_classes:
        if normal_closure(G, [cls[0]]).order == G.order:
            return cls[0]
    return None


def operator_group_obstruction(G: PermGroup) -> bool:
    """G 传递且没有正规闭包为 G 的元素时为真：G 不可能是任何 rack 的算子群"""
    return G.is_transitive() and has_full_normal_closure_element(G) is None


def blueprint_sequences_bound(G: PermGroup) -> int:
    """算子群为 G 的 rack 个数上界 k(G)^s · ∏ n_i"""
    sizes = G.orbit_data.orbit_sizes
    return len(G.conjugacy_classes) ** len(sizes) * math.prod(sizes)
