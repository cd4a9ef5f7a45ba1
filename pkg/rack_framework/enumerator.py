#!/usr/bin/env python3
"""
同构类枚举
两个独立引擎：按列回溯的暴力引擎，与按子群共轭类搜索 π 序列的结构引擎；
两者结果交叉验证
"""

import itertools
import logging
import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Callable, Dict, FrozenSet, Iterable, List, Optional, Set, Tuple

from .config import HARD_BRUTE_CAP, get_config
from .construction import RackBlueprint, blueprint_sequences_bound, build_rack
from .lower_bound import LowerBoundReport, lower_bound_report
from .perm_group import (
    Permutation, PermGroup, conjugate, normal_closure_order, stabilizer, subgroup_classes,
    symmetric_group
)
from .rack_core import RackKind, RackTable, canonical_form, operator_group, validate
from .utils.error_handler import InvariantViolation, ResourceCapError, check_invariant
from .utils.logging_config import log_performance
from .utils.parallel import apply_pool

logger = logging.getLogger(__name__)

LOWER_CONSTANT = 0.25
UPPER_CONSTANT = math.log2(24) / 6 + math.log2(3) / 2

ENUMERABLE_KINDS = (RackKind.RACK, RackKind.QUANDLE, RackKind.KEI)


class Engine(str, Enum):
    """枚举引擎"""
    BRUTE = 'brute'
    STRUCTURED = 'structured'
    BOTH = 'both'


@dataclass(frozen=True)
class EnumerationRequest:
    """枚举请求"""
    n: int
    kind: RackKind = RackKind.RACK
    engine: Engine = Engine.BOTH
    emit_tables: bool = False

    def __post_init__(self):
        object.__setattr__(self, 'kind', RackKind(self.kind))
        object.__setattr__(self, 'engine', Engine(self.engine))
        if self.n < 1:
            raise ValueError("n必须为正整数")
        if self.kind == RackKind.NOT_RACK:
            raise ValueError("kind必须是 rack、quandle 或 kei")


@dataclass(frozen=True)
class GroupBreakdown:
    """某个算子群共轭类下的同构类个数"""
    group_order: int
    orbit_sizes: Tuple[int, ...]
    count: int
    generators: Tuple[str, ...] = ()

    def to_dict(self) -> Dict[str, Any]:
        return {'group_order': self.group_order, 'orbit_sizes': list(self.orbit_sizes),
                'count': self.count, 'generators': list(self.generators)}

    def describe(self) -> str:
        gens = ", ".join(self.generators) or "()"
        return (f"group_order={self.group_order} orbit_sizes={list(self.orbit_sizes)} "
                f"count={self.count} gens=[{gens}]")


@dataclass(frozen=True)
class EnumerationResult:
    """枚举结果：同构类个数、排序后的规范代表元、按算子群的分解"""
    n: int
    kind: RackKind
    engine: Engine
    count: int
    representatives: Tuple[RackTable, ...] = ()
    breakdown: Tuple[GroupBreakdown, ...] = field(default_factory=tuple)

    def summary(self) -> str:
        return f"n={self.n} kind={self.kind.value} engine={self.engine.value} count={self.count}"

    def to_dict(self, representatives_path: Optional[str] = None) -> Dict[str, Any]:
        return {
            'n': self.n,
            'kind': self.kind.value,
            'engine': self.engine.value,
            'count': self.count,
            'group_breakdown': [b.to_dict() for b in self.breakdown],
            'representatives_path': representatives_path,
        }


def _candidate_columns(n: int, kind: RackKind, y: int) -> List[Permutation]:
    """第 y 列的候选：rack 为全部置换；quandle 固定 y；kei 还要求阶整除2"""
    result = []
    for p in symmetric_group(n).elements:
        if kind.implies(RackKind.QUANDLE) and not p.fixes(y):
            continue
        if kind == RackKind.KEI and not p.is_involution():
            continue
        result.append(p)
    return result


def _brute_search(n: int, kind: RackKind, first: Permutation) -> List[RackTable]:
    """
    固定第0列后的深度优先搜索

    已赋值的 y、z 满足 f_{f_z(y)} = f_z^{-1} f_y f_z；若 f_z(y) 尚未赋值，
    则该列被强制为共轭值
    """
    candidates = [_candidate_columns(n, kind, y) for y in range(n)]
    allowed = [set(c) for c in candidates]
    columns: List[Optional[Permutation]] = [None] * n
    found: Set[RackTable] = set()
    leaves = 0

    def constrain(y: int, forced: Dict[int, Permutation]) -> Optional[Dict[int, Permutation]]:
        forced = dict(forced)
        pairs = [(a, y) for a in range(y + 1)] + [(y, b) for b in range(y)]
        for a, b in pairs:
            w = columns[b].images[a]
            required = conjugate(columns[a], columns[b])
            if w <= y:
                if columns[w] != required:
                    return None
            elif w in forced:
                if forced[w] != required:
                    return None
            elif required in allowed[w]:
                forced[w] = required
            else:
                return None
        return forced

    def search(y: int, forced: Dict[int, Permutation]) -> None:
        nonlocal leaves
        if y == n:
            leaves += 1
            table = RackTable.from_columns(columns)
            check_invariant(validate(table).satisfies(kind), "brute leaf fails the axioms")
            found.add(canonical_form(table))
            return
        options = [forced[y]] if y in forced else candidates[y]
        for f in options:
            columns[y] = f
            extended = constrain(y, forced)
            if extended is not None:
                search(y + 1, extended)
        columns[y] = None

    if first in allowed[0]:
        columns[0] = first
        start = constrain(0, {})
        if start is not None:
            search(1, start)
    logger.debug(f"暴力子树 f_1={first.cycle_string()}: {leaves} 个带标号表, {len(found)} 个同构类")
    return sorted(found)


def _check_brute_cap(n: int, cap: Optional[int]) -> None:
    cap = cap if cap is not None else get_config().brute_cap
    cap = min(cap, HARD_BRUTE_CAP)
    if n > cap:
        raise ResourceCapError(f"brute engine at n={n} exceeds brute cap {cap}; "
                               f"use --engine structured or raise --brute-cap", 'brute_cap', cap, n)
    if n >= 5:
        logger.warning(f"暴力引擎 n={n} 为实验性设置，耗时可能较长")


@log_performance()
def enumerate_brute(req: EnumerationRequest, cap: Optional[int] = None,
                    jobs: Optional[int] = None) -> EnumerationResult:
    """
    暴力引擎：按 y 递增逐列赋值 f_y，增量检查自分配律，叶子规范化去重

    Args:
        req: 枚举请求
        cap: 暴力引擎阶上限
        jobs: 进程数（按第一列的选择分发）

    Returns:
        EnumerationResult
    """
    n, kind = req.n, req.kind
    _check_brute_cap(n, cap)
    config = get_config()
    firsts = _candidate_columns(n, kind, 0)
    subtrees = apply_pool(_brute_search, [(n, kind, f) for f in firsts],
                          jobs=jobs if jobs is not None else config.jobs,
                          desc=f"brute n={n} {kind.value}", show_progress=config.show_progress)
    representatives = tuple(sorted(set().union(*map(set, subtrees))))
    logger.info(f"暴力引擎 n={n} kind={kind.value}: {len(representatives)} 个同构类")
    return EnumerationResult(n=n, kind=kind, engine=Engine.BRUTE, count=len(representatives),
                             representatives=representatives)


def class_size_filter(G: PermGroup, orbit_len: int) -> Callable[[Permutation], bool]:
    """
    共轭类大小预筛：C_G(π) ⊇ G_α 蕴含 |class(π)| ≤ 轨道长度

    Args:
        G: 置换群
        orbit_len: 轨道长度

    Returns:
        元素谓词
    """
    def accept(p: Permutation) -> bool:
        return len(G.class_of(p)) <= orbit_len
    return accept


def _orbit_candidates(G: PermGroup, orbit: int, kind: RackKind) -> List[Permutation]:
    od = G.orbit_data
    rep = od.representatives[orbit]
    accept = class_size_filter(G, len(od.orbits[orbit]))
    stab_gens = stabilizer(G, rep).generators
    result = []
    for p in G.elements:
        if not accept(p):
            continue
        if not all(h.commutes_with(p) for h in stab_gens):
            continue
        if kind.implies(RackKind.QUANDLE) and not p.fixes(rep):
            continue
        if kind == RackKind.KEI and not p.is_involution():
            continue
        result.append(p)
    return result


def _structured_search(G: PermGroup, kind: RackKind) -> Tuple[List[RackTable], GroupBreakdown]:
    """单个子群共轭类代表元 G 上的 π 序列搜索"""
    od = G.orbit_data
    pools = [_orbit_candidates(G, i, kind) for i in range(len(od.orbits))]
    found: Set[RackTable] = set()
    closure_full: Dict[FrozenSet[int], bool] = {}
    sequences = 0

    for pis in itertools.product(*pools):
        key = frozenset(G.class_index[p] for p in pis)
        if key not in closure_full:
            closure_full[key] = normal_closure_order(G, key) == G.order
        if not closure_full[key]:
            continue
        sequences += 1
        table = build_rack(RackBlueprint(G, od.representatives, pis), self_check=False)
        check_invariant(operator_group(table) == G,
                        "operator group differs from the class representative",
                        group_order=G.order, pis=[p.cycle_string() for p in pis])
        found.add(canonical_form(table))

    bound = blueprint_sequences_bound(G)
    check_invariant(len(found) <= bound, "class count exceeds the sequence bound",
                    count=len(found), bound=bound, group_order=G.order)
    breakdown = GroupBreakdown(group_order=G.order, orbit_sizes=od.orbit_sizes, count=len(found),
                               generators=tuple(g.cycle_string() for g in G.generators))
    logger.debug(f"结构引擎 |G|={G.order} 轨道 {list(od.orbit_sizes)}: "
                 f"{sequences} 个满足条件的序列, {len(found)} 个同构类")
    return sorted(found), breakdown


@log_performance()
def enumerate_structured(req: EnumerationRequest, degree_cap: Optional[int] = None,
                         jobs: Optional[int] = None) -> EnumerationResult:
    """
    结构引擎：对 Sym(n) 每个子群共轭类代表元 G 搜索满足条件A、条件B与类型条件的 π 序列

    Args:
        req: 枚举请求
        degree_cap: 子群共轭类次数上限
        jobs: 进程数（按子群共轭类分发）

    Returns:
        EnumerationResult，附按算子群的分解
    """
    n, kind = req.n, req.kind
    config = get_config()
    classes = subgroup_classes(n, degree_cap)
    per_group = apply_pool(_structured_search, [(G, kind) for G in classes],
                           jobs=jobs if jobs is not None else config.jobs,
                           desc=f"structured n={n} {kind.value}", show_progress=config.show_progress)

    union: Set[RackTable] = set()
    breakdown = []
    for tables, row in per_group:
        union.update(tables)
        if row.count:
            breakdown.append(row)
    check_invariant(len(union) == sum(b.count for b in breakdown),
                    "per-group counts do not partition the total", total=len(union))
    representatives = tuple(sorted(union))
    logger.info(f"结构引擎 n={n} kind={kind.value}: {len(representatives)} 个同构类, "
                f"{len(breakdown)} 个算子群共轭类")
    return EnumerationResult(n=n, kind=kind, engine=Engine.STRUCTURED, count=len(representatives),
                             representatives=representatives, breakdown=tuple(breakdown))


def cross_validate(n: int, kind: RackKind, jobs: Optional[int] = None) -> Tuple[EnumerationResult, EnumerationResult]:
    """
    两个引擎的计数与代表元集合必须一致

    Raises:
        InvariantViolation: 不一致
    """
    brute = enumerate_brute(EnumerationRequest(n, kind, Engine.BRUTE), jobs=jobs)
    structured = enumerate_structured(EnumerationRequest(n, kind, Engine.STRUCTURED), jobs=jobs)
    if brute.count != structured.count or brute.representatives != structured.representatives:
        raise InvariantViolation(
            f"engine disagreement at n={n} kind={kind.value}: brute={brute.count} "
            f"structured={structured.count}",
            {'n': n, 'kind': kind.value, 'brute': brute.count, 'structured': structured.count})
    return brute, structured


def enumerate_racks(req: EnumerationRequest, jobs: Optional[int] = None) -> EnumerationResult:
    """按请求的引擎枚举；both 时交叉验证并返回带分解的结果"""
    if req.engine == Engine.BRUTE:
        return enumerate_brute(req, jobs=jobs)
    if req.engine == Engine.STRUCTURED:
        return enumerate_structured(req, jobs=jobs)
    _, structured = cross_validate(req.n, req.kind, jobs=jobs)
    return EnumerationResult(n=structured.n, kind=structured.kind, engine=Engine.BOTH,
                             count=structured.count, representatives=structured.representatives,
                             breakdown=structured.breakdown)


def enumerate_kinds(n: int, engine: Engine = Engine.STRUCTURED,
                    jobs: Optional[int] = None) -> Dict[RackKind, EnumerationResult]:
    """三种类型一起枚举，并检查 f_kei ≤ f_quandle ≤ f_rack"""
    results = {kind: enumerate_racks(EnumerationRequest(n, kind, Engine(engine)), jobs=jobs)
               for kind in ENUMERABLE_KINDS}
    counts = [results[kind].count for kind in (RackKind.KEI, RackKind.QUANDLE, RackKind.RACK)]
    check_invariant(counts[0] <= counts[1] <= counts[2], "kei/quandle/rack counts not monotone",
                    n=n, kei=counts[0], quandle=counts[1], rack=counts[2])
    return results


@dataclass(frozen=True)
class CountRow:
    """log₂ f(n) / n² 观测值"""
    n: int
    kind: RackKind
    count: int

    @property
    def normalized(self) -> float:
        return math.log2(self.count) / self.n ** 2 if self.count else float('-inf')


@dataclass(frozen=True)
class DegreeRow:
    """与 n 相关的上下界算术（只报告，不断言）"""
    n: int
    pyber_exponent: float
    maroti_bound: float
    lower_bound: Optional[LowerBoundReport]


@dataclass(frozen=True)
class BoundsReport:
    """常数与小阶观测值，全部为非渐近观测"""
    lower_constant: float
    upper_constant: float
    counts: Tuple[CountRow, ...]
    degrees: Tuple[DegreeRow, ...]

    def lines(self) -> List[str]:
        out = [
            f"c1={self.lower_constant:.6f}  (lower-bound exponent constant)",
            f"c={self.upper_constant:.6f}  (upper-bound exponent constant: log2(24)/6 + log2(3)/2)",
            "# observations at small n are non-asymptotic",
        ]
        for row in self.counts:
            out.append(f"n={row.n} kind={row.kind.value} count={row.count} "
                       f"log2(count)/n^2={row.normalized:.6f}")
        for row in self.degrees:
            out.append(f"n={row.n} pyber_exponent={row.pyber_exponent:.6f} "
                       f"maroti_class_bound={row.maroti_bound:.6f}")
            if row.lower_bound is not None:
                out.append(f"n={row.n} lower_bound: " + " ".join(row.lower_bound.lines()))
        return out

    def to_dict(self) -> Dict[str, Any]:
        return {
            'c1': self.lower_constant,
            'c': self.upper_constant,
            'counts': [{'n': r.n, 'kind': r.kind.value, 'count': r.count,
                        'log2_count_over_n2': r.normalized} for r in self.counts],
            'degrees': [{'n': r.n, 'pyber_exponent': r.pyber_exponent,
                         'maroti_class_bound': r.maroti_bound,
                         'lower_bound': r.lower_bound.to_dict() if r.lower_bound else None}
                        for r in self.degrees],
        }


def bounds_report(results: Iterable[EnumerationResult]) -> BoundsReport:
    """
    报告 log₂ f(n)/n² 与常数 c₁ = 1/4、c = log₂24/6 + log₂3/2

    Args:
        results: 枚举结果，可为空

    Returns:
        BoundsReport
    """
    counts = tuple(sorted((CountRow(r.n, r.kind, r.count) for r in results),
                          key=lambda row: (row.n, row.kind.rank)))
    degrees = tuple(
        DegreeRow(n=n,
                  pyber_exponent=math.log2(24) * n ** 2 / 6,
                  maroti_bound=3 ** ((n - 1) / 2),
                  lower_bound=lower_bound_report(n) if n >= 2 else None)
        for n in sorted({row.n for row in counts}))
    return BoundsReport(LOWER_CONSTANT, UPPER_CONSTANT, counts, degrees)
