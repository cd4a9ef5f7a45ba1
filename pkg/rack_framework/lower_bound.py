#!/usr/bin/env python3
"""
X_E kei 族与下界计数
由 k 个不交对换与对角线为0的 0/1 矩阵 E 构造 kei，以及精确整数计数报告
"""

import itertools
import logging
import math
from dataclasses import asdict, dataclass
from functools import lru_cache
from typing import Any, Dict, Iterator, List, Optional, Sequence, Tuple

import numpy as np

from .config import get_config
from .construction import RackBlueprint, build_rack
from .perm_group import Permutation, PermGroup, generate
from .rack_core import RackTable, canonical_form
from .utils.error_handler import BlueprintError, DimensionError, ResourceCapError
from .utils.logging_config import log_performance
from .utils.parallel import apply_pool

logger = logging.getLogger(__name__)

# n=7 的参考实例，用于自检
SEVEN_POINT_E = ((0, 1, 0), (1, 0, 1), (1, 0, 0))
SEVEN_POINT_TABLE = (
    (1, 1, 2, 2, 1, 1, 1),
    (2, 2, 1, 1, 2, 2, 2),
    (4, 4, 3, 3, 4, 4, 3),
    (3, 3, 4, 4, 3, 3, 4),
    (6, 6, 5, 5, 5, 5, 5),
    (5, 5, 6, 6, 6, 6, 6),
    (7, 7, 7, 7, 7, 7, 7),
)


@dataclass(frozen=True)
class EMatrix:
    """k×k 0/1 矩阵，对角线为0"""
    entries: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(v) for v in row) for row in self.entries)
        object.__setattr__(self, 'entries', rows)
        k = len(rows)
        if k == 0 or any(len(row) != k for row in rows):
            raise DimensionError(f"E must be a non-empty square matrix, got {k} rows",
                                 {'rows': [len(row) for row in rows]})
        for i, row in enumerate(rows):
            for j, v in enumerate(row):
                if v not in (0, 1):
                    raise BlueprintError(f"entry e[{i + 1}][{j + 1}] = {v} is not 0 or 1")
            if row[i] != 0:
                raise BlueprintError(f"diagonal entry e[{i + 1}][{i + 1}] must be 0")

    @classmethod
    def from_array(cls, array) -> 'EMatrix':
        return cls(tuple(tuple(row) for row in np.asarray(array, dtype=np.int64).tolist()))

    @classmethod
    def zero(cls, k: int) -> 'EMatrix':
        return cls(tuple((0,) * k for _ in range(k)))

    @property
    def k(self) -> int:
        return len(self.entries)

    def as_array(self) -> np.ndarray:
        return np.array(self.entries, dtype=np.int64)

    def column(self, i: int) -> Tuple[int, ...]:
        return tuple(row[i] for row in self.entries)


@lru_cache(maxsize=32)
def xe_group(n: int) -> PermGroup:
    """⟨τ_1, ..., τ_k⟩，τ_i = (2i-1, 2i)"""
    k = n // 2
    taus = [Permutation.from_cycles([(2 * i + 1, 2 * i + 2)], n) for i in range(k)]
    return generate(taus, degree=n)


def xe_blueprint(n: int, E: EMatrix) -> RackBlueprint:
    """
    X_E 的蓝图：π_i = ∏_j τ_j^{e_ji}（E 的第 i 列），n 为奇数时最后一个轨道 π = 1

    Raises:
        DimensionError: E 的阶不等于 floor(n/2)
    """
    if n < 2:
        raise DimensionError("n must be at least 2", {'n': n})
    k = n // 2
    if E.k != k:
        raise DimensionError(f"E is {E.k}x{E.k} but n={n} needs {k}x{k}", {'n': n, 'k': E.k})

    pis = []
    for i in range(k):
        images = list(range(n))
        for j, e in enumerate(E.column(i)):
            if e:
                images[2 * j], images[2 * j + 1] = 2 * j + 1, 2 * j
        pis.append(Permutation._trusted(tuple(images)))
    reps = [2 * i for i in range(k)]
    if n % 2:
        reps.append(n - 1)
        pis.append(Permutation.identity(n))
    return RackBlueprint(xe_group(n), tuple(reps), tuple(pis))


def build_xe(n: int, E: EMatrix) -> RackTable:
    """
    构造 kei X_E

    Args:
        n: 阶
        E: floor(n/2) 阶矩阵

    Returns:
        运算表
    """
    return build_rack(xe_blueprint(n, E))


def all_ematrices(k: int) -> Iterator[EMatrix]:
    """全部 2^{k(k-1)} 个合法 E，按非对角元素的行优先字典序"""
    positions = [(i, j) for i in range(k) for j in range(k) if i != j]
    for bits in itertools.product((0, 1), repeat=len(positions)):
        rows = [[0] * k for _ in range(k)]
        for (i, j), bit in zip(positions, bits):
            rows[i][j] = bit
        yield EMatrix(tuple(tuple(row) for row in rows))


def xe_family_size(n: int) -> int:
    """阶 n 的完整 X_E 族中 E 的个数 2^{k(k-1)}，k = floor(n/2)"""
    k = n // 2
    return 2 ** (k * (k - 1))


def check_xe_family_cap(n: int, cap: Optional[int] = None) -> int:
    """
    完整 X_E 族的规模检查

    Args:
        n: 阶
        cap: 矩阵个数上限，默认取配置 xe_family_cap

    Returns:
        矩阵个数

    Raises:
        ResourceCapError: 矩阵个数超过上限
    """
    cap = cap if cap is not None else get_config().xe_family_cap
    size = xe_family_size(n)
    if size > cap:
        raise ResourceCapError(f"exhaustive X_E family at n={n} has {size} matrices, "
                               f"exceeding xe family cap {cap}; raise --xe-family-cap",
                               'xe_family_cap', cap, size)
    return size


def random_ematrix(k: int, rng: Optional[np.random.Generator] = None) -> EMatrix:
    """随机合法 E"""
    rng = rng if rng is not None else np.random.default_rng()
    array = rng.integers(0, 2, size=(k, k))
    np.fill_diagonal(array, 0)
    return EMatrix.from_array(array)


@log_performance()
def xe_distinctness(n: int, matrices: Sequence[EMatrix], jobs: Optional[int] = None) -> bool:
    """
    X_E 表是否两两不同（按原始运算表比较，不按同构）

    Args:
        n: 阶
        matrices: E 列表
        jobs: 进程数

    Returns:
        全部不同时为 True
    """
    config = get_config()
    tables = apply_pool(build_xe, [(n, E) for E in matrices],
                        jobs=jobs if jobs is not None else config.jobs,
                        desc=f"X_E n={n}", show_progress=config.show_progress)
    distinct = len(set(tables))
    logger.info(f"X_E 族 n={n}: {len(tables)} 个矩阵, {distinct} 个不同运算表")
    return distinct == len(tables)


@dataclass(frozen=True)
class LowerBoundReport:
    """下界计数（整数运算精确）"""
    n: int
    k: int
    matrix_count: int
    factorial: int
    guaranteed_classes: int
    log2_bound: float

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)

    def lines(self) -> List[str]:
        return [f"{key}={value:.6f}" if isinstance(value, float) else f"{key}={value}"
                for key, value in self.to_dict().items()]


def lower_bound_report(n: int) -> LowerBoundReport:
    """
    X_E 族给出的同构类个数下界

    Args:
        n: 阶（至少为2）

    Returns:
        LowerBoundReport
    """
    if n < 2:
        raise DimensionError("n must be at least 2", {'n': n})
    k = n // 2
    matrix_count = 2 ** ((k - 1) * k)
    factorial = math.factorial(n)
    guaranteed = max(1, -(-matrix_count // factorial))
    return LowerBoundReport(
        n=n,
        k=k,
        matrix_count=matrix_count,
        factorial=factorial,
        guaranteed_classes=guaranteed,
        log2_bound=(k - 1) * k - math.log2(factorial),
    )


@dataclass(frozen=True)
class CollisionReport:
    """X_E 族在同构意义下的碰撞观测"""
    n: int
    matrix_count: int
    distinct_tables: int
    isomorphism_classes: int

    @property
    def collisions(self) -> int:
        return self.distinct_tables - self.isomorphism_classes

    def to_dict(self) -> Dict[str, Any]:
        data = asdict(self)
        data['collisions'] = self.collisions
        return data


def _canonical_xe(n: int, E: EMatrix) -> RackTable:
    return canonical_form(build_xe(n, E))


@log_performance()
def xe_collision_report(n: int, jobs: Optional[int] = None,
                        cap: Optional[int] = None) -> CollisionReport:
    """
    对完整 X_E 族统计不同运算表与同构类个数

    Args:
        n: 阶
        jobs: 进程数
        cap: 规范形阶上限

    Returns:
        CollisionReport
    """
    config = get_config()
    cap = cap if cap is not None else config.canonical_cap
    if n > cap:
        raise ResourceCapError(f"collision report at n={n} exceeds canonical-form cap {cap}; "
                               f"raise RACK_CANONICAL_CAP", 'canonical_cap', cap, n)
    check_xe_family_cap(n)
    matrices = list(all_ematrices(n // 2))
    jobs = jobs if jobs is not None else config.jobs
    tables = apply_pool(build_xe, [(n, E) for E in matrices], jobs=jobs)
    canonical = apply_pool(_canonical_xe, [(n, E) for E in matrices], jobs=jobs,
                           desc=f"canonical X_E n={n}", show_progress=config.show_progress)
    report = CollisionReport(n=n, matrix_count=len(matrices), distinct_tables=len(set(tables)),
                             isomorphism_classes=len(set(canonical)))
    logger.info(f"X_E 碰撞报告: {report.to_dict()}")
    return report
