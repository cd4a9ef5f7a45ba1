#!/usr/bin/env python3
"""
常见 rack 族
平凡 rack、置换 rack、共轭 quandle 与对合 kei，以及重新编号
"""

import numpy as np

from .group_table import GroupTable
from .perm_group import Permutation
from .rack_core import RackTable
from .utils.error_handler import BlueprintError, DegreeMismatchError


def trivial_rack(n: int) -> RackTable:
    """x ▷ y = x"""
    if n < 1:
        raise ValueError("n必须为正整数")
    return RackTable(np.repeat(np.arange(n)[:, None], n, axis=1))


def permutation_rack(pi: Permutation) -> RackTable:
    """x ▷ y = x·π；仅当 π 为恒等时是 quandle"""
    return RackTable.from_columns([pi] * pi.degree)


def conjugation_quandle(G: GroupTable) -> RackTable:
    """X = G，x ▷ y = y^{-1} x y"""
    m = G.order
    return RackTable([[G.conjugate(x, y) for y in range(m)] for x in range(m)])


def involution_kei(G: GroupTable) -> RackTable:
    """
    X = G 中阶恰为2的元素，x ▷ y = y^{-1} x y

    Raises:
        BlueprintError: G 没有对合
    """
    involutions = G.involutions()
    if not involutions:
        raise BlueprintError("group has no element of order 2")
    index = {a: i for i, a in enumerate(involutions)}
    return RackTable([[index[G.conjugate(x, y)] for y in involutions] for x in involutions])


def relabel(t: RackTable, sigma: Permutation) -> RackTable:
    """沿 σ 搬运运算表：t'(σx, σy) = σ(t(x, y))"""
    if sigma.degree != t.n:
        raise DegreeMismatchError(sigma.degree, t.n)
    return t.relabeled(sigma.images)
