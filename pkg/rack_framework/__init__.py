"""
有限 rack、quandle 与 kei 框架
运算表、结构定理构造与分解、X_E kei 族、同构类双引擎枚举
"""

from .config import RackConfig, ConfigManager
from .perm_group import (
    Permutation,
    PermGroup,
    OrbitData,
    compose,
    conjugate,
    generate,
    orbit_data,
    stabilizer,
    centralizer,
    conjugacy_classes,
    normal_closure,
    subgroup_classes
)
from .rack_core import (
    RackTable,
    RackKind,
    RackClass,
    Fingerprint,
    Isomorphism,
    validate,
    translation,
    operator_group,
    fingerprint,
    canonical_form,
    is_isomorphic
)
from .group_table import GroupTable
from .construction import (
    RackBlueprint,
    BlueprintFlags,
    check_blueprint,
    build_rack,
    decompose,
    realize_operator_group,
    realize_kei_operator_group,
    has_full_normal_closure_element
)
from .lower_bound import EMatrix, LowerBoundReport, build_xe, xe_distinctness, lower_bound_report
from .enumerator import (
    Engine,
    EnumerationRequest,
    EnumerationResult,
    enumerate_brute,
    enumerate_structured,
    class_size_filter,
    bounds_report
)
from .validators import FormatValidator

__version__ = "1.0.0"

__all__ = [
    'RackConfig',
    'ConfigManager',
    'Permutation',
    'PermGroup',
    'OrbitData',
    'compose',
    'conjugate',
    'generate',
    'orbit_data',
    'stabilizer',
    'centralizer',
    'conjugacy_classes',
    'normal_closure',
    'subgroup_classes',
    'RackTable',
    'RackKind',
    'RackClass',
    'Fingerprint',
    'Isomorphism',
    'validate',
    'translation',
    'operator_group',
    'fingerprint',
    'canonical_form',
    'is_isomorphic',
    'GroupTable',
    'RackBlueprint',
    'BlueprintFlags',
    'check_blueprint',
    'build_rack',
    'decompose',
    'realize_operator_group',
    'realize_kei_operator_group',
    'has_full_normal_closure_element',
    'EMatrix',
    'LowerBoundReport',
    'build_xe',
    'xe_distinctness',
    'lower_bound_report',
    'Engine',
    'EnumerationRequest',
    'EnumerationResult',
    'enumerate_brute',
    'enumerate_structured',
    'class_size_filter',
    'bounds_report',
    'FormatValidator'
]
