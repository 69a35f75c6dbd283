"""性质实验模块：性质定义、场景校验、检查、夹具、随机试验与满足矩阵。"""

from gradualsemantics.properties.checker import check_property
from gradualsemantics.properties.definitions import (
    PROPERTIES,
    PropertyInfo,
    get_property,
    is_applicable,
)
from gradualsemantics.properties.fixtures import (
    fixture_suite,
    run_fixture,
    run_fixtures,
    select_fixtures,
)
from gradualsemantics.properties.fuzzer import fuzz, minimize_witness, trial_seed
from gradualsemantics.properties.generators import random_graph, random_scenario
from gradualsemantics.properties.matrix import meta_checks, satisfaction_matrix
from gradualsemantics.properties.validators import support_tree_condition, validate_scenario

__all__ = [
    "PROPERTIES",
    "PropertyInfo",
    "get_property",
    "is_applicable",
    "validate_scenario",
    "support_tree_condition",
    "check_property",
    "fixture_suite",
    "select_fixtures",
    "run_fixture",
    "run_fixtures",
    "random_graph",
    "random_scenario",
    "fuzz",
    "minimize_witness",
    "trial_seed",
    "satisfaction_matrix",
    "meta_checks",
]
