"""Round-robin draws for two divisions that maximise common fixtures."""

from .analysis import (
    BalanceReport,
    FixtureReport,
    c_max,
    check_balance,
    check_bound_lemmas,
    check_common_orientation,
    common_fixtures,
    schedule_balance,
    schedule_report,
)
from .construction import (
    DOUBLE,
    SINGLE,
    Schedule,
    build_draws,
    build_schedule,
    build_starters,
    expand_double_round_robin,
    orient,
    starter_params,
)
from .graph_core import Draw, Role, apply_rotation, orbit_edges, validate_draw, validate_one_factor, vertex_of

__all__ = [
    "BalanceReport",
    "DOUBLE",
    "Draw",
    "FixtureReport",
    "Role",
    "SINGLE",
    "Schedule",
    "apply_rotation",
    "build_draws",
    "build_schedule",
    "build_starters",
    "c_max",
    "check_balance",
    "check_bound_lemmas",
    "check_common_orientation",
    "common_fixtures",
    "expand_double_round_robin",
    "orbit_edges",
    "orient",
    "schedule_balance",
    "schedule_report",
    "starter_params",
    "validate_draw",
    "validate_one_factor",
    "vertex_of",
]
