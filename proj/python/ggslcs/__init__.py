"""Exact computation of lower central series of GGS congruence quotients."""

from ._core import (
    CheckResult,
    CongruenceQuotient,
    DefiningVector,
    IntervalSchedule,
    Permutation,
    PreconditionError,
    SubAssertion,
    check_names,
    classify_vector,
    commutator,
    delta_map,
    gamma_level_field,
    interval_schedule,
    iterated_delta_p_minus_2,
    lambda_vector,
    lower_central_series,
    run_check,
)

__all__ = [
    "CheckResult",
    "CongruenceQuotient",
    "DefiningVector",
    "IntervalSchedule",
    "Permutation",
    "PreconditionError",
    "SubAssertion",
    "check_names",
    "classify_vector",
    "commutator",
    "delta_map",
    "gamma_level_field",
    "interval_schedule",
    "iterated_delta_p_minus_2",
    "lambda_vector",
    "lower_central_series",
    "run_check",
]
