from ._core import (
    AhsError,
    aut_polynomial,
    commute,
    evaluate,
    hall_polynomial,
    run_suite,
    suite_names,
)

__all__ = [
    "AhsError",
    "aut_polynomial",
    "commute",
    "evaluate",
    "hall_polynomial",
    "run_suite",
    "suite_names",
]
