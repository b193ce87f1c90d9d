from .oracle import typeA_oracle_product
from .suites import (
    DEFAULT_BUDGET,
    DEFAULT_SEED,
    SUITES,
    BudgetExceeded,
    Failure,
    SuiteReport,
    UnknownSuite,
    dump_failures,
    run_suite,
)

__all__ = [
    "DEFAULT_BUDGET",
    "DEFAULT_SEED",
    "SUITES",
    "BudgetExceeded",
    "Failure",
    "SuiteReport",
    "UnknownSuite",
    "dump_failures",
    "run_suite",
    "typeA_oracle_product",
]
