from ._core import *  # noqa: F401,F403
from ._core import (
    BudgetExceeded,
    CertificationError,
    ConvergenceError,
    Error,
    Graph,
    InputError,
    PreconditionError,
    run_cli,
)
