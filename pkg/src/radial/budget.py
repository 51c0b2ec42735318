"""Size limits shared by the word enumerator and the group-ring oracle."""

import os

DEFAULT_WORD_LIMIT = 10**6
DEFAULT_PRODUCT_LIMIT = 5 * 10**6

BUDGET_ENV = "RADIAL_BUDGET"


class BudgetExceededError(RuntimeError):
    """Raised when a computation would exceed its configured size cap."""

    def __init__(self, what: str, needed: int, limit: int):
        self.what = what
        self.needed = needed
        self.limit = limit
        super().__init__(f"{what} needs {needed} but the limit is {limit}")


def product_limit(override: int | None = None) -> int:
    if override is not None:
        return override
    env = os.environ.get(BUDGET_ENV)
    if env:
        return int(env)
    return DEFAULT_PRODUCT_LIMIT
