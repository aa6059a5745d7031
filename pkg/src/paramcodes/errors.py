"""Exceptions shared across the package."""


class BudgetExceeded(RuntimeError):
    """An exhaustive enumeration would visit more items than allowed.

    ``required`` is the number of items the enumeration needs, ``budget`` the
    configured ceiling and ``what`` names the enumerated objects.
    """

    def __init__(self, what: str, required: int, budget: int):
        self.what = what
        self.required = required
        self.budget = budget
        super().__init__(
            f"enumerating {required} {what} exceeds the budget of {budget}; "
            f"raise --budget to at least {required}"
        )


def check_budget(what: str, required: int, budget: int) -> None:
    if required > budget:
        raise BudgetExceeded(what, required, budget)


DEFAULT_BUDGET = 1 << 26
