"""Exception hierarchy shared across the package.

The CLI maps these onto its exit-code contract: InputError -> 1,
CompletionBoundError -> 2, SearchSizeError -> 3.
"""


class UsymError(Exception):
    pass


class InputError(UsymError):
    """Malformed or invalid input data (file syntax, failed validation)."""


class PresentationContradiction(UsymError):
    """A relation reduced to a nonzero scalar: the presentation forces 1 = 0."""


class CompletionBoundError(UsymError):
    """Bounded completion did not reach a fixpoint within its budget."""


class SearchSizeError(UsymError):
    """An exhaustive enumeration would exceed the configured search bound."""

    def __init__(self, needed: int, bound: int, what: str = "search"):
        super().__init__(f"{what} needs {needed} candidates, bound is {bound}")
        self.needed = needed
        self.bound = bound
