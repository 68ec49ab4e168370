"""Exception hierarchy.

Input problems (bad files, dangling ids, refused preconditions) derive from
:class:`InputError`; inconsistencies discovered while computing (a
differential that does not square to zero, a morphism that does not commute)
derive from :class:`InconsistencyError`.  The CLI maps the two families to
exit codes 1 and 2.
"""


class JordanMaxError(Exception):
    pass


class InputError(JordanMaxError, ValueError):
    pass


class ModelError(InputError):
    """A degeneration model failed to parse or validate."""


class AtlasError(InputError):
    """Trivialization data is missing or refers to unknown strata."""


class PreconditionError(InputError):
    """A formula was requested outside the setting in which it holds."""


class InconsistencyError(JordanMaxError, ArithmeticError):
    pass


class NotAComplexError(InconsistencyError):
    def __init__(self, degree, detail=""):
        self.degree = degree
        msg = f"not a complex: d^{degree + 1} o d^{degree} != 0"
        if detail:
            msg += f" ({detail})"
        super().__init__(msg)


class CommutationError(InconsistencyError):
    """A morphism of complexes fails to commute with the differentials."""
