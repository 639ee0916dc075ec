"""Exception types shared by the verification suites.

Internal consistency is checked with ``assert`` throughout the package; the
classes below are reserved for failures that a caller is expected to handle,
and the command line maps each of them to its own exit code.
"""


class PreconditionError(ValueError):
    """Raised when the inputs violate the hypothesis of an operation, e.g.,
    ``p`` not an odd prime, an invalid shape, or a p-character with
    ``chi(h_alpha) = 0`` for some odd positive root."""


class ResourceCapError(RuntimeError):
    """Raised when a computation would exceed a configured cap (term blowup,
    number of singular lines, field-extension search). Never a wrong answer."""


class ConstructionError(AssertionError):
    """Raised when a constructed module fails one of its self-checks. This
    always indicates a bug in the construction."""
