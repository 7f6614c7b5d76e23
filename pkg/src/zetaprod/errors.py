"""Exception hierarchy shared by every evaluator in the package."""


class ZetaprodError(ValueError):
    """Base class; subclasses ValueError so callers can catch broadly."""


class PoleError(ZetaprodError):
    """An argument sits on a pole of the function being evaluated."""


class DomainError(ZetaprodError):
    """An argument lies outside the region where the formula is valid."""


class DegenerateParameterError(ZetaprodError):
    """The representation is singular at these parameters.

    The message names the evaluator that handles the degenerate case.
    """


class ConvergenceError(ZetaprodError):
    """A numerical procedure failed to reach its requested accuracy."""
