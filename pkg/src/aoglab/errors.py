"""Exception types shared across the package."""


class InvalidInputError(ValueError):
    """Bad parameters, malformed words or documents, or a violated precondition."""


class SizeGuardError(RuntimeError):
    """The requested operation would touch more vertices than the configured cap."""


class ConstructionFailed(RuntimeError):
    """A constructor built an object that did not pass its own verifier."""
