"""Exception types shared across the toolkit."""


class SylGalError(Exception):
    """Base class for toolkit errors."""


class BackendMismatchError(SylGalError, TypeError):
    """Operands come from different numeric backends or quadratic fields."""


class ScalarParseError(SylGalError, ValueError):
    """Text does not follow the exact scalar grammar."""


class DegenerateError(SylGalError, ValueError):
    """An operation received coincident or incident inputs it cannot handle."""


class HypothesisViolation(SylGalError, ValueError):
    """Input violates a theorem hypothesis (collinear set, too few points...)."""


class NotApplicable(SylGalError, ValueError):
    """Check does not apply to the given input (e.g. a vertical line)."""
