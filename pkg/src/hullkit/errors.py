"""Exception hierarchy shared across the package."""


class HullkitError(Exception):
    """Base class for all domain errors raised by hullkit."""


class DimensionError(HullkitError):
    """Operands have incompatible lengths, shapes, or fields."""


class UnsupportedFieldError(HullkitError):
    """Operation is only defined over GF(2) (or another specific field)."""


class CapacityError(HullkitError):
    """Problem size exceeds an exhaustive routine's stated limit."""


class HypothesisError(HullkitError):
    """A transform was requested in checked mode without the required hypothesis."""


class PostconditionError(HullkitError):
    """A guaranteed postcondition failed; indicates an arithmetic bug."""


class PredicateError(HullkitError):
    """A predicate's precondition on its input code is violated."""


class IntegrityError(HullkitError):
    """A persisted record does not replay to the same code."""


class CodeParseError(HullkitError):
    """Malformed code/pair file; message names the offending line."""
