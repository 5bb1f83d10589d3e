"""Exception hierarchy shared by all bakerkp modules."""


class BakerkpError(Exception):
    """Base class for all library errors."""


class ParameterError(BakerkpError):
    """Operands do not share ring parameters (relations, jet order, precision)."""


class SingularityError(BakerkpError):
    """A required inversion failed or a divisor sits on a degenerate locus."""


class PreconditionError(BakerkpError):
    """An operation was called outside its stated domain (genus, coefficients)."""


class ModeError(BakerkpError):
    """Exact mode cannot represent a required constant; numeric mode would."""


class InternalConsistencyError(BakerkpError):
    """An exact identity that must hold by construction failed; arithmetic bug."""


class GenerationError(BakerkpError):
    """Fixture generation could not satisfy the requested constraints."""
