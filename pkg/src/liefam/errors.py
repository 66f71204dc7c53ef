"""Exception hierarchy shared by all modules."""


class LiefamError(Exception):
    """Base class for all toolkit errors."""


class ParameterMismatch(LiefamError):
    """Operands live over different parameter rings."""


class MissingParameter(LiefamError):
    """A specialization assignment does not cover every parameter."""


class OutOfDomainIndex(LiefamError):
    """A nonzero component fell outside the basis index domain."""


class WindowTooSmall(LiefamError):
    """The index window cannot certify the stated degree bound."""


class UnsupportedFamily(LiefamError):
    """No geometric realization is available for this family."""


class DivisionByZeroFunction(LiefamError):
    """A denominator is the zero polynomial."""


class EssentialOrUndefined(LiefamError):
    """Residue requested at a point where no finite-order expansion exists."""


class AnsatzTooWeak(LiefamError):
    """The window system is consistent but the closed form cannot be certified."""


class ArityUnsupported(LiefamError):
    """The cochain arity is outside the implemented range."""


class DegenerateLine(LiefamError):
    """The slope lies on a degenerate line where the discriminant vanishes."""


class OddShiftNotRescalable(LiefamError):
    """Rescaling by a squared unit cannot act on odd degree shifts."""


class UpperBoundViolated(LiefamError):
    """A pairing value is supported above total degree zero."""
