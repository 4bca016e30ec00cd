"""Exception hierarchy for strandbox."""


class StrandboxError(Exception):
    """Base class for all library errors."""


class DomainError(StrandboxError, ValueError):
    """An argument lies outside an operation's domain."""


class NotLocallyFree(StrandboxError):
    """A rank vector was requested for a module that is not locally free."""


class UnsupportedPresentation(StrandboxError):
    """The operation is only defined for the affine C-tilde family."""


class InternalCheckError(StrandboxError):
    """A structural assertion of the AR calculus failed; indicates a bug."""
