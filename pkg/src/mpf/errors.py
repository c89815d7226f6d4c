"""Exception types raised by the mpf library."""


class MpfError(Exception):
    """Base class for all mpf-specific errors."""


class InvalidModulusError(MpfError):
    """Field modulus is reducible or has the wrong degree."""


class ZeroShiftError(MpfError):
    """A shifted derivative was requested at shift z = 0."""


class ZeroComponentError(MpfError):
    """A component function was requested at c = 0."""


class NonPowerOfTwoError(MpfError):
    """Transform input length is not a power of two."""


class UnsupportedGroupLawError(MpfError):
    """Operation is not defined for this group law."""


class NotASubgroupError(MpfError):
    """The claimed forbidden subgroup is not a subgroup."""


class ForbiddenSubgroupError(MpfError):
    """The character criterion only covers the canonical forbidden subgroup."""


class SearchBoundsError(MpfError):
    """Exhaustive search job exceeds the permitted size bounds."""


class FilterDisagreementError(MpfError):
    """The two planarity filters disagreed on a candidate.

    This would indicate a bug in one of the verdict routes, never a
    property of the candidate itself; the offending function is attached.
    """

    def __init__(self, message, function=None):
        super().__init__(message)
        self.function = function
