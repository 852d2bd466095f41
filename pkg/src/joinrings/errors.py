"""Exception hierarchy shared across the package."""


class AlgebraError(Exception):
    """Base class for all domain errors raised by this package."""


class ContextMismatchError(AlgebraError):
    """Operands live in different fields, groups, or shapes."""


class NotInvertibleError(AlgebraError):
    """Inversion was requested for a non-unit."""


class NotNormalError(AlgebraError):
    """A construction required a normal subgroup and got a non-normal one."""


class NotSubgroupError(AlgebraError):
    """A claimed subgroup fails closure, inverse, or identity checks."""


class UnsupportedCaseError(AlgebraError):
    """The requested computation falls outside the supported cases."""


class EnumerationCapError(AlgebraError):
    """A brute-force enumeration would exceed the configured cap."""


class ParseError(AlgebraError):
    """A textual spec (field, group, shape, element literal) failed to parse."""


class InternalConsistencyError(Exception):
    """Two code paths that must agree disagreed.  Never expected to fire."""
