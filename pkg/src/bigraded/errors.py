"""Exceptions shared across the package."""


class BigradedError(Exception):
    """Base class for package-specific errors."""


class InvalidField(BigradedError):
    """Field spec is neither the rationals nor an odd prime."""


class EmptyRing(BigradedError):
    """Both variable blocks are empty and the trivial ring was not requested."""


class NotBihomogeneous(BigradedError):
    """A polynomial or module element mixes bidegrees."""


class ZeroPolynomial(BigradedError):
    """The bidegree of zero was requested."""


class InvalidRegion(BigradedError):
    """Region kind/index combination outside its domain of definition."""


class NeedsWindow(BigradedError):
    """Enumerating an infinite region requires an explicit window."""


class ResolutionTooLong(BigradedError):
    """Syzygy iteration exceeded the requested maximum length."""


class NoStabilization(BigradedError):
    """Transition maps between Ext levels did not certify within nu_max."""


class InvalidIndex(BigradedError):
    """Cohomological index outside the supported range."""


class InputError(BigradedError):
    """Malformed input document."""
