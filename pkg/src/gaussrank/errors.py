"""Exception types shared across the package."""


class GaussRankError(Exception):
    """Base class for every domain error raised by this package."""


class ZeroConstantTerm(GaussRankError):
    """Reciprocal of a series whose constant term vanishes (a pole at the
    expansion point rather than a unit)."""


class NonIntegralGenus(GaussRankError):
    """The Riemann-Hurwitz count did not produce a nonnegative integer,
    so the monodromy datum is inconsistent."""


class NoTotallyRamifiedPoint(GaussRankError):
    """No entry of the datum is coprime to the group order, so there is
    no point where the fiber coordinate is a local coordinate."""


class RepeatedBranchPoints(GaussRankError):
    """Branch points must be pairwise distinct."""


class NotNormalized(GaussRankError):
    """The cover solver requires a datum with first entry 1 expanded at
    the branch point 0."""


class PrecisionTooLow(GaussRankError):
    """A holomorphic form came out identically zero to the working
    precision; the basis would be degenerate."""


class EmptyLocus(GaussRankError):
    """The requested family is empty (genus below three times the
    quotient genus)."""


class NotAQuadric(GaussRankError):
    """The coefficient vector is not in the kernel of the multiplication
    map to the working precision."""


class SubspaceTooSmall(GaussRankError):
    """The selected eigenspace block is empty, so no restricted rank can
    be formed."""


class DegenerateWitness(GaussRankError):
    """The eigenspace dimensions of the selected component are too small
    to build a witness quadric."""


class ResourceCapExceeded(GaussRankError):
    """Genus or precision above the configured cap; use the override
    flags to raise it."""


class MonodromyParseError(GaussRankError):
    """A monodromy string failed to parse; carries the offending
    position."""

    def __init__(self, message, position=None):
        if position is not None:
            message = "%s (at position %d)" % (message, position)
        super().__init__(message)
        self.position = position
