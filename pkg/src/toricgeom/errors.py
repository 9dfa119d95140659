"""Exception hierarchy shared by all modules.

Every domain error derives from ToricError so the CLI can map them to
exit code 2 uniformly.
"""


class ToricError(Exception):
    """Base class for domain errors."""


class ZeroVector(ToricError):
    pass


class DependentRows(ToricError):
    pass


class ContainsLine(ToricError):
    pass


class NotSimplicial(ToricError):
    pass


class NotInMonoid(ToricError):
    pass


class NotSaturated(ToricError):
    pass


class EmptyPolyhedron(ToricError):
    pass


class NotLatticePolyhedron(ToricError):
    pass


class NotTruncating(ToricError):
    pass


class NotAFan(ToricError):
    pass


class NotAFacet(ToricError):
    pass


class NoRays(ToricError):
    pass


class InconsistentOrder(ToricError):
    """Test-oracle violation: SNF class order disagrees with the lcm of local orders."""


class CriterionMismatch(ToricError):
    """Test-oracle violation: cone-level and group-level smoothness/simpliciality tests disagree."""


class NotIntegrallyClosed(ToricError):
    pass


class AlreadySaturated(ToricError):
    pass


class PairSearchFailed(ToricError):
    pass


class FiniteOrderClass(ToricError):
    pass


class NotInSupport(ToricError):
    pass
