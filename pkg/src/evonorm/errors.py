"""Exception types shared across the package.

Parse errors reuse the builtin SyntaxError (with `offset` set to the
0-based position of the offending character) so callers can rely on the
standard attribute names.
"""


class EvonormError(Exception):
    """Base class for all package-specific errors."""


class UnknownVariable(EvonormError):
    """A name in the input is not among the declared variables."""


class ZeroPolynomial(EvonormError):
    """Operation undefined for the zero polynomial."""


class RefinementBudgetExceeded(EvonormError):
    """Interval refinement hit its bisection budget without certifying.

    Carries the budget that was exhausted; never returned as an
    uncertified sign.
    """

    def __init__(self, message, budget=None):
        super().__init__(message)
        self.budget = budget


class CommonComponent(EvonormError):
    """The two input curves share a component (nontrivial gcd)."""


class SingularPoint(EvonormError):
    """The gradient vanishes where a smooth point was required."""


class ZeroCurvature(EvonormError):
    """Curvature vanishes: the curvature center is at infinity."""


class ParamSingular(EvonormError):
    """The parametrization has a stationary point (x', y') = (0, 0)."""


class ChartFailure(EvonormError):
    """The requested dual chart excludes this line (vertical normal)."""


class LineComponent(EvonormError):
    """The curve contains a line component, unsupported here."""


class CircleComponent(EvonormError):
    """The curve contains a circle component, unsupported here."""


class LineInput(EvonormError):
    """The input curve is a line."""


class FlatCurve(EvonormError):
    """The parametrization traces a line (x'y'' - x''y' is identically 0)."""


class DegenerateEvolute(EvonormError):
    """The evolute degenerates to points (circle-like input)."""


class DomainViolation(EvonormError):
    """Input outside the supported domain of an asymptotic expansion."""


class NotSingular(EvonormError):
    """Classification requested at a point that is not singular."""


class InconsistentProfile(EvonormError):
    """Numerical characters fail the consistency identities."""


class UnsupportedPosition(EvonormError):
    """Degree corrections beyond the supported at-infinity cases."""


class CertificateFailure(EvonormError):
    """A genericity certificate could not be established."""


class EpsTooLarge(EvonormError):
    """Deformation parameter too large: topology or smoothness lost."""


class BadPerturbation(EvonormError):
    """Perturbation polynomial vanishes at an arrangement vertex."""


class InfiniteFamily(EvonormError):
    """Infinitely many normals pass through the point (circle center)."""


class BudgetExceeded(EvonormError):
    """Computation exceeded its configured budget; partial data attached."""

    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial


class EliminationMismatch(EvonormError):
    """Two elimination charts disagree on the glued projective result."""
