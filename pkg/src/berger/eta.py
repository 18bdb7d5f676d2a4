"""Spectral-asymmetry local terms for the twisted Dirac operators.

The eta defect of each relevant operator is computed from a single
alternating sum over the rank-two Weyl group.  For a generic direction
X in the Cartan algebra, every group element w contributes

    sign(w) / (2 sinh(d(wX) t / 2))  *  (bulk(wX, t) - boundary(wX, t)),

where d is the weight cutting out the singular ray, the bulk factor
collects one z/(2 sinh(z/2)) per positive root together with an
exponential carrying the operator's boundary weight shifted off the
ray, and the boundary factor is the same product restricted to the
subgroup ray.  The alternating sum is then divided by the positive-root
sinh product at X itself and doubled.

Each summand has a pole of order five at t = 0; the poles cancel in the
alternating sum (this is checked, not assumed), and the t^0 coefficient
of what remains is the rational defect.  The result is independent of
the choice of generic direction and stable once the truncation order
exceeds the pole depth; both facts are exercised by the tests rather
than relied on silently.
"""
from fractions import Fraction

from . import roots
from .series import DEFAULT_ORDER, LaurentSeries, ahat_series

DEFAULT_DIRECTION = (5, 1)

#: boundary-weight labels accepted by the sum: 0 marks the untwisted
#: (Dirac) defect, 3 the top twist entering the signature defect.
VALID_TERMS = (0, 3)


class PoleCancellationError(ArithmeticError):
    """Raised when the alternating sum fails to kill the sinh poles."""

    def __init__(self, polar: dict[int, Fraction]):
        self.polar = polar
        super().__init__(
            "polar part survives the alternating sum: %s" % (polar,))


def _as_pair(direction) -> tuple[Fraction, Fraction]:
    x, y = direction
    return (Fraction(x), Fraction(y))


def validate_direction(direction) -> tuple[Fraction, Fraction]:
    """Check that no sinh factor degenerates along ``direction``.

    The sum needs beta(X) != 0 for every positive root beta and
    d(wX) != 0 for every Weyl image of X; either failure would place a
    zero-divisor inside a reciprocal.
    """
    x = _as_pair(direction)
    if any(roots.evaluate(b, x) == 0 for b in roots.positive_roots()):
        raise ValueError("direction lies on a root hyperplane: %r" % (direction,))
    d = roots.delta()
    for w in roots.weyl_group():
        if roots.evaluate(d, w.apply(x)) == 0:
            raise ValueError(
                "direction degenerates the singular-ray factor: %r" % (direction,))
    return x


def boundary_weight(k: int) -> tuple[Fraction, Fraction]:
    """Weight carried by the boundary exponential for twist label ``k``."""
    if k not in VALID_TERMS:
        raise ValueError("unsupported twist label: %r" % (k,))
    return roots.add(roots.kappa_weight(k), roots.rho_h())


def bulk_shift(k: int) -> tuple[Fraction, Fraction]:
    """Weight carried by the bulk exponential: the half-spin weight on
    the twist-``k`` line, shifted off the singular ray by -d/2."""
    if k not in VALID_TERMS:
        raise ValueError("unsupported twist label: %r" % (k,))
    a = roots.determine_alpha(k)
    d = roots.delta()
    return (a[0] - d[0] / 2, a[1] - d[1] / 2)


def weyl_sum(k: int, direction=DEFAULT_DIRECTION, order: int = DEFAULT_ORDER,
             signed: bool = True) -> LaurentSeries:
    """The full alternating sum as a Laurent series in t.

    With ``signed=False`` the Weyl signs are dropped; the poles then
    survive, which the tests use as a negative control on the
    cancellation check.
    """
    x0 = validate_direction(direction)
    shift = bulk_shift(k)
    bweight = boundary_weight(k)
    d = roots.delta()
    pos = roots.positive_roots()

    total = LaurentSeries.zero(order)
    for w in roots.weyl_group():
        y = w.apply(x0)
        dy = roots.evaluate(d, y)
        bulk = ahat_series(dy, order)
        for b in pos:
            bulk = bulk * ahat_series(roots.evaluate(b, y), order)
        bulk = bulk * LaurentSeries.monomial(
            roots.evaluate(shift, y), 1, order).exp()
        z = roots.restrict_to_s(y)
        boundary = LaurentSeries.monomial(
            roots.evaluate(bweight, z), 1, order).exp()
        for b in pos:
            boundary = boundary * ahat_series(roots.evaluate(b, z), order)
        contrib = LaurentSeries.monomial(dy, 1, order).reciprocal() \
            * (bulk - boundary)
        total = total + (contrib.scale(w.sign) if signed else contrib)
    for b in pos:
        total = total * LaurentSeries.monomial(
            roots.evaluate(b, x0), 1, order).reciprocal()
    return total.scale(2)


def local_term(k: int, direction=DEFAULT_DIRECTION,
               order: int = DEFAULT_ORDER) -> Fraction:
    """Constant coefficient of the alternating sum for twist ``k``.

    Raises :class:`PoleCancellationError` if any polar coefficient
    survives, so a silent truncation artefact cannot masquerade as an
    answer.
    """
    series = weyl_sum(k, direction, order)
    polar = series.polar_coefficients()
    if polar:
        raise PoleCancellationError(polar)
    return series.coefficient(0)


def eta_dirac(direction=DEFAULT_DIRECTION, order: int = DEFAULT_ORDER) -> Fraction:
    """Eta defect of the untwisted Dirac operator (no harmonic spinors)."""
    return local_term(0, direction, order)


def eta_signature(direction=DEFAULT_DIRECTION,
                  order: int = DEFAULT_ORDER) -> Fraction:
    """Eta defect of the odd signature operator.

    One copy of the constant function survives on the boundary side, so
    the defect is 1 plus the two twisted local terms.
    """
    return 1 + local_term(0, direction, order) + local_term(3, direction, order)
