"""
diagonal - Hilbert functions along a diagonal ``{(c v, e v)}`` of a
bigraded algebra, univariate polynomial fitting and the degree of the
embedded blow-up.
"""
from __future__ import annotations

import logging
import typing
from fractions import Fraction

from . import constants, utils
from .closedforms import embeddedDegree
from .exceptions import HypothesisException, StabilizationException
from .polyfit import MixedMultReport, Source

logger = logging.getLogger(__name__)


class DiagonalSpec(typing.NamedTuple):
    c: int
    e: int

    def check(self, d_max: int) -> None:
        """
        Raises:
            :class:`bihilbert.exceptions.HypothesisException`: unless
                c > d_max * e with c, e positive
        """
        if self.c < 1 or self.e < 1:
            raise HypothesisException('c and e must be positive, got ({}, {})'.format(self.c, self.e))
        if self.c <= d_max * self.e:
            raise HypothesisException(
                'need c > d*e, got c={}, d={}, e={}'.format(self.c, d_max, self.e))


class UnivariateFit(typing.NamedTuple):
    """
    ``P(v) = sum coeffs[j] C(v, j)``, valid for ``v >= v0``. The
    multiplicity is the leading Newton coefficient, ie
    ``degree! x`` the leading power coefficient.
    """
    coeffs: typing.Tuple[Fraction, ...]
    degree: int
    multiplicity: Fraction
    v0: int

    def evaluate(self, v: int) -> Fraction:
        return sum((c * utils.binomialPoly(v, j) for j, c in enumerate(self.coeffs)), Fraction(0))


class EmbeddedDegreeCheck(typing.NamedTuple):
    spec: DiagonalSpec
    fit_multiplicity: Fraction
    formula_value: int
    equal: bool
    degree: int
    s: int
    degree_matches: bool


def _newtonAtZero(shifted: typing.Sequence[Fraction], v0: int, degree_bound: int) -> typing.List[Fraction]:
    # rebase sum a_j C(v - v0, j) onto sum c_j C(v, j)
    samples = [sum((a * utils.binomialPoly(v - v0, j) for j, a in enumerate(shifted)), Fraction(0))
               for v in range(degree_bound + 1)]
    return [row[0] for row in utils.forwardDifferences(samples)]


def diagonalFit(source: Source,
                spec: DiagonalSpec,
                degree_bound: int,
                budget: int = constants.DEFAULT_FIT_BUDGET,
                *,
                d_max: int) -> UnivariateFit:
    """
    Fit the univariate polynomial ``P(v) = H(c v, e v)`` for large ``v``.

    ``degree_bound + 2`` consecutive samples starting at ``v0`` plus a
    window of ``DIAGONAL_WINDOW`` more are taken; the differences of order
    ``degree_bound + 1`` must vanish on all of them. Otherwise ``v0`` is
    raised, up to ``budget`` times.

    Args:
        source (callable): ``(u, v) -> int``
        spec (DiagonalSpec):
        degree_bound (int):
        budget (int):
        d_max (int): largest generator degree; ``c > d_max * e`` is enforced

    Returns:
        UnivariateFit:

    Raises:
        :class:`bihilbert.exceptions.HypothesisException`:
        :class:`bihilbert.exceptions.StabilizationException`:
    """
    spec.check(d_max)
    length = degree_bound + 2 + constants.DIAGONAL_WINDOW
    cache: typing.Dict[int, int] = {}

    def sample(v: int) -> int:
        if v not in cache:
            value = source(spec.c * v, spec.e * v)
            if value is None:
                raise StabilizationException('diagonal sample at v={} unavailable'.format(v))
            cache[v] = value
        return cache[v]

    for v0 in range(budget + 1):
        values = [Fraction(sample(v)) for v in range(v0, v0 + length)]
        table = utils.forwardDifferences(values)
        if any(table[degree_bound + 1]):
            logger.debug("diagonal %s not stable from v0=%d", spec, v0)
            continue
        shifted = [table[j][0] for j in range(degree_bound + 1)]
        coeffs = _newtonAtZero(shifted, v0, degree_bound)
        degree = max((j for j, c in enumerate(coeffs) if c), default=-1)
        coeffs = coeffs[:degree + 1]
        multiplicity = coeffs[degree] if degree >= 0 else Fraction(0)
        logger.info("diagonal %s: degree %d, multiplicity %s from v0=%d",
                    spec, degree, multiplicity, v0)
        return UnivariateFit(tuple(coeffs), degree, multiplicity, v0)

    raise StabilizationException(
        'no stabilization found within budget {} on diagonal (c, e) = ({}, {})'.format(
            budget, spec.c, spec.e))


def checkEmbeddedDegree(fit: UnivariateFit,
                        rep: MixedMultReport,
                        spec: DiagonalSpec,
                        *,
                        d_max: int) -> EmbeddedDegreeCheck:
    """
    Compare a diagonal multiplicity with ``sum C(s, i) e_i c^i e^(s-i)``
    and the diagonal degree with ``s``.

    Raises:
        :class:`bihilbert.exceptions.HypothesisException`: unless
            c > d_max * e
    """
    expected = embeddedDegree(rep, spec.c, spec.e, d_max=d_max)
    return EmbeddedDegreeCheck(
        spec=spec,
        fit_multiplicity=fit.multiplicity,
        formula_value=expected,
        equal=fit.multiplicity == expected,
        degree=fit.degree,
        s=rep.s,
        degree_matches=fit.degree == rep.s,
    )
