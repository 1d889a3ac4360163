"""
polyfit - Detect the Hilbert polynomial of a bigraded algebra from its
Hilbert function by exact interpolation with a stabilization search, and
read off its degrees and mixed multiplicities.
"""
from __future__ import annotations

import dataclasses
import logging
import math
import random
import typing
from fractions import Fraction

import sympy

from . import constants, utils
from .exceptions import BiHilbertException, MaxSizeException, StabilizationException
from .linalg import RationalMatrix, solveSquare

logger = logging.getLogger(__name__)

Source = typing.Callable[[int, int], typing.Optional[int]]


class FitRegion(typing.NamedTuple):
    """
    The region ``{(u, v) : u >= d v + u0, v >= v0}``.
    """
    d: int
    u0: int
    v0: int

    def contains(self, u: int, v: int) -> bool:
        return v >= self.v0 and u >= self.d * v + self.u0


class BinomialBasisPolynomial(object):
    """
    A bivariate polynomial ``sum c_(i,j) C(w, i) C(v, j)`` in the shifted
    coordinate ``w = u - d v``. Binomials here follow the polynomial
    convention, so the object can be evaluated anywhere.

    Args:
        coeffs (dict): (i, j) -> int or Fraction
        d (int): the shift
    """

    __slots__ = ('_coeffs', '_d')

    def __init__(self, coeffs: typing.Mapping[typing.Tuple[int, int], typing.Any], d: int) -> None:
        self._coeffs = {(int(i), int(j)): Fraction(c) for (i, j), c in coeffs.items() if c}
        self._d = d

    @property
    def coeffs(self) -> typing.Dict[typing.Tuple[int, int], Fraction]:
        return dict(self._coeffs)

    @property
    def d(self) -> int:
        return self._d

    def isZero(self) -> bool:
        return not self._coeffs

    def isIntegral(self) -> bool:
        return all(c.denominator == 1 for c in self._coeffs.values())

    def totalDegree(self) -> int:
        """Total degree in (w, v), which equals the total degree in (u, v)."""
        return max((i + j for i, j in self._coeffs), default=-1)

    def evaluate(self, u: int, v: int) -> Fraction:
        w = u - self._d * v
        return sum((c * utils.binomialPoly(w, i) * utils.binomialPoly(v, j)
                    for (i, j), c in self._coeffs.items()), Fraction(0))

    def toPowerBasis(self) -> sympy.Poly:
        """
        Expand into the monomial basis of ``QQ[u, v]``.
        """
        u, v = sympy.symbols('u v')
        w = u - self._d * v
        expr = sympy.Integer(0)
        for (i, j), c in self._coeffs.items():
            expr += sympy.Rational(c.numerator, c.denominator) * \
                sympy.expand_func(sympy.binomial(w, i)) * sympy.expand_func(sympy.binomial(v, j))
        return sympy.Poly(sympy.expand(expr), u, v, domain='QQ')

    def __eq__(self, other: typing.Any) -> bool:
        if not isinstance(other, BinomialBasisPolynomial):
            return NotImplemented
        return self._d == other._d and self._coeffs == other._coeffs

    def __repr__(self) -> str:
        terms = ', '.join('({}, {}): {}'.format(i, j, c) for (i, j), c in sorted(self._coeffs.items()))
        return 'BinomialBasisPolynomial(d={}, {{{}}})'.format(self._d, terms)


@dataclasses.dataclass(frozen=True)
class MixedMultReport:
    """
    Total degree ``s``, u-degree and mixed multiplicities
    ``e_0 .. e_s`` of a bivariate Hilbert polynomial, with ``rho`` the last
    index whose ``e_i`` is nonzero (-1 when all vanish).
    """
    s: int
    deg_u: int
    e: typing.Tuple[int, ...]
    rho: int

    @classmethod
    def fromSequence(cls, e: typing.Sequence[int], deg_u: typing.Optional[int] = None) -> MixedMultReport:
        e = tuple(int(x) for x in e)
        s = len(e) - 1
        rho = max((i for i, x in enumerate(e) if x), default=-1)
        return cls(s=s, deg_u=s if deg_u is None else deg_u, e=e, rho=rho)

    def isPositive(self) -> bool:
        """True when e_rho > 0, or the sequence is empty."""
        return self.rho < 0 or self.e[self.rho] > 0


class FitResult(typing.NamedTuple):
    polynomial: BinomialBasisPolynomial
    region: FitRegion


def _offsets(budget: int) -> typing.Iterator[typing.Tuple[int, int]]:
    u0 = v0 = 0
    yield u0, v0
    for step in range(budget):
        if step % 2 == 0:
            u0 += 1
        else:
            v0 += 1
        yield u0, v0


def _value(source: Source, u: int, v: int) -> int:
    value = source(u, v)
    if value is None:
        raise MaxSizeException('cell ({}, {}) unavailable'.format(u, v))
    return value


def _collocate(source: Source, d: int, size: int, u0: int, v0: int) -> BinomialBasisPolynomial:
    points = [(u0 + a, v0 + b) for a in range(size) for b in range(size)]
    basis = [(i, j) for i in range(size) for j in range(size)]
    rows = [{k: utils.binomial(w, i) * utils.binomial(v, j)
             for k, (i, j) in enumerate(basis)} for w, v in points]
    rhs = [_value(source, w + d * v, v) for w, v in points]
    solution = solveSquare(RationalMatrix(rows, len(basis)), rhs)
    return BinomialBasisPolynomial(dict(zip(basis, solution)), d)


def fitBivariate(source: Source,
                 d: int,
                 degree_bound: int,
                 budget: int = constants.DEFAULT_FIT_BUDGET) -> FitResult:
    """
    Find the polynomial that agrees with ``source`` on a region
    ``u >= d v + u0, v >= v0``.

    For each offset pair, starting at (0, 0) and then raising ``u0`` and
    ``v0`` alternately, the values on the grid
    ``u0 <= w <= u0 + D, v0 <= v <= v0 + D`` (with ``w = u - d v``) are
    interpolated exactly in the basis ``C(w, i) C(v, j)``. The candidate is
    accepted when its total degree is at most ``D`` and it matches
    ``source`` on the disjoint ``(D+2) x (D+2)`` validation grid above it.

    Args:
        source (callable): ``(u, v) -> int``
        d (int): the region slope, ie d_max of the presentation
        degree_bound (int): D
        budget (int): number of offset increments to try

    Returns:
        FitResult: the polynomial and the first validated region

    Raises:
        :class:`bihilbert.exceptions.StabilizationException`: when the
            budget is exhausted
        :class:`bihilbert.exceptions.MaxSizeException`: when a needed cell
            cannot be computed
    """
    if degree_bound < 0:
        raise ValueError('degree bound must be non-negative')
    size = degree_bound + 1
    reason = 'no attempt made'
    for u0, v0 in _offsets(budget):
        poly = _collocate(source, d, size, u0, v0)
        if poly.totalDegree() > degree_bound:
            reason = 'interpolant of degree {} exceeds the bound'.format(poly.totalDegree())
            logger.debug("offsets (%d, %d): %s", u0, v0, reason)
            continue

        failed = None
        for a in range(size, 2 * size + 2):
            for b in range(size, 2 * size + 2):
                w, v = u0 + a, v0 + b
                u = w + d * v
                if poly.evaluate(u, v) != _value(source, u, v):
                    failed = (u, v)
                    break
            if failed:
                break
        if failed:
            reason = 'validation failed at {}'.format(failed)
            logger.debug("offsets (%d, %d): %s", u0, v0, reason)
            continue

        logger.info("stabilized at offsets (%d, %d) with degree %d", u0, v0, poly.totalDegree())
        return FitResult(poly, FitRegion(d, u0, v0))

    raise StabilizationException(
        'no stabilization found within budget {} for degree bound {}: {} '
        '(either the function has not stabilized yet or its polynomial has '
        'higher degree than the bound)'.format(budget, degree_bound, reason))


def extractReport(poly: BinomialBasisPolynomial) -> MixedMultReport:
    """
    Expand the fitted polynomial in ``u, v`` and read off the total degree
    ``s``, the u-degree, and ``e_i = i! (s-i)! [u^i v^(s-i)]``.

    Args:
        poly (BinomialBasisPolynomial):

    Returns:
        MixedMultReport: with ``s = -1`` for the zero polynomial

    Raises:
        :class:`bihilbert.exceptions.BiHilbertException`: if a mixed
            multiplicity is not an integer
    """
    if poly.isZero():
        return MixedMultReport(s=-1, deg_u=-1, e=(), rho=-1)

    expanded = poly.toPowerBasis()
    coeffs = {monom: utils.toFraction(c) for monom, c in expanded.terms()}
    s = max(i + j for i, j in coeffs)
    deg_u = max(i for i, _ in coeffs)

    e = []
    for i in range(s + 1):
        value = coeffs.get((i, s - i), Fraction(0)) * math.factorial(i) * math.factorial(s - i)
        if value.denominator != 1:
            raise BiHilbertException('e_{} = {} is not an integer'.format(i, value))
        e.append(int(value))

    if poly.d == 0:
        # in the unshifted basis the top form is read off directly
        direct = [poly.coeffs.get((i, s - i), Fraction(0)) for i in range(s + 1)]
        if direct != e:
            raise BiHilbertException('expansion {} disagrees with top coefficients {}'.format(e, direct))

    return MixedMultReport.fromSequence(e, deg_u=deg_u)


def spotCheck(source: Source,
              fit: FitResult,
              degree_bound: int,
              count: int = constants.SPOT_CHECK_POINTS,
              seed: int = constants.DEFAULT_SEED) -> typing.List[typing.Tuple[int, int, int, Fraction]]:
    """
    Compare a fitted polynomial against ``source`` on random region points
    that lie outside both the collocation and the validation grids.

    Returns:
        list of (u, v, expected, fitted): the mismatches, empty on success
    """
    poly, region = fit
    size = degree_bound + 1
    span = 2 * size + 3
    candidates = []
    for a in range(span):
        for b in range(span):
            in_grid = a < size and b < size
            in_margin = size <= a < 2 * size + 2 and size <= b < 2 * size + 2
            if not (in_grid or in_margin):
                candidates.append((a, b))
    rng = random.Random(seed)
    chosen = rng.sample(candidates, min(count, len(candidates)))

    mismatches = []
    for a, b in sorted(chosen):
        v = region.v0 + b
        u = region.u0 + a + region.d * v
        expected = _value(source, u, v)
        fitted = poly.evaluate(u, v)
        if fitted != expected:
            mismatches.append((u, v, expected, fitted))
    return mismatches
