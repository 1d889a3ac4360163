"""
closedforms - Explicit formulas for leading coefficients, mixed
multiplicities and Hilbert functions of bigraded algebras.

Every function here is checked against the brute-force values of
:mod:`bihilbert.oracle`.
"""
from __future__ import annotations

import collections.abc
import logging
import typing

from . import constants, utils
from .exceptions import ColonDataException, HypothesisException
from .oracle import CellFunction, CellResult, gradedQuotientHilbert, hilbertPolyRing
from .polyfit import MixedMultReport
from .polynomial import SparsePolynomial
from .presentation import AlgebraPresentation, ColonData

logger = logging.getLogger(__name__)


class TopCoefficients(collections.abc.Mapping):  # type:ignore[type-arg]
    """
    The normalized coefficients ``e_(i,j)``, ``i + j = degree``, of the
    top-degree form ``sum e_(i,j) / (i! j!) u^i v^j`` of a bivariate
    polynomial. Missing entries on the top line read as 0.

        >>> top = prop13Leading(2, (1, 2))
        >>> top[(0, 2)], top[(1, 1)], top[(2, 0)]
        (-3, 1, 0)
    """

    __slots__ = ('_degree', '_values')

    def __init__(self, degree: int, values: typing.Mapping[typing.Tuple[int, int], int]) -> None:
        self._degree = degree
        for (i, j) in values:
            if i + j != degree or i < 0 or j < 0:
                raise ValueError('({}, {}) is not on the top line of degree {}'.format(i, j, degree))
        self._values = {k: int(x) for k, x in values.items() if x}

    @property
    def degree(self) -> int:
        return self._degree

    def __getitem__(self, key: typing.Tuple[int, int]) -> int:
        i, j = key
        if i < 0 or j < 0 or i + j != self._degree:
            raise KeyError(key)
        return self._values.get((i, j), 0)

    def __iter__(self) -> typing.Iterator[typing.Tuple[int, int]]:
        return iter([(i, self._degree - i) for i in range(self._degree + 1)])

    def __len__(self) -> int:
        return self._degree + 1 if self._degree >= 0 else 0

    def sequence(self) -> typing.Tuple[int, ...]:
        """``(e_(0,s), e_(1,s-1), ..., e_(s,0))``"""
        return tuple(self[(i, self._degree - i)] for i in range(self._degree + 1))

    def __repr__(self) -> str:
        return 'TopCoefficients(degree={}, e={})'.format(self._degree, list(self.sequence()))


def prop13Leading(n: int, degrees: typing.Sequence[int]) -> TopCoefficients:
    """
    Top coefficients of the Hilbert polynomial of the polynomial ring
    ``k[X_1..X_n, Y_1..Y_r]`` graded by (1,0) and (d_j,1). The total degree
    is ``n + r - 2`` and

    ``e_(i, n+r-2-i) = (-1)^(n-i-1) h_(n-1-i)(d_1..d_r)`` for ``i < n``, else 0

    where ``h`` is the complete homogeneous symmetric polynomial.

    Args:
        n (int): at least 1
        degrees (sequence of int): d_1..d_r, r at least 1

    Returns:
        TopCoefficients:
    """
    if n < 1 or not degrees:
        raise ValueError('need n >= 1 and r >= 1, got n={}, r={}'.format(n, len(degrees)))
    d = tuple(degrees)
    total = n + len(d) - 2
    values = {}
    for i in range(min(n - 1, total) + 1):
        values[(i, total - i)] = (-1) ** (n - i - 1) * utils.completeHomogeneous(n - 1 - i, d)
    return TopCoefficients(total, values)


def lemma14Leading(e: int, m: int, degrees: typing.Sequence[int]) -> TopCoefficients:
    """
    Top coefficients of ``sum over |alpha| = v of f(u - d.alpha)`` where
    ``f`` is a univariate polynomial of degree ``m`` with leading
    coefficient ``e / m!``. The total degree is ``m + r - 1`` and

    ``e_(i, m+r-1-i) = (-1)^(m-i) e h_(m-i)(d_1..d_r)`` for ``i <= m``, else 0

    Args:
        e (int): multiplicity of f
        m (int): degree of f
        degrees (sequence of int):

    Returns:
        TopCoefficients:
    """
    if m < 0 or not degrees:
        raise ValueError('need m >= 0 and r >= 1, got m={}, r={}'.format(m, len(degrees)))
    d = tuple(degrees)
    total = m + len(d) - 1
    values = {(i, total - i): (-1) ** (m - i) * e * utils.completeHomogeneous(m - i, d)
              for i in range(m + 1)}
    return TopCoefficients(total, values)


def _report(e: typing.Sequence[int]) -> MixedMultReport:
    # Rees algebras of positive height ideals have deg_u = s
    return MixedMultReport.fromSequence(e, deg_u=len(e) - 1)


def dseqMixedMult(cd: ColonData) -> MixedMultReport:
    """
    Mixed multiplicities of the Rees algebra of an ideal generated by a
    homogeneous d-sequence, from its colon data:

    ``e_i = sum_(q=1)^(min(m, s-i+1)) (-1)^(s-q-i+1) e(A/I_q) h_(s-q-i+1)(d_1..d_q)``

    The top entry ``e_s`` equals ``e(A/I_1)``.

    Args:
        cd (ColonData):

    Returns:
        MixedMultReport:

    Raises:
        :class:`bihilbert.exceptions.ColonDataException`: if ``e_s`` and
            ``e(A/I_1)`` disagree
    """
    s, m = cd.s, cd.m
    e = []
    for i in range(s + 1):
        total = 0
        for q in range(1, min(m, s - i + 1) + 1):
            k = s - q - i + 1
            total += (-1) ** k * cd.mult(q) * utils.completeHomogeneous(k, cd.degrees[:q])
        e.append(total)
    report = _report(e)
    if s >= 0 and report.e[s] != cd.mult(1):
        raise ColonDataException('e_s = {} differs from e(A/I_1) = {}'.format(report.e[s], cd.mult(1)))
    logger.debug("d-sequence mixed multiplicities %s", report.e)
    return report


def regseqMixedMult(n: int,
                    multiplicity: int,
                    degrees: typing.Sequence[int],
                    s: typing.Optional[int] = None) -> MixedMultReport:
    """
    Mixed multiplicities of the Rees algebra of an ideal generated by a
    homogeneous regular sequence of degrees ``d_1 <= ... <= d_r`` in an
    ambient ring of multiplicity ``e(A)``:

    ``e_i = sum_q (-1)^(s-q-i+1) e(A) d_1...d_(q-1) h_(s-q-i+1)(d_1..d_q)``

        >>> regseqMixedMult(3, 1, (2, 3)).e
        (-6, 0, 1)

    Args:
        n (int): ambient dimension
        multiplicity (int): e(A)
        degrees (sequence of int):
        s (int): defaults to ``n - 1``

    Returns:
        MixedMultReport:
    """
    d = tuple(degrees)
    if any(a > b for a, b in zip(d, d[1:])):
        raise ValueError('degrees {} are not non-decreasing'.format(d))
    if s is None:
        s = n - 1
    e = []
    for i in range(s + 1):
        total = 0
        for q in range(1, min(len(d), s - i + 1) + 1):
            k = s - q - i + 1
            prefix = 1
            for dj in d[:q - 1]:
                prefix *= dj
            total += (-1) ** k * multiplicity * prefix * utils.completeHomogeneous(k, d[:q])
        e.append(total)
    return _report(e)


def minorsMixedMult(r: int, degree: typing.Optional[int] = None) -> MixedMultReport:
    """
    Mixed multiplicities of the Rees algebra of the ideal of maximal minors
    of a generic ``(r-1) x r`` matrix, with ``s = (r-1) r - 1``:

    ``e_i = sum_(q=1)^(min(r, s-i+1)) (-1)^(s-q-i+1) C(r-1, q-1) C(s-i, q-1) deg^(s-q-i+1)``

    The minors have degree ``r - 1``, which is the default. Passing
    ``degree=r`` evaluates the same sum with every ``d_j = r``, which is what
    the colon decomposition gives for an initial ideal graded that way.

        >>> minorsMixedMult(2).e
        (0, 1)

    Args:
        r (int): at least 2
        degree (int): common degree of the generators

    Returns:
        MixedMultReport:
    """
    if r < 2:
        raise ValueError('need r >= 2, got {}'.format(r))
    if degree is None:
        degree = r - 1
    s = (r - 1) * r - 1
    e = []
    for i in range(s + 1):
        total = 0
        for q in range(1, min(r, s - i + 1) + 1):
            k = s - q - i + 1
            total += (-1) ** k * utils.binomial(r - 1, q - 1) * utils.binomial(s - i, q - 1) * degree ** k
        e.append(total)
    return _report(e)


def _dseqCell(cd: ColonData, u: int, v: int, **kwargs: typing.Any) -> CellResult:
    if v == 0:
        return hilbertPolyRing(cd.n, u), constants.METHOD_COUNTING
    if v < 0:
        return 0, constants.METHOD_COUNTING

    total = 0
    degrees = cd.degrees
    for q in range(1, cd.r + 1):
        # how many alpha give each shift d_1 alpha_1 + ... + d_q alpha_q
        shifts: typing.Dict[int, int] = {}
        for last in range(1, v + 1):
            for head in utils.compositions(v - last, q - 1):
                shift = degrees[q - 1] * last + sum(d * a for d, a in zip(degrees, head))
                if shift <= u:
                    shifts[shift] = shifts.get(shift, 0) + 1
        for shift, count in shifts.items():
            total += count * gradedQuotientHilbert(cd.n, cd.ideal(q), u - shift, **kwargs)
    return total, constants.METHOD_DECOMPOSITION


def dseqHilbert(cd: ColonData, u: int, v: int, **kwargs: typing.Any) -> int:
    """
    The Hilbert function of the Rees algebra of a d-sequence through the
    initial ideal decomposition

    ``H(u, v) = sum_q sum_(alpha_1+..+alpha_q = v, alpha_q > 0) H_(A/I_q)(u - d_1 alpha_1 - .. - d_q alpha_q)``

    for ``v >= 1``, and ``H(u, 0) = H_A(u)``.

    Args:
        cd (ColonData):
        u (int):
        v (int):

    Returns:
        int:
    """
    return _dseqCell(cd, u, v, **kwargs)[0]


def dseqCellFunction(cd: ColonData, **kwargs: typing.Any) -> CellFunction:
    """
    Return ``(u, v) -> (value, method)`` evaluating :func:`dseqHilbert`.
    """
    def _cell(u: int, v: int) -> CellResult:
        return _dseqCell(cd, u, v, **kwargs)

    return _cell


def buildInitialIdeal(cd: ColonData, name: str = '') -> AlgebraPresentation:
    """
    The quotient ``S/J*`` with ``J* = (I_1 Y_1, ..., I_r Y_r)``, whose Hilbert
    function equals that of the Rees algebra of the d-sequence.

    Args:
        cd (ColonData):
        name (str):

    Returns:
        AlgebraPresentation: of kind ``'quotient'``
    """
    n, r = cd.n, cd.r
    names = list(cd.names) + ['Y{}'.format(q) for q in range(1, r + 1)]
    if len(set(names)) != len(names):
        names = list(cd.names) + ['_Y{}'.format(q) for q in range(1, r + 1)]
    gens: typing.List[SparsePolynomial] = []
    for q in range(1, r + 1):
        y = [0] * (n + r)
        y[n + q - 1] = 1
        for g in cd.ideal(q):
            gens.append(g.embed(n + r).mulMonomial(y))
    return AlgebraPresentation.quotient(n, cd.degrees, gens, names=names, name=name)


def gghHilbert(d1: int, d2: int, u_prime: int, v: int) -> int:
    """
    Hilbert function of the Rees algebra of a regular pair of degrees
    ``d1 <= d2`` in three variables, at ``u = u_prime + d2 v``:

    ``sum_(j<v) [C(u'+dj+2, 2) - C(u'+dj-d1+2, 2)] + C(u'+dv+2, 2)``, ``d = d2 - d1``

    Args:
        d1 (int):
        d2 (int):
        u_prime (int): non-negative
        v (int): non-negative

    Returns:
        int:
    """
    if d1 > d2:
        raise ValueError('need d1 <= d2, got ({}, {})'.format(d1, d2))
    if u_prime < 0 or v < 0:
        raise ValueError('need u_prime >= 0 and v >= 0, got ({}, {})'.format(u_prime, v))
    delta = d2 - d1
    total = utils.binomial(u_prime + delta * v + 2, 2)
    for j in range(v):
        total += utils.binomial(u_prime + delta * j + 2, 2) - utils.binomial(u_prime + delta * j - d1 + 2, 2)
    return total


def embeddedDegree(rep: MixedMultReport, c: int, e: int, *, d_max: int) -> int:
    """
    Degree of the embedding of the blow-up by the (c, e) diagonal:
    ``sum_i C(s, i) e_i c^i e^(s-i)``.

        >>> embeddedDegree(MixedMultReport.fromSequence((-6, 0, 1)), 7, 2, d_max=3)
        25

    Args:
        rep (MixedMultReport):
        c (int):
        e (int):
        d_max (int): largest generator degree; ``c > d_max * e`` is required

    Returns:
        int: 0 for the zero polynomial

    Raises:
        :class:`bihilbert.exceptions.HypothesisException`: if c <= d_max * e
    """
    if c < 1 or e < 1 or c <= d_max * e:
        raise HypothesisException('need c > d*e with c, e positive, got c={}, d={}, e={}'.format(c, d_max, e))
    s = rep.s
    return sum(utils.binomial(s, i) * rep.e[i] * c ** i * e ** (s - i) for i in range(s + 1))


def teissierDseq(cd: ColonData) -> typing.Tuple[int, ...]:
    """
    Mixed multiplicities ``e_i(m|I)`` of the maximal ideal and an ideal
    generated by a d-sequence: 0 for ``i <= s - m``, and ``e(A/I_(s-i+1))``
    above.

    Args:
        cd (ColonData):

    Returns:
        tuple of int: ``e_0 .. e_s``
    """
    s, m = cd.s, cd.m
    return tuple(0 if i <= s - m else cd.mult(s - i + 1) for i in range(s + 1))
