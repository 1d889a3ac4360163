"""
polynomial - Exact sparse multivariate polynomials and graded monomial enumeration.
"""
from __future__ import annotations

import typing
from fractions import Fraction

from . import utils

ExponentVector = typing.Tuple[int, ...]

_Coefficient = typing.Union[int, Fraction]


def _grlexKey(exp: ExponentVector) -> typing.Tuple[int, ExponentVector]:
    return sum(exp), exp


def monomialsOfDegree(n: int, u: int) -> typing.List[ExponentVector]:
    """
    Return every exponent vector of length ``n`` and total degree ``u``
    in graded lexicographic (descending) order. The result has
    ``C(u+n-1, n-1)`` entries.

        >>> monomialsOfDegree(2, 3)
        [(3, 0), (2, 1), (1, 2), (0, 3)]

    Args:
        n (int): variable count
        u (int): degree

    Returns:
        list of tuple: empty when u < 0, or when n == 0 and u > 0
    """
    return list(utils.compositions(u, n))


class BiMonomial(typing.NamedTuple):
    """
    A monomial of a bigraded polynomial ring, split into its x part
    (``n`` exponents) and y part (``r`` exponents).
    """
    x_part: ExponentVector
    y_part: ExponentVector

    def bidegree(self, degrees: typing.Sequence[int]) -> typing.Tuple[int, int]:
        """
        Bidegree under the grading deg X_i = (1, 0), deg Y_j = (d_j, 1).

        Args:
            degrees (sequence of int): the degree vector d

        Returns:
            tuple: (u, v)
        """
        v = sum(self.y_part)
        u = sum(self.x_part) + sum(d * b for d, b in zip(degrees, self.y_part))
        return u, v

    @property
    def exponents(self) -> ExponentVector:
        """The exponent vector over all n + r variables."""
        return self.x_part + self.y_part


def bigradedBasis(
        n: int,
        degrees: typing.Sequence[int],
        u: int,
        v: int
        ) -> typing.List[BiMonomial]:
    """
    Monomial basis of the component ``S_(u,v)`` of
    ``S = k[X_1..X_n, Y_1..Y_r]`` graded by deg X_i = (1,0), deg Y_j = (d_j,1).

    Args:
        n (int): x-variable count
        degrees (sequence of int): d_1..d_r
        u (int):
        v (int):

    Returns:
        list of :class:`BiMonomial`: empty when the component is zero
    """
    basis: typing.List[BiMonomial] = []
    if u < 0 or v < 0:
        return basis
    for alpha in utils.compositions(v, len(degrees)):
        w = u - sum(d * a for d, a in zip(degrees, alpha))
        if w < 0:
            continue
        for x_part in utils.compositions(w, n):
            basis.append(BiMonomial(x_part, alpha))
    return basis


class SparsePolynomial(object):
    """
    An immutable polynomial with exact rational coefficients, stored as a
    map from exponent vector to nonzero coefficient.

    Terms iterate in graded lexicographic order, highest first:

        >>> p = SparsePolynomial({(1, 0): 1, (0, 1): 1}, 2)
        >>> q = SparsePolynomial({(1, 0): 1, (0, 1): -1}, 2)
        >>> (p * q).toString(['x', 'y'])
        'x^2 - y^2'

    Args:
        terms (dict): exponent tuple -> int or Fraction
        num_vars (int): length of every exponent tuple

    Raises:
        ValueError: if an exponent vector has the wrong length
            or a negative entry
    """

    __slots__ = ('_terms', '_num_vars', '_hash')

    def __init__(self, terms: typing.Mapping[ExponentVector, _Coefficient], num_vars: int) -> None:
        clean: typing.Dict[ExponentVector, Fraction] = {}
        for exp, coef in terms.items():
            exp = tuple(exp)
            if len(exp) != num_vars or any(e < 0 for e in exp):
                raise ValueError(
                    'exponent vector {} does not fit {} variables'.format(exp, num_vars))
            coef = Fraction(coef)
            if coef:
                clean[exp] = clean.get(exp, Fraction(0)) + coef
                if not clean[exp]:
                    del clean[exp]
        self._terms = clean
        self._num_vars = num_vars
        self._hash: typing.Optional[int] = None

    @classmethod
    def constant(cls, value: _Coefficient, num_vars: int) -> SparsePolynomial:
        return cls({(0,) * num_vars: value}, num_vars)

    @classmethod
    def monomial(cls, exp: typing.Sequence[int], coef: _Coefficient = 1) -> SparsePolynomial:
        return cls({tuple(exp): coef}, len(exp))

    @classmethod
    def _fromClean(cls, terms: typing.Dict[ExponentVector, Fraction], num_vars: int) -> SparsePolynomial:
        self = cls.__new__(cls)
        self._terms = terms
        self._num_vars = num_vars
        self._hash = None
        return self

    @property
    def numVars(self) -> int:
        return self._num_vars

    def terms(self) -> typing.List[typing.Tuple[ExponentVector, Fraction]]:
        """
        Return (exponent, coefficient) pairs in graded lexicographic order,
        highest first.
        """
        return sorted(self._terms.items(), key=lambda t: _grlexKey(t[0]), reverse=True)

    def coefficient(self, exp: typing.Sequence[int]) -> Fraction:
        return self._terms.get(tuple(exp), Fraction(0))

    def exponents(self) -> typing.FrozenSet[ExponentVector]:
        return frozenset(self._terms)

    def items(self) -> typing.ItemsView[ExponentVector, Fraction]:
        """Unordered (exponent, coefficient) view."""
        return self._terms.items()

    def isZero(self) -> bool:
        return not self._terms

    def isMonomial(self) -> bool:
        """True when the polynomial has exactly one term."""
        return len(self._terms) == 1

    def degrees(self) -> typing.Set[int]:
        return {sum(e) for e in self._terms}

    def isHomogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def degree(self) -> int:
        """
        Total degree. The zero polynomial has degree -1.
        """
        if not self._terms:
            return -1
        return max(sum(e) for e in self._terms)

    def leadingExponent(self) -> ExponentVector:
        """
        Raises:
            ValueError: for the zero polynomial
        """
        if not self._terms:
            raise ValueError('the zero polynomial has no leading term')
        return max(self._terms, key=_grlexKey)

    def _checkCompatible(self, other: SparsePolynomial) -> None:
        if self._num_vars != other._num_vars:
            raise ValueError(
                'polynomials over {} and {} variables cannot be combined'.format(
                    self._num_vars, other._num_vars))

    def __add__(self, other: typing.Any) -> SparsePolynomial:
        if not isinstance(other, SparsePolynomial):
            return NotImplemented
        self._checkCompatible(other)
        out = dict(self._terms)
        for exp, coef in other._terms.items():
            total = out.get(exp, 0) + coef
            if total:
                out[exp] = total
            else:
                out.pop(exp, None)
        return SparsePolynomial._fromClean(out, self._num_vars)

    def __neg__(self) -> SparsePolynomial:
        return SparsePolynomial._fromClean(
            {e: -c for e, c in self._terms.items()}, self._num_vars)

    def __sub__(self, other: typing.Any) -> SparsePolynomial:
        if not isinstance(other, SparsePolynomial):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: typing.Any) -> SparsePolynomial:
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, SparsePolynomial):
            return NotImplemented
        return polyMul(self, other)

    def __rmul__(self, other: typing.Any) -> SparsePolynomial:
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def scale(self, factor: _Coefficient) -> SparsePolynomial:
        if not factor:
            return SparsePolynomial._fromClean({}, self._num_vars)
        return SparsePolynomial._fromClean(
            {e: c * factor for e, c in self._terms.items()}, self._num_vars)

    def mulMonomial(self, exp: typing.Sequence[int]) -> SparsePolynomial:
        """
        Multiply by the monomial with exponent vector ``exp``.
        """
        if len(exp) != self._num_vars:
            raise ValueError('monomial does not fit {} variables'.format(self._num_vars))
        return SparsePolynomial._fromClean(
            {tuple(a + b for a, b in zip(e, exp)): c for e, c in self._terms.items()},
            self._num_vars)

    def pow(self, k: int) -> SparsePolynomial:
        result = SparsePolynomial.constant(1, self._num_vars)
        for _ in range(k):
            result = polyMul(result, self)
        return result

    def embed(self, num_vars: int, offset: int = 0) -> SparsePolynomial:
        """
        Re-express the polynomial over ``num_vars`` variables, placing its
        own variables starting at position ``offset``.
        """
        if offset + self._num_vars > num_vars:
            raise ValueError('cannot embed {} variables at offset {} into {}'.format(
                self._num_vars, offset, num_vars))
        tail = num_vars - offset - self._num_vars
        return SparsePolynomial._fromClean(
            {(0,) * offset + e + (0,) * tail: c for e, c in self._terms.items()},
            num_vars)

    def __eq__(self, other: typing.Any) -> bool:
        if not isinstance(other, SparsePolynomial):
            return NotImplemented
        return self._num_vars == other._num_vars and self._terms == other._terms

    def __ne__(self, other: typing.Any) -> bool:
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._num_vars, frozenset(self._terms.items())))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __repr__(self) -> str:
        names = ['x{}'.format(i + 1) for i in range(self._num_vars)]
        return 'SparsePolynomial("{}")'.format(self.toString(names))

    def toString(self, names: typing.Sequence[str]) -> str:
        """
        Render the polynomial with ``^`` powers and ``*`` products, using
        ``names`` for the variables. The output parses back to an equal
        polynomial.

        Args:
            names (sequence of str):

        Returns:
            str:
        """
        if not self._terms:
            return '0'
        parts = []
        for exp, coef in self.terms():
            factors = []
            for name, e in zip(names, exp):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append('{}^{}'.format(name, e))
            mono = '*'.join(factors)
            sign = '-' if coef < 0 else '+'
            mag = abs(coef)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = '{}*{}'.format(mag, mono)
            parts.append((sign, body))

        first_sign, first_body = parts[0]
        out = ('-' if first_sign == '-' else '') + first_body
        for sign, body in parts[1:]:
            out += ' {} {}'.format(sign, body)
        return out


def polyMul(p: SparsePolynomial, q: SparsePolynomial) -> SparsePolynomial:
    """
    Exact product of two polynomials over the same variables.

    Args:
        p (SparsePolynomial):
        q (SparsePolynomial):

    Returns:
        SparsePolynomial:

    Raises:
        ValueError: if the variable counts differ
    """
    p._checkCompatible(q)
    out: typing.Dict[ExponentVector, Fraction] = {}
    for ea, ca in p._terms.items():
        for eb, cb in q._terms.items():
            exp = tuple(a + b for a, b in zip(ea, eb))
            total = out.get(exp, 0) + ca * cb
            if total:
                out[exp] = total
            else:
                out.pop(exp, None)
    return SparsePolynomial._fromClean(out, p.numVars)
