"""
presentation - Finite descriptions of bigraded algebras and of colon ideal data.
"""
from __future__ import annotations

import typing

from . import constants
from .exceptions import ColonDataException, GradingException
from .polynomial import SparsePolynomial


class AlgebraPresentation(object):
    """
    Either the Rees algebra ``A[It]`` of an ideal ``I = (f_1..f_r)`` in
    ``A = k[x_1..x_n]`` (kind ``'rees'``), or a quotient ``S/J`` of
    ``S = k[X_1..X_n, Y_1..Y_r]`` (kind ``'quotient'``). Both are graded by
    deg X_i = (1, 0) and deg Y_j = (d_j, 1).

    Rees generators live in ``n`` variables and must be nonzero and
    homogeneous of their declared degree. Quotient generators live in
    ``n + r`` variables, x variables first, and must be bihomogeneous.

    Args:
        kind (str): ``'rees'`` or ``'quotient'``
        n (int): x-variable count
        degrees (sequence of int): d_1..d_r
        generators (sequence of SparsePolynomial):
        names (sequence of str): variable names; defaults to x1..xn (y1..yr)
        name (str): label used in reports

    Raises:
        ValueError: on an unknown kind, negative counts or name mismatches
        :class:`bihilbert.exceptions.GradingException`: if a generator
            violates the grading
    """

    __slots__ = ('_kind', '_n', '_degrees', '_generators', '_names', '_name')

    def __init__(self,
                 kind: str,
                 n: int,
                 degrees: typing.Sequence[int],
                 generators: typing.Sequence[SparsePolynomial],
                 names: typing.Optional[typing.Sequence[str]] = None,
                 name: str = '') -> None:
        if kind not in constants.KINDS:
            raise ValueError('unknown presentation kind {!r}'.format(kind))
        if n < 0:
            raise ValueError('x-variable count must be non-negative')
        degrees = tuple(int(d) for d in degrees)
        if any(d < 0 for d in degrees):
            raise ValueError('degrees must be non-negative: {}'.format(degrees))

        self._kind = kind
        self._n = n
        self._degrees = degrees
        self._generators = tuple(generators)
        self._name = name

        if names is None:
            names = ['x{}'.format(i + 1) for i in range(n)]
            if kind == constants.KIND_QUOTIENT:
                names += ['y{}'.format(j + 1) for j in range(len(degrees))]
        self._names = tuple(names)
        if len(self._names) != self.numVars:
            raise ValueError('{} variable names for {} variables'.format(
                len(self._names), self.numVars))

        if kind == constants.KIND_REES:
            self._validateRees()
        else:
            self._validateQuotient()

    @classmethod
    def rees(cls, n: int, generators: typing.Sequence[SparsePolynomial], **kwargs: typing.Any) -> AlgebraPresentation:
        """
        Rees algebra whose degree vector is read off the generators.
        """
        degrees = [g.degree() for g in generators]
        return cls(constants.KIND_REES, n, degrees, generators, **kwargs)

    @classmethod
    def quotient(cls,
                 n: int,
                 degrees: typing.Sequence[int],
                 generators: typing.Sequence[SparsePolynomial] = (),
                 **kwargs: typing.Any) -> AlgebraPresentation:
        return cls(constants.KIND_QUOTIENT, n, degrees, generators, **kwargs)

    def _validateRees(self) -> None:
        if len(self._generators) != len(self._degrees):
            raise ValueError('{} generators for {} degrees'.format(
                len(self._generators), len(self._degrees)))
        for idx, (g, d) in enumerate(zip(self._generators, self._degrees)):
            if g.numVars != self._n:
                raise GradingException(
                    'generator {} has {} variables, expected {}'.format(idx, g.numVars, self._n))
            if g.isZero():
                raise GradingException('generator {} is zero'.format(idx))
            if g.degrees() != {d}:
                raise GradingException(
                    'generator {} ({}) is not homogeneous of degree {}'.format(
                        idx, g.toString(self._names), d))

    def _validateQuotient(self) -> None:
        for idx, g in enumerate(self._generators):
            if g.numVars != self.numVars:
                raise GradingException(
                    'generator {} has {} variables, expected {}'.format(idx, g.numVars, self.numVars))
            if g.isZero():
                raise GradingException('generator {} is zero'.format(idx))
            degrees = {self.bidegreeOf(exp) for exp in g.exponents()}
            if len(degrees) != 1:
                raise GradingException(
                    'generator {} ({}) is not bihomogeneous: bidegrees {}'.format(
                        idx, g.toString(self._names), sorted(degrees)))

    @property
    def kind(self) -> str:
        return self._kind

    @property
    def isRees(self) -> bool:
        return self._kind == constants.KIND_REES

    @property
    def n(self) -> int:
        return self._n

    @property
    def r(self) -> int:
        return len(self._degrees)

    @property
    def degrees(self) -> typing.Tuple[int, ...]:
        return self._degrees

    @property
    def dMax(self) -> int:
        """max(d_1..d_r), or 0 when r is 0."""
        return max(self._degrees, default=0)

    @property
    def generators(self) -> typing.Tuple[SparsePolynomial, ...]:
        return self._generators

    @property
    def names(self) -> typing.Tuple[str, ...]:
        return self._names

    @property
    def name(self) -> str:
        return self._name

    @property
    def numVars(self) -> int:
        """Number of polynomial variables of the generators."""
        if self.isRees:
            return self._n
        return self._n + len(self._degrees)

    def bidegreeOf(self, exp: typing.Sequence[int]) -> typing.Tuple[int, int]:
        """
        Bidegree of a monomial of ``S`` given as an exponent vector over n + r variables.
        """
        x_part, y_part = exp[:self._n], exp[self._n:]
        v = sum(y_part)
        return sum(x_part) + sum(d * b for d, b in zip(self._degrees, y_part)), v

    def generatorBidegrees(self) -> typing.List[typing.Tuple[int, int]]:
        """
        Bidegrees of the quotient generators, in order.
        """
        if self.isRees:
            return [(d, 1) for d in self._degrees]
        return [self.bidegreeOf(g.leadingExponent()) for g in self._generators]

    def defaultDegreeBound(self) -> int:
        """
        Degree bound for polynomial fitting: n - 1 for Rees algebras,
        n + r - 2 for quotients.
        """
        if self.isRees:
            return max(self._n - 1, 0)
        return max(self._n + self.r - 2, 0)

    def __eq__(self, other: typing.Any) -> bool:
        if not isinstance(other, AlgebraPresentation):
            return NotImplemented
        return (self._kind, self._n, self._degrees, self._generators, self._names) == \
            (other._kind, other._n, other._degrees, other._generators, other._names)

    def __hash__(self) -> int:
        return hash((self._kind, self._n, self._degrees, self._generators, self._names))

    def __repr__(self) -> str:
        gens = ', '.join(g.toString(self._names) for g in self._generators)
        return 'AlgebraPresentation({!r}, n={}, d={}, generators=[{}])'.format(
            self._kind, self._n, self._degrees, gens)


class ColonEntry(typing.NamedTuple):
    """
    The colon ideal ``I_q = (f_1..f_{q-1}) : f_q`` with the dimension and
    multiplicity of ``A/I_q``.
    """
    generators: typing.Tuple[SparsePolynomial, ...]
    dim: int
    mult: int


class ColonData(object):
    """
    Colon ideals of a homogeneous d-sequence ``f_1..f_r``, supplied as data.

    Args:
        n (int): ambient variable count
        entries (sequence of ColonEntry or (generators, dim, mult)):
            one per q = 1..r
        degrees (sequence of int): d_1 <= ... <= d_r
        names (sequence of str): ambient variable names

    Raises:
        :class:`bihilbert.exceptions.ColonDataException`: if d is not
            non-decreasing or dim A/I_q is not strictly decreasing
        :class:`bihilbert.exceptions.GradingException`: if a colon
            generator is not homogeneous
    """

    __slots__ = ('_n', '_entries', '_degrees', '_names')

    def __init__(self,
                 n: int,
                 entries: typing.Sequence[typing.Any],
                 degrees: typing.Sequence[int],
                 names: typing.Optional[typing.Sequence[str]] = None) -> None:
        self._n = n
        self._degrees = tuple(int(d) for d in degrees)
        self._entries = tuple(
            ColonEntry(tuple(gens), int(dim), int(mult)) for gens, dim, mult in entries)
        self._names = tuple(names) if names is not None else \
            tuple('x{}'.format(i + 1) for i in range(n))

        if len(self._entries) != len(self._degrees):
            raise ColonDataException('{} colon entries for {} degrees'.format(
                len(self._entries), len(self._degrees)))
        if not self._entries:
            raise ColonDataException('colon data needs at least one entry')
        if any(a > b for a, b in zip(self._degrees, self._degrees[1:])):
            raise ColonDataException('degrees {} are not non-decreasing'.format(self._degrees))
        dims = [e.dim for e in self._entries]
        if any(a <= b for a, b in zip(dims, dims[1:])):
            raise ColonDataException('dim A/I_q {} is not strictly decreasing'.format(dims))
        for q, entry in enumerate(self._entries, 1):
            for g in entry.generators:
                if g.numVars != n or g.isZero() or not g.isHomogeneous():
                    raise GradingException(
                        'colon ideal I_{} has a generator that is not a nonzero '
                        'homogeneous polynomial in {} variables'.format(q, n))

    @property
    def n(self) -> int:
        return self._n

    @property
    def r(self) -> int:
        return len(self._entries)

    @property
    def entries(self) -> typing.Tuple[ColonEntry, ...]:
        return self._entries

    @property
    def degrees(self) -> typing.Tuple[int, ...]:
        return self._degrees

    @property
    def names(self) -> typing.Tuple[str, ...]:
        return self._names

    @property
    def s(self) -> int:
        """dim A/I_1 - 1"""
        return self._entries[0].dim - 1

    @property
    def m(self) -> int:
        """max{q : dim A/I_q + q - 2 = s}"""
        s = self.s
        return max(q for q, e in enumerate(self._entries, 1) if e.dim + q - 2 == s)

    def dim(self, q: int) -> int:
        return self._entries[q - 1].dim

    def mult(self, q: int) -> int:
        return self._entries[q - 1].mult

    def ideal(self, q: int) -> typing.Tuple[SparsePolynomial, ...]:
        return self._entries[q - 1].generators

    def __eq__(self, other: typing.Any) -> bool:
        if not isinstance(other, ColonData):
            return NotImplemented
        return (self._n, self._entries, self._degrees, self._names) == \
            (other._n, other._entries, other._degrees, other._names)

    def __hash__(self) -> int:
        return hash((self._n, self._entries, self._degrees, self._names))

    def __repr__(self) -> str:
        return 'ColonData(n={}, d={}, dims={}, mults={})'.format(
            self._n, self._degrees,
            tuple(e.dim for e in self._entries), tuple(e.mult for e in self._entries))
