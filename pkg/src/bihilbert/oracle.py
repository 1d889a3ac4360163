"""
oracle - Ground-truth Hilbert function values of bigraded algebras,
by monomial counting and exact rank of spanning sets.
"""
from __future__ import annotations

import functools
import itertools
import logging
import typing
from collections import defaultdict

from . import constants, utils
from .exceptions import MaxSizeException
from .linalg import RationalMatrix, spanRank
from .polynomial import ExponentVector, SparsePolynomial, bigradedBasis, monomialsOfDegree
from .presentation import AlgebraPresentation

logger = logging.getLogger(__name__)

Cell = typing.Tuple[int, int]
CellResult = typing.Tuple[int, str]
CellFunction = typing.Callable[[int, int], CellResult]

# a polynomial together with the monomials it is multiplied by
_Spanning = typing.List[typing.Tuple[SparsePolynomial, typing.List[ExponentVector]]]


def hilbertPolyRing(n: int, u: int) -> int:
    """
    ``dim k[x_1..x_n]_u = C(u+n-1, n-1)``, and 0 for negative ``u``.

        >>> hilbertPolyRing(3, 4)
        15
        >>> hilbertPolyRing(3, -2)
        0

    Args:
        n (int): variable count
        u (int): degree

    Returns:
        int:
    """
    if u < 0:
        return 0
    if n == 0:
        return 1 if u == 0 else 0
    return utils.binomial(u + n - 1, n - 1)


def _divides(a: ExponentVector, b: ExponentVector) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _minimalExponents(exps: typing.Iterable[ExponentVector]) -> typing.List[ExponentVector]:
    unique = list(dict.fromkeys(exps))
    return [e for i, e in enumerate(unique)
            if not any(j != i and _divides(o, e) for j, o in enumerate(unique))]


def _spanDimension(
        spanning: _Spanning,
        columns: typing.Mapping[ExponentVector, int],
        max_entries: int,
        exact_rank: bool,
        seed: int,
        block_key: typing.Optional[typing.Callable[[ExponentVector], typing.Any]] = None,
        ) -> int:
    """
    Rank of the rows ``p * m`` over every (p, shifts) pair. When every row
    is supported on a single value of ``block_key`` the matrix is block
    diagonal and the rank is summed block by block.
    """
    entries = sum(len(p) * len(shifts) for p, shifts in spanning)
    if entries > max_entries:
        raise MaxSizeException(
            "spanning set has {} entries > {} (MAX_CELL_ENTRIES)".format(entries, max_entries))

    blocks: typing.Dict[typing.Any, typing.List[typing.Dict[int, typing.Any]]] = defaultdict(list)
    mixed = False
    for poly, shifts in spanning:
        for shift in shifts:
            row = {}
            keys = set()
            for exp, coef in poly.items():
                target = tuple(a + b for a, b in zip(exp, shift))
                row[columns[target]] = coef
                if block_key is not None:
                    keys.add(block_key(target))
            if len(keys) > 1:
                mixed = True
            blocks[keys.pop() if len(keys) == 1 else None].append(row)

    if mixed or block_key is None:
        groups = [[row for rows in blocks.values() for row in rows]]
    else:
        groups = list(blocks.values())

    total = 0
    for rows in groups:
        m = RationalMatrix(rows, len(columns))
        logger.debug("rank of %r", m)
        total += spanRank(m, exact_rank=exact_rank, seed=seed)
    return total


def _product(gens: typing.Sequence[SparsePolynomial],
             combo: typing.Tuple[int, ...],
             memo: typing.Dict[typing.Tuple[int, ...], SparsePolynomial]) -> SparsePolynomial:
    if combo in memo:
        return memo[combo]
    if len(combo) == 1:
        result = gens[combo[0]]
    else:
        result = _product(gens, combo[:-1], memo) * gens[combo[-1]]
    memo[combo] = result
    return result


def _reesCell(pres: AlgebraPresentation,
              u: int,
              v: int,
              exact_rank: bool = False,
              max_entries: int = constants.MAX_CELL_ENTRIES,
              seed: int = constants.DEFAULT_SEED) -> CellResult:
    n = pres.n
    if v == 0 or u < 0:
        return hilbertPolyRing(n, u), constants.METHOD_COUNTING

    gens, degrees = pres.generators, pres.degrees
    combos = [c for c in itertools.combinations_with_replacement(range(len(gens)), v)
              if sum(degrees[j] for j in c) <= u]
    if not combos:
        return 0, constants.METHOD_COUNTING

    if all(g.isMonomial() for g in gens):
        leads = [g.leadingExponent() for g in gens]
        seen = set()
        for combo in combos:
            base = tuple(map(sum, zip(*(leads[j] for j in combo))))
            for m in utils.compositions(u - sum(degrees[j] for j in combo), n):
                seen.add(tuple(a + b for a, b in zip(base, m)))
        return len(seen), constants.METHOD_COUNTING

    memo: typing.Dict[typing.Tuple[int, ...], SparsePolynomial] = {}
    spanning: _Spanning = [
        (_product(gens, combo, memo), monomialsOfDegree(n, u - sum(degrees[j] for j in combo)))
        for combo in combos
    ]
    columns = {e: i for i, e in enumerate(utils.compositions(u, n))}
    dim = _spanDimension(spanning, columns, max_entries, exact_rank, seed)
    return dim, constants.METHOD_RANK


def idealPowerComponentDim(pres: AlgebraPresentation, v: int, u: int, **kwargs: typing.Any) -> int:
    """
    ``dim_k (I^v)_u`` for the ideal ``I`` of a Rees presentation.

    The component is spanned by the products of ``v`` generators, taken as
    multisets, times monomials of the complementary degree. Monomial ideals
    count distinct product monomials instead of taking a rank.

    Args:
        pres (AlgebraPresentation): of kind ``'rees'``
        v (int): power, at least 1
        u (int): degree
        exact_rank (bool): force rational elimination
        max_entries (int): per-cell matrix entry cap
        seed (int): seeds the modular primes

    Returns:
        int:

    Raises:
        :class:`bihilbert.exceptions.MaxSizeException`: if the spanning
            matrix exceeds ``max_entries``
    """
    if not pres.isRees:
        raise ValueError('ideal powers need a rees presentation, not {!r}'.format(pres.kind))
    if v < 1:
        raise ValueError('power must be at least 1, got {}'.format(v))
    return _reesCell(pres, u, v, **kwargs)[0]


def reesHilbert(pres: AlgebraPresentation, u: int, v: int, **kwargs: typing.Any) -> int:
    """
    ``H(u, v) = dim (I^v)_u`` for the Rees algebra ``A[It]``; the row
    ``v = 0`` is ``A`` itself.

        >>> from bihilbert.documents import parsePolynomial
        >>> gens = [parsePolynomial(s, ['x', 'y', 'z']) for s in ('x^2', 'y^3')]
        >>> pres = AlgebraPresentation.rees(3, gens)
        >>> reesHilbert(pres, 4, 1)
        9

    Args:
        pres (AlgebraPresentation):
        u (int):
        v (int):

    Returns:
        int:
    """
    if not pres.isRees:
        raise ValueError('expected a rees presentation, not {!r}'.format(pres.kind))
    return _reesCell(pres, u, v, **kwargs)[0]


@functools.lru_cache(maxsize=65536)
def _gradedQuotientCell(n: int,
                        gens: typing.Tuple[SparsePolynomial, ...],
                        u: int,
                        exact_rank: bool,
                        max_entries: int,
                        seed: int) -> CellResult:
    if u < 0:
        return 0, constants.METHOD_COUNTING
    total = hilbertPolyRing(n, u)
    if not gens:
        return total, constants.METHOD_COUNTING

    if len(gens) == 1:
        # principal ideals in a domain: A(-deg) -> A -> A/(g)
        return total - hilbertPolyRing(n, u - gens[0].degree()), constants.METHOD_COUNTING

    if all(g.isMonomial() for g in gens):
        exps = _minimalExponents(g.leadingExponent() for g in gens)
        if len(exps) <= constants.INCLUSION_EXCLUSION_LIMIT:
            divisible = 0
            for size in range(1, len(exps) + 1):
                sign = 1 if size % 2 else -1
                for subset in itertools.combinations(exps, size):
                    lcm = tuple(map(max, zip(*subset)))
                    divisible += sign * hilbertPolyRing(n, u - sum(lcm))
            return total - divisible, constants.METHOD_COUNTING
        standard = sum(1 for m in utils.compositions(u, n)
                       if not any(_divides(e, m) for e in exps))
        return standard, constants.METHOD_COUNTING

    spanning: _Spanning = []
    for g in gens:
        shifts = monomialsOfDegree(n, u - g.degree())
        if shifts:
            spanning.append((g, shifts))
    if not spanning:
        return total, constants.METHOD_COUNTING
    columns = {e: i for i, e in enumerate(utils.compositions(u, n))}
    return total - _spanDimension(spanning, columns, max_entries, exact_rank, seed), constants.METHOD_RANK


def gradedQuotientHilbert(n: int,
                          gens: typing.Iterable[SparsePolynomial],
                          u: int,
                          exact_rank: bool = False,
                          max_entries: int = constants.MAX_CELL_ENTRIES,
                          seed: int = constants.DEFAULT_SEED) -> int:
    """
    ``dim (A/I)_u`` for a homogeneous ideal ``I`` of ``A = k[x_1..x_n]``.
    Results are memoized.

    Args:
        n (int): variable count
        gens (iterable of SparsePolynomial): homogeneous generators;
            an empty iterable means the zero ideal
        u (int): any integer; negative degrees give 0

    Returns:
        int:
    """
    gens = tuple(dict.fromkeys(g for g in gens if not g.isZero()))
    return _gradedQuotientCell(n, gens, u, exact_rank, max_entries, seed)[0]


def powerGenerators(pres: AlgebraPresentation, v: int) -> typing.Tuple[SparsePolynomial, ...]:
    """
    Generators of ``I^v``: the products over all multisets of ``v`` generators.
    ``I^0`` is generated by 1.
    """
    if v == 0:
        return (SparsePolynomial.constant(1, pres.n),)
    memo: typing.Dict[typing.Tuple[int, ...], SparsePolynomial] = {}
    products = (_product(pres.generators, combo, memo)
                for combo in itertools.combinations_with_replacement(range(pres.r), v))
    return tuple(dict.fromkeys(products))


def quotientPowerHilbert(pres: AlgebraPresentation, u: int, v: int, **kwargs: typing.Any) -> int:
    """
    ``dim (A/I^v)_u``, computed from the generators of ``I^v`` directly
    rather than from the Rees algebra.
    """
    if not pres.isRees:
        raise ValueError('expected a rees presentation, not {!r}'.format(pres.kind))
    return gradedQuotientHilbert(pres.n, powerGenerators(pres, v), u, **kwargs)


def _quotientCell(pres: AlgebraPresentation,
                  u: int,
                  v: int,
                  exact_rank: bool = False,
                  max_entries: int = constants.MAX_CELL_ENTRIES,
                  seed: int = constants.DEFAULT_SEED) -> CellResult:
    n, degrees = pres.n, pres.degrees
    if u < 0 or v < 0:
        return 0, constants.METHOD_COUNTING

    if not pres.generators:
        count = sum(hilbertPolyRing(n, u - sum(d * a for d, a in zip(degrees, alpha)))
                    for alpha in utils.compositions(v, len(degrees)))
        return count, constants.METHOD_COUNTING

    basis = bigradedBasis(n, degrees, u, v)
    if all(g.isMonomial() for g in pres.generators):
        exps = _minimalExponents(g.leadingExponent() for g in pres.generators)
        count = sum(1 for m in basis if not any(_divides(e, m.exponents) for e in exps))
        return count, constants.METHOD_COUNTING

    spanning: _Spanning = []
    for g, (a, b) in zip(pres.generators, pres.generatorBidegrees()):
        shifts = [m.exponents for m in bigradedBasis(n, degrees, u - a, v - b)]
        if shifts:
            spanning.append((g, shifts))
    if not spanning:
        return len(basis), constants.METHOD_COUNTING

    columns = {m.exponents: i for i, m in enumerate(basis)}
    rank = _spanDimension(spanning, columns, max_entries, exact_rank, seed,
                          block_key=lambda exp: exp[n:])
    return len(basis) - rank, constants.METHOD_RANK


def quotientBigradedHilbert(pres: AlgebraPresentation, u: int, v: int, **kwargs: typing.Any) -> int:
    """
    ``dim (S/J)_(u,v)``: the size of the bigraded basis of ``S`` minus the
    rank of ``{g * m}`` over the generators ``g`` of ``J``. Monomial ``J``
    is handled by counting the basis monomials outside ``J``.

    Args:
        pres (AlgebraPresentation): of kind ``'quotient'``
        u (int):
        v (int):

    Returns:
        int:
    """
    if pres.isRees:
        raise ValueError('expected a quotient presentation, not {!r}'.format(pres.kind))
    return _quotientCell(pres, u, v, **kwargs)[0]


def cellFunction(pres: AlgebraPresentation, **kwargs: typing.Any) -> CellFunction:
    """
    Return a callable ``(u, v) -> (value, method)`` for either kind of
    presentation, with the rank options bound.
    """
    cell = _reesCell if pres.isRees else _quotientCell

    def _cell(u: int, v: int) -> CellResult:
        return cell(pres, u, v, **kwargs)

    return _cell


def hilbertFunction(pres: AlgebraPresentation, **kwargs: typing.Any) -> typing.Callable[[int, int], int]:
    """
    Return the Hilbert function ``(u, v) -> int`` of a presentation.
    """
    cell = cellFunction(pres, **kwargs)

    def _value(u: int, v: int) -> int:
        return cell(u, v)[0]

    return _value


class HilbertTable(object):
    """
    Exact Hilbert function values over a rectangle of bidegrees, with the
    method that produced each cell. Cells whose spanning matrix exceeded
    the entry cap are absent and carry a diagnostic instead.

    Args:
        name (str): label of the presentation the values came from
    """

    __slots__ = ('_name', '_cells', '_methods', '_skipped')

    def __init__(self, name: str = '') -> None:
        self._name = name
        self._cells: typing.Dict[Cell, int] = {}
        self._methods: typing.Dict[Cell, str] = {}
        self._skipped: typing.Dict[Cell, str] = {}

    def _set(self, u: int, v: int, value: int, method: str) -> None:
        if value < 0:
            raise ValueError('negative dimension {} at ({}, {})'.format(value, u, v))
        self._cells[(u, v)] = value
        self._methods[(u, v)] = method

    def _skip(self, u: int, v: int, reason: str) -> None:
        self._skipped[(u, v)] = reason

    @property
    def name(self) -> str:
        return self._name

    @property
    def skipped(self) -> typing.Dict[Cell, str]:
        return dict(self._skipped)

    def isComplete(self) -> bool:
        return not self._skipped

    def method(self, u: int, v: int) -> str:
        return self._methods[(u, v)]

    def get(self, u: int, v: int, default: typing.Optional[int] = None) -> typing.Optional[int]:
        return self._cells.get((u, v), default)

    def points(self) -> typing.List[Cell]:
        """All stored and skipped cells, sorted by (u, v)."""
        return sorted(set(self._cells) | set(self._skipped))

    def items(self) -> typing.List[typing.Tuple[Cell, int]]:
        return sorted(self._cells.items())

    def __getitem__(self, cell: Cell) -> int:
        return self._cells[cell]

    def __contains__(self, cell: typing.Any) -> bool:
        return cell in self._cells

    def __len__(self) -> int:
        return len(self._cells)

    def __iter__(self) -> typing.Iterator[Cell]:
        return iter(sorted(self._cells))

    def __eq__(self, other: typing.Any) -> bool:
        if not isinstance(other, HilbertTable):
            return NotImplemented
        return (self._cells, self._methods, self._skipped) == \
            (other._cells, other._methods, other._skipped)

    def __repr__(self) -> str:
        return 'HilbertTable({!r}, cells={}, skipped={})'.format(
            self._name, len(self._cells), len(self._skipped))


def hilbertTable(pres: typing.Optional[AlgebraPresentation],
                 u_range: typing.Iterable[int],
                 v_range: typing.Iterable[int],
                 cell: typing.Optional[CellFunction] = None,
                 name: typing.Optional[str] = None,
                 **kwargs: typing.Any) -> HilbertTable:
    """
    Evaluate every cell of ``u_range x v_range``. Cells are independent and
    are evaluated in (v, u) order; a cell whose matrix exceeds the entry cap
    is recorded as skipped, never filled with a guess.

    Args:
        pres (AlgebraPresentation): presentation to evaluate, or None when
            ``cell`` is given
        u_range (iterable of int):
        v_range (iterable of int):
        cell (callable): optional ``(u, v) -> (value, method)`` overriding
            the oracle, eg a colon-data decomposition
        name (str): table label, defaults to the presentation name

    Returns:
        HilbertTable:
    """
    if cell is None:
        if pres is None:
            raise ValueError('either a presentation or a cell function is required')
        cell = cellFunction(pres, **kwargs)
    if name is None:
        name = pres.name if pres is not None else ''

    table = HilbertTable(name)
    us = list(u_range)
    for v in v_range:
        for u in us:
            try:
                value, method = cell(u, v)
            except MaxSizeException as e:
                logger.warning("cell (%d, %d) of %s skipped: %s", u, v, name or 'table', e)
                table._skip(u, v, str(e))
                continue
            logger.debug("cell (%d, %d) = %d by %s", u, v, value, method)
            table._set(u, v, value, method)
    return table
