"""
linalg - Exact rank and linear solving over the rationals, with a
modular fast path for spanning-set dimension counts.
"""
from __future__ import annotations

import logging
import math
import random
import typing
from fractions import Fraction

from . import constants, utils
from .exceptions import UnisolventException, UnluckyPrimeException

logger = logging.getLogger(__name__)

Row = typing.Dict[int, Fraction]


class RationalMatrix(object):
    """
    An immutable sparse matrix of exact rationals. Each row is stored as a
    mapping of column index to nonzero entry.

        >>> RationalMatrix.fromRows([[1, 2], [2, 4]]).shape
        (2, 2)

    Args:
        rows (iterable of dict): column index -> int or Fraction
        cols (int): number of columns
    """

    __slots__ = ('_rows', '_cols')

    def __init__(self, rows: typing.Iterable[typing.Mapping[int, typing.Any]], cols: int) -> None:
        clean = []
        for row in rows:
            entries = {}
            for col, val in row.items():
                if not 0 <= col < cols:
                    raise IndexError('column {} out of range for {} columns'.format(col, cols))
                val = Fraction(val)
                if val:
                    entries[col] = val
            clean.append(entries)
        self._rows: typing.List[Row] = clean
        self._cols = cols

    @classmethod
    def fromRows(cls, dense: typing.Sequence[typing.Sequence[typing.Any]]) -> RationalMatrix:
        """
        Build a matrix from a dense list of rows.
        """
        cols = len(dense[0]) if dense else 0
        for row in dense:
            if len(row) != cols:
                raise ValueError('ragged rows: expected {} columns'.format(cols))
        return cls(({j: x for j, x in enumerate(row) if x} for row in dense), cols)

    @classmethod
    def identity(cls, size: int) -> RationalMatrix:
        return cls(({i: 1} for i in range(size)), size)

    @property
    def shape(self) -> typing.Tuple[int, int]:
        return len(self._rows), self._cols

    @property
    def rows(self) -> int:
        return len(self._rows)

    @property
    def cols(self) -> int:
        return self._cols

    def row(self, i: int) -> Row:
        return dict(self._rows[i])

    def sparseRows(self) -> typing.List[Row]:
        return self._rows

    def nonzeroCount(self) -> int:
        return sum(len(r) for r in self._rows)

    def toDense(self) -> typing.List[typing.List[Fraction]]:
        return [[row.get(j, Fraction(0)) for j in range(self._cols)] for row in self._rows]

    def transpose(self) -> RationalMatrix:
        cols: typing.List[Row] = [{} for _ in range(self._cols)]
        for i, row in enumerate(self._rows):
            for j, val in row.items():
                cols[j][i] = val
        return RationalMatrix(cols, len(self._rows))

    def multiply(self, vector: typing.Sequence[typing.Any]) -> typing.List[Fraction]:
        """
        Matrix-vector product.

        Raises:
            ValueError: if the vector length differs from the column count
        """
        if len(vector) != self._cols:
            raise ValueError('vector of length {} against {} columns'.format(len(vector), self._cols))
        return [sum((val * vector[j] for j, val in row.items()), Fraction(0)) for row in self._rows]

    def __eq__(self, other: typing.Any) -> bool:
        if not isinstance(other, RationalMatrix):
            return NotImplemented
        return self._cols == other._cols and self._rows == other._rows

    def __repr__(self) -> str:
        return 'RationalMatrix({}x{}, nonzero={})'.format(
            len(self._rows), self._cols, self.nonzeroCount())


def _integerRows(m: RationalMatrix) -> typing.List[typing.Dict[int, int]]:
    rows = []
    for row in m.sparseRows():
        if not row:
            continue
        scale = 1
        for val in row.values():
            scale = scale * val.denominator // math.gcd(scale, val.denominator)
        rows.append({j: int(val * scale) for j, val in row.items()})
    return rows


def rank(m: RationalMatrix) -> int:
    """
    Exact rank over the rationals by fraction-free (Bareiss) elimination.
    Rows are cleared to integers first; the pivot in each column is the
    first row, in row order, with a nonzero entry there.

        >>> rank(RationalMatrix.fromRows([[1, 2], [2, 4]]))
        1

    Args:
        m (RationalMatrix):

    Returns:
        int:
    """
    rows = _integerRows(m)
    columns = sorted({j for row in rows for j in row})
    prev = 1
    r = 0
    for col in columns:
        pivot_idx = None
        for i in range(r, len(rows)):
            if rows[i].get(col):
                pivot_idx = i
                break
        if pivot_idx is None:
            continue
        rows[r], rows[pivot_idx] = rows[pivot_idx], rows[r]
        pivot_row = rows[r]
        p = pivot_row[col]
        for i in range(r + 1, len(rows)):
            row = rows[i]
            a = row.get(col, 0)
            updated = {}
            for j in set(row) | set(pivot_row):
                val = (p * row.get(j, 0) - a * pivot_row.get(j, 0)) // prev
                if val:
                    updated[j] = val
            rows[i] = updated
        prev = p
        r += 1
        if r == len(rows):
            break
    return r


def _reduceMod(row: Row, p: int) -> typing.Dict[int, int]:
    out = {}
    for j, val in row.items():
        den = val.denominator % p
        if den == 0:
            raise UnluckyPrimeException(p)
        x = val.numerator * pow(den, -1, p) % p
        if x:
            out[j] = x
    return out


def modularRank(m: RationalMatrix, p: int) -> int:
    """
    Rank of the reduction of ``m`` modulo the prime ``p``, never more
    than the rational rank. Rows are inserted one at a time into a sparse
    echelon form keyed by leading column; shortest rows go first.

        >>> modularRank(RationalMatrix.fromRows([[101]]), 101)
        0

    Args:
        m (RationalMatrix):
        p (int): prime

    Returns:
        int:

    Raises:
        :class:`bihilbert.exceptions.UnluckyPrimeException`: if ``p``
            divides an entry denominator
    """
    reduced = [_reduceMod(row, p) for row in m.sparseRows()]
    reduced.sort(key=len)
    pivots: typing.Dict[int, typing.Dict[int, int]] = {}
    for row in reduced:
        while row:
            lead = min(row)
            pivot = pivots.get(lead)
            if pivot is None:
                inv = pow(row[lead], -1, p)
                pivots[lead] = {j: x * inv % p for j, x in row.items()}
                break
            factor = row[lead]
            for j, x in pivot.items():
                val = (row.get(j, 0) - factor * x) % p
                if val:
                    row[j] = val
                else:
                    row.pop(j, None)
    return len(pivots)


def spanRank(
        m: RationalMatrix,
        exact_rank: bool = False,
        seed: int = constants.DEFAULT_SEED
        ) -> int:
    """
    Rank of ``m`` under the verification policy: two independent random
    primes of ``PRIME_BITS`` bits are tried, agreement is accepted, and any
    disagreement (or unlucky prime) falls back to rational elimination.

    Args:
        m (RationalMatrix):
        exact_rank (bool): skip the modular path entirely
        seed (int): seeds the prime selection

    Returns:
        int:
    """
    if exact_rank or m.rows == 0:
        return rank(m)

    rng = random.Random(seed)
    ranks = []
    for _ in range(2):
        prime = utils.randomPrime(rng)
        try:
            ranks.append(modularRank(m, prime))
        except UnluckyPrimeException as e:
            logger.warning("%s; falling back to rational rank", e)
            return rank(m)

    if ranks[0] == ranks[1]:
        logger.debug("modular ranks agree at %d for %r", ranks[0], m)
        return ranks[0]

    logger.warning("modular ranks %s disagree for %r; using rational elimination", ranks, m)
    return rank(m)


def solveSquare(m: RationalMatrix, rhs: typing.Sequence[typing.Any]) -> typing.List[Fraction]:
    """
    Solve ``m x = rhs`` exactly by Gauss-Jordan elimination.

    Args:
        m (RationalMatrix): square
        rhs (sequence of int or Fraction):

    Returns:
        list of Fraction:

    Raises:
        ValueError: if ``m`` is not square or ``rhs`` has the wrong length
        :class:`bihilbert.exceptions.UnisolventException`: if ``m`` is singular
    """
    size, cols = m.shape
    if size != cols:
        raise ValueError('matrix is {}x{}, not square'.format(size, cols))
    if len(rhs) != size:
        raise ValueError('right hand side of length {} for size {}'.format(len(rhs), size))

    aug = [row + [Fraction(b)] for row, b in zip(m.toDense(), rhs)]
    for col in range(size):
        pivot_idx = next((i for i in range(col, size) if aug[i][col]), None)
        if pivot_idx is None:
            raise UnisolventException()
        aug[col], aug[pivot_idx] = aug[pivot_idx], aug[col]
        pivot = aug[col][col]
        pivot_row = [x / pivot for x in aug[col]]
        aug[col] = pivot_row
        for i in range(size):
            if i != col and aug[i][col]:
                factor = aug[i][col]
                aug[i] = [x - factor * y for x, y in zip(aug[i], pivot_row)]
    return [row[size] for row in aug]
