"""
utils - General tools of use to bihilbert operations.
"""
from __future__ import annotations

import functools
import math
import random
import typing
from fractions import Fraction

import sympy

from . import constants

Number = typing.Union[int, Fraction]


def binomial(a: int, k: int) -> int:
    """
    Binomial coefficient under the combinatorial convention:
    C(a, k) is 0 whenever a < k or k < 0.

    Args:
        a (int):
        k (int):

    Returns:
        int:
    """
    if k < 0 or a < k:
        return 0
    return math.comb(a, k)


def binomialPoly(a: Number, k: int) -> Number:
    """
    Binomial coefficient under the polynomial convention, ie the value of
    the polynomial ``t(t-1)...(t-k+1)/k!`` at ``t = a``.
    Negative and rational ``a`` are allowed.

        >>> binomialPoly(-1, 3)
        -1
        >>> binomialPoly(2, 3)
        0

    Args:
        a (int or Fraction):
        k (int): must be non-negative

    Returns:
        int or Fraction:

    Raises:
        ValueError: if k is negative
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    if isinstance(a, int):
        if a < 0:
            return (-1) ** k * binomial(k - a - 1, k)
        return binomial(a, k)
    num = Fraction(1)
    for i in range(k):
        num *= (a - i)
    return num / math.factorial(k)


def compositions(total: int, parts: int) -> typing.Iterator[typing.Tuple[int, ...]]:
    """
    Yield every tuple of ``parts`` non-negative integers summing to ``total``,
    in lexicographically descending order. Iterative, so ``total`` may be large.

        >>> list(compositions(3, 2))
        [(3, 0), (2, 1), (1, 2), (0, 3)]

    Args:
        total (int):
        parts (int):

    Returns:
        generator:
    """
    if total < 0:
        return
    if parts == 0:
        if total == 0:
            yield ()
        return

    current = [0] * parts
    current[0] = total
    while True:
        yield tuple(current)
        # rightmost movable unit, excluding the last slot
        i = parts - 2
        while i >= 0 and current[i] == 0:
            i -= 1
        if i < 0:
            return
        current[i] -= 1
        rest = sum(current[i + 1:])
        current[i + 1] = rest + 1
        for j in range(i + 2, parts):
            current[j] = 0


@functools.lru_cache(maxsize=None)
def _powerTable(base: int, top: int) -> typing.Tuple[int, ...]:
    table = [1]
    for _ in range(top):
        table.append(table[-1] * base)
    return tuple(table)


@functools.lru_cache(maxsize=4096)
def completeHomogeneous(k: int, degrees: typing.Tuple[int, ...]) -> int:
    """
    The complete homogeneous symmetric polynomial ``h_k`` evaluated at
    ``degrees``, ie the sum of ``d_1^j_1 ... d_q^j_q`` over all
    ``j_1 + ... + j_q = k``.

    Evaluated one variable at a time with cached power tables, so
    the number of compositions is never materialized.

        >>> completeHomogeneous(2, (2, 3))
        19
        >>> completeHomogeneous(0, ())
        1

    Args:
        k (int):
        degrees (tuple of int):

    Returns:
        int: 0 when k is negative
    """
    if k < 0:
        return 0
    # partial[t] = h_t over the variables seen so far
    partial = [1] + [0] * k
    for d in degrees:
        powers = _powerTable(d, k)
        partial = [
            sum(partial[t - j] * powers[j] for j in range(t + 1))
            for t in range(k + 1)
        ]
    return partial[k]


def forwardDifferences(values: typing.Sequence[Number]) -> typing.List[typing.List[Number]]:
    """
    Return the forward difference table of ``values``. Row ``j`` holds
    the ``j``-th differences, so ``table[j][0]`` is the Newton coefficient
    of ``C(t, j)`` for samples taken at ``t = 0, 1, 2, ...``.

    Args:
        values (sequence of int or Fraction):

    Returns:
        list of list:
    """
    table = [list(values)]
    while len(table[-1]) > 1:
        prev = table[-1]
        table.append([prev[i + 1] - prev[i] for i in range(len(prev) - 1)])
    return table


def toFraction(value: typing.Any) -> Fraction:
    """
    Convert an int, Fraction, "p/q" string or sympy Rational to a Fraction.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, str)):
        return Fraction(value)
    if hasattr(value, 'p') and hasattr(value, 'q'):
        return Fraction(int(value.p), int(value.q))
    raise TypeError("cannot convert {!r} to an exact rational".format(value))


def randomPrime(rng: random.Random, bits: int = constants.PRIME_BITS) -> int:
    """
    Return a prime of roughly ``bits`` bits, drawn deterministically
    from ``rng``.

    Args:
        rng (random.Random):
        bits (int):

    Returns:
        int:
    """
    start = rng.getrandbits(bits - 1) | (1 << (bits - 1))
    return int(sympy.nextprime(start))
