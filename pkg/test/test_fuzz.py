#!/usr/bin/env python

import os
import random
import sys
import unittest
from fractions import Fraction

TEST_DIR = os.path.abspath(os.path.dirname(__file__))
SRC_DIR = os.path.join(TEST_DIR, "../src")
sys.path.insert(0, SRC_DIR)

from bihilbert.linalg import RationalMatrix, rank, spanRank
from bihilbert.oracle import (hilbertPolyRing, quotientBigradedHilbert, quotientPowerHilbert,
                              reesHilbert)
from bihilbert.polynomial import SparsePolynomial, bigradedBasis, monomialsOfDegree, polyMul
from bihilbert import utils
from bihilbert.presentation import AlgebraPresentation


def _randomMonomial(rng, n, degree):
    return rng.choice(monomialsOfDegree(n, degree))


def _randomPolynomial(rng, n, degrees):
    terms = {}
    for _ in range(rng.randint(1, 4)):
        exp = _randomMonomial(rng, n, rng.choice(degrees))
        terms[exp] = Fraction(rng.choice([-3, -2, -1, 1, 2, 3]), rng.randint(1, 3))
    return SparsePolynomial(terms, n)


class TestPolynomialFuzz(unittest.TestCase):

    def testRingAxioms(self):
        rng = random.Random(3)
        for _ in range(30):
            p, q, r = [_randomPolynomial(rng, 3, range(4)) for _ in range(3)]
            self.assertEqual(polyMul(p, q), polyMul(q, p))
            self.assertEqual(polyMul(polyMul(p, q), r), polyMul(p, polyMul(q, r)))
            self.assertEqual(polyMul(p, q + r), polyMul(p, q) + polyMul(p, r))

    def testHomogeneousDegree(self):
        rng = random.Random(4)
        for _ in range(30):
            a, b = rng.randint(0, 4), rng.randint(0, 4)
            p = _randomPolynomial(rng, 3, [a])
            q = _randomPolynomial(rng, 3, [b])
            product = polyMul(p, q)
            self.assertTrue(product.isHomogeneous(), (p, q))
            self.assertEqual(product.degree(), a + b, (p, q))


class TestRankFuzz(unittest.TestCase):

    def testSpanRankMatchesRank(self):
        rng = random.Random(11)
        for _ in range(40):
            rows = rng.randint(1, 12)
            cols = rng.randint(1, 12)
            sparse = []
            for _ in range(rows):
                sparse.append({j: Fraction(rng.randint(-3, 3), rng.randint(1, 4))
                               for j in rng.sample(range(cols), rng.randint(0, min(3, cols)))})
            # duplicate rows keep the rank deficient
            sparse += [dict(r) for r in sparse[:rng.randint(0, rows)]]
            m = RationalMatrix(sparse, cols)
            self.assertEqual(spanRank(m, seed=rng.randint(0, 100)), rank(m))


class TestHilbertFuzz(unittest.TestCase):

    def testMonomialReesComplement(self):
        # counting I^v directly against inclusion-exclusion on A/I^v
        rng = random.Random(5)
        names = ['a', 'b', 'c']
        for _ in range(12):
            degrees = sorted(rng.randint(1, 3) for _ in range(rng.randint(1, 3)))
            gens = [SparsePolynomial.monomial(_randomMonomial(rng, 3, d)) for d in degrees]
            pres = AlgebraPresentation.rees(3, gens, names=names)
            for _ in range(4):
                u, v = rng.randint(0, 8), rng.randint(1, 3)
                self.assertEqual(reesHilbert(pres, u, v) + quotientPowerHilbert(pres, u, v),
                                 hilbertPolyRing(3, u), (degrees, u, v))

    def testQuotientRankMatchesCounting(self):
        # (m1 + m2, m1 - m2) and (m1, m2) are the same ideal
        rng = random.Random(9)
        for _ in range(12):
            n = rng.randint(1, 2)
            degrees = [rng.randint(0, 2) for _ in range(rng.randint(1, 2))]
            u, v = rng.randint(1, 4), rng.randint(1, 2)
            basis = bigradedBasis(n, degrees, u, v)
            if len(basis) < 2:
                continue
            m1, m2 = rng.sample(basis, 2)
            nvars = n + len(degrees)
            p1 = SparsePolynomial.monomial(m1.exponents)
            p2 = SparsePolynomial.monomial(m2.exponents)
            monomial = AlgebraPresentation.quotient(n, degrees, [p1, p2])
            mixed = AlgebraPresentation.quotient(n, degrees, [p1 + p2, p1 - p2])
            self.assertEqual(mixed.numVars, nvars)
            for du in range(3):
                for dv in range(2):
                    self.assertEqual(quotientBigradedHilbert(mixed, u + du, v + dv),
                                     quotientBigradedHilbert(monomial, u + du, v + dv),
                                     (n, degrees, m1, m2, du, dv))


class TestCombinatoricsFuzz(unittest.TestCase):

    def testCompleteHomogeneousBruteForce(self):
        rng = random.Random(3)
        for _ in range(30):
            degrees = tuple(rng.randint(0, 4) for _ in range(rng.randint(1, 4)))
            k = rng.randint(0, 5)
            expected = 0
            for comp in utils.compositions(k, len(degrees)):
                term = 1
                for d, j in zip(degrees, comp):
                    term *= d ** j
                expected += term
            self.assertEqual(utils.completeHomogeneous(k, degrees), expected, (k, degrees))

    def testBinomialPolyRecurrence(self):
        rng = random.Random(4)
        for _ in range(50):
            a = Fraction(rng.randint(-20, 20), rng.randint(1, 5))
            k = rng.randint(1, 6)
            self.assertEqual(utils.binomialPoly(a + 1, k),
                             utils.binomialPoly(a, k) + utils.binomialPoly(a, k - 1), (a, k))


if __name__ == '__main__':
    unittest.main(verbosity=1)
