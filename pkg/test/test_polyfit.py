#!/usr/bin/env python

from __future__ import annotations

import os
import sys
import unittest
from collections import namedtuple
from fractions import Fraction

TEST_DIR = os.path.abspath(os.path.dirname(__file__))
SRC_DIR = os.path.join(TEST_DIR, "../src")
sys.path.insert(0, SRC_DIR)

import sympy

from bihilbert.catalog import loadCatalog
from bihilbert.documents import parsePolynomial
from bihilbert.exceptions import BiHilbertException, MaxSizeException, StabilizationException
from bihilbert.oracle import hilbertFunction
from bihilbert.polyfit import (BinomialBasisPolynomial, FitRegion, MixedMultReport,
                               extractReport, fitBivariate, spotCheck)
from bihilbert.presentation import AlgebraPresentation


def _product(u, v):
    # (w + 1)(v + 1) with w = u - 2v, zero outside the cone
    if u < 2 * v:
        return 0
    return (u - 2 * v + 1) * (v + 1)


def _bumped(u, v):
    return _product(u, v) + (1 if v < 2 else 0)


class TestBinomialBasisPolynomial(unittest.TestCase):

    def setUp(self):
        self.poly = BinomialBasisPolynomial({(0, 0): 1, (1, 0): 1, (0, 1): 1, (1, 1): 1}, 2)

    def testEvaluate(self):
        self.assertEqual(self.poly.evaluate(6, 1), 10)
        self.assertEqual(self.poly.evaluate(0, 0), 1)
        # polynomial convention outside the cone
        self.assertEqual(self.poly.evaluate(0, 1), -2)

    def testProperties(self):
        self.assertEqual(self.poly.totalDegree(), 2)
        self.assertTrue(self.poly.isIntegral())
        self.assertFalse(self.poly.isZero())
        self.assertEqual(BinomialBasisPolynomial({(1, 1): 0}, 0).totalDegree(), -1)
        self.assertFalse(BinomialBasisPolynomial({(1, 0): Fraction(1, 2)}, 0).isIntegral())

    def testToPowerBasis(self):
        u, v = sympy.symbols('u v')
        expected = sympy.Poly(sympy.expand((u - 2 * v + 1) * (v + 1)), u, v, domain='QQ')
        self.assertEqual(self.poly.toPowerBasis(), expected)


class TestMixedMultReport(unittest.TestCase):

    def testFromSequence(self):
        report = MixedMultReport.fromSequence((-6, 0, 1))
        self.assertEqual((report.s, report.deg_u, report.rho), (2, 2, 2))
        self.assertTrue(report.isPositive())

    def testRho(self):
        self.assertEqual(MixedMultReport.fromSequence((1, 0, 0)).rho, 0)
        self.assertEqual(MixedMultReport.fromSequence((0, 0)).rho, -1)
        self.assertTrue(MixedMultReport.fromSequence((0, 0)).isPositive())
        self.assertFalse(MixedMultReport.fromSequence((3, -1)).isPositive())
        self.assertEqual(MixedMultReport.fromSequence((1, 0), deg_u=0).deg_u, 0)


class TestFitBivariate(unittest.TestCase):

    def testExactPolynomial(self):
        fit = fitBivariate(_product, 2, 2)
        self.assertEqual(fit.region, FitRegion(2, 0, 0))
        self.assertEqual(fit.polynomial.coeffs, {(0, 0): 1, (1, 0): 1, (0, 1): 1, (1, 1): 1})
        report = extractReport(fit.polynomial)
        self.assertEqual(report.e, (-4, 1, 0))
        self.assertEqual((report.s, report.deg_u, report.rho), (2, 1, 1))

    def testLateStabilization(self):
        fit = fitBivariate(_bumped, 2, 2)
        self.assertEqual(fit.region, FitRegion(2, 2, 2))
        self.assertEqual(extractReport(fit.polynomial).e, (-4, 1, 0))
        self.assertTrue(fit.region.contains(6, 2))
        self.assertFalse(fit.region.contains(5, 2))
        self.assertFalse(fit.region.contains(9, 1))

    def testBudgetExhausted(self):
        with self.assertRaises(StabilizationException) as ctx:
            fitBivariate(lambda u, v: 2 ** v, 1, 1, budget=3)
        self.assertIn('budget 3', str(ctx.exception))
        # late stabilization is out of reach with no retries
        with self.assertRaises(StabilizationException):
            fitBivariate(_bumped, 2, 2, budget=0)

    def testDegreeBound(self):
        with self.assertRaises(StabilizationException):
            fitBivariate(_product, 2, 1, budget=4)
        with self.assertRaises(ValueError):
            fitBivariate(_product, 2, -1)

    def testUnavailableCell(self):
        with self.assertRaises(MaxSizeException):
            fitBivariate(lambda u, v: None, 1, 1)

    def testReesRegularPair(self):
        gens = [parsePolynomial(t, ['x', 'y', 'z']) for t in ('x^2', 'y^3')]
        pres = AlgebraPresentation.rees(3, gens)
        H = hilbertFunction(pres)
        fit = fitBivariate(H, pres.dMax, pres.defaultDegreeBound())
        report = extractReport(fit.polynomial)
        self.assertEqual(report.e, (-6, 0, 1))
        self.assertEqual(report.deg_u, 2)
        self.assertEqual(spotCheck(H, fit, pres.defaultDegreeBound(), count=6), [])

    def testLooserBoundSameReport(self):
        Case = namedtuple('Case', ['name'])
        table = [
            Case('regular-pair-monomial'),
            Case('polynomial-ring-n2-d12'),
            Case('x1y1-hypersurface-d012'),
        ]
        records = {r.name: r for r in loadCatalog()}
        for case in table:
            pres = records[case.name].presentation
            H = hilbertFunction(pres)
            bound = pres.defaultDegreeBound()
            tight = extractReport(fitBivariate(H, pres.dMax, bound).polynomial)
            loose = extractReport(fitBivariate(H, pres.dMax, bound + 1).polynomial)
            self.assertEqual(tight, loose, case)
            self.assertEqual(list(tight.e), records[case.name].expected['e'], case)


class TestExtractReport(unittest.TestCase):

    def testZero(self):
        report = extractReport(BinomialBasisPolynomial({}, 1))
        self.assertEqual((report.s, report.e, report.rho), (-1, (), -1))

    def testUnshifted(self):
        # C(u, 1) C(v, 1) + 1 has top form u v
        report = extractReport(BinomialBasisPolynomial({(1, 1): 1, (0, 0): 1}, 0))
        self.assertEqual(report.e, (0, 1, 0))

    def testNotIntegral(self):
        with self.assertRaises(BiHilbertException):
            extractReport(BinomialBasisPolynomial({(2, 0): Fraction(1, 2)}, 0))


class TestSpotCheck(unittest.TestCase):

    def testMismatches(self):
        fit = fitBivariate(_product, 2, 2)
        self.assertEqual(spotCheck(_product, fit, 2), [])

        def shifted(u, v):
            return _product(u, v) + (1 if v > 6 else 0)

        mismatches = spotCheck(shifted, fit, 2, count=200)
        self.assertTrue(mismatches)
        for u, v, expected, fitted in mismatches:
            self.assertGreater(v, 6)
            self.assertEqual(expected, fitted + 1)

    def testDeterministic(self):
        fit = fitBivariate(_product, 2, 2)
        calls = []

        def recording(u, v):
            calls.append((u, v))
            return _product(u, v)

        spotCheck(recording, fit, 2, count=5, seed=3)
        first = list(calls)
        calls.clear()
        spotCheck(recording, fit, 2, count=5, seed=3)
        self.assertEqual(calls, first)
        self.assertEqual(len(first), 5)


if __name__ == '__main__':
    unittest.main(verbosity=1)
