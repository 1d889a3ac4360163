#!/usr/bin/env python

from __future__ import annotations

import json
import os
import sys
import unittest
from collections import namedtuple
from fractions import Fraction

TEST_DIR = os.path.abspath(os.path.dirname(__file__))
SRC_DIR = os.path.join(TEST_DIR, "../src")
sys.path.insert(0, SRC_DIR)

from bihilbert import constants
from bihilbert.catalog import loadCatalog
from bihilbert.closedforms import prop13Leading
from bihilbert.diagonal import DiagonalSpec, EmbeddedDegreeCheck, UnivariateFit
from bihilbert.documents import (emitReport, parseDocument, parsePolynomial, parsePresentation,
                                 parseReport, presentationToDocument)
from bihilbert.exceptions import ColonDataException, GradingException, ParseException
from bihilbert.oracle import HilbertTable
from bihilbert.polyfit import BinomialBasisPolynomial, FitRegion, FitResult, MixedMultReport

XYZ = ['x', 'y', 'z']

REGULAR_PAIR = {
    'kind': 'rees',
    'name': 'regular-pair',
    'variables': XYZ,
    'n': 3,
    'r': 2,
    'degrees': [2, 3],
    'generators': ['x^2', 'y^3'],
    'colon': [
        {'generators': [], 'dim': 3, 'mult': 1},
        {'generators': ['x^2'], 'dim': 2, 'mult': 2},
    ],
}


def _doc(**changes):
    doc = json.loads(json.dumps(REGULAR_PAIR))
    for key, value in changes.items():
        if value is None:
            doc.pop(key, None)
        else:
            doc[key] = value
    return doc


class TestParsePolynomial(unittest.TestCase):

    def testImplicitMultiplication(self):
        p = parsePolynomial('2x^2 - 1/2 y z', XYZ)
        self.assertEqual(p.coefficient((2, 0, 0)), 2)
        self.assertEqual(p.coefficient((0, 1, 1)), Fraction(-1, 2))
        self.assertEqual(len(p), 2)

    def testOperators(self):
        Case = namedtuple('Case', ['text', 'expected'])
        table = [
            Case('x**2', 'x^2'),
            Case('(x + y)^2', 'x^2 + 2*x*y + y^2'),
            Case('x*y - y*x', '0'),
            Case('  3  ', '3'),
            Case('-z', '-z'),
        ]
        for case in table:
            self.assertEqual(parsePolynomial(case.text, XYZ).toString(XYZ), case.expected, case)

    def testErrors(self):
        Case = namedtuple('Case', ['text', 'message'])
        table = [
            Case('x + w', "column 5: unknown variable 'w'"),
            Case('x $ y', "column 3: unexpected character '$'"),
            Case('x)', 'column 2: unbalanced ")"'),
            Case('(x + y', 'unbalanced "("'),
            Case('   ', 'empty polynomial'),
            Case('x/y', 'cannot parse'),
            Case('x^-1', 'cannot parse'),
        ]
        for case in table:
            with self.assertRaises(ParseException) as ctx:
                parsePolynomial(case.text, XYZ, where='generators[0]')
            self.assertIn(case.message, str(ctx.exception), case)
            self.assertTrue(str(ctx.exception).startswith('generators[0]'), case)

    def testNotAString(self):
        with self.assertRaises(ParseException):
            parsePolynomial(3, XYZ)

    def testNoVariables(self):
        self.assertEqual(parsePolynomial('5', []).coefficient(()), 5)


class TestParsePresentation(unittest.TestCase):

    def testRees(self):
        pres, colon = parsePresentation(json.dumps(REGULAR_PAIR))
        self.assertTrue(pres.isRees)
        self.assertEqual(pres.name, 'regular-pair')
        self.assertEqual(pres.degrees, (2, 3))
        self.assertEqual(colon.s, 2)
        self.assertEqual(colon.ideal(2), (parsePolynomial('x^2', XYZ),))

    def testQuotient(self):
        doc = {'kind': 'quotient', 'variables': ['X1', 'X2', 'Y1'], 'n': 2, 'r': 1,
               'degrees': [1], 'generators': ['X1*Y1']}
        pres, colon = parseDocument(doc)
        self.assertFalse(pres.isRees)
        self.assertIsNone(colon)
        self.assertEqual(pres.generatorBidegrees(), [(2, 1)])

    def testJsonError(self):
        with self.assertRaises(ParseException) as ctx:
            parsePresentation('{"kind": ')
        self.assertIn('line 1 column', str(ctx.exception))

    def testFieldErrors(self):
        Case = namedtuple('Case', ['doc', 'message'])
        table = [
            Case(_doc(n=None), "missing field 'n'"),
            Case(_doc(kind='ring'), "field 'kind'"),
            Case(_doc(n='3'), "field 'n': expected int"),
            Case(_doc(n=True), "field 'n'"),
            Case(_doc(degrees=[2]), "field 'degrees'"),
            Case(_doc(degrees=[2, -3]), 'degrees[1]'),
            Case(_doc(variables=['x', 'x', 'z']), 'duplicate'),
            Case(_doc(variables=['x', 'y', '1z']), 'variables[2]'),
            Case(_doc(variables=['x', 'y']), "field 'variables'"),
            Case(_doc(generators=['x^2']), "field 'generators'"),
            Case(_doc(generators=['x^2', 'w^3']), 'generators[1]'),
            Case(_doc(colon=[{'generators': [], 'mult': 1}, {'dim': 2, 'mult': 2}]), 'colon[0]'),
        ]
        for case in table:
            with self.assertRaises(ParseException) as ctx:
                parseDocument(case.doc)
            self.assertIn(case.message, str(ctx.exception), case)
        with self.assertRaises(ParseException):
            parseDocument([])

    def testGrading(self):
        with self.assertRaises(GradingException):
            parseDocument(_doc(generators=['x^2', 'y^2']))

    def testColonOrdering(self):
        colon = [{'generators': [], 'dim': 3, 'mult': 1}, {'generators': ['x^2'], 'dim': 3, 'mult': 2}]
        with self.assertRaises(ColonDataException):
            parseDocument(_doc(colon=colon))

    def testToDocument(self):
        pres, colon = parsePresentation(json.dumps(REGULAR_PAIR))
        doc = presentationToDocument(pres, colon)
        self.assertEqual(doc['generators'], ['x^2', 'y^3'])
        self.assertEqual(parseDocument(doc), (pres, colon))

    def testCatalogRoundTrip(self):
        records = loadCatalog()
        self.assertTrue(records)
        for record in records:
            doc = presentationToDocument(record.presentation, record.colon)
            pres, colon = parsePresentation(json.dumps(doc))
            self.assertEqual(pres, record.presentation, record.name)
            self.assertEqual(colon, record.colon, record.name)
            self.assertEqual(presentationToDocument(pres, colon), doc, record.name)


class TestEmitReport(unittest.TestCase):

    def testMixedMultJson(self):
        report = MixedMultReport.fromSequence((-6, 0, 1))
        self.assertEqual(emitReport(report),
                         '{"type": "MixedMultReport", "s": 2, "deg_u": 2, "e": [-6, 0, 1], "rho": 2}')
        self.assertEqual(parseReport(emitReport(report)), report)

    def testMixedMultText(self):
        text = emitReport(MixedMultReport.fromSequence((-6, 0, 1)), 'text')
        self.assertEqual(text.splitlines(), ['s = 2', 'deg_u = 2', 'rho = 2',
                                             'e_0 = -6', 'e_1 = 0', 'e_2 = 1'])

    def testRationals(self):
        self.assertEqual(emitReport(Fraction(1, 3)), '"1/3"')
        self.assertEqual(emitReport([Fraction(4, 2), 5]), '[2, 5]')

    def testTableCsv(self):
        table = HilbertTable('t')
        table._set(0, 0, 1, constants.METHOD_COUNTING)
        table._set(1, 0, 3, constants.METHOD_COUNTING)
        table._skip(0, 1, 'too large')
        self.assertEqual(emitReport(table, 'csv').splitlines(), ['u,v,dim', '0,0,1', '0,1,', '1,0,3'])
        back = parseReport(emitReport(table))
        self.assertEqual(back, table)
        self.assertEqual(back.skipped, {(0, 1): 'too large'})

    def testFitResult(self):
        poly = BinomialBasisPolynomial({(0, 0): Fraction(1, 2), (1, 1): 3}, 2)
        fit = FitResult(poly, FitRegion(2, 1, 0))
        doc = json.loads(emitReport(fit))
        self.assertEqual(doc['polynomial']['coeffs'], [[0, 0, '1/2'], [1, 1, 3]])
        back = parseReport(emitReport(fit))
        self.assertEqual(back.polynomial, poly)
        self.assertEqual(back.region, FitRegion(2, 1, 0))

    def testDiagonalReports(self):
        fit = UnivariateFit((Fraction(1), Fraction(3), Fraction(2)), 2, Fraction(2), 0)
        self.assertEqual(parseReport(emitReport(fit)), fit)
        check = EmbeddedDegreeCheck(DiagonalSpec(3, 1), Fraction(2), 2, True, 2, 2, True)
        self.assertEqual(parseReport(emitReport(check)), check)
        self.assertEqual(emitReport(fit, 'csv').splitlines(), ['j,newton', '0,1', '1,3', '2,2'])

    def testTopCoefficients(self):
        top = prop13Leading(3, (2, 3))
        self.assertEqual(json.loads(emitReport(top))['e'], [19, -5, 1, 0])
        self.assertEqual(parseReport(emitReport(top)).sequence(), (19, -5, 1, 0))

    def testNested(self):
        value = {'report': MixedMultReport.fromSequence((0, 1)), 'region': FitRegion(1, 0, 0)}
        back = parseReport(emitReport(value))
        self.assertEqual(back['report'].e, (0, 1))
        self.assertEqual(back['region'], FitRegion(1, 0, 0))

    def testBadFormat(self):
        with self.assertRaises(ValueError):
            emitReport(1, 'xml')

    def testBadReport(self):
        with self.assertRaises(ParseException):
            parseReport('not json')
        with self.assertRaises(ParseException):
            parseReport('{"type": "MixedMultReport", "s": 2}')
        with self.assertRaises(ParseException):
            parseReport('{"type": "BinomialBasisPolynomial", "d": 0, "coeffs": [[0, 0, "x"]]}')


if __name__ == '__main__':
    unittest.main(verbosity=1)
