#!/usr/bin/env python

from __future__ import annotations

import json
import os
import sys
import tempfile
import unittest

TEST_DIR = os.path.abspath(os.path.dirname(__file__))
SRC_DIR = os.path.join(TEST_DIR, "../src")
sys.path.insert(0, SRC_DIR)

from bihilbert.catalog import (CATALOG_PATH, ExampleRecord, loadCatalog, recordFromDocument,
                               runCatalog, verifyRecord)
from bihilbert.exceptions import BiHilbertException
from bihilbert.presentation import AlgebraPresentation

CHEAP_RECORDS = [
    'xyz-mixed-bidegrees',
    'x1y1-hypersurface-one-y',
    'x1y1-hypersurface-d012',
    'x1y1-hypersurface-d111',
    'x2-y123-polynomial-ring',
    'x1y1-x1y2-d012',
    'polynomial-ring-n2-d12',
    'polynomial-ring-n2-d012',
    'regular-pair-monomial',
    'linear-forms-1x2-minors',
]


def _catalogDocs():
    with open(CATALOG_PATH, encoding='utf-8') as f:
        return json.load(f)


class TestLoadCatalog(unittest.TestCase):

    def testLoad(self):
        records = loadCatalog()
        names = [r.name for r in records]
        self.assertEqual(len(names), len(set(names)))
        self.assertEqual(len(records), 14)
        for name in CHEAP_RECORDS:
            self.assertIn(name, names)

    def testExpectedFields(self):
        for record in loadCatalog():
            exp = record.expected
            self.assertIn('e', exp, record.name)
            self.assertEqual(len(exp['e']), exp['s'] + 1, record.name)
            if record.fit.get('source') == 'colon':
                self.assertIsNotNone(record.colon, record.name)

    def testRecordValidation(self):
        pres = AlgebraPresentation.quotient(1, [0, 1])
        with self.assertRaises(BiHilbertException):
            ExampleRecord('bad', pres, expected={'s': 2, 'rdim': 3})
        with self.assertRaises(BiHilbertException):
            ExampleRecord('bad', pres, expected={'deg_u': 1, 'x_dim': 1})
        with self.assertRaises(BiHilbertException):
            ExampleRecord('bad', pres, fit={'source': 'colon'})

    def testLoadPath(self):
        doc = [d for d in _catalogDocs() if d['name'] == 'xyz-mixed-bidegrees']
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, 'catalog.json')
            with open(path, 'w', encoding='utf-8') as f:
                json.dump(doc, f)
            records = loadCatalog(path)
        self.assertEqual([r.name for r in records], ['xyz-mixed-bidegrees'])


class TestRunCatalog(unittest.TestCase):

    def testCheapRecords(self):
        report = runCatalog(names=CHEAP_RECORDS)
        self.assertEqual(len(report.records), len(CHEAP_RECORDS))
        self.assertEqual(report.failures(), [])
        self.assertTrue(report.passed)

    def testSameE(self):
        report = runCatalog(names=['x2-y123-polynomial-ring', 'x1y1-x1y2-d012'])
        checks = {c.name for r in report.records for c in r.checks}
        self.assertIn('same e as x2-y123-polynomial-ring', checks)
        self.assertTrue(report.passed)

    def testMaximalMinors(self):
        record = [r for r in loadCatalog() if r.name == 'maximal-minors-2x3'][0]
        result = verifyRecord(record)
        self.assertEqual([c for c in result.checks if not c.passed], [])
        grid = [c for c in result.checks if c.name == 'initial ideal u<=12 v<=2']
        self.assertEqual(len(grid), 1)
        self.assertEqual(list(result.report.e), [48, -24, 10, -3, 0, 1])

    def testUnknownName(self):
        with self.assertRaises(KeyError):
            runCatalog(names=['no-such-record'])

    def testMismatchRecorded(self):
        doc = [d for d in _catalogDocs() if d['name'] == 'polynomial-ring-n2-d12'][0]
        doc = json.loads(json.dumps(doc))
        doc['expected']['e'] = [-3, 2, 0]
        doc['expected']['values'] = [[0, 0, 2]]
        report = runCatalog([recordFromDocument(doc)])
        self.assertFalse(report.passed)
        failed = {c.name for _, c in report.failures()}
        self.assertIn('e', failed)
        self.assertIn('H(0, 0)', failed)
        self.assertNotIn('s', failed)

    def testStabilizationRecorded(self):
        doc = [d for d in _catalogDocs() if d['name'] == 'polynomial-ring-n2-d12'][0]
        doc = json.loads(json.dumps(doc))
        doc['fit'] = {'degree_bound': 0, 'budget': 1}
        result = verifyRecord(recordFromDocument(doc))
        self.assertFalse(result.passed)
        self.assertEqual(result.checks[-1].name, 'computation')

    def testHypothesisRecorded(self):
        doc = [d for d in _catalogDocs() if d['name'] == 'polynomial-ring-n2-d12'][0]
        doc = json.loads(json.dumps(doc))
        doc.setdefault('checks', {})['diagonals'] = [[1, 1, 1]]
        good = [r for r in loadCatalog() if r.name == 'xyz-mixed-bidegrees'][0]
        report = runCatalog([recordFromDocument(doc), good])
        self.assertEqual(len(report.records), 2)
        bad, ok = report.records
        self.assertFalse(bad.passed)
        self.assertTrue(ok.passed)
        self.assertEqual(bad.checks[-1].name, 'computation')
        self.assertIn('need c > d*e', bad.checks[-1].actual)
        self.assertEqual(list(bad.report.e), list(doc['expected']['e']))


if __name__ == '__main__':
    unittest.main(verbosity=1)
