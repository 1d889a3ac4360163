#!/usr/bin/env python

from __future__ import absolute_import

import os
import sys
import unittest

TEST_DIR = os.path.abspath(os.path.dirname(__file__))
sys.path.insert(0, os.path.join(TEST_DIR, "../src"))

if __name__ == '__main__':
    pattern = sys.argv[1] if len(sys.argv) > 1 else 'test_*.py'
    testsuite = unittest.TestLoader().discover(TEST_DIR, pattern=pattern)
    result = unittest.TextTestRunner(verbosity=1).run(testsuite)
    sys.exit(not result.wasSuccessful())
