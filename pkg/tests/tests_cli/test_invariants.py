'''
Copyright 2024 the pynetmod authors
This file is part of pynetmod.

pynetmod is free software: you can redistribute it 
and/or modify it under the terms of the GNU General Public License as 
published by the Free Software Foundation, either version 3 of the 
License, or (at your option) any later version.

pynetmod is distributed in the hope that it will 
be useful, but WITHOUT ANY WARRANTY; without even the implied warranty 
of MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
GNU General Public License for more details.

You should have received a copy of the GNU General Public License
along with pynetmod.  
If not, see <http://www.gnu.org/licenses/>.
'''

import unittest
from dataclasses import replace
from unittest import mock

from pynetmod.config import DEFAULT_SETTINGS
from pynetmod.invariants import SUITES, CheckResult, run_suite, run_suites

class TestRunSuite(unittest.TestCase):

    def test_fast_suites_pass(self):
        for name in ('algebra', 'kneser', 'green', 'network', 'cmon', 'operad', 'range', 'roundtrip'):
            result = run_suite(name)
            self.assertTrue(result.passed, f'{name}: {result.counterexample}')
            self.assertGreater(result.checked, 0)
            self.assertIsNone(result.counterexample)

    def test_seed(self):
        settings = replace(DEFAULT_SETTINGS, seed=12345)
        self.assertTrue(run_suite('operad', settings).passed)

    def test_first_failure(self):
        def broken(settings):
            yield True, ''
            yield False, 'first'
            raise AssertionError('checks after the first failure must not run')
        with mock.patch.dict(SUITES, {'broken': broken}):
            self.assertEqual(run_suite('broken'), CheckResult('broken', False, 2, 'first'))

    def test_unknown(self):
        self.assertRaises(ValueError, run_suite, 'nothing')

class TestRunSuites(unittest.TestCase):

    def test_order(self):
        results = run_suites(['range', 'algebra'], workers=2)
        self.assertEqual([r.suite for r in results], ['range', 'algebra'])
        self.assertTrue(all(r.passed for r in results))

    def test_all(self):
        calls = []
        def fake(settings):
            calls.append(1)
            yield True, ''
        with mock.patch.dict(SUITES, {name: fake for name in SUITES}):
            results = run_suites(['all'])
        self.assertEqual([r.suite for r in results], list(SUITES))
        self.assertEqual(len(calls), len(SUITES))

    def test_unknown(self):
        self.assertRaises(ValueError, run_suites, ['algebra', 'nothing'])
