# -*- coding: utf-8 -*-
"""
Created on Fri Oct 23 09:40:11 2026
"""
from __future__ import division, print_function, unicode_literals, absolute_import
import math
import unittest
import sys
import numpy as np

sys.path.append("../../locplan/")
from locplan.base.num_utils import *

if sys.version_info.major == 3:
    unicode = str


class TestContainsIntegers(unittest.TestCase):

    def test_typical(self):
        self.assertTrue(contains_integers([1, 2, -3, 4]))
        self.assertTrue(contains_integers(range(5)))
        self.assertTrue(contains_integers([np.uint16(4), 5]))

    def test_not_all_integers(self):
        self.assertFalse(contains_integers([1, 4.5, 2.2, -1]))
        self.assertFalse(contains_integers([1, -2, 'string']))
        self.assertFalse(contains_integers([True, 2]))

    def test_min_val(self):
        self.assertTrue(contains_integers([1, 2, 3, 4], min_val=1))
        self.assertFalse(contains_integers([0, 2, 3, 4], min_val=1))

    def test_empty(self):
        self.assertFalse(contains_integers([]))

    def test_invalid_min_val(self):
        with self.assertRaises(TypeError):
            _ = contains_integers([1, 2, 3], min_val='hello')
        with self.assertRaises(ValueError):
            _ = contains_integers([1, 2, 3], min_val=1.5)

    def test_not_iterable(self):
        with self.assertRaises(TypeError):
            _ = contains_integers(1)


class TestValidateLocality(unittest.TestCase):

    def test_integers(self):
        self.assertEqual(validate_locality(2), 2)
        self.assertEqual(validate_locality(7.0), 7)
        self.assertIsInstance(validate_locality(7.0), int)
        self.assertEqual(validate_locality(np.int64(5)), 5)

    def test_infinity(self):
        for value in [math.inf, float('inf'), np.inf, 'inf', 'Infinity',
                      ' INF ', '∞']:
            self.assertTrue(is_infinite(validate_locality(value)))

    def test_strings(self):
        self.assertEqual(validate_locality('4'), 4)
        self.assertEqual(validate_locality(' 12 '), 12)

    def test_too_small(self):
        for value in [1, 0, -3, '1']:
            with self.assertRaises(ValueError):
                _ = validate_locality(value)

    def test_not_integer(self):
        with self.assertRaises(ValueError):
            _ = validate_locality(3.5)
        with self.assertRaises(ValueError):
            _ = validate_locality('three')
        with self.assertRaises(ValueError):
            _ = validate_locality(-math.inf)

    def test_wrong_types(self):
        for value in [None, [3], {'r': 3}, True]:
            with self.assertRaises(TypeError):
                _ = validate_locality(value)

    def test_name_in_message(self):
        with self.assertRaises(ValueError) as context:
            _ = validate_locality(1, name='locality')
        self.assertTrue('locality' in str(context.exception))


class TestValidateHalfRadius(unittest.TestCase):

    def test_valid(self):
        self.assertEqual(validate_half_radius(0), 0)
        self.assertEqual(validate_half_radius(5), 5)
        self.assertTrue(is_infinite(validate_half_radius(math.inf)))

    def test_invalid(self):
        with self.assertRaises(ValueError):
            _ = validate_half_radius(-1)
        with self.assertRaises(ValueError):
            _ = validate_half_radius(1.5)
        with self.assertRaises(TypeError):
            _ = validate_half_radius('3')
        with self.assertRaises(TypeError):
            _ = validate_half_radius(False)


class TestLocalityToStr(unittest.TestCase):

    def test_typical(self):
        self.assertEqual(locality_to_str(4), '4')
        self.assertEqual(locality_to_str(INFINITY), 'inf')
        self.assertEqual(locality_to_str(validate_locality('∞')), 'inf')

    def test_is_infinite(self):
        self.assertFalse(is_infinite(10 ** 9))
        self.assertFalse(is_infinite('inf'))
        self.assertTrue(is_infinite(INFINITY))


if __name__ == '__main__':
    unittest.main()
