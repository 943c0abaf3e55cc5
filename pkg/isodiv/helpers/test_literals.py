# Tests for helpers.literals
# licensed under the GNU Public License, version 2

import unittest
from fractions import Fraction

from algebra.field import FieldSpec
from curves.weierstrass import WeierstrassCurve
from helpers import literals
from helpers.exceptions import *


class TestSplitLiterals(unittest.TestCase):
    def test_parentheses_are_kept(self):
        self.assertEqual(literals.split_literals("velu2@(1,0),1+i"), ['velu2@(1,0)', '1+i'])

    def test_blanks_are_dropped(self):
        self.assertEqual(literals.split_literals(" 2 , , i "), ['2', 'i'])

    def test_other_separator(self):
        self.assertEqual(literals.split_literals("(0,0);(1,0)", ';'), ['(0,0)', '(1,0)'])

    def test_unbalanced_fails(self):
        self.assertRaises(InvalidParameters, literals.split_literals, "velu2@(1,0")
        self.assertRaises(InvalidParameters, literals.split_literals, "1),2")


class TestParseExponents(unittest.TestCase):
    def test_map(self):
        self.assertEqual(literals.parse_exponents("1+i:1, 1-i:1, 1:-2, i:-2"),
                         {'1+i': 1, '1-i': 1, '1': -2, 'i': -2})

    def test_repeated_labels_add_up(self):
        self.assertEqual(literals.parse_exponents("2:1,2:2"), {'2': 3})

    def test_velu_label(self):
        self.assertEqual(literals.parse_exponents("velu2@(1,0):2"), {'velu2@(1,0)': 2})

    def test_malformed_fails(self):
        self.assertRaises(InvalidParameters, literals.parse_exponents, "1+i")
        self.assertRaises(InvalidParameters, literals.parse_exponents, "1+i:x")
        self.assertRaises(InvalidParameters, literals.parse_exponents, ":1")
        self.assertRaises(InvalidParameters, literals.parse_exponents, "")


class TestParsePoint(unittest.TestCase):
    def setUp(self):
        self.curve = WeierstrassCurve(FieldSpec('Q'), 0, -1, Fraction(1, 4))

    def test_point(self):
        point = literals.parse_point(self.curve, "(0,1/2)")
        self.assertEqual((point.x, point.y), (0, Fraction(1, 2)))
        self.assertEqual(literals.parse_point(self.curve, "0, -1/2"), -point)

    def test_points(self):
        self.assertEqual(len(literals.parse_points(self.curve, "(0,1/2);(1,1/2)")), 2)

    def test_off_curve_fails(self):
        self.assertRaises(InvalidCurve, literals.parse_point, self.curve, "(1,1)")

    def test_malformed_fails(self):
        self.assertRaises(InvalidParameters, literals.parse_point, self.curve, "(0)")


class TestParseJson(unittest.TestCase):
    def test_object(self):
        self.assertEqual(literals.parse_json_safely('{"alpha": "1+i"}'), {'alpha': '1+i'})

    def test_empty(self):
        self.assertEqual(literals.parse_json_safely(''), {})
        self.assertEqual(literals.parse_json_safely(None), {})

    def test_no_object_fails(self):
        self.assertRaises(InvalidParameters, literals.parse_json_safely, '[1, 2]')
        self.assertRaises(InvalidParameters, literals.parse_json_safely, '{alpha}')


if __name__ == '__main__':
    unittest.main()
