# -*- coding: utf-8 -*-
# File: _test.py


import logging
import unittest
from fractions import Fraction

import numpy as np
import sympy as sp

from ..config import config as cfg
from ..utils import logger
from ..grid.diagram import cyclic_col_shift, cyclic_row_shift, minimal_torus_grid
from ..grid.pd import PDCode, grid_to_pd
from .alexander import alexander_from_pd, alexander_matrix, normalize_alexander
from .bracket import CrossingCapExceeded, jones, kauffman_bracket
from .laurent import LaurentPoly, NotDivisibleError
from .linalg import determinant_laurent, determinant_up_to_unit, laurent_matrix
from .torus import torus_alexander, torus_jones, torus_jones_in_a


T = LaurentPoly.monomial(1)
A = LaurentPoly.monomial(1, var='A')

# left-handed trefoil
TREFOIL = PDCode([(1, 4, 2, 5, -1), (3, 6, 4, 1, -1), (5, 2, 6, 3, -1)])
# the same with a positive kink on edge 6
TREFOIL_KINK = PDCode([(1, 4, 2, 5, -1), (3, 8, 4, 1, -1), (5, 2, 6, 3, -1), (6, 8, 7, 7, 1)])
KINK_POS = PDCode([(1, 1, 2, 2, 1)])
KINK_NEG = PDCode([(1, 2, 2, 1, -1)])


def _random_poly(rng, var='t'):
    k = rng.randint(0, 5)
    return LaurentPoly(zip((int(e) for e in rng.randint(-4, 5, size=k)),
                           (int(c) for c in rng.randint(-3, 4, size=k))), var)


class TestLaurentPoly(unittest.TestCase):

    def test_examples(self):
        self.assertEqual((T - 1) * (T + 1), T ** 2 - 1)
        self.assertEqual((T ** 2 - 1).exact_div(T - 1), T + 1)
        with self.assertRaises(NotDivisibleError):
            (T ** 2 + 1).exact_div(T - 1)
        with self.assertRaises(ZeroDivisionError):
            T.exact_div(LaurentPoly())

    def test_no_zero_terms(self):
        p = LaurentPoly({0: 1, 1: 0, 2: -3})
        self.assertEqual(p.terms, [(0, 1), (2, -3)])
        self.assertTrue((T - T).is_zero())
        self.assertEqual(T - T, 0)

    def test_ring_axioms(self):
        rng = np.random.RandomState(cfg.CHECK.SEED)
        for _ in range(200):
            a, b, c = (_random_poly(rng) for _ in range(3))
            self.assertEqual((a + b) + c, a + (b + c))
            self.assertEqual((a * b) * c, a * (b * c))
            self.assertEqual(a * (b + c), a * b + a * c)
            self.assertEqual(a * b, b * a)
            self.assertEqual(a - a, 0)
            if not b.is_zero():
                self.assertEqual((a * b).exact_div(b), a)

    def test_units_and_powers(self):
        self.assertTrue((-T ** 3).is_unit())
        self.assertFalse((T + 1).is_unit())
        self.assertEqual((-T) ** -3, -T ** -3)
        self.assertEqual((-T) ** -2, T ** -2)
        self.assertEqual((T + 1) ** 0, 1)
        with self.assertRaises(NotDivisibleError):
            (T + 1) ** -1

    def test_mirror_and_substitute(self):
        p = T ** 2 - T + 1
        self.assertEqual(p.mirror(), T ** -2 - T ** -1 + 1)
        self.assertEqual(p.substitute_power(-4, 'A'), A ** -8 - A ** -4 + 1)
        self.assertEqual(p.shift(-1), T - 1 + T ** -1)
        self.assertEqual(p.span, 2)

    def test_eval(self):
        p = T ** 2 - T + 1
        self.assertEqual(p.eval_at(2), 3)
        self.assertEqual(p.mirror().eval_at(Fraction(1, 2)), 3)
        self.assertEqual(T.mirror().eval_at(2), Fraction(1, 2))
        with self.assertRaises(ZeroDivisionError):
            T.mirror().eval_at(0)

    def test_variables(self):
        self.assertNotEqual(LaurentPoly({1: 1}, 't'), LaurentPoly({1: 1}, 'A'))
        self.assertEqual(LaurentPoly(None, 't'), LaurentPoly(None, 'A'))
        with self.assertRaises(ValueError):
            T + A

    def test_json(self):
        p = LaurentPoly({-2: 3, 5: -1}, var='A')
        self.assertEqual(p.to_json(), {"var": "A", "terms": [[-2, 3], [5, -1]]})
        self.assertEqual(LaurentPoly.from_json(p.to_json()), p)
        with self.assertRaises(ValueError):
            LaurentPoly.from_json({"terms": [[1]]})

    def test_integer_division(self):
        with self.assertRaises(NotDivisibleError):
            (2 * T).exact_div(3 * T)
        with self.assertRaises(NotDivisibleError):
            (T ** 2 + 2 * T + 3).exact_div(2 * T + 1)
        self.assertEqual((6 * T ** 3).exact_div(-3 * T ** -1), -2 * T ** 4)

    def test_sympy(self):
        t = sp.Symbol('t')
        p = (T ** 2 - T + 1).mirror()
        self.assertEqual(sp.expand(p.to_sympy() - (1 - 1 / t + t ** -2)), 0)
        q = LaurentPoly.from_poly(sp.Poly(4 * t ** 3 - 2 * t, t), low=-2)
        self.assertEqual(q, 4 * T - 2 * T ** -1)
        self.assertEqual(q.min_degree, -1)
        self.assertTrue(LaurentPoly.from_poly(sp.Poly(0, t), low=5).is_zero())

    def test_str(self):
        self.assertEqual(str(T ** 2 - T + 1), "t^2 - t + 1")
        self.assertEqual(str(-2 * A ** -3), "-2*A^-3")
        self.assertEqual(str(LaurentPoly()), "0")


class TestLinalg(unittest.TestCase):

    def test_small(self):
        self.assertEqual(determinant_laurent([[T, 1], [1, T]]), T ** 2 - 1)
        self.assertEqual(determinant_laurent([]), 1)
        self.assertEqual(determinant_laurent([[0, 1], [1, 0]]), -1)
        self.assertTrue(determinant_laurent([[T, T], [1, 1]]).is_zero())
        self.assertTrue(determinant_laurent([[T, 1], [0, 0]]).is_zero())

    def test_matches_sympy_det(self):
        rng = np.random.RandomState(cfg.CHECK.SEED)
        for _ in range(30):
            n = int(rng.randint(1, 5))
            m = [[_random_poly(rng) for _ in range(n)] for _ in range(n)]
            want = sp.Matrix([[v.to_sympy() for v in row] for row in m]).det()
            got = determinant_laurent(m).to_sympy()
            self.assertEqual(sp.cancel(got - want), 0)

    def test_up_to_unit(self):
        rng = np.random.RandomState(cfg.CHECK.SEED)
        for _ in range(50):
            n = rng.randint(1, 5)
            m = [[_random_poly(rng) for _ in range(n)] for _ in range(n)]
            # sprinkle unit entries so the sparse pivoting has work to do
            for i in range(n):
                if rng.rand() < 0.5:
                    m[i][rng.randint(n)] = T ** int(rng.randint(-2, 3))
            dense = determinant_laurent(laurent_matrix(m))
            sparse = determinant_up_to_unit([{j: v for j, v in enumerate(row)} for row in m], n)
            if dense.is_zero():
                self.assertTrue(sparse.is_zero())
            else:
                self.assertTrue(sparse.exact_div(dense).is_unit(), (dense, sparse))


class TestAlexander(unittest.TestCase):

    def test_normalize(self):
        self.assertEqual(normalize_alexander(-T ** 3 + T ** 2), 1 - T)
        self.assertEqual(normalize_alexander(T ** 2 - T + 1), T ** 2 - T + 1)
        with self.assertRaises(ValueError):
            normalize_alexander(LaurentPoly())
        rng = np.random.RandomState(cfg.CHECK.SEED)
        for _ in range(100):
            p = _random_poly(rng)
            if p.is_zero():
                continue
            q = normalize_alexander(p)
            self.assertEqual(normalize_alexander(q), q)
            self.assertEqual(q.min_degree, 0)
            self.assertGreater(q.coefficient(0), 0)

    def test_unknot(self):
        self.assertEqual(alexander_from_pd(PDCode()), 1)
        self.assertEqual(alexander_from_pd(KINK_POS), 1)
        self.assertEqual(alexander_from_pd(KINK_NEG), 1)

    def test_trefoil_all_deletions(self):
        for pd in [TREFOIL, grid_to_pd(minimal_torus_grid(2, 3))]:
            c = len(pd.crossings)
            for i in range(c):
                for j in range(c):
                    self.assertEqual(alexander_from_pd(pd, drop_row=i, drop_col=j), T ** 2 - T + 1)
        with self.assertRaises(ValueError):
            alexander_from_pd(TREFOIL, drop_row=3)

    def test_fox_rows(self):
        for row in alexander_matrix(TREFOIL):
            self.assertEqual(sum(row.values(), LaurentPoly()).eval_at(1), 0)
            self.assertTrue(sum(row.values(), LaurentPoly()).is_zero())

    def test_kink_and_grid(self):
        self.assertEqual(alexander_from_pd(TREFOIL_KINK), T ** 2 - T + 1)
        self.assertEqual(alexander_from_pd(grid_to_pd(minimal_torus_grid(3, 5))), torus_alexander(3, 5))

    def test_multi_component(self):
        hopf = PDCode([(1, 3, 2, 4, 1), (3, 1, 4, 2, 1)])
        with self.assertRaises(ValueError):
            alexander_from_pd(hopf)


class TestBracket(unittest.TestCase):

    def test_unknot(self):
        self.assertEqual(kauffman_bracket(PDCode()), LaurentPoly.constant(1, 'A'))
        self.assertEqual(jones(PDCode()), LaurentPoly.constant(1, 'A'))

    def test_kinks(self):
        self.assertEqual(kauffman_bracket(KINK_POS), -A ** 3)
        self.assertEqual(kauffman_bracket(KINK_NEG), -A ** -3)
        self.assertEqual(jones(KINK_POS), 1)
        self.assertEqual(jones(KINK_NEG), 1)
        self.assertEqual(kauffman_bracket(TREFOIL_KINK), -A ** 3 * kauffman_bracket(TREFOIL))
        self.assertEqual(jones(TREFOIL_KINK), jones(TREFOIL))

    def test_trefoil(self):
        # the Knot Atlas value -q^-4 + q^-3 + q^-1 of the left-handed trefoil
        self.assertEqual(jones(TREFOIL), A ** 4 + A ** 12 - A ** 16)
        self.assertEqual(jones(TREFOIL), torus_jones_in_a(2, 3).mirror())

    def test_grids(self):
        for p, q in [(2, 3), (3, 5)]:
            gd = minimal_torus_grid(p, q)
            want = torus_jones_in_a(p, q)
            self.assertEqual(jones(grid_to_pd(gd)), want)
            self.assertEqual(jones(grid_to_pd(cyclic_col_shift(gd))), want)
            self.assertEqual(jones(grid_to_pd(cyclic_row_shift(gd))), want)

    def test_cap(self):
        with self.assertRaises(CrossingCapExceeded) as ctx:
            kauffman_bracket(TREFOIL, max_crossings=2)
        self.assertEqual(ctx.exception.count, 3)
        self.assertEqual(ctx.exception.cap, 2)
        self.assertEqual(jones(TREFOIL, max_crossings=3), jones(TREFOIL))


class TestTorus(unittest.TestCase):

    def test_values(self):
        self.assertEqual(torus_alexander(2, 3), T ** 2 - T + 1)
        self.assertEqual(torus_alexander(3, 5), LaurentPoly.from_coefficients([1, -1, 0, 1, -1, 1, 0, -1, 1]))
        self.assertEqual(torus_jones(2, 3), T + T ** 3 - T ** 4)
        self.assertEqual(torus_jones_in_a(2, 3), A ** -4 + A ** -12 - A ** -16)

    def test_properties(self):
        for p, q in [(2, 3), (2, 5), (3, 4), (3, 5), (4, 5), (5, 7), (7, 9)]:
            alex = torus_alexander(p, q)
            self.assertTrue(alex.is_palindromic(), (p, q))
            self.assertEqual(alex.max_degree, (p - 1) * (q - 1))
            self.assertEqual(alex.eval_at(1), 1)
            self.assertEqual(torus_jones(p, q).eval_at(1), 1)

    def test_errors(self):
        for p, q in [(3, 6), (1, 2), (5, 3)]:
            with self.assertRaises(ValueError):
                torus_alexander(p, q)
            with self.assertRaises(ValueError):
                torus_jones(p, q)


def setUpModule():
    logger.setLevel(logging.CRITICAL)


def run_test_case(case):
    suite = unittest.TestLoader().loadTestsFromTestCase(case)
    unittest.TextTestRunner(verbosity=2).run(suite)


if __name__ == '__main__':
    setUpModule()
    for cls in [TestLaurentPoly, TestLinalg, TestAlexander, TestBracket, TestTorus]:
        run_test_case(cls)
