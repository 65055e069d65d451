# -*- coding: utf-8 -*-
# File: _test.py


import logging
import unittest

import numpy as np

from ..config import config as cfg
from ..grid.diagram import GridDiagram, grid_crossings, grid_valid, horizontal_stick_lengths, inflection_columns, \
    is_petal_form, minimal_torus_grid
from ..grid.pd import alexander_from_grid, grid_to_pd
from ..invariants.bracket import jones
from ..invariants.laurent import LaurentPoly
from ..invariants.torus import torus_alexander, torus_jones_in_a
from ..utils import logger
from .bounds import TheoremResult, arc_index_torus, known_petal_number, petal_lower_bound, \
    petal_lower_bound_torus, theorem_check
from .permutation import PetalPermutation, petal_equal_up_to_symmetry, petal_to_grid, \
    read_petal_permutation, torus_petal_permutation, trefoil_petal_permutation


T = LaurentPoly.monomial(1)

FAMILY = {
    1: (1, 7, 3, 6, 2, 5, 9, 4, 8),
    2: (1, 10, 4, 9, 3, 8, 2, 7, 13, 6, 12, 5, 11),
    3: (1, 13, 5, 12, 4, 11, 3, 10, 2, 9, 17, 8, 16, 7, 15, 6, 14),
}


class TestPetalPermutation(unittest.TestCase):

    def test_validation(self):
        self.assertEqual(PetalPermutation([2, 5, 3, 1, 4]).levels, (1, 4, 2, 5, 3))
        with self.assertRaises(ValueError):
            PetalPermutation([1, 2, 3, 4])
        with self.assertRaises(ValueError):
            PetalPermutation([1, 2, 2])
        with self.assertRaises(ValueError):
            PetalPermutation.from_json({"petals": [1, 2, 3]})

    def test_json(self):
        pp = torus_petal_permutation(1)
        self.assertEqual(pp.to_json(), {"levels": [1, 7, 3, 6, 2, 5, 9, 4, 8]})
        self.assertEqual(PetalPermutation.from_json(pp.to_json()), pp)

    def test_family(self):
        for n, levels in FAMILY.items():
            self.assertEqual(torus_petal_permutation(n).levels, levels)
        for n in range(1, 7):
            pp = torus_petal_permutation(n)
            self.assertEqual(pp.petals, 4 * n + 5)
            self.assertTrue(is_petal_form(petal_to_grid(pp)))
        with self.assertRaises(ValueError):
            torus_petal_permutation(0)

    def test_symmetry(self):
        tref = trefoil_petal_permutation()
        self.assertEqual(tref.levels, (1, 4, 2, 5, 3))
        self.assertTrue(petal_equal_up_to_symmetry(tref, PetalPermutation([1, 3, 5, 2, 4])))
        self.assertTrue(petal_equal_up_to_symmetry(tref, PetalPermutation([5, 3, 1, 4, 2])))
        self.assertFalse(petal_equal_up_to_symmetry(tref, PetalPermutation([1, 3, 2, 5, 4])))
        self.assertFalse(petal_equal_up_to_symmetry(tref, torus_petal_permutation(1)))


class TestPetalGrid(unittest.TestCase):

    def test_round_trip(self):
        cases = [trefoil_petal_permutation()] + [torus_petal_permutation(n) for n in range(1, 5)]
        rng = np.random.RandomState(cfg.CHECK.SEED)
        for _ in range(100):
            p = 2 * int(rng.randint(1, 8)) + 1
            cases.append(PetalPermutation(rng.permutation(p) + 1))
        for pp in cases:
            gd = petal_to_grid(pp)
            self.assertTrue(grid_valid(gd))
            self.assertTrue(is_petal_form(gd), pp)
            self.assertLess(gd.x_col()[1], gd.o_col()[1], pp)
            self.assertEqual(read_petal_permutation(gd), pp)

    def test_trefoil_grid(self):
        gd = petal_to_grid(trefoil_petal_permutation())
        self.assertEqual(gd, GridDiagram(5, [1, 5, 4, 3, 2], [4, 3, 2, 1, 5]))
        self.assertEqual(inflection_columns(gd), [2])

    def test_read_reversed_orientation(self):
        # swapping X and O reverses the knot, so the top stick points right
        rng = np.random.RandomState(cfg.CHECK.SEED + 1)
        cases = [trefoil_petal_permutation(), torus_petal_permutation(2)]
        cases += [PetalPermutation(rng.permutation(2 * int(rng.randint(1, 8)) + 1) + 1) for _ in range(50)]
        for pp in cases:
            gd = petal_to_grid(pp)
            flipped = GridDiagram(gd.size, gd.o_rows, gd.x_rows)
            self.assertGreater(flipped.x_col()[1], flipped.o_col()[1])
            self.assertEqual(read_petal_permutation(flipped), pp)

    def test_read_errors(self):
        with self.assertRaises(ValueError):
            read_petal_permutation(minimal_torus_grid(3, 5))
        with self.assertRaises(ValueError):
            read_petal_permutation(minimal_torus_grid(2, 5))
        with self.assertRaises(ValueError):
            petal_to_grid(PetalPermutation([1]))

    def test_sticks_above_inflection(self):
        for n in range(1, 5):
            r = 2 * n + 1
            gd = petal_to_grid(torus_petal_permutation(n))
            cols = inflection_columns(gd)
            self.assertEqual(len(cols), 1)
            top = min(gd.x_rows[cols[0]], gd.o_rows[cols[0]])
            bottom = max(gd.x_rows[cols[0]], gd.o_rows[cols[0]])
            self.assertEqual(bottom, gd.size)
            lengths = horizontal_stick_lengths(gd)
            self.assertEqual(sorted(set(lengths.values())), [r + 1, r + 2])
            self.assertEqual(sum(1 for v in lengths.values() if v == r + 2), top - 1)
            self.assertTrue(all(lengths[row] == r + 2 for row in range(1, top)))
            # the top stick points left
            self.assertLess(gd.x_col()[1], gd.o_col()[1])

    def test_trefoil(self):
        gd = petal_to_grid(trefoil_petal_permutation())
        self.assertEqual(alexander_from_grid(gd), T ** 2 - T + 1)
        pd = grid_to_pd(gd)
        self.assertEqual(len(pd.crossings), len(grid_crossings(gd)))
        # left-handed, as drawn in the petal pictures
        self.assertEqual(jones(pd), torus_jones_in_a(2, 3).mirror())

    def test_certification(self):
        for n in range(1, 5):
            gd = petal_to_grid(torus_petal_permutation(n))
            self.assertEqual(alexander_from_grid(gd), torus_alexander(2 * n + 1, 2 * n + 3))

    def test_chirality_t35(self):
        pd = grid_to_pd(petal_to_grid(torus_petal_permutation(1)))
        # unlike the trefoil, the petal T_{3,5} comes out positive
        self.assertEqual(jones(pd), torus_jones_in_a(3, 5))
        self.assertNotEqual(jones(pd), torus_jones_in_a(3, 5).mirror())


class TestBounds(unittest.TestCase):

    def test_lower_bound(self):
        self.assertEqual(petal_lower_bound(8), 9)
        self.assertEqual(petal_lower_bound(5), 5)
        self.assertEqual(petal_lower_bound(12), 13)
        with self.assertRaises(ValueError):
            petal_lower_bound(2)

    def test_arc_index(self):
        self.assertEqual(arc_index_torus(2, 3), 5)
        self.assertEqual(arc_index_torus(3, 5), 8)
        self.assertEqual(arc_index_torus(7, 9), 16)
        for r, s in [(3, 6), (5, 3), (1, 2)]:
            with self.assertRaises(ValueError):
                arc_index_torus(r, s)
        for r in range(3, 17, 2):
            self.assertEqual(arc_index_torus(r, r + 2), 2 * r + 2)
            self.assertEqual(petal_lower_bound_torus(r, r + 2), 2 * r + 3)

    def test_known(self):
        self.assertEqual(known_petal_number(3, 5), 9)
        self.assertEqual(known_petal_number(2, 3), 5)
        self.assertEqual(known_petal_number(3, 4), 7)
        self.assertIsNone(known_petal_number(2, 5))
        self.assertIsNone(known_petal_number(3, 7))

    def test_theorem(self):
        for r in [3, 5, 7, 9]:
            self.assertEqual(theorem_check(r), TheoremResult(2 * r + 3, 2 * r + 3, True))
        for r in [1, 4]:
            with self.assertRaises(ValueError):
                theorem_check(r)


def setUpModule():
    logger.setLevel(logging.CRITICAL)


def run_test_case(case):
    suite = unittest.TestLoader().loadTestsFromTestCase(case)
    unittest.TextTestRunner(verbosity=2).run(suite)


if __name__ == '__main__':
    setUpModule()
    for cls in [TestPetalPermutation, TestPetalGrid, TestBounds]:
        run_test_case(cls)
