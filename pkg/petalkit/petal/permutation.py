# -*- coding: utf-8 -*-
# File: permutation.py

from collections import namedtuple

from ..grid.diagram import GridDiagram, grid_valid, is_petal_form
from ..utils import logger

__all__ = ['PetalPermutation', 'torus_petal_permutation', 'trefoil_petal_permutation',
           'petal_to_grid', 'read_petal_permutation', 'petal_equal_up_to_symmetry']


class PetalPermutation(namedtuple('PetalPermutationTuple', ['levels'])):
    """
    The heights of the strands met going around the single multi-crossing
    of a petal projection, 1 being the top.

    Values are rotated to start at level 1. The reading direction is kept:
    a sequence and its reverse are different values.
    """

    def __new__(cls, levels):
        levels = [int(v) for v in levels]
        p = len(levels)
        if p % 2 == 0:
            raise ValueError("A petal permutation has odd length, got {}".format(p))
        if sorted(levels) != list(range(1, p + 1)):
            raise ValueError("Not a permutation of 1..{}: {}".format(p, levels))
        k = levels.index(1)
        return super(PetalPermutation, cls).__new__(cls, tuple(levels[k:] + levels[:k]))

    @classmethod
    def from_json(cls, obj):
        try:
            return cls(obj['levels'])
        except (KeyError, TypeError) as e:
            raise ValueError("Malformed PetalPermutation JSON: {}".format(obj)) from e

    def to_json(self):
        return {"levels": list(self.levels)}

    @property
    def petals(self):
        return len(self.levels)


def torus_petal_permutation(n):
    """
    A petal permutation of T_{2n+1, 2n+3} with 4n+5 petals:

        1, 3n+4,
        (n+2-j, 3n+3-j) for j = 0..n,
        (4n+5-j, 2n+2-j) for j = 0..n-1,
        3n+5
    """
    if n < 1:
        raise ValueError("n must be >= 1, got {}".format(n))
    levels = [1, 3 * n + 4]
    for j in range(n + 1):
        levels += [n + 2 - j, 3 * n + 3 - j]
    for j in range(n):
        levels += [4 * n + 5 - j, 2 * n + 2 - j]
    levels.append(3 * n + 5)
    return PetalPermutation(levels)


def trefoil_petal_permutation():
    return PetalPermutation([1, 4, 2, 5, 3])


def petal_to_grid(pp):
    """
    The petal-form grid diagram of a petal permutation.

    With p petals and h = (p-1)/2, horizontal stick k lies in row levels[k]
    and runs from column a_k to a_{k+1} = a_k + h (mod p). The columns are
    rotated so the stick ending in the bottom row ends in the middle column,
    which becomes the inflection stick. Column a_{k+1} holds the X of row
    levels[k] and the O of row levels[k+1].

    When that rotation would make the top stick point right, the columns
    are shifted further until a_0 = h+1. The middle column stays the
    inflection stick, but its lower end leaves the bottom row.

    Returns:
        GridDiagram: of size p, always in petal form, top stick pointing left.
    """
    p = pp.petals
    if p < 3:
        raise ValueError("Need at least 3 petals for a grid, got {}".format(p))
    h = (p - 1) // 2
    m = pp.levels.index(p)
    start = ((1 - m) * h) % p
    offset = 0 if start > h else h + 1 - start
    cols = [((k - m + 1) * h + offset) % p for k in range(p)]
    x_rows, o_rows = [0] * p, [0] * p
    for k in range(p):
        c = cols[(k + 1) % p]
        x_rows[c] = pp.levels[k]
        o_rows[c] = pp.levels[(k + 1) % p]
    return GridDiagram(p, x_rows, o_rows)


def read_petal_permutation(gd):
    """
    Read the levels of the horizontal sticks along the knot, starting from
    the top stick. The knot is oriented so the top stick points left; a grid
    whose own orientation runs the top stick to the right is read backwards.

    Raises:
        ValueError: the grid is not of petal shape.
    """
    if gd.size % 2 == 0:
        raise ValueError("Grid of even size {} has no petal permutation".format(gd.size))
    if not grid_valid(gd) or not is_petal_form(gd):
        raise ValueError("Grid is not in petal form: {}".format(gd.to_json()))
    xcol, ocol = gd.x_col(), gd.o_col()
    leftward = xcol[1] < ocol[1]
    if not leftward:
        logger.debug("Top stick points right, reading the grid backwards")
    row = 1
    levels = []
    for _ in range(gd.size):
        levels.append(row)
        row = gd.o_rows[xcol[row]] if leftward else gd.x_rows[ocol[row]]
    assert row == 1, "Grid walk did not close up!"
    return PetalPermutation(levels)


def petal_equal_up_to_symmetry(a, b):
    """ Equality of petal permutations up to rotation and reversal. """
    if a.petals != b.petals:
        return False
    if a == b:
        return True
    rev = PetalPermutation(reversed(b.levels))
    return a == rev
