# -*- coding: utf-8 -*-
# File: diagram.py

from collections import namedtuple
from math import gcd

from ..utils import logger
from ..utils.argtools import memoized_method

__all__ = ['GridDiagram', 'grid_valid', 'minimal_torus_grid',
           'cyclic_col_shift', 'cyclic_row_shift', 'commute_columns',
           'grid_crossings', 'horizontal_stick_lengths', 'inflection_columns',
           'is_petal_form']


class GridDiagram(namedtuple('GridDiagramTuple', ['size', 'x_rows', 'o_rows'])):
    """
    X/O placements of a grid diagram, one of each per row and per column.

    Columns are the list positions ``0..size-1``, left to right.
    Rows are the stored values ``1..size``, numbered top to bottom.
    Vertical sticks cross over horizontal sticks. The knot is oriented
    X->O along columns and O->X along rows.

    Construction only normalizes types; use :func:`grid_valid` to check the
    diagram.
    """

    def __new__(cls, size, x_rows, o_rows):
        return super(GridDiagram, cls).__new__(
            cls, int(size), tuple(int(v) for v in x_rows), tuple(int(v) for v in o_rows))

    @classmethod
    def from_json(cls, obj):
        try:
            return cls(obj['size'], obj['x'], obj['o'])
        except (KeyError, TypeError, ValueError) as e:
            raise ValueError("Malformed GridDiagram JSON: {}".format(obj)) from e

    def to_json(self):
        return {"size": self.size, "x": list(self.x_rows), "o": list(self.o_rows)}

    @memoized_method
    def x_col(self):
        """ dict: row -> column holding the X of that row. """
        return {r: j for j, r in enumerate(self.x_rows)}

    @memoized_method
    def o_col(self):
        """ dict: row -> column holding the O of that row. """
        return {r: j for j, r in enumerate(self.o_rows)}

    def knot_cycle(self):
        """
        Columns in the order the oriented knot visits them, starting at column 0.
        Stops early when the columns do not form a single cycle.

        Returns:
            list[int]
        """
        xcol = self.x_col()
        order = [0]
        j = xcol[self.o_rows[0]]
        while j != 0 and len(order) <= self.size:
            order.append(j)
            j = xcol[self.o_rows[j]]
        return order

    def vertical_sticks(self):
        """ list of (column, from_row, to_row), oriented X->O. """
        return [(j, self.x_rows[j], self.o_rows[j]) for j in range(self.size)]

    def horizontal_sticks(self):
        """ list of (row, from_col, to_col), oriented O->X. """
        xcol, ocol = self.x_col(), self.o_col()
        return [(r, ocol[r], xcol[r]) for r in range(1, self.size + 1)]


def grid_valid(gd):
    """
    Returns:
        bool: whether x_rows and o_rows are permutations of 1..size, no column
        holds X and O in the same row, and the sticks close up into a single
        knot.
    """
    g = gd.size
    if g < 2 or len(gd.x_rows) != g or len(gd.o_rows) != g:
        return False
    full = set(range(1, g + 1))
    if set(gd.x_rows) != full or set(gd.o_rows) != full:
        return False
    if any(x == o for x, o in zip(gd.x_rows, gd.o_rows)):
        return False
    return len(gd.knot_cycle()) == g


def _check_valid(gd):
    if not grid_valid(gd):
        raise ValueError("Invalid grid diagram: {}".format(gd.to_json()))


def minimal_torus_grid(p, q):
    """
    The staircase grid of the torus knot T_{p,q}: size p+q, the O of column j
    in row j and the X p rows further down (cyclically).

    Args:
        p, q (int): 2 <= p < q, coprime.
    Returns:
        GridDiagram:
    """
    if not (2 <= p < q):
        raise ValueError("minimal_torus_grid needs 2 <= p < q, got ({}, {})".format(p, q))
    if gcd(p, q) != 1:
        raise ValueError("T_{{{},{}}} is a link: p and q are not coprime".format(p, q))
    g = p + q
    o_rows = [j + 1 for j in range(g)]
    x_rows = [(j + p) % g + 1 for j in range(g)]
    return GridDiagram(g, x_rows, o_rows)


def cyclic_col_shift(gd):
    """ Move the last column to the front. """
    _check_valid(gd)
    return GridDiagram(gd.size, gd.x_rows[-1:] + gd.x_rows[:-1], gd.o_rows[-1:] + gd.o_rows[:-1])


def cyclic_row_shift(gd):
    """ Move the bottom row to the top. """
    _check_valid(gd)
    g = gd.size
    return GridDiagram(g, [r % g + 1 for r in gd.x_rows], [r % g + 1 for r in gd.o_rows])


def commute_columns(gd, j):
    """
    Swap columns j and j+1 when their vertical sticks are not interleaved
    (disjoint or nested row ranges) and have no row in common. This is a
    grid commutation move.

    Raises:
        ValueError: interleaved columns, a shared row or out-of-range j.
    """
    _check_valid(gd)
    if not 0 <= j < gd.size - 1:
        raise ValueError("Column {} has no right neighbour in a grid of size {}".format(j, gd.size))
    a = sorted((gd.x_rows[j], gd.o_rows[j]))
    b = sorted((gd.x_rows[j + 1], gd.o_rows[j + 1]))
    if set(a) & set(b):
        raise ValueError("Columns {} and {} share a row".format(j, j + 1))
    inside = [a[0] < v < a[1] for v in b]
    if inside[0] != inside[1]:
        raise ValueError("Columns {} and {} are interleaved".format(j, j + 1))
    x, o = list(gd.x_rows), list(gd.o_rows)
    x[j], x[j + 1] = x[j + 1], x[j]
    o[j], o[j + 1] = o[j + 1], o[j]
    return GridDiagram(gd.size, x, o)


def grid_crossings(gd):
    """
    Every place where a vertical stick passes strictly through the interior
    of a horizontal stick.

    Returns:
        list[(int, int)]: (row, column) pairs sorted by row then column.
    """
    _check_valid(gd)
    vspan = [sorted(p) for p in zip(gd.x_rows, gd.o_rows)]
    ret = []
    for row, c0, c1 in gd.horizontal_sticks():
        lo, hi = min(c0, c1), max(c0, c1)
        for col in range(lo + 1, hi):
            r0, r1 = vspan[col]
            if r0 < row < r1:
                ret.append((row, col))
    return ret


def horizontal_stick_lengths(gd):
    """
    Returns:
        dict: row -> length of its horizontal stick in column units.
    """
    return {row: abs(c1 - c0) for row, c0, c1 in gd.horizontal_sticks()}


def inflection_columns(gd):
    """
    Columns whose two adjacent horizontal sticks have the same length r+1,
    where size = 2r+3.
    """
    if gd.size % 2 == 0:
        return []
    short = (gd.size - 1) // 2
    lengths = horizontal_stick_lengths(gd)
    return [j for j in range(gd.size)
            if lengths[gd.x_rows[j]] == short and lengths[gd.o_rows[j]] == short]


def is_petal_form(gd):
    """
    A grid of size 2r+3 is in petal form when exactly one vertical stick
    (the inflection stick) has both adjacent horizontal sticks of length r+1,
    and every other vertical stick has one of length r+1 and one of length r+2.

    Even sizes are never in petal form.
    """
    _check_valid(gd)
    if gd.size % 2 == 0:
        logger.debug("Grid of even size {} cannot be in petal form".format(gd.size))
        return False
    short = (gd.size - 1) // 2
    lengths = horizontal_stick_lengths(gd)
    n_inflection = 0
    for j in range(gd.size):
        pair = sorted((lengths[gd.x_rows[j]], lengths[gd.o_rows[j]]))
        if pair == [short, short]:
            n_inflection += 1
        elif pair != [short, short + 1]:
            return False
    return n_inflection == 1
