# -*- coding: utf-8 -*-
# File: pd.py

from collections import namedtuple

from ..invariants.alexander import alexander_from_pd
from .diagram import grid_valid, grid_crossings

__all__ = ['Crossing', 'PDCode', 'grid_to_pd', 'alexander_from_grid']


class Crossing(namedtuple('CrossingTuple', ['a', 'b', 'c', 'd', 'sign'])):
    """
    One crossing of a PD code.

    ``a, b, c, d`` are the incident edge labels counterclockwise, starting at
    the incoming under-strand, so the under-strand runs a -> c.
    ``sign`` is +1 when the over-strand runs d -> b, -1 when it runs b -> d;
    this is the usual right-handed crossing sign.
    """

    def __new__(cls, a, b, c, d, sign):
        if sign in ('+', '-'):
            sign = 1 if sign == '+' else -1
        if sign not in (1, -1):
            raise ValueError("Crossing sign must be +1/-1 or '+'/'-', got {}".format(sign))
        return super(Crossing, cls).__new__(cls, int(a), int(b), int(c), int(d), int(sign))

    @property
    def under_in(self):
        return self.a

    @property
    def under_out(self):
        return self.c

    @property
    def over_in(self):
        return self.d if self.sign > 0 else self.b

    @property
    def over_out(self):
        return self.b if self.sign > 0 else self.d

    def to_json(self):
        return [self.a, self.b, self.c, self.d, '+' if self.sign > 0 else '-']


class PDCode(namedtuple('PDCodeTuple', ['crossings'])):
    """
    A planar diagram code of an oriented knot.
    The empty code is the 0-crossing unknot.
    """

    def __new__(cls, crossings=()):
        crossings = tuple(x if isinstance(x, Crossing) else Crossing(*x) for x in crossings)
        return super(PDCode, cls).__new__(cls, crossings)

    @classmethod
    def from_json(cls, obj):
        try:
            return cls([Crossing(*x) for x in obj['crossings']])
        except (KeyError, TypeError) as e:
            raise ValueError("Malformed PDCode JSON: {}".format(obj)) from e

    def to_json(self):
        return {"crossings": [x.to_json() for x in self.crossings]}

    @property
    def writhe(self):
        return sum(x.sign for x in self.crossings)

    def successor(self):
        """
        Returns:
            dict: edge label -> the label of the next edge along the orientation.

        Raises:
            ValueError: when some label is not entered exactly once and left
                exactly once.
        """
        nxt = {}
        outs = set()
        for x in self.crossings:
            for e_in, e_out in ((x.under_in, x.under_out), (x.over_in, x.over_out)):
                if e_in in nxt:
                    raise ValueError("Edge {} enters two crossings".format(e_in))
                if e_out in outs:
                    raise ValueError("Edge {} leaves two crossings".format(e_out))
                nxt[e_in] = e_out
                outs.add(e_out)
        if set(nxt) != outs:
            raise ValueError("Edges {} are not both entered and left".format(
                sorted(set(nxt).symmetric_difference(outs))))
        return nxt

    def edges(self):
        """
        Edge labels in the order of the orientation, starting from the
        smallest label.

        Raises:
            ValueError: when the edges do not form a single closed component.
        """
        nxt = self.successor()
        if not nxt:
            return []
        start = min(nxt)
        order = [start]
        e = nxt[start]
        while e != start:
            order.append(e)
            e = nxt[e]
        if len(order) != len(nxt):
            raise ValueError("PD code has more than one component ({} of {} edges reached)".format(
                len(order), len(nxt)))
        return order


def grid_to_pd(gd):
    """
    Walk the knot of a grid diagram and emit one crossing per
    vertical-over-horizontal intersection.

    The walk starts at the X of column 0. Event k (0-based) along the walk
    is entered by edge k (edge 0 is called 2c) and left by edge k+1.

    Returns:
        PDCode: crossings in the order their under-passes are met.
    """
    if not grid_valid(gd):
        raise ValueError("Invalid grid diagram: {}".format(gd.to_json()))
    at = set(grid_crossings(gd))
    xcol = gd.x_col()
    over, under = {}, {}
    n = 0
    col = 0
    for _ in range(gd.size):
        r0, r1 = gd.x_rows[col], gd.o_rows[col]
        step = 1 if r1 > r0 else -1
        for row in range(r0 + step, r1, step):
            if (row, col) in at:
                over[(row, col)] = (n, step > 0)
                n += 1
        nxt = xcol[r1]
        step = 1 if nxt > col else -1
        for c in range(col + step, nxt, step):
            if (r1, c) in at:
                under[(r1, c)] = (n, step > 0)
                n += 1
        col = nxt
    assert col == 0 and n == 2 * len(at), "Grid walk did not close up!"

    def edge_in(k):
        return k if k > 0 else n

    crossings = []
    for key, (u, right) in sorted(under.items(), key=lambda kv: kv[1][0]):
        v, down = over[key]
        o_in, o_out = edge_in(v), v + 1
        north, south = (o_in, o_out) if down else (o_out, o_in)
        if right:
            a, b, c, d = edge_in(u), south, u + 1, north
        else:
            a, b, c, d = edge_in(u), north, u + 1, south
        crossings.append(Crossing(a, b, c, d, 1 if right == down else -1))
    return PDCode(crossings)


def alexander_from_grid(gd):
    """
    Normalized Alexander polynomial of the knot presented by a grid diagram.
    """
    return alexander_from_pd(grid_to_pd(gd))
