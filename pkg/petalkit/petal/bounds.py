# -*- coding: utf-8 -*-
# File: bounds.py

from collections import namedtuple
from math import gcd

from ..grid.diagram import is_petal_form
from ..grid.pd import alexander_from_grid
from ..invariants.alexander import InvariantMismatch
from ..invariants.torus import torus_alexander
from ..utils import logger
from .permutation import petal_to_grid, torus_petal_permutation

__all__ = ['petal_lower_bound', 'arc_index_torus', 'petal_lower_bound_torus',
           'known_petal_number', 'TheoremResult', 'theorem_check']


def petal_lower_bound(alpha):
    """
    p(K) >= alpha(K) when the arc index is odd, alpha(K)+1 when it is even.
    """
    if alpha < 3:
        raise ValueError("A nontrivial knot has arc index >= 3, got {}".format(alpha))
    return alpha if alpha % 2 else alpha + 1


def arc_index_torus(r, s):
    """ alpha(T_{r,s}) = r + s. """
    if not 2 <= r < s:
        raise ValueError("Torus knot needs 2 <= r < s, got ({}, {})".format(r, s))
    if gcd(r, s) != 1:
        raise ValueError("T_{{{},{}}} is a link: r and s are not coprime".format(r, s))
    return r + s


def petal_lower_bound_torus(r, s):
    return petal_lower_bound(arc_index_torus(r, s))


def known_petal_number(r, s):
    """
    Petal numbers known in closed form: 2r+1 for T_{r,r+1} and 2r+3 for
    T_{r,r+2} with r odd. None otherwise.
    """
    arc_index_torus(r, s)
    if s == r + 1:
        return 2 * r + 1
    if s == r + 2 and r % 2 == 1:
        return 2 * r + 3
    return None


TheoremResult = namedtuple('TheoremResult', ['lower', 'upper', 'verified'])
"""
lower: the arc-index lower bound on the petal number.
upper: the number of petals of the explicit construction.
verified: whether both equal 2r+3.
"""


def theorem_check(r):
    """
    Check p(T_{r,r+2}) = 2r+3 for an odd r >= 3: the lower bound from the arc
    index, and an explicit petal presentation certified by its Alexander
    polynomial.

    Raises:
        InvariantMismatch: the construction does not present T_{r,r+2}.
    """
    if r < 3 or r % 2 == 0:
        raise ValueError("r must be odd and >= 3, got {}".format(r))
    lower = petal_lower_bound(arc_index_torus(r, r + 2))
    pp = torus_petal_permutation((r - 1) // 2)
    gd = petal_to_grid(pp)
    if not is_petal_form(gd):
        raise InvariantMismatch("Grid of {} is not in petal form".format(pp.levels))
    got, want = alexander_from_grid(gd), torus_alexander(r, r + 2)
    if got != want:
        raise InvariantMismatch("Petal construction for T_{{{},{}}} has Alexander polynomial {}, expected {}".format(
            r, r + 2, got, want))
    upper = pp.petals
    verified = lower == upper == 2 * r + 3
    logger.info("T_{{{},{}}}: lower bound {}, construction with {} petals".format(r, r + 2, lower, upper))
    return TheoremResult(lower, upper, verified)
