# -*- coding: utf-8 -*-
# File: burau.py

import numpy as np

from ..invariants.alexander import InvariantMismatch, normalize_alexander
from ..invariants.laurent import LaurentPoly, NotDivisibleError
from ..invariants.linalg import determinant_laurent, laurent_identity, laurent_matrix
from ..utils.argtools import memoized
from .word import is_knot_closure

__all__ = ['burau_reduced', 'alexander_from_braid']


_T = LaurentPoly.monomial(1)
_T_INV = LaurentPoly.monomial(-1)


@memoized
def _block(sign):
    # acts on rows/cols i-2, i-1, i (0-based) of the (r-1)x(r-1) matrix
    if sign > 0:
        return laurent_matrix([[1, _T, 0], [0, -_T, 0], [0, 1, 1]])
    return laurent_matrix([[1, 1, 0], [0, -_T_INV, 0], [0, _T_INV, 1]])


def burau_reduced(w):
    """
    The reduced Burau matrix of a braid word, the product of the letter
    matrices in word order.

    Returns:
        np.ndarray: (r-1)x(r-1) object array of LaurentPoly.
    """
    m = w.strands - 1
    ret = laurent_identity(m)
    for i, s in w.letters:
        lo, hi = max(i - 2, 0), min(i + 1, m)
        block = _block(s)[lo - (i - 2):hi - (i - 2), lo - (i - 2):hi - (i - 2)]
        ret[:, lo:hi] = np.dot(ret[:, lo:hi], block)
    return ret


def alexander_from_braid(w):
    """
    Alexander polynomial of the closure: det(I - B(w)) (1-t)/(1-t^r),
    normalized.

    Raises:
        ValueError: the closure has more than one component.
        InvariantMismatch: the division is not exact.
    """
    if not is_knot_closure(w):
        raise ValueError("The closure of {} is a link, not a knot".format(w))
    r = w.strands
    m = r - 1
    diff = laurent_identity(m) - burau_reduced(w)
    det = determinant_laurent(diff)
    cyclotomic = LaurentPoly.from_coefficients([1] * r)    # (1-t^r)/(1-t)
    try:
        quot = det.exact_div(cyclotomic)
    except NotDivisibleError as e:
        raise InvariantMismatch("det(I - Burau) = {} is not divisible by {}".format(det, cyclotomic)) from e
    return normalize_alexander(quot)
