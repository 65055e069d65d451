# -*- coding: utf-8 -*-
# File: torus.py

"""
Closed forms for the invariants of the torus knot T_{p,q}.
These are the oracles every construction is checked against.
"""

from math import gcd

from ..utils.argtools import memoized
from .alexander import normalize_alexander
from .laurent import LaurentPoly

__all__ = ['torus_alexander', 'torus_jones', 'torus_jones_in_a']


def _check_torus(p, q):
    if not (2 <= p < q):
        raise ValueError("Torus knot needs 2 <= p < q, got ({}, {})".format(p, q))
    if gcd(p, q) != 1:
        raise ValueError("T_{{{},{}}} is a link: p and q are not coprime".format(p, q))


def _binom(*exps):
    # sum of signed monomials, exps given as (exponent, coef)
    return LaurentPoly(exps)


@memoized
def torus_alexander(p, q):
    """
    ``(t^pq - 1)(t - 1) / ((t^p - 1)(t^q - 1))``, normalized.
    """
    _check_torus(p, q)
    num = _binom((p * q, 1), (0, -1)) * _binom((1, 1), (0, -1))
    den = _binom((p, 1), (0, -1)) * _binom((q, 1), (0, -1))
    return normalize_alexander(num.exact_div(den))


@memoized
def torus_jones(p, q):
    """
    ``t^((p-1)(q-1)/2) (1 - t^(p+1) - t^(q+1) + t^(p+q)) / (1 - t^2)``.

    This is the positive torus knot, e.g. ``t + t^3 - t^4`` for the
    right-handed trefoil. Mirror with :meth:`LaurentPoly.mirror`.
    """
    _check_torus(p, q)
    num = _binom((0, 1), (p + 1, -1), (q + 1, -1), (p + q, 1))
    den = _binom((0, 1), (2, -1))
    return num.exact_div(den).shift((p - 1) * (q - 1) // 2)


def torus_jones_in_a(p, q):
    """ :func:`torus_jones` in the bracket variable, via ``t = A^-4``. """
    return torus_jones(p, q).substitute_power(-4, 'A')
