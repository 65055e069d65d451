# -*- coding: utf-8 -*-
# File: bracket.py

from ..config import config as cfg
from ..utils import logger
from .laurent import LaurentPoly

__all__ = ['CrossingCapExceeded', 'kauffman_bracket', 'jones']


class CrossingCapExceeded(RuntimeError):
    """
    The state sum was asked for a diagram with more crossings than allowed.
    """
    def __init__(self, count, cap):
        super(CrossingCapExceeded, self).__init__(
            "Diagram has {} crossings, the bracket is capped at {} (BRACKET.MAX_CROSSINGS)".format(count, cap))
        self.count = count
        self.cap = cap


_A = LaurentPoly.monomial(1, var='A')
_A_INV = LaurentPoly.monomial(-1, var='A')
_DELTA = LaurentPoly({2: -1, -2: -1}, var='A')     # value of a free loop


def _join(matching, arcs):
    """
    Glue smoothing arcs onto the partial state.

    ``matching`` pairs the open edge labels that are joined through the part
    of the diagram processed so far. Returns the new matching and the number
    of loops that closed up.
    """
    m = dict(matching)
    loops = 0
    for x, y in arcs:
        if x == y:
            loops += 1
            continue
        px = m.pop(x, None)
        if px is not None:
            del m[px]
            if px == y:
                loops += 1
                continue
        py = m.pop(y, None)
        if py is not None:
            del m[py]
        ex = x if px is None else px
        ey = y if py is None else py
        m[ex] = ey
        m[ey] = ex
    return m, loops


def _key(m):
    return tuple(sorted((a, b) for a, b in m.items() if a < b))


def _processing_order(crossings):
    """ Greedy order that keeps the number of open edges small. """
    left = list(range(len(crossings)))
    order = []
    open_labels = set()
    while left:
        best = max(left, key=lambda i: (len(open_labels.intersection(crossings[i][:4])), -i))
        left.remove(best)
        order.append(best)
        open_labels.symmetric_difference_update(crossings[best][:4])
    return order


def kauffman_bracket(pd, max_crossings=None):
    """
    The Kauffman bracket in the variable ``A``, normalized so that the
    0-crossing unknot has bracket 1.

    At ``X[a,b,c,d]`` the A-smoothing joins (a,b),(c,d) and the A^-1-smoothing
    joins (a,d),(b,c). States are summed by dynamic programming over the
    matchings of open edges.

    Args:
        pd (PDCode):
        max_crossings (int): defaults to ``BRACKET.MAX_CROSSINGS``.

    Raises:
        CrossingCapExceeded:
    """
    cap = cfg.BRACKET.MAX_CROSSINGS if max_crossings is None else max_crossings
    c = len(pd.crossings)
    if c > cap:
        raise CrossingCapExceeded(c, cap)
    if c == 0:
        return LaurentPoly.constant(1, 'A')
    pd.edges()  # single component check

    delta_pow = [LaurentPoly.constant(1, 'A')]
    for _ in range(4):
        delta_pow.append(delta_pow[-1] * _DELTA)

    states = {(): LaurentPoly.constant(1, 'A')}
    peak = 1
    for idx in _processing_order(pd.crossings):
        x = pd.crossings[idx]
        smoothings = ((_A, ((x.a, x.b), (x.c, x.d))),
                      (_A_INV, ((x.a, x.d), (x.b, x.c))))
        new = {}
        for key, val in states.items():
            m = dict(key)
            m.update((b, a) for a, b in key)
            for weight, arcs in smoothings:
                m2, loops = _join(m, arcs)
                k2 = _key(m2)
                v = val * weight * delta_pow[loops]
                new[k2] = new[k2] + v if k2 in new else v
        states = {k: v for k, v in new.items() if not v.is_zero()}
        peak = max(peak, len(states))
    logger.debug("Bracket of {} crossings: peak of {} partial states".format(c, peak))
    assert set(states) <= {()}, "Open edges left after the last crossing!"
    total = states.get((), LaurentPoly(None, 'A'))
    return total.exact_div(_DELTA)


def jones(pd, max_crossings=None):
    """
    The Jones polynomial in the bracket variable, ``(-A^3)^(-w) <D>``.
    Substitute ``t = A^-4`` to compare with polynomials in ``t``.
    """
    w = pd.writhe
    factor = LaurentPoly.monomial(-3 * w, -1 if w % 2 else 1, var='A')
    return factor * kauffman_bracket(pd, max_crossings=max_crossings)
