# -*- coding: utf-8 -*-
# File: alexander.py

from ..config import config as cfg
from ..utils import logger
from .laurent import LaurentPoly
from .linalg import determinant_up_to_unit

__all__ = ['InvariantMismatch', 'normalize_alexander', 'alexander_matrix', 'alexander_from_pd']


class InvariantMismatch(RuntimeError):
    """
    A computed invariant disagrees with what the construction guarantees.
    Signals a bug, not bad input.
    """
    pass


def normalize_alexander(p):
    """
    Multiply by ``±t^k`` so that the lowest exponent is 0 and the constant
    term is positive.

    Raises:
        ValueError: for the zero polynomial.
    """
    if p.is_zero():
        raise ValueError("Cannot normalize the zero polynomial")
    p = p.shift(-p.min_degree)
    return p if p.coefficient(0) > 0 else -p


def _arcs(pd):
    """
    Label each edge with the over-arc it belongs to. Arcs start at the
    outgoing under-edges, so a diagram with c crossings has c arcs.
    """
    order = pd.edges()
    starts = {x.under_out for x in pd.crossings}
    first = next(i for i, e in enumerate(order) if e in starts)
    order = order[first:] + order[:first]
    arc_of = {}
    arc = -1
    for e in order:
        if e in starts:
            arc += 1
        arc_of[e] = arc
    return arc_of


def alexander_matrix(pd):
    """
    The Alexander matrix of the Wirtinger presentation, by Fox calculus.

    Row i belongs to crossing i, column k to arc k. With ``s`` the crossing
    sign the row holds ``t^s`` at the incoming under-arc, ``-1`` at the
    outgoing under-arc and ``1 - t^s`` at the over-arc (summed when arcs
    coincide).

    Returns:
        list[dict]: sparse rows, column -> LaurentPoly.
    """
    if not pd.crossings:
        return []
    arc_of = _arcs(pd)
    one = LaurentPoly.constant(1)
    rows = []
    for x in pd.crossings:
        ts = LaurentPoly.monomial(x.sign)
        row = {}
        for arc, v in ((arc_of[x.under_in], ts),
                       (arc_of[x.under_out], -one),
                       (arc_of[x.over_in], one - ts)):
            row[arc] = row.get(arc, 0) + v
        rows.append({k: v for k, v in row.items() if not v.is_zero()})
    return rows


def alexander_from_pd(pd, drop_row=None, drop_col=None):
    """
    Normalized Alexander polynomial of a knot diagram.

    Args:
        pd (PDCode): a connected, single-component diagram.
        drop_row, drop_col (int): the relator row and generator column to
            delete. Defaults to ``ALEXANDER.DROP_ROW`` / ``ALEXANDER.DROP_COL``.

    Raises:
        ValueError: the code is not a single closed component.
    """
    c = len(pd.crossings)
    if c == 0:
        return LaurentPoly.constant(1)
    drop_row = cfg.ALEXANDER.DROP_ROW if drop_row is None else drop_row
    drop_col = cfg.ALEXANDER.DROP_COL if drop_col is None else drop_col
    if not (-c <= drop_row < c and -c <= drop_col < c):
        raise ValueError("Cannot delete row {} / column {} of a {}x{} Alexander matrix".format(
            drop_row, drop_col, c, c))
    drop_row, drop_col = drop_row % c, drop_col % c

    rows = alexander_matrix(pd)
    minor = []
    for i, row in enumerate(rows):
        if i == drop_row:
            continue
        minor.append({(k if k < drop_col else k - 1): v for k, v in row.items() if k != drop_col})
    det = determinant_up_to_unit(minor, c - 1)
    if det.is_zero():
        raise ValueError("Alexander minor vanishes: the PD code is not a knot diagram")
    ret = normalize_alexander(det)
    logger.debug("Alexander polynomial of a {}-crossing diagram: {}".format(c, ret))
    return ret
