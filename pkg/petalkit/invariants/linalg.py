# -*- coding: utf-8 -*-
# File: linalg.py

"""
Exact linear algebra over Z[t, 1/t].

Matrices are numpy object arrays (or nested lists) of :class:`LaurentPoly`.
"""

import numpy as np
import sympy as sp
from sympy import ZZ

from .laurent import LaurentPoly

__all__ = ['laurent_identity', 'laurent_matrix', 'determinant_laurent', 'determinant_up_to_unit']


def laurent_matrix(rows, var='t'):
    """
    Build an object array of LaurentPoly, coercing integers.

    Args:
        rows: nested sequence, n x m.
    Returns:
        np.ndarray: dtype=object
    """
    rows = [list(r) for r in rows]
    n = len(rows)
    m = len(rows[0]) if n else 0
    ret = np.empty((n, m), dtype=object)
    for i, r in enumerate(rows):
        assert len(r) == m, "Ragged matrix!"
        for j, v in enumerate(r):
            ret[i, j] = v if isinstance(v, LaurentPoly) else LaurentPoly.constant(v, var)
    return ret


def laurent_identity(n, var='t'):
    return laurent_matrix([[1 if i == j else 0 for j in range(n)] for i in range(n)], var)


def determinant_laurent(matrix, var='t'):
    """
    Exact determinant. Each row is shifted into Z[t] by its lowest exponent,
    and sympy's fraction-free Bareiss elimination runs on the result.

    Args:
        matrix: square object array or nested list of LaurentPoly / int.
    Returns:
        LaurentPoly
    """
    m = [[v if isinstance(v, LaurentPoly) else LaurentPoly.constant(v, var) for v in row]
         for row in matrix]
    n = len(m)
    if n == 0:
        return LaurentPoly.constant(1, var)
    assert all(len(row) == n for row in m), "Determinant of a non-square matrix!"
    low = 0
    rows = []
    for row in m:
        nonzero = [v.min_degree for v in row if not v.is_zero()]
        if not nonzero:
            return LaurentPoly(None, var)
        k = min(nonzero)
        low += k
        rows.append([v.shift(-k).to_sympy() for v in row])
    det = sp.Matrix(rows).det(method='bareiss')
    return LaurentPoly.from_poly(sp.Poly(sp.cancel(det), sp.Symbol(var), domain=ZZ), low, var)


def determinant_up_to_unit(rows, ncols, var='t'):
    """
    Determinant of a sparse square matrix, up to a unit ``±t^k``.

    Unit pivots are eliminated first with a Markowitz-style choice, which
    keeps the dense remainder handed to :func:`determinant_laurent` small for
    the Wirtinger matrices of knot diagrams.

    Args:
        rows (list[dict]): row i maps column index -> LaurentPoly, zeros omitted.
        ncols (int): number of columns; must equal ``len(rows)``.
    Returns:
        LaurentPoly: ``u * det`` for some unit ``u``.
    """
    assert len(rows) == ncols, "Determinant of a non-square matrix!"
    rows = {i: {j: v for j, v in r.items() if not v.is_zero()} for i, r in enumerate(rows)}
    cols = {}
    for i, r in rows.items():
        for j in r:
            cols.setdefault(j, set()).add(i)
    for j in range(ncols):
        if j not in cols:
            return LaurentPoly(None, var)

    while rows:
        best = None
        for i, r in rows.items():
            for j, v in r.items():
                if v.is_unit():
                    cost = (len(r) - 1) * (len(cols[j]) - 1)
                    if best is None or cost < best[0]:
                        best = (cost, i, j)
        if best is None:
            break
        _, pi, pj = best
        prow = rows.pop(pi)
        pinv = prow[pj] ** -1
        for j in prow:
            cols[j].discard(pi)
        for i in list(cols.pop(pj)):
            r = rows[i]
            f = r.pop(pj) * pinv
            for j, v in prow.items():
                if j == pj:
                    continue
                nv = r.get(j, 0) - f * v
                if isinstance(nv, int) or nv.is_zero():
                    if j in r:
                        del r[j]
                        cols[j].discard(i)
                else:
                    if j not in r:
                        cols[j].add(i)
                    r[j] = nv
            if not r:
                return LaurentPoly(None, var)
        for j in range(ncols):
            if j in cols and not cols[j]:
                return LaurentPoly(None, var)

    if not rows:
        return LaurentPoly.constant(1, var)
    keep_rows = sorted(rows)
    keep_cols = sorted(cols)
    assert len(keep_rows) == len(keep_cols), (len(keep_rows), len(keep_cols))
    dense = [[rows[i].get(j, LaurentPoly(None, var)) for j in keep_cols] for i in keep_rows]
    return determinant_laurent(dense, var)
