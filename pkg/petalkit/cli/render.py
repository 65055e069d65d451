# -*- coding: utf-8 -*-
# File: render.py

"""
SVG drawings of grid diagrams, petal permutations (as roses) and braid words.
Layout constants live in ``config.RENDER``. Output is a pure function of
the input and the config.
"""

import numpy as np

from ..config import config as cfg
from ..grid.diagram import grid_crossings, grid_valid

__all__ = ['grid_svg', 'petal_svg', 'braid_svg']


def _f(v):
    return '{:.2f}'.format(v).rstrip('0').rstrip('.')


def _svg(width, height, body):
    head = f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {_f(width)} {_f(height)}" ' \
           f'width="{_f(width)}" height="{_f(height)}">'
    return head + "\n" + "\n".join(body) + "\n</svg>\n"


def _line(x0, y0, x1, y1, color, width):
    return f'<line x1="{_f(x0)}" y1="{_f(y0)}" x2="{_f(x1)}" y2="{_f(y1)}" ' \
           f'stroke="{color}" stroke-width="{_f(width)}" stroke-linecap="round"/>'


def _text(x, y, text, size):
    return f'<text x="{_f(x)}" y="{_f(y)}" font-family="monospace" font-size="{size}" ' \
           f'text-anchor="middle" dominant-baseline="central">{text}</text>'


def grid_svg(gd):
    """
    Horizontal and vertical sticks, with the horizontal stick broken where a
    vertical stick passes over it.
    """
    if not grid_valid(gd):
        raise ValueError("Invalid grid diagram: {}".format(gd.to_json()))
    R = cfg.RENDER
    C, M, gap = R.CELL, R.MARGIN, R.GAP
    size = M * 2 + C * gd.size

    def cx(col):
        return M + C * col + C / 2

    def cy(row):
        return M + C * (row - 1) + C / 2

    over_cols = {}
    for row, col in grid_crossings(gd):
        over_cols.setdefault(row, []).append(col)

    body = [f'<rect x="0" y="0" width="{_f(size)}" height="{_f(size)}" fill="white"/>']
    for row, c0, c1 in gd.horizontal_sticks():
        lo, hi = min(c0, c1), max(c0, c1)
        start = cx(lo)
        for col in sorted(over_cols.get(row, [])):
            body.append(_line(start, cy(row), cx(col) - gap, cy(row), R.STRAND_COLOR, R.STROKE))
            start = cx(col) + gap
        body.append(_line(start, cy(row), cx(hi), cy(row), R.STRAND_COLOR, R.STROKE))
    for col, r0, r1 in gd.vertical_sticks():
        body.append(_line(cx(col), cy(r0), cx(col), cy(r1), R.STRAND_COLOR, R.STROKE))
    if R.SHOW_MARKERS:
        k = R.MARKER
        for col, x_row, o_row in gd.vertical_sticks():
            x, y = cx(col), cy(x_row)
            body.append(_line(x - k, y - k, x + k, y + k, R.MARKER_COLOR, R.STROKE))
            body.append(_line(x - k, y + k, x + k, y - k, R.MARKER_COLOR, R.STROKE))
            body.append(f'<circle cx="{_f(x)}" cy="{_f(cy(o_row))}" r="{_f(k)}" fill="white" '
                        f'stroke="{R.MARKER_COLOR}" stroke-width="{_f(R.STROKE)}"/>')
    return _svg(size, size, body)


def petal_svg(pp):
    """
    The rose curve r = cos(p theta) with p petals. Its passes through the
    center are met in angular order; each is labeled with its level.
    """
    R = cfg.RENDER
    p = pp.petals
    radius = R.ROSE_RADIUS
    pad = R.MARGIN + 2 * R.FONT_SIZE
    size = 2 * (radius + pad)
    c = size / 2

    theta = np.linspace(0.0, np.pi, 90 * p + 1)
    rho = radius * np.cos(p * theta)
    xs = c + rho * np.cos(theta)
    ys = c - rho * np.sin(theta)
    d = "M " + " L ".join(f"{_f(x)} {_f(y)}" for x, y in zip(xs, ys)) + " Z"

    body = [f'<rect x="0" y="0" width="{_f(size)}" height="{_f(size)}" fill="white"/>',
            f'<path d="{d}" stroke="{R.STRAND_COLOR}" fill="none" stroke-width="{_f(R.STROKE)}"/>',
            f'<circle cx="{_f(c)}" cy="{_f(c)}" r="{_f(R.STROKE * 1.5)}" fill="{R.MARKER_COLOR}"/>']
    label_r = radius + R.FONT_SIZE
    for k, level in enumerate(pp.levels):
        a = (2 * k + 1) * np.pi / (2 * p)
        # the pass runs along direction a; label its far end
        body.append(_text(c + label_r * np.cos(a + np.pi), c - label_r * np.sin(a + np.pi),
                          level, R.FONT_SIZE))
    return _svg(size, size, body)


def braid_svg(w):
    """
    Strands run bottom to top, one band per letter. In sigma_i the strand
    moving right passes over; in its inverse it passes under.
    """
    R = cfg.RENDER
    C, M = R.CELL, R.MARGIN
    width = 2 * M + C * (w.strands - 1)
    height = 2 * M + C * max(len(w.letters), 1)

    def x(pos):
        return M + C * pos

    def y(level):
        return height - M - C * level

    body = [f'<rect x="0" y="0" width="{_f(width)}" height="{_f(height)}" fill="white"/>']
    if not w.letters:
        for pos in range(w.strands):
            body.append(_line(x(pos), y(0), x(pos), y(1), R.STRAND_COLOR, R.STROKE))
    for level, (i, s) in enumerate(w.letters):
        for pos in range(w.strands):
            if pos not in (i - 1, i):
                body.append(_line(x(pos), y(level), x(pos), y(level + 1), R.STRAND_COLOR, R.STROKE))
                continue
            rightward = pos == i - 1
            end = pos + 1 if rightward else pos - 1
            x0, y0, x1, y1 = x(pos), y(level), x(end), y(level + 1)
            if rightward == (s > 0):
                body.append(_line(x0, y0, x1, y1, R.STRAND_COLOR, R.STROKE))
            else:
                for t0, t1 in ((0.0, 0.38), (0.62, 1.0)):
                    body.append(_line(x0 + (x1 - x0) * t0, y0 + (y1 - y0) * t0,
                                      x0 + (x1 - x0) * t1, y0 + (y1 - y0) * t1,
                                      R.STRAND_COLOR, R.STROKE))
    return _svg(width, height, body)
