# -*- coding: utf-8 -*-
# File: closure.py

from ..grid.pd import Crossing, PDCode
from .word import is_knot_closure

__all__ = ['braid_to_pd']


def braid_to_pd(w):
    """
    PD code of the closure of a braid word.

    Strands run upward, letters from bottom to top. In sigma_i the strand
    moving from position i to i+1 passes over, which makes sigma_i a
    positive crossing.

    Raises:
        ValueError: the closure is a link.
    """
    if not is_knot_closure(w):
        raise ValueError("The closure of {} is a link, not a knot".format(w))
    events = {}     # letter index -> {'over': (event, rightward), 'under': ...}
    n = 0
    pos = 0
    for _ in range(w.strands):
        for idx, (i, s) in enumerate(w.letters):
            if pos == i - 1:
                rightward = True
            elif pos == i:
                rightward = False
            else:
                continue
            over = rightward == (s > 0)
            events.setdefault(idx, {})['over' if over else 'under'] = (n, rightward)
            n += 1
            pos = pos + 1 if rightward else pos - 1
    assert pos == 0 and n == 2 * len(w.letters), "Braid closure walk did not close up!"

    def edge_in(k):
        return k if k > 0 else n

    crossings = []
    for idx in sorted(events, key=lambda k: events[k]['under'][0]):
        u, rightward = events[idx]['under']
        v, _ = events[idx]['over']
        o_in, o_out = edge_in(v), v + 1
        if rightward:
            crossings.append(Crossing(edge_in(u), o_in, u + 1, o_out, -1))
        else:
            crossings.append(Crossing(edge_in(u), o_out, u + 1, o_in, 1))
    return PDCode(crossings)
