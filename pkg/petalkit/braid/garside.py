# -*- coding: utf-8 -*-
# File: garside.py

"""
Garside left normal form in the braid groups.

A permutation braid is stored as its strand map ``perm``: the strand that
starts at position x (0-based, bottom) ends at position ``perm[x]`` (top).
"""

from collections import namedtuple

from ..utils.argtools import memoized
from .word import BraidWord, half_twist_word, power, concat

__all__ = ['PermutationBraid', 'CanonicalBraid', 'to_canonical', 'braids_equal',
           'canonical_to_word']


def _swap(i, x):
    # transposition of positions i, i+1 (0-based)
    if x == i:
        return i + 1
    if x == i + 1:
        return i
    return x


class PermutationBraid(namedtuple('PermutationBraidTuple', ['perm'])):
    """
    A positive braid in which every pair of strands crosses at most once,
    determined by its permutation.
    """

    def __new__(cls, perm):
        perm = tuple(int(v) for v in perm)
        if sorted(perm) != list(range(len(perm))):
            raise ValueError("Not a permutation of 0..{}: {}".format(len(perm) - 1, perm))
        return super(PermutationBraid, cls).__new__(cls, perm)

    @classmethod
    def identity(cls, r):
        return cls(range(r))

    @classmethod
    def delta(cls, r):
        return cls(range(r - 1, -1, -1))

    @classmethod
    def generator(cls, r, i):
        """ sigma_i, 1-based. """
        return cls(_swap(i - 1, x) for x in range(r))

    @classmethod
    def delta_times_inverse_generator(cls, r, i):
        """ Delta sigma_i^-1, the positive left complement of sigma_i. """
        return cls(_swap(i - 1, r - 1 - x) for x in range(r))

    @property
    def strands(self):
        return len(self.perm)

    def is_identity(self):
        return all(v == x for x, v in enumerate(self.perm))

    def is_delta(self):
        r = len(self.perm)
        return all(v == r - 1 - x for x, v in enumerate(self.perm))

    def starting_set(self):
        """ 1-based i such that sigma_i is a prefix of this braid. """
        p = self.perm
        return frozenset(i + 1 for i in range(len(p) - 1) if p[i] > p[i + 1])

    def finishing_set(self):
        """ 1-based i such that sigma_i is a suffix of this braid. """
        inv = self.inverse_perm()
        return frozenset(i + 1 for i in range(len(inv) - 1) if inv[i] > inv[i + 1])

    def inverse_perm(self):
        inv = [0] * len(self.perm)
        for x, v in enumerate(self.perm):
            inv[v] = x
        return tuple(inv)

    def flip(self):
        """ Delta A Delta^-1, which maps sigma_i to sigma_{r-i}. """
        r = len(self.perm)
        return PermutationBraid(r - 1 - self.perm[r - 1 - x] for x in range(r))

    def to_word(self):
        """ A positive word for this braid, peeling left descents. """
        p = list(self.perm)
        r = len(p)
        idx = []
        while True:
            i = next((i for i in range(r - 1) if p[i] > p[i + 1]), None)
            if i is None:
                break
            idx.append(i + 1)
            p[i], p[i + 1] = p[i + 1], p[i]
        return BraidWord.positive(r, idx)


class CanonicalBraid(namedtuple('CanonicalBraidTuple', ['strands', 'inf', 'factors'])):
    """
    Left normal form Delta^inf A_1 ... A_m: no factor is the identity or
    Delta, and every adjacent pair is left-weighted. Equality is
    componentwise.
    """

    def __new__(cls, strands, inf, factors=()):
        return super(CanonicalBraid, cls).__new__(
            cls, int(strands), int(inf),
            tuple(f if isinstance(f, PermutationBraid) else PermutationBraid(f) for f in factors))

    @property
    def sup(self):
        return self.inf + len(self.factors)

    def is_left_weighted(self):
        return all(b.starting_set() <= a.finishing_set()
                   for a, b in zip(self.factors, self.factors[1:]))

    def to_json(self):
        return {"strands": self.strands, "inf": self.inf,
                "factors": [[v + 1 for v in f.perm] for f in self.factors]}

    @classmethod
    def from_json(cls, obj):
        try:
            return cls(obj['strands'], obj['inf'], [[v - 1 for v in f] for f in obj['factors']])
        except (KeyError, TypeError) as e:
            raise ValueError("Malformed CanonicalBraid JSON: {}".format(obj)) from e


def _normalize_pair(a, b):
    """
    Move crossings from the front of b to the end of a until the pair
    is left-weighted.

    Returns:
        (list, list, bool): new strand maps and whether anything moved.
    """
    a, b = list(a), list(b)
    r = len(a)
    changed = False
    while True:
        inv_a = [0] * r
        for x, v in enumerate(a):
            inv_a[v] = x
        i = next((i for i in range(r - 1)
                  if b[i] > b[i + 1] and inv_a[i] < inv_a[i + 1]), None)
        if i is None:
            return a, b, changed
        a = [_swap(i, v) for v in a]
        b[i], b[i + 1] = b[i + 1], b[i]
        changed = True


def _sweep_back(factors, start):
    """ Restore left-weightedness after factor ``start`` changed. """
    for k in range(start, 0, -1):
        a, b, changed = _normalize_pair(factors[k - 1], factors[k])
        factors[k - 1], factors[k] = a, b
        if not changed:
            break


def to_canonical(w):
    """
    Left normal form of the element represented by a braid word.

    Letters are absorbed left to right; sigma_i^-1 is written as
    Delta^-1 (Delta sigma_i^-1), with the Delta^-1 moved to the front by
    flipping the factors already built.

    Returns:
        CanonicalBraid
    """
    r = w.strands
    inf = 0
    factors = []
    for i, s in w.letters:
        if s > 0:
            factors.append(list(PermutationBraid.generator(r, i).perm))
        else:
            inf -= 1
            factors = [[r - 1 - f[r - 1 - x] for x in range(r)] for f in factors]
            factors.append(list(PermutationBraid.delta_times_inverse_generator(r, i).perm))
        _sweep_back(factors, len(factors) - 1)

    # a full pass until stable, then strip Delta's from the front and identities from the end
    changed = True
    while changed:
        changed = False
        for k in range(1, len(factors)):
            a, b, moved = _normalize_pair(factors[k - 1], factors[k])
            factors[k - 1], factors[k] = a, b
            changed = changed or moved
    delta = list(range(r - 1, -1, -1))
    ident = list(range(r))
    while factors and factors[0] == delta:
        factors.pop(0)
        inf += 1
    factors = [f for f in factors if f != ident]
    ret = CanonicalBraid(r, inf, factors)
    assert ret.is_left_weighted(), "Normal form is not left-weighted: {}".format(ret)
    assert not any(f.is_delta() for f in ret.factors), "Delta left inside the normal form"
    return ret


@memoized
def _delta_word(r):
    return half_twist_word(r)


def canonical_to_word(cb):
    """ A word representing the normal form, Delta^inf then each factor. """
    w = power(_delta_word(cb.strands), cb.inf)
    for f in cb.factors:
        w = concat(w, f.to_word())
    return w


def braids_equal(a, b):
    """ Decide equality in B_r by comparing left normal forms. """
    if a.strands != b.strands:
        raise ValueError("Braids on {} and {} strands cannot be compared".format(a.strands, b.strands))
    return to_canonical(a) == to_canonical(b)

