# -*- coding: utf-8 -*-
# File: word.py

"""
Braid words in the Artin generators.

Letters are read left to right, which is bottom to top in a braid picture.
The closure is the trace (standard) closure.
"""

from collections import namedtuple

__all__ = ['BraidWord', 'tau_word', 'half_twist_word', 'full_twist_word',
           'tau_power_word', 'delta_squared_tau_squared',
           'concat', 'inverse', 'conjugate', 'power', 'free_reduce',
           'underlying_permutation', 'is_knot_closure']


class BraidWord(namedtuple('BraidWordTuple', ['strands', 'letters'])):
    """
    A word in the generators of the braid group B_r.

    ``letters`` is a tuple of ``(i, s)`` with ``1 <= i <= strands-1`` and
    ``s`` in ``{1, -1}``; ``(i, 1)`` is sigma_i and ``(i, -1)`` its inverse.
    The empty word is the identity.
    """

    def __new__(cls, strands, letters=()):
        strands = int(strands)
        if strands < 2:
            raise ValueError("A braid needs at least 2 strands, got {}".format(strands))
        out = []
        for letter in letters:
            i, s = int(letter[0]), int(letter[1])
            if not 1 <= i <= strands - 1:
                raise ValueError("Generator sigma_{} does not exist in B_{}".format(i, strands))
            if s not in (1, -1):
                raise ValueError("Letter sign must be 1 or -1, got {}".format(s))
            out.append((i, s))
        return super(BraidWord, cls).__new__(cls, strands, tuple(out))

    @classmethod
    def positive(cls, strands, indices):
        """ The positive word sigma_{i1} sigma_{i2} ... """
        return cls(strands, [(i, 1) for i in indices])

    @classmethod
    def from_json(cls, obj):
        try:
            return cls(obj['strands'], obj['letters'])
        except (KeyError, TypeError, IndexError) as e:
            raise ValueError("Malformed BraidWord JSON: {}".format(obj)) from e

    def to_json(self):
        return {"strands": self.strands, "letters": [[i, s] for i, s in self.letters]}

    def __add__(self, other):
        return concat(self, other)

    def __str__(self):
        if not self.letters:
            return "e"
        return " ".join("s{}".format(i) if s > 0 else "s{}^-1".format(i) for i, s in self.letters)


def _check_same(a, b):
    if a.strands != b.strands:
        raise ValueError("Braids on {} and {} strands cannot be combined".format(a.strands, b.strands))


def concat(a, b):
    _check_same(a, b)
    return BraidWord(a.strands, a.letters + b.letters)


def inverse(a):
    return BraidWord(a.strands, [(i, -s) for i, s in reversed(a.letters)])


def conjugate(w, g):
    """ ``g^-1 w g``. """
    _check_same(w, g)
    return concat(inverse(g), concat(w, g))


def power(w, k):
    """ ``w^k`` for any integer k. """
    base = w if k >= 0 else inverse(w)
    return BraidWord(w.strands, base.letters * abs(k))


def tau_word(r):
    """
    tau = sigma_1 sigma_2 ... sigma_{r-1}, for an odd number r >= 3 of strands.
    """
    if r < 3 or r % 2 == 0:
        raise ValueError("tau is defined here for odd r >= 3, got {}".format(r))
    return BraidWord.positive(r, range(1, r))


def half_twist_word(r):
    """
    The positive half twist Delta as (s1)(s2 s1)...(s_{r-1} ... s1).
    Its length is r(r-1)/2.
    """
    if r < 2:
        raise ValueError("Half twist needs r >= 2, got {}".format(r))
    idx = []
    for k in range(1, r):
        idx.extend(range(k, 0, -1))
    return BraidWord.positive(r, idx)


def full_twist_word(r):
    """ Delta^2, central in B_r. """
    return power(half_twist_word(r), 2)


def tau_power_word(r, k):
    return power(tau_word(r), k)


def delta_squared_tau_squared(r):
    """ Delta^2 tau^2 in B_r; its closure is T_{r,r+2}. """
    return concat(full_twist_word(r), tau_power_word(r, 2))


def free_reduce(w):
    """
    Delete adjacent sigma_i^s sigma_i^-s pairs until none remain.
    """
    stack = []
    for letter in w.letters:
        if stack and stack[-1][0] == letter[0] and stack[-1][1] == -letter[1]:
            stack.pop()
        else:
            stack.append(letter)
    return BraidWord(w.strands, stack)


def underlying_permutation(w):
    """
    The product of the transpositions (i, i+1) of the letters, composed as
    functions right to left, signs ignored.

    Returns:
        tuple[int]: 1-based images; e.g. ``tau_word(5)`` gives
        ``(2, 3, 4, 5, 1)``, the cycle (1 2 3 4 5).
    """
    perm = list(range(1, w.strands + 1))
    for i, _ in w.letters:
        perm[i - 1], perm[i] = perm[i], perm[i - 1]
    return tuple(perm)


def is_knot_closure(w):
    """ Whether the closure of w has one component. """
    perm = underlying_permutation(w)
    x, n = perm[0], 1
    while x != 1:
        x = perm[x - 1]
        n += 1
    return n == w.strands
