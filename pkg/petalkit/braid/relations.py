# -*- coding: utf-8 -*-
# File: relations.py

"""
Rewrites by the defining relations of B_r, applied at a position chosen
by the caller. Each returns a new word for the same braid.
"""

from .word import BraidWord, full_twist_word

__all__ = ['tau_shift', 'commute_far', 'braid_move', 'insert_cancelling_pair',
           'shift_full_twist']


def _letter(w, index):
    if not 0 <= index < len(w.letters):
        raise ValueError("Position {} is outside a word of length {}".format(index, len(w.letters)))
    return w.letters[index]


def tau_shift(w, index):
    """
    sigma_i^s tau = tau sigma_{i-1}^s, for the letter at ``index`` followed
    by the block sigma_1 ... sigma_{r-1}.

    Raises:
        ValueError: the letter is sigma_1^s, or no tau block follows it.
    """
    i, s = _letter(w, index)
    r = w.strands
    if i == 1:
        raise ValueError("sigma_1 cannot be moved through tau")
    tau = tuple((k, 1) for k in range(1, r))
    if w.letters[index + 1:index + r] != tau:
        raise ValueError("No tau block after position {} in {}".format(index, w))
    return BraidWord(r, w.letters[:index] + tau + ((i - 1, s), ) + w.letters[index + r:])


def commute_far(w, index):
    """ Swap the letters at ``index`` and ``index+1`` when |i - j| >= 2. """
    a = _letter(w, index)
    b = _letter(w, index + 1)
    if abs(a[0] - b[0]) < 2:
        raise ValueError("sigma_{} and sigma_{} do not commute".format(a[0], b[0]))
    L = w.letters
    return BraidWord(w.strands, L[:index] + (b, a) + L[index + 2:])


def braid_move(w, index):
    """
    The braid relation on the three letters starting at ``index``, with |p - q| = 1:

        s_p s_q s_p^e  =  s_q^e s_p s_q
        s_p^-1 s_q^-1 s_p^-1  =  s_q^-1 s_p^-1 s_q^-1

    The first is applied in whichever direction matches.
    """
    (p, a), (q, b), (p2, c) = _letter(w, index), _letter(w, index + 1), _letter(w, index + 2)
    if p != p2 or abs(p - q) != 1:
        raise ValueError("No braid relation at position {} in {}".format(index, w))
    if a == 1 and b == 1:
        new = ((q, c), (p, 1), (q, 1))
    elif b == 1 and c == 1:
        new = ((q, 1), (p, 1), (q, a))
    elif a == b == c == -1:
        new = ((q, -1), (p, -1), (q, -1))
    else:
        raise ValueError("No braid relation at position {} in {}".format(index, w))
    L = w.letters
    return BraidWord(w.strands, L[:index] + new + L[index + 3:])


def insert_cancelling_pair(w, index, i, sign=1):
    """ Insert sigma_i^s sigma_i^-s before position ``index``. """
    if not 0 <= index <= len(w.letters):
        raise ValueError("Cannot insert at position {} of a word of length {}".format(index, len(w.letters)))
    L = w.letters
    return BraidWord(w.strands, L[:index] + ((i, sign), (i, -sign)) + L[index:])


def shift_full_twist(w, index):
    """
    Delta^2 x = x Delta^2 for the full-twist block starting at ``index``
    and the letter x right after it.
    """
    block = full_twist_word(w.strands).letters
    end = index + len(block)
    if w.letters[index:end] != block:
        raise ValueError("No full twist at position {} in {}".format(index, w))
    x = _letter(w, end)
    L = w.letters
    return BraidWord(w.strands, L[:index] + (x, ) + block + L[end + 1:])
