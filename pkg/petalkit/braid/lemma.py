# -*- coding: utf-8 -*-
# File: lemma.py

"""
The conjugation chain that shows Delta^2 tau^2 in B_{2n+1} is conjugate to
Delta^2 tau (s_{n+1} ... s_{2n})(s_{2n} ... s_{n+1}).
"""

from collections import namedtuple

from ..config import config as cfg
from ..utils.argtools import memoized
from ..utils.utils import get_tqdm
from .garside import to_canonical
from .word import BraidWord, concat, conjugate, delta_squared_tau_squared, \
    full_twist_word, is_knot_closure, tau_word

__all__ = ['conjugator_c', 'beta', 'beta_closed_form', 'beta_final_form',
           'LemmaCheck', 'lemma_checks', 'verify_lemma']


LemmaCheck = namedtuple('LemmaCheck', ['name', 'passed', 'detail'])
"""
One step of the verification: a short name, whether it holds and a
human-readable detail string.
"""


def _check_n(n):
    if n < 1:
        raise ValueError("n must be >= 1, got {}".format(n))


def conjugator_c(n, k):
    """
    c_k = s_{k+1} s_{k+3} ... s_{2n-k+1} in B_{2n+1}.
    """
    _check_n(n)
    if not 1 <= k <= n:
        raise ValueError("k must be in 1..{}, got {}".format(n, k))
    return BraidWord.positive(2 * n + 1, range(k + 1, 2 * n - k + 2, 2))


@memoized
def beta(n, k):
    """
    beta_0 = Delta^2 tau^2 and beta_k = c_k^-1 beta_{k-1} c_k, all in B_{2n+1}.
    """
    _check_n(n)
    if not 0 <= k <= n:
        raise ValueError("k must be in 0..{}, got {}".format(n, k))
    if k == 0:
        return delta_squared_tau_squared(2 * n + 1)
    return conjugate(beta(n, k - 1), conjugator_c(n, k))


def _head(n):
    r = 2 * n + 1
    return concat(full_twist_word(r), tau_word(r))


def beta_closed_form(n, k):
    """
    Delta^2 tau (s_k^-1 ... s_1^-1) tau (s_{2n} ... s_{2n-k+1}).
    """
    _check_n(n)
    if not 1 <= k <= n:
        raise ValueError("k must be in 1..{}, got {}".format(n, k))
    r = 2 * n + 1
    down = BraidWord(r, [(i, -1) for i in range(k, 0, -1)])
    tail = BraidWord.positive(r, range(2 * n, 2 * n - k, -1))
    return concat(concat(concat(_head(n), down), tau_word(r)), tail)


def beta_final_form(n):
    """
    Delta^2 tau (s_{n+1} ... s_{2n}) (s_{2n} ... s_{n+1}).
    """
    _check_n(n)
    r = 2 * n + 1
    up = BraidWord.positive(r, range(n + 1, 2 * n + 1))
    down = BraidWord.positive(r, range(2 * n, n, -1))
    return concat(concat(_head(n), up), down)


def lemma_checks(n):
    """
    Compare every beta_k produced by the recursion with its closed form.

    Returns:
        list[LemmaCheck]: one check per 1 <= k < n, then the final form of
        beta_n and the knot condition on its closure.
    """
    _check_n(n)
    ret = []
    ks = range(1, n)
    if cfg.CHECK.PROGRESS:
        ks = get_tqdm(ks, desc="beta_k, n={}".format(n))
    for k in ks:
        got, want = to_canonical(beta(n, k)), to_canonical(beta_closed_form(n, k))
        ret.append(LemmaCheck(
            'beta_{} closed form'.format(k), got == want,
            'inf={} factors={} vs inf={} factors={}'.format(
                got.inf, len(got.factors), want.inf, len(want.factors))))
    final = beta(n, n)
    got, want = to_canonical(final), to_canonical(beta_final_form(n))
    ret.append(LemmaCheck(
        'beta_{} final form'.format(n), got == want,
        'word length {}, inf={} factors={}'.format(len(final.letters), got.inf, len(got.factors))))
    ret.append(LemmaCheck(
        'closure of beta_{} is a knot'.format(n), is_knot_closure(final),
        'B_{}'.format(final.strands)))
    return ret


def verify_lemma(n):
    """
    Whether beta_n equals the final form and every intermediate beta_k
    matches its closed form.
    """
    return all(c.passed for c in lemma_checks(n))
