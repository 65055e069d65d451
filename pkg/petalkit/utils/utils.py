# -*- coding: utf-8 -*-
# File: utils.py


import os
import sys
from tqdm import tqdm

__all__ = ['get_tqdm',
           'get_tqdm_kwargs']


def get_tqdm_kwargs(**kwargs):
    """
    Return default arguments to be used with tqdm.

    Args:
        kwargs: extra arguments to be used.
    Returns:
        dict:
    """
    default = dict(
        smoothing=0.5,
        dynamic_ncols=True,
        ascii=True,
        file=sys.stderr,
        bar_format='{l_bar}{bar}|{n_fmt}/{total_fmt}[{elapsed}<{remaining}]'
    )
    try:
        default['mininterval'] = float(os.environ['PETALKIT_PROGRESS_REFRESH'])
    except KeyError:
        default['mininterval'] = 0.5 if sys.stderr.isatty() else 60
    default.update(kwargs)
    return default


def get_tqdm(*args, **kwargs):
    """ Similar to :func:`tqdm.tqdm()`,
    but use petalkit's default options to have consistent style. """
    return tqdm(*args, **get_tqdm_kwargs(**kwargs))
