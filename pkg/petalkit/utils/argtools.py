# -*- coding: utf-8 -*-
# File: argtools.py


import functools

__all__ = ['memoized', 'memoized_method']


memoized = functools.lru_cache(maxsize=None)
""" Alias to :func:`functools.lru_cache`
WARNING: memoization will keep keys and values alive!
"""


def memoized_method(func):
    """
    A decorator that performs memoization on methods. It stores the cache on the object instance itself.
    The instance needs a ``__dict__``; namedtuple subclasses without ``__slots__`` have one.
    """

    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        self = args[0]
        assert func.__name__ in dir(self), "memoized_method can only be used on method!"

        cache = self.__dict__.setdefault('_MEMOIZED_CACHE', {})
        key = (func, ) + args[1:] + tuple(sorted(kwargs.items()))
        if key in cache:
            return cache[key]
        value = func(*args, **kwargs)
        cache[key] = value
        return value

    return wrapper
