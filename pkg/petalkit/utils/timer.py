# -*- coding: utf-8 -*-
# File: timer.py


from contextlib import contextmanager
from time import perf_counter as timer

from . import logger

__all__ = ['timed_operation']


@contextmanager
def timed_operation(msg, log_start=False, level='info'):
    """
    Surround a context with a timer.

    Args:
        msg(str): the log to print.
        log_start(bool): whether to print also at the beginning.
        level(str): name of the logger method to use.

    Example:
        .. code-block:: python

            with timed_operation('Lemma n=5'):
                verify_lemma(5)

        Will print:

        .. code-block:: python

            Lemma n=5 finished, time:1.2345sec.
    """
    log = getattr(logger, level)
    if log_start:
        log('Start {} ...'.format(msg))
    start = timer()
    yield
    log('{} finished, time:{:.4f}sec.'.format(msg, timer() - start))
