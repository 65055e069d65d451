#  -*- coding: utf-8 -*-
#  File: __init__.py

"""
Braid words, Garside normal form, the conjugation lemma and the Burau route
to the Alexander polynomial.
"""

from .word import *  # noqa
from .garside import *  # noqa
from .relations import *  # noqa
from .lemma import *  # noqa
from .burau import *  # noqa
from .closure import *  # noqa
