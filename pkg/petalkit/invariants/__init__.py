#  -*- coding: utf-8 -*-
#  File: __init__.py

"""
Exact Laurent polynomials and the knot invariants built on them.
"""

from .laurent import *  # noqa
from .linalg import *  # noqa
from .alexander import *  # noqa
from .bracket import *  # noqa
from .torus import *  # noqa
