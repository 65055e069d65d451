#  -*- coding: utf-8 -*-
#  File: __init__.py

"""
Petal permutations, their grid diagrams and the petal-number bounds for
torus knots.
"""

from .permutation import *  # noqa
from .bounds import *  # noqa
