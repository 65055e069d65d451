#  -*- coding: utf-8 -*-
#  File: __init__.py

"""
Grid diagrams: validity, moves, petal form and PD extraction.
"""

from .diagram import *  # noqa
from .pd import *  # noqa
