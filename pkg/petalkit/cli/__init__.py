#  -*- coding: utf-8 -*-
#  File: __init__.py

"""
The petal-kit command line tool: reports, SVG rendering and the entry point.
"""

from .report import *  # noqa
from .render import *  # noqa
from .main import *  # noqa
