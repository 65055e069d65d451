# -*- coding: utf-8 -*-
# File: __init__.py


from petalkit.libinfo import __version__, __git_version__

from petalkit.utils import *
from petalkit.invariants import *
from petalkit.braid import *
from petalkit.grid import *
from petalkit.petal import *
