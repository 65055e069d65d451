# -*- coding: utf-8 -*-
# File: libinfo.py

# These lines will be programatically read/write by setup.py
# Don't touch them.
__version__ = '0.3.0'
__git_version__ = "0.3.0"
