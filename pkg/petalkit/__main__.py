# -*- coding: utf-8 -*-
# File: __main__.py

import sys

from petalkit.cli.main import main

sys.exit(main())
