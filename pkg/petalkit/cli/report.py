# -*- coding: utf-8 -*-
# File: report.py

import json
from collections import namedtuple
from tabulate import tabulate
from termcolor import colored

from ..utils import logger

__all__ = ['Check', 'RunReport', 'dump_json']


Check = namedtuple('Check', ['name', 'passed', 'detail'])


def dump_json(obj):
    """ Compact, deterministic JSON text. """
    return json.dumps(obj, separators=(',', ':'))


class RunReport(namedtuple('RunReportTuple', ['command', 'inputs', 'outputs', 'checks'])):
    """
    What one CLI command did: the echoed inputs, its outputs and the checks
    it ran. The process exit code is 0 iff every check passed.
    """

    def __new__(cls, command, inputs, outputs, checks=()):
        checks = tuple(c if isinstance(c, Check) else Check(*c) for c in checks)
        return super(RunReport, cls).__new__(cls, command, inputs, outputs, checks)

    @property
    def passed(self):
        return all(c.passed for c in self.checks)

    @property
    def exit_code(self):
        return 0 if self.passed else 1

    def to_json(self):
        return {"command": self.command,
                "inputs": self.inputs,
                "outputs": self.outputs,
                "checks": [[c.name, bool(c.passed), c.detail] for c in self.checks]}

    def log_checks(self):
        if not self.checks:
            return
        data = [[c.name, 'pass' if c.passed else 'FAIL', c.detail] for c in self.checks]
        table = tabulate(data, headers=['check', 'result', 'detail'], tablefmt='pipe')
        color = 'cyan' if self.passed else 'red'
        logger.info("Checks of '{}':\n".format(self.command) + colored(table, color))
