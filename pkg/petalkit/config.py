# -*- coding: utf-8 -*-
# File: config.py

import ast
import pprint

from .utils import logger

__all__ = ['config', 'finalize_configs']


class AttrDict():

    _freezed = False
    """ Avoid accidental creation of new hierarchies. """

    def __getattr__(self, name):
        if name.startswith('__') or self._freezed:
            raise AttributeError(name)
        ret = AttrDict()
        setattr(self, name, ret)
        return ret

    def __setattr__(self, name, value):
        if self._freezed and name not in self.__dict__:
            raise AttributeError(
                "Config was freezed! Unknown config: {}".format(name))
        super().__setattr__(name, value)

    def __str__(self):
        return pprint.pformat(self.to_dict(), indent=1, width=100, compact=True)

    __repr__ = __str__

    def to_dict(self):
        """Convert to a nested dict. """
        return {k: v.to_dict() if isinstance(v, AttrDict) else v
                for k, v in self.__dict__.items() if not k.startswith('_')}

    def update_args(self, args):
        """Update from command line args, e.g. ``["BRACKET.MAX_CROSSINGS=30"]``. """
        for cfg in args:
            if '=' not in cfg:
                raise ValueError("Config override must look like KEY=VALUE, got '{}'".format(cfg))
            keys, v = cfg.split('=', maxsplit=1)
            keylist = keys.split('.')

            dic = self
            for k in keylist[:-1]:
                if k not in dic.__dict__:
                    raise ValueError("Unknown config key: {}".format(keys))
                dic = getattr(dic, k)
            key = keylist[-1]
            if key not in dic.__dict__:
                raise ValueError("Unknown config key: {}".format(keys))

            oldv = getattr(dic, key)
            if not isinstance(oldv, str):
                v = ast.literal_eval(v)
            setattr(dic, key, v)

    def update_from_dict(self, d):
        """Set values from a nested dict such as one returned by :meth:`to_dict`. """
        for k, v in d.items():
            if isinstance(v, dict):
                getattr(self, k).update_from_dict(v)
            else:
                setattr(self, k, v)

    def freeze(self, freezed=True):
        self._freezed = freezed
        for v in self.__dict__.values():
            if isinstance(v, AttrDict):
                v.freeze(freezed)

    # avoid silent bugs
    def __eq__(self, _):
        raise NotImplementedError()

    def __ne__(self, _):
        raise NotImplementedError()


config = AttrDict()
_C = config     # short alias to avoid coding

# invariants ---------------------
_C.BRACKET.MAX_CROSSINGS = 24   # the state sum refuses bigger diagrams
# Which relator row / generator column is deleted from the Alexander matrix.
# Negative values count from the end. Any choice gives the same normalized result.
_C.ALEXANDER.DROP_ROW = -1
_C.ALEXANDER.DROP_COL = -1

# randomized checks --------------
_C.CHECK.SEED = 4321
_C.CHECK.PROGRESS = False   # tqdm bars on stderr for long loops

# svg rendering ------------------
_C.RENDER.CELL = 28         # pixels per grid cell / braid column
_C.RENDER.MARGIN = 20
_C.RENDER.STROKE = 2
_C.RENDER.GAP = 7           # half-length of the break in an under-strand
_C.RENDER.MARKER = 7        # half-size of the X and O glyphs
_C.RENDER.ROSE_RADIUS = 140
_C.RENDER.FONT_SIZE = 12
_C.RENDER.STRAND_COLOR = '#1f3b73'
_C.RENDER.MARKER_COLOR = '#b22222'
_C.RENDER.SHOW_MARKERS = True

_C.freeze()  # avoid typo / wrong config keys


def finalize_configs():
    """
    Run some sanity checks. Call after all overrides are applied.
    """
    _C.freeze(False)
    assert isinstance(_C.BRACKET.MAX_CROSSINGS, int) and _C.BRACKET.MAX_CROSSINGS >= 0, \
        _C.BRACKET.MAX_CROSSINGS
    assert isinstance(_C.ALEXANDER.DROP_ROW, int), _C.ALEXANDER.DROP_ROW
    assert isinstance(_C.ALEXANDER.DROP_COL, int), _C.ALEXANDER.DROP_COL
    assert isinstance(_C.CHECK.SEED, int), _C.CHECK.SEED
    for k in ['CELL', 'MARGIN', 'STROKE', 'MARKER', 'ROSE_RADIUS', 'FONT_SIZE']:
        assert _C.RENDER.to_dict()[k] > 0, "RENDER.{} must be positive".format(k)
    assert 0 <= _C.RENDER.GAP < _C.RENDER.CELL / 2, _C.RENDER.GAP
    _C.freeze()
    logger.debug("Config: ------------------------------------------\n" + str(_C))
