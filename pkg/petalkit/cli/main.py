# -*- coding: utf-8 -*-
# File: main.py

import argparse
import json
import logging
import sys

from ..braid.burau import alexander_from_braid
from ..braid.closure import braid_to_pd
from ..braid.lemma import lemma_checks
from ..braid.word import BraidWord
from ..config import config as cfg
from ..config import finalize_configs
from ..grid.diagram import GridDiagram, grid_valid, is_petal_form
from ..grid.pd import alexander_from_grid, grid_to_pd
from ..invariants.alexander import InvariantMismatch
from ..invariants.bracket import CrossingCapExceeded, jones
from ..petal.bounds import known_petal_number, petal_lower_bound, \
    petal_lower_bound_torus, theorem_check
from ..petal.permutation import PetalPermutation, petal_to_grid, torus_petal_permutation
from ..utils import logger
from ..utils.timer import timed_operation
from .render import braid_svg, grid_svg, petal_svg
from .report import Check, RunReport, dump_json

__all__ = ['MalformedInput', 'main']

SOURCES = ['braid', 'grid', 'petal']


class MalformedInput(ValueError):
    """
    Unparsable JSON, a JSON object of the wrong shape, or bad flags.
    """
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise MalformedInput(message)


def _odd_r(r):
    if r < 3 or r % 2 == 0:
        raise MalformedInput("--r must be odd and >= 3, got {}".format(r))
    return r


def _load_json(args):
    try:
        if args.in_file:
            with open(args.in_file) as f:
                text = f.read()
        else:
            text = sys.stdin.read()
    except OSError as e:
        raise MalformedInput("Cannot read input: {}".format(e)) from e
    try:
        return json.loads(text)
    except ValueError as e:
        raise MalformedInput("Cannot parse JSON input: {}".format(e)) from e


def _load_source(args):
    """
    Returns:
        (dict, object): the raw JSON and the parsed braid / grid / petal object.
    """
    obj = _load_json(args)
    if not isinstance(obj, dict):
        raise MalformedInput("Expected a JSON object, got {}".format(type(obj).__name__))
    try:
        if args.source == 'braid':
            return obj, BraidWord.from_json(obj)
        if args.source == 'petal':
            return obj, PetalPermutation.from_json(obj)
        gd = GridDiagram.from_json(obj)
    except ValueError as e:
        raise MalformedInput(str(e)) from e
    if not grid_valid(gd):
        raise MalformedInput("Not a valid grid diagram: {}".format(obj))
    return obj, gd


def _as_grid(source, x):
    return petal_to_grid(x) if source == 'petal' else x


def _max_crossings(args):
    return cfg.BRACKET.MAX_CROSSINGS if args.max_crossings is None else args.max_crossings


def cmd_petal_gen(args):
    r = _odd_r(args.r)
    pp = torus_petal_permutation((r - 1) // 2)
    checks = [Check('petal count is 2r+3', pp.petals == 2 * r + 3, '{} petals'.format(pp.petals)),
              Check('grid is in petal form', is_petal_form(petal_to_grid(pp)), 'size {}'.format(pp.petals))]
    return RunReport('petal-gen', {"r": r}, pp.to_json(), checks)


def cmd_verify_lemma(args):
    if args.n < 1:
        raise MalformedInput("--n must be >= 1, got {}".format(args.n))
    with timed_operation('Lemma for n={}'.format(args.n)):
        checks = lemma_checks(args.n)
    checks = [Check(*c) for c in checks]
    return RunReport('verify-lemma', {"n": args.n},
                     {"n": args.n, "strands": 2 * args.n + 1, "verified": all(c.passed for c in checks)},
                     checks)


def cmd_theorem(args):
    r = _odd_r(args.r)
    with timed_operation('Theorem check for r={}'.format(r)):
        res = theorem_check(r)
    checks = [Check('lower bound is 2r+3', res.lower == 2 * r + 3, str(res.lower)),
              Check('construction has 2r+3 petals', res.upper == 2 * r + 3, str(res.upper)),
              Check('petal number is 2r+3', res.verified,
                    'Alexander polynomial of the construction matches T_{{{},{}}}'.format(r, r + 2))]
    return RunReport('theorem', {"r": r}, dict(res._asdict()), checks)


def cmd_alexander(args):
    obj, x = _load_source(args)
    if args.source == 'braid':
        poly = alexander_from_braid(x)
    else:
        poly = alexander_from_grid(_as_grid(args.source, x))
    return RunReport('alexander', {"source": args.source, "data": obj}, poly.to_json())


def cmd_jones(args):
    obj, x = _load_source(args)
    pd = braid_to_pd(x) if args.source == 'braid' else grid_to_pd(_as_grid(args.source, x))
    cap = _max_crossings(args)
    with timed_operation('Bracket of {} crossings'.format(len(pd.crossings)), level='debug'):
        poly = jones(pd, max_crossings=cap)
    return RunReport('jones', {"source": args.source, "data": obj, "max_crossings": cap},
                     poly.to_json())


def cmd_render(args):
    obj, x = _load_source(args)
    if args.source == 'braid':
        svg = braid_svg(x)
    elif args.source == 'grid' or args.grid:
        svg = grid_svg(_as_grid(args.source, x))
    else:
        svg = petal_svg(x)
    return RunReport('render', {"source": args.source, "data": obj, "grid": args.grid},
                     {"svg": svg})


def cmd_lower_bound(args):
    if args.torus is not None:
        r, s = args.torus
        out = {"r": r, "s": s, "alpha": r + s,
               "lower_bound": petal_lower_bound_torus(r, s),
               "known": known_petal_number(r, s)}
        return RunReport('lower-bound', {"torus": [r, s]}, out)
    return RunReport('lower-bound', {"alpha": args.alpha},
                     {"alpha": args.alpha, "lower_bound": petal_lower_bound(args.alpha)})


def _build_parser():
    common = _Parser(add_help=False)
    common.add_argument('--in', dest='in_file', help='read JSON input from this file instead of stdin')
    common.add_argument('--out', help='also write the output (SVG for render, JSON otherwise) to this file')
    common.add_argument('--json', action='store_true', help='print the full run report instead of the outputs')
    common.add_argument('--max-crossings', type=int,
                        help='crossing cap of the bracket state sum. Defaults to BRACKET.MAX_CROSSINGS')
    common.add_argument('--config', help="A list of KEY=VALUE to overwrite those defined in config.py",
                        nargs='+')
    common.add_argument('--quiet', action='store_true', help='only log warnings and errors')
    common.add_argument('--logfile', help='also append the log to this file')

    parser = _Parser(prog='petal-kit', description='Petal presentations of torus knots, checked by invariants.')
    sub = parser.add_subparsers(dest='command')
    sub.required = True

    p = sub.add_parser('petal-gen', parents=[common], help='petal permutation of T_{r,r+2}')
    p.add_argument('--r', type=int, required=True, help='odd r >= 3')
    p.set_defaults(func=cmd_petal_gen)

    p = sub.add_parser('verify-lemma', parents=[common], help='conjugation chain in B_{2n+1}')
    p.add_argument('--n', type=int, required=True)
    p.set_defaults(func=cmd_verify_lemma)

    p = sub.add_parser('theorem', parents=[common], help='p(T_{r,r+2}) = 2r+3')
    p.add_argument('--r', type=int, required=True, help='odd r >= 3')
    p.set_defaults(func=cmd_theorem)

    for name, func, helpmsg in [('alexander', cmd_alexander, 'normalized Alexander polynomial'),
                                ('jones', cmd_jones, 'Jones polynomial in the bracket variable A'),
                                ('render', cmd_render, 'SVG drawing')]:
        p = sub.add_parser(name, parents=[common], help=helpmsg)
        p.add_argument('source', choices=SOURCES, help='what the JSON input describes')
        if name == 'render':
            p.add_argument('--grid', action='store_true', help='draw a petal source as its grid diagram')
        p.set_defaults(func=func)

    p = sub.add_parser('lower-bound', parents=[common], help='petal number lower bound from the arc index')
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument('--alpha', type=int, help='arc index of the knot')
    g.add_argument('--torus', type=int, nargs=2, metavar=('R', 'S'), help='torus knot T_{R,S}')
    p.set_defaults(func=cmd_lower_bound)
    return parser


def _emit(text, out=None):
    sys.stdout.write(text)
    sys.stdout.flush()
    if out:
        with open(out, 'w') as f:
            f.write(text)


def _error(e, code):
    logger.error("{}: {}".format(type(e).__name__, e))
    _emit(dump_json({"error": str(e), "type": type(e).__name__}) + "\n")
    return code


def main(argv=None):
    """
    Run one command.

    Returns:
        int: 0 when every check passed, 1 on a failed check or an invariant
        mismatch, 2 on malformed input.
    """
    try:
        args = _build_parser().parse_args(argv)
    except MalformedInput as e:
        return _error(e, 2)

    # --config, --quiet and --logfile last for this call only
    saved_config = cfg.to_dict()
    saved_level = logger.getEffectiveLevel()
    try:
        return _run(args)
    finally:
        cfg.freeze(False)
        cfg.update_from_dict(saved_config)
        cfg.freeze()
        logger.setLevel(saved_level)
        logger.remove_logger_file()


def _run(args):
    if args.quiet:
        logger.setLevel(logging.WARNING)
    if args.logfile:
        logger.set_logger_file(args.logfile)
    try:
        if args.config:
            cfg.update_args(args.config)
        finalize_configs()
    except (ValueError, SyntaxError, AssertionError) as e:
        return _error(MalformedInput("Bad --config: {}".format(e)), 2)

    try:
        report = args.func(args)
    except InvariantMismatch as e:
        return _error(e, 1)
    except (ValueError, CrossingCapExceeded) as e:
        return _error(e, 2)

    report.log_checks()
    if args.json:
        _emit(dump_json(report.to_json()) + "\n", args.out)
    elif args.command == 'render':
        if args.out:
            with open(args.out, 'w') as f:
                f.write(report.outputs['svg'])
            _emit(dump_json({"out": args.out, "bytes": len(report.outputs['svg'])}) + "\n")
        else:
            _emit(report.outputs['svg'])
    else:
        _emit(dump_json(report.outputs) + "\n", args.out)
    return report.exit_code


if __name__ == '__main__':
    sys.exit(main())
