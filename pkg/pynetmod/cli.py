'''
Copyright 2024 the pynetmod authors
This file is part of pynetmod.

pynetmod is free software: you can redistribute it 
and/or modify it under the terms of the GNU General Public License as 
published by the Free Software Foundation, either version 3 of the 
License, or (at your option) any later version.

pynetmod is distributed in the hope that it will 
be useful, but WITHOUT ANY WARRANTY; without even the implied warranty 
of MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
GNU General Public License for more details.

You should have received a copy of the GNU General Public License
along with pynetmod.  
If not, see <http://www.gnu.org/licenses/>.
'''

import argparse
import json
import logging
import re
import sys
from dataclasses import replace
from functools import reduce
from typing import Optional, Sequence, TextIO

from pynetmod.config import Settings, DEFAULT_SETTINGS
from pynetmod.enums import EVarieties, EOutputFormats
from pynetmod.exceptions import LiteralParseError, ElementNotInMonoidError, BudgetExceededError
from pynetmod.invariants import SUITES, run_suites
from pynetmod.kneser import kneser_graph, k_subsets
from pynetmod.auxiliary import subset_label
from pynetmod.network_model import NetworkModelContext, network_model
from pynetmod.notation import (parse_monoid, parse_network, format_network, parse_permutation, network_to_json,
                               network_to_dot, kneser_to_dot, graph_to_json, bounded_to_json, range_state_to_json,
                               load_scenario, read_scenario, run_scenario, dumps)
from pynetmod.operad import RangeLimitedState

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_UNEQUAL = 1
EXIT_FAILED = 1
EXIT_PARSE = 2
EXIT_CONTEXT = 3

_VERTEX_LABEL = re.compile(r'e\(\s*(\d+)\s*,\s*(\d+)\s*\)')

def _context_parser() -> argparse.ArgumentParser:
    parent = argparse.ArgumentParser(add_help=False)
    parent.add_argument('--monoid', default='bool', help='edge monoid: bool, nat, band or free:<alphabet> (default: bool)')
    parent.add_argument('--variety', default='mon', choices=[v.value for v in EVarieties],
                        help='variety of the network model (default: mon)')
    parent.add_argument('--n', type=int, default=None,
                        help='number of vertices (default: largest vertex label in the literals)')
    return parent

def _common_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--format', choices=[f.value for f in EOutputFormats], default=None,
                        help='output format (default depends on the command)')
    common.add_argument('--budget', type=int, default=None, help='sample budget for law checks on infinite monoids')
    common.add_argument('--seed', type=int, default=None, help='seed of the deterministic sampler')
    common.add_argument('-v', '--verbose', action='count', default=0, help='-v for INFO, -vv for DEBUG logging')
    return common

def build_parser() -> argparse.ArgumentParser:
    """Returns the argument parser of the pynetmod command"""
    common, context = _common_parser(), _context_parser()
    parser = argparse.ArgumentParser(prog='pynetmod',
                                     description='Free network models of monoids: normal forms, '
                                                 'disjoint unions, symmetric group actions and operad algebras.')
    sub = parser.add_subparsers(dest='command', required=True)

    p = sub.add_parser('normalize', parents=[common, context], help='print the canonical form of a network')
    p.add_argument('network', help="network literal, e.g. 'e(1,2)=T * e(3,4)=T'")

    p = sub.add_parser('eq', parents=[common, context], help='exit 0 if two networks are equal, 1 otherwise')
    p.add_argument('left')
    p.add_argument('right')

    p = sub.add_parser('overlay', parents=[common, context], help='overlay networks from left to right')
    p.add_argument('networks', nargs='+')

    p = sub.add_parser('disjoint', parents=[common, context], help='disjoint union of two networks',
                       description='Places right next to left. --n is the vertex count of the result, '
                                   'split into --left-n and --right-n. Missing sizes are inferred '
                                   'from the largest vertex label.')
    p.add_argument('left')
    p.add_argument('right')
    p.add_argument('--left-n', type=int, default=None, help='number of vertices of the left network')
    p.add_argument('--right-n', type=int, default=None, help='number of vertices of the right network')

    p = sub.add_parser('permute', parents=[common, context], help='relabel a network by a permutation')
    p.add_argument('perm', help="permutation in 1-based cycle notation, e.g. '(1 2 3)'")
    p.add_argument('network')

    p = sub.add_parser('kneser', parents=[common], help='print the Kneser graph KG_{n,k}')
    p.add_argument('kn', type=int, metavar='N')
    p.add_argument('kk', type=int, metavar='K')

    p = sub.add_parser('act', parents=[common], help='act by operations on range limited or bounded degree states')
    p.add_argument('op', nargs='?', default=None, help="operation literal '(perm; network)'")
    p.add_argument('states', nargs='?', default=None,
                   help='JSON object {space, L, states} or {k, states}')
    p.add_argument('--scenario', default=None, help='JSON scenario file with states and ops')

    p = sub.add_parser('check', parents=[common], help='run invariant suites')
    p.add_argument('suites', nargs='+', choices=[*SUITES, 'all'], metavar='SUITE',
                   help=f'one of {", ".join(SUITES)} or all')
    p.add_argument('--workers', type=int, default=1, help='number of suites run concurrently (default: 1)')

    p = sub.add_parser('export', parents=[common, context], help='export a Kneser graph or a network')
    p.add_argument('what', choices=['kneser', 'network'])
    p.add_argument('args', nargs='+', help='N K for kneser, a network literal for network')
    return parser

def _settings(args:argparse.Namespace) -> Settings:
    settings = DEFAULT_SETTINGS
    if args.budget is not None: settings = replace(settings, sample_budget=args.budget)
    if args.seed is not None: settings = replace(settings, seed=args.seed)
    return settings

def _model(args:argparse.Namespace) -> NetworkModelContext:
    return network_model(parse_monoid(args.monoid), EVarieties(args.variety), _settings(args))

def _infer_n(args:argparse.Namespace, *texts:str) -> int:
    if args.n is not None:
        if args.n < 0: raise LiteralParseError(f'--n must not be negative, got {args.n}')
        return args.n
    labels = [int(x) for t in texts for m in _VERTEX_LABEL.finditer(t) for x in m.groups()]
    return max(labels, default=2)

def _emit_network(g, fmt:Optional[str], out:TextIO):
    match fmt or EOutputFormats.TEXT.value:
        case EOutputFormats.JSON.value: print(dumps(network_to_json(g)), file=out)
        case EOutputFormats.DOT.value: out.write(network_to_dot(g))
        case _: print(format_network(g), file=out)

def cmd_normalize(args:argparse.Namespace, out:TextIO) -> int:
    model = _model(args)
    g = parse_network(args.network, model, _infer_n(args, args.network))
    _emit_network(g, args.format, out)
    return EXIT_OK

def cmd_eq(args:argparse.Namespace, out:TextIO) -> int:
    model = _model(args)
    n = _infer_n(args, args.left, args.right)
    g, h = parse_network(args.left, model, n), parse_network(args.right, model, n)
    equal = g == h
    if args.format == EOutputFormats.JSON.value:
        print(dumps({'equal': equal, 'left': format_network(g), 'right': format_network(h)}), file=out)
    else:
        print('equal' if equal else 'unequal', file=out)
    return EXIT_OK if equal else EXIT_UNEQUAL

def cmd_overlay(args:argparse.Namespace, out:TextIO) -> int:
    model = _model(args)
    n = _infer_n(args, *args.networks)
    g = reduce(model.overlay, (parse_network(t, model, n) for t in args.networks))
    _emit_network(g, args.format, out)
    return EXIT_OK

def _max_label(text:str) -> int:
    return max((int(x) for m in _VERTEX_LABEL.finditer(text) for x in m.groups()), default=0)

def _split_sizes(args:argparse.Namespace) -> tuple[int, int]:
    left, right = args.left_n, args.right_n
    if args.n is not None:
        if left is None and right is None: left = _max_label(args.left)
        if left is None: left = args.n - right
        if right is None: right = args.n - left
        if left + right != args.n:
            raise LiteralParseError(f'--left-n {left} and --right-n {right} do not add up to --n {args.n}')
    if left is None: left = _max_label(args.left)
    if right is None: right = _max_label(args.right)
    if left < 0 or right < 0:
        raise LiteralParseError(f'network sizes must not be negative, got {left} and {right}')
    return left, right

def cmd_disjoint(args:argparse.Namespace, out:TextIO) -> int:
    model = _model(args)
    m, n = _split_sizes(args)
    g = model.disjoint_union(parse_network(args.left, model, m), parse_network(args.right, model, n))
    _emit_network(g, args.format, out)
    return EXIT_OK

def cmd_permute(args:argparse.Namespace, out:TextIO) -> int:
    model = _model(args)
    n = _infer_n(args, args.network)
    sigma = parse_permutation(args.perm, n)
    _emit_network(model.permute(sigma, parse_network(args.network, model, n)), args.format, out)
    return EXIT_OK

def _kneser_output(n:int, k:int, fmt:Optional[str], out:TextIO):
    if n < 0 or k < 0: raise LiteralParseError(f'N and K must not be negative, got {n} and {k}')
    match fmt or EOutputFormats.DOT.value:
        case EOutputFormats.DOT.value:
            out.write(kneser_to_dot(n, k))
        case EOutputFormats.JSON.value:
            data = graph_to_json(kneser_graph(n, k))
            data['labels'] = [subset_label(s) for s in k_subsets(n, k)]
            print(dumps(data), file=out)
        case _:
            g = kneser_graph(n, k)
            labels = [subset_label(s) for s in k_subsets(n, k)]
            print(f'KG_{n},{k}: {g.n_vertices} vertices, {len(g.edges)} edges', file=out)
            for u, v in g.sorted_edges():
                print(f'{labels[u]} -- {labels[v]}', file=out)

def cmd_kneser(args:argparse.Namespace, out:TextIO) -> int:
    _kneser_output(args.kn, args.kk, args.format, out)
    return EXIT_OK

def cmd_act(args:argparse.Namespace, out:TextIO) -> int:
    settings = _settings(args)
    if args.scenario is not None:
        scenario = read_scenario(args.scenario)
    else:
        if args.op is None or args.states is None:
            raise LiteralParseError('act needs OP and STATES or --scenario')
        try:
            data = json.loads(args.states)
        except json.JSONDecodeError as e:
            raise LiteralParseError(f'STATES is no valid JSON: {e}') from e
        if not isinstance(data, dict):
            raise LiteralParseError('STATES must be a JSON object')
        scenario = load_scenario({**data, 'ops': [args.op]})
    results = run_scenario(scenario, settings)
    encoded = [range_state_to_json(r) if isinstance(r, RangeLimitedState) else bounded_to_json(r) for r in results]
    if args.format == EOutputFormats.JSON.value:
        print(dumps(encoded), file=out)
    else:
        for op_text, data in zip(scenario.ops, encoded):
            edges = ' '.join(f'{u}-{v}' for u, v in data['edges']) or '-'
            print(f'{op_text}: n={data["n"]} edges={edges}', file=out)
    return EXIT_OK

def cmd_check(args:argparse.Namespace, out:TextIO) -> int:
    results = run_suites(args.suites, _settings(args), args.workers)
    if args.format == EOutputFormats.JSON.value:
        print(dumps([{'suite': r.suite, 'passed': r.passed, 'checked': r.checked,
                      'counterexample': r.counterexample} for r in results]), file=out)
    else:
        for r in results:
            if r.passed: print(f'{r.suite}: ok ({r.checked} checks)', file=out)
            else: print(f'{r.suite}: FAILED after {r.checked} checks: {r.counterexample}', file=out)
    return EXIT_OK if all(r.passed for r in results) else EXIT_FAILED

def cmd_export(args:argparse.Namespace, out:TextIO) -> int:
    fmt = args.format or EOutputFormats.DOT.value
    if args.what == 'kneser':
        if len(args.args) != 2 or not all(a.isdigit() for a in args.args):
            raise LiteralParseError(f'export kneser needs N K, got {" ".join(args.args)}')
        _kneser_output(int(args.args[0]), int(args.args[1]), fmt, out)
        return EXIT_OK
    if len(args.args) != 1:
        raise LiteralParseError('export network needs exactly one network literal')
    model = _model(args)
    _emit_network(parse_network(args.args[0], model, _infer_n(args, args.args[0])), fmt, out)
    return EXIT_OK

_COMMANDS = {
    'normalize': cmd_normalize,
    'eq': cmd_eq,
    'overlay': cmd_overlay,
    'disjoint': cmd_disjoint,
    'permute': cmd_permute,
    'kneser': cmd_kneser,
    'act': cmd_act,
    'check': cmd_check,
    'export': cmd_export,
}

def run(argv:Optional[Sequence[str]]=None, out:Optional[TextIO]=None, err:Optional[TextIO]=None) -> int:
    """
    Runs the pynetmod command line.

    Args:
        argv (Optional[Sequence[str]], optional): arguments without the program name. Defaults to sys.argv[1:].
        out (Optional[TextIO], optional): output stream. Defaults to sys.stdout.
        err (Optional[TextIO], optional): error stream. Defaults to sys.stderr.

    Returns:
        int: 0 on success, 1 for unequal networks or failed checks,
            2 for parse errors, 3 for context violations
    """
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_PARSE
    if args.verbose:
        logging.basicConfig(level=logging.DEBUG if args.verbose > 1 else logging.INFO,
                            format='%(levelname)s %(name)s: %(message)s', stream=err)
    logger.debug('running %s', args.command)
    try:
        return _COMMANDS[args.command](args, out)
    except (LiteralParseError, ElementNotInMonoidError, json.JSONDecodeError, KeyError) as e:
        print(f'parse error: {e}', file=err)
        return EXIT_PARSE
    except (ValueError, BudgetExceededError) as e:
        print(f'error: {e}', file=err)
        return EXIT_CONTEXT
    except OSError as e:
        print(f'error: {e}', file=err)
        return EXIT_PARSE

def main():
    sys.exit(run())
