# -*- coding: utf-8 -*-
# Copyright (C) the PyTForcing developers (2026)
#
# This file is part of PyTForcing.
#
# PyTForcing is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.
#
# PyTForcing is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with PyTForcing.  If not, see <http://www.gnu.org/licenses/>.

"""Run tree-forcing operations over JSON inputs

Every mode prints a single JSON document on standard output.  Exit codes:
0 on success, 1 on a domain error (``{"error": code, "detail": ...}``),
2 when an input does not parse.
"""

import argparse
import configparser
import sys

from .. import (__version__, coding, const, demos, forcing, hechler, ideals,
                io, log, sampling, tree)
from ..errors import (ForcingError, InputFormatError, OracleContractError)
from ..parameters import ForcingParameters
from ..periodic import (as_word, word_str)

__author__ = 'the PyTForcing developers'

logger = log.get_logger('tforcing-run')


# -- argument types -------------------------------------------------------------

def _word(alphabet):
    def convert(value):
        try:
            return as_word(value, alphabet)
        except (ValueError, TypeError) as exc:
            raise argparse.ArgumentTypeError(str(exc))
    convert.__name__ = f'word{alphabet}'
    return convert


def _natural(value):
    try:
        value = int(value)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))
    if value < 0:
        raise argparse.ArgumentTypeError(f"{value} is negative")
    return value


def _incr(value):
    """Parse ``{"incr": [...]}``, a JSON list, or comma-separated naturals
    """
    text = value.strip()
    if text.startswith(('{', '[')):
        return io.read_incr(text if text.startswith('{') else '{"incr": %s}' % text)
    try:
        return tuple(int(n) for n in text.split(',') if n.strip())
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


# -- parse command line ---------------------------------------------------------

def create_parser():
    """Create a command-line parser for this entry point
    """
    parser = argparse.ArgumentParser(
        description=__doc__,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    parser._positionals.title = 'Positional arguments'
    parser._optionals.title = 'Optional arguments'

    parser.add_argument(
        '-V',
        '--version',
        action='version',
        version=__version__,
    )
    parser.add_argument(
        '-v',
        '--verbose',
        action='count',
        default=0,
        help='print verbose output, give more times for more '
        'verbose output',
    )
    parser.add_argument(
        '-l',
        '--log-file',
        help='save a copy of all logger messages to this file',
    )
    parser.add_argument(
        '-f',
        '--config-file',
        default=None,
        help='path to parameters file (default: %s if it exists)'
             % const.TFORCING_CONFIG_FILE,
    )

    parsers = parser.add_subparsers(
        dest='mode',
        title='run modes',
        metavar='MODE',
        description='run `tforcing {mode} --help` for detailed help',
    )
    parsers.required = True

    # -- shared options
    cond = argparse.ArgumentParser(add_help=False)
    cond.add_argument(
        '-c',
        '--cond',
        required=True,
        help='condition, as a JSON file path or inline JSON',
    )
    oracle = argparse.ArgumentParser(add_help=False)
    oracle.add_argument(
        '-o',
        '--oracle',
        default='identity',
        choices=sorted(forcing.BUILTIN_ORACLES),
        help='built-in dense-set oracle',
    )
    setkind = argparse.ArgumentParser(add_help=False)
    setkind.add_argument(
        '--set',
        dest='setkind',
        choices=[ideals.MN, ideals.NN],
        default=ideals.MN,
        help='which family of sets',
    )
    setkind.add_argument(
        '-n',
        '--n',
        type=_natural,
        default=0,
        help='index of the set',
    )
    seed = argparse.ArgumentParser(add_help=False)
    seed.add_argument(
        '-s',
        '--seed',
        type=int,
        default=None,
        help='random seed (default: SAMPLING SEED parameter)',
    )

    def add(name, helptext, parents=()):
        return parsers.add_parser(name, help=helptext, description=helptext,
                                  parents=list(parents))

    # -- tree core
    sub = add('validate', 'check a condition against the definition', [cond])
    sub.add_argument('--strict', action='store_true', default=False,
                     help='also reject fixed 2s above the stem')
    add('normalize', 'put a condition in canonical form', [cond])
    sub = add('member', 'node membership, or membership in N_n / M_n', [setkind])
    sub.add_argument('-c', '--cond', help='condition, as a JSON file path or inline JSON')
    sub.add_argument('--node', type=_word(3), help='ternary word')
    sub.add_argument('--real', help='eventually periodic real, JSON')
    sub = add('member-set', 'membership of a real in N_n or M_n', [setkind])
    sub.add_argument('--real', required=True, help='eventually periodic real, JSON')
    sub = add('restrict', 'restrict a condition to a node', [cond])
    sub.add_argument('--node', type=_word(3), required=True, help='ternary word')
    sub = add('leq', 'is COND below OTHER (optionally in the k-th fusion order)', [cond])
    sub.add_argument('--other', required=True, help='condition, JSON')
    sub.add_argument('-k', '--k', type=_natural, default=None,
                     help='also require agreement on the first k+1 splitting levels')
    sub = add('meet', 'greatest common extension of two conditions', [cond])
    sub.add_argument('--other', required=True, help='condition, JSON')
    sub = add('antichain', 'condition coding a periodic set of odd levels')
    sub.add_argument('--odd-set', required=True,
                     help='JSON {"table": "10", "tail": "0"}')
    sub = add('branch', 'branch selected at the splitting levels', [cond])
    sub.add_argument('--selector', required=True,
                     help='JSON {"choices": "01", "tail": "2"}')
    sub = add('nodes', 'enumerate the nodes at a given depth', [cond])
    sub.add_argument('-d', '--depth', type=_natural, required=True,
                     help='node length')

    # -- coding and forcing
    sub = add('parity', 'code of an eventually periodic real')
    sub.add_argument('--real', required=True, help='eventually periodic real, JSON')
    add('decided', 'part of the code decided by a condition', [cond])
    sub = add('extend-cohen', 'extend a condition to decide more code digits', [cond])
    sub.add_argument('--sigma', type=_word(2), required=True, help='binary word')
    add('refute-pd', 'two extensions deciding the next code digit oppositely', [cond])
    sub = add('graft', 'copy a condition above the k-th fusion level', [cond])
    sub.add_argument('-k', '--k', type=_natural, required=True)
    sub.add_argument('--pj', required=True, help='condition to copy, JSON')
    sub = add('axiom-a', 'Axiom A refinement with a finite predense set', [cond, oracle])
    sub.add_argument('-k', '--k', type=_natural, default=0)
    sub = add('quasi-pure', 'stem-preserving fusion against an oracle', [cond, oracle])
    sub.add_argument('--stages', type=_natural, default=2)

    # -- ideals
    add('witness', 'refinement avoiding N_n or M_n', [cond, setkind])
    add('comeager-branch', 'branch in the union of the N_n or M_n', [cond, setkind])

    # -- bijections and coding pairs
    sub = add('iso-b', 'length-lexicographic index of a binary word, or its inverse')
    group = sub.add_mutually_exclusive_group(required=True)
    group.add_argument('--word', type=_word(2))
    group.add_argument('--index', type=_natural)
    sub = add('iso-phi', 'increasing sequence coded by a ternary word or real')
    group = sub.add_mutually_exclusive_group(required=True)
    group.add_argument('--word', type=_word(3), help='ternary word ending in 2')
    group.add_argument('--real', help='eventually periodic real in H, JSON')
    sub.add_argument('-n', '--n', type=_natural, default=5,
                     help='entries to compute for --real')
    sub = add('iso-phi-inv', 'ternary word coding an increasing sequence')
    sub.add_argument('--incr', type=_incr, required=True,
                     help='{"incr": [0, 2, 5]}, [0, 2, 5] or 0,2,5')
    sub = add('check-coding-pair', 'test the coding-pair laws on random samples', [seed])
    sub.add_argument('--kind', choices=[k.value for k in coding.PosetKind],
                     default=coding.PosetKind.T.value)
    sub.add_argument('--samples', type=_natural, default=None,
                     help='number of samples (default: SAMPLING SAMPLES parameter)')

    # -- demos
    sub = add('demo', 'scripted end-to-end scenarios', [seed])
    sub.add_argument('name', choices=sorted(demos.DEMOS) + sorted(demos.DEMO_ALIASES))
    sub.add_argument('--pairs', type=_natural, default=None)
    sub.add_argument('--horizon', type=_natural, default=None)
    sub.add_argument('--sigma', type=_word(2), default=None,
                     help='binary word (default: DEMO SIGMA parameter)')
    sub.add_argument('-n', '--n', type=_natural, default=3)
    sub.add_argument('-k', '--k', type=_natural, default=1)
    sub.add_argument('-o', '--oracle', default='next-split-0',
                     choices=sorted(forcing.BUILTIN_ORACLES))
    sub.add_argument('--samples', type=_natural, default=1)

    return parser


# -- run modes ------------------------------------------------------------------

def _cond(args, attr='cond'):
    return io.read_condition(getattr(args, attr))


def _set(args):
    return ideals.IdealSetSpec(args.setkind, args.n)


def run_validate(args, params):
    return tree.validate(_cond(args), strict=args.strict)


def run_normalize(args, params):
    p = _cond(args)
    return tree.normalize(p.stem, p.schedule)


def run_member(args, params):
    if args.real is not None:
        return run_member_set(args, params)
    if args.cond is None or args.node is None:
        raise InputFormatError("member needs --cond and --node, or --real")
    return {'member': tree.member(_cond(args), args.node)}


def run_member_set(args, params):
    z = io.read_real(args.real)
    return {'member': _set(args).contains(z), 'in_h': ideals.member_H(z)}


def run_restrict(args, params):
    return tree.restrict(_cond(args), args.node)


def run_leq(args, params):
    q, p = _cond(args), _cond(args, 'other')
    if args.k is None:
        return {'leq': tree.leq(q, p)}
    return {'leq': tree.leq_n(q, p, args.k), 'k': args.k}


def run_meet(args, params):
    return tree.meet(_cond(args), _cond(args, 'other'))


def run_antichain(args, params):
    return tree.build_antichain_condition(io.read_odd_set(args.odd_set))


def run_branch(args, params):
    return tree.branch(_cond(args), io.read_selector(args.selector))


def run_nodes(args, params):
    nodes = tree.nodes_at_depth(_cond(args), args.depth,
                                limit=params.getint('ORACLE', 'DEPTHLIMIT'))
    return {'depth': args.depth, 'count': len(nodes),
            'nodes': sorted(word_str(t) for t in nodes)}


def run_parity(args, params):
    z = io.read_real(args.real)
    out = io.to_json(coding.parity_tail_analysis(z))
    out['stem_code'] = word_str(coding.phi_star_T(z.prefix))
    return out


def run_decided(args, params):
    return io.word2_json(forcing.decided_cohen_prefix(_cond(args)))


def run_extend_cohen(args, params):
    q = forcing.extend_for_cohen(_cond(args), args.sigma)
    return {'condition': io.to_json(q),
            'decided': word_str(forcing.decided_cohen_prefix(q))}


def run_refute_pd(args, params):
    return forcing.refute_pure_decision(_cond(args))


def run_graft(args, params):
    q = forcing.graft_one(_cond(args), args.k, _cond(args, 'pj'))
    return {'condition': io.to_json(q), 'strict': q.is_strict}


def run_axiom_a(args, params):
    return forcing.axiomA_refine(_cond(args), args.k, forcing.get_oracle(args.oracle))


def run_quasi_pure(args, params):
    return forcing.quasi_pure_refine(_cond(args), args.stages,
                                     forcing.get_oracle(args.oracle))


def run_witness(args, params):
    return _set(args).witness(_cond(args))


def run_comeager_branch(args, params):
    p = _cond(args)
    if args.setkind == ideals.NN:
        return ideals.non2_branch(p)
    return ideals.all_zero_branch(p)


def run_iso_b(args, params):
    if args.word is not None:
        return {'index': coding.iso_b(args.word)}
    return io.word2_json(coding.iso_b_inv(args.index))


def run_iso_phi(args, params):
    if args.word is not None:
        return io.incr_json(coding.iso_phi_prefix(args.word))
    return io.incr_json(coding.iso_phi_real(io.read_real(args.real), args.n))


def run_iso_phi_inv(args, params):
    return {'word': word_str(coding.iso_phi_inv(args.incr))}


def run_check_coding_pair(args, params):
    rng = sampling.get_rng(_seed(args, params))
    count = args.samples
    if count is None:
        count = params.getint('SAMPLING', 'SAMPLES')
    maxsigma = params.getint('SAMPLING', 'MAXSIGMA')
    if args.kind == coding.PosetKind.T.value:
        pair = coding.T_PARITY
        samples = sampling.t_coding_samples(rng, count, maxsigma)
    else:
        pair = hechler.HECHLER_MOD2
        samples = sampling.hechler_coding_samples(
            rng, count, maxsigma, cap=params.getint('HECHLER', 'VALUECAP'))
    report = coding.check_coding_pair(pair, samples)
    if not report.ok:
        logger.warning(f"coding-pair laws broken: {report.laws_broken()}")
    return report


def run_demo(args, params):
    name = demos.DEMO_ALIASES.get(args.name, args.name)
    rng = sampling.get_rng(_seed(args, params))
    limits = params.sampling_kwargs()
    if name == 'antichain':
        pairs = args.pairs if args.pairs is not None else params.getint('DEMO', 'PAIRS')
        horizon = args.horizon if args.horizon is not None else params.getint('DEMO', 'HORIZON')
        result = demos.antichain(rng, pairs=pairs, horizon=horizon)
    elif name == 'cohen-extension':
        sigma = args.sigma if args.sigma is not None else tuple(params.getints('DEMO', 'SIGMA'))
        result = demos.cohen_extension(rng, sigma, samples=args.samples, limits=limits)
    elif name == 'ideal-separation':
        result = demos.ideal_separation(rng, n=args.n, samples=args.samples, limits=limits)
    elif name == 'axiom-a':
        result = demos.axiom_a(rng, k=args.k, oracle=args.oracle,
                               samples=args.samples, limits=limits)
    else:
        result = demos.iso_roundtrip(rng, samples=args.samples)
    result['demo'] = name
    return result


def _seed(args, params):
    if args.seed is not None:
        return args.seed
    return params.getint('SAMPLING', 'SEED')


MODES = {
    'validate': run_validate,
    'normalize': run_normalize,
    'member': run_member,
    'member-set': run_member_set,
    'restrict': run_restrict,
    'leq': run_leq,
    'meet': run_meet,
    'antichain': run_antichain,
    'branch': run_branch,
    'nodes': run_nodes,
    'parity': run_parity,
    'decided': run_decided,
    'extend-cohen': run_extend_cohen,
    'refute-pd': run_refute_pd,
    'graft': run_graft,
    'axiom-a': run_axiom_a,
    'quasi-pure': run_quasi_pure,
    'witness': run_witness,
    'comeager-branch': run_comeager_branch,
    'iso-b': run_iso_b,
    'iso-phi': run_iso_phi,
    'iso-phi-inv': run_iso_phi_inv,
    'check-coding-pair': run_check_coding_pair,
    'demo': run_demo,
}


def load_parameters(path=None):
    """Read parameters from ``path``, or the default file if it exists
    """
    if path is None and const.TFORCING_CONFIG_FILE.is_file():
        path = const.TFORCING_CONFIG_FILE
    if path is None:
        return ForcingParameters()
    return ForcingParameters.from_file(path)


# -- main -----------------------------------------------------------------------

def main(args=None):
    parser = create_parser()
    args = parser.parse_args(args=args)

    # apply verbosity to logger
    log.set_verbosity(args.verbose)
    if args.log_file:
        log.log_to_file(args.log_file)
    logger.debug("Command line args:")
    for arg in vars(args):
        logger.debug(f'{arg} = {str(getattr(args, arg))}')

    try:
        params = load_parameters(args.config_file)
        params.validate()
    except (OSError, ValueError, AssertionError, configparser.Error) as exc:
        parser.error(f"invalid parameters file: {exc}")

    try:
        result = MODES[args.mode](args, params)
    except InputFormatError as exc:
        logger.error(str(exc))
        print(io.dump(exc.to_dict()))
        return 2
    except (ForcingError, OracleContractError) as exc:
        logger.error(str(exc))
        print(io.dump(exc.to_dict()))
        return 1
    print(io.dump(result))
    return 0


if __name__ == '__main__':  # pragma: no cover
    sys.exit(main())
