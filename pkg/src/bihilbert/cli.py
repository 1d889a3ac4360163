"""
cli - The ``bihilbert`` command line surface.

Every command prints one report on stdout; diagnostics go to stderr.
Exit codes: 0 success, 1 no stabilization or failed verification,
2 input error, 3 table cells skipped over the entry cap.
"""
from __future__ import annotations

import argparse
import logging
import sys
import typing

from . import constants
from .__version__ import __version__
from .catalog import loadCatalog, runCatalog
from .closedforms import (dseqCellFunction, dseqMixedMult, embeddedDegree, gghHilbert,
                          lemma14Leading, minorsMixedMult, prop13Leading, regseqMixedMult,
                          teissierDseq)
from .diagonal import DiagonalSpec, checkEmbeddedDegree, diagonalFit
from .documents import emitReport, parsePresentation
from .exceptions import (BiHilbertException, ColonDataException, HypothesisException,
                         MaxSizeException, ParseException, StabilizationException)
from .oracle import hilbertFunction, hilbertTable, quotientPowerHilbert
from .polyfit import MixedMultReport, extractReport, fitBivariate
from .presentation import AlgebraPresentation, ColonData

logger = logging.getLogger(__name__)


def _intList(text: str) -> typing.List[int]:
    try:
        return [int(x) for x in text.split(',') if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError('expected comma separated integers, got {!r}'.format(text))


def _load(path: str) -> typing.Tuple[AlgebraPresentation, typing.Optional[ColonData]]:
    try:
        with open(path, encoding='utf-8') as f:
            text = f.read()
    except OSError as e:
        raise ParseException('{}: {}'.format(path, e.strerror or e)) from e
    try:
        return parsePresentation(text)
    except ParseException as e:
        raise type(e)('{}: {}'.format(path, e)) from e


def _rankOptions(args: argparse.Namespace) -> typing.Dict[str, typing.Any]:
    return dict(exact_rank=args.exact_rank, seed=args.seed, max_entries=args.max_entries)


def _source(args: argparse.Namespace,
            pres: AlgebraPresentation,
            colon: typing.Optional[ColonData]) -> typing.Callable[[int, int], int]:
    opts = _rankOptions(args)
    if args.source == constants.SOURCE_COLON:
        if colon is None:
            raise ParseException('--source colon needs a colon block in the document')
        cell = dseqCellFunction(colon, **opts)
        return lambda u, v: cell(u, v)[0]
    return hilbertFunction(pres, **opts)


def _fit(args: argparse.Namespace):  # type: ignore
    pres, colon = _load(args.input)
    source = _source(args, pres, colon)
    degree_bound = pres.defaultDegreeBound() if args.degree_bound is None else args.degree_bound
    fit = fitBivariate(source, pres.dMax, degree_bound, args.budget)
    return pres, source, degree_bound, fit, extractReport(fit.polynomial)


def _cmdTable(args: argparse.Namespace) -> typing.Tuple[typing.Any, int]:
    pres, colon = _load(args.input)
    opts = _rankOptions(args)
    cell = None
    if args.quotient_power:
        if not pres.isRees:
            raise ParseException('--quotient-power needs a rees presentation')

        def cell(u: int, v: int) -> typing.Tuple[int, str]:
            return quotientPowerHilbert(pres, u, v, **opts), constants.METHOD_RANK
    elif args.source == constants.SOURCE_COLON:
        if colon is None:
            raise ParseException('--source colon needs a colon block in the document')
        cell = dseqCellFunction(colon, **opts)
    table = hilbertTable(pres, range(args.umax + 1), range(args.vmax + 1), cell=cell, **opts)
    code = constants.EXIT_OK if table.isComplete() else constants.EXIT_CELLS_SKIPPED
    return table, code


def _cmdFit(args: argparse.Namespace) -> typing.Tuple[typing.Any, int]:
    _, _, _, fit, report = _fit(args)
    return {'polynomial': fit.polynomial, 'region': fit.region, 'report': report}, constants.EXIT_OK


def _cmdMixedMult(args: argparse.Namespace) -> typing.Tuple[typing.Any, int]:
    return _fit(args)[4], constants.EXIT_OK


def _colonFrom(args: argparse.Namespace) -> ColonData:
    _, colon = _load(args.input)
    if colon is None:
        raise ColonDataException('{}: the document has no colon block'.format(args.input))
    return colon


def _cmdClosedForm(args: argparse.Namespace) -> typing.Tuple[typing.Any, int]:
    kind = args.formula
    if kind == 'prop13':
        return prop13Leading(args.n, args.degrees), constants.EXIT_OK
    if kind == 'lemma14':
        return lemma14Leading(args.leading, args.m, args.degrees), constants.EXIT_OK
    if kind == 'dseq':
        return dseqMixedMult(_colonFrom(args)), constants.EXIT_OK
    if kind == 'regseq':
        return regseqMixedMult(args.n, args.multiplicity, args.degrees, s=args.s), constants.EXIT_OK
    if kind == 'minors':
        return minorsMixedMult(args.r, degree=args.degree), constants.EXIT_OK
    if kind == 'ggh':
        return gghHilbert(args.d1, args.d2, args.u_prime, args.v), constants.EXIT_OK
    if kind == 'teissier':
        return list(teissierDseq(_colonFrom(args))), constants.EXIT_OK
    # embedded-degree
    if args.sequence is not None:
        if args.d_max is None:
            raise ParseException('embedded-degree with --sequence needs --d-max')
        report = MixedMultReport.fromSequence(args.sequence)
        d_max = args.d_max
    else:
        if args.input is None:
            raise ParseException('embedded-degree needs --sequence or --input')
        pres, _, _, _, report = _fit(args)
        d_max = pres.dMax
    return embeddedDegree(report, args.c, args.e, d_max=d_max), constants.EXIT_OK


def _cmdDiagonal(args: argparse.Namespace) -> typing.Tuple[typing.Any, int]:
    pres, source, degree_bound, _, report = _fit(args)
    spec = DiagonalSpec(args.c, args.e)
    fit = diagonalFit(source, spec, degree_bound, args.budget, d_max=pres.dMax)
    comparison = checkEmbeddedDegree(fit, report, spec, d_max=pres.dMax)
    return {'fit': fit, 'comparison': comparison}, constants.EXIT_OK


def _cmdVerify(args: argparse.Namespace) -> typing.Tuple[typing.Any, int]:
    records = loadCatalog(args.catalog)
    try:
        report = runCatalog(records, names=args.records, exact_rank=args.exact_rank,
                            seed=args.seed, initial_umax=args.umax,
                            max_entries=args.max_entries)
    except KeyError as e:
        raise ParseException(str(e.args[0])) from e
    return report, constants.EXIT_OK if report.passed else constants.EXIT_UNSTABLE


def _addCommon(p: argparse.ArgumentParser, needs_input: bool = True) -> None:
    if needs_input:
        p.add_argument('--input', '-i', required=True, help='presentation document (JSON)')
    p.add_argument('--exact-rank', action='store_true',
                   help='skip the modular fast path and eliminate over the rationals')
    p.add_argument('--seed', type=int, default=constants.DEFAULT_SEED,
                   help='seed for modular primes and random validation points')
    p.add_argument('--max-entries', type=int, default=constants.MAX_CELL_ENTRIES,
                   help='per-cell matrix entry cap')
    p.add_argument('--format', '-f', choices=constants.FORMATS, default='json')


def _addFit(p: argparse.ArgumentParser) -> None:
    p.add_argument('--source', choices=constants.SOURCES, default=constants.SOURCE_ORACLE,
                   help='brute-force oracle or the colon decomposition')
    p.add_argument('--degree-bound', type=int, default=None,
                   help='defaults to n-1 (rees) or n+r-2 (quotient)')
    p.add_argument('--budget', type=int, default=constants.DEFAULT_FIT_BUDGET,
                   help='offset increments tried by the stabilization search')


def buildParser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog='bihilbert',
        description='Hilbert functions, Hilbert polynomials and mixed multiplicities '
                    'of bigraded algebras, in exact arithmetic.')
    parser.add_argument('--version', action='version', version='%(prog)s ' + __version__)
    parser.add_argument('-v', '--verbose', action='count', default=0,
                        help='log progress to stderr (-vv for debug)')
    sub = parser.add_subparsers(dest='command', required=True)

    p = sub.add_parser('table', help='dump Hilbert function values')
    _addCommon(p)
    p.add_argument('--umax', type=int, default=8)
    p.add_argument('--vmax', type=int, default=8)
    p.add_argument('--source', choices=constants.SOURCES, default=constants.SOURCE_ORACLE)
    p.add_argument('--quotient-power', action='store_true',
                   help='tabulate dim (A/I^v)_u instead of the Rees algebra')
    p.set_defaults(func=_cmdTable)

    p = sub.add_parser('fit', help='fit the Hilbert polynomial and its region')
    _addCommon(p)
    _addFit(p)
    p.set_defaults(func=_cmdFit)

    p = sub.add_parser('mixedmult', help='mixed multiplicities of the fitted polynomial')
    _addCommon(p)
    _addFit(p)
    p.set_defaults(func=_cmdMixedMult)

    p = sub.add_parser('closedform', help='evaluate a closed formula')
    _addCommon(p, needs_input=False)
    _addFit(p)
    p.add_argument('formula', choices=('prop13', 'lemma14', 'dseq', 'regseq', 'minors',
                                       'ggh', 'teissier', 'embedded-degree'))
    p.add_argument('--input', '-i', help='presentation document for dseq, teissier, embedded-degree')
    p.add_argument('--n', type=int)
    p.add_argument('--m', type=int, help='degree of the univariate polynomial (lemma14)')
    p.add_argument('--leading', type=int, default=1, help='its multiplicity (lemma14)')
    p.add_argument('--degrees', type=_intList, help='comma separated d_1..d_r')
    p.add_argument('--multiplicity', type=int, default=1, help='e(A) (regseq)')
    p.add_argument('--s', type=int, default=None, help='total degree (regseq)')
    p.add_argument('--r', type=int)
    p.add_argument('--degree', type=int, default=None, help='minor degree, defaults to r-1')
    p.add_argument('--d1', type=int)
    p.add_argument('--d2', type=int)
    p.add_argument('--u-prime', type=int)
    p.add_argument('--v', type=int)
    p.add_argument('--c', type=int)
    p.add_argument('--e', type=int)
    p.add_argument('--d-max', type=int, default=None,
                   help='largest generator degree, required with --sequence')
    p.add_argument('--sequence', type=_intList, default=None, help='comma separated e_0..e_s')
    p.set_defaults(func=_cmdClosedForm)

    p = sub.add_parser('diagonal', help='fit the Hilbert polynomial along (c v, e v)')
    _addCommon(p)
    _addFit(p)
    p.add_argument('--c', type=int, required=True)
    p.add_argument('--e', type=int, required=True)
    p.set_defaults(func=_cmdDiagonal)

    p = sub.add_parser('verify', help='recompute the example catalog')
    _addCommon(p, needs_input=False)
    p.add_argument('--catalog', default=None, help='catalog file, defaults to the bundled one')
    p.add_argument('--records', nargs='*', default=None, help='only these record names')
    p.add_argument('--umax', type=int, default=None, help='u range of the initial ideal checks')
    p.set_defaults(func=_cmdVerify, format='text')
    return parser


_REQUIRED = {
    'prop13': ('n', 'degrees'),
    'lemma14': ('m', 'degrees'),
    'dseq': ('input',),
    'regseq': ('n', 'degrees'),
    'minors': ('r',),
    'ggh': ('d1', 'd2', 'u_prime', 'v'),
    'teissier': ('input',),
    'embedded-degree': ('c', 'e'),
}


def main(argv: typing.Optional[typing.Sequence[str]] = None) -> int:
    """
    Run the command line and return the process exit code.
    """
    parser = buildParser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return constants.EXIT_OK if e.code in (0, None) else constants.EXIT_INPUT_ERROR

    level = logging.WARNING
    if args.verbose == 1:
        level = logging.INFO
    elif args.verbose > 1:
        level = logging.DEBUG
    logging.basicConfig(level=level, stream=sys.stderr,
                        format='%(levelname)s %(name)s: %(message)s')

    if args.command == 'closedform':
        missing = [name for name in _REQUIRED[args.formula] if getattr(args, name) is None]
        if missing:
            sys.stderr.write('bihilbert closedform {}: missing {}\n'.format(
                args.formula, ', '.join('--' + m.replace('_', '-') for m in missing)))
            return constants.EXIT_INPUT_ERROR

    try:
        value, code = args.func(args)
    except StabilizationException as e:
        logger.error("%s", e)
        return constants.EXIT_UNSTABLE
    except MaxSizeException as e:
        logger.error("%s", e)
        return constants.EXIT_CELLS_SKIPPED
    except (BiHilbertException, HypothesisException, ValueError) as e:
        logger.error("%s", e)
        return constants.EXIT_INPUT_ERROR

    sys.stdout.write(emitReport(value, args.format))
    if args.format == 'json':
        sys.stdout.write('\n')
    return code


if __name__ == '__main__':
    sys.exit(main())
