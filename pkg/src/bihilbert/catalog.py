"""
catalog - Worked examples with known answers, and the verification run
that recomputes and compares every expected field.
"""
from __future__ import annotations

import dataclasses
import json
import logging
import os
import typing
from fractions import Fraction

from . import constants
from .closedforms import (buildInitialIdeal, dseqCellFunction, dseqHilbert, dseqMixedMult,
                          gghHilbert, minorsMixedMult, prop13Leading, regseqMixedMult, teissierDseq)
from .diagonal import DiagonalSpec, checkEmbeddedDegree, diagonalFit
from .documents import parseDocument
from .exceptions import BiHilbertException, MaxSizeException
from .oracle import hilbertFunction, hilbertPolyRing, quotientPowerHilbert
from .polyfit import MixedMultReport, extractReport, fitBivariate, spotCheck
from .presentation import AlgebraPresentation, ColonData

logger = logging.getLogger(__name__)

CATALOG_PATH = os.path.join(os.path.dirname(__file__), 'data', 'catalog.json')


@dataclasses.dataclass
class ExampleRecord:
    name: str
    presentation: AlgebraPresentation
    colon: typing.Optional[ColonData] = None
    expected: typing.Dict[str, typing.Any] = dataclasses.field(default_factory=dict)
    fit: typing.Dict[str, typing.Any] = dataclasses.field(default_factory=dict)
    checks: typing.Dict[str, typing.Any] = dataclasses.field(default_factory=dict)
    note: str = ''

    def __post_init__(self) -> None:
        exp = self.expected
        if 'rdim' in exp and 's' in exp and exp['s'] != exp['rdim'] - 2:
            raise BiHilbertException('{}: expected s={} but rdim={}'.format(self.name, exp['s'], exp['rdim']))
        if 'x_dim' in exp and 'deg_u' in exp and exp['deg_u'] != exp['x_dim'] - 1:
            raise BiHilbertException('{}: expected deg_u={} but x_dim={}'.format(
                self.name, exp['deg_u'], exp['x_dim']))
        if self.fit.get('source', constants.SOURCE_ORACLE) == constants.SOURCE_COLON and self.colon is None:
            raise BiHilbertException('{}: colon-sourced fit without colon data'.format(self.name))


@dataclasses.dataclass
class CheckResult:
    name: str
    expected: typing.Any
    actual: typing.Any

    @property
    def passed(self) -> bool:
        return self.expected == self.actual


@dataclasses.dataclass
class RecordResult:
    name: str
    checks: typing.List[CheckResult] = dataclasses.field(default_factory=list)
    report: typing.Optional[MixedMultReport] = None

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def check(self, name: str, expected: typing.Any, actual: typing.Any) -> bool:
        result = CheckResult(name, expected, actual)
        self.checks.append(result)
        if not result.passed:
            logger.warning("%s: %s expected %r, got %r", self.name, name, expected, actual)
        return result.passed


@dataclasses.dataclass
class CatalogReport:
    records: typing.List[RecordResult]

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.records)

    def failures(self) -> typing.List[typing.Tuple[str, CheckResult]]:
        return [(r.name, c) for r in self.records for c in r.checks if not c.passed]


def recordFromDocument(doc: typing.Mapping[str, typing.Any]) -> ExampleRecord:
    """
    Build an :class:`ExampleRecord` from one catalog entry.
    """
    pres, colon = parseDocument(doc['presentation'])
    return ExampleRecord(
        name=doc.get('name') or pres.name,
        presentation=pres,
        colon=colon,
        expected=dict(doc.get('expected', {})),
        fit=dict(doc.get('fit', {})),
        checks=dict(doc.get('checks', {})),
        note=doc.get('note', ''),
    )


def loadCatalog(path: typing.Optional[str] = None) -> typing.List[ExampleRecord]:
    """
    Load the catalog shipped with the package, or the file at ``path``.
    """
    with open(path or CATALOG_PATH, encoding='utf-8') as f:
        docs = json.load(f)
    return [recordFromDocument(doc) for doc in docs]


def _fraction(x: Fraction) -> typing.Union[int, str]:
    return x.numerator if x.denominator == 1 else '{}/{}'.format(x.numerator, x.denominator)


def verifyRecord(record: ExampleRecord,
                 exact_rank: bool = False,
                 seed: int = constants.DEFAULT_SEED,
                 initial_umax: typing.Optional[int] = None,
                 max_entries: int = constants.MAX_CELL_ENTRIES) -> RecordResult:
    """
    Recompute one record: table values, the fitted polynomial and its
    mixed multiplicities, then every closed form, diagonal and identity
    the record asks for.
    """
    result = RecordResult(record.name)
    pres, colon, exp = record.presentation, record.colon, record.expected
    opts = dict(exact_rank=exact_rank, seed=seed, max_entries=max_entries)
    oracle = hilbertFunction(pres, **opts)

    if 'rdim' in exp and 's' in exp:
        result.check('s = rdim - 2', exp['rdim'] - 2, exp['s'])
    if 'x_dim' in exp and 'deg_u' in exp:
        result.check('deg_u = x_dim - 1', exp['x_dim'] - 1, exp['deg_u'])

    try:
        for u, v, dim in exp.get('values', []):
            result.check('H({}, {})'.format(u, v), dim, oracle(u, v))
        _verifyFit(record, result, oracle, opts, seed)
        _verifyIdentities(record, result, oracle, opts, initial_umax)
    except (MaxSizeException, BiHilbertException) as e:
        result.check('computation', 'completed', str(e))
    return result


def _verifyFit(record: ExampleRecord,
               result: RecordResult,
               oracle: typing.Callable[[int, int], int],
               opts: typing.Dict[str, typing.Any],
               seed: int) -> None:
    pres, colon, exp, checks = record.presentation, record.colon, record.expected, record.checks

    if record.fit.get('source', constants.SOURCE_ORACLE) == constants.SOURCE_COLON:
        cell = dseqCellFunction(colon, **opts)

        def source(u: int, v: int) -> int:
            return cell(u, v)[0]
    else:
        source = oracle

    degree_bound = record.fit.get('degree_bound', pres.defaultDegreeBound())
    budget = record.fit.get('budget', constants.DEFAULT_FIT_BUDGET)
    fit = fitBivariate(source, pres.dMax, degree_bound, budget)
    report = extractReport(fit.polynomial)
    result.report = report

    for key in ('s', 'deg_u', 'rho'):
        if key in exp:
            result.check(key, exp[key], getattr(report, key))
    if 'e' in exp:
        result.check('e', list(exp['e']), list(report.e))
    if 'region' in exp:
        result.check('region', list(exp['region']), [fit.region.u0, fit.region.v0])
    result.check('e_rho > 0', True, report.isPositive())
    if pres.isRees:
        result.check('deg_u = s', report.s, report.deg_u)
        result.check('e_s', 1, report.e[-1] if report.e else None)

    spots = record.fit.get('spot_checks', constants.SPOT_CHECK_POINTS)
    if spots:
        mismatches = spotCheck(source, fit, degree_bound, spots, seed)
        result.check('spot check', [], [[u, v, h, _fraction(p)] for u, v, h, p in mismatches])

    forms = checks.get('closed_forms', {})
    if forms.get('prop13'):
        result.check('prop13', list(prop13Leading(pres.n, pres.degrees).sequence()), list(report.e))
    if forms.get('dseq'):
        result.check('dseq', list(dseqMixedMult(colon).e), list(report.e))
    if 'regseq' in forms:
        args = forms['regseq']
        result.check('regseq', list(regseqMixedMult(args['n'], args['multiplicity'], pres.degrees).e),
                     list(report.e))
    if 'minors' in forms:
        args = forms['minors']
        result.check('minors', list(minorsMixedMult(args['r'], args.get('degree')).e), list(report.e))
    if 'teissier' in checks:
        result.check('teissier', list(checks['teissier']), list(teissierDseq(colon)))

    degree_bound_diag = record.fit.get('diagonal_degree_bound', degree_bound)
    for c, e, multiplicity in checks.get('diagonals', []):
        spec = DiagonalSpec(c, e)
        diag = diagonalFit(source, spec, degree_bound_diag, budget, d_max=pres.dMax)
        compared = checkEmbeddedDegree(diag, report, spec, d_max=pres.dMax)
        label = 'diagonal ({}, {})'.format(c, e)
        result.check(label + ' multiplicity', multiplicity, _fraction(diag.multiplicity))
        result.check(label + ' embedded degree', multiplicity, compared.formula_value)
        result.check(label + ' degree', report.s, diag.degree)


def _verifyIdentities(record: ExampleRecord,
                      result: RecordResult,
                      oracle: typing.Callable[[int, int], int],
                      opts: typing.Dict[str, typing.Any],
                      initial_umax: typing.Optional[int]) -> None:
    pres, colon, checks = record.presentation, record.colon, record.checks

    grid = checks.get('initial_ideal')
    if grid and colon is not None:
        umax = grid['umax'] if initial_umax is None else initial_umax
        initial = hilbertFunction(buildInitialIdeal(colon), **opts)
        mismatches = []
        for v in range(grid['vmax'] + 1):
            for u in range(umax + 1):
                values = (oracle(u, v), dseqHilbert(colon, u, v, **opts), initial(u, v))
                if len(set(values)) > 1:
                    mismatches.append([u, v] + list(values))
        result.check('initial ideal u<={} v<={}'.format(umax, grid['vmax']), [], mismatches)

    grid = checks.get('quotient_power')
    if grid and pres.isRees:
        mismatches = []
        for v in range(grid['vmax'] + 1):
            for u in range(grid['umax'] + 1):
                lhs = quotientPowerHilbert(pres, u, v, **opts)
                rhs = hilbertPolyRing(pres.n, u) - oracle(u, v)
                if lhs != rhs:
                    mismatches.append([u, v, lhs, rhs])
        result.check('quotient power', [], mismatches)

    ggh = checks.get('ggh')
    if ggh:
        d1, d2 = ggh['d1'], ggh['d2']
        mismatches = []
        for v in range(ggh['vmax'] + 1):
            for u_prime in range(1, ggh['u_prime_max'] + 1):
                closed = gghHilbert(d1, d2, u_prime, v)
                counted = oracle(u_prime + d2 * v, v)
                if closed != counted:
                    mismatches.append([u_prime, v, closed, counted])
        result.check('ggh', [], mismatches)


def runCatalog(records: typing.Optional[typing.Sequence[ExampleRecord]] = None,
               names: typing.Optional[typing.Collection[str]] = None,
               exact_rank: bool = False,
               seed: int = constants.DEFAULT_SEED,
               initial_umax: typing.Optional[int] = None,
               max_entries: int = constants.MAX_CELL_ENTRIES) -> CatalogReport:
    """
    Verify catalog records and aggregate the results. A mismatch is
    recorded as a failed check with both values, and a record whose
    computation fails gets a failed "computation" check; neither is raised.

    Args:
        records (sequence of ExampleRecord): defaults to :func:`loadCatalog`
        names (collection of str): restrict the run to these records
        exact_rank (bool): force rational elimination
        seed (int):
        initial_umax (int): override the u range of initial ideal checks
        max_entries (int): per-cell matrix entry cap

    Returns:
        CatalogReport:

    Raises:
        KeyError: if a requested name is not in the catalog
    """
    if records is None:
        records = loadCatalog()
    if names:
        known = {r.name for r in records}
        missing = sorted(set(names) - known)
        if missing:
            raise KeyError('unknown catalog records: {}'.format(', '.join(missing)))
        records = [r for r in records if r.name in names]

    results = []
    by_name = {}
    for record in records:
        logger.info("verifying %s", record.name)
        res = verifyRecord(record, exact_rank=exact_rank, seed=seed, initial_umax=initial_umax,
                           max_entries=max_entries)
        results.append(res)
        by_name[record.name] = res

    for record, res in zip(records, results):
        other = record.expected.get('same_e_as')
        if other and other in by_name and res.report and by_name[other].report:
            res.check('same e as {}'.format(other), list(by_name[other].report.e), list(res.report.e))
    return CatalogReport(results)
