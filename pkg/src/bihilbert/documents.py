"""
documents - Presentation documents and exact report serialization.

A presentation document is a JSON object::

    {
        "kind": "rees",
        "name": "regular-pair",
        "variables": ["x", "y", "z"],
        "n": 3,
        "r": 2,
        "degrees": [2, 3],
        "generators": ["x^2", "y^3"],
        "colon": [
            {"generators": [], "dim": 3, "mult": 1},
            {"generators": ["x^2"], "dim": 2, "mult": 2}
        ]
    }

For quotients the first ``n`` variables are the x variables and the
remaining ``r`` the y variables. Generators are written with integer or
rational coefficients, ``^`` powers and optional ``*``.
"""
from __future__ import annotations

import csv
import io
import json
import typing
from fractions import Fraction

import sympy
from sympy.parsing.sympy_parser import (convert_xor, implicit_multiplication,
                                        parse_expr, standard_transformations)

from . import constants, utils
from .exceptions import ParseException
from .polynomial import SparsePolynomial
from .presentation import AlgebraPresentation, ColonData

_TRANSFORMATIONS = standard_transformations + (implicit_multiplication, convert_xor)


def _checkTokens(text: str, names: typing.Sequence[str], where: str) -> None:
    known = set(names)
    pos = 0
    depth = 0
    stripped = text.rstrip()
    if not stripped.strip():
        raise ParseException('{}: empty polynomial'.format(where))
    while pos < len(stripped):
        while stripped[pos].isspace():
            pos += 1
        match = constants.POLY_TOKEN_RE.match(stripped, pos)
        if not match or match.end() == pos:
            raise ParseException('{}: column {}: unexpected character {!r}'.format(
                where, pos + 1, stripped[pos]))
        if match.group('name') and match.group('name') not in known:
            raise ParseException('{}: column {}: unknown variable {!r}'.format(
                where, match.start('name') + 1, match.group('name')))
        op = match.group('op')
        if op == '(':
            depth += 1
        elif op == ')':
            depth -= 1
            if depth < 0:
                raise ParseException('{}: column {}: unbalanced ")"'.format(where, match.start('op') + 1))
        pos = match.end()
    if depth:
        raise ParseException('{}: unbalanced "(" in {!r}'.format(where, text))


def parsePolynomial(text: str, names: typing.Sequence[str], where: str = 'polynomial') -> SparsePolynomial:
    """
    Parse a polynomial in the declared variables.

        >>> parsePolynomial('x^2 - 1/2 y z', ['x', 'y', 'z']).toString(['x', 'y', 'z'])
        'x^2 - 1/2*y*z'

    Args:
        text (str):
        names (sequence of str): the only identifiers allowed
        where (str): location prefix for error messages

    Returns:
        SparsePolynomial:

    Raises:
        :class:`bihilbert.exceptions.ParseException`: with the column of the
            offending character
    """
    if not isinstance(text, str):
        raise ParseException('{}: expected a string, got {!r}'.format(where, text))
    _checkTokens(text, names, where)
    symbols = [sympy.Symbol(name) for name in names]
    local = dict(zip(names, symbols))
    try:
        expr = parse_expr(text, local_dict=local, transformations=_TRANSFORMATIONS)
        poly = sympy.Poly(expr, *symbols, domain='QQ') if symbols else \
            sympy.Poly(expr, sympy.Symbol('_'), domain='QQ')
    except (SyntaxError, TypeError, ValueError, sympy.SympifyError, sympy.PolynomialError) as e:
        raise ParseException('{}: cannot parse {!r}: {}'.format(where, text, e)) from e

    if not symbols:
        if poly.degree() > 0:
            raise ParseException('{}: {!r} is not a constant'.format(where, text))
        return SparsePolynomial.constant(utils.toFraction(poly.LC()), 0)
    return SparsePolynomial({monom: utils.toFraction(c) for monom, c in poly.terms()}, len(names))


def _require(doc: typing.Mapping[str, typing.Any], key: str, kind: typing.Any) -> typing.Any:
    if key not in doc:
        raise ParseException('missing field {!r}'.format(key))
    value = doc[key]
    if not isinstance(value, kind) or isinstance(value, bool):
        raise ParseException('field {!r}: expected {}, got {!r}'.format(
            key, getattr(kind, '__name__', kind), value))
    return value


def parseDocument(doc: typing.Mapping[str, typing.Any]
                  ) -> typing.Tuple[AlgebraPresentation, typing.Optional[ColonData]]:
    """
    Build a presentation, and colon data when present, from an already
    decoded document.

    Raises:
        :class:`bihilbert.exceptions.ParseException`:
        :class:`bihilbert.exceptions.GradingException`:
        :class:`bihilbert.exceptions.ColonDataException`:
    """
    if not isinstance(doc, dict):
        raise ParseException('document must be a JSON object')
    kind = _require(doc, 'kind', str)
    if kind not in constants.KINDS:
        raise ParseException('field \'kind\': expected one of {}, got {!r}'.format(constants.KINDS, kind))
    names = _require(doc, 'variables', list)
    for idx, name in enumerate(names):
        if not isinstance(name, str) or not constants.VARIABLE_NAME_RE.match(name):
            raise ParseException('variables[{}]: invalid variable name {!r}'.format(idx, name))
    if len(set(names)) != len(names):
        raise ParseException('field \'variables\': duplicate names')
    n = _require(doc, 'n', int)
    r = _require(doc, 'r', int)
    degrees = _require(doc, 'degrees', list)
    gen_texts = _require(doc, 'generators', list)
    title = doc.get('name', '')

    if len(degrees) != r:
        raise ParseException('field \'degrees\': {} entries for r={}'.format(len(degrees), r))
    for idx, d in enumerate(degrees):
        if not isinstance(d, int) or isinstance(d, bool) or d < 0:
            raise ParseException('degrees[{}]: expected a non-negative integer, got {!r}'.format(idx, d))

    if kind == constants.KIND_REES:
        if len(names) != n:
            raise ParseException('field \'variables\': {} names for n={}'.format(len(names), n))
        if len(gen_texts) != r:
            raise ParseException('field \'generators\': {} generators for r={}'.format(len(gen_texts), r))
    elif len(names) != n + r:
        raise ParseException('field \'variables\': {} names for n+r={}'.format(len(names), n + r))

    gens = [parsePolynomial(text, names, 'generators[{}]'.format(idx))
            for idx, text in enumerate(gen_texts)]
    pres = AlgebraPresentation(kind, n, degrees, gens, names=names, name=title)

    colon = None
    if doc.get('colon') is not None:
        blocks = _require(doc, 'colon', list)
        x_names = names[:n]
        entries = []
        for q, block in enumerate(blocks):
            if not isinstance(block, dict):
                raise ParseException('colon[{}]: expected an object'.format(q))
            texts = block.get('generators', [])
            if not isinstance(texts, list):
                raise ParseException('colon[{}].generators: expected a list'.format(q))
            try:
                dim = _require(block, 'dim', int)
                mult = _require(block, 'mult', int)
            except ParseException as e:
                raise ParseException('colon[{}]: {}'.format(q, e)) from e
            polys = [parsePolynomial(t, x_names, 'colon[{}].generators[{}]'.format(q, i))
                     for i, t in enumerate(texts)]
            entries.append((polys, dim, mult))
        colon = ColonData(n, entries, degrees, names=x_names)
    return pres, colon


def parsePresentation(text: str) -> typing.Tuple[AlgebraPresentation, typing.Optional[ColonData]]:
    """
    Parse a JSON presentation document.

    Args:
        text (str):

    Returns:
        tuple: (AlgebraPresentation, ColonData or None)

    Raises:
        :class:`bihilbert.exceptions.ParseException`: on syntax errors, with
            line and column
        :class:`bihilbert.exceptions.GradingException`: if a generator
            violates the grading
        :class:`bihilbert.exceptions.ColonDataException`: if the colon block
            violates its ordering constraints
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseException('line {} column {}: {}'.format(e.lineno, e.colno, e.msg)) from e
    return parseDocument(doc)


def presentationToDocument(pres: AlgebraPresentation, colon: typing.Optional[ColonData] = None) -> dict:
    """
    The document that :func:`parseDocument` turns back into ``pres``.
    """
    doc: typing.Dict[str, typing.Any] = {
        'kind': pres.kind,
        'name': pres.name,
        'variables': list(pres.names),
        'n': pres.n,
        'r': pres.r,
        'degrees': list(pres.degrees),
        'generators': [g.toString(pres.names) for g in pres.generators],
    }
    if colon is not None:
        doc['colon'] = [
            {'generators': [g.toString(colon.names) for g in entry.generators],
             'dim': entry.dim,
             'mult': entry.mult}
            for entry in colon.entries
        ]
    return doc


def _rational(x: typing.Any) -> typing.Union[int, str]:
    x = Fraction(x)
    if x.denominator == 1:
        return x.numerator
    return '{}/{}'.format(x.numerator, x.denominator)


def _toDocument(value: typing.Any) -> typing.Any:
    # catalog imports this module
    from .catalog import CatalogReport
    from .closedforms import TopCoefficients
    from .diagonal import EmbeddedDegreeCheck, UnivariateFit
    from .oracle import HilbertTable
    from .polyfit import BinomialBasisPolynomial, FitRegion, FitResult, MixedMultReport

    if isinstance(value, MixedMultReport):
        return {'type': 'MixedMultReport', 's': value.s, 'deg_u': value.deg_u,
                'e': list(value.e), 'rho': value.rho}
    if isinstance(value, HilbertTable):
        return {'type': 'HilbertTable', 'name': value.name,
                'cells': [[u, v, value[(u, v)], value.method(u, v)] for (u, v) in value],
                'skipped': [[u, v, reason] for (u, v), reason in sorted(value.skipped.items())]}
    if isinstance(value, BinomialBasisPolynomial):
        return {'type': 'BinomialBasisPolynomial', 'd': value.d,
                'coeffs': [[i, j, _rational(c)] for (i, j), c in sorted(value.coeffs.items())]}
    if isinstance(value, FitRegion):
        return {'type': 'FitRegion', 'd': value.d, 'u0': value.u0, 'v0': value.v0}
    if isinstance(value, FitResult):
        return {'type': 'FitResult', 'polynomial': _toDocument(value.polynomial),
                'region': _toDocument(value.region)}
    if isinstance(value, UnivariateFit):
        return {'type': 'UnivariateFit', 'newton': [_rational(c) for c in value.coeffs],
                'degree': value.degree, 'multiplicity': _rational(value.multiplicity), 'v0': value.v0}
    if isinstance(value, EmbeddedDegreeCheck):
        return {'type': 'EmbeddedDegreeCheck', 'c': value.spec.c, 'e': value.spec.e,
                'fit_multiplicity': _rational(value.fit_multiplicity),
                'formula_value': value.formula_value, 'equal': value.equal,
                'degree': value.degree, 's': value.s, 'degree_matches': value.degree_matches}
    if isinstance(value, TopCoefficients):
        return {'type': 'TopCoefficients', 'degree': value.degree, 'e': list(value.sequence())}
    if isinstance(value, CatalogReport):
        return {'type': 'CatalogReport', 'passed': value.passed,
                'records': [{'name': rec.name, 'passed': rec.passed,
                             'checks': [{'check': c.name, 'passed': c.passed,
                                         'expected': _plain(c.expected), 'actual': _plain(c.actual)}
                                        for c in rec.checks]}
                            for rec in value.records]}
    if isinstance(value, dict):
        return {str(k): _toDocument(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_toDocument(v) for v in value]
    if isinstance(value, Fraction):
        return _rational(value)
    return value


def _plain(value: typing.Any) -> typing.Any:
    if isinstance(value, Fraction):
        return _rational(value)
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    if isinstance(value, dict):
        return {str(k): _plain(v) for k, v in value.items()}
    return value


def _csvRows(doc: typing.Any) -> typing.Tuple[typing.List[str], typing.List[typing.List[typing.Any]]]:
    kind = doc.get('type') if isinstance(doc, dict) else None
    if kind == 'HilbertTable':
        rows = [[u, v, dim] for u, v, dim, _ in doc['cells']]
        rows += [[u, v, ''] for u, v, _ in doc['skipped']]
        return ['u', 'v', 'dim'], sorted(rows, key=lambda row: (row[0], row[1]))
    if kind in ('MixedMultReport', 'TopCoefficients'):
        return ['i', 'e'], [[i, x] for i, x in enumerate(doc['e'])]
    if kind == 'BinomialBasisPolynomial':
        return ['i', 'j', 'coefficient'], doc['coeffs']
    if kind == 'FitResult':
        return ['i', 'j', 'coefficient'], doc['polynomial']['coeffs']
    if kind == 'UnivariateFit':
        return ['j', 'newton'], [[j, c] for j, c in enumerate(doc['newton'])]
    if kind == 'CatalogReport':
        return ['record', 'check', 'passed', 'expected', 'actual'], [
            [rec['name'], c['check'], c['passed'], json.dumps(c['expected']), json.dumps(c['actual'])]
            for rec in doc['records'] for c in rec['checks']]
    if isinstance(doc, dict):
        return ['key', 'value'], [[k, json.dumps(v)] for k, v in doc.items()]
    if isinstance(doc, list):
        return ['index', 'value'], [[i, json.dumps(v)] for i, v in enumerate(doc)]
    return ['value'], [[doc]]


def _text(doc: typing.Any) -> str:
    kind = doc.get('type') if isinstance(doc, dict) else None
    if kind == 'MixedMultReport':
        return 's = {}\ndeg_u = {}\nrho = {}\n'.format(doc['s'], doc['deg_u'], doc['rho']) + \
            ''.join('e_{} = {}\n'.format(i, x) for i, x in enumerate(doc['e']))
    if kind == 'HilbertTable':
        lines = ['H({}, {}) = {}  [{}]'.format(*cell) for cell in doc['cells']]
        lines += ['H({}, {}) skipped: {}'.format(*cell) for cell in doc['skipped']]
        return '\n'.join(lines) + '\n'
    if kind == 'CatalogReport':
        lines = []
        for rec in doc['records']:
            lines.append('{} {}'.format('PASS' if rec['passed'] else 'FAIL', rec['name']))
            for c in rec['checks']:
                if not c['passed']:
                    lines.append('    {}: expected {} got {}'.format(
                        c['check'], json.dumps(c['expected']), json.dumps(c['actual'])))
        passed = sum(1 for rec in doc['records'] if rec['passed'])
        lines.append('{}/{} records passed'.format(passed, len(doc['records'])))
        return '\n'.join(lines) + '\n'
    if isinstance(doc, dict):
        return ''.join('{} = {}\n'.format(k, json.dumps(v)) for k, v in doc.items() if k != 'type')
    return '{}\n'.format(json.dumps(doc))


def emitReport(value: typing.Any, fmt: str = 'json') -> str:
    """
    Serialize a report. Rationals are written as ``"p/q"`` strings and
    integers as JSON numbers; JSON output carries a ``type`` field so that
    :func:`parseReport` can rebuild the value.

        >>> from bihilbert.polyfit import MixedMultReport
        >>> emitReport(MixedMultReport.fromSequence((-6, 0, 1)))
        '{"type": "MixedMultReport", "s": 2, "deg_u": 2, "e": [-6, 0, 1], "rho": 2}'

    Args:
        value: a report object, or plain ints, lists and dicts
        fmt (str): ``'json'``, ``'csv'`` or ``'text'``

    Returns:
        str:
    """
    if fmt not in constants.FORMATS:
        raise ValueError('unknown format {!r}, expected one of {}'.format(fmt, constants.FORMATS))
    doc = _toDocument(value)
    if fmt == 'json':
        return json.dumps(doc)
    if fmt == 'text':
        return _text(doc)
    header, rows = _csvRows(doc)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator='\n')
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _fraction(x: typing.Union[int, str]) -> Fraction:
    try:
        return Fraction(x)
    except (TypeError, ValueError) as e:
        raise ParseException('invalid rational {!r}'.format(x)) from e


def _fromDocument(doc: typing.Any) -> typing.Any:
    from .closedforms import TopCoefficients
    from .diagonal import DiagonalSpec, EmbeddedDegreeCheck, UnivariateFit
    from .oracle import HilbertTable
    from .polyfit import BinomialBasisPolynomial, FitRegion, FitResult, MixedMultReport

    kind = doc.get('type') if isinstance(doc, dict) else None
    if kind == 'MixedMultReport':
        return MixedMultReport(s=doc['s'], deg_u=doc['deg_u'], e=tuple(doc['e']), rho=doc['rho'])
    if kind == 'HilbertTable':
        table = HilbertTable(doc.get('name', ''))
        for u, v, dim, method in doc['cells']:
            table._set(u, v, dim, method)
        for u, v, reason in doc.get('skipped', []):
            table._skip(u, v, reason)
        return table
    if kind == 'BinomialBasisPolynomial':
        return BinomialBasisPolynomial({(i, j): _fraction(c) for i, j, c in doc['coeffs']}, doc['d'])
    if kind == 'FitRegion':
        return FitRegion(doc['d'], doc['u0'], doc['v0'])
    if kind == 'FitResult':
        return FitResult(_fromDocument(doc['polynomial']), _fromDocument(doc['region']))
    if kind == 'UnivariateFit':
        return UnivariateFit(tuple(_fraction(c) for c in doc['newton']), doc['degree'],
                             _fraction(doc['multiplicity']), doc['v0'])
    if kind == 'EmbeddedDegreeCheck':
        return EmbeddedDegreeCheck(DiagonalSpec(doc['c'], doc['e']), _fraction(doc['fit_multiplicity']),
                                   doc['formula_value'], doc['equal'], doc['degree'], doc['s'],
                                   doc['degree_matches'])
    if kind == 'TopCoefficients':
        degree = doc['degree']
        return TopCoefficients(degree, {(i, degree - i): x for i, x in enumerate(doc['e'])})
    if isinstance(doc, dict):
        return {k: _fromDocument(v) for k, v in doc.items()}
    if isinstance(doc, list):
        return [_fromDocument(v) for v in doc]
    return doc


def parseReport(text: str) -> typing.Any:
    """
    Rebuild a value written by :func:`emitReport` in JSON format.

    Raises:
        :class:`bihilbert.exceptions.ParseException`:
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseException('line {} column {}: {}'.format(e.lineno, e.colno, e.msg)) from e
    try:
        return _fromDocument(doc)
    except (KeyError, TypeError, ValueError) as e:
        if isinstance(e, ParseException):
            raise
        raise ParseException('malformed report: {}'.format(e)) from e
