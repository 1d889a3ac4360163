"""
A Python library for exact Hilbert functions, Hilbert polynomials and
mixed multiplicities of bigraded algebras whose y variables carry
non-standard degrees ``deg Y_j = (d_j, 1)``.

**Presentations**

Two kinds of algebra are supported:

* Rees algebras ``A[It]`` of an ideal ``I = (f_1..f_r)`` of ``A = k[x_1..x_n]``
  generated by homogeneous forms of degrees ``d_1..d_r``
* Quotients ``k[X_1..X_n, Y_1..Y_r] / J`` by bihomogeneous ``J``

A presentation is usually read from a JSON document:

.. doctest::

    >>> pres, colon = parsePresentation(
    ...     '{"kind": "rees", "variables": ["x", "y", "z"], "n": 3, "r": 2,'
    ...     ' "degrees": [2, 3], "generators": ["x^2", "y^3"]}')
    >>> pres.degrees
    (2, 3)

**Hilbert functions**

.. doctest::

    >>> H = hilbertFunction(pres)
    >>> H(4, 1), H(5, 2)
    (9, 4)

**Hilbert polynomials and mixed multiplicities**

The polynomial is found by exact interpolation on a grid inside the
region ``u >= d_max v + u0, v >= v0`` and validated on a disjoint grid:

.. doctest::

    >>> fit = fitBivariate(H, pres.dMax, pres.defaultDegreeBound())
    >>> report = extractReport(fit.polynomial)
    >>> report.e
    (-6, 0, 1)

**Closed formulas**

* :func:`prop13Leading` for polynomial rings
* :func:`dseqMixedMult` for Rees algebras of d-sequences
* :func:`regseqMixedMult` for regular sequences
* :func:`minorsMixedMult` for the maximal minors of a generic matrix

The example catalog bundled with the package recomputes every known
value with :func:`runCatalog`, also available as ``bihilbert verify``.
"""

from .constants import KIND_QUOTIENT, KIND_REES
from .exceptions import (BiHilbertException, ColonDataException, GradingException,
                         HypothesisException, MaxSizeException, ParseException,
                         StabilizationException, UnisolventException, UnluckyPrimeException)
from .polynomial import SparsePolynomial
from .presentation import AlgebraPresentation, ColonData
from .oracle import (HilbertTable, cellFunction, gradedQuotientHilbert, hilbertFunction,
                     hilbertPolyRing, hilbertTable, idealPowerComponentDim,
                     quotientBigradedHilbert, quotientPowerHilbert, reesHilbert)
from .polyfit import (BinomialBasisPolynomial, FitRegion, FitResult, MixedMultReport,
                      extractReport, fitBivariate, spotCheck)
from .closedforms import (buildInitialIdeal, dseqHilbert, dseqMixedMult, embeddedDegree,
                          gghHilbert, lemma14Leading, minorsMixedMult, prop13Leading,
                          regseqMixedMult, teissierDseq)
from .diagonal import DiagonalSpec, UnivariateFit, checkEmbeddedDegree, diagonalFit
from .documents import emitReport, parsePolynomial, parsePresentation, parseReport
from .catalog import loadCatalog, runCatalog, verifyRecord
