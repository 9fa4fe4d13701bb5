"""
The characterization of L(1/2,0)⊗L(1/2,0) as a fold over decision steps.

The inputs (c, c̃, dim V₁, dim V₂ and the Griess algebra) are declared
rather than derived: rationality and C₂-cofiniteness are assumed by the
caller, and the pipeline mechanizes what follows from them. Every step
appends a trace entry; a failed hypothesis ends the fold with a verdict.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from django.conf import settings

from algebra.lie import generators_in_window, jacobiator
from algebra.series import eta
from characters.characters import generic_virasoro_character, vacuum_character_w22
from characters.growth import SUPERPOLYNOMIAL, growth_diagnostic
from charges.minimal import SMALLEST_SEARCH_BOUND, is_minimal_charge, solve_sum_one
from core.exceptions import ConsistencyError, DomainError
from core.rationals import format_rational
from griess.classification import RADICAL, classify, ising_module_filter


logger = logging.getLogger(__name__)

ISING_SQUARE = 'isomorphic to L(1/2,0)⊗L(1/2,0)'
GROWTH_CONTRADICTION = 'excluded by growth contradiction'
NOT_MET = 'hypotheses not met: {failure}'

COMMUTATOR_WINDOW = 2


@dataclass(frozen=True)
class TraceEntry:
    step: str
    claim: str
    anchor: str
    outcome: str

    def to_record(self):
        return {'step': self.step, 'claim': self.claim,
                'anchor': self.anchor, 'outcome': self.outcome}


@dataclass(frozen=True)
class PipelineResult:
    verdict: str
    trace: tuple
    modules: tuple = ()

    def to_record(self):
        return {
            'verdict': self.verdict,
            'trace': [entry.to_record() for entry in self.trace],
            'modules': [[format_rational(h1), format_rational(h2)]
                        for h1, h2 in self.modules],
        }


class _Trace(list):
    def record(self, step, claim, anchor, outcome):
        logger.debug('pipeline step %s: %s', step, outcome)
        self.append(TraceEntry(step, claim, anchor, outcome))

    def finish(self, verdict, modules=()):
        return PipelineResult(verdict, tuple(self), tuple(modules))


def _holds(condition):
    return 'holds' if condition else 'fails'


def _growth_outcome(report):
    return '{classification} over n in [{start}, {end}]'.format(
        classification=report.classification,
        start=report.window[0], end=report.window[1])


def _growth_verdict(trace, report):
    if report.classification == SUPERPOLYNOMIAL:
        return trace.finish(GROWTH_CONTRADICTION)
    return trace.finish('inconclusive: growth diagnostic returned {classification}'.format(
        classification=report.classification))


def _radical_branch(trace, verdict, order):
    generators = [g for g in generators_in_window(COMMUTATOR_WINDOW) if not g.is_central]
    triples = list(product(generators, repeat=3))
    failures = sum(1 for a, b, z in triples if len(jacobiator(a, b, z)))
    if failures:
        raise ConsistencyError('{count} Jacobi triples fail'.format(count=failures))
    trace.record(
        'w22-subalgebra',
        'the modes of ω and of the normalized radical vector close on W(2,2)',
        'radical-generates-w22',
        'Jacobi identity holds on {count} triples with |mode| ≤ {window}'.format(
            count=len(triples), window=COMMUTATOR_WINDOW))
    vacuum = vacuum_character_w22(verdict.c, order)
    virasoro = generic_virasoro_character(verdict.c, order)
    if not virasoro.dominated_by(vacuum):
        raise ConsistencyError('the Virasoro vacuum character exceeds ch L(c,0,0)')
    trace.record(
        'virasoro-vacuum-bound',
        'M(c,0)/⟨L₋₁1⟩ spans the L-only monomials of L(c,0,0)',
        'virasoro-vacuum-embedding',
        'coefficient-wise dominated to order {order}'.format(order=order))
    series = eta(order) * vacuum
    report = growth_diagnostic(series.integer_coefficients())
    trace.record(
        'vacuum-character-growth',
        'η·ch L(1,0,0) = (1−q)/∏_{n≥2}(1−qⁿ) must grow polynomially but does not',
        'nonsemisimple-exclusion',
        _growth_outcome(report))
    return _growth_verdict(trace, report)


def _semisimple_branch(trace, verdict, order, bound):
    pairs = [is_minimal_charge(charge) for charge in verdict.charges]
    trace.record(
        'minimal-charges',
        'each cᵢ is a minimal-model charge c_(s,t)',
        'minimal-model-forcing',
        ', '.join('c{i} = {c}: {pair}'.format(
            i=i + 1, c=charge, pair=pair if pair else 'not minimal')
            for i, (charge, pair) in enumerate(zip(verdict.charges, pairs))))
    for charge, pair in zip(verdict.charges, pairs):
        if pair is not None:
            continue
        series = generic_virasoro_character(charge, order).shift(charge / 24)
        report = growth_diagnostic(series.integer_coefficients())
        trace.record(
            'generic-virasoro-growth',
            'q^(c/24)·ch L({c},0) = 1/∏_{{n≥2}}(1−qⁿ) must grow polynomially'.format(
                c=charge),
            'generic-factor-exclusion',
            _growth_outcome(report))
        return _growth_verdict(trace, report)
    solutions = solve_sum_one(bound)
    found = tuple(sorted(pairs))
    trace.record(
        'sum-one-curve',
        'c_(s1,t1) + c_(s2,t2) = 1 has the single solution (3,4), (3,4)',
        'rational-points-of-the-charge-curve',
        'solutions with t ≤ {bound}: {solutions}'.format(
            bound=bound,
            solutions='; '.join('{first}, {second}'.format(first=first, second=second)
                                for first, second in solutions)))
    if found not in solutions:
        raise ConsistencyError('{pairs} add up to 1 but were not found'.format(
            pairs=', '.join(str(pair) for pair in found)))
    modules = ising_module_filter()
    trace.record(
        'ising-module-filter',
        'V is an extension of L(1/2,0)⊗L(1/2,0) by modules of integral weight',
        'integral-weight-modules',
        ', '.join('({h1},{h2})'.format(h1=h1, h2=h2) for h1, h2 in modules))
    return trace.finish(ISING_SQUARE, modules)


def characterization_pipeline(c, c_tilde, dim_v1, dim_v2, algebra,
                              series_order=None, search_bound=None):
    config = settings.CHARACTERIZATION
    order = config['SERIES_ORDER'] if series_order is None else series_order
    bound = config['SEARCH_BOUND'] if search_bound is None else search_bound
    c, c_tilde = Fraction(c), Fraction(c_tilde)
    trace = _Trace()
    hypotheses = (
        ('central-charge', 'c = 1', 'c ≠ 1', c == 1),
        ('effective-central-charge', 'c̃ = 1', 'c̃ ≠ 1', c_tilde == 1),
        ('moonshine-type', 'dim V1 = 0', 'dim V1 ≠ 0', dim_v1 == 0),
        ('griess-dimension', 'dim V2 = 2', 'dim V2 ≠ 2', dim_v2 == 2),
    )
    for step, claim, failure, holds in hypotheses:
        trace.record(step, claim, 'characterization-hypotheses', _holds(holds))
        if not holds:
            return trace.finish(NOT_MET.format(failure=failure))
    if bound < SMALLEST_SEARCH_BOUND:
        trace.record('search-bound', 'the charge search reaches t = {least}'.format(
            least=SMALLEST_SEARCH_BOUND), 'characterization-hypotheses',
            'fails: bound {bound}'.format(bound=bound))
        return trace.finish(NOT_MET.format(failure='search bound < {least}'.format(
            least=SMALLEST_SEARCH_BOUND)))
    try:
        verdict = classify(algebra, c)
    except DomainError as error:
        trace.record('griess-dichotomy', 'V2 is semisimple or has a radical',
                     'griess-dichotomy', str(error))
        return trace.finish(NOT_MET.format(failure='griess-dichotomy'))
    trace.record('griess-dichotomy', 'V2 is semisimple or has a radical',
                 'griess-dichotomy', verdict.label)
    if verdict.kind == RADICAL:
        return _radical_branch(trace, verdict, order)
    return _semisimple_branch(trace, verdict, order, bound)
