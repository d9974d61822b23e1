"""
Executable kernels of the density constructions

Each kernel replaces "choose g outside a finite bad set" by a BFS search
that builds the weight for every candidate and keeps the first one whose
conclusion holds; the accepted weight is then rebuilt from its JSON form
and every window equality is recomputed from scratch.
"""
import logging
from typing import Dict, Iterable, List, Optional, Sequence

from cayley.extension import check_consistent, d_witness_search
from cayley.graphs import as_distance_vector
from core.conf import budget
from core.exceptions import DomainGap, InsufficientDomain, PreconditionFailed
from core.results import NotFoundWithinRadius, VacuouslySatisfied, WitnessAgainst
from groups.elements import Element, identity
from groups.enumeration import ball, iter_ball
from groups.generating import GeneratingSet, standard_generators
from gstar.words import constant, evaluate, x_power
from lengths.comparison import lipschitz_compare
from lengths.construction import conjugate_length, length_from_weight, wm_construction
from lengths.tables import (
    Capped, LengthTable, close_domain, is_bounded_on_domain, level_census,
    validate_length_axioms,
)
from lengths.weights import Constant, ProperRamp, WeightSpec
from .reports import VACUOUS, ConstructionReport

logger = logging.getLogger(__name__)


def _exact_values(t: LengthTable, window: Sequence[Element]) -> Dict[Element, int]:
    missing = [f for f in window if f not in t]
    if missing:
        raise InsufficientDomain(missing, "The window is not inside the table domain")
    values = {f: t.value(f) for f in window}
    capped = [f.token for f, v in values.items() if isinstance(v, Capped)]
    if capped:
        raise DomainGap(
            "The window carries capped values", details={'capped': capped[:50]}
        )
    return values


def _symmetric_window(F: Iterable[Element]) -> List[Element]:
    """F closed under inverses, identity excluded."""
    window = []
    for f in F:
        if f.is_identity:
            raise PreconditionFailed("F must not contain the identity")
        for h in (f, ~f):
            if h not in window:
                window.append(h)
    if not window:
        raise PreconditionFailed("F must not be empty")
    return window


def _generators(group, generators: Optional[GeneratingSet]) -> GeneratingSet:
    return generators if generators is not None else standard_generators(group)


def _recompute(omega: WeightSpec, points: Sequence[Element], cap: int) -> LengthTable:
    fresh = WeightSpec.from_dict(omega.to_dict())
    return length_from_weight(fresh, points, cap)


def lemD_kernel(t: LengthTable, F: Iterable[Element], a: Sequence[Element],
                d: Sequence[int], radius: Optional[int] = None,
                generators: Optional[GeneratingSet] = None,
                debug: bool = False) -> ConstructionReport:
    """Find g and omega_g with l_omega_g in W(l, F) and l_omega_g(g^-1 a_i) = d_i.

    omega_g is d_i on K = {(g^-1 a_i)^+-1}, l on F and
    M = max(l(F) u d) + 1 elsewhere. F is enlarged by A = {a_i^-1 a_j},
    the identity and inverses. Candidates skip B = a_i F unless some
    d_i = 0, in which case a_i is the only candidate.
    """
    group = t.group
    radius = budget('SEARCH_RADIUS', radius)
    X = _generators(group, generators)
    a = tuple(a)
    d = as_distance_vector(d, len(a))
    A = [ai_inv * aj for ai_inv in (~ai for ai in a) for aj in a]
    window = close_domain(group, [*F, *A])
    report = ConstructionReport('lemD', inputs={
        'group': group.label, 'F': window, 'a': list(a), 'd': list(d),
        'radius': radius, 'generators': X.token,
    })
    base = _exact_values(t, window)

    if not check_consistent(t, a, d):
        report.status = VACUOUS
        report.outcome = VacuouslySatisfied(
            "d is not (l, a)-consistent, so l lies in D(a, d) by definition"
        )
        report.check('l lies in D(a, d)', True, True)
        return report

    M = max(list(base.values()) + list(d)) + 1
    B = list(dict.fromkeys(ai * f for ai in a for f in window))
    report.notes['M'] = M
    zero = next((i for i, di in enumerate(d) if di == 0), None)
    if zero is not None:
        # d_i = 0 forces g = a_i; consistency already gives l(a_i^-1 a_j) = d_j
        candidates: Iterable[Element] = [a[zero]]
        excluded = set()
        report.notes['candidates'] = f"g = a_{zero + 1}, forced by d_{zero + 1} = 0"
    else:
        candidates = iter_ball(group, X, radius)
        excluded = set(B)
        report.notes['candidates'] = "ball elements outside B = a_i F, in BFS order"
    checked = 0
    for g in candidates:
        checked += 1
        if g in excluded:
            report.reject(g, "g lies in B = a_i F")
            continue
        g_inv = ~g
        K: Dict[Element, int] = {}
        conflict = False
        for ai, di in zip(a, d):
            k = g_inv * ai
            if k.is_identity:
                continue
            for h in (k, ~k):
                if K.get(h, di) != di:
                    conflict = True
                K[h] = di
        if conflict:
            report.reject(g, "K carries two weights on one element")
            continue

        mapping = {f: v for f, v in base.items() if not f.is_identity}
        mapping.update(K)
        omega = WeightSpec.build(group, mapping, Constant(M))
        lw = length_from_weight(omega, window + list(K), M)
        bad = next((f for f in window if lw.value(f) != base[f]), None)
        if bad is not None:
            report.reject(g, f"l_omega({bad.token}) = {lw.value(bad)} != {base[bad]}")
            continue
        short = next((i for i, ai in enumerate(a) if lw.value(g_inv * ai) != d[i]), None)
        if short is not None:
            report.reject(g, f"l_omega(g^-1 a_{short + 1}) != {d[short]}")
            continue
        report.accept(g, omega)
        break
    else:
        logger.info(f"⚠️ lemD: no witness within radius {radius} after {checked} candidates")
        report.not_found(NotFoundWithinRadius(radius, checked))
        return report

    logger.info(f"✅ lemD witness {g.token} after {checked} candidates")
    recomputed = _recompute(omega, window + [g_inv * ai for ai in a], M)
    for f in window:
        report.check(f"l_omega({f.token}) = l({f.token})", base[f], recomputed.value(f))
    for i, (ai, di) in enumerate(zip(a, d), start=1):
        report.check(f"l_omega(g^-1 a_{i}) = d_{i}", di, recomputed.value(g_inv * ai))
    report.check('g is a D(a, d) witness for l_omega', g,
                 d_witness_search(recomputed, a, d, [g]))
    report.check('l_omega passes the axioms on its domain', True,
                 validate_length_axioms(recomputed).is_valid)
    if debug and zero is None:
        _check_lemD_I1(report, g, B)
    return report


def _check_lemD_I1(report: ConstructionReport, g: Element, B: Iterable[Element]):
    """Materialize I1 = {x b^-1 : b in B} and evaluate it at g."""
    group = g.group
    words = [x_power(group) * constant(~b) for b in B]
    solved = [w.text for w in words if evaluate(w, g).is_identity]
    report.notes['I1_size'] = len(words)
    report.check('g solves no equation of I1', [], solved)


def tt_kernel(t0: LengthTable, t1: LengthTable, F: Iterable[Element],
              radius: Optional[int] = None,
              generators: Optional[GeneratingSet] = None,
              debug: bool = False) -> ConstructionReport:
    """Find g and omega with l_omega in W(l0, F) and g^-1 o l_omega in W(l1, F).

    Candidates need F^(g^-1) = {g f g^-1} disjoint from F. omega is l0 on F,
    l1(g^-1 a g) on F^(g^-1) and N + 1 elsewhere, N the largest value of
    l0 and l1 on F.
    """
    group = t0.group
    radius = budget('SEARCH_RADIUS', radius)
    X = _generators(group, generators)
    window = _symmetric_window(F)
    report = ConstructionReport('tt', inputs={
        'group': group.label, 'F': window, 'radius': radius, 'generators': X.token,
    })
    values0 = _exact_values(t0, window)
    values1 = _exact_values(t1, window)
    N = max(list(values0.values()) + list(values1.values()))
    report.notes['N'] = N
    window_set = set(window)

    checked = 0
    for g in iter_ball(group, X, radius):
        checked += 1
        g_inv = ~g
        moved = {g * f * g_inv: f for f in window}
        if window_set & set(moved):
            report.reject(g, "F^(g^-1) meets F")
            continue

        mapping = dict(values0)
        mapping.update({m: values1[f] for m, f in moved.items()})
        omega = WeightSpec.build(group, mapping, Constant(N + 1))
        lw = length_from_weight(omega, window + list(moved), N + 1)
        bad = next((f for f in window if lw.value(f) != values0[f]), None)
        if bad is not None:
            report.reject(g, f"l_omega({bad.token}) != l0({bad.token})")
            continue
        bad = next((f for f, m in zip(window, moved) if lw.value(m) != values1[f]), None)
        if bad is not None:
            report.reject(g, f"(g^-1 o l_omega)({bad.token}) != l1({bad.token})")
            continue
        report.accept(g, omega)
        break
    else:
        logger.info(f"⚠️ tt: no witness within radius {radius} after {checked} candidates")
        report.not_found(NotFoundWithinRadius(radius, checked))
        return report

    logger.info(f"✅ tt witness {g.token} after {checked} candidates")
    recomputed = _recompute(omega, window + list(moved), N + 1)
    shifted = conjugate_length(g_inv, recomputed, domain=window)
    for f in window:
        report.check(f"l_omega({f.token}) = l0({f.token})", values0[f], recomputed.value(f))
        report.check(f"(g^-1 o l_omega)({f.token}) = l1({f.token})",
                     values1[f], shifted.value(f))
    report.check('l_omega passes the axioms on its domain', True,
                 validate_length_axioms(recomputed).is_valid)
    if debug:
        _check_tt_I1(report, g, window)
    return report


def _check_tt_I1(report: ConstructionReport, g: Element, window: Sequence[Element]):
    """Materialize I1 = {f^-1 x h x^-1 : f, h in F} and evaluate it at g."""
    group = g.group
    words = [constant(~f) * x_power(group) * constant(h) * x_power(group, -1)
             for f in window for h in window]
    solved = [w.text for w in words if evaluate(w, g).is_identity]
    report.notes['I1_size'] = len(words)
    report.check('g solves no equation of I1', [], solved)


def word_length_descent_kernel(t: LengthTable, g: Element, F: Iterable[Element],
                               radius: Optional[int] = None,
                               generators: Optional[GeneratingSet] = None
                               ) -> ConstructionReport:
    """Density of C(g): a length in W(l, F u {g}) with h, l(h) = l(g) - 1, l(h^-1 g) = 1."""
    if g.is_identity:
        raise PreconditionFailed("C(g) is defined for g != 1")
    value = t.value(g)
    if isinstance(value, Capped):
        raise DomainGap(f"l({g.token}) is only known to exceed {value.cap}")
    one = identity(t.group)

    report = lemD_kernel(t, [*F, g], (one, g), (value - 1, 1), radius, generators)
    report.kernel = 'word_length_descent'
    report.inputs['g'] = g
    if report.witness is None:
        return report

    h = report.witness
    M = report.weight.default.value
    lw = _recompute(report.weight, [g, h, ~h * g], M)
    report.check('l_omega(g) = l(g)', value, lw.value(g))
    report.check('l_omega(h) = l(g) - 1', value - 1, lw.value(h))
    report.check('l_omega(h^-1 g) = 1', 1, lw.value(~h * g))
    return report


def dense_bounded_proper_kernel(t: LengthTable, F: Iterable[Element],
                                radius: Optional[int] = None,
                                generators: Optional[GeneratingSet] = None,
                                cap: Optional[int] = None) -> ConstructionReport:
    """A bounded and a proper length function in W(l, F).

    Defaults: Constant(max l(F) + 1) and the ramp max l(F) + i, evaluated
    on F and the radius ball.
    """
    group = t.group
    radius = budget('SEARCH_RADIUS', radius)
    X = _generators(group, generators)
    window = close_domain(group, F)
    base = _exact_values(t, window)
    top = max(base.values())
    domain = window + [h for h in ball(group, X, radius) if h not in base]
    ramp_cap = min(cap or top + radius, budget('RAMP_CAP_LIMIT'))
    report = ConstructionReport('dense_bounded_proper', inputs={
        'group': group.label, 'F': window, 'radius': radius,
        'generators': X.token, 'cap': ramp_cap,
    })

    bounded_weight = wm_construction(t, window, Constant(top + 1))
    bounded = length_from_weight(bounded_weight, domain, top + 1)
    for f in window:
        report.check(f"bounded l({f.token}) = l({f.token})", base[f], bounded.value(f))
    bound = is_bounded_on_domain(bounded, top + 1)
    report.check(f"bounded length stays <= {top + 1} on the window",
                 'BoundedByCOnDomain', bound.kind)

    proper_weight = wm_construction(t, window, ProperRamp(top))
    proper = length_from_weight(proper_weight, domain, ramp_cap)
    for f in window:
        report.check(f"proper l({f.token}) = l({f.token})", base[f], proper.value(f))
    report.check('proper length has complete levels up to max l(F)', True,
                 proper.complete_below >= top)
    report.weight = proper_weight
    report.notes['bounded_weight'] = bounded_weight.to_dict()
    report.notes['proper_census'] = level_census(proper)
    return report


def incomparability_kernel(t1: LengthTable, t2: LengthTable, F: Iterable[Element],
                           C: int, radius: Optional[int] = None,
                           generators: Optional[GeneratingSet] = None
                           ) -> ConstructionReport:
    """An unbounded k1 in W(l1, F), a bounded k2 in W(l2, F) and g with k1(g) > C k2(g)."""
    group = t1.group
    radius = budget('SEARCH_RADIUS', radius)
    X = _generators(group, generators)
    window = close_domain(group, F)
    base1 = _exact_values(t1, window)
    base2 = _exact_values(t2, window)
    top1, top2 = max(base1.values()), max(base2.values())
    domain = window + [h for h in ball(group, X, radius) if h not in base1]
    cap1 = min(max(top1 + radius, C * (top2 + 1) + 1), budget('RAMP_CAP_LIMIT'))
    report = ConstructionReport('incomparability', inputs={
        'group': group.label, 'F': window, 'C': C, 'radius': radius,
        'generators': X.token,
    })

    k1 = length_from_weight(wm_construction(t1, window, ProperRamp(top1)), domain, cap1)
    k2 = length_from_weight(wm_construction(t2, window, Constant(top2 + 1)), domain, top2 + 1)
    for f in window:
        report.check(f"k1({f.token}) = l1({f.token})", base1[f], k1.value(f))
        report.check(f"k2({f.token}) = l2({f.token})", base2[f], k2.value(f))

    comparison = lipschitz_compare(k1, k2, C)
    if not isinstance(comparison, WitnessAgainst):
        report.not_found(NotFoundWithinRadius(radius, comparison.checked))
        return report
    report.accept(comparison.element)
    report.notes['k1'] = comparison.left
    report.notes['k2'] = comparison.right
    report.check(f"k1(g) > {C} k2(g)", True,
                 _exceeds(k1.value(comparison.element), C, k2.value(comparison.element)))
    return report


def _exceeds(left, C: int, right) -> bool:
    low = left.cap + 1 if isinstance(left, Capped) else left
    return low > C * right
