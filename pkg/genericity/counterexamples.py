"""
Exhaustive checks of the two groups where generic word lengths fail

The torsion product Z/4 x (Z/2)^k has an open set free of word lengths,
and the Cayley graphs of the virtually cyclic group never satisfy EP.
"""
import logging
from collections import Counter
from typing import List, Optional, Tuple

from tqdm import tqdm

from cayley.construction import cayley_ball, vc_extension_graph
from cayley.extension import ep_witness
from cayley.graphs import VertexTuple, tuples_congruent
from core.conf import budget
from core.exceptions import BudgetExceeded
from core.results import NotFound
from groups.catalog import GroupSpec
from groups.elements import Element, elements, identity, parse_element, power
from groups.generating import GeneratingSet, standard_generators
from lengths.construction import word_length_table
from lengths.tables import constant_table, validate_length_axioms
from .reports import ConstructionReport

logger = logging.getLogger(__name__)


def _inverse_classes(group: GroupSpec) -> List[Tuple[Element, ...]]:
    classes = []
    seen = set()
    for g in elements(group):
        if g.is_identity or g in seen:
            continue
        pair = (g,) if ~g == g else (g, ~g)
        seen.update(pair)
        classes.append(pair)
    return classes


def ex_ab_exhaustive(k: int, show_progress: Optional[bool] = None) -> ConstructionReport:
    """Every word length on Z/4 x (Z/2)^k is at most 2 at g = (2, 0, ..., 0).

    Hence no word length agrees with the constant length 3 at g.
    """
    if k < 1:
        raise ValueError("k must be positive")
    group = GroupSpec.ab_torsion(k)
    g = Element.from_raw(group, (2,) + (0,) * k)
    classes = _inverse_classes(group)
    subsets = 2 ** len(classes)
    cap = budget('SUBSET_CAP')
    if subsets > cap:
        raise BudgetExceeded(
            f"{group.label} has {subsets} symmetric subsets, the cap is {cap}",
            details={'subsets': subsets, 'cap': cap}
        )
    radius = min(group.order - 1, budget('MAX_RADIUS'))
    report = ConstructionReport('ex_ab', inputs={'k': k, 'group': group.label, 'g': g})

    histogram: Counter = Counter()
    too_long, invalid, partial = [], [], []
    skipped = 0
    progress = budget('SHOW_PROGRESS') if show_progress is None else show_progress
    for mask in tqdm(range(subsets), desc=f"subsets of {group.label}", disable=not progress):
        chosen = [h for i, pair in enumerate(classes) if mask >> i & 1 for h in pair]
        X = GeneratingSet.build(group, chosen)
        if not X.is_verified_generating:
            skipped += 1
            continue
        table = word_length_table(X, radius)
        if len(table) != group.order:
            partial.append(X.token)
            continue
        value = table.value(g)
        histogram[value] += 1
        if value not in (1, 2):
            too_long.append(X.token)
        if not validate_length_axioms(table).is_valid:
            invalid.append(X.token)

    generating = sum(histogram.values())
    logger.info(f"✅ {group.label}: {generating} generating sets, {skipped} skipped")
    report.notes.update({
        'order': group.order,
        'inverse_classes': len(classes),
        'subsets': subsets,
        'generating_sets': generating,
        'skipped': skipped,
        'k_X(g)': {str(v): histogram[v] for v in sorted(histogram)},
    })
    report.check('every generating set reaches the whole group', [], partial[:20])
    report.check('k_X(g) is 1 or 2 for every generating set X', [], too_long[:20])
    report.check('every k_X passes the axioms', [], invalid[:20])
    report.check('word lengths equal to 3 at g', 0, histogram[3])
    report.check('the constant length 3 passes the axioms', True,
                 validate_length_axioms(constant_table(group, elements(group), 3)).is_valid)
    return report


def _vc_identity_holds(g: Element, b: Element) -> bool:
    if g.word[1] % 2:
        return g * g == b * b and ~g == ~(~g * b * b)
    return b * g * ~b == ~g and ~g * b == ~(~g * power(b, 3))


def ex_vc_checks(alpha_bound: int = 20, radius: Optional[int] = None) -> ConstructionReport:
    """The identities behind the EP failure and a certificate on a Cayley ball.

    beta odd: g^2 = b^2, so g^-1 = (g^-1 b^2)^-1.
    beta even: b g b^-1 = g^-1, so g^-1 b = (g^-1 b^3)^-1.
    """
    if alpha_bound < 0:
        raise ValueError("alpha_bound must be non-negative")
    group = GroupSpec.vc()
    radius = budget('SEARCH_RADIUS', radius)
    a, b = parse_element(group, 'a'), parse_element(group, 'b')
    report = ConstructionReport('ex_vc', inputs={
        'alpha_bound': alpha_bound, 'radius': radius, 'group': group.label,
    })

    tested, failures = 0, []
    for alpha in range(-alpha_bound, alpha_bound + 1):
        for beta in range(4):
            g = power(a, alpha) * power(b, beta)
            tested += 1
            if not _vc_identity_holds(g, b):
                failures.append(g.token)
    report.notes['elements_tested'] = tested
    report.check('every a^alpha b^beta satisfies its identity', [], failures)

    delta = cayley_ball(word_length_table(standard_generators(group), radius), radius)
    one = identity(group).token
    tokens = [one] + [power(b, i).token for i in (1, 2, 3)]
    m = int(delta.distance(one, tokens[1]))
    gamma = vc_extension_graph(delta, one, tokens[1], m)
    w0 = gamma.meta['extension']['path'][0]
    d = [int(gamma.distance(w0, v)) for v in tokens]
    report.notes.update({'m': m, 'ball_vertices': len(delta), 'w0_distances': d})

    report.check('old distances are preserved', True,
                 gamma.meta['extension']['old_distances_preserved'])
    report.check('d(w0, 1) = 1', 1, d[0])
    report.check('d(w0, 1) < d(w0, b^2)', True, d[0] < d[2])
    report.check('d(w0, b) <= m', True, d[1] <= m)
    report.check('m < d(w0, b^3)', True, m < d[3])
    report.check('(1, b, b^2, b^3) keeps its distances', True,
                 tuples_congruent(VertexTuple(delta, tuple(tokens)),
                                  VertexTuple(gamma, tuple(tokens))))
    witness = ep_witness(delta, tokens, d)
    report.check('no ball vertex has the distances of w0', True, isinstance(witness, NotFound))
    return report
