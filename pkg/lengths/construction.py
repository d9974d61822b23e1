"""
Length tables built from weights, generating sets and the conjugation action
"""
import logging
from functools import lru_cache
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

from core.conf import budget
from core.exceptions import (
    BudgetExceeded, CapTooSmall, DefaultTooSmall, EmptyDomain,
    InsufficientDomain, PreconditionFailed,
)
from core.results import NoDecomposition, NotWordLengthOnDomain, WordLength
from groups.elements import Element, conjugate, identity
from groups.enumeration import ball_layers
from groups.generating import GeneratingSet
from .shortest_paths import iter_dijkstra
from .tables import Capped, LengthTable, Value, close_domain
from .weights import Constant, DefaultRule, WeightSpec

logger = logging.getLogger(__name__)


def _settle(omega: WeightSpec, steps: Sequence[Tuple[Element, int]],
            domain: Sequence[Element], cutoff: int) -> Tuple[Dict[Element, int], int]:
    """Distances of domain points within cutoff, plus the complete level.

    Dijkstra settles by nondecreasing distance, so the first settled point
    outside the domain bounds the levels the domain holds completely.
    """
    pending = set(domain)
    found: Dict[Element, int] = {}
    complete = None
    for node, cost in iter_dijkstra(identity(omega.group), steps, cutoff):
        if node in pending:
            found[node] = cost
            pending.discard(node)
        elif complete is None:
            complete = cost - 1
        if not pending and complete is not None:
            break
    if complete is None:
        complete = cutoff
    return found, complete


def length_from_weight(omega: WeightSpec, domain: Iterable[Element], cap: int,
                       exact: bool = False) -> LengthTable:
    """l_omega on domain: the cheapest decomposition into weighted factors.

    Constant(M): l = min(d_supp, M), with d_supp the Dijkstra distance over
    support generators; a single off-support factor reaches anything at cost M.
    ProperRamp: Dijkstra over {h : omega(h) <= cap}, exact up to cap.
    Values above cap become Capped(cap).
    """
    if cap < 1:
        raise ValueError("cap must be positive")
    group = omega.group
    ordered = close_domain(group, domain)

    if isinstance(omega.default, Constant):
        M = omega.default.value
        cutoff = min(M - 1, cap)
        found, complete = _settle(omega, omega.support, ordered, cutoff)
        fallback: Value = M if M <= cap else Capped(cap)
    else:
        limit = budget('RAMP_CAP_LIMIT')
        if cap > limit:
            raise BudgetExceeded(
                f"Ramp weights need cap <= {limit}, got {cap}",
                details={'cap': cap, 'limit': limit}
            )
        found, complete = _settle(omega, omega.light_elements(cap), ordered, cap)
        fallback = Capped(cap)

    values = {g: found.get(g, fallback) for g in ordered}
    if group.is_finite and len(ordered) == group.order:
        complete = max(complete, max(
            (v for v in values.values() if isinstance(v, int)), default=0
        ))

    capped = [g for g in ordered if isinstance(values[g], Capped)]
    if exact and capped:
        raise CapTooSmall(
            f"{len(capped)} domain values exceed cap {cap}",
            details={'capped': [g.token for g in capped[:50]], 'cap': cap}
        )
    logger.debug(
        f"🔍 l_omega on {len(ordered)} points of {group.label}, "
        f"{len(capped)} capped, complete below {complete}"
    )
    return LengthTable(
        group, tuple(ordered), values, exact_radius=0, complete_below=complete,
        meta={'weight': omega.to_dict(), 'cap': cap}
    )


@lru_cache(maxsize=256)
def _products(candidates: Tuple[Tuple[Element, int], ...], group,
              max_factors: int) -> Dict[Element, int]:
    best: Dict[Element, int] = {identity(group): 0}
    layer: Dict[Element, int] = {identity(group): 0}
    for _ in range(max_factors):
        following: Dict[Element, int] = {}
        for product, cost in layer.items():
            for x, w in candidates:
                g = product * x
                total = cost + w
                if total < following.get(g, total + 1):
                    following[g] = total
        for g, total in following.items():
            if total < best.get(g, total + 1):
                best[g] = total
        layer = following
    return best


def brute_force_length(omega: WeightSpec, g: Element, max_factors: int,
                       cap: Optional[int] = None) -> Union[int, NoDecomposition]:
    """Exhaustive minimum over products of at most max_factors light factors.

    The candidates are the support and ramp elements of weight <= cap
    together with g itself when omega(g) <= cap; cap defaults to the largest
    of omega(g) and the support weights.
    """
    if not 1 <= max_factors <= 5:
        raise ValueError("brute_force_length handles 1 to 5 factors")
    if g.is_identity:
        return 0
    own = omega.weight(g)
    if cap is None:
        cap = max([own] + [w for _, w in omega.support])

    if isinstance(omega.default, Constant):
        candidates = [(h, w) for h, w in omega.support if w <= cap]
    else:
        candidates = omega.light_elements(cap)
    best = _products(tuple(candidates), omega.group, max_factors)

    options = []
    if g in best:
        options.append(best[g])
    if own <= cap:
        options.append(own)
    if not options:
        return NoDecomposition(max_factors, cap)
    return min(options)


def word_length_table(generators: GeneratingSet, radius: int) -> LengthTable:
    """BFS word length on the radius ball; exact there and complete below radius."""
    layers = ball_layers(generators.group, generators, radius)
    values = {g: n for n, layer in enumerate(layers) for g in layer}
    domain = tuple(g for layer in layers for g in layer)
    return LengthTable(
        generators.group, domain, values, exact_radius=radius,
        complete_below=radius,
        meta={'generators': [x.token for x in generators]}
    )


def wm_construction(base: LengthTable, F: Iterable[Element],
                    default: DefaultRule) -> WeightSpec:
    """omega = l on F minus the identity, default elsewhere.

    The default has to exceed max l(F): M > max for Constant(M) and
    M0 + 1 > max for ProperRamp(M0), whose smallest value is M0 + 1.
    """
    window = close_domain(base.group, F)
    missing = [f for f in window if f not in base]
    if missing:
        raise InsufficientDomain(missing, "F is not inside the base domain")
    values = {f: base.value(f) for f in window}
    if any(isinstance(v, Capped) for v in values.values()):
        raise PreconditionFailed("F carries capped values")

    top = max(values.values())
    smallest = default.value if isinstance(default, Constant) else default.base + 1
    if smallest <= top:
        raise DefaultTooSmall(
            f"Default weight {smallest} must exceed max l(F) = {top}",
            details={'default': default.to_dict(), 'max_on_F': top}
        )
    support = {f: v for f, v in values.items() if not f.is_identity}
    return WeightSpec.build(base.group, support, default)


def conjugate_length(g: Element, t: LengthTable,
                     domain: Optional[Iterable[Element]] = None) -> LengthTable:
    """(g o l)(x) = l(g^-1 x g).

    Without a domain the output covers g t.domain g^-1; requested points
    whose conjugate falls outside t.domain are dropped and recorded in meta.
    """
    inverse = ~g
    if domain is None:
        requested = [conjugate(y, inverse) for y in t.domain]
    else:
        requested = list(dict.fromkeys(domain))

    kept: List[Element] = []
    dropped: List[str] = []
    for x in requested:
        if conjugate(x, g) in t:
            kept.append(x)
        else:
            dropped.append(x.token)
    if not kept:
        raise EmptyDomain("No requested point has its conjugate in the table")

    values = {x: t.values[conjugate(x, g)] for x in kept}
    kept_set = set(kept)
    complete = t.complete_below
    for y in t.domain:
        value = t.values[y]
        if isinstance(value, int) and value <= complete and \
                conjugate(y, inverse) not in kept_set:
            complete = value - 1

    meta = dict(t.meta)
    meta['conjugator'] = g.token
    if dropped:
        meta['dropped'] = dropped
        logger.info(f"⚠️ conjugate_length dropped {len(dropped)} points")
    return LengthTable(t.group, tuple(kept), values, exact_radius=0,
                       complete_below=max(complete, 0), meta=meta)


def reconstruct_word_length(t: LengthTable) -> Union[WordLength, NotWordLengthOnDomain]:
    """Test the descent condition C(g) on the certified range of t.

    C(g): some h has l(h) = l(g) - 1 and l(h^-1 g) = 1. Every g is then a
    product of l(g) elements of X_l = {l = 1}.
    """
    X = [g for g in t.domain if t.values[g] == 1]
    if t.complete_below >= 1:
        top = t.complete_below + 1
    else:
        top = t.max_value

    for g in t.domain:
        value = t.values[g]
        if g.is_identity or not isinstance(value, int) or value > top:
            continue
        if value == 1:
            continue
        if not any(t.get(g * ~x) == value - 1 for x in X):
            reason = f"no h with l(h) = {value - 1} and l(h^-1 g) = 1"
            logger.info(f"❌ C({g.token}) fails: {reason}")
            return NotWordLengthOnDomain(g, reason)
    return WordLength(tuple(X))
