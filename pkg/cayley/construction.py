"""
Cayley graphs of length tables and the path extension used against EP
"""
import logging
from typing import List

import numpy as np

from core.exceptions import InsufficientDomain, PreconditionFailed
from lengths.tables import LengthTable
from .graphs import FiniteGraph

logger = logging.getLogger(__name__)


def cayley_ball(t: LengthTable, r: int) -> FiniteGraph:
    """Vertices {g : t(g) <= r}, an edge a - b iff t(a^-1 b) = 1.

    A product outside the domain is a non-edge when the table is complete
    at level 1, i.e. holds every element of length 1.
    """
    if r < 0:
        raise ValueError("Radius must be non-negative")
    vertices = [g for g in t.domain
                if isinstance(t.values[g], int) and t.values[g] <= r]
    if t.complete_below < r:
        logger.warning(
            f"⚠️ Table is complete only below {t.complete_below}; "
            f"the radius {r} vertex set may miss elements"
        )

    edges = []
    missing = []
    for i, a in enumerate(vertices):
        inverse = ~a
        for b in vertices[i + 1:]:
            product = inverse * b
            value = t.get(product)
            if value is None:
                if not t.known_not_equal(product, 1):
                    missing.append(product)
            elif value == 1:
                edges.append((a.token, b.token))
    if missing:
        raise InsufficientDomain(
            list(dict.fromkeys(missing)), "Edge products a^-1 b are missing from the table"
        )

    logger.debug(f"🔍 Cayley ball r={r}: {len(vertices)} vertices, {len(edges)} edges")
    return FiniteGraph(
        [g.token for g in vertices], edges,
        meta={'group': t.group.label, 'radius': r},
    )


def _fresh_names(graph: FiniteGraph, count: int, prefix: str = 'w0') -> List[str]:
    names = []
    counter = 0
    while len(names) < count:
        name = f"{prefix}.{counter}"
        if name not in graph:
            names.append(name)
        counter += 1
    return names


def vc_extension_graph(delta: FiniteGraph, u1: str, u2: str, m: int) -> FiniteGraph:
    """Delta plus a fresh path u1 - w0 - ... - w(m-1) - u2 of length m + 1.

    Requires d(u1, u2) = m, so the new path is longer than a geodesic and
    distances between old vertices are unchanged; the meta records the
    re-verification.
    """
    if m < 1:
        raise ValueError("m must be positive")
    if u1 == u2:
        raise PreconditionFailed("The path ends must be distinct vertices")
    current = delta.distance(u1, u2)
    if current != m:
        raise PreconditionFailed(
            f"d({u1}, {u2}) = {current:g}, expected {m}",
            details={'distance': current, 'm': m}
        )

    path = _fresh_names(delta, m)
    chain = [u1] + path + [u2]
    gamma = delta.extended(path, list(zip(chain, chain[1:])))

    size = len(delta)
    preserved = bool(np.array_equal(delta.distances, gamma.distances[:size, :size]))
    if not preserved:
        logger.error(f"❌ Extension between {u1} and {u2} changed old distances")
    gamma.meta['extension'] = {
        'ends': [u1, u2], 'm': m, 'path': path,
        'old_distances_preserved': preserved,
    }
    return gamma
