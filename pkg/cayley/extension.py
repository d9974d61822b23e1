"""
Consistency of distance demands and witnesses for the Extension Property
"""
import logging
from dataclasses import dataclass, field
from typing import Any, Dict, Iterable, List, Optional, Sequence, Union

import numpy as np

from core.exceptions import InsufficientDomain
from core.results import NotFound, NotFoundWithinDomain, VacuouslySatisfied
from groups.elements import Element
from lengths.tables import Capped, LengthTable
from .graphs import DistanceVector, FiniteGraph, VertexTuple, as_distance_vector

logger = logging.getLogger(__name__)


def check_consistent(t: LengthTable, a: Sequence[Element], d: Sequence[int]) -> bool:
    """d_i - d_j <= l(a_i^-1 a_j) <= d_i + d_j for all i, j."""
    d = as_distance_vector(d, len(a))
    missing = []
    consistent = True
    for i, ai in enumerate(a):
        inverse = ~ai
        for j, aj in enumerate(a):
            product = inverse * aj
            value = t.get(product)
            if value is None:
                missing.append(product)
                continue
            if isinstance(value, Capped):
                if value.cap >= d[i] + d[j]:
                    consistent = False
                else:
                    missing.append(product)
                continue
            if not d[i] - d[j] <= value <= d[i] + d[j]:
                consistent = False
    if missing:
        raise InsufficientDomain(
            list(dict.fromkeys(missing)), "Products a_i^-1 a_j are not known exactly"
        )
    return consistent


def d_witness_search(t: LengthTable, a: Sequence[Element], d: Sequence[int],
                     search_domain: Iterable[Element]
                     ) -> Union[Element, NotFoundWithinDomain, VacuouslySatisfied]:
    """First g in search_domain with l(g^-1 a_i) = d_i for every i.

    Values outside the table count as mismatches only when the table's
    complete level decides them.
    """
    d = as_distance_vector(d, len(a))
    if not check_consistent(t, a, d):
        return VacuouslySatisfied(f"{list(d)} is not consistent with the tuple")

    checked = 0
    for g in search_domain:
        checked += 1
        inverse = ~g
        undecided = []
        rejected = False
        for ai, di in zip(a, d):
            product = inverse * ai
            status = t.known_not_equal(product, di)
            if status:
                rejected = True
                break
            if status is None:
                undecided.append(product)
        if rejected:
            continue
        if undecided:
            raise InsufficientDomain(undecided, f"Cannot decide candidate {g.token}")
        logger.debug(f"✅ D-witness {g.token} after {checked} candidates")
        return g
    return NotFoundWithinDomain(checked)


def _as_tuple(graph: FiniteGraph, a) -> VertexTuple:
    if isinstance(a, VertexTuple):
        return a
    return VertexTuple(graph, tuple(a))


def _first_match(rows: Sequence[np.ndarray], d: DistanceVector, size: int) -> Optional[int]:
    mask = np.ones(size, dtype=bool)
    for row, di in zip(rows, d):
        mask &= row == di
    hits = np.flatnonzero(mask)
    return int(hits[0]) if len(hits) else None


def ep_witness(graph: FiniteGraph, a, d: Sequence[int]) -> Union[str, NotFound]:
    """First vertex v, in vertex order, with d(v, a_i) = d_i for every i."""
    a = _as_tuple(graph, a)
    d = as_distance_vector(d, len(a))
    rows = [graph.distance_row(v) for v in a.vertices]
    found = _first_match(rows, d, len(graph))
    if found is None:
        return NotFound(len(graph))
    return graph.vertices[found]


@dataclass(frozen=True)
class Demand:
    """An EP demand: a vertex tuple and the distances a new vertex must realize"""

    vertices: tuple
    distances: DistanceVector

    def to_dict(self) -> Dict[str, Any]:
        return {'tuple': list(self.vertices), 'distances': list(self.distances)}


@dataclass
class SweepReport:
    checked: int = 0
    passed: int = 0
    failures: List[Demand] = field(default_factory=list)

    @property
    def all_passed(self) -> bool:
        return self.checked == self.passed

    def to_dict(self) -> Dict[str, Any]:
        return {
            'checked': self.checked,
            'passed': self.passed,
            'failures': [demand.to_dict() for demand in self.failures],
        }


def ep_sweep(graph: FiniteGraph, demands: Iterable[Demand]) -> SweepReport:
    """Re-validate demands against fresh BFS distances of graph."""
    rows: Dict[str, np.ndarray] = {}
    report = SweepReport()
    for demand in demands:
        report.checked += 1
        for v in demand.vertices:
            if v not in rows:
                rows[v] = graph.bfs_row(v)
        found = _first_match([rows[v] for v in demand.vertices],
                             demand.distances, len(graph))
        if found is None:
            report.failures.append(demand)
        else:
            report.passed += 1
    if report.failures:
        logger.info(f"❌ EP sweep: {len(report.failures)} of {report.checked} demands failed")
    return report
