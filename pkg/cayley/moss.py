"""
Bounded approximants of the Moss graph

Each round collects every demand (tuple of at most t_max snapshot vertices,
consistent distance vector with entries in [1, D_max]) and meets it with an
existing vertex or a one-point extension. Neighbor sets are pairwise at
distance <= 2, which keeps every extension isometric: old distances, and
hence old witnesses, survive all later rounds.
"""
import itertools
import logging
from dataclasses import dataclass, field
from typing import Any, Dict, Iterator, List, Optional, Sequence, Tuple

import numpy as np
from tqdm import tqdm

from core.conf import budget
from core.exceptions import BudgetExceeded
from .extension import Demand
from .graphs import FiniteGraph

logger = logging.getLogger(__name__)


@dataclass
class RoundLedger:
    round: int
    demands: int = 0
    met: List[Demand] = field(default_factory=list)
    added: List[Demand] = field(default_factory=list)
    unmet: List[Demand] = field(default_factory=list)

    @property
    def satisfied(self) -> List[Demand]:
        return self.met + self.added

    def to_dict(self) -> Dict[str, Any]:
        return {
            'round': self.round,
            'demands': self.demands,
            'met': len(self.met),
            'added': len(self.added),
            'unmet': [demand.to_dict() for demand in self.unmet],
        }


class _GrowingGraph:
    """Adjacency lists plus an integer distance matrix grown in place"""

    def __init__(self, first: str, vertex_cap: int):
        self.names: List[str] = [first]
        self.adjacency: List[List[int]] = [[]]
        self.vertex_cap = vertex_cap
        self._dist = np.zeros((16, 16), dtype=np.int32)

    @property
    def size(self) -> int:
        return len(self.names)

    def column(self, i: int) -> np.ndarray:
        return self._dist[:self.size, i]

    def distance(self, i: int, j: int) -> int:
        return int(self._dist[i, j])

    def submatrix(self, indices: Sequence[int]) -> np.ndarray:
        return self._dist[np.ix_(indices, indices)]

    def add(self, name: str, neighbors: Sequence[int]) -> int:
        n = self.size
        if n >= self.vertex_cap:
            raise BudgetExceeded(
                f"Moss approximant exceeds {self.vertex_cap} vertices",
                details={'cap': self.vertex_cap}
            )
        if n == self._dist.shape[0]:
            grown = np.zeros((2 * n, 2 * n), dtype=np.int32)
            grown[:n, :n] = self._dist[:n, :n]
            self._dist = grown
        row = 1 + self._dist[list(neighbors), :n].min(axis=0)
        self._dist[n, :n] = row
        self._dist[:n, n] = row
        self._dist[n, n] = 0
        self.names.append(name)
        self.adjacency.append(list(neighbors))
        for j in neighbors:
            self.adjacency[j].append(n)
        return n

    def witness(self, vertices: Sequence[int], d: Sequence[int]) -> Optional[int]:
        mask = np.ones(self.size, dtype=bool)
        for v, dv in zip(vertices, d):
            mask &= self.column(v) == dv
        hits = np.flatnonzero(mask)
        return int(hits[0]) if len(hits) else None

    def one_point_neighbors(self, vertices: Sequence[int], d: Sequence[int],
                            cap: int) -> Optional[List[int]]:
        """A neighbor set N realizing d(v, a_i) = 1 + min_N d(n, a_i) = d_i."""
        columns = [self.column(v) for v in vertices]
        allowed = np.ones(self.size, dtype=bool)
        for col, dv in zip(columns, d):
            allowed &= col >= dv - 1
        hits = [np.flatnonzero(allowed & (col == dv - 1)) for col, dv in zip(columns, d)]
        if any(not len(h) for h in hits):
            return None

        def search(chosen: List[int], covered: frozenset) -> Optional[List[int]]:
            pending = [i for i in range(len(d)) if i not in covered]
            if not pending:
                return chosen
            if len(chosen) >= cap:
                return None
            options = hits[pending[0]]
            for c in chosen:
                options = options[self._dist[c, options] <= 2]
            for option in options.tolist():
                reached = covered | {i for i in pending if columns[i][option] == d[i] - 1}
                result = search(chosen + [option], frozenset(reached))
                if result is not None:
                    return result
            return None

        return search([], frozenset())

    def to_graph(self, meta: Dict[str, Any]) -> FiniteGraph:
        edges = [(self.names[i], self.names[j])
                 for i, neighbors in enumerate(self.adjacency) for j in neighbors if i < j]
        n = self.size
        return FiniteGraph(self.names, edges, meta=meta, distances=self._dist[:n, :n])


def _demands(graph: _GrowingGraph, snapshot: int, t_max: int,
             d_max: int) -> Iterator[Tuple[Tuple[int, ...], Tuple[int, ...]]]:
    for size in range(1, t_max + 1):
        for vertices in itertools.combinations(range(snapshot), size):
            sub = graph.submatrix(vertices)
            for d in itertools.product(range(1, d_max + 1), repeat=size):
                if all(abs(d[i] - d[j]) <= sub[i, j] <= d[i] + d[j]
                       for i in range(size) for j in range(i + 1, size)):
                    yield vertices, d


def moss_approximant(t_max: int, d_max: int, rounds: int) -> FiniteGraph:
    """Finite approximant after the given number of rounds.

    The per-round ledgers are kept in graph.meta['rounds'].
    """
    if t_max < 1 or d_max < 1 or rounds < 0:
        raise ValueError("t_max and D_max must be positive, rounds non-negative")
    neighbor_cap = budget('MOSS_NEIGHBOR_CAP')
    graph = _GrowingGraph('w0.0', budget('MOSS_VERTEX_CAP'))
    ledgers: List[RoundLedger] = []

    for k in range(1, rounds + 1):
        ledger = RoundLedger(k)
        snapshot = graph.size
        counter = 0
        demands = _demands(graph, snapshot, t_max, d_max)
        for vertices, d in tqdm(demands, desc=f"moss round {k}",
                                disable=not budget('SHOW_PROGRESS')):
            ledger.demands += 1
            demand = Demand(tuple(graph.names[v] for v in vertices), d)
            if graph.witness(vertices, d) is not None:
                ledger.met.append(demand)
                continue
            neighbors = graph.one_point_neighbors(vertices, d, neighbor_cap)
            if neighbors is None:
                ledger.unmet.append(demand)
                continue
            graph.add(f"w{k}.{counter}", neighbors)
            counter += 1
            ledger.added.append(demand)
        ledgers.append(ledger)
        logger.info(
            f"🔍 Moss round {k}: {ledger.demands} demands, {len(ledger.added)} added, "
            f"{len(ledger.unmet)} unmet, {graph.size} vertices"
        )

    return graph.to_graph({
        't_max': t_max, 'D_max': d_max, 'rounds': ledgers,
    })
