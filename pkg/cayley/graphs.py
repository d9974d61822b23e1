"""
Finite simple graphs, their metric and tuple congruence
"""
import logging
from dataclasses import dataclass
from typing import Any, Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

import networkx as nx
import numpy as np

from core.exceptions import LengthMismatch, ParseError, PreconditionFailed

logger = logging.getLogger(__name__)

DistanceVector = Tuple[int, ...]


def as_distance_vector(values: Iterable[int], size: Optional[int] = None) -> DistanceVector:
    vector = tuple(int(d) for d in values)
    if any(d < 0 for d in vector):
        raise ValueError("Distances must be non-negative")
    if size is not None and len(vector) != size:
        raise LengthMismatch(
            f"Distance vector has {len(vector)} entries, the tuple has {size}"
        )
    return vector


class FiniteGraph:
    """Undirected simple graph over ordered, named vertices

    Vertices are stored as their position in `vertices`; distances are
    float rows with inf between components, computed by BFS on demand.
    """

    def __init__(self, vertices: Iterable[str], edges: Iterable[Tuple[str, str]] = (),
                 meta: Optional[Dict[str, Any]] = None,
                 distances: Optional[np.ndarray] = None):
        names = [str(v) for v in vertices]
        if len(set(names)) != len(names):
            raise ValueError("Vertex names must be unique")
        self.vertices: Tuple[str, ...] = tuple(names)
        self.index: Dict[str, int] = {v: i for i, v in enumerate(names)}
        self.meta: Dict[str, Any] = dict(meta or {})

        self._graph = nx.Graph()
        self._graph.add_nodes_from(range(len(names)))
        for u, v in edges:
            i, j = self.position(u), self.position(v)
            if i == j:
                raise ValueError(f"Loop at vertex {u}")
            self._graph.add_edge(i, j)

        self._rows: Dict[int, np.ndarray] = {}
        if distances is not None:
            if distances.shape != (len(names), len(names)):
                raise ValueError("Distance matrix does not match the vertex count")
            for i in range(len(names)):
                self._rows[i] = distances[i].astype(float)

    def __len__(self) -> int:
        return len(self.vertices)

    def __contains__(self, name: str) -> bool:
        return name in self.index

    def __repr__(self) -> str:
        return f"FiniteGraph({len(self)} vertices, {self._graph.number_of_edges()} edges)"

    def position(self, name: str) -> int:
        try:
            return self.index[name]
        except KeyError:
            raise PreconditionFailed(f"{name} is not a vertex of the graph")

    @property
    def edges(self) -> List[Tuple[int, int]]:
        return sorted((min(i, j), max(i, j)) for i, j in self._graph.edges())

    @property
    def edge_count(self) -> int:
        return self._graph.number_of_edges()

    def has_edge(self, u: str, v: str) -> bool:
        return self._graph.has_edge(self.position(u), self.position(v))

    def neighbors(self, name: str) -> List[str]:
        return [self.vertices[j] for j in sorted(self._graph[self.position(name)])]

    def degree(self, name: str) -> int:
        return self._graph.degree(self.position(name))

    def is_connected(self) -> bool:
        if not len(self):
            return False
        return nx.is_connected(self._graph)

    def bfs_row(self, name: str) -> np.ndarray:
        """Fresh BFS distances from one vertex, ignoring any cached rows."""
        row = np.full(len(self), np.inf)
        lengths = nx.single_source_shortest_path_length(self._graph, self.position(name))
        for j, d in lengths.items():
            row[j] = d
        return row

    def distance_row(self, name: str) -> np.ndarray:
        i = self.position(name)
        if i not in self._rows:
            self._rows[i] = self.bfs_row(name)
        return self._rows[i]

    def distance(self, u: str, v: str) -> float:
        return float(self.distance_row(u)[self.position(v)])

    @property
    def distances(self) -> np.ndarray:
        if not len(self):
            return np.zeros((0, 0))
        return np.vstack([self.distance_row(v) for v in self.vertices])

    def extended(self, vertices: Sequence[str],
                 edges: Iterable[Tuple[str, str]]) -> 'FiniteGraph':
        """A new graph with extra vertices and edges; self is left untouched."""
        old = [(self.vertices[i], self.vertices[j]) for i, j in self.edges]
        return FiniteGraph(self.vertices + tuple(vertices), old + list(edges),
                           meta=dict(self.meta))

    def to_dict(self) -> Dict[str, Any]:
        return {
            'vertices': list(self.vertices),
            'edges': [[i, j] for i, j in self.edges],
        }

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> 'FiniteGraph':
        try:
            vertices = [str(v) for v in data['vertices']]
            edges = [(vertices[int(i)], vertices[int(j)]) for i, j in data.get('edges', [])]
        except (KeyError, IndexError, TypeError, ValueError) as e:
            raise ParseError(f"Invalid graph JSON: {e}")
        return cls(vertices, edges)

    def to_dot(self, name: str = 'G') -> str:
        lines = [f"graph {name} {{"]
        for v in self.vertices:
            lines.append(f'   "{v}";')
        for i, j in self.edges:
            lines.append(f'   "{self.vertices[i]}" -- "{self.vertices[j]}";')
        lines.append("}")
        return "\n".join(lines) + "\n"


def graph_metric(graph: FiniteGraph) -> np.ndarray:
    """All-pairs shortest-path matrix, inf across components."""
    return graph.distances


@dataclass(frozen=True)
class VertexTuple:
    graph: FiniteGraph
    vertices: Tuple[str, ...]

    def __post_init__(self):
        missing = [v for v in self.vertices if v not in self.graph]
        if missing:
            raise PreconditionFailed(f"Vertices {missing} are not in the graph")

    def __len__(self) -> int:
        return len(self.vertices)

    def matrix(self) -> np.ndarray:
        size = len(self.vertices)
        result = np.zeros((size, size))
        for i, u in enumerate(self.vertices):
            row = self.graph.distance_row(u)
            for j, v in enumerate(self.vertices):
                result[i, j] = row[self.graph.position(v)]
        return result

    def extend(self, vertex: str) -> 'VertexTuple':
        return VertexTuple(self.graph, self.vertices + (vertex,))


def tuples_congruent(s: VertexTuple, t: VertexTuple) -> bool:
    """s ≅ t: equal pairwise distances, each tuple in its own graph."""
    if len(s) != len(t):
        raise LengthMismatch(f"Tuples of sizes {len(s)} and {len(t)}")
    return bool(np.array_equal(s.matrix(), t.matrix()))


def demand_matrix(a: VertexTuple, d: Sequence[int]) -> np.ndarray:
    """Distances of a extended by an abstract point at distances d."""
    d = as_distance_vector(d, len(a))
    size = len(a)
    result = np.zeros((size + 1, size + 1))
    result[:size, :size] = a.matrix()
    result[size, :size] = d
    result[:size, size] = d
    return result


def extend_tuple_congruence(a: VertexTuple, vertex: str, d: Sequence[int]) -> bool:
    """Whether (a, vertex) realizes the demand (a, d) exactly."""
    return bool(np.array_equal(a.extend(vertex).matrix(), demand_matrix(a, d)))
