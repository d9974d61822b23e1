"""
Dijkstra over implicit Cayley graphs
"""
import itertools
import logging
from heapq import heappop, heappush
from typing import Iterator, Optional, Sequence, Tuple

from core.conf import budget
from core.exceptions import BudgetExceeded
from groups.elements import Element

logger = logging.getLogger(__name__)


def iter_dijkstra(start: Element, steps: Sequence[Tuple[Element, int]],
                  cutoff: Optional[int] = None,
                  node_cap: Optional[int] = None) -> Iterator[Tuple[Element, int]]:
    """Yield (element, distance) in settle order, i.e. by nondecreasing distance.

    Edges go from g to g*x at cost w for every (x, w) in steps. Nodes
    beyond cutoff are never settled. The caller may stop iterating early.
    """
    cap = budget('DIJKSTRA_NODE_CAP', node_cap)
    counter = itertools.count()
    queue = [(0, next(counter), start)]
    mins = {start: 0}
    seen = set()

    while queue:
        cost, _, node = heappop(queue)
        if node in seen:
            continue
        seen.add(node)
        if len(seen) > cap:
            raise BudgetExceeded(
                f"Shortest-path search settled more than {cap} nodes",
                details={'cap': cap, 'distance': cost}
            )
        yield node, cost

        for x, weight in steps:
            successor = node * x
            if successor in seen:
                continue
            total = cost + weight
            if cutoff is not None and total > cutoff:
                continue
            previous = mins.get(successor)
            if previous is None or total < previous:
                mins[successor] = total
                heappush(queue, (total, next(counter), successor))


def distances(start: Element, steps: Sequence[Tuple[Element, int]],
              targets, cutoff: Optional[int] = None) -> dict:
    """Distances to the targets reachable within cutoff; stops once all are settled."""
    pending = set(targets)
    found = {}
    for node, cost in iter_dijkstra(start, steps, cutoff):
        if node in pending:
            found[node] = cost
            pending.discard(node)
            if not pending:
                break
    return found
