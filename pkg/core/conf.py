"""
Budget lookups shared by every app
"""
from contextlib import contextmanager
from typing import Any, Dict, Optional

from django.conf import settings

DEFAULT_BUDGETS = {
    'BALL_CAP': 250000,
    'MAX_RADIUS': 16,
    'DIJKSTRA_NODE_CAP': 500000,
    'RAMP_CAP_LIMIT': 40,
    'RAMP_INDEX_CAP': 20000,
    'GENERATION_RADIUS': 6,
    'MOSS_VERTEX_CAP': 12000,
    'MOSS_NEIGHBOR_CAP': 3,
    'SUBSET_CAP': 65536,
    'SEARCH_RADIUS': 6,
    'SAMPLE_SIZE': 100,
    'SHOW_PROGRESS': False,
    'ARTIFACTS_DIR': 'artifacts',
}


def budget(name: str, override: Optional[Any] = None) -> Any:
    """Return a configured budget, preferring an explicit override."""
    if override is not None:
        return override
    configured = getattr(settings, 'LENGTHLAB', {})
    if name in configured:
        return configured[name]
    return DEFAULT_BUDGETS[name]


@contextmanager
def budget_overrides(overrides: Optional[Dict[str, Any]] = None):
    """Apply per-experiment budgets on top of settings.LENGTHLAB for a block."""
    if not overrides:
        yield
        return
    previous = getattr(settings, 'LENGTHLAB', {})
    settings.LENGTHLAB = {**previous, **overrides}
    try:
        yield
    finally:
        settings.LENGTHLAB = previous
