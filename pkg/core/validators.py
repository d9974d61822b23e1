from django.core.exceptions import ValidationError

from .conf import DEFAULT_BUDGETS, budget

BOOLEAN_BUDGETS = {'SHOW_PROGRESS'}
TEXT_BUDGETS = {'ARTIFACTS_DIR'}
TOKEN_LIST_PARAMS = ('a', 'F', 'tuple')
DISTANCE_PARAMS = ('d', 'distances')
WEIGHT_PARAMS = ('weights', 'weights0', 'weights1', 'weights2')


def validate_budgets(value):
    """Budget overrides must name known budgets; numeric ones must be positive."""
    if not isinstance(value, dict):
        raise ValidationError("Budgets must be a JSON object.")
    for name, setting in value.items():
        if name not in DEFAULT_BUDGETS:
            raise ValidationError(f"Unknown budget: {name}")
        if name in BOOLEAN_BUDGETS:
            if not isinstance(setting, bool):
                raise ValidationError(f"Budget {name} must be true or false.")
        elif name in TEXT_BUDGETS:
            if not isinstance(setting, str) or not setting:
                raise ValidationError(f"Budget {name} must be a non-empty string.")
        elif isinstance(setting, bool) or not isinstance(setting, int) or setting < 1:
            raise ValidationError(f"Budget {name} must be a positive integer.")


def validate_radius(value):
    limit = budget('MAX_RADIUS')
    if value < 0:
        raise ValidationError("Radius cannot be negative.")
    if value > limit:
        raise ValidationError(f"Radius {value} exceeds MAX_RADIUS = {limit}.")


def validate_distance_list(value):
    """Validate a distance vector d"""
    if not isinstance(value, list):
        raise ValidationError("Distances must be a list.")

    for i, d in enumerate(value):
        if isinstance(d, bool) or not isinstance(d, int):
            raise ValidationError(f"Distance at position {i} must be an integer.")
        if d < 0:
            raise ValidationError(f"Distance at position {i} cannot be negative: {d}")


def validate_weight_support(value):
    """Validate [token, weight] pairs of a weight support"""
    if not isinstance(value, list):
        raise ValidationError("Support must be a list of [token, weight] pairs.")

    for i, pair in enumerate(value):
        if not isinstance(pair, (list, tuple)) or len(pair) != 2:
            raise ValidationError(f"Support entry {i} must be a [token, weight] pair.")
        token, weight = pair
        if not isinstance(token, str) or not token.strip():
            raise ValidationError(f"Support entry {i} needs an element token.")
        if isinstance(weight, bool) or not isinstance(weight, int) or weight < 1:
            raise ValidationError(f"Weight of {token} must be a positive integer.")


def validate_table_entries(value):
    """Validate [token, value] pairs of a length table; values are ints or {"capped": c}"""
    if not isinstance(value, list):
        raise ValidationError("Entries must be a list of [token, value] pairs.")

    for i, pair in enumerate(value):
        if not isinstance(pair, (list, tuple)) or len(pair) != 2:
            raise ValidationError(f"Entry {i} must be a [token, value] pair.")
        raw = pair[1]
        if isinstance(raw, dict):
            if set(raw) != {'capped'}:
                raise ValidationError(f"Entry {i} must be an integer or a capped marker.")
            raw = raw['capped']
        if isinstance(raw, bool) or not isinstance(raw, int) or raw < 0:
            raise ValidationError(f"Entry {i} has an invalid length value.")


def validate_edge_list(value, vertex_count):
    """Edges are [i, j] index pairs into the vertex list"""
    if not isinstance(value, list):
        raise ValidationError("Edges must be a list.")

    for k, edge in enumerate(value):
        if not isinstance(edge, (list, tuple)) or len(edge) != 2:
            raise ValidationError(f"Edge {k} must be a pair of vertex indices.")
        i, j = edge
        if not all(isinstance(x, int) and not isinstance(x, bool) for x in (i, j)):
            raise ValidationError(f"Edge {k} must hold integer indices.")
        if not (0 <= i < vertex_count and 0 <= j < vertex_count):
            raise ValidationError(f"Edge {k} points outside the vertex list.")
        if i == j:
            raise ValidationError(f"Edge {k} is a loop at vertex {i}.")


def validate_experiment_params(value):
    """Command params: token lists, distance vectors and inline WeightSpec objects"""
    if not isinstance(value, dict):
        raise ValidationError("Params must be a JSON object.")
    for key in TOKEN_LIST_PARAMS:
        if key in value and not isinstance(value[key], list):
            raise ValidationError(f"params.{key} must be a list of element tokens.")
    for key in DISTANCE_PARAMS:
        if key in value:
            validate_distance_list(value[key])
    for key in WEIGHT_PARAMS:
        if value.get(key) is not None and not isinstance(value[key], dict):
            raise ValidationError(f"params.{key} must be a WeightSpec object.")
