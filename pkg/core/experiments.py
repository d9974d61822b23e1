"""
One function per experiment command

Each function turns a validated ExperimentConfig into a CommandResult;
nothing here prints or writes files.
"""
import logging
from typing import Any, Dict, List, Optional

from cayley.construction import cayley_ball
from cayley.extension import ep_sweep, ep_witness
from cayley.moss import moss_approximant
from genericity.counterexamples import ex_ab_exhaustive, ex_vc_checks
from genericity.invariants import cofinite_generating_set, icc_invariant_split
from genericity.kernels import (
    dense_bounded_proper_kernel, incomparability_kernel, lemD_kernel, tt_kernel,
    word_length_descent_kernel,
)
from groups.catalog import GroupSpec
from groups.elements import Element, parse_element
from groups.enumeration import ball
from groups.generating import GeneratingSet
from gstar.witnesses import mif_witness
from gstar.words import evaluate, parse_gstar
from lengths.comparison import incomparability_witness
from lengths.construction import length_from_weight, word_length_table
from lengths.tables import LengthTable, level_census, validate_length_axioms
from lengths.weights import Constant, WeightSpec
from .conf import budget
from .config import ExperimentConfig
from .exceptions import ConfigurationError
from .results import WitnessAgainst
from .responses import CommandResult, ErrorCodes, Messages

logger = logging.getLogger(__name__)

TABLE_RADIUS = 3


def _tokens(group: GroupSpec, values) -> List[Element]:
    if isinstance(values, str):
        values = [v for v in values.split(';') if v.strip()]
    return [parse_element(group, str(v)) for v in values]


def _weight(config: ExperimentConfig, key: str) -> Optional[WeightSpec]:
    from .serializers import WeightSpecSerializer

    data = config.param(key)
    if data is None:
        return None
    serializer = WeightSpecSerializer(data=data, context={'group': config.group})
    if not serializer.is_valid():
        raise ConfigurationError(f"Invalid weight in params.{key}", details=serializer.errors)
    return serializer.save()


def _table(config: ExperimentConfig, radius: int, weight_key: str = 'weights',
           generators: Optional[GeneratingSet] = None) -> LengthTable:
    """l_omega on the radius ball when a weight is configured, the word length otherwise."""
    X = generators or config.generating_set
    omega = _weight(config, weight_key)
    if omega is None:
        return word_length_table(X, radius)
    if isinstance(omega.default, Constant):
        cap = config.param('cap', omega.default.value)
    else:
        cap = config.param('cap', budget('RAMP_CAP_LIMIT'))
    return length_from_weight(omega, ball(config.group, X, radius), cap)


def run_length(config: ExperimentConfig) -> CommandResult:
    radius = config.radius if config.radius is not None else TABLE_RADIUS
    table = _table(config, radius)
    census = level_census(table)
    text = "\n".join(
        [f"{g.token}\t{table.values[g]}" for g in table.domain]
        + [f"levels: {census['levels']}", f"complete below: {census['complete_below']}"]
    )
    axioms = validate_length_axioms(table)
    if not axioms.is_valid:
        return CommandResult.not_found(
            table.to_dict(), "The table violates the length axioms",
            error_code=ErrorCodes.CHECKS_FAILED, text=text,
        )
    return CommandResult.ok(table.to_dict(), f"Length table on {len(table)} elements", text=text)


def _cayley(config: ExperimentConfig):
    radius = config.radius if config.radius is not None else TABLE_RADIUS
    return cayley_ball(_table(config, radius), radius)


def run_cayley(config: ExperimentConfig) -> CommandResult:
    graph = _cayley(config)
    data = {
        'graph': graph.to_dict(),
        'vertices': len(graph),
        'edges': graph.edge_count,
        'connected': graph.is_connected(),
    }
    return CommandResult.ok(data, f"Cayley ball with {len(graph)} vertices", dot=graph.to_dot())


def run_ep(config: ExperimentConfig) -> CommandResult:
    graph = _cayley(config)
    a = [g.token for g in _tokens(config.group, config.param('tuple', []))]
    d = list(config.param('distances', []))
    if not a:
        raise ConfigurationError("ep needs params.tuple")
    witness = ep_witness(graph, a, d)
    data = {'tuple': a, 'distances': d, 'vertices': len(graph)}
    if isinstance(witness, str):
        return CommandResult.ok({**data, 'witness': witness}, Messages.WITNESS_FOUND)
    return CommandResult.not_found({**data, 'outcome': witness.to_dict()})


def run_moss(config: ExperimentConfig) -> CommandResult:
    graph = moss_approximant(config.param('t_max', 2), config.param('d_max', 3),
                             config.param('rounds', 3))
    ledgers = graph.meta['rounds']
    recorded = [demand for ledger in ledgers for demand in ledger.met]
    sweep = ep_sweep(graph, recorded)
    data = {
        'graph': graph.to_dict(),
        'vertices': len(graph),
        'edges': graph.edge_count,
        'connected': graph.is_connected(),
        'rounds': [ledger.to_dict() for ledger in ledgers],
        'sweep': sweep.to_dict(),
    }
    if not sweep.all_passed:
        return CommandResult.not_found(data, "Recorded demands failed re-validation",
                                       error_code=ErrorCodes.CHECKS_FAILED)
    return CommandResult.ok(data, f"Moss approximant with {len(graph)} vertices",
                            dot=graph.to_dot())


def run_mif(config: ExperimentConfig) -> CommandResult:
    texts = config.param('words', [])
    if isinstance(texts, str):
        texts = [t for t in texts.split(';') if t.strip()]
    if not texts:
        raise ConfigurationError("mif needs params.words")
    words = [parse_gstar(config.group, t) for t in texts]
    radius = budget('SEARCH_RADIUS', config.radius)
    found = mif_witness(config.group, words, config.generating_set, radius)
    data: Dict[str, Any] = {'words': [w.text for w in words], 'radius': radius}
    if isinstance(found, Element):
        data['witness'] = found.token
        data['values'] = {w.text: evaluate(w, found).token for w in words}
        return CommandResult.ok(data, Messages.WITNESS_FOUND)
    return CommandResult.not_found({**data, 'outcome': found.to_dict()})


def _window(config: ExperimentConfig, default_radius: int = 1) -> List[Element]:
    if config.param('F') is not None:
        return _tokens(config.group, config.param('F'))
    return ball(config.group, config.generating_set, config.param('f_radius', default_radius))


def run_lemd(config: ExperimentConfig) -> CommandResult:
    a = _tokens(config.group, config.param('a', []))
    d = config.param('d', [])
    if not a:
        raise ConfigurationError("lemD needs params.a and params.d")
    table = _table(config, config.param('table_radius', 4))
    report = lemD_kernel(table, _window(config), a, d, radius=config.radius,
                         generators=config.generating_set,
                         debug=bool(config.param('debug', False)))
    return CommandResult.from_report(report)


def seeded_weight(group: GroupSpec, rng, pool: List[Element], pairs: int,
                  weight_max: int, default: int) -> WeightSpec:
    """Random weights in [1, weight_max] on a few inverse pairs of pool."""
    representatives = []
    for g in pool:
        if not g.is_identity and ~g not in representatives:
            representatives.append(g)
    chosen = rng.sample(representatives, min(pairs, len(representatives)))
    return WeightSpec.build(group, {g: rng.randint(1, weight_max) for g in chosen},
                            Constant(default))


def seeded_window(rng, pool: List[Element], size: int) -> List[Element]:
    """Inverse-closed F of at most size non-identity elements drawn from pool."""
    candidates = [g for g in pool if not g.is_identity]
    window: List[Element] = []
    while candidates:
        f = rng.choice(candidates)
        pair = [f] if ~f == f else [f, ~f]
        if len(window) + len(pair) > size:
            break
        window.extend(pair)
        candidates = [g for g in candidates if g not in pair]
    return window


def run_tt(config: ExperimentConfig) -> CommandResult:
    rng = config.rng()
    X = config.generating_set
    table_radius = config.param('table_radius', 2)
    if config.param('F') is not None:
        F = _tokens(config.group, config.param('F'))
    else:
        pool = ball(config.group, X, config.param('f_radius', 2))
        F = seeded_window(rng, pool, config.param('f_size', 4))
    t0 = _table(config, table_radius, 'weights0')
    omega = _weight(config, 'weights1')
    domain = ball(config.group, X, table_radius)
    if omega is None:
        omega = seeded_weight(config.group, rng, domain, config.param('pairs', 3),
                              config.param('weight_max', 3), config.param('default', 4))
    t1 = length_from_weight(omega, domain, omega.default.value
                            if isinstance(omega.default, Constant)
                            else budget('RAMP_CAP_LIMIT'))
    report = tt_kernel(t0, t1, F, radius=config.radius, generators=X,
                       debug=bool(config.param('debug', False)))
    report.inputs['l1_weight'] = omega.to_dict()
    return CommandResult.from_report(report)


def run_compare(config: ExperimentConfig) -> CommandResult:
    radius = config.radius if config.radius is not None else TABLE_RADIUS
    C = config.param('C', 1)
    t1 = _table(config, radius, 'weights1')
    second = config.param('generators2')
    X2 = GeneratingSet.parse(config.group, second) if second else None
    t2 = _table(config, radius, 'weights2', generators=X2)
    forward, backward = incomparability_witness(t1, t2, C)
    data = {
        'C': C,
        'radius': radius,
        'l1_vs_l2': forward.to_dict(),
        'l2_vs_l1': backward.to_dict(),
        'incomparable': isinstance(forward, WitnessAgainst) and isinstance(backward, WitnessAgainst),
    }
    return CommandResult.ok(data, "Bi-Lipschitz comparison on the window")


def run_examples(config: ExperimentConfig) -> CommandResult:
    which = config.param('which', 'vc')
    if which == 'ab':
        report = ex_ab_exhaustive(config.param('k', 2))
    elif which == 'vc':
        report = ex_vc_checks(config.param('alpha_bound', 20), radius=config.radius)
    else:
        raise ConfigurationError(f"Unknown example {which!r}; choose ab or vc")
    return CommandResult.from_report(report)


def run_density(config: ExperimentConfig) -> CommandResult:
    which = config.param('which', 'bounded-proper')
    X = config.generating_set
    if which == 'icc':
        x = parse_element(config.group, config.param('x', ''))
        if config.param('cofinite', False):
            X = cofinite_generating_set(config.group, [x])
        table = word_length_table(X, config.param('table_radius', 4))
        report = icc_invariant_split(table, x, X, config.param('r', 1),
                                     sample=config.param('sample'))
        return CommandResult.from_report(report)

    table = _table(config, config.param('table_radius', 4))
    F = _window(config)
    if which == 'bounded-proper':
        report = dense_bounded_proper_kernel(table, F, config.radius, X, config.param('cap'))
    elif which == 'descent':
        g = parse_element(config.group, config.param('g', ''))
        report = word_length_descent_kernel(table, g, F, config.radius, X)
    elif which == 'incomparability':
        second = _table(config, config.param('table_radius', 4), 'weights2')
        report = incomparability_kernel(table, second, F, config.param('C', 1), config.radius, X)
        report.inputs['l1_weight'] = config.param('weights')
        report.inputs['l2_weight'] = config.param('weights2')
    else:
        raise ConfigurationError(
            f"Unknown density kernel {which!r}; "
            f"choose bounded-proper, descent, incomparability or icc"
        )
    return CommandResult.from_report(report)


EXPERIMENTS = {
    'length': run_length,
    'cayley': run_cayley,
    'ep': run_ep,
    'moss': run_moss,
    'mif': run_mif,
    'lemD': run_lemd,
    'tt': run_tt,
    'compare': run_compare,
    'examples': run_examples,
    'density': run_density,
}
