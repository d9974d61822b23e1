"""
Experiment configuration shared by the command line and programmatic runs
"""
import random
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, Optional

from groups.catalog import GroupSpec
from groups.generating import GeneratingSet, standard_generators
from .conf import budget
from .exceptions import ConfigurationError

COMMANDS = (
    'length', 'cayley', 'ep', 'moss', 'mif', 'lemD', 'tt', 'compare', 'examples', 'density',
)
OUTPUT_FORMATS = ('json', 'dot', 'text')
EXTENSIONS = {'json': 'json', 'dot': 'dot', 'text': 'txt'}
DEFAULT_GROUP = 'free:2'


def canonical_command(name: str) -> str:
    """Case-insensitive command lookup; lemd and lemD are the same command."""
    lookup = {c.lower(): c for c in COMMANDS}
    try:
        return lookup[name.strip().lower()]
    except KeyError:
        raise ConfigurationError(
            f"Unknown command {name!r}", details={'commands': list(COMMANDS)}
        )


@dataclass(frozen=True)
class ExperimentConfig:
    """One reproducible experiment: all randomness comes from seed"""

    command: str
    group: GroupSpec = field(default_factory=lambda: GroupSpec.parse(DEFAULT_GROUP))
    generators: Optional[GeneratingSet] = None
    radius: Optional[int] = None
    seed: int = 0
    output_format: str = 'json'
    output_dir: Optional[str] = None
    budgets: Dict[str, Any] = field(default_factory=dict)
    params: Dict[str, Any] = field(default_factory=dict)

    @property
    def generating_set(self) -> GeneratingSet:
        return self.generators if self.generators is not None \
            else standard_generators(self.group)

    def param(self, name: str, default: Any = None) -> Any:
        value = self.params.get(name)
        return default if value is None else value

    def rng(self) -> random.Random:
        return random.Random(self.seed)

    def artifact_path(self) -> Path:
        directory = Path(self.output_dir or budget('ARTIFACTS_DIR'))
        return directory / f"{self.command}.{EXTENSIONS[self.output_format]}"

    def to_dict(self) -> Dict[str, Any]:
        return {
            'command': self.command,
            'group': self.group.label,
            'generators': self.generators.token if self.generators is not None else None,
            'radius': self.radius,
            'seed': self.seed,
            'format': self.output_format,
            'output_dir': self.output_dir,
            'budgets': dict(self.budgets),
            'params': dict(self.params),
        }
