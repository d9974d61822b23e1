"""
Programmatic entry point shared by the management commands
"""
import json
import logging
from pathlib import Path
from typing import Any, Dict, Optional, Union

from .conf import budget_overrides
from .config import ExperimentConfig, canonical_command
from .exceptions import ConfigurationError, LengthLabError
from .experiments import EXPERIMENTS
from .responses import CommandResult, ExitCodes
from .serializers import ExperimentConfigSerializer

logger = logging.getLogger(__name__)


def read_config_file(path: Union[str, Path]) -> Dict[str, Any]:
    try:
        with open(path, encoding='utf-8') as handle:
            data = json.load(handle)
    except (OSError, json.JSONDecodeError) as e:
        raise ConfigurationError(f"Cannot read config file {path}: {e}")
    if not isinstance(data, dict):
        raise ConfigurationError(f"Config file {path} must hold a JSON object")
    return data


def write_artifact(result: CommandResult, config: ExperimentConfig) -> Optional[Path]:
    """Write the rendered result to <output-dir>/<command>.<ext>."""
    try:
        content = result.render(config.output_format)
    except ValueError as e:
        logger.warning(f"⚠️ No {config.output_format} artifact: {e}")
        return None
    path = config.artifact_path()
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(content if content.endswith('\n') else content + '\n', encoding='utf-8')
    logger.info(f"✅ Artifact written to {path}")
    return path


def run(command: str, config: Union[ExperimentConfig, Dict[str, Any], None] = None,
        write: bool = True) -> CommandResult:
    """Run one experiment.

    Exit codes: 0 success, 1 nothing found inside the window or a failed
    check, 2 malformed configuration or an exhausted budget.
    """
    try:
        name = canonical_command(command)
    except ConfigurationError as e:
        return CommandResult.from_exception(e)
    if not isinstance(config, ExperimentConfig):
        serializer = ExperimentConfigSerializer(data={**(config or {}), 'command': name})
        if not serializer.is_valid():
            return CommandResult.validation_error(serializer.errors)
        config = serializer.save()
    elif config.command != name:
        return CommandResult.error(f"Config is for {config.command!r}, not {name!r}")

    logger.info(f"🔍 Running {name} on {config.group.label} (seed {config.seed})")
    try:
        with budget_overrides(config.budgets):
            result = EXPERIMENTS[name](config)
    except LengthLabError as e:
        return CommandResult.from_exception(e)
    except ValueError as e:
        return CommandResult.error(str(e))

    if config.output_format == 'dot' and result.dot is None \
            and result.exit_code == ExitCodes.SUCCESS:
        return CommandResult.error(f"{name} has no graph to draw in dot format")
    if write:
        write_artifact(result, config)
    return result
