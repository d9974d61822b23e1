"""
Base class of the experiment management commands

Every command shares the same flags, merges them over an optional JSON
config file and hands the result to core.cli.run. The artifact goes to
stdout; status lines and logs go to stderr.
"""
import json
from typing import Any, Dict, List, Optional

from django.core.management.base import BaseCommand, CommandError

from .cli import read_config_file, run
from .config import OUTPUT_FORMATS
from .exceptions import ConfigurationError
from .responses import CommandResult, ExitCodes


def split_tokens(text: Optional[str]) -> Optional[List[str]]:
    """Element tokens separated by ';' (tokens may contain spaces)."""
    if text is None:
        return None
    return [t.strip() for t in text.split(';') if t.strip()]


def split_ints(text: Optional[str]) -> Optional[List[int]]:
    if text is None:
        return None
    try:
        return [int(v) for v in text.split(',') if v.strip()]
    except ValueError:
        raise CommandError(f"Expected comma-separated integers, got {text!r}",
                           returncode=ExitCodes.CONFIGURATION_ERROR)


def parse_budget(item: str) -> Dict[str, Any]:
    name, sep, raw = item.partition('=')
    if not sep:
        raise CommandError(f"Budgets look like NAME=VALUE, got {item!r}",
                           returncode=ExitCodes.CONFIGURATION_ERROR)
    try:
        value = json.loads(raw)
    except json.JSONDecodeError:
        value = raw
    return {name.strip().upper(): value}


class ExperimentCommand(BaseCommand):
    """Shared flags: --group --generators --radius --seed --format --output-dir --config"""

    command_name: str = ''

    def add_arguments(self, parser):
        parser.add_argument(
            '--group',
            type=str,
            help='Group token (free:2, abelian:2, cyclic:4, vc, abtorsion:2, '
                 'product(G,H), freeproduct(G,H)) or GroupSpec JSON',
        )
        parser.add_argument(
            '--generators',
            type=str,
            help='Comma-separated generator tokens; inverses are added',
        )
        parser.add_argument('--radius', type=int, help='Search or ball radius')
        parser.add_argument('--seed', type=int, help='Seed of every random choice (default 0)')
        parser.add_argument(
            '--format',
            dest='output_format',
            choices=OUTPUT_FORMATS,
            help='Artifact format (default json)',
        )
        parser.add_argument('--output-dir', type=str, help='Directory for the artifact file')
        parser.add_argument(
            '--config',
            type=str,
            help='JSON config file; flags override its values',
        )
        parser.add_argument(
            '--budget',
            action='append',
            default=[],
            metavar='NAME=VALUE',
            help='Override one budget, e.g. --budget SUBSET_CAP=4096',
        )
        self.add_experiment_arguments(parser)

    def add_experiment_arguments(self, parser):
        """Command-specific flags."""

    def experiment_params(self, options) -> Dict[str, Any]:
        """Command-specific flags as config params; None values are dropped."""
        return {}

    def get_command_name(self, options) -> str:
        return self.command_name

    def load_weight(self, path: Optional[str]) -> Optional[Dict[str, Any]]:
        if path is None:
            return None
        try:
            return read_config_file(path)
        except ConfigurationError as e:
            raise CommandError(e.message, returncode=ExitCodes.CONFIGURATION_ERROR)

    def build_config(self, options) -> Dict[str, Any]:
        raw: Dict[str, Any] = {}
        if options.get('config'):
            try:
                raw = read_config_file(options['config'])
            except ConfigurationError as e:
                raise CommandError(e.message, returncode=ExitCodes.CONFIGURATION_ERROR)
        raw.pop('command', None)

        flags = {
            'group': options.get('group'),
            'generators': options.get('generators'),
            'radius': options.get('radius'),
            'seed': options.get('seed'),
            'format': options.get('output_format'),
            'output_dir': options.get('output_dir'),
        }
        raw.update({k: v for k, v in flags.items() if v is not None})

        budgets = dict(raw.get('budgets') or {})
        for item in options.get('budget') or []:
            budgets.update(parse_budget(item))
        if budgets:
            raw['budgets'] = budgets

        params = dict(raw.get('params') or {})
        params.update({k: v for k, v in self.experiment_params(options).items() if v is not None})
        raw['params'] = params
        return raw

    def emit(self, result: CommandResult, output_format: str):
        if result.exit_code == ExitCodes.CONFIGURATION_ERROR:
            self.stderr.write(result.to_json())
            raise CommandError(result.message, returncode=result.exit_code)
        try:
            self.stdout.write(result.render(output_format))
        except ValueError:
            self.stdout.write(result.to_json())
        if result.exit_code != ExitCodes.SUCCESS:
            raise CommandError(result.message, returncode=result.exit_code)
        self.stderr.write(self.style.SUCCESS(f"✓ {result.message}"))

    def handle(self, *args, **options):
        raw = self.build_config(options)
        result = run(self.get_command_name(options), raw)
        self.emit(result, raw.get('format') or 'json')
