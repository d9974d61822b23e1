from core.commands import ExperimentCommand
from core.config import COMMANDS


class Command(ExperimentCommand):
    help = 'Run any experiment from a JSON config: run <command> --config file.json'

    def add_experiment_arguments(self, parser):
        parser.add_argument(
            'experiment',
            type=str,
            help=f"One of {', '.join(COMMANDS)} (lemd is accepted for lemD)",
        )

    def get_command_name(self, options):
        return options['experiment']
