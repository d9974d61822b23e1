from core.commands import ExperimentCommand


class Command(ExperimentCommand):
    help = 'First group element solving none of the given mixed equations'
    command_name = 'mif'

    def add_experiment_arguments(self, parser):
        parser.add_argument(
            '--word',
            action='append',
            dest='words',
            help='A word of G*<x> such as "a1 x^-1 a-1 x"; repeat for several',
        )

    def experiment_params(self, options):
        return {'words': options.get('words')}
