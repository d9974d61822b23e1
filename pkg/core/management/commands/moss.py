from core.commands import ExperimentCommand


class Command(ExperimentCommand):
    help = 'Finite approximant of the universal graph with its EP ledger'
    command_name = 'moss'

    def add_experiment_arguments(self, parser):
        parser.add_argument('--t-max', type=int, help='Largest tuple size (default 2)')
        parser.add_argument('--d-max', type=int, help='Largest demanded distance (default 3)')
        parser.add_argument('--rounds', type=int, help='Extension rounds (default 3)')

    def experiment_params(self, options):
        return {
            't_max': options.get('t_max'),
            'd_max': options.get('d_max'),
            'rounds': options.get('rounds'),
        }
