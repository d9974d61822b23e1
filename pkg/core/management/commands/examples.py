from core.commands import ExperimentCommand


class Command(ExperimentCommand):
    help = 'Exhaustive checks of the torsion product (ab) and the virtually cyclic group (vc)'
    command_name = 'examples'

    def add_experiment_arguments(self, parser):
        parser.add_argument('--which', choices=['ab', 'vc'], help='Which example (default vc)')
        parser.add_argument('--k', type=int, help='Number of Z/2 factors for ab (default 2)')
        parser.add_argument('--alpha-bound', type=int, help='|alpha| bound for vc (default 20)')

    def experiment_params(self, options):
        return {
            'which': options.get('which'),
            'k': options.get('k'),
            'alpha_bound': options.get('alpha_bound'),
        }
