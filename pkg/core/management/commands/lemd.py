from core.commands import ExperimentCommand, split_ints, split_tokens


class Command(ExperimentCommand):
    help = 'Build a length in W(l, F) with a D(a, d) witness'
    command_name = 'lemD'

    def add_experiment_arguments(self, parser):
        parser.add_argument('--a', type=str, help="Tuple tokens separated by ';'")
        parser.add_argument('--d', type=str, help='Comma-separated positive distances')
        parser.add_argument('--F', dest='window', type=str, help="Window tokens separated by ';'")
        parser.add_argument('--f-radius', type=int, help='Window = ball of this radius (default 1)')
        parser.add_argument('--table-radius', type=int, help='Radius of the base table (default 4)')
        parser.add_argument('--weights', type=str, help='WeightSpec JSON file of the base length')
        parser.add_argument('--debug', action='store_true', help='Also check the finite equation set')

    def experiment_params(self, options):
        return {
            'a': split_tokens(options.get('a')),
            'd': split_ints(options.get('d')),
            'F': split_tokens(options.get('window')),
            'f_radius': options.get('f_radius'),
            'table_radius': options.get('table_radius'),
            'weights': self.load_weight(options.get('weights')),
            'debug': options.get('debug') or None,
        }
