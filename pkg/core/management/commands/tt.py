from core.commands import ExperimentCommand, split_tokens


class Command(ExperimentCommand):
    help = 'Conjugate one window of length values onto another'
    command_name = 'tt'

    def add_experiment_arguments(self, parser):
        parser.add_argument('--F', dest='window', type=str, help="Window tokens separated by ';'")
        parser.add_argument('--f-size', type=int, help='Size of the seeded window (default 4)')
        parser.add_argument('--f-radius', type=int, help='Seeded window is drawn from this ball (default 2)')
        parser.add_argument('--table-radius', type=int, help='Radius of both tables (default 2)')
        parser.add_argument('--weights0', type=str, help='WeightSpec JSON of l0 (default: word length)')
        parser.add_argument('--weights1', type=str, help='WeightSpec JSON of l1 (default: seeded weights)')
        parser.add_argument('--pairs', type=int, help='Inverse pairs carrying seeded weights (default 3)')
        parser.add_argument('--weight-max', type=int, help='Largest seeded weight (default 3)')
        parser.add_argument('--default', type=int, help='Default weight of l1 (default 4)')
        parser.add_argument('--debug', action='store_true', help='Also check the finite equation set')

    def experiment_params(self, options):
        return {
            'F': split_tokens(options.get('window')),
            'f_size': options.get('f_size'),
            'f_radius': options.get('f_radius'),
            'table_radius': options.get('table_radius'),
            'weights0': self.load_weight(options.get('weights0')),
            'weights1': self.load_weight(options.get('weights1')),
            'pairs': options.get('pairs'),
            'weight_max': options.get('weight_max'),
            'default': options.get('default'),
            'debug': options.get('debug') or None,
        }
