from core.commands import ExperimentCommand, split_tokens


class Command(ExperimentCommand):
    help = 'Density kernels: bounded and proper lengths, descent, incomparability, icc split'
    command_name = 'density'

    def add_experiment_arguments(self, parser):
        parser.add_argument(
            '--which',
            choices=['bounded-proper', 'descent', 'incomparability', 'icc'],
            help='Kernel to run (default bounded-proper)',
        )
        parser.add_argument('--F', dest='window', type=str, help="Window tokens separated by ';'")
        parser.add_argument('--f-radius', type=int, help='Window = ball of this radius (default 1)')
        parser.add_argument('--table-radius', type=int, help='Radius of the base table (default 4)')
        parser.add_argument('--g', type=str, help='Element of the descent kernel')
        parser.add_argument('--x', type=str, help='Element with a finite conjugacy class (icc)')
        parser.add_argument('--r', type=int, help='Class radius for icc (default 1)')
        parser.add_argument('--cofinite', action='store_true',
                            help='icc: generate by G minus the class of x')
        parser.add_argument('--C', type=int, help='Constant of the incomparability kernel')
        parser.add_argument('--weights', type=str,
                            help='WeightSpec JSON of the base length (default: word length)')
        parser.add_argument('--weights2', type=str,
                            help='WeightSpec JSON of the second length for incomparability')
        parser.add_argument('--cap', type=int, help='Cap of the proper length')
        parser.add_argument('--sample', type=int, help='Conjugators sampled by icc')

    def experiment_params(self, options):
        return {
            'which': options.get('which'),
            'F': split_tokens(options.get('window')),
            'f_radius': options.get('f_radius'),
            'table_radius': options.get('table_radius'),
            'g': options.get('g'),
            'x': options.get('x'),
            'r': options.get('r'),
            'cofinite': options.get('cofinite') or None,
            'C': options.get('C'),
            'weights': self.load_weight(options.get('weights')),
            'weights2': self.load_weight(options.get('weights2')),
            'cap': options.get('cap'),
            'sample': options.get('sample'),
        }
