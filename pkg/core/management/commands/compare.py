from core.commands import ExperimentCommand


class Command(ExperimentCommand):
    help = 'Bi-Lipschitz comparison of two length tables in both directions'
    command_name = 'compare'

    def add_experiment_arguments(self, parser):
        parser.add_argument('--C', type=int, help='Lipschitz constant (default 1)')
        parser.add_argument('--weights1', type=str, help='WeightSpec JSON of the first length')
        parser.add_argument('--weights2', type=str, help='WeightSpec JSON of the second length')
        parser.add_argument('--generators2', type=str,
                            help='Generators of the second word length (default: --generators)')

    def experiment_params(self, options):
        return {
            'C': options.get('C'),
            'weights1': self.load_weight(options.get('weights1')),
            'weights2': self.load_weight(options.get('weights2')),
            'generators2': options.get('generators2'),
        }
