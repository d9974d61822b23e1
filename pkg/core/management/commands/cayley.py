from core.commands import ExperimentCommand


class Command(ExperimentCommand):
    help = 'Ball of radius r in the Cayley graph of a length function'
    command_name = 'cayley'

    def add_experiment_arguments(self, parser):
        parser.add_argument('--weights', type=str, help='WeightSpec JSON file (default: word length)')
        parser.add_argument('--cap', type=int, help='Cap of the weighted length table')

    def experiment_params(self, options):
        return {
            'weights': self.load_weight(options.get('weights')),
            'cap': options.get('cap'),
        }
