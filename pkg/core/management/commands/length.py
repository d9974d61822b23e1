from core.commands import ExperimentCommand


class Command(ExperimentCommand):
    help = 'Length table of a weight (or the word length) on a ball'
    command_name = 'length'

    def add_experiment_arguments(self, parser):
        parser.add_argument('--weights', type=str, help='WeightSpec JSON file')
        parser.add_argument('--cap', type=int, help='Values above cap are reported as capped')

    def experiment_params(self, options):
        return {
            'weights': self.load_weight(options.get('weights')),
            'cap': options.get('cap'),
        }
