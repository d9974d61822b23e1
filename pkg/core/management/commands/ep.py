from core.commands import ExperimentCommand, split_ints, split_tokens


class Command(ExperimentCommand):
    help = 'Search a Cayley ball for a vertex realizing given distances to a tuple'
    command_name = 'ep'

    def add_experiment_arguments(self, parser):
        parser.add_argument('--tuple', type=str, required=False,
                            help="Element tokens separated by ';', e.g. \"1;b\"")
        parser.add_argument('--distances', type=str, help='Comma-separated distances')
        parser.add_argument('--weights', type=str, help='WeightSpec JSON file (default: word length)')

    def experiment_params(self, options):
        return {
            'tuple': split_tokens(options.get('tuple')),
            'distances': split_ints(options.get('distances')),
            'weights': self.load_weight(options.get('weights')),
        }
