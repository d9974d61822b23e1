"""
Input validation and published JSON schemas for every artifact type

The serializers are plain DRF Serializers over in-memory values: validating
builds the domain object, save() returns it and to_representation emits
the object's canonical to_dict() form.
"""
from dataclasses import fields as dataclass_fields

from rest_framework import serializers

from cayley.graphs import FiniteGraph
from groups.catalog import VARIANTS, GroupSpec
from groups.generating import GeneratingSet
from lengths.tables import LengthTable
from lengths.weights import WeightSpec
from .config import COMMANDS, DEFAULT_GROUP, OUTPUT_FORMATS, ExperimentConfig, canonical_command
from .exceptions import LengthLabError
from .responses import ErrorCodes, ExitCodes
from .results import Outcome
from .validators import (
    validate_budgets, validate_distance_list, validate_edge_list,
    validate_experiment_params, validate_radius, validate_table_entries,
    validate_weight_support,
)


def _domain_error(exc: Exception) -> serializers.ValidationError:
    message = exc.message if isinstance(exc, LengthLabError) else str(exc)
    return serializers.ValidationError(message)


class GroupField(serializers.Field):
    """A short group token (free:2, product(cyclic:2,vc)) or a GroupSpec object"""

    default_error_messages = {
        'invalid': 'Expected a group token or a GroupSpec JSON object.',
    }

    def to_internal_value(self, data):
        try:
            if isinstance(data, GroupSpec):
                return data
            if isinstance(data, dict):
                return GroupSpec.from_dict(data)
            if isinstance(data, str):
                return GroupSpec.parse(data)
        except (LengthLabError, ValueError, TypeError) as e:
            raise _domain_error(e)
        self.fail('invalid')

    def to_representation(self, value):
        return value.to_dict()


class GroupSpecSerializer(serializers.Serializer):
    variant = serializers.ChoiceField(choices=sorted(VARIANTS))
    params = serializers.DictField(required=False, default=dict)

    def validate(self, attrs):
        try:
            attrs['instance'] = GroupSpec.from_dict(attrs)
        except (LengthLabError, ValueError, TypeError) as e:
            raise _domain_error(e)
        return attrs

    def create(self, validated_data):
        return validated_data['instance']

    def to_representation(self, instance):
        return instance.to_dict()


class WeightDefaultSerializer(serializers.Serializer):
    rule = serializers.ChoiceField(choices=['constant', 'ramp'])
    M = serializers.IntegerField(required=False, min_value=1)
    M0 = serializers.IntegerField(required=False, min_value=0)

    def validate(self, attrs):
        needed = 'M' if attrs['rule'] == 'constant' else 'M0'
        if needed not in attrs:
            raise serializers.ValidationError(f"The {attrs['rule']} rule needs {needed}.")
        return attrs


class WeightSpecSerializer(serializers.Serializer):
    """WeightSpec JSON; the group may come from context['group'] instead"""

    group = GroupField(required=False)
    support = serializers.JSONField(validators=[validate_weight_support])
    default = WeightDefaultSerializer()

    def validate(self, attrs):
        group = attrs.get('group') or self.context.get('group')
        if group is None:
            raise serializers.ValidationError({'group': 'A weight needs a group.'})
        try:
            attrs['instance'] = WeightSpec.from_dict({
                'group': group.to_dict(),
                'support': attrs['support'],
                'default': dict(attrs['default']),
            })
        except (LengthLabError, ValueError, KeyError) as e:
            raise _domain_error(e)
        return attrs

    def create(self, validated_data):
        return validated_data['instance']

    def to_representation(self, instance):
        return instance.to_dict()


class LengthTableSerializer(serializers.Serializer):
    group = GroupField()
    entries = serializers.JSONField(validators=[validate_table_entries])
    exact_radius = serializers.IntegerField(required=False, default=0, min_value=0)
    complete_below = serializers.IntegerField(required=False, default=0, min_value=0)

    def validate(self, attrs):
        try:
            attrs['instance'] = LengthTable.from_dict({**attrs, 'group': attrs['group'].to_dict()})
        except (LengthLabError, ValueError) as e:
            raise _domain_error(e)
        return attrs

    def create(self, validated_data):
        return validated_data['instance']

    def to_representation(self, instance):
        return instance.to_dict()


class GraphSerializer(serializers.Serializer):
    vertices = serializers.ListField(child=serializers.CharField(), allow_empty=True)
    edges = serializers.JSONField(required=False, default=list)

    def validate_vertices(self, value):
        if len(set(value)) != len(value):
            raise serializers.ValidationError("Vertex names must be unique.")
        return value

    def validate(self, attrs):
        validate_edge_list(attrs['edges'], len(attrs['vertices']))
        try:
            attrs['instance'] = FiniteGraph.from_dict(attrs)
        except LengthLabError as e:
            raise _domain_error(e)
        return attrs

    def create(self, validated_data):
        return validated_data['instance']

    def to_representation(self, instance):
        return instance.to_dict()


class CheckSerializer(serializers.Serializer):
    description = serializers.CharField()
    expected = serializers.JSONField(allow_null=True)
    actual = serializers.JSONField(allow_null=True)
    passed = serializers.BooleanField()


class RejectionSerializer(serializers.Serializer):
    candidate = serializers.CharField()
    reason = serializers.CharField()


class ConstructionReportSerializer(serializers.Serializer):
    """Published schema of a kernel report; reports are produced, never parsed"""

    kernel = serializers.CharField()
    inputs = serializers.DictField()
    status = serializers.ChoiceField(choices=['accepted', 'vacuous', 'not_found', 'completed'])
    witness = serializers.CharField(allow_null=True)
    weight = serializers.DictField(allow_null=True)
    checks = CheckSerializer(many=True)
    rejected = RejectionSerializer(many=True)
    rejected_count = serializers.IntegerField(min_value=0)
    notes = serializers.DictField()
    outcome = serializers.DictField(allow_null=True)
    overall = serializers.BooleanField()

    def validate(self, attrs):
        if attrs['overall'] != all(c['passed'] for c in attrs['checks']):
            raise serializers.ValidationError("overall must be the conjunction of the checks.")
        if attrs['rejected_count'] < len(attrs['rejected']):
            raise serializers.ValidationError("rejected_count is below the logged rejections.")
        if attrs['weight'] is not None:
            WeightSpecSerializer(data=attrs['weight']).is_valid(raise_exception=True)
        return attrs

    def to_representation(self, instance):
        return instance.to_dict()


class ExperimentConfigSerializer(serializers.Serializer):
    command = serializers.CharField()
    group = GroupField(required=False, default=DEFAULT_GROUP)
    generators = serializers.CharField(required=False, allow_null=True, allow_blank=True)
    radius = serializers.IntegerField(required=False, allow_null=True, validators=[validate_radius])
    seed = serializers.IntegerField(required=False, default=0, min_value=0)
    format = serializers.ChoiceField(choices=OUTPUT_FORMATS, required=False, default='json')
    output_dir = serializers.CharField(required=False, allow_null=True, allow_blank=True)
    budgets = serializers.JSONField(required=False, default=dict, validators=[validate_budgets])
    params = serializers.JSONField(required=False, default=dict,
                                   validators=[validate_experiment_params])

    def validate_command(self, value):
        try:
            return canonical_command(value)
        except LengthLabError as e:
            raise serializers.ValidationError(f"{e.message}; choose one of {', '.join(COMMANDS)}.")

    def validate(self, attrs):
        if isinstance(attrs.get('group'), str):
            attrs['group'] = GroupSpec.parse(attrs['group'])
        text = attrs.get('generators')
        attrs['generators'] = None
        if text:
            try:
                X = GeneratingSet.parse(attrs['group'], text)
            except (LengthLabError, ValueError) as e:
                raise serializers.ValidationError({'generators': _domain_error(e).detail})
            if not X.is_verified_generating:
                raise serializers.ValidationError(
                    {'generators': f"{X.token} does not generate {attrs['group'].label}."}
                )
            attrs['generators'] = X
        return attrs

    def create(self, validated_data):
        return ExperimentConfig(
            command=validated_data['command'],
            group=validated_data['group'],
            generators=validated_data['generators'],
            radius=validated_data.get('radius'),
            seed=validated_data['seed'],
            output_format=validated_data['format'],
            output_dir=validated_data.get('output_dir') or None,
            budgets=validated_data['budgets'],
            params=validated_data['params'],
        )

    def to_representation(self, instance):
        return instance.to_dict()


OUTCOME_KINDS = {cls.__name__: cls for cls in Outcome.__subclasses__()}


class OutcomeSerializer(serializers.Serializer):
    """Tagged outcome value; every dataclass field of the kind must be present"""

    kind = serializers.ChoiceField(choices=sorted(OUTCOME_KINDS))

    def to_internal_value(self, data):
        attrs = super().to_internal_value(data)
        names = {item.name for item in dataclass_fields(OUTCOME_KINDS[attrs['kind']])}
        missing = sorted(names - set(data))
        if missing:
            raise serializers.ValidationError(f"{attrs['kind']} lacks {', '.join(missing)}.")
        attrs.update({name: data[name] for name in names})
        return attrs


class DemandSerializer(serializers.Serializer):
    tuple = serializers.ListField(child=serializers.CharField())
    distances = serializers.JSONField(validators=[validate_distance_list])

    def validate(self, attrs):
        if len(attrs['tuple']) != len(attrs['distances']):
            raise serializers.ValidationError("tuple and distances differ in length.")
        return attrs


class WitnessOrOutcomeMixin:
    """Payloads carrying either a witness token or the window-scoped outcome"""

    def validate(self, attrs):
        if ('witness' in attrs) == ('outcome' in attrs):
            raise serializers.ValidationError("Expected exactly one of witness and outcome.")
        return attrs


class CayleyPayloadSerializer(serializers.Serializer):
    graph = GraphSerializer()
    vertices = serializers.IntegerField(min_value=0)
    edges = serializers.IntegerField(min_value=0)
    connected = serializers.BooleanField()

    def validate(self, attrs):
        graph = attrs['graph']['instance']
        if attrs['vertices'] != len(graph) or attrs['edges'] != graph.edge_count:
            raise serializers.ValidationError("Counts disagree with the graph.")
        return attrs


class RoundLedgerSerializer(serializers.Serializer):
    round = serializers.IntegerField(min_value=1)
    demands = serializers.IntegerField(min_value=0)
    met = serializers.IntegerField(min_value=0)
    added = serializers.IntegerField(min_value=0)
    unmet = DemandSerializer(many=True)


class SweepSerializer(serializers.Serializer):
    checked = serializers.IntegerField(min_value=0)
    passed = serializers.IntegerField(min_value=0)
    failures = DemandSerializer(many=True)

    def validate(self, attrs):
        if attrs['passed'] + len(attrs['failures']) != attrs['checked']:
            raise serializers.ValidationError("passed + failures != checked.")
        return attrs


class MossPayloadSerializer(CayleyPayloadSerializer):
    rounds = RoundLedgerSerializer(many=True)
    sweep = SweepSerializer()


class EpPayloadSerializer(WitnessOrOutcomeMixin, DemandSerializer):
    vertices = serializers.IntegerField(min_value=0)
    witness = serializers.CharField(required=False)
    outcome = OutcomeSerializer(required=False)

    def validate(self, attrs):
        DemandSerializer.validate(self, attrs)
        return super().validate(attrs)


class MifPayloadSerializer(WitnessOrOutcomeMixin, serializers.Serializer):
    words = serializers.ListField(child=serializers.CharField(), allow_empty=False)
    radius = serializers.IntegerField(min_value=0)
    witness = serializers.CharField(required=False)
    values = serializers.DictField(child=serializers.CharField(), required=False)
    outcome = OutcomeSerializer(required=False)

    def validate(self, attrs):
        attrs = super().validate(attrs)
        if 'witness' in attrs and set(attrs.get('values', {})) != set(attrs['words']):
            raise serializers.ValidationError("A witness needs the value of every word.")
        return attrs


class ComparePayloadSerializer(serializers.Serializer):
    C = serializers.IntegerField(min_value=1)
    radius = serializers.IntegerField(min_value=0)
    l1_vs_l2 = OutcomeSerializer()
    l2_vs_l1 = OutcomeSerializer()
    incomparable = serializers.BooleanField()

    def validate(self, attrs):
        both = all(attrs[key]['kind'] == 'WitnessAgainst' for key in ('l1_vs_l2', 'l2_vs_l1'))
        if attrs['incomparable'] != both:
            raise serializers.ValidationError(
                "incomparable must hold exactly when both directions have a witness."
            )
        return attrs


PAYLOAD_SERIALIZERS = {
    'length': LengthTableSerializer,
    'cayley': CayleyPayloadSerializer,
    'ep': EpPayloadSerializer,
    'moss': MossPayloadSerializer,
    'mif': MifPayloadSerializer,
    'lemD': ConstructionReportSerializer,
    'tt': ConstructionReportSerializer,
    'compare': ComparePayloadSerializer,
    'examples': ConstructionReportSerializer,
    'density': ConstructionReportSerializer,
}


class CommandResultSerializer(serializers.Serializer):
    """Published schema of every command artifact

    With context['command'] the data payload is checked against that
    command's payload schema; configuration errors carry no payload.
    """

    success = serializers.BooleanField()
    message = serializers.CharField()
    exit_code = serializers.ChoiceField(
        choices=[ExitCodes.SUCCESS, ExitCodes.NOT_FOUND, ExitCodes.CONFIGURATION_ERROR]
    )
    data = serializers.JSONField(allow_null=True)
    error_code = serializers.CharField(required=False)
    details = serializers.JSONField(required=False)

    def validate(self, attrs):
        if attrs['success'] != (attrs['exit_code'] == ExitCodes.SUCCESS):
            raise serializers.ValidationError("success must match exit code 0.")
        if not attrs['success'] and not attrs.get('error_code'):
            raise serializers.ValidationError({'error_code': 'Failures need an error code.'})
        if attrs['exit_code'] == ExitCodes.CONFIGURATION_ERROR:
            if attrs['data'] is not None:
                raise serializers.ValidationError({'data': 'Errors carry no payload.'})
            return attrs
        if attrs['exit_code'] == ExitCodes.NOT_FOUND and attrs['error_code'] not in (
                ErrorCodes.NOT_FOUND, ErrorCodes.CHECKS_FAILED):
            raise serializers.ValidationError({'error_code': 'Unexpected code for exit 1.'})

        command = self.context.get('command')
        if command is not None:
            payload = PAYLOAD_SERIALIZERS[canonical_command(command)](data=attrs['data'])
            if not payload.is_valid():
                raise serializers.ValidationError({'data': payload.errors})
        return attrs
