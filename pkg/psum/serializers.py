from rest_framework import serializers

from psum.models import VerificationRun
from psum.orderings import partial_sums


class NotFoundSerializer(serializers.Serializer):
    group = serializers.CharField(source='candidate.ambient.name')
    subset = serializers.SerializerMethodField('_get_subset')
    zero_free = serializers.BooleanField()
    search_space = serializers.IntegerField()
    nodes = serializers.IntegerField()

    def _get_subset(self, obj):
        return obj.candidate.labels()


class OrderOutcomeSerializer(serializers.Serializer):
    status = serializers.SerializerMethodField('_get_status')
    group = serializers.CharField(source='candidate.ambient.name')
    subset = serializers.SerializerMethodField('_get_subset')
    zero_free = serializers.BooleanField()
    ordering = serializers.SerializerMethodField('_get_ordering')
    partial_sums = serializers.SerializerMethodField('_get_partial_sums')
    strategy = serializers.CharField(allow_null=True)
    branch = serializers.CharField(allow_null=True)
    certificate = serializers.SerializerMethodField('_get_certificate')

    def _get_status(self, obj):
        return 'found' if obj.result else 'not_found'

    def _get_subset(self, obj):
        return obj.candidate.labels()

    def _get_ordering(self, obj):
        if obj.result:
            return obj.result.labels()

    def _get_partial_sums(self, obj):
        if obj.result:
            return partial_sums(obj.result).labels()

    def _get_certificate(self, obj):
        if not obj.result:
            return NotFoundSerializer(obj.result).data


class CounterexampleSerializer(serializers.Serializer):
    group = serializers.CharField(source='group_id')
    subset = serializers.ListField(source='labels')
    elements = serializers.ListField(source='items')
    search_space = serializers.IntegerField()
    nodes = serializers.IntegerField()


class GroupReportSerializer(serializers.Serializer):
    group = serializers.CharField(source='group_id')
    order = serializers.IntegerField()
    examined = serializers.IntegerField()
    witnesses = serializers.IntegerField()
    constructive = serializers.IntegerField()
    brute_force = serializers.IntegerField()
    counterexamples = CounterexampleSerializer(many=True)
    cursor = serializers.IntegerField()
    complete = serializers.BooleanField()

    def to_representation(self, instance):
        data = super().to_representation(instance)
        if instance.stored:
            data['witness_store'] = instance.stored
        return data


class VerificationReportSerializer(serializers.Serializer):
    job = serializers.SerializerMethodField('_get_job')
    complete = serializers.BooleanField()
    examined = serializers.IntegerField()
    counterexample_count = serializers.SerializerMethodField(
        '_get_counterexample_count')
    groups = GroupReportSerializer(many=True)

    def _get_job(self, obj):
        data = obj.job.describe()
        data['job_hash'] = obj.job.job_hash
        data['family_label'] = obj.job.family_label
        return data

    def _get_counterexample_count(self, obj):
        return len(obj.counterexamples)


def report_timing(report):
    return {
        'total': round(report.elapsed, 6),
        'groups': {g.group_id: round(g.elapsed, 6) for g in report.groups},
    }


class VerificationRunSerializer(serializers.ModelSerializer):
    counterexamples = serializers.SerializerMethodField('_get_counterexamples')

    class Meta:
        model = VerificationRun
        fields = ('id', 'job_hash', 'conjecture', 'family', 'complete',
                  'counterexample_count', 'counterexamples', 'date_created')

    def _get_counterexamples(self, obj):
        return [{'group': c.group, 'subset': c.subset,
                 'search_space': c.search_space}
                for c in obj.counterexamples.all()]


class HeffterSystemSerializer(serializers.Serializer):
    v = serializers.IntegerField()
    k = serializers.IntegerField()
    parts = serializers.SerializerMethodField('_get_parts')

    def _get_parts(self, obj):
        return obj.signed_parts()


class ViolationSerializer(serializers.Serializer):
    reason = serializers.CharField()
    elements = serializers.ListField()
    part = serializers.IntegerField(allow_null=True)


class BaseCyclesSerializer(serializers.Serializer):
    system = HeffterSystemSerializer()
    orderings = serializers.SerializerMethodField('_get_orderings')
    strategies = serializers.ListField()
    cycles = serializers.SerializerMethodField('_get_cycles')
    differences_cover = serializers.SerializerMethodField(
        '_get_differences_cover')

    def _get_orderings(self, obj):
        return [list(o.items) for o in obj.orderings]

    def _get_cycles(self, obj):
        return [list(c.vertices) for c in obj.cycles]

    def _get_differences_cover(self, obj):
        return (sorted(obj.differences().elements())
                == list(range(1, obj.system.v)))


class DecompositionSerializer(serializers.Serializer):
    """Certificate for a developed cycle system; ``base`` in context."""
    v = serializers.IntegerField()
    cycle_count = serializers.SerializerMethodField('_get_cycle_count')
    cycle_length = serializers.SerializerMethodField('_get_cycle_length')
    edges_covered = serializers.IntegerField()
    expected_edges = serializers.SerializerMethodField('_get_expected_edges')
    is_decomposition = serializers.BooleanField()
    translation_closed = serializers.BooleanField()
    base = serializers.SerializerMethodField('_get_base')

    def _get_cycle_count(self, obj):
        return len(obj.cycles)

    def _get_cycle_length(self, obj):
        return len(obj.cycles[0]) if obj.cycles else None

    def _get_expected_edges(self, obj):
        return obj.v * (obj.v - 1) // 2

    def _get_base(self, obj):
        base = self.context.get('base')
        if base is not None:
            return BaseCyclesSerializer(base).data


class LengthListSerializer(serializers.Serializer):
    v = serializers.IntegerField()
    size = serializers.IntegerField()
    entries = serializers.SerializerMethodField('_get_entries')

    def _get_entries(self, obj):
        return str(obj)


class RealizationSerializer(serializers.Serializer):
    target = serializers.CharField()
    v = serializers.IntegerField()
    vertices = serializers.ListField()
    pairs = serializers.SerializerMethodField('_get_pairs')
    lengths = serializers.SerializerMethodField('_get_lengths')

    def _get_pairs(self, obj):
        return [list(p) for p in obj.pairs]

    def _get_lengths(self, obj):
        return str(obj.lengths())


class SearchExhaustedSerializer(serializers.Serializer):
    target = serializers.CharField()
    nodes = serializers.IntegerField()
    length_list = LengthListSerializer()


class SignAssignmentSerializer(serializers.Serializer):
    v = serializers.IntegerField()
    values = serializers.ListField()
    signs = serializers.ListField()
    terms = serializers.SerializerMethodField('_get_terms')
    partial_sums = serializers.SerializerMethodField('_get_partial_sums')

    def _get_terms(self, obj):
        return obj.terms()

    def _get_partial_sums(self, obj):
        return obj.partial_sums()


class ConditionRowSerializer(serializers.Serializer):
    condition = serializers.CharField()
    passed = serializers.BooleanField()
    detail = serializers.CharField(allow_blank=True)
