from rest_framework import serializers

from calculator.reports import build_from_specs
from kernel.exceptions import ModuleSpecError
from .homological import parse_module_spec
from .schema import module_from_dict


class ModuleField(serializers.Field):
    """A spec such as "M(2,1/2)" or "Kx+M(1,0)", or a JSON module document."""

    def to_internal_value(self, data):
        if isinstance(data, str):
            return data
        if isinstance(data, dict):
            try:
                return module_from_dict(data)
            except ModuleSpecError as exc:
                raise serializers.ValidationError(exc.message)
        raise serializers.ValidationError('Expected a module spec string or a module document.')

    def to_representation(self, value):
        return str(value)


class WindowSerializer(serializers.Serializer):
    lo = serializers.IntegerField(required=False, allow_null=True, default=None)
    hi = serializers.IntegerField(required=False, allow_null=True, default=None)

    def resolve(self, value, attrs):
        if not isinstance(value, str):
            return value
        try:
            return build_from_specs(value, attrs['lo'], attrs['hi'])
        except ModuleSpecError as exc:
            raise serializers.ValidationError(exc.message)

    def classify(self, value):
        if not isinstance(value, str) or '+' in value:
            return None
        return parse_module_spec(value)


class ModuleSerializer(WindowSerializer):
    module = ModuleField()
    scramble_seed = serializers.IntegerField(required=False, allow_null=True, default=None)

    def validate(self, attrs):
        attrs['module'] = self.resolve(attrs['module'], attrs)
        return attrs


class ModulePairSerializer(WindowSerializer):
    source = ModuleField()
    target = ModuleField()

    def validate(self, attrs):
        attrs['source_spec'] = self.classify(attrs['source'])
        attrs['target_spec'] = self.classify(attrs['target'])
        attrs['source'] = self.resolve(attrs['source'], attrs)
        attrs['target'] = self.resolve(attrs['target'], attrs)
        return attrs
