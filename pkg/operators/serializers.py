from rest_framework import serializers

from calculator.evaluation import evaluate, evaluate_polynomial
from kernel.exceptions import ExpressionSyntaxError


class ExpressionField(serializers.CharField):
    """An operator expression, validated into its canonical form."""

    parse = staticmethod(evaluate)

    def to_internal_value(self, data):
        text = super().to_internal_value(data)
        try:
            return self.parse(text)
        except ExpressionSyntaxError as exc:
            raise serializers.ValidationError(f'{exc.message} (position {exc.position})')


class PolynomialField(ExpressionField):
    parse = staticmethod(evaluate_polynomial)


class ExpressionSerializer(serializers.Serializer):
    expr = ExpressionField()


class ProductSerializer(serializers.Serializer):
    left = ExpressionField()
    right = ExpressionField()


class ApplySerializer(serializers.Serializer):
    expr = ExpressionField()
    polynomial = PolynomialField()


class GradeSerializer(serializers.Serializer):
    expr = ExpressionField()
    component = serializers.IntegerField(required=False, allow_null=True, default=None)


class OracleSerializer(serializers.Serializer):
    left = ExpressionField()
    right = ExpressionField(required=False, allow_null=True, default=None)
    size = serializers.IntegerField(required=False, min_value=0, allow_null=True, default=None)
    dump = serializers.BooleanField(required=False, default=False)
