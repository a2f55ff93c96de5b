from rest_framework import viewsets
from rest_framework.decorators import action
from rest_framework.response import Response
from drf_spectacular.utils import extend_schema

from calculator import reports
from .serializers import (
    ApplySerializer, ExpressionSerializer, GradeSerializer, OracleSerializer, ProductSerializer,
)


class OperatorViewSet(viewsets.ViewSet):
    """Canonical forms, products and the polynomial action, one POST per computation."""

    def _validated(self, serializer_class, request):
        serializer = serializer_class(data=request.data)
        serializer.is_valid(raise_exception=True)
        return serializer.validated_data

    @extend_schema(
        summary="Canonical form of an operator expression",
        request=ExpressionSerializer,
        responses={200: {"type": "object"}}
    )
    @action(detail=False, methods=['post'])
    def normalize(self, request):
        data = self._validated(ExpressionSerializer, request)
        return Response(reports.canonical_report(data['expr']))

    @extend_schema(
        summary="Canonical form of a product",
        request=ProductSerializer,
        responses={200: {"type": "object"}}
    )
    @action(detail=False, methods=['post'])
    def multiply(self, request):
        data = self._validated(ProductSerializer, request)
        return Response(reports.product_report(data['left'], data['right']))

    @extend_schema(
        summary="Act on a polynomial in x",
        request=ApplySerializer,
        responses={200: {"type": "object"}}
    )
    @action(detail=False, methods=['post'])
    def apply(self, request):
        data = self._validated(ApplySerializer, request)
        return Response(reports.apply_report(data['expr'], data['polynomial']))

    @extend_schema(
        summary="Graded components of an operator",
        request=GradeSerializer,
        responses={200: {"type": "object"}}
    )
    @action(detail=False, methods=['post'])
    def grade(self, request):
        data = self._validated(GradeSerializer, request)
        return Response(reports.grade_report(data['expr'], data['component']))

    @extend_schema(
        summary="Membership in the ideal F and in the diagonal subalgebra",
        request=ExpressionSerializer,
        responses={200: {"type": "object"}}
    )
    @action(detail=False, methods=['post'], url_path='in-f')
    def in_f(self, request):
        data = self._validated(ExpressionSerializer, request)
        return Response(reports.membership_report(data['expr']))

    @extend_schema(
        summary="Image in the skew Laurent quotient B1",
        request=ExpressionSerializer,
        responses={200: {"type": "object"}}
    )
    @action(detail=False, methods=['post'])
    def b1(self, request):
        data = self._validated(ExpressionSerializer, request)
        return Response(reports.b1_report(data['expr']))

    @extend_schema(
        summary="Truncated action matrix or product check against the action",
        request=OracleSerializer,
        responses={200: {"type": "object"}}
    )
    @action(detail=False, methods=['post'])
    def oracle(self, request):
        data = self._validated(OracleSerializer, request)
        return Response(reports.oracle_report(data['left'], data['right'], data['size'], data['dump']))
