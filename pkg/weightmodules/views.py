from rest_framework import viewsets
from rest_framework.decorators import action
from rest_framework.response import Response
from drf_spectacular.utils import extend_schema

from calculator import reports
from .serializers import ModulePairSerializer, ModuleSerializer


class ModuleViewSet(viewsets.ViewSet):
    """Windowed generalized weight modules: construction, splitting, decomposition, Hom and Ext."""

    def _validated(self, serializer_class, request):
        serializer = serializer_class(data=request.data)
        serializer.is_valid(raise_exception=True)
        return serializer.validated_data

    @extend_schema(
        summary="Build a module window, optionally scrambled",
        request=ModuleSerializer,
        responses={200: {"type": "object"}}
    )
    @action(detail=False, methods=['post'])
    def make(self, request):
        data = self._validated(ModuleSerializer, request)
        return Response(reports.make_report(data['module'], data['scramble_seed']))

    @extend_schema(
        summary="Multiplicity of K[x] and the M(n, lam) factors",
        request=ModuleSerializer,
        responses={200: {"type": "object"}}
    )
    @action(detail=False, methods=['post'])
    def decompose(self, request):
        data = self._validated(ModuleSerializer, request)
        return Response(reports.decompose_report(data['module']))

    @extend_schema(
        summary="Split off FM with an equivariant complement",
        request=ModuleSerializer,
        responses={200: {"type": "object"}}
    )
    @action(detail=False, methods=['post'])
    def split(self, request):
        data = self._validated(ModuleSerializer, request)
        return Response(reports.split_report(data['module']))

    @extend_schema(
        summary="Submodule chain of an indecomposable module",
        request=ModuleSerializer,
        responses={200: {"type": "object"}}
    )
    @action(detail=False, methods=['post'])
    def uniserial(self, request):
        data = self._validated(ModuleSerializer, request)
        return Response(reports.uniserial_report(data['module']))

    @extend_schema(
        summary="Dimension of Hom between two modules",
        request=ModulePairSerializer,
        responses={200: {"type": "object"}}
    )
    @action(detail=False, methods=['post'])
    def hom(self, request):
        data = self._validated(ModulePairSerializer, request)
        return Response(reports.hom_report(
            data['source'], data['target'], data['source_spec'], data['target_spec']
        ))

    @extend_schema(
        summary="Dimension of Ext^1 between classified modules, computed and as stated",
        request=ModulePairSerializer,
        responses={200: {"type": "object"}}
    )
    @action(detail=False, methods=['post'])
    def ext(self, request):
        data = self._validated(ModulePairSerializer, request)
        return Response(reports.ext_report(data['source_spec'], data['target_spec']))
