"""
URL configuration for intdiff_backend project.

Every computation is exposed twice: through the ``intdiff`` management
command and through the JSON endpoints below.
"""
from django.urls import path, include
from drf_spectacular.views import SpectacularAPIView, SpectacularSwaggerView
from rest_framework.response import Response
from rest_framework.decorators import api_view


@api_view(['GET'])
def api_root(request):
    return Response({
        'message': 'intdiff API',
        'version': '1.0.0',
        'endpoints': {
            'operators': '/api/v1/operators/',
            'modules': '/api/v1/modules/',
            'documentation': '/api/docs/',
            'schema': '/api/schema/',
        }
    })


urlpatterns = [
    path('api/', api_root, name='api-root'),

    path('api/v1/', include('operators.urls')),
    path('api/v1/', include('weightmodules.urls')),

    # API Documentation
    path('api/schema/', SpectacularAPIView.as_view(), name='schema'),
    path('api/docs/', SpectacularSwaggerView.as_view(url_name='schema'), name='swagger-ui'),
]
