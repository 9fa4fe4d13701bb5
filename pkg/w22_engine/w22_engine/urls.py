"""w22_engine URL Configuration

Every app mounts its read-only endpoints under /api/v1/<app>/.
"""
from django.urls import include, re_path

urlpatterns = [
    re_path(r'^api/v1/algebra/', include('algebra.urls')),
    re_path(r'^api/v1/modules/', include('modules.urls')),
    re_path(r'^api/v1/characters/', include('characters.urls')),
    re_path(r'^api/v1/charges/', include('charges.urls')),
    re_path(r'^api/v1/griess/', include('griess.urls')),
]
