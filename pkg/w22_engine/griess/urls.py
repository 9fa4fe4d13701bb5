from django.urls import re_path

from griess import views


urlpatterns = [
    re_path(r'^classify/$', views.ClassifyView.as_view(), name='classify'),
    re_path(r'^pipeline/$', views.PipelineView.as_view(), name='pipeline'),
]
