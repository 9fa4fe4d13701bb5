from django.urls import re_path

from characters import views


urlpatterns = [
    re_path(r'^character/$', views.CharacterView.as_view(), name='character'),
    re_path(r'^growth/$', views.GrowthPresetView.as_view(), name='growth'),
    re_path(r'^growth/series/$',
            views.GrowthSeriesView.as_view(), name='growth-series'),
]
