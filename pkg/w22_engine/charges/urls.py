from django.urls import re_path

from charges import views


urlpatterns = [
    re_path(r'^minimal/$', views.MinimalChargeView.as_view(), name='minimal-charge'),
    re_path(r'^sum-one/$', views.SolveSumOneView.as_view(), name='sum-one'),
    re_path(r'^orbit/$', views.OrbitView.as_view(), name='orbit'),
    re_path(r'^noncongruent/$',
            views.NoncongruentView.as_view(), name='noncongruent'),
]
