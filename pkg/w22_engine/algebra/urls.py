from django.urls import re_path

from algebra import views


urlpatterns = [
    re_path(r'^bracket/$', views.BracketView.as_view(), name='bracket'),
    re_path(r'^normal-order/$',
            views.NormalOrderView.as_view(), name='normal-order'),
]
