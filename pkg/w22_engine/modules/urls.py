from django.urls import re_path

from modules import views


urlpatterns = [
    re_path(r'^basis/$', views.BasisView.as_view(), name='basis'),
    re_path(r'^gram/$', views.GramView.as_view(), name='gram'),
    re_path(r'^irreducible/$',
            views.IrreducibleView.as_view(), name='irreducible'),
]
