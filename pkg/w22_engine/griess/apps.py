from django.apps import AppConfig


class GriessConfig(AppConfig):
    name = 'griess'
