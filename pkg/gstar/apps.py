from django.apps import AppConfig


class GstarConfig(AppConfig):
    name = 'gstar'
    verbose_name = 'Mixed Identities'
