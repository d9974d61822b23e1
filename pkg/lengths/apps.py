from django.apps import AppConfig


class LengthsConfig(AppConfig):
    name = 'lengths'
    verbose_name = 'Length Functions'
