from django.apps import AppConfig


class GenericityConfig(AppConfig):
    name = 'genericity'
    verbose_name = 'Genericity Kernels'
