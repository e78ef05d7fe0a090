from django.apps import AppConfig


class PsumConfig(AppConfig):
    name = 'psum'
    verbose_name = 'Partial sums toolkit'
