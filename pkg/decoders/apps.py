from django.apps import AppConfig


class DecodersConfig(AppConfig):
    name = 'decoders'
    verbose_name = 'Decoders'
