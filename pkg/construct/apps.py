from django.apps import AppConfig


class ConstructConfig(AppConfig):
    name = 'construct'
    verbose_name = 'Rate-profile construction'
