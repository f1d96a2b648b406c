from django.apps import AppConfig


class SimulationsConfig(AppConfig):
    name = 'sim'
    verbose_name = 'Simulation campaigns'
