from django.apps import AppConfig


class WeightmodulesConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'weightmodules'
    verbose_name = 'Generalized weight modules'
