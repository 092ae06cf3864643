from django.apps import AppConfig


class FtiConfig(AppConfig):
    """Orbit-method engine: root data, orbit algebra, algebraic Hamiltonians, spectra."""
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'fti'
    verbose_name = 'Fundamental trigonometric invariants'
