from dataclasses import dataclass, replace


@dataclass(frozen=True)
class EngineConfig:
    """Knobs the computational modules accept. Built from settings.FTI_ENGINE by the commands."""
    threads: int = 1
    mem_cap: int = 2_000_000
    slow: bool = False
    slow_orbit_size: int = 400_000
    membership_budget: int = 20_000_000
    sample_margin: float = 1e-3

    def with_overrides(self, **overrides):
        return replace(self, **{k: v for k, v in overrides.items() if v is not None})


def engine_config(**overrides):
    # Imported lazily so the library modules never need configured settings.
    from django.conf import settings

    options = getattr(settings, 'FTI_ENGINE', {})
    config = EngineConfig(
        threads=options.get('THREADS', 1),
        mem_cap=options.get('MEM_CAP', 2_000_000),
        slow_orbit_size=options.get('SLOW_ORBIT_SIZE', 400_000),
        membership_budget=options.get('MEMBERSHIP_BUDGET', 20_000_000),
        sample_margin=options.get('SAMPLE_MARGIN', 1e-3),
    )
    return config.with_overrides(**overrides)
