"""
Engine exceptions.

Every failure the engine can report derives from EngineError and carries a
stable machine-readable `code` plus a `detail` dict. The management commands
turn these into the `{"error": ..., "code": ..., "detail": ...}` payload and a
nonzero exit status.
"""


class EngineError(Exception):
    code = 'engine_error'

    def __init__(self, message, **detail):
        super().__init__(message)
        self.message = message
        self.detail = detail

    def to_dict(self):
        return {'error': self.message, 'code': self.code, 'detail': self.detail}


class UnknownSystemError(EngineError):
    code = 'unknown_system'


class RankOutOfRangeError(EngineError):
    code = 'rank_out_of_range'


class DimensionMismatchError(EngineError):
    code = 'dimension_mismatch'


class IndexOutOfRangeError(EngineError):
    code = 'index_out_of_range'


class NonDominantWeightError(EngineError):
    code = 'non_dominant_weight'


class MemoryCapExceeded(EngineError):
    code = 'memory_cap_exceeded'


class SlowTierRequired(EngineError):
    code = 'slow_tier_required'


class ResonanceError(EngineError):
    code = 'resonance'


class InvalidCouplingError(EngineError):
    code = 'invalid_coupling'


class CacheHeaderMismatch(EngineError):
    code = 'cache_header_mismatch'


class CacheConflictError(EngineError):
    code = 'cache_conflict'


class ValidationFailed(EngineError):
    code = 'validation_failed'
