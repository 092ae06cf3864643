from unittest import skipUnless

from django.conf import settings
from django.test import tag

from fti.conf import EngineConfig

SLOW_CONFIG = EngineConfig(slow=True)


def slow_test(test):
    """Slow tier: tagged `slow` and skipped unless FTI_SLOW_TESTS=true."""
    enabled = settings.FTI_ENGINE.get('RUN_SLOW_TESTS', False)
    return tag('slow')(skipUnless(enabled, 'slow tier; set FTI_SLOW_TESTS=true')(test))
