"""
Persistent store for computed tables.

Everything expensive (decompositions, M_n(τ), A_ab, c_a, reflection-string
expansions) is written once as canonical JSON and never rewritten. Writers race
safely: the (system, kind, key) unique constraint rejects the second INSERT and
the loser checks that what is already stored is byte-identical.
"""
import json
import logging
from pathlib import Path

from django.core.management import call_command
from django.db import IntegrityError, connections, transaction
from django.db.migrations.executor import MigrationExecutor
from django.db.models import Count

from .exceptions import CacheConflictError, CacheHeaderMismatch
from .models import CACHE_FORMAT_VERSION, NORMALIZATION, CacheHeader, CacheRecord

logger = logging.getLogger(__name__)

DATABASE_NAME = 'orbitcache.sqlite3'


def canonical_json(payload):
    return json.dumps(payload, sort_keys=True, separators=(',', ':'), ensure_ascii=False)


def use_cache_dir(path=None):
    """
    Point the default connection at `path` (unchanged when omitted) and
    bring the schema up to date. Only SQLite databases are repointed; a
    DATABASE_URL connection is migrated where it is.
    """
    connection = connections['default']
    if connection.vendor == 'sqlite':
        if path is not None:
            name = Path(path) / DATABASE_NAME
            if str(connection.settings_dict['NAME']) != str(name):
                connection.close()
                connection.settings_dict['NAME'] = name
        name = str(connection.settings_dict['NAME'])
        if not connection.is_in_memory_db():
            Path(name).parent.mkdir(parents=True, exist_ok=True)
    executor = MigrationExecutor(connection)
    if executor.migration_plan(executor.loader.graph.leaf_nodes()):
        call_command('migrate', verbosity=0, interactive=False)


class CacheStore:
    """fetch/save for one root system, validated against its header row."""

    def __init__(self, system):
        self.system = system
        self._checked = False

    def header(self):
        header, created = CacheHeader.objects.get_or_create(
            system=self.system,
            defaults={'format_version': CACHE_FORMAT_VERSION, 'normalization': NORMALIZATION},
        )
        if created:
            logger.info('new cache header for %s', self.system)
        return header

    def check_header(self):
        if self._checked:
            return
        header = self.header()
        if header.format_version != CACHE_FORMAT_VERSION or header.normalization != NORMALIZATION:
            raise CacheHeaderMismatch(
                f'cache for {self.system} was written as v{header.format_version} '
                f'({header.normalization}); expected v{CACHE_FORMAT_VERSION} ({NORMALIZATION})',
                system=self.system, found_version=header.format_version,
                found_normalization=header.normalization,
                expected_version=CACHE_FORMAT_VERSION, expected_normalization=NORMALIZATION,
            )
        self._checked = True

    def fetch(self, kind, key):
        self.check_header()
        record = CacheRecord.objects.filter(system=self.system, kind=kind, key=key).only('payload').first()
        if record is None:
            logger.debug('cache miss %s/%s/%s', self.system, kind, key)
            return None
        logger.debug('cache hit %s/%s/%s', self.system, kind, key)
        return json.loads(record.payload)

    def save(self, kind, key, payload):
        self.check_header()
        text = canonical_json(payload)
        try:
            with transaction.atomic():
                CacheRecord.objects.create(system=self.system, kind=kind, key=key, payload=text)
        except IntegrityError:
            stored = CacheRecord.objects.get(system=self.system, kind=kind, key=key).payload
            if stored != text:
                raise CacheConflictError(
                    f'cache record {self.system}/{kind}/{key} already holds a different payload',
                    system=self.system, kind=kind, key=key,
                )
            logger.debug('cache record %s/%s/%s already present', self.system, kind, key)

    def stats(self):
        records = CacheRecord.objects.filter(system=self.system)
        counts = {kind: 0 for kind, _ in CacheRecord.KIND_CHOICES}
        for row in records.values('kind').order_by().annotate(count=Count('id')):
            counts[row['kind']] = row['count']
        header = CacheHeader.objects.filter(system=self.system).first()
        return {
            'system': self.system,
            'format_version': header.format_version if header else None,
            'normalization': header.normalization if header else None,
            'records': counts,
            'total': sum(counts.values()),
        }

    def clear(self):
        deleted, _ = CacheRecord.objects.filter(system=self.system).delete()
        CacheHeader.objects.filter(system=self.system).delete()
        self._checked = False
        logger.info('cleared %d cache records for %s', deleted, self.system)
        return deleted


def cached_systems():
    systems = set(CacheHeader.objects.values_list('system', flat=True))
    systems.update(CacheRecord.objects.values_list('system', flat=True).distinct())
    return sorted(systems)
