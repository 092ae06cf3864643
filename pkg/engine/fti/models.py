from django.db import models

CACHE_FORMAT_VERSION = 1
NORMALIZATION = 'w2-bourbaki;long-roots-2'


class CacheHeader(models.Model):
    """
    One row per root system present in the cache.

    A reader refuses to use records whose header disagrees with the running
    code on format version or normalization tag.
    """
    system = models.CharField(max_length=8, unique=True)
    format_version = models.PositiveIntegerField(default=CACHE_FORMAT_VERSION)
    normalization = models.CharField(max_length=64, default=NORMALIZATION)
    created_at = models.DateTimeField(auto_now_add=True)

    def __str__(self):
        return f"{self.system} cache v{self.format_version} ({self.normalization})"


class CacheRecord(models.Model):
    """
    An immutable computed table entry.

    (system, kind, key) is unique at the DB level, so two workers racing on the
    same entry cannot both insert; the loser compares payloads instead.
    """
    KIND_CHOICES = [
        ('decomp', 'Orbit product decomposition'),
        ('m2tau', 'Orbit function in τ'),
        ('coeffA', 'A coefficient'),
        ('coeffC', 'c coefficient'),
        ('hint', 'Reflection-string expansion'),
    ]
    system = models.CharField(max_length=8, db_index=True)
    kind = models.CharField(max_length=8, choices=KIND_CHOICES)
    key = models.CharField(max_length=255)
    payload = models.TextField()  # canonical JSON
    created_at = models.DateTimeField(auto_now_add=True)

    class Meta:
        unique_together = ('system', 'kind', 'key')
        ordering = ['system', 'kind', 'key']

    def __str__(self):
        return f"{self.system}/{self.kind}/{self.key}"
