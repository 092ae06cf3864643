from django.apps import apps
from django.test import SimpleTestCase, TestCase

from fti.cache import CacheStore, cached_systems, canonical_json
from fti.exceptions import CacheConflictError, CacheHeaderMismatch
from fti.hamiltonian import Hamiltonian
from fti.models import CACHE_FORMAT_VERSION, NORMALIZATION, CacheHeader, CacheRecord
from fti.polynomials import parse_poly
from fti.rootdata import build_root_system


class CacheStoreTests(TestCase):

    def setUp(self):
        self.store = CacheStore('A2')

    def test_canonical_json(self):
        self.assertEqual(canonical_json({'b': [1, 2], 'a': 'τ'}), '{"a":"τ","b":[1,2]}')

    def test_save_and_fetch(self):
        self.assertIsNone(self.store.fetch('decomp', '1,0;1'))
        self.store.save('decomp', '1,0;1', {'terms': [[[2, 0], 1], [[0, 1], 2]]})
        self.assertEqual(self.store.fetch('decomp', '1,0;1'), {'terms': [[[2, 0], 1], [[0, 1], 2]]})
        header = CacheHeader.objects.get(system='A2')
        self.assertEqual((header.format_version, header.normalization), (CACHE_FORMAT_VERSION, NORMALIZATION))

    def test_identical_resave_is_accepted(self):
        self.store.save('m2tau', '1,1', {'terms': [1, 2]})
        CacheStore('A2').save('m2tau', '1,1', {'terms': [1, 2]})
        self.assertEqual(CacheRecord.objects.filter(system='A2').count(), 1)

    def test_conflicting_resave_is_rejected(self):
        self.store.save('m2tau', '1,1', {'terms': [1, 2]})
        with self.assertRaises(CacheConflictError) as caught:
            self.store.save('m2tau', '1,1', {'terms': [1, 3]})
        self.assertEqual(caught.exception.detail['kind'], 'm2tau')
        self.assertEqual(self.store.fetch('m2tau', '1,1'), {'terms': [1, 2]})

    def test_header_mismatch(self):
        CacheHeader.objects.create(system='G2', format_version=CACHE_FORMAT_VERSION + 1)
        with self.assertRaises(CacheHeaderMismatch) as caught:
            CacheStore('G2').fetch('decomp', 'x')
        self.assertEqual(caught.exception.detail['found_version'], CACHE_FORMAT_VERSION + 1)

    def test_stats_and_clear(self):
        self.store.save('decomp', 'a', {'x': 1})
        self.store.save('decomp', 'b', {'x': 2})
        self.store.save('coeffA', '1,1', {'x': 3})
        CacheStore('G2').save('decomp', 'a', {'x': 1})
        stats = self.store.stats()
        self.assertEqual(stats['total'], 3)
        self.assertEqual(stats['records']['decomp'], 2)
        self.assertEqual(stats['records']['hint'], 0)
        self.assertEqual(stats['format_version'], CACHE_FORMAT_VERSION)
        self.assertEqual(cached_systems(), ['A2', 'G2'])
        self.assertEqual(self.store.clear(), 3)
        self.assertEqual(cached_systems(), ['G2'])
        self.assertIsNone(self.store.stats()['format_version'])


class CachedComputationTests(TestCase):

    def test_coefficients_are_stored_and_reused(self):
        rs = build_root_system('A2')
        store = CacheStore(rs.name)
        first = Hamiltonian(rs, store=store)
        A12 = first.coeff_A(1, 2)
        c1 = first.coeff_c(1)
        self.assertTrue(CacheRecord.objects.filter(system='A2', kind='coeffA', key='1,2').exists())
        self.assertTrue(CacheRecord.objects.filter(system='A2', kind='coeffC', key='1').exists())
        second = Hamiltonian(rs, store=store)
        self.assertEqual(second.coeff_A(1, 2), A12)
        self.assertEqual(second.coeff_c(1), c1)
        self.assertEqual(A12, parse_poly('-1/3*tau1*tau2 + 3', 2))

    def test_cached_values_are_read_back(self):
        rs = build_root_system('A2')
        store = CacheStore(rs.name)
        store.save('coeffC', '2', {'terms': [{'exponents': [0, 1], 'coefficient': '5'}]})
        self.assertEqual(Hamiltonian(rs, store=store).coeff_c(2), parse_poly('5*tau2', 2))


class SettingsTests(SimpleTestCase):

    def test_only_engine_apps_installed(self):
        self.assertFalse(apps.is_installed('django.contrib.auth'))
        self.assertTrue(apps.is_installed('fti'))
