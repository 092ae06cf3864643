import json
import os
import tempfile
from io import StringIO

from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import TestCase

from fti.models import CacheRecord


def run(*args):
    out = StringIO()
    call_command(*args, stdout=out)
    return out.getvalue()


def run_json(*args):
    return json.loads(run(*args, '--json'))


class RootsCommandTests(TestCase):

    def test_json(self):
        payload = run_json('roots', 'A2', '--no-cache')
        self.assertEqual(payload['name'], 'A2')
        self.assertEqual(payload['cartan'], [[2, -1], [-1, 2]])
        self.assertEqual(payload['orbit_sizes'], [3, 3])
        self.assertEqual(payload['weight_norms'], ['2/3', '2/3'])

    def test_text(self):
        output = run('roots', 'E8', '--no-cache')
        self.assertIn('|W| = 696729600', output)
        self.assertIn('8 1 7 2 6 3 5 4', output)
        self.assertIn('29 46 57 68 84 91 110 135', output)


class OrbitCommandTests(TestCase):

    def test_largest_e8_orbit(self):
        payload = run_json('orbit', 'E8', 'w8', '--no-cache')
        self.assertEqual(payload['size'], 483840)
        self.assertNotIn('enumerated', payload)

    def test_dump(self):
        with tempfile.TemporaryDirectory() as directory:
            path = os.path.join(directory, 'orbit.txt')
            payload = run_json('orbit', 'A2', '1,0', '--dump', path, '--no-cache')
            self.assertEqual(payload['enumerated'], 3)
            with open(path) as stream:
                self.assertEqual(stream.readline().strip(), '# A2 orbit of 1 0 size 3')


class AlgebraCommandTests(TestCase):

    def test_decompose(self):
        payload = run_json('decompose', 'A2', '1,0', '1', '--method', 'stabilizer')
        self.assertTrue(payload['mass_balanced'])
        self.assertEqual(payload['terms'], [
            {'weight': [2, 0], 'coefficient': 1},
            {'weight': [0, 1], 'coefficient': 2},
        ])

    def test_m2tau(self):
        payload = run_json('m2tau', 'A2', '1,1')
        self.assertEqual(payload['polynomial']['text'], '-3 + tau1*tau2')

    def test_coeffs(self):
        payload = run_json('coeffs', 'A2', '--only', 'c')
        found = {entry['entry']: entry['polynomial']['text'] for entry in payload['coefficients']}
        self.assertEqual(found, {'c_1': 'tau1', 'c_2': 'tau2'})
        self.assertEqual(payload['skipped'], [])

    def test_coeffs_skip_slow_entries(self):
        payload = run_json('coeffs', 'E8', '--only', 'c', '--index', '8', '--no-cache')
        self.assertEqual(payload['coefficients'], [])
        self.assertEqual([entry['entry'] for entry in payload['skipped']], ['c_8'])

    def test_cache_does_not_change_results(self):
        cached = run('coeffs', 'A2', '--json')
        self.assertTrue(CacheRecord.objects.filter(system='A2', kind='coeffA').exists())
        self.assertEqual(run('coeffs', 'A2', '--json'), cached)
        self.assertEqual(run('coeffs', 'A2', '--json', '--no-cache'), cached)


class SpectralCommandTests(TestCase):

    def test_spectrum(self):
        payload = run_json('spectrum', 'E8', '--ht-bound', '135', '--nu', '0', '--degeneracies', '--no-cache')
        self.assertGreaterEqual(len(payload['rows']), 29)
        first = payload['rows'][1]
        self.assertEqual(first['label'], [1, 0, 0, 0, 0, 0, 0, 0])
        self.assertEqual((first['constant'], first['slope'], first['value']), (-2, -58, -2))
        self.assertEqual(payload['degeneracies'], [])

    def test_spectrum_csv(self):
        lines = run('spectrum', 'A2', '--ht-bound', '1', '--nu', '1', '--csv', '--no-cache').splitlines()
        self.assertEqual(lines[0], 'label,constant,nu_coefficient,grading,norm,height,value')
        self.assertEqual(len(lines), 4)

    def test_eigen_numeric_with_check(self):
        payload = run_json('eigen', 'A2', '1,1', '--nu', '1', '--check')
        self.assertEqual(payload['eigenvalue'], '-6')
        self.assertEqual(payload['expansion_tau']['text'], '-1 + tau1*tau2')
        self.assertEqual(payload['residual'], '0')

    def test_eigen_symbolic(self):
        payload = run_json('eigen', 'E8', 'w1', '--symbolic')
        self.assertEqual(payload['nu'], 'symbolic')
        self.assertEqual(payload['label'], [1, 0, 0, 0, 0, 0, 0, 0])


class VerifyCommandTests(TestCase):

    def test_small_system(self):
        payload = run_json('verify', 'A2', '--reference-tables', '--numeric', '--flags')
        self.assertTrue(payload['passed'])
        names = [check['name'] for check in payload['checks']]
        self.assertIn('normalization', names)
        self.assertIn('numeric', names)
        self.assertIn('flag_weyl', names)

    def test_tables_flag_alias(self):
        self.assertEqual(
            run_json('verify', 'A2', '--paper-tables', '--no-cache'),
            run_json('verify', 'A2', '--reference-tables', '--no-cache'),
        )


class ErrorReportingTests(TestCase):

    def test_unknown_system(self):
        out = StringIO()
        with self.assertRaises(CommandError) as caught:
            call_command('roots', 'X9', '--json', '--no-cache', stdout=out)
        self.assertEqual(caught.exception.returncode, 2)
        self.assertEqual(json.loads(out.getvalue())['code'], 'unknown_system')

    def test_non_dominant_weight(self):
        out = StringIO()
        with self.assertRaises(CommandError):
            call_command('decompose', 'A2', '[-1,1]', '1', '--json', stdout=out)
        self.assertEqual(json.loads(out.getvalue())['code'], 'non_dominant_weight')

    def test_resonance(self):
        out = StringIO()
        with self.assertRaises(CommandError):
            call_command('eigen', 'A2', '1,1', '--nu=-1/2', '--json', stdout=out)
        self.assertEqual(json.loads(out.getvalue())['code'], 'resonance')

    def test_bad_coupling(self):
        out = StringIO()
        with self.assertRaises(CommandError) as caught:
            call_command('spectrum', 'A2', '--ht-bound', '2', '--nu', 'half', '--json', stdout=out)
        self.assertEqual(caught.exception.returncode, 2)
        payload = json.loads(out.getvalue())
        self.assertEqual(payload['code'], 'invalid_coupling')
        self.assertEqual(payload['detail'], {'nu': 'half'})


class CacheCommandTests(TestCase):

    def test_stat_and_clear(self):
        run('coeffs', 'A2', '--json')
        stats = run_json('cache', 'stat')
        entry = next(item for item in stats['systems'] if item['system'] == 'A2')
        self.assertGreater(entry['total'], 0)
        cleared = run_json('cache', 'clear', '--system', 'A2')
        self.assertEqual(cleared['cleared']['A2'], entry['total'])
        self.assertFalse(CacheRecord.objects.filter(system='A2').exists())
