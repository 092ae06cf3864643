from fractions import Fraction

import numpy as np
from django.test import SimpleTestCase

from fti.conf import EngineConfig
from fti.exceptions import ValidationFailed
from fti.hamiltonian import Hamiltonian, hamiltonian_for
from fti.numcheck import (
    ValidationReport, all_entries, entry_name, eval_tau, frame_for, reality_defect, sample_point,
    validate_coefficients, validate_eigenfunction,
)
from fti.polynomials import parse_poly
from fti.reference import E8_ORBIT_SIZES, E8_W
from fti.rootdata import build_root_system
from fti.spectral import eigenfunction, enumerate_spectrum


class FrameTests(SimpleTestCase):

    def test_tau_at_origin_is_orbit_size(self):
        frame = frame_for('E8')
        values = eval_tau(np.zeros(8), frame).values
        np.testing.assert_allclose(values.real, E8_ORBIT_SIZES)
        self.assertLess(np.max(np.abs(values.imag)), 1e-9)

    def test_frame_reproduces_the_gram_matrix(self):
        frame = frame_for('G2')
        gram = frame.factor @ frame.factor.T
        np.testing.assert_allclose(gram, frame.rs.gram_array)

    def test_e8_orbits_are_real(self):
        frame = frame_for('E8')
        point = sample_point(frame, 0, 0, EngineConfig().sample_margin)
        self.assertLess(reality_defect(point, frame), 1e-8)

    def test_a2_orbits_are_not_real(self):
        frame = frame_for('A2')
        point = sample_point(frame, 0, 0, EngineConfig().sample_margin)
        self.assertGreater(reality_defect(point, frame), 1e-6)

    def test_sampling_is_deterministic(self):
        frame = frame_for('A2')
        first = sample_point(frame, 5, 3, 0.05)
        second = sample_point(frame, 5, 3, 0.05)
        np.testing.assert_array_equal(first.x, second.x)
        self.assertFalse(np.array_equal(first.x, sample_point(frame, 6, 3, 0.05).x))
        self.assertTrue(np.all((first.x >= 0.05) & (first.x <= 0.45)))


class CoefficientValidationTests(SimpleTestCase):

    def test_small_systems(self):
        for name in ('A2', 'G2', 'B3'):
            rs = build_root_system(name)
            with self.subTest(system=name):
                report = validate_coefficients(Hamiltonian(rs), samples=100, tol=1e-9)
                self.assertTrue(report.passed, report.witness)
                self.assertEqual(len(report.errors), len(all_entries(rs.rank)))

    def test_threads_do_not_change_the_report(self):
        hamiltonian = Hamiltonian(build_root_system('G2'))
        serial = validate_coefficients(hamiltonian, samples=12, config=EngineConfig(threads=1))
        threaded = validate_coefficients(hamiltonian, samples=12, config=EngineConfig(threads=3))
        self.assertEqual(threaded.errors, serial.errors)
        self.assertTrue(threaded.passed)

    def test_e8_subset(self):
        entries = [('A', 1, 1), ('A', 1, 2), ('A', 2, 3), ('b', 1), ('b', 8), ('c', 1), ('c', 2), ('c', 4)]
        report = validate_coefficients(hamiltonian_for('E8'), entries=entries, samples=10, tol=1e-8)
        self.assertTrue(report.passed, report.witness)
        self.assertEqual(sorted(report.errors), sorted(entry_name(entry) for entry in entries))
        self.assertEqual(report.as_dict()['samples'], 10)

    def test_same_seed_same_errors(self):
        hamiltonian = Hamiltonian(build_root_system('A2'))
        first = validate_coefficients(hamiltonian, samples=5, seed=3)
        second = validate_coefficients(hamiltonian, samples=5, seed=3)
        self.assertEqual(first.errors, second.errors)

    def test_corrupted_coefficient_is_caught(self):
        hamiltonian = Hamiltonian(build_root_system('A2'))
        hamiltonian._c[1] = parse_poly('tau1 + 1', 2)
        report = validate_coefficients(hamiltonian, entries=[('c', 1)], samples=5)
        self.assertFalse(report.passed)
        self.assertEqual(report.witness['entry'], 'c_1')
        with self.assertRaises(ValidationFailed) as caught:
            report.raise_for_failure()
        self.assertEqual(caught.exception.code, 'validation_failed')


class EigenfunctionValidationTests(SimpleTestCase):

    def test_e8_w1(self):
        hamiltonian = hamiltonian_for('E8')
        state = eigenfunction(E8_W[1], hamiltonian)
        report = validate_eigenfunction(state, hamiltonian, Fraction(1, 2))
        self.assertTrue(report.passed, report.witness)
        numeric = eigenfunction(E8_W[1], hamiltonian, Fraction(1, 2))
        self.assertTrue(validate_eigenfunction(numeric, hamiltonian).passed)

    def test_a2_states(self):
        hamiltonian = Hamiltonian(build_root_system('A2'))
        for row in enumerate_spectrum(hamiltonian.rs, 6):
            with self.subTest(label=row.label):
                state = eigenfunction(row.label, hamiltonian, Fraction(1))
                report = validate_eigenfunction(state, hamiltonian, samples=5)
                self.assertTrue(report.passed, report.witness)

    def test_wrong_function_fails(self):
        hamiltonian = Hamiltonian(build_root_system('A2'))
        state = eigenfunction((1, 1), hamiltonian, Fraction(1))
        state.expansion_tau = parse_poly('tau1*tau2', 2)
        self.assertFalse(validate_eigenfunction(state, hamiltonian, samples=3).passed)

    def test_symbolic_state_needs_nu(self):
        hamiltonian = Hamiltonian(build_root_system('A2'))
        with self.assertRaises(ValueError):
            validate_eigenfunction(eigenfunction((1, 0), hamiltonian), hamiltonian)


class ReportTests(SimpleTestCase):

    def test_empty_report(self):
        report = ValidationReport('A2', 0, 0, 1e-8)
        self.assertTrue(report.passed)
        self.assertEqual(report.max_error, 0.0)
        self.assertEqual(report.summary(), {})
