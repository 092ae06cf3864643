from fractions import Fraction

from django.test import SimpleTestCase

from fti.directmethod import monomial_matrix
from fti.exceptions import NonDominantWeightError, ResonanceError
from fti.hamiltonian import Hamiltonian, assemble_operator, hamiltonian_for
from fti.orbitalgebra import MExpansion
from fti.polynomials import NU_FIELD, lift, nu, parse_poly, substitute_nu, tau_ring
from fti.reference import (
    E8_DEGENERATE_EIGENVALUE, E8_DEGENERATE_HEIGHT, E8_DEGENERATE_PAIR, E8_SPECTRUM, E8_SPECTRUM_HEIGHT_BOUND, E8_W,
)
from fti.rootdata import build_root_system, weyl_height
from fti.spectral import (
    eigenfunction, eigenvalue, eigenvalue_parts, enumerate_spectrum, find_degeneracies, format_eigenvalue,
    h_int_on_M, operator_diagonal, residual,
)

from .utils import SLOW_CONFIG, slow_test


class EigenvalueTests(SimpleTestCase):

    def setUp(self):
        self.rs = build_root_system('E8')

    def test_closed_form(self):
        self.assertEqual(eigenvalue_parts(E8_W[1], self.rs), (-2, -58))
        self.assertEqual(eigenvalue_parts((0,) * 8, self.rs), (0, 0))
        self.assertEqual(eigenvalue(E8_W[1], self.rs, Fraction(1, 2)), -31)
        self.assertEqual(eigenvalue(E8_W[1], self.rs), -2 - 58 * nu())

    def test_non_dominant_label(self):
        with self.assertRaises(NonDominantWeightError):
            eigenvalue((-1,) + (0,) * 7, self.rs)

    def test_format(self):
        self.assertEqual(format_eigenvalue(-38, -298), '-38 - 298*nu')
        self.assertEqual(format_eigenvalue(0, 0), '0 + 0*nu')

    def test_interaction_on_w1(self):
        found = h_int_on_M(E8_W[1], hamiltonian_for('E8'))
        self.assertEqual(found, MExpansion({E8_W[1]: -58, (0,) * 8: -480}))

    def test_interaction_from_root_system(self):
        rs = build_root_system('E8')
        self.assertEqual(h_int_on_M(E8_W[1], rs), h_int_on_M(E8_W[1], hamiltonian_for('E8')))
        self.assertEqual(h_int_on_M((0,) * 8, rs), MExpansion({}))


class SpectrumTests(SimpleTestCase):

    def test_e8_low_lying_states(self):
        rs = build_root_system('E8')
        rows = enumerate_spectrum(rs, E8_SPECTRUM_HEIGHT_BOUND)[:len(E8_SPECTRUM)]
        found = sorted((row.label, row.constant, row.slope, row.grading, row.norm, row.height) for row in rows)
        self.assertEqual(found, sorted(E8_SPECTRUM))

    def test_rows_are_ordered(self):
        rows = enumerate_spectrum(build_root_system('E8'), 100)
        keys = [(row.norm, row.height, row.label) for row in rows]
        self.assertEqual(keys, sorted(keys))
        self.assertTrue(all(row.height <= 100 for row in rows))
        self.assertEqual(rows[0].value(Fraction(1, 2)), 0)
        self.assertEqual(rows[1].value(Fraction(1, 2)), -31)

    def test_rows_carry_the_coupling(self):
        rs = build_root_system('E8')
        rows = enumerate_spectrum(rs, 29, nu_value=Fraction(1, 2))
        self.assertEqual([row.value() for row in rows[:2]], [0, -31])
        self.assertEqual(rows[1].value(0), -2)
        with self.assertRaises(ValueError):
            enumerate_spectrum(rs, 29)[1].value()

    def test_first_degeneracy(self):
        rs = build_root_system('E8')
        self.assertEqual(find_degeneracies(rs, E8_SPECTRUM_HEIGHT_BOUND), [])
        self.assertEqual(find_degeneracies(rs, E8_DEGENERATE_HEIGHT - 1), [])
        groups = find_degeneracies(rs, E8_DEGENERATE_HEIGHT)
        self.assertIn({'eigenvalue': E8_DEGENERATE_EIGENVALUE, 'labels': sorted(E8_DEGENERATE_PAIR)}, groups)
        for label in E8_DEGENERATE_PAIR:
            self.assertEqual(weyl_height(label, rs), E8_DEGENERATE_HEIGHT)

    def test_a2_conjugate_weights_are_degenerate(self):
        groups = find_degeneracies(build_root_system('A2'), 1)
        self.assertEqual(groups, [{'eigenvalue': (Fraction(-2, 3), -2), 'labels': [(0, 1), (1, 0)]}])

    def test_operator_is_triangular_on_monomials(self):
        rs = build_root_system('A2')
        op = assemble_operator(rs)
        monomials, matrix = monomial_matrix(op, rs, 4, 1)
        self.assertEqual(len(monomials), 15)
        for i, row in enumerate(monomials):
            for j, column in enumerate(monomials):
                if i == j:
                    constant, slope = eigenvalue_parts(row, rs)
                    self.assertEqual(Fraction(str(matrix[i, j])), constant + slope)
                elif matrix[i, j] != 0:
                    self.assertLess(weyl_height(row, rs), weyl_height(column, rs))

    def test_operator_diagonal_matches_closed_form(self):
        rs = build_root_system('E8')
        op = assemble_operator(rs)
        for row in enumerate_spectrum(rs, 110):
            with self.subTest(label=row.label):
                self.assertEqual(operator_diagonal(op, row.label), eigenvalue(row.label, rs))

    @slow_test
    def test_operator_diagonal_full_table(self):
        rs = build_root_system('E8')
        op = assemble_operator(rs, SLOW_CONFIG)
        for row in enumerate_spectrum(rs, E8_SPECTRUM_HEIGHT_BOUND):
            with self.subTest(label=row.label):
                self.assertEqual(operator_diagonal(op, row.label), eigenvalue(row.label, rs))


class A2EigenfunctionTests(SimpleTestCase):

    def setUp(self):
        self.hamiltonian = Hamiltonian(build_root_system('A2'))

    def test_symbolic(self):
        state = eigenfunction((1, 1), self.hamiltonian)
        self.assertTrue(state.symbolic)
        coupling = nu()
        R = tau_ring(2, NU_FIELD)
        tau1, tau2 = R.gens
        expected = tau1 * tau2 - 3 + R.one * (6 * coupling / (1 + 2 * coupling))
        self.assertEqual(state.expansion_tau, expected)
        self.assertEqual(state.expansion_M[(1, 1)], NU_FIELD.one)

    def test_numeric(self):
        state = eigenfunction((1, 1), self.hamiltonian, Fraction(1))
        self.assertFalse(state.symbolic)
        self.assertEqual(state.expansion_tau, parse_poly('tau1*tau2 - 1', 2))
        self.assertEqual(state.eigenvalue, -6)

    def test_resonance(self):
        with self.assertRaises(ResonanceError) as caught:
            eigenfunction((1, 1), self.hamiltonian, Fraction(-1, 2))
        self.assertEqual(caught.exception.detail['level'], [0, 0])

    def test_residuals_vanish(self):
        op = assemble_operator(self.hamiltonian.rs)
        for label in ((1, 0), (0, 1), (2, 0), (1, 1), (3, 0), (2, 1), (2, 2)):
            for nu_value in (None, Fraction(1), Fraction(3, 5)):
                with self.subTest(label=label, nu=nu_value):
                    self.assertFalse(residual(op, eigenfunction(label, self.hamiltonian, nu_value)))


class E8EigenfunctionTests(SimpleTestCase):

    @classmethod
    def setUpClass(cls):
        super().setUpClass()
        cls.hamiltonian = hamiltonian_for('E8')
        cls.op = assemble_operator(cls.hamiltonian.rs)

    def test_w1_symbolic(self):
        state = eigenfunction(E8_W[1], self.hamiltonian)
        coupling = nu()
        R = tau_ring(8, NU_FIELD)
        self.assertEqual(state.expansion_tau, R.gens[0] + R.one * (240 * coupling / (1 + 29 * coupling)))

    def test_zero_coupling_gives_tau(self):
        R = tau_ring(8)
        for a in range(1, 8):
            state = eigenfunction(E8_W[a], self.hamiltonian, 0)
            self.assertEqual(state.expansion_tau, R.gens[a - 1])

    def test_symbolic_agrees_with_numeric(self):
        symbolic = eigenfunction(E8_W[2], self.hamiltonian)
        numeric = eigenfunction(E8_W[2], self.hamiltonian, Fraction(1, 2))
        self.assertEqual(substitute_nu(symbolic.expansion_tau, Fraction(1, 2)), numeric.expansion_tau)

    def test_residuals_vanish(self):
        rs = self.hamiltonian.rs
        for row in enumerate_spectrum(rs, 97):
            with self.subTest(label=row.label):
                self.assertFalse(residual(self.op, eigenfunction(row.label, self.hamiltonian, Fraction(1, 2))))

    def test_symbolic_residuals_vanish(self):
        rs = self.hamiltonian.rs
        for row in enumerate_spectrum(rs, 97):
            with self.subTest(label=row.label):
                self.assertFalse(residual(self.op, eigenfunction(row.label, self.hamiltonian)))

    def test_w1_at_half(self):
        state = eigenfunction(E8_W[1], self.hamiltonian, Fraction(1, 2))
        self.assertEqual(state.expansion_tau, parse_poly('tau1 + 240/31', 8))
        self.assertEqual(lift(state.expansion_tau, NU_FIELD).ring.domain, NU_FIELD)
