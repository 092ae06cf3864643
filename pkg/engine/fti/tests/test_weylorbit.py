import io

import numpy as np
from django.test import SimpleTestCase

from fti import kernels
from fti.conf import EngineConfig
from fti.exceptions import IndexOutOfRangeError, MemoryCapExceeded, NonDominantWeightError
from fti.reference import E8_ORBIT_SIZES, E8_W
from fti.rootdata import build_root_system, inner_product
from fti.weylorbit import (
    dominant_conjugate, dominant_of_rows, enumerate_orbit, orbit_contains, orbit_size,
    simple_reflection, write_orbit_dump,
)


class ReflectionTests(SimpleTestCase):

    def setUp(self):
        self.rs = build_root_system('A2')

    def test_simple_reflection(self):
        self.assertEqual(simple_reflection(1, (1, 0), self.rs), (-1, 1))
        self.assertEqual(simple_reflection(2, (1, 0), self.rs), (1, 0))
        with self.assertRaises(IndexOutOfRangeError):
            simple_reflection(3, (1, 0), self.rs)

    def test_reflection_is_an_involution_and_isometry(self):
        rs = build_root_system('G2')
        weight = (3, -2)
        for i in (1, 2):
            image = simple_reflection(i, weight, rs)
            self.assertEqual(simple_reflection(i, image, rs), weight)
            self.assertEqual(inner_product(image, image, rs), inner_product(weight, weight, rs))

    def test_dominant_conjugate(self):
        self.assertEqual(dominant_conjugate((0, -1), self.rs), (1, 0))
        self.assertEqual(dominant_conjugate((-1, -1), self.rs), (1, 1))
        self.assertTrue(orbit_contains((1, 0), (-1, 1), self.rs))
        self.assertFalse(orbit_contains((0, 1), (-1, 1), self.rs))

    def test_dominant_rows_matches_scalar_version(self):
        rs = build_root_system('E8')
        rng = np.random.default_rng(7)
        points = rng.integers(-4, 5, size=(50, 8))
        rows = dominant_of_rows(points, rs, threads=2)
        for point, row in zip(points, rows):
            self.assertEqual(tuple(int(x) for x in row), dominant_conjugate(tuple(int(x) for x in point), rs))


class ParallelKernelTests(SimpleTestCase):

    def setUp(self):
        self.rs = build_root_system('E8')

    def tearDown(self):
        kernels.use_threads(1)

    def test_preimage_counts_match_row_by_row(self):
        orbit = enumerate_orbit(E8_W[1], self.rs).elements
        candidates = np.unique(dominant_of_rows(orbit + np.array(E8_W[2]), self.rs, threads=2), axis=0)
        target = np.array(E8_W[2], dtype=np.int64)
        hits = kernels.count_all_preimages(orbit, candidates, self.rs.cartan_array, target)
        expected = [kernels.count_preimages(orbit, k, self.rs.cartan_array, target) for k in candidates]
        self.assertEqual([int(x) for x in hits], expected)

    def test_string_points_do_not_depend_on_threads(self):
        orbit = enumerate_orbit(E8_W[2], self.rs).elements
        arrays = (self.rs.roots_omega_array, self.rs.coroots_array)
        kernels.use_threads(1)
        serial = kernels.string_points(orbit, *arrays)
        kernels.use_threads(4)
        parallel = kernels.string_points(orbit, *arrays)
        self.assertGreater(len(serial[0]), 0)
        for left, right in zip(serial, parallel):
            np.testing.assert_array_equal(left, right)


class OrbitTests(SimpleTestCase):

    def test_a2_orbit(self):
        rs = build_root_system('A2')
        orbit = enumerate_orbit((1, 0), rs)
        self.assertEqual(sorted(orbit), [(-1, 1), (0, -1), (1, 0)])
        self.assertEqual(len(enumerate_orbit((1, 1), rs)), 6)
        self.assertEqual(len(enumerate_orbit((0, 0), rs)), 1)

    def test_orbit_size_formula_matches_enumeration(self):
        for name, weights in (('G2', [(1, 0), (0, 1), (2, 1)]), ('B3', [(1, 0, 0), (0, 0, 1), (1, 1, 1)]),
                              ('E6', [(1, 0, 0, 0, 0, 0), (0, 0, 1, 0, 0, 0)])):
            rs = build_root_system(name)
            for d in weights:
                with self.subTest(system=name, weight=d):
                    orbit = enumerate_orbit(d, rs)
                    self.assertEqual(orbit.size, orbit_size(d, rs))
                    self.assertEqual(len({tuple(row) for row in orbit}), orbit.size)
                    norm = inner_product(d, d, rs)
                    self.assertTrue(all(inner_product(w, w, rs) == norm for w in orbit))

    def test_e8_fundamental_sizes(self):
        rs = build_root_system('E8')
        sizes = tuple(orbit_size(E8_W[a], rs) for a in range(1, 9))
        self.assertEqual(sizes, E8_ORBIT_SIZES)

    def test_e8_fundamental_orbits_enumerated(self):
        rs = build_root_system('E8')
        for a in range(1, 9):
            with self.subTest(a=a):
                orbit = enumerate_orbit(E8_W[a], rs)
                self.assertEqual(orbit.size, E8_ORBIT_SIZES[a - 1])
                self.assertFalse(orbit.elements.sum(axis=0).any())
                self.assertEqual(int(np.all(orbit.elements >= 0, axis=1).sum()), 1)

    def test_roots_are_the_orbit_of_w1(self):
        rs = build_root_system('E8')
        roots = {root.omega for root in rs.positive_roots}
        roots |= {tuple(-x for x in root) for root in roots}
        self.assertEqual(set(enumerate_orbit(E8_W[1], rs)), roots)

    def test_orbit_is_read_only(self):
        orbit = enumerate_orbit((1, 0), build_root_system('A2'))
        with self.assertRaises(ValueError):
            orbit.elements[0, 0] = 5

    def test_memory_cap(self):
        rs = build_root_system('E8')
        with self.assertRaises(MemoryCapExceeded) as caught:
            enumerate_orbit(E8_W[8], rs, EngineConfig(mem_cap=100000))
        self.assertEqual(caught.exception.detail['size'], 483840)

    def test_non_dominant_rejected(self):
        with self.assertRaises(NonDominantWeightError):
            enumerate_orbit((-1, 1), build_root_system('A2'))

    def test_dump(self):
        rs = build_root_system('A2')
        stream = io.StringIO()
        write_orbit_dump(enumerate_orbit((1, 0), rs), stream)
        lines = stream.getvalue().splitlines()
        self.assertEqual(lines[0], '# A2 orbit of 1 0 size 3')
        self.assertEqual(len(lines), 4)
