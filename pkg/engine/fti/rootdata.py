"""
Exact data for crystallographic root systems.

CONVENTIONS
-----------
* Weights live in the fundamental-weight (ω) basis. A weight is a tuple of ints.
* Cartan matrix: C[i][j] = <α_i, α_j^∨> = 2(α_i·α_j)/(α_j·α_j), so row i of C
  is the simple root α_i written in ω-coordinates and the simple reflection is
  s_i λ = λ - λ_i·C[i].
* Long roots have squared length 2.
* Fundamental weights are numbered by increasing squared length, ties broken by
  Bourbaki index. `fundamental_weight_order[k]` is the Bourbaki label of the
  weight stored at internal position k. For E8 this gives
  (w_1², ..., w_8²) = (2, 4, 6, 8, 12, 14, 20, 30).
"""
import logging
import re
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache, reduce
from math import gcd
from typing import NamedTuple

import numpy as np
from sympy import Matrix, Rational, factorint

from .exceptions import (
    DimensionMismatchError, IndexOutOfRangeError, RankOutOfRangeError, UnknownSystemError,
)

logger = logging.getLogger(__name__)

CLASSICAL_RANKS = {'A': (1, 16), 'B': (2, 16), 'C': (2, 16), 'D': (3, 16)}
EXCEPTIONAL = {'E6', 'E7', 'E8', 'F4', 'G2'}

_NAME_RE = re.compile(r'^\s*([A-Ga-g])_?(\d+)\s*$')


class PositiveRoot(NamedTuple):
    omega: tuple          # ω-coordinates
    root_coords: tuple    # coordinates in the simple-root basis
    coroot_coords: tuple  # α^∨ in the simple-coroot basis; <λ, α^∨> = Σ λ_i coroot_coords[i]
    height: int
    half_norm: Fraction   # (α·α)/2


# ─────────────────────────────────────────────────────────────────────
# DYNKIN DATA (Bourbaki numbering)
# ─────────────────────────────────────────────────────────────────────

def _form(rank, lengths, bonds):
    """Simple-root inner products from squared lengths and (i, j, α_i·α_j) bonds."""
    form = [[Fraction(0)] * rank for _ in range(rank)]
    for i, length in enumerate(lengths):
        form[i][i] = Fraction(length)
    for i, j, value in bonds:
        form[i][j] = form[j][i] = Fraction(value)
    return form


def bourbaki_form(family, rank):
    """Matrix of (α_i·α_j) for the simple roots, Bourbaki numbering, long roots of length² 2."""
    chain = [(i, i + 1, -1) for i in range(rank - 1)]
    if family == 'A':
        return _form(rank, [2] * rank, chain)
    if family == 'B':
        return _form(rank, [2] * (rank - 1) + [1], chain)
    if family == 'C':
        half = Fraction(-1, 2)
        bonds = [(i, i + 1, half) for i in range(rank - 2)] + [(rank - 2, rank - 1, -1)]
        return _form(rank, [1] * (rank - 1) + [2], bonds)
    if family == 'D':
        bonds = [(i, i + 1, -1) for i in range(rank - 2)] + [(rank - 3, rank - 1, -1)]
        return _form(rank, [2] * rank, bonds)
    if family == 'E':
        bonds = [(0, 2, -1), (2, 3, -1), (3, 4, -1), (4, 5, -1), (5, 6, -1), (6, 7, -1)][:rank - 2]
        return _form(rank, [2] * rank, bonds + [(1, 3, -1)])
    if family == 'F':
        return _form(4, [2, 2, 1, 1], [(0, 1, -1), (1, 2, -1), (2, 3, Fraction(-1, 2))])
    if family == 'G':
        return _form(2, [Fraction(2, 3), 2], [(0, 1, -1)])
    raise UnknownSystemError(f'Unknown root system family {family!r}', family=family)


def cartan_from_form(form):
    rank = len(form)
    cartan = []
    for i in range(rank):
        row = []
        for j in range(rank):
            entry = 2 * form[i][j] / form[j][j]
            assert entry.denominator == 1
            row.append(int(entry))
        cartan.append(tuple(row))
    return tuple(cartan)


def parse_system_name(name):
    match = _NAME_RE.match(str(name))
    if not match:
        raise UnknownSystemError(f'Unsupported root system {name!r}', name=str(name))
    family, rank = match.group(1).upper(), int(match.group(2))
    if family in CLASSICAL_RANKS:
        low, high = CLASSICAL_RANKS[family]
        if not low <= rank <= high:
            raise RankOutOfRangeError(
                f'{family}_n needs {low} <= n <= {high}, got {rank}', family=family, rank=rank,
            )
    elif f'{family}{rank}' not in EXCEPTIONAL:
        raise UnknownSystemError(f'Unsupported root system {name!r}', name=str(name))
    return family, rank


# ─────────────────────────────────────────────────────────────────────
# WEYL GROUP ORDER (exponents read off the heights of the positive roots)
# ─────────────────────────────────────────────────────────────────────

@lru_cache(maxsize=None)
def _positive_root_coords(cartan):
    """Positive roots of `cartan` in simple-root coordinates, grown layer by layer along root strings."""
    rank = len(cartan)
    simple = [tuple(int(i == j) for j in range(rank)) for i in range(rank)]
    known = set(simple)
    found = list(simple)
    layer = simple
    while layer:
        following = []
        for beta in layer:
            omega = [sum(beta[j] * cartan[j][i] for j in range(rank)) for i in range(rank)]
            for i in range(rank):
                # α_i-string through beta: beta - r·α_i, ..., beta + q·α_i with r - q = omega[i]
                r, lower = 0, list(beta)
                while True:
                    lower[i] -= 1
                    if tuple(lower) not in known:
                        break
                    r += 1
                if r - omega[i] > 0:
                    gamma = list(beta)
                    gamma[i] += 1
                    gamma = tuple(gamma)
                    if gamma not in known:
                        known.add(gamma)
                        following.append(gamma)
        found.extend(following)
        layer = following
    return tuple(found)


def _components(cartan, nodes):
    nodes = list(nodes)
    seen, parts = set(), []
    for start in nodes:
        if start in seen:
            continue
        stack, part = [start], []
        seen.add(start)
        while stack:
            i = stack.pop()
            part.append(i)
            for j in nodes:
                if j not in seen and cartan[i][j] != 0:
                    seen.add(j)
                    stack.append(j)
        parts.append(sorted(part))
    return parts


def _component_order(cartan, part):
    # |W| = Π (e + 1) over the exponents; e occurs m_e - m_{e+1} times, m_k = #roots of height k
    sub = tuple(tuple(cartan[i][j] for j in part) for i in part)
    heights = Counter(sum(coords) for coords in _positive_root_coords(sub))
    order = 1
    for k in sorted(heights):
        order *= (k + 1) ** (heights[k] - heights[k + 1])
    return order


def weyl_group_order(cartan, nodes=None):
    """|W| of the (sub)diagram spanned by `nodes` (all nodes by default); 1 for the empty set."""
    nodes = range(len(cartan)) if nodes is None else nodes
    order = 1
    for part in _components(cartan, nodes):
        order *= _component_order(cartan, part)
    return order


# ─────────────────────────────────────────────────────────────────────
# ROOT SYSTEM
# ─────────────────────────────────────────────────────────────────────

@dataclass(frozen=True)
class RootSystem:
    name: str
    rank: int
    cartan: tuple
    form: tuple
    gram: tuple
    positive_roots: tuple
    weyl_vector_root_coords: tuple
    coweyl_vector_coroot_coords: tuple
    highest_root_coords: tuple
    highest_short_root_coords: tuple
    fundamental_weight_order: tuple
    weyl_group_order: int

    def __repr__(self):
        return f'RootSystem({self.name})'

    @property
    def simple_roots_omega(self):
        return self.cartan

    @property
    def weyl_vector_omega(self):
        return (1,) * self.rank

    @property
    def is_simply_laced(self):
        return len({root.half_norm for root in self.positive_roots}) == 1

    @cached_property
    def cartan_array(self):
        return np.array(self.cartan, dtype=np.int64)

    @cached_property
    def roots_omega_array(self):
        return np.array([root.omega for root in self.positive_roots], dtype=np.int64)

    @cached_property
    def coroots_array(self):
        return np.array([root.coroot_coords for root in self.positive_roots], dtype=np.int64)

    @cached_property
    def gram_array(self):
        return np.array([[float(x) for x in row] for row in self.gram])

    def fundamental_weight(self, a):
        """w_a for a 1-based index a."""
        if not 1 <= a <= self.rank:
            raise IndexOutOfRangeError(f'fundamental index {a} outside 1..{self.rank}', index=a)
        return tuple(int(i == a - 1) for i in range(self.rank))

    def weight(self, coords):
        """Validate and normalize a lattice point given in ω-coordinates."""
        coords = tuple(int(c) for c in coords)
        if len(coords) != self.rank:
            raise DimensionMismatchError(
                f'{self.name} weights have {self.rank} coordinates, got {len(coords)}',
                expected=self.rank, got=len(coords),
            )
        return coords


def _positive_roots(cartan, form):
    rank = len(cartan)
    roots = []
    for coords in _positive_root_coords(cartan):
        omega = tuple(sum(coords[j] * cartan[j][i] for j in range(rank)) for i in range(rank))
        norm = sum(coords[i] * coords[j] * form[i][j] for i in range(rank) for j in range(rank))
        coroot = []
        for j in range(rank):
            value = coords[j] * form[j][j] / norm
            assert value.denominator == 1
            coroot.append(int(value))
        roots.append(PositiveRoot(
            omega=omega, root_coords=coords, coroot_coords=tuple(coroot), height=sum(coords), half_norm=norm / 2,
        ))
    roots.sort(key=lambda root: (root.height, root.root_coords))
    return tuple(roots)


def _to_fractions(matrix):
    return tuple(
        tuple(Fraction(int(x.p), int(x.q)) for x in matrix.row(i)) for i in range(matrix.rows)
    )


@lru_cache(maxsize=None)
def build_root_system(name):
    family, rank = parse_system_name(name)
    bourbaki = bourbaki_form(family, rank)
    weights = _weight_gram(bourbaki)
    # internal position k holds the Bourbaki weight order[k]
    order = sorted(range(rank), key=lambda i: (weights[i][i], i))
    form = [[bourbaki[i][j] for j in order] for i in order]
    cartan = cartan_from_form(form)
    inverse = Matrix(cartan).inv()
    gram = _weight_gram(form)

    roots = _positive_roots(cartan, form)
    weyl = tuple(sum((inverse[a, b] for a in range(rank)), Rational(0)) for b in range(rank))
    coweyl = tuple(sum((inverse[a, b] for b in range(rank)), Rational(0)) for a in range(rank))
    highest = max(roots, key=lambda root: root.height)
    shortest = min(root.half_norm for root in roots)
    highest_short = max((root for root in roots if root.half_norm == shortest), key=lambda root: root.height)

    rs = RootSystem(
        name=f'{family}{rank}',
        rank=rank,
        cartan=cartan,
        form=tuple(tuple(row) for row in form),
        gram=gram,
        positive_roots=roots,
        weyl_vector_root_coords=tuple(Fraction(int(x.p), int(x.q)) for x in weyl),
        coweyl_vector_coroot_coords=tuple(Fraction(int(x.p), int(x.q)) for x in coweyl),
        highest_root_coords=highest.root_coords,
        highest_short_root_coords=highest_short.root_coords,
        fundamental_weight_order=tuple(i + 1 for i in order),
        weyl_group_order=weyl_group_order(cartan),
    )
    logger.info('built %s: %d positive roots, |W| = %d', rs.name, len(roots), rs.weyl_group_order)
    return rs


def _weight_gram(form):
    """(w_a·w_b) = (C^-1 · form · C^-T)_ab for the simple-root form given."""
    cartan = cartan_from_form(form)
    inverse = Matrix(cartan).inv()
    gram = inverse * Matrix([[Rational(x.numerator, x.denominator) for x in row] for row in form]) * inverse.T
    return _to_fractions(gram)


# ─────────────────────────────────────────────────────────────────────
# BILINEAR FORM, HEIGHTS, CHARACTERISTIC VECTORS
# ─────────────────────────────────────────────────────────────────────

def inner_product(u, v, rs):
    u, v = rs.weight(u), rs.weight(v)
    return sum(
        (u[a] * rs.gram[a][b] * v[b] for a in range(rs.rank) for b in range(rs.rank) if u[a] and v[b]),
        Fraction(0),
    )


def weyl_height(v, rs):
    """(ρ^∨·v): the grading that makes the algebraic Hamiltonian triangular."""
    v = rs.weight(v)
    return sum((c * x for c, x in zip(rs.coweyl_vector_coroot_coords, v)), Fraction(0))


def rho_pairing(v, rs):
    """(ρ·v) with ρ = (1, ..., 1) in ω-coordinates."""
    return inner_product(rs.weyl_vector_omega, v, rs)


def coroot_pairing(a, b, rs):
    """(α_b^∨·w_a) through the Gram matrix; the duality relation says this is δ_ab."""
    alpha = rs.cartan[b - 1]
    return inner_product(rs.fundamental_weight(a), alpha, rs) * 2 / rs.form[b - 1][b - 1]


def gram_is_positive_definite(rs):
    matrix = Matrix([[Rational(x.numerator, x.denominator) for x in row] for row in rs.gram])
    return all(matrix[:k, :k].det() > 0 for k in range(1, rs.rank + 1))


def primitive_integer_vector(values):
    values = [Fraction(v) for v in values]
    scale = reduce(lambda acc, v: acc * v.denominator // gcd(acc, v.denominator), values, 1)
    ints = [int(v * scale) for v in values]
    common = reduce(gcd, ints, 0) or 1
    return tuple(x // common for x in ints)


def integer_weyl_vector(rs):
    """Smallest integer multiple of the root coordinates of ρ."""
    return primitive_integer_vector(rs.weyl_vector_root_coords)


def integer_coweyl_vector(rs):
    """Smallest integer multiple of ρ^∨ written in the simple-root basis."""
    half_norms = [rs.form[i][i] / 2 for i in range(rs.rank)]
    return primitive_integer_vector(c / s for c, s in zip(rs.coweyl_vector_coroot_coords, half_norms))


def minimal_characteristic_vector(rs):
    """Root coordinates of the highest short root (the highest root when simply laced)."""
    return rs.highest_short_root_coords


class FlagAngle(NamedTuple):
    numerator: int
    radicand: int

    @property
    def cosine(self):
        return self.numerator / self.radicand ** 0.5

    def reduced(self):
        """numerator/√radicand with the square part of the radicand pulled out: (p, q, r) for p/(q√r)."""
        square, rest = 1, 1
        for prime, power in factorint(self.radicand).items():
            square *= prime ** (power // 2)
            rest *= prime ** (power % 2)
        common = gcd(self.numerator, square)
        return self.numerator // common, square // common, rest


def flag_angle_cosine(f):
    """cos of the angle between a characteristic vector and the basic vector (1, ..., 1)."""
    f = [int(x) for x in f]
    return FlagAngle(sum(f), len(f) * sum(x * x for x in f))
