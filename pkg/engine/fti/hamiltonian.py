"""
The gauge-rotated Hamiltonian in algebraic form,

    h = Σ_ab A_ab(τ) ∂_a ∂_b + Σ_a B_a(τ) ∂_a,    B_a = b_a - 2ν c_a.

A_ab = ∇τ_a·∇τ_b, b_a = Δτ_a and c_a = -½ Σ_{α>0} cot((α·x)/2) (α·∇τ_a), all
re-expressed through orbit functions:

* A_ab = -Σ_n p_n μ_n M_n with p_n = (n² - w_a² - w_b²)/2 over M_a·M_b = Σ μ_n M_n.
  Written as -P τ_a τ_b + Σ_n (P - p_n) μ_n M_n (P = w_a·w_b) the top weight
  drops out, so M_{w_a+w_b}(τ) is never needed.
* b_a = -w_a² τ_a.
* c_a comes from the reflection strings through Ω_a (pair_expansion).
"""
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache, reduce
from math import gcd

import numpy as np
from sympy import QQ

from .conf import EngineConfig
from .exceptions import IndexOutOfRangeError
from .orbitalgebra import MExpansion, OrbitAlgebra, grading, weight_key
from .polynomials import (
    coefficient_domain, derivative, format_poly, lift, nu, parse_poly, poly_from_payload, poly_payload,
    tau_ring, to_domain,
)
from .reference import E6_FOOTNOTE
from .rootdata import build_root_system, inner_product, rho_pairing
from . import kernels
from .weylorbit import enumerate_orbit, orbit_size, require_dominant

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PairRow:
    """One row of a reflection-pair table: strings of length `length`, step `step`."""
    length: int
    step: int
    point: tuple
    count: int


class Hamiltonian:
    """Coefficient factory for one root system; every entry is computed on first use."""

    def __init__(self, rs, config=None, store=None, algebra=None):
        self.rs = rs
        self.config = config or EngineConfig()
        self.store = store
        self.algebra = algebra or OrbitAlgebra(rs, self.config, store)
        self.ring = tau_ring(rs.rank)
        self._A = {}
        self._c = {}
        self._pairs = {}
        half_norms = [root.half_norm for root in rs.positive_roots]
        self._weight_scale = reduce(lambda acc, s: acc * s.denominator // gcd(acc, s.denominator), half_norms, 1)
        self._root_weights = np.array([int(s * self._weight_scale) for s in half_norms], dtype=np.int64)

    def index(self, a):
        if not 1 <= a <= self.rs.rank:
            raise IndexOutOfRangeError(f'coefficient index {a} outside 1..{self.rs.rank}', index=a)
        return a

    def q(self, value):
        return to_domain(value, QQ)

    # ── b ────────────────────────────────────────────────────────────

    def coeff_b(self, a):
        a = self.index(a)
        w = self.rs.fundamental_weight(a)
        return -self.q(inner_product(w, w, self.rs)) * self.ring.gens[a - 1]

    # ── A ────────────────────────────────────────────────────────────

    def coeff_A(self, a, b):
        a, b = sorted((self.index(a), self.index(b)))
        if (a, b) in self._A:
            return self._A[a, b]
        key = f'{a},{b}'
        cached = self.store.fetch('coeffA', key) if self.store else None
        if cached is not None:
            poly = poly_from_payload(cached['terms'], self.rs.rank)
        else:
            poly = self._compute_A(a, b)
            if self.store:
                self.store.save('coeffA', key, {'terms': poly_payload(poly)})
        self._A[a, b] = poly
        return poly

    def _compute_A(self, a, b):
        rs, R = self.rs, self.ring
        w_a, w_b = rs.fundamental_weight(a), rs.fundamental_weight(b)
        # iterate the smaller fundamental orbit
        if orbit_size(w_a, rs) <= orbit_size(w_b, rs):
            product = self.algebra.decompose_product(w_b, a)
        else:
            product = self.algebra.decompose_product(w_a, b)
        P = inner_product(w_a, w_b, rs)
        base = inner_product(w_a, w_a, rs) + inner_product(w_b, w_b, rs)
        poly = -self.q(P) * R.gens[a - 1] * R.gens[b - 1]
        for n, mu in product.ordered(rs):
            p_n = (inner_product(n, n, rs) - base) / 2
            if P != p_n:
                poly += self.q((P - p_n) * mu) * self.algebra.m_to_tau(n)
        logger.info('A_%d%d assembled: %d terms', a, b, len(poly))
        return poly

    # ── c and the reflection strings ─────────────────────────────────

    def _strings(self, n):
        orbit = enumerate_orbit(n, self.rs, self.config).elements
        kernels.use_threads(self.config.threads)
        return kernels.string_points(orbit, self.rs.roots_omega_array, self.rs.coroots_array)

    def pair_expansion(self, n):
        """
        (ρ·n) M_n + ½ Σ (α·ω) [dominant interior points of the α-string through ω],
        summed over α > 0 and ω ∈ Ω_n with |<ω, α^∨>| >= 2.

        Equals -½ Σ_α cot((α·x)/2)(α·∇)M_n in the M-basis; c_a is its τ-form for n = w_a.
        """
        rs = self.rs
        n = require_dominant(n, rs)
        if n in self._pairs:
            return self._pairs[n]
        key = weight_key(n)
        cached = self.store.fetch('hint', key) if self.store else None
        if cached is not None:
            expansion = MExpansion.from_payload(cached['terms'])
        else:
            expansion = self._compute_pairs(n)
            if self.store:
                self.store.save('hint', key, {'terms': expansion.payload(rs)})
        self._pairs[n] = expansion
        return expansion

    def _compute_pairs(self, n):
        rs = self.rs
        expansion = MExpansion()
        diagonal = rho_pairing(n, rs)
        if diagonal:
            expansion.add(n, _normalize(diagonal))
        if not any(n):
            return expansion
        self.algebra.check_slow(orbit_size(n, rs), f'reflection strings through Ω_{list(n)}')
        points, lengths, _, which = self._strings(n)
        if len(points):
            unique, inverse = np.unique(points, axis=0, return_inverse=True)
            totals = np.zeros(len(unique), dtype=np.int64)
            np.add.at(totals, inverse.reshape(-1), lengths * self._root_weights[which])
            for point, total in zip(unique, totals):
                value = Fraction(int(total), 2 * self._weight_scale)
                if rs.is_simply_laced:
                    assert value.denominator == 1, (n, point, value)
                expansion.add(tuple(int(x) for x in point), _normalize(value))
        logger.info('reflection strings through %s: %d strings, %d orbit functions', list(n), len(points), len(expansion))
        return expansion

    def reflection_pair_table(self, a):
        """Rows (l, k, point, count) grouping the dominant interior points for Ω_{w_a}."""
        rs = self.rs
        w = rs.fundamental_weight(self.index(a))
        self.algebra.check_slow(orbit_size(w, rs), f'reflection strings through Ω_{a}')
        points, lengths, steps, _ = self._strings(w)
        if not len(points):
            return []
        rows = np.column_stack([lengths, steps, points])
        unique, counts = np.unique(rows, axis=0, return_counts=True)
        table = [
            PairRow(int(row[0]), int(row[1]), tuple(int(x) for x in row[2:]), int(count))
            for row, count in zip(unique, counts)
        ]
        table.sort(key=lambda row: (row.length, row.step, row.point))
        return table

    def coeff_c(self, a):
        a = self.index(a)
        if a in self._c:
            return self._c[a]
        key = str(a)
        cached = self.store.fetch('coeffC', key) if self.store else None
        if cached is not None:
            poly = poly_from_payload(cached['terms'], self.rs.rank)
        else:
            poly = self.algebra.expansion_to_tau(self.pair_expansion(self.rs.fundamental_weight(a)))
            if self.store:
                self.store.save('coeffC', key, {'terms': poly_payload(poly)})
        self._c[a] = poly
        return poly

    def c_normalization(self, a):
        """(d_a/2) Σ_{α>0} (α·w_a)<w_a, α^∨>, the value of c_a at τ = d."""
        rs = self.rs
        w = rs.fundamental_weight(self.index(a))
        total = sum((inner_product(root.omega, w, rs) ** 2 / root.half_norm for root in rs.positive_roots), Fraction(0))
        return orbit_size(w, rs) * total / 2

    def fundamental_orbit_sizes(self):
        return tuple(orbit_size(self.rs.fundamental_weight(a), self.rs) for a in range(1, self.rs.rank + 1))


def _normalize(value):
    value = Fraction(value)
    return value.numerator if value.denominator == 1 else value


# ─────────────────────────────────────────────────────────────────────
# OPERATOR
# ─────────────────────────────────────────────────────────────────────

class AlgebraicOperator:
    """
    Lazy h(τ). Entries are pulled from the Hamiltonian only when an application
    needs them, so applying h to low-degree polynomials never touches A_88 or c_8.
    ν is symbolic (QQ(nu) coefficients) unless a rational value is given.
    """

    def __init__(self, hamiltonian):
        self.hamiltonian = hamiltonian
        self.rs = hamiltonian.rs
        self._lifts = {}

    def A(self, a, b):
        return self.hamiltonian.coeff_A(a, b)

    def b(self, a):
        return self.hamiltonian.coeff_b(a)

    def c(self, a):
        return self.hamiltonian.coeff_c(a)

    def _lifted(self, kind, index, domain):
        key = (kind, index, domain)
        if key not in self._lifts:
            poly = self.A(*index) if kind == 'A' else getattr(self, kind)(index)
            self._lifts[key] = lift(poly, domain)
        return self._lifts[key]

    def B(self, a, nu_value=None):
        domain = coefficient_domain(nu_value)
        coupling = nu() if nu_value is None else to_domain(nu_value, domain)
        return self._lifted('b', a, domain) - self._lifted('c', a, domain) * (coupling * 2)

    def materialize(self):
        rank = self.rs.rank
        for a in range(1, rank + 1):
            self.c(a)
            for b in range(a, rank + 1):
                self.A(a, b)
        return self

    def parts(self, phi):
        """(Σ A ∂∂φ + Σ b ∂φ, Σ c ∂φ) for a QQ polynomial φ; h φ = first - 2ν·second."""
        rank, R = self.rs.rank, phi.ring
        laplacian, interaction = R.zero, R.zero
        for a in range(1, rank + 1):
            first = derivative(phi, a)
            if not first:
                continue
            laplacian += self.b(a) * first
            interaction += self.c(a) * first
            for b in range(a, rank + 1):
                second = derivative(first, b)
                if second:
                    laplacian += (1 if a == b else 2) * self.A(a, b) * second
        return laplacian, interaction

    def apply(self, phi, nu_value=None):
        if phi.ring.domain != QQ:
            nu_value = None
            domain = phi.ring.domain
        else:
            domain = coefficient_domain(nu_value)
            phi = lift(phi, domain)
        rank = self.rs.rank
        result = phi.ring.zero
        for a in range(1, rank + 1):
            first = derivative(phi, a)
            if not first:
                continue
            result += self.B(a, nu_value) * first
            for b in range(a, rank + 1):
                second = derivative(first, b)
                if second:
                    result += (1 if a == b else 2) * self._lifted('A', (a, b), domain) * second
        return result


@lru_cache(maxsize=None)
def hamiltonian_for(system, config=None):
    return Hamiltonian(build_root_system(system), config)


def coeff_b(a, rs, config=None):
    return hamiltonian_for(rs.name, config).coeff_b(a)


def coeff_A(a, b, rs, config=None):
    return hamiltonian_for(rs.name, config).coeff_A(a, b)


def coeff_c(a, rs, config=None):
    return hamiltonian_for(rs.name, config).coeff_c(a)


def assemble_operator(rs, config=None, store=None, eager=False):
    hamiltonian = Hamiltonian(rs, config, store) if store else hamiltonian_for(rs.name, config)
    operator = AlgebraicOperator(hamiltonian)
    return operator.materialize() if eager else operator


def apply_operator(op, phi, nu_value=None):
    return op.apply(phi, nu_value)


# ─────────────────────────────────────────────────────────────────────
# FLAGS
# ─────────────────────────────────────────────────────────────────────

def monomials_below(f, bound, max_degree=None):
    """Exponent vectors p >= 0 with (f·p) <= bound, by grading then degree."""
    f = [int(x) for x in f]
    found = []

    def extend(prefix, used):
        i = len(prefix)
        if i == len(f):
            if max_degree is None or sum(prefix) <= max_degree:
                found.append(tuple(prefix))
            return
        e = 0
        while used + e * f[i] <= bound and (max_degree is None or sum(prefix) + e <= max_degree):
            extend(prefix + [e], used + e * f[i])
            e += 1

    extend([], 0)
    found.sort(key=lambda p: (grading(p, f), sum(p), tuple(-e for e in p)))
    return found


@dataclass
class FlagReport:
    vector: tuple
    bound: int
    strict: bool
    checked: int = 0
    skipped: list = field(default_factory=list)
    witness: dict = None

    @property
    def passed(self):
        return self.witness is None


def verify_flag(op, f, bound, strict=False, max_degree=None, skip=()):
    """
    Check that h maps every monomial of grading g <= bound into gradings <= g.
    With strict=True every output monomial other than the input must drop strictly.
    Monomials involving a τ index in `skip` are not applied (listed in the report).
    Stops at the first violation.
    """
    f = tuple(int(x) for x in f)
    report = FlagReport(f, bound, strict)
    R = tau_ring(op.rs.rank)
    for p in monomials_below(f, bound, max_degree):
        if any(p[a - 1] for a in skip):
            report.skipped.append(p)
            continue
        level = grading(p, f)
        laplacian, interaction = op.parts(R.from_dict({p: QQ.one}))
        outputs = set(laplacian.monoms()) | set(interaction.monoms())
        report.checked += 1
        for q in sorted(outputs):
            rises = grading(q, f) > level
            ties = strict and q != p and grading(q, f) >= level
            if rises or ties:
                report.witness = {
                    'monomial': list(p), 'grading': level,
                    'output': list(q), 'output_grading': grading(q, f),
                }
                logger.info('flag %s broken at %s -> %s', f, p, q)
                return report
    return report


# ─────────────────────────────────────────────────────────────────────
# E6 CROSS-CHECK
# ─────────────────────────────────────────────────────────────────────

@dataclass
class FootnoteEntry:
    index: int
    part: str
    expected: str
    computed: str
    match: bool
    matching_labels: list


def compare_e6_footnote(config=None):
    """
    Compare assembled E6 b- and c-parts with the published corrected list.

    The published τ_i is read as the orbit function of the Bourbaki weight W_i,
    which fixes the variable permutation. Every entry is reported; for a mismatch
    `matching_labels` lists the Bourbaki labels L whose computed entry equals the
    published one once τ_L and τ_i are swapped (the published b-list is a
    relabelling of the norms w_L²).
    """
    rs = build_root_system('E6')
    hamiltonian = hamiltonian_for(rs.name, config)
    position = {label: k + 1 for k, label in enumerate(rs.fundamental_weight_order)}
    # published τ_i -> internal τ_{position[i]}
    R = tau_ring(rs.rank)

    def translate(text):
        published = parse_poly(text, rs.rank)
        return R.from_dict({
            tuple(monom[rs.fundamental_weight_order[k] - 1] for k in range(rs.rank)): coeff
            for monom, coeff in published.items()
        })

    computed = {
        'b': {label: hamiltonian.coeff_b(position[label]) for label in position},
        'c': {label: hamiltonian.coeff_c(position[label]) for label in position},
    }
    entries = []
    for index, parts in sorted(E6_FOOTNOTE.items()):
        for part in ('b', 'c'):
            expected = translate(parts[part])
            mine = computed[part][index]
            entries.append(FootnoteEntry(
                index=index,
                part=part,
                expected=parts[part],
                computed=format_poly(_relabel(mine, rs)),
                match=mine == expected,
                matching_labels=sorted(
                    label for label, poly in computed[part].items()
                    if _swap(poly, position[label], position[index]) == expected
                ),
            ))
    return {
        'mapping': {f'tau{label}': f'tau{position[label]}' for label in sorted(position)},
        'entries': entries,
    }


def _relabel(poly, rs):
    """Internal τ variables back to Bourbaki labels, for display."""
    R = tau_ring(rs.rank)
    order = rs.fundamental_weight_order
    terms = {}
    for monom, coeff in poly.items():
        relabelled = [0] * rs.rank
        for k, e in enumerate(monom):
            relabelled[order[k] - 1] = e
        terms[tuple(relabelled)] = coeff
    return R.from_dict(terms)


def _swap(poly, i, j):
    """Exchange τ_i and τ_j."""
    if i == j:
        return poly
    terms = {}
    for monom, coeff in poly.items():
        monom = list(monom)
        monom[i - 1], monom[j - 1] = monom[j - 1], monom[i - 1]
        terms[tuple(monom)] = coeff
    return poly.ring.from_dict(terms)
