"""
The algebra of orbit functions M_n = Σ_{ω∈Ω_n} e^{i(ω·x)}.

Products decompose as M_j·M_a = Σ_k μ_k M_k over dominant k. Since each orbit
has exactly one dominant point, μ_k is the number of ways to write the dominant
point k as x + ω with x ∈ Ω_j, ω ∈ Ω_a. The top weight j + w_a always has μ = 1.

M_n(τ) is built by peeling one fundamental weight at a time:
M_n = M_{n - w_a}·τ_a - Σ_{k ≠ n} μ_k M_k, which only involves lower weights.
"""
import logging
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from . import kernels
from .conf import EngineConfig
from .exceptions import IndexOutOfRangeError, SlowTierRequired
from .polynomials import as_fraction, poly_from_payload, poly_payload, tau_ring, to_domain
from .rootdata import weyl_height
from .weylorbit import dominant_of_rows, enumerate_orbit, orbit_size, require_dominant

logger = logging.getLogger(__name__)

METHODS = ('auto', 'membership', 'stabilizer')


def weight_key(weight):
    return ','.join(str(int(x)) for x in weight)


def parse_weight_key(key):
    return tuple(int(x) for x in key.split(',')) if key else ()


def grading(p, f):
    """(f·p) for an exponent vector p and a characteristic vector f."""
    if len(p) != len(f):
        raise ValueError(f'grading needs equal lengths, got {len(p)} and {len(f)}')
    return sum(int(x) * int(y) for x, y in zip(p, f))


@dataclass
class MExpansion:
    """Σ μ_k M_k with dominant keys and no zero coefficients."""
    terms: dict = field(default_factory=dict)

    def __getitem__(self, weight):
        return self.terms.get(tuple(weight), 0)

    def __len__(self):
        return len(self.terms)

    def __eq__(self, other):
        if isinstance(other, MExpansion):
            return self.terms == other.terms
        if isinstance(other, dict):
            return self.terms == {tuple(k): v for k, v in other.items() if v}
        return NotImplemented

    def items(self):
        return self.terms.items()

    def add(self, weight, coefficient):
        weight = tuple(weight)
        value = self.terms.get(weight, 0) + coefficient
        if value:
            self.terms[weight] = value
        else:
            self.terms.pop(weight, None)

    def __add__(self, other):
        total = MExpansion(dict(self.terms))
        for weight, coefficient in other.items():
            total.add(weight, coefficient)
        return total

    def scaled(self, factor):
        return MExpansion({k: v * factor for k, v in self.terms.items()} if factor else {})

    def ordered(self, rs):
        """Terms by descending Weyl height, ties by coordinates."""
        return sorted(self.terms.items(), key=lambda item: (-weyl_height(item[0], rs), item[0]))

    def payload(self, rs):
        return [{'weight': list(k), 'coefficient': str(v)} for k, v in self.ordered(rs)]

    @classmethod
    def from_payload(cls, terms):
        expansion = cls()
        for term in terms:
            expansion.add(tuple(term['weight']), Fraction(term['coefficient']) if '/' in term['coefficient'] else int(term['coefficient']))
        return expansion


def dominant_weights_below(rs, height_bound):
    """All dominant n with ht(n) <= height_bound, sorted by (height, coords)."""
    coheights = rs.coweyl_vector_coroot_coords
    bound = Fraction(height_bound)
    found = []

    def extend(prefix, used):
        i = len(prefix)
        if i == rs.rank:
            found.append(tuple(prefix))
            return
        count = 0
        while used + count * coheights[i] <= bound:
            extend(prefix + [count], used + count * coheights[i])
            count += 1

    extend([], Fraction(0))
    return sorted(found, key=lambda n: (weyl_height(n, rs), n))


class OrbitAlgebra:
    """
    Decompositions and M-to-τ conversions for one root system, memoized.

    `store` is anything with fetch(kind, key) / save(kind, key, payload), usually
    a fti.cache.CacheStore; results are identical with or without it.
    """

    def __init__(self, rs, config=None, store=None):
        self.rs = rs
        self.config = config or EngineConfig()
        self.store = store
        self.ring = tau_ring(rs.rank)
        self._products = {}
        self._polys = {}

    # ── products ─────────────────────────────────────────────────────

    def fundamental_index(self, a):
        if not 1 <= a <= self.rs.rank:
            raise IndexOutOfRangeError(f'fundamental index {a} outside 1..{self.rs.rank}', index=a)
        return a

    def check_slow(self, size, what):
        if size > self.config.slow_orbit_size and not self.config.slow:
            raise SlowTierRequired(
                f'{what} iterates an orbit of {size} elements; rerun with --slow',
                orbit_size=size, threshold=self.config.slow_orbit_size,
            )

    def decompose_product(self, j, a, method='auto'):
        """M_j·M_a as an MExpansion; `method` picks membership or orbit-stabilizer counting."""
        rs = self.rs
        j = require_dominant(j, rs)
        a = self.fundamental_index(a)
        if method not in METHODS:
            raise ValueError(f'unknown decomposition method {method!r}')
        memo = (j, a)
        if memo in self._products:
            return self._products[memo]

        key = f'{weight_key(j)};{a}'
        cached = self.store.fetch('decomp', key) if self.store else None
        if cached is not None:
            expansion = MExpansion.from_payload(cached['terms'])
        else:
            expansion = self._decompose(j, a, method)
            if self.store:
                self.store.save('decomp', key, {'terms': expansion.payload(rs)})
        self._products[memo] = expansion
        return expansion

    def _decompose(self, j, a, method):
        rs = self.rs
        w_a = rs.fundamental_weight(a)
        if not any(j):
            return MExpansion({w_a: 1})
        self.check_slow(orbit_size(w_a, rs), f'M_{list(j)}·M_{a}')
        orbit = enumerate_orbit(w_a, rs, self.config).elements
        threads = self.config.threads

        sums = dominant_of_rows(orbit + np.array(j, dtype=np.int64), rs, threads)
        candidates, counts = np.unique(sums, axis=0, return_counts=True)
        if method == 'auto':
            work = len(candidates) * len(orbit)
            method = 'membership' if work <= self.config.membership_budget else 'stabilizer'

        expansion = MExpansion()
        if method == 'stabilizer':
            size_j = orbit_size(j, rs)
            for k, count in zip(candidates, counts):
                k = tuple(int(x) for x in k)
                mu, rest = divmod(size_j * int(count), orbit_size(k, rs))
                assert rest == 0, (j, a, k)
                expansion.add(k, mu)
        else:
            kernels.use_threads(threads)
            hits = kernels.count_all_preimages(orbit, candidates, rs.cartan_array, np.array(j, dtype=np.int64))
            for k, mu in zip(candidates, hits):
                expansion.add(tuple(int(x) for x in k), int(mu))

        top = tuple(x + y for x, y in zip(j, w_a))
        assert expansion[top] == 1, (j, a)
        logger.info(
            'M_%s * M_%d = %d orbit functions (%s, %d candidates)',
            list(j), a, len(expansion), method, len(candidates),
        )
        return expansion

    def mass_balanced(self, j, a, expansion):
        """Σ μ_k |Ω_k| == |Ω_j|·|Ω_a|."""
        rs = self.rs
        total = sum(mu * orbit_size(k, rs) for k, mu in expansion.items())
        return total == orbit_size(j, rs) * orbit_size(rs.fundamental_weight(a), rs)

    def multiply(self, expansion, a):
        """(Σ c_k M_k)·M_a."""
        product = MExpansion()
        for k, coefficient in expansion.items():
            for n, mu in self.decompose_product(k, a).items():
                product.add(n, coefficient * mu)
        return product

    def tau_power_to_M(self, p):
        if len(p) != self.rs.rank or any(e < 0 for e in p):
            raise ValueError(f'exponent vector {list(p)} is not a valid {self.rs.name} monomial')
        expansion = MExpansion({(0,) * self.rs.rank: 1})
        for a, e in enumerate(p, start=1):
            for _ in range(e):
                expansion = self.multiply(expansion, a)
        return expansion

    @property
    def needed_decompositions(self):
        """Number of distinct (j, a) products computed or fetched so far."""
        return len(self._products)

    # ── M_n(τ) ───────────────────────────────────────────────────────

    def peel_index(self, n):
        """Support index of n with the smallest fundamental orbit."""
        rs = self.rs
        support = [a for a in range(1, rs.rank + 1) if n[a - 1] > 0]
        return min(support, key=lambda a: (orbit_size(rs.fundamental_weight(a), rs), a))

    def m_to_tau(self, n):
        rs, R = self.rs, self.ring
        n = require_dominant(n, rs)
        if n in self._polys:
            return self._polys[n]
        if not any(n):
            return R.one
        if sum(n) == 1:
            return R.gens[n.index(1)]

        key = weight_key(n)
        cached = self.store.fetch('m2tau', key) if self.store else None
        if cached is not None:
            poly = poly_from_payload(cached['terms'], rs.rank)
        else:
            a = self.peel_index(n)
            rest = tuple(x - int(i == a - 1) for i, x in enumerate(n))
            product = self.decompose_product(rest, a)
            assert product[n] == 1, n
            poly = self.m_to_tau(rest) * R.gens[a - 1]
            for k, mu in product.ordered(rs):
                if k != n:
                    poly -= mu * self.m_to_tau(k)
            if self.store:
                self.store.save('m2tau', key, {'terms': poly_payload(poly)})
        self._polys[n] = poly
        return poly

    def expansion_to_tau(self, expansion):
        poly = self.ring.zero
        for k, coefficient in expansion.items():
            poly += to_domain(coefficient, self.ring.domain) * self.m_to_tau(k)
        return poly

    def tau_to_expansion(self, poly):
        """Inverse of expansion_to_tau for QQ polynomials."""
        expansion = MExpansion()
        for monom, coeff in poly.items():
            value = as_fraction(coeff)
            value = value.numerator if value.denominator == 1 else value
            for k, mu in self.tau_power_to_M(monom).items():
                expansion.add(k, value * mu)
        return expansion

