"""
Spectrum and eigenfunctions.

In the M-basis the operator is triangular with respect to the Weyl height:

    h M_n = ε_n M_n + ν Σ_{ht(k) < ht(n)} H_kn M_k,    ε_n = -(n·n) - 2ν(ρ·n),

where the off-diagonal H_kn come from the reflection strings through Ω_n.
Eigenfunctions φ_n = M_n + Σ c_m M_m follow by back-substitution from the top.
"""
import heapq
import logging
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction

from sympy import QQ

from .exceptions import ResonanceError
from .hamiltonian import Hamiltonian, hamiltonian_for
from .orbitalgebra import dominant_weights_below, grading
from .polynomials import coefficient_domain, lift, nu, tau_ring, to_domain
from .rootdata import inner_product, minimal_characteristic_vector, rho_pairing, weyl_height
from .weylorbit import require_dominant

logger = logging.getLogger(__name__)


def eigenvalue_parts(n, rs):
    """(-(n·n), -2(ρ·n)): constant and ν-coefficient of ε_n."""
    n = require_dominant(n, rs)
    return -inner_product(n, n, rs), -2 * rho_pairing(n, rs)


def eigenvalue(n, rs, nu_value=None):
    constant, slope = eigenvalue_parts(n, rs)
    domain = coefficient_domain(nu_value)
    coupling = nu() if nu_value is None else to_domain(nu_value, domain)
    return to_domain(constant, domain) + coupling * to_domain(slope, domain)


def h_int_on_M(n, rs, config=None):
    """
    Coefficient of ν in h M_n, as an MExpansion: -2 × the reflection-string expansion.

    `rs` is a RootSystem, or a Hamiltonian already built for one.
    """
    hamiltonian = rs if isinstance(rs, Hamiltonian) else hamiltonian_for(rs.name, config)
    return hamiltonian.pair_expansion(n).scaled(-2)


@dataclass
class Eigenstate:
    label: tuple
    eigenvalue: object
    expansion_M: dict
    expansion_tau: object
    nu_value: object = None

    @property
    def symbolic(self):
        return self.nu_value is None


def eigenfunction(n, hamiltonian, nu_value=None):
    """
    φ_n with leading M_n for symbolic ν (None) or a rational ν.

    Raises ResonanceError when ε_n = ε_m at the given ν for a weight m that the
    triangular action actually reaches.
    """
    rs = hamiltonian.rs
    n = require_dominant(n, rs)
    domain = coefficient_domain(nu_value)
    coupling = nu() if nu_value is None else to_domain(nu_value, domain)
    target = eigenvalue(n, rs, nu_value)

    coefficients = {n: domain.one}
    pending = defaultdict(lambda: domain.zero)
    heap = [(-weyl_height(n, rs), tuple(-x for x in n), n)]
    queued = {n}
    while heap:
        _, _, m = heapq.heappop(heap)
        if m != n:
            gap = target - eigenvalue(m, rs, nu_value)
            drive = pending.pop(m)
            if not gap:
                if drive:
                    raise ResonanceError(
                        f'ε_{list(n)} = ε_{list(m)} at ν = {nu_value}',
                        label=list(n), level=list(m), nu=str(nu_value),
                    )
                continue
            value = drive / gap
            if not value:
                continue
            coefficients[m] = value
        c_m = coefficients[m]
        for k, h in hamiltonian.pair_expansion(m).items():
            if k == m:
                continue
            pending[k] += c_m * coupling * to_domain(-2 * Fraction(h), domain)
            if k not in queued:
                queued.add(k)
                heapq.heappush(heap, (-weyl_height(k, rs), tuple(-x for x in k), k))

    algebra = hamiltonian.algebra
    phi = tau_ring(rs.rank, domain).zero
    for m, c_m in coefficients.items():
        phi += lift(algebra.m_to_tau(m), domain) * c_m
    logger.info('eigenfunction %s: %d orbit functions', list(n), len(coefficients))
    return Eigenstate(n, target, coefficients, phi, nu_value)


@dataclass(frozen=True)
class SpectrumRow:
    label: tuple
    constant: Fraction
    slope: Fraction
    grading: int
    norm: Fraction
    height: Fraction
    nu_value: Fraction = None

    def value(self, nu_value=None):
        """ε_n at nu_value, or at the coupling the row was enumerated with."""
        nu_value = self.nu_value if nu_value is None else nu_value
        if nu_value is None:
            raise ValueError(f'no coupling to evaluate {list(self.label)} at')
        return self.constant + self.slope * Fraction(nu_value)


def enumerate_spectrum(rs, height_bound, nu_value=None):
    """
    All dominant n with ht(n) <= height_bound, ordered by ((n·n), height, coords).

    With nu_value the rows also carry the coupling, so row.value() needs no argument.
    """
    nu_value = None if nu_value is None else Fraction(nu_value)
    f = minimal_characteristic_vector(rs)
    rows = []
    for n in dominant_weights_below(rs, height_bound):
        constant, slope = eigenvalue_parts(n, rs)
        rows.append(SpectrumRow(n, constant, slope, grading(n, f), -constant, weyl_height(n, rs), nu_value))
    rows.sort(key=lambda row: (row.norm, row.height, row.label))
    return rows


def find_degeneracies(rs, height_bound):
    """Groups of distinct labels with identical ε_n as polynomials in ν."""
    groups = defaultdict(list)
    for row in enumerate_spectrum(rs, height_bound):
        groups[row.constant, row.slope].append(row.label)
    return [
        {'eigenvalue': key, 'labels': sorted(labels)}
        for key, labels in sorted(groups.items(), key=lambda item: (-item[0][0], -item[0][1]))
        if len(labels) > 1
    ]


def operator_diagonal(op, n, nu_value=None):
    """Coefficient of τ^n in h τ^n from the assembled operator."""
    rs = op.rs
    n = require_dominant(n, rs)
    R = tau_ring(rs.rank)
    image = op.apply(R.from_dict({n: QQ.one}), nu_value)
    return image.get(n, image.ring.domain.zero)


def residual(op, state):
    """h φ - ε φ, exactly."""
    phi = state.expansion_tau
    return op.apply(phi, state.nu_value) - phi * state.eigenvalue


def format_eigenvalue(constant, slope):
    constant, slope = Fraction(constant), Fraction(slope)
    sign = '-' if slope < 0 else '+'
    return f'{constant} {sign} {abs(slope)}*nu'

