"""
Floating-point cross-checks of the exact coefficients and eigenfunctions.

Weights are mapped to an orthonormal frame through the Cholesky factor of the
weight Gram matrix, and τ_a(x) = Σ_{ω∈Ω_a} e^{i(ω·x)} is summed directly
together with its gradient and Laplacian. Complex exponentials are used
throughout since orbits of A_n (n > 1) and E6 are not closed under negation.

Relative error of an entry = |numeric - exact| / max(1, Σ_p |c_p|·|τ^p(x)|).
"""
import logging
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np
from joblib import Parallel, delayed
from sympy import Rational

from .conf import EngineConfig
from .exceptions import ValidationFailed
from .polynomials import NU, NU_FIELD, as_fraction, derivative, evaluate_complex, substitute_nu
from .rootdata import build_root_system
from .weylorbit import enumerate_orbit

logger = logging.getLogger(__name__)

BOX = (0.05, 0.45)


@dataclass(frozen=True)
class SamplePoint:
    x: np.ndarray
    seed: int
    index: int


@dataclass(frozen=True)
class TauValues:
    values: np.ndarray      # (N,) complex
    gradients: np.ndarray   # (N, N) complex, row a = ∇τ_a
    laplacians: np.ndarray  # (N,) complex


class Frame:
    """Orthonormal images of the fundamental orbits and positive roots."""

    def __init__(self, rs, config=None):
        config = config or EngineConfig()
        self.rs = rs
        self.factor = np.linalg.cholesky(rs.gram_array)
        self.orbits = [
            enumerate_orbit(rs.fundamental_weight(a), rs, config).elements @ self.factor
            for a in range(1, rs.rank + 1)
        ]
        self.roots = rs.roots_omega_array @ self.factor

    def cartesian(self, weights):
        return np.asarray(weights, dtype=float) @ self.factor


@lru_cache(maxsize=8)
def frame_for(system, config=None):
    return Frame(build_root_system(system), config)


def sample_point(frame, seed, index, margin):
    """Uniform in BOX^N from default_rng([seed, index]), redrawn while near a cot pole."""
    rng = np.random.default_rng([seed, index])
    while True:
        x = rng.uniform(*BOX, size=frame.rs.rank)
        if np.min(np.abs(np.sin(frame.roots @ x / 2))) >= margin:
            return SamplePoint(x, seed, index)


def eval_tau(x, frame):
    x = x.x if isinstance(x, SamplePoint) else np.asarray(x, dtype=float)
    values, gradients, laplacians = [], [], []
    for orbit in frame.orbits:
        phases = np.exp(1j * (orbit @ x))
        values.append(np.sum(phases))
        gradients.append(1j * (phases @ orbit))
        laplacians.append(-np.sum(np.einsum('ij,ij->i', orbit, orbit) * phases))
    return TauValues(np.array(values), np.array(gradients), np.array(laplacians))


def reality_defect(x, frame):
    """max_a |Im τ_a(x)|; zero when every orbit is closed under negation."""
    return float(np.max(np.abs(eval_tau(x, frame).values.imag)))


def cot_field(x, frame):
    """Σ_{α>0} cot((α·x)/2) α as a vector."""
    angles = frame.roots @ x / 2
    return (np.cos(angles) / np.sin(angles)) @ frame.roots


# ─────────────────────────────────────────────────────────────────────
# REPORTS
# ─────────────────────────────────────────────────────────────────────

@dataclass
class ValidationReport:
    system: str
    seed: int
    samples: int
    tol: float
    errors: dict = field(default_factory=dict)
    witness: dict = None

    @property
    def passed(self):
        return self.witness is None

    @property
    def max_error(self):
        return max((max(values) for values in self.errors.values() if values), default=0.0)

    def summary(self):
        return {
            name: {'max': float(max(values)), 'mean': float(np.mean(values))}
            for name, values in self.errors.items() if values
        }

    def as_dict(self):
        return {
            'system': self.system, 'seed': self.seed, 'samples': self.samples, 'tol': self.tol,
            'passed': self.passed, 'entries': self.summary(), 'witness': self.witness,
        }

    def record(self, name, error, point):
        self.errors.setdefault(name, []).append(error)
        if error > self.tol and self.witness is None:
            self.witness = {'entry': name, 'error': float(error), 'x': [float(v) for v in point.x], 'index': point.index}

    def raise_for_failure(self):
        if not self.passed:
            raise ValidationFailed(
                f'{self.witness["entry"]} off by {self.witness["error"]:.3e} (tol {self.tol:.1e})',
                **self.as_dict(),
            )
        return self


def _sample_map(measure, samples, config):
    """measure(0..samples-1) in order, spread over config.threads threads."""
    return Parallel(n_jobs=max(1, config.threads), backend='threading')(
        delayed(measure)(index) for index in range(samples)
    )


def all_entries(rank):
    entries = [('A', a, b) for a in range(1, rank + 1) for b in range(a, rank + 1)]
    entries += [('b', a) for a in range(1, rank + 1)]
    entries += [('c', a) for a in range(1, rank + 1)]
    return entries


def entry_name(entry):
    return f'{entry[0]}_{"".join(str(i) for i in entry[1:])}'


def _relative(numeric, exact_poly, taus):
    exact, scale = evaluate_complex(exact_poly, taus)
    return abs(numeric - exact) / max(1.0, scale)


def validate_coefficients(hamiltonian, entries=None, samples=10, tol=1e-8, seed=0, config=None):
    """Compare A_ab, b_a, c_a against direct orbit sums at `samples` random points."""
    rs = hamiltonian.rs
    config = config or hamiltonian.config
    entries = entries or all_entries(rs.rank)
    frame = frame_for(rs.name, config)
    exact = {}
    for entry in entries:
        kind = entry[0]
        if kind == 'A':
            exact[entry] = hamiltonian.coeff_A(entry[1], entry[2])
        elif kind == 'b':
            exact[entry] = hamiltonian.coeff_b(entry[1])
        else:
            exact[entry] = hamiltonian.coeff_c(entry[1])

    def measure(index):
        point = sample_point(frame, seed, index, config.sample_margin)
        tau = eval_tau(point, frame)
        cot = cot_field(point.x, frame)
        found = []
        for entry in entries:
            a = entry[1] - 1
            if entry[0] == 'A':
                numeric = tau.gradients[a] @ tau.gradients[entry[2] - 1]
            elif entry[0] == 'b':
                numeric = tau.laplacians[a]
            else:
                numeric = -0.5 * (cot @ tau.gradients[a])
            found.append((entry_name(entry), _relative(numeric, exact[entry], tau.values)))
        return point, found

    report = ValidationReport(rs.name, seed, samples, tol)
    for point, found in _sample_map(measure, samples, config):
        for name, error in found:
            report.record(name, error, point)
    logger.info('validated %d entries of %s at %d points: max error %.2e', len(entries), rs.name, samples, report.max_error)
    return report


def validate_eigenfunction(state, hamiltonian, nu_value=None, samples=10, tol=1e-8, seed=0, config=None):
    """
    Evaluate h φ - ε φ through the chain rule,

        h φ = Σ φ_ab (∇τ_a·∇τ_b) + Σ φ_a Δτ_a + ν Σ_{α>0} cot((α·x)/2)(α·∇φ),

    relative to max(1, |ε φ|, Σ |individual terms|).
    """
    rs = hamiltonian.rs
    config = config or hamiltonian.config
    if state.symbolic:
        if nu_value is None:
            raise ValueError('a symbolic eigenstate needs a numeric ν to be validated')
        phi = substitute_nu(state.expansion_tau, nu_value)
        epsilon = complex(float(substitute_eigenvalue(state.eigenvalue, nu_value)))
    else:
        nu_value = state.nu_value
        phi = state.expansion_tau
        epsilon = complex(float(as_fraction(state.eigenvalue)))
    coupling = float(nu_value)
    rank = rs.rank
    first = [derivative(phi, a) for a in range(1, rank + 1)]
    second = {
        (a, b): derivative(first[a - 1], b)
        for a in range(1, rank + 1) for b in range(1, rank + 1)
    }
    frame = frame_for(rs.name, config)

    def measure(index):
        point = sample_point(frame, seed, index, config.sample_margin)
        tau = eval_tau(point, frame)
        value, scale = evaluate_complex(phi, tau.values)
        total, magnitude = 0j, 0.0
        gradient = np.zeros(rank, dtype=complex)
        for a in range(rank):
            d1, s1 = evaluate_complex(first[a], tau.values)
            gradient += d1 * tau.gradients[a]
            term = d1 * tau.laplacians[a]
            total += term
            magnitude += abs(term) + s1 * abs(tau.laplacians[a])
            for b in range(rank):
                poly = second[a + 1, b + 1]
                if poly:
                    d2, s2 = evaluate_complex(poly, tau.values)
                    metric = tau.gradients[a] @ tau.gradients[b]
                    total += d2 * metric
                    magnitude += s2 * abs(metric)
        interaction = coupling * (cot_field(point.x, frame) @ gradient)
        total += interaction
        magnitude += abs(interaction)
        target = epsilon * value
        error = abs(total - target) / max(1.0, abs(target), magnitude, abs(epsilon) * scale)
        return point, error

    report = ValidationReport(rs.name, seed, samples, tol)
    for point, error in _sample_map(measure, samples, config):
        report.record(f'phi_{"".join(map(str, state.label))}', error, point)
    return report


def substitute_eigenvalue(value, nu_value):
    return NU_FIELD.to_sympy(value).subs(NU, Rational(str(nu_value)))
