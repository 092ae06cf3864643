"""
Direct change of variables, used as an independent oracle on small systems.

τ_a is written out as the Laurent polynomial Σ_{ω∈Ω_a} z^ω (z^ω = e^{i(ω·x)}),
each coefficient function is computed as a Laurent polynomial straight from its
defining sum, and the τ-form is recovered by solving for the coefficients of an
ansatz Σ_p x_p τ^p over all monomials up to a Weyl-height bound. Nothing here
uses the orbit decompositions or reflection strings of the main pipeline.
"""
import logging
from collections import defaultdict
from fractions import Fraction
from itertools import product

from sympy import Matrix, QQ, Rational

from .orbitalgebra import MExpansion, dominant_weights_below
from .polynomials import tau_ring, to_domain
from .rootdata import inner_product, weyl_height
from .weylorbit import enumerate_orbit, is_dominant

logger = logging.getLogger(__name__)


def laurent_multiply(left, right):
    result = defaultdict(Fraction)
    for u, x in left.items():
        for v, y in right.items():
            result[tuple(a + b for a, b in zip(u, v))] += x * y
    return {k: v for k, v in result.items() if v}


def fundamental_laurent(rs, a, config=None):
    orbit = enumerate_orbit(rs.fundamental_weight(a), rs, config)
    return {w: Fraction(1) for w in orbit}


def monomial_laurent(rs, p, config=None, _memo=None):
    """τ^p as a Laurent polynomial."""
    memo = {} if _memo is None else _memo
    p = tuple(p)
    if p in memo:
        return memo[p]
    if not any(p):
        value = {(0,) * rs.rank: Fraction(1)}
    else:
        a = next(i for i, e in enumerate(p) if e)
        lower = tuple(e - int(i == a) for i, e in enumerate(p))
        value = laurent_multiply(monomial_laurent(rs, lower, config, memo), fundamental_laurent(rs, a + 1, config))
    memo[p] = value
    return value


def denominator(rs):
    """D = Π_{α>0} (1 - z^{-α})."""
    zero = (0,) * rs.rank
    result = {zero: Fraction(1)}
    for root in rs.positive_roots:
        result = laurent_multiply(result, {zero: Fraction(1), tuple(-x for x in root.omega): Fraction(-1)})
    return result


def solve_ansatz(rs, target, height_bound, multiplier=None, config=None):
    """
    Find P(τ) with P(τ(z))·multiplier = target over monomials τ^p, ht(p) <= height_bound.
    Returns a QQ polynomial; raises ValueError when the system has no solution.
    """
    monomials = dominant_weights_below(rs, height_bound)
    memo = {}
    columns = []
    for p in monomials:
        column = monomial_laurent(rs, p, config, memo)
        if multiplier is not None:
            column = laurent_multiply(column, multiplier)
        columns.append(column)
    rows = sorted(set(target).union(*[set(column) for column in columns]))
    if multiplier is None:
        # both sides are W-invariant: dominant exponents determine everything
        rows = [row for row in rows if is_dominant(row)]
    matrix = Matrix([[_rational(column.get(row, 0)) for column in columns] for row in rows])
    rhs = Matrix([_rational(target.get(row, 0)) for row in rows])
    solution, params = matrix.gauss_jordan_solve(rhs)
    if params.shape[0]:
        solution = solution.subs({symbol: 0 for symbol in params})
    R = tau_ring(rs.rank)
    terms = {p: to_domain(value, QQ) for p, value in zip(monomials, solution) if value != 0}
    logger.info('ansatz solved over %d monomials and %d exponents', len(monomials), len(rows))
    return R.from_dict(terms)


def _rational(value):
    value = Fraction(value)
    return Rational(value.numerator, value.denominator)


def target_A(rs, a, b, config=None):
    """∇τ_a·∇τ_b = -Σ (ω·ω') z^{ω+ω'}."""
    result = defaultdict(Fraction)
    for u in enumerate_orbit(rs.fundamental_weight(a), rs, config):
        for v in enumerate_orbit(rs.fundamental_weight(b), rs, config):
            result[tuple(x + y for x, y in zip(u, v))] -= inner_product(u, v, rs)
    return {k: v for k, v in result.items() if v}


def target_b(rs, a, config=None):
    """Δτ_a = -Σ ω² z^ω."""
    return {w: -inner_product(w, w, rs) for w in enumerate_orbit(rs.fundamental_weight(a), rs, config)}


def target_c_times_denominator(rs, a, config=None):
    """
    c_a·D with cot((α·x)/2) = i(1 + z^{-α})/(1 - z^{-α}):

        c_a·D = ½ Σ_α Σ_ω (α·ω)(1 + z^{-α}) Π_{β≠α}(1 - z^{-β}) z^ω.
    """
    zero = (0,) * rs.rank
    roots = rs.positive_roots
    orbit = list(enumerate_orbit(rs.fundamental_weight(a), rs, config))
    result = defaultdict(Fraction)
    for i, root in enumerate(roots):
        factor = {zero: Fraction(1), tuple(-x for x in root.omega): Fraction(1)}
        for j, other in enumerate(roots):
            if j != i:
                factor = laurent_multiply(factor, {zero: Fraction(1), tuple(-x for x in other.omega): Fraction(-1)})
        weighted = {w: inner_product(root.omega, w, rs) / 2 for w in orbit}
        for k, v in laurent_multiply(factor, weighted).items():
            result[k] += v
    return {k: v for k, v in result.items() if v}


def direct_coefficients(rs, config=None):
    """All A_ab, b_a, c_a by the direct method: {('A', a, b) | ('b', a) | ('c', a): poly}."""
    found = {}
    heights = [weyl_height(rs.fundamental_weight(a), rs) for a in range(1, rs.rank + 1)]
    D = denominator(rs)
    for a in range(1, rs.rank + 1):
        for b in range(a, rs.rank + 1):
            found['A', a, b] = solve_ansatz(rs, target_A(rs, a, b, config), heights[a - 1] + heights[b - 1], config=config)
        found['b', a] = solve_ansatz(rs, target_b(rs, a, config), heights[a - 1], config=config)
        found['c', a] = solve_ansatz(rs, target_c_times_denominator(rs, a, config), heights[a - 1], D, config)
    return found


def pair_sum_expansion(rs, a, b, config=None):
    """-Σ_{ω∈Ω_a, ω'∈Ω_b} (ω·ω') e^{i(ω+ω')·x} read off at dominant exponents, as an MExpansion."""
    expansion = MExpansion()
    for k, v in target_A(rs, a, b, config).items():
        if is_dominant(k):
            expansion.add(k, v.numerator if v.denominator == 1 else v)
    return expansion


def brute_force_product(rs, j, a, config=None):
    """M_j·M_a by the double loop over Ω_j × Ω_a, read off at dominant exponents."""
    counts = defaultdict(int)
    for x, y in product(enumerate_orbit(j, rs, config), enumerate_orbit(rs.fundamental_weight(a), rs, config)):
        k = tuple(u + v for u, v in zip(x, y))
        if is_dominant(k):
            counts[k] += 1
    return MExpansion(dict(counts))


def monomial_matrix(op, rs, height_bound, nu_value):
    """Matrix of h on the monomials with ht <= height_bound (closed by triangularity)."""
    monomials = dominant_weights_below(rs, height_bound)
    position = {p: i for i, p in enumerate(monomials)}
    R = tau_ring(rs.rank)
    matrix = Matrix.zeros(len(monomials), len(monomials))
    for j, p in enumerate(monomials):
        image = op.apply(R.from_dict({p: QQ.one}), nu_value)
        for q, coeff in image.items():
            matrix[position[q], j] = QQ.to_sympy(coeff)
    return monomials, matrix
