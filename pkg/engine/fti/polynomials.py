"""
τ-polynomials and ν-coefficients.

TauPolynomial is a sympy sparse PolyElement in tau1..tauN. Its coefficient domain is
either QQ (ν-free quantities: A_ab, b_a, c_a, M_n(τ), numeric-ν eigenfunctions) or
the rational-function field QQ(nu) (symbolic-ν operators and eigenfunctions).
FracElement cancels on construction, so equality of NuCoefficients is structural.
"""
from fractions import Fraction
from functools import lru_cache

from sympy import QQ, Rational, Symbol, sympify
from sympy.polys.rings import ring

NU = Symbol('nu')
NU_FIELD = QQ.frac_field(NU)


def nu():
    return NU_FIELD.from_sympy(NU)


def tau_names(rank):
    return [f'tau{i}' for i in range(1, rank + 1)]


@lru_cache(maxsize=None)
def tau_ring(rank, domain=QQ):
    R, *_ = ring(','.join(tau_names(rank)), domain)
    return R


def coefficient_domain(nu_value):
    """QQ(nu) for symbolic ν (None), QQ for a numeric ν."""
    return NU_FIELD if nu_value is None else QQ


def to_domain(value, domain):
    if isinstance(value, Fraction):
        value = Rational(value.numerator, value.denominator)
    return domain.from_sympy(sympify(value))


def lift(poly, domain):
    """Re-express a QQ polynomial over `domain` (same τ variables)."""
    if poly.ring.domain == domain:
        return poly
    target = tau_ring(poly.ring.ngens, domain)
    return target.from_dict({
        monom: domain.from_sympy(poly.ring.domain.to_sympy(coeff)) for monom, coeff in poly.items()
    })


def substitute_nu(poly, value):
    """Evaluate every QQ(nu) coefficient at a rational ν; returns a QQ polynomial."""
    value = Rational(value.numerator, value.denominator) if isinstance(value, Fraction) else sympify(value)
    target = tau_ring(poly.ring.ngens, QQ)
    terms = {}
    for monom, coeff in poly.items():
        evaluated = NU_FIELD.to_sympy(coeff).subs(NU, value)
        if evaluated != 0:
            terms[monom] = QQ.from_sympy(evaluated)
    return target.from_dict(terms)


def as_fraction(coeff):
    """QQ element → Fraction."""
    return Fraction(int(coeff.numerator), int(coeff.denominator))


def term_order(monom):
    return sum(monom), tuple(-e for e in monom)


def sorted_terms(poly):
    return sorted(poly.items(), key=lambda item: term_order(item[0]))


def format_coefficient(coeff, domain):
    if domain == QQ:
        return str(as_fraction(coeff))
    return str(NU_FIELD.to_sympy(coeff).factor())


def format_monomial(monom):
    factors = []
    for i, e in enumerate(monom, start=1):
        if e == 1:
            factors.append(f'tau{i}')
        elif e > 1:
            factors.append(f'tau{i}^{e}')
    return '*'.join(factors)


def format_poly(poly):
    """One-line text, constant first then by degree: `240 + 29*tau1`."""
    if not poly:
        return '0'
    domain = poly.ring.domain
    pieces = []
    for monom, coeff in sorted_terms(poly):
        monomial = format_monomial(monom)
        if domain == QQ:
            value = as_fraction(coeff)
            sign = '-' if value < 0 else '+'
            magnitude = abs(value)
            body = str(magnitude) if not monomial else (monomial if magnitude == 1 else f'{magnitude}*{monomial}')
        else:
            sign = '+'
            text = format_coefficient(coeff, domain)
            body = f'({text})' if not monomial else f'({text})*{monomial}'
        pieces.append((sign, body))
    first_sign, first_body = pieces[0]
    text = ('-' if first_sign == '-' else '') + first_body
    for sign, body in pieces[1:]:
        text += f' {sign} {body}'
    return text


def parse_poly(text, rank, domain=QQ):
    """Inverse of format_poly for QQ coefficients; accepts `^` or `**` for powers."""
    R = tau_ring(rank, domain)
    symbols = {name: Symbol(name) for name in tau_names(rank)}
    symbols['nu'] = NU
    return R.from_expr(sympify(text.replace('^', '**'), locals=symbols))


def poly_payload(poly):
    """JSON-ready terms: exponents as int lists, coefficients as decimal strings."""
    domain = poly.ring.domain
    return [
        {'exponents': list(monom), 'coefficient': format_coefficient(coeff, domain)}
        for monom, coeff in sorted_terms(poly)
    ]


def poly_from_payload(terms, rank, domain=QQ):
    R = tau_ring(rank, domain)
    symbols = {'nu': NU}
    return R.from_dict({
        tuple(term['exponents']): domain.from_sympy(sympify(term['coefficient'], locals=symbols))
        for term in terms
    })


def evaluate_exact(poly, values):
    """Σ c·τ^p at rational τ values (QQ polynomials only)."""
    values = [Fraction(v) for v in values]
    total = Fraction(0)
    for monom, coeff in poly.items():
        term = as_fraction(coeff)
        for v, e in zip(values, monom):
            if e:
                term *= v ** e
        total += term
    return total


def evaluate_complex(poly, values):
    """(value, Σ |c|·|τ^p|) at complex τ values; the second number scales relative errors."""
    value, scale = 0j, 0.0
    for monom, coeff in poly.items():
        term = complex(float(as_fraction(coeff)))
        for v, e in zip(values, monom):
            if e:
                term *= v ** e
        value += term
        scale += abs(term)
    return value, scale


def derivative(poly, a):
    """∂/∂τ_a for a 1-based index."""
    return poly.diff(poly.ring.gens[a - 1])
