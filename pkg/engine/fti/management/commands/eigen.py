from fti.exceptions import ValidationFailed
from fti.hamiltonian import AlgebraicOperator
from fti.polynomials import format_coefficient, format_poly
from fti.serializers import EigenstateSerializer
from fti.spectral import eigenfunction, residual

from ._engine import EngineCommand, parse_nu, parse_weight, weight_text


class Command(EngineCommand):
    help = 'Eigenfunction with leading orbit function M_n, at symbolic or rational ν'

    def add_command_arguments(self, parser):
        parser.add_argument('n', help='Dominant weight n')
        coupling = parser.add_mutually_exclusive_group()
        coupling.add_argument('--nu', default=None, help='Rational coupling, e.g. 1/2')
        coupling.add_argument('--symbolic', action='store_true', help='Keep ν symbolic (default)')
        parser.add_argument('--check', action='store_true', help='Verify h φ - ε φ = 0 exactly')

    def run(self, rs, options):
        nu_value = None if options['symbolic'] else parse_nu(options['nu'])
        hamiltonian = self.hamiltonian(rs)
        state = eigenfunction(parse_weight(options['n'], rs), hamiltonian, nu_value)
        payload = dict(EigenstateSerializer(state, context={'rs': rs}).data)
        domain = state.expansion_tau.ring.domain
        lines = [
            self.success(f'phi_{weight_text(state.label)}: eigenvalue {format_coefficient(state.eigenvalue, domain)}'),
            f'  {format_poly(state.expansion_tau)}',
        ]
        if options['check']:
            leftover = residual(AlgebraicOperator(hamiltonian), state)
            if leftover:
                raise ValidationFailed(
                    f'h φ - ε φ is not zero for {weight_text(state.label)}',
                    label=list(state.label), residual=format_poly(leftover),
                )
            payload['residual'] = '0'
            lines.append('exact residual: 0')
        return payload, lines
