from fti.orbitalgebra import OrbitAlgebra
from fti.polynomials import format_poly
from fti.serializers import PolynomialSerializer

from ._engine import EngineCommand, parse_weight, weight_text


class Command(EngineCommand):
    help = 'Express the orbit function M_n as a polynomial in the fundamental invariants'

    def add_command_arguments(self, parser):
        parser.add_argument('n', help='Dominant weight n')

    def run(self, rs, options):
        algebra = OrbitAlgebra(rs, self.config, self.store(rs))
        n = parse_weight(options['n'], rs)
        poly = algebra.m_to_tau(n)
        payload = {
            'system': rs.name, 'weight': list(n),
            'polynomial': PolynomialSerializer(poly).data,
            'decompositions': algebra.needed_decompositions,
        }
        lines = [
            self.success(f'M_{weight_text(n)} ='),
            f'  {format_poly(poly)}',
            f'({algebra.needed_decompositions} decompositions)',
        ]
        return payload, lines
