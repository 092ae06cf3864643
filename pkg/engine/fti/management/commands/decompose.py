from fti.orbitalgebra import METHODS, OrbitAlgebra
from fti.serializers import ExpansionSerializer

from ._engine import EngineCommand, parse_weight, weight_text


class Command(EngineCommand):
    help = 'Decompose M_j * M_a into orbit functions'

    def add_command_arguments(self, parser):
        parser.add_argument('j', help='Dominant weight j')
        parser.add_argument('a', type=int, help='Fundamental index a (1-based, length order)')
        parser.add_argument('--method', choices=METHODS, default='auto')

    def run(self, rs, options):
        algebra = OrbitAlgebra(rs, self.config, self.store(rs))
        j = parse_weight(options['j'], rs)
        a = options['a']
        expansion = algebra.decompose_product(j, a, method=options['method'])
        balanced = algebra.mass_balanced(j, a, expansion)
        payload = {
            'system': rs.name, 'j': list(j), 'a': a, 'method': options['method'],
            'mass_balanced': balanced,
            'terms': ExpansionSerializer(expansion, context={'rs': rs}).data['terms'],
        }
        lines = [self.success(f'M_{weight_text(j)} * M_{a} = {len(expansion)} orbit functions')]
        lines += [f'  {mu:>12} M_{weight_text(k)}' for k, mu in expansion.ordered(rs)]
        lines.append(f'mass balanced: {balanced}')
        return payload, lines
