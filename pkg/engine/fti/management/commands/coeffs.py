from fti.exceptions import SlowTierRequired
from fti.numcheck import all_entries, entry_name
from fti.polynomials import format_poly
from fti.serializers import PolynomialSerializer

from ._engine import EngineCommand


class Command(EngineCommand):
    help = 'Compute the coefficients A_ab, b_a, c_a of the algebraic Hamiltonian'

    def add_command_arguments(self, parser):
        parser.add_argument('--only', choices=('A', 'b', 'c'), help='Restrict to one family')
        parser.add_argument('--index', type=int, action='append', help='Only entries involving this index (repeatable)')
        parser.add_argument('--slow', action='store_true', help='Also compute slow-tier entries (E8: A_88, c_8)')

    def run(self, rs, options):
        hamiltonian = self.hamiltonian(rs)
        entries = all_entries(rs.rank)
        if options['only']:
            entries = [entry for entry in entries if entry[0] == options['only']]
        if options['index']:
            wanted = set(options['index'])
            entries = [entry for entry in entries if wanted.intersection(entry[1:])]

        computed, skipped = [], []
        lines = []
        for entry in entries:
            name = entry_name(entry)
            try:
                if entry[0] == 'A':
                    poly = hamiltonian.coeff_A(entry[1], entry[2])
                elif entry[0] == 'b':
                    poly = hamiltonian.coeff_b(entry[1])
                else:
                    poly = hamiltonian.coeff_c(entry[1])
            except SlowTierRequired as error:
                skipped.append({'entry': name, 'reason': error.message})
                lines.append(self.style.WARNING(f'{name} skipped: {error.message}'))
                continue
            computed.append({'entry': name, 'polynomial': PolynomialSerializer(poly).data})
            lines.append(f'{name} = {format_poly(poly)}')

        lines.append(self.success(f'{len(computed)} coefficients computed, {len(skipped)} skipped'))
        payload = {'system': rs.name, 'coefficients': computed, 'skipped': skipped}
        return payload, lines
