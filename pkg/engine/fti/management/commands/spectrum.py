import csv

from fti.serializers import SpectrumRowSerializer, exact
from fti.spectral import enumerate_spectrum, find_degeneracies, format_eigenvalue

from ._engine import EngineCommand, parse_nu, weight_text


class Command(EngineCommand):
    help = 'Closed-form spectrum for all dominant weights up to a Weyl-height bound'

    def add_command_arguments(self, parser):
        parser.add_argument('--ht-bound', type=int, required=True, help='Largest Weyl height included')
        parser.add_argument('--nu', default=None, help='Evaluate eigenvalues at this rational coupling')
        parser.add_argument('--csv', action='store_true', help='Print the table as CSV')
        parser.add_argument('--degeneracies', action='store_true', help='List groups with equal eigenvalues')

    def run(self, rs, options):
        nu_value = parse_nu(options['nu'])
        rows = enumerate_spectrum(rs, options['ht_bound'], nu_value)
        payload = {
            'system': rs.name, 'ht_bound': options['ht_bound'],
            'nu': None if nu_value is None else exact(nu_value),
            'rows': SpectrumRowSerializer(rows, many=True).data,
        }
        groups = find_degeneracies(rs, options['ht_bound']) if options['degeneracies'] else []
        if options['degeneracies']:
            payload['degeneracies'] = [
                {'eigenvalue': [exact(x) for x in group['eigenvalue']], 'labels': [list(n) for n in group['labels']]}
                for group in groups
            ]

        if options['csv'] and not options['json']:
            writer = csv.writer(self.stdout, lineterminator='\n')
            header = ['label', 'constant', 'nu_coefficient', 'grading', 'norm', 'height']
            writer.writerow(header + (['value'] if nu_value is not None else []))
            for row in rows:
                values = [
                    ' '.join(map(str, row.label)), exact(row.constant), exact(row.slope),
                    row.grading, exact(row.norm), exact(row.height),
                ]
                writer.writerow(values + ([exact(row.value())] if nu_value is not None else []))
            return payload, []

        lines = [self.success(f'{rs.name}: {len(rows)} states with ht <= {options["ht_bound"]}')]
        for row in rows:
            text = format_eigenvalue(row.constant, row.slope)
            if nu_value is not None:
                text += f' = {row.value()}'
            lines.append(f'  {weight_text(row.label):<24} {text:<24} n={row.grading:<3} ht={row.height}')
        for group in groups:
            labels = ', '.join(weight_text(n) for n in group['labels'])
            lines.append(f'degenerate at {format_eigenvalue(*group["eigenvalue"])}: {labels}')
        return payload, lines
