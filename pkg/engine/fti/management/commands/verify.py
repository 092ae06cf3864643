from fti.exceptions import ValidationFailed
from fti.hamiltonian import AlgebraicOperator
from fti.numcheck import all_entries, validate_coefficients
from fti.reproduction import Check, flag_checks, reference_checks

from ._engine import EngineCommand

E8_DEFAULT_NUMERIC = [('A', 1, 1), ('A', 1, 2)] + [('b', a) for a in range(1, 9)] + [('c', 1), ('c', 2)]


class Command(EngineCommand):
    help = 'Reproduce the reference tables, cross-check numerically and test the triangular flags'

    def add_command_arguments(self, parser):
        parser.add_argument(
            '--reference-tables', '--paper-tables', dest='reference_tables', action='store_true',
            help='Rebuild the published tables and identities',
        )
        parser.add_argument('--numeric', action='store_true', help='Compare coefficients with direct orbit sums')
        parser.add_argument('--samples', type=int, default=10)
        parser.add_argument('--tol', type=float, default=1e-8)
        parser.add_argument('--seed', type=int, default=0)
        parser.add_argument('--flags', action='store_true', help='Check flag preservation by h')
        parser.add_argument('--slow', action='store_true', help='Include slow-tier entries (E8: A_88, c_8)')

    def run(self, rs, options):
        hamiltonian = self.hamiltonian(rs)
        checks = []
        if options['reference_tables']:
            checks += reference_checks(hamiltonian)
        if options['numeric']:
            if rs.name == 'E8' and not options['slow']:
                entries = E8_DEFAULT_NUMERIC
            else:
                entries = all_entries(rs.rank)
            report = validate_coefficients(
                hamiltonian, entries, samples=options['samples'], tol=options['tol'], seed=options['seed'],
            )
            checks.append(Check('numeric', report.passed, report.as_dict()))
        if options['flags']:
            checks += flag_checks(AlgebraicOperator(hamiltonian), slow=options['slow'])

        failed = [check.name for check in checks if not check.passed]
        payload = {'system': rs.name, 'passed': not failed, 'checks': [check.as_dict() for check in checks]}
        if failed:
            raise ValidationFailed(f'{rs.name}: {", ".join(failed)} failed', **payload)

        lines = [f'  {check.name:<24} ok' for check in checks]
        lines.append(self.success(f'{rs.name}: {len(checks)} checks passed'))
        return payload, lines
