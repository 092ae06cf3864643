from fti.serializers import OrbitSerializer
from fti.weylorbit import enumerate_orbit, orbit_size, require_dominant, write_orbit_dump

from ._engine import EngineCommand, parse_weight, weight_text


class Command(EngineCommand):
    help = 'Size of the Weyl orbit of a dominant weight; --dump writes every element'

    def add_command_arguments(self, parser):
        parser.add_argument('weight', help='Dominant weight: w3, 0 or 1,0,2,...')
        parser.add_argument('--dump', metavar='PATH', help='Write the enumerated orbit to PATH')

    def run(self, rs, options):
        d = require_dominant(parse_weight(options['weight'], rs), rs)
        size = orbit_size(d, rs)
        payload = dict(OrbitSerializer({'system': rs.name, 'dominant': list(d), 'size': size}).data)
        lines = [self.success(f'{rs.name} orbit of {weight_text(d)}: size {size}')]
        if options['dump']:
            orbit = enumerate_orbit(d, rs, self.config)
            with open(options['dump'], 'w') as stream:
                write_orbit_dump(orbit, stream)
            payload['dump'] = options['dump']
            payload['enumerated'] = orbit.size
            lines.append(f'{orbit.size} elements written to {options["dump"]}')
        return payload, lines
