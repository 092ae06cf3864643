from fti.reproduction import orbit_sizes
from fti.rootdata import integer_coweyl_vector, integer_weyl_vector, minimal_characteristic_vector
from fti.serializers import RootSystemSerializer, exact

from ._engine import EngineCommand


class Command(EngineCommand):
    help = 'Show root data: Cartan matrix, weight norms, Weyl vector, fundamental orbit sizes'

    def run(self, rs, options):
        sizes = orbit_sizes(rs)
        payload = dict(RootSystemSerializer(rs).data)
        payload['orbit_sizes'] = sizes

        lines = [
            self.success(f'{rs.name}: rank {rs.rank}, |W| = {rs.weyl_group_order}, {len(rs.positive_roots)} positive roots'),
            'Bourbaki labels:   ' + ' '.join(str(x) for x in rs.fundamental_weight_order),
            'w_a^2:             ' + ' '.join(str(exact(rs.gram[a][a])) for a in range(rs.rank)),
            'orbit sizes:       ' + ' '.join(str(x) for x in sizes),
            'Weyl vector (root coords): ' + ' '.join(str(exact(x)) for x in rs.weyl_vector_root_coords),
            'integer Weyl vector:       ' + ' '.join(map(str, integer_weyl_vector(rs))),
            'integer co-Weyl vector:    ' + ' '.join(map(str, integer_coweyl_vector(rs))),
            'minimal vector:            ' + ' '.join(map(str, minimal_characteristic_vector(rs))),
            'Cartan matrix:',
        ]
        lines += ['  ' + ' '.join(f'{x:>3}' for x in row) for row in rs.cartan]
        return payload, lines
