from fti.cache import CacheStore, cached_systems

from ._engine import EngineCommand


class Command(EngineCommand):
    help = 'Inspect or clear the orbit cache'
    uses_system = False

    def add_command_arguments(self, parser):
        parser.add_argument('action', choices=('stat', 'clear'))
        parser.add_argument('--system', action='append', help='Limit to this root system (repeatable)')

    def run(self, rs, options):
        if options['no_cache']:
            return {'systems': []}, ['cache disabled']
        systems = options['system'] or cached_systems()
        if options['action'] == 'stat':
            stats = [CacheStore(system).stats() for system in systems]
            lines = [
                f'{entry["system"]:<6} {entry["total"]:>8} records  '
                + '  '.join(f'{kind}={count}' for kind, count in entry['records'].items())
                for entry in stats
            ]
            lines.append(self.success(f'{len(stats)} systems in cache'))
            return {'systems': stats}, lines

        cleared = {system: CacheStore(system).clear() for system in systems}
        lines = [f'{system}: {count} records removed' for system, count in cleared.items()]
        lines.append(self.success('cache cleared'))
        return {'cleared': cleared}, lines
