import re
import sys
from fractions import Fraction

from django.core.management.base import BaseCommand, CommandError

from fti.cache import CacheStore, use_cache_dir
from fti.conf import engine_config
from fti.exceptions import DimensionMismatchError, EngineError, InvalidCouplingError
from fti.hamiltonian import Hamiltonian
from fti.rootdata import build_root_system
from fti.serializers import render

_WEIGHT_RE = re.compile(r'^w(\d+)$')


class EngineCommand(BaseCommand):
    """
    Shared plumbing for the engine commands.

    Subclasses implement add_command_arguments() and run(rs, options), returning
    (payload, lines): the JSON payload for --json and the text lines otherwise.
    Any EngineError becomes an error payload and a CommandError.
    """
    uses_system = True

    def add_arguments(self, parser):
        if self.uses_system:
            parser.add_argument('system', help='Root system, e.g. E8, A2, G2')
        self.add_command_arguments(parser)
        parser.add_argument('--threads', type=int, default=None, help='Worker threads for orbit loops')
        parser.add_argument('--cache-dir', default=None, help='Directory holding the orbit cache')
        parser.add_argument('--no-cache', action='store_true', help='Compute everything without the cache')
        parser.add_argument('--json', action='store_true', help='Machine-readable output')
        parser.add_argument('--mem-cap', type=int, default=None, help='Largest orbit that may be materialized')

    def add_command_arguments(self, parser):
        pass

    def handle(self, *args, **options):
        self.options = options
        try:
            self.config = engine_config(
                threads=options['threads'], mem_cap=options['mem_cap'], slow=options.get('slow'),
            )
            self.store_enabled = not options['no_cache']
            if self.store_enabled:
                use_cache_dir(options['cache_dir'])
            rs = build_root_system(options['system']) if self.uses_system else None
            payload, lines = self.run(rs, options)
        except EngineError as error:
            self.emit_error(error)
            raise CommandError(error.message, returncode=2)
        if options['json']:
            self.stdout.write(render(payload).decode())
        else:
            for line in lines:
                self.stdout.write(line)

    def run(self, rs, options):
        raise NotImplementedError

    def emit_error(self, error):
        text = render(error.to_dict()).decode()
        if self.options.get('json'):
            self.stdout.write(text)
        else:
            sys.stderr.write(text + '\n')

    # ── helpers ──────────────────────────────────────────────────────

    def store(self, rs):
        return CacheStore(rs.name) if self.store_enabled else None

    def hamiltonian(self, rs):
        return Hamiltonian(rs, self.config, self.store(rs))

    def success(self, text):
        return self.style.SUCCESS(text)


def parse_weight(text, rs):
    """`w3`, `0`, or coordinates like `1,0,2` / `[1,0,2]` / `1 0 2`."""
    text = text.strip()
    match = _WEIGHT_RE.match(text)
    if match:
        return rs.fundamental_weight(int(match.group(1)))
    if text == '0':
        return (0,) * rs.rank
    pieces = [piece for piece in re.split(r'[\s,]+', text.strip('[]()')) if piece]
    try:
        coords = [int(piece) for piece in pieces]
    except ValueError:
        raise DimensionMismatchError(f'cannot read {text!r} as a weight of {rs.name}', weight=text)
    return rs.weight(coords)


def parse_nu(text):
    if text is None:
        return None
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise InvalidCouplingError(f'cannot read ν = {text!r} as a rational number', nu=text)


def weight_text(weight):
    return '[' + ','.join(str(int(x)) for x in weight) + ']'
