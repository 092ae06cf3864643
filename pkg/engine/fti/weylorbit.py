"""
Weyl orbits of dominant weights.

Orbits are enumerated downward from the dominant weight: s_i is applied only
where the i-th coordinate is positive. Each such step lengthens the minimal
coset representative by one, so the BFS layers are disjoint and only need
deduplicating within themselves.
"""
import logging
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import kernels
from .conf import EngineConfig
from .exceptions import IndexOutOfRangeError, MemoryCapExceeded, NonDominantWeightError
from .rootdata import build_root_system, weyl_group_order

logger = logging.getLogger(__name__)


def simple_reflection(i, weight, rs):
    """s_i λ = λ - λ_i·α_i for a 1-based index i."""
    if not 1 <= i <= rs.rank:
        raise IndexOutOfRangeError(f'reflection index {i} outside 1..{rs.rank}', index=i)
    weight = rs.weight(weight)
    shift = weight[i - 1]
    return tuple(x - shift * c for x, c in zip(weight, rs.cartan[i - 1]))


def dominant_conjugate(weight, rs):
    point = list(rs.weight(weight))
    while True:
        i = next((i for i, x in enumerate(point) if x < 0), None)
        if i is None:
            return tuple(point)
        shift = point[i]
        point = [x - shift * c for x, c in zip(point, rs.cartan[i])]


def is_dominant(weight):
    return all(x >= 0 for x in weight)


def require_dominant(weight, rs):
    weight = rs.weight(weight)
    if not is_dominant(weight):
        raise NonDominantWeightError(f'{list(weight)} is not dominant in {rs.name}', weight=list(weight))
    return weight


def orbit_contains(d, weight, rs):
    """μ ∈ Ω_d without materializing the orbit."""
    return dominant_conjugate(weight, rs) == require_dominant(d, rs)


def orbit_size(d, rs):
    """|Ω_d| = |W| / |W_J| with J the zero coordinates of d."""
    d = require_dominant(d, rs)
    stabilizer = [i for i, x in enumerate(d) if x == 0]
    return rs.weyl_group_order // weyl_group_order(rs.cartan, stabilizer)


@dataclass(frozen=True, eq=False)
class WeylOrbit:
    system: str
    dominant: tuple
    elements: np.ndarray  # read-only, rows sorted lexicographically

    @property
    def size(self):
        return self.elements.shape[0]

    def __len__(self):
        return self.size

    def __iter__(self):
        for row in self.elements:
            yield tuple(int(x) for x in row)


@lru_cache(maxsize=64)
def _orbit_elements(system, dominant):
    rs = build_root_system(system)
    cartan = rs.cartan_array
    layer = np.array([dominant], dtype=np.int64)
    layers = [layer]
    while True:
        pieces = []
        for i in range(rs.rank):
            rows = layer[layer[:, i] > 0]
            if len(rows):
                pieces.append(rows - rows[:, i:i + 1] * cartan[i])
        if not pieces:
            break
        layer = np.unique(np.concatenate(pieces), axis=0)
        layers.append(layer)
    elements = np.unique(np.concatenate(layers), axis=0)
    elements.setflags(write=False)
    logger.info('enumerated orbit of %s in %s: %d elements', list(dominant), system, len(elements))
    return elements


def enumerate_orbit(d, rs, config=None):
    config = config or EngineConfig()
    d = require_dominant(d, rs)
    size = orbit_size(d, rs)
    if size > config.mem_cap:
        raise MemoryCapExceeded(
            f'orbit of {list(d)} has {size} elements, above the cap of {config.mem_cap}',
            size=size, mem_cap=config.mem_cap,
        )
    return WeylOrbit(rs.name, d, _orbit_elements(rs.name, d))


def dominant_of_rows(points, rs, threads=1):
    points = np.ascontiguousarray(points, dtype=np.int64)
    kernels.use_threads(threads)
    return kernels.dominant_rows(points, rs.cartan_array)


def write_orbit_dump(orbit, stream):
    """Line-oriented dump: one header line, then one element per line."""
    stream.write(f'# {orbit.system} orbit of {" ".join(map(str, orbit.dominant))} size {orbit.size}\n')
    for row in orbit.elements:
        stream.write(' '.join(str(int(x)) for x in row))
        stream.write('\n')
