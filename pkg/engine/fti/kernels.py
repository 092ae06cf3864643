"""
Numba kernels for the orbit loops.

All kernels take int64 arrays in ω-coordinates and the Cartan matrix whose rows
are the simple roots. The row loops run under `prange`; `use_threads` sets how
many threads numba may use for them.

    from fti.kernels import dominant_rows, use_threads
    use_threads(config.threads)
    dominant = dominant_rows(points, rs.cartan_array)
"""
import numpy as np
from numba import config, njit, prange, set_num_threads


def use_threads(threads):
    """Thread count for the parallel kernels, clipped to the pool numba started with."""
    set_num_threads(max(1, min(int(threads), config.NUMBA_NUM_THREADS)))


@njit(cache=True)
def _make_dominant(point, cartan):
    rank = point.shape[0]
    while True:
        i = 0
        while i < rank and point[i] >= 0:
            i += 1
        if i == rank:
            return
        shift = point[i]
        for j in range(rank):
            point[j] -= shift * cartan[i, j]


@njit(cache=True, parallel=True)
def dominant_rows(points, cartan):
    """Dominant conjugate of every row."""
    out = points.copy()
    for r in prange(out.shape[0]):
        _make_dominant(out[r], cartan)
    return out


@njit(cache=True)
def count_preimages(orbit, shift, cartan, target):
    """#{ω in orbit : dominant(shift - ω) == target}."""
    rank = orbit.shape[1]
    scratch = np.empty(rank, dtype=np.int64)
    hits = 0
    for r in range(orbit.shape[0]):
        for j in range(rank):
            scratch[j] = shift[j] - orbit[r, j]
        _make_dominant(scratch, cartan)
        same = True
        for j in range(rank):
            if scratch[j] != target[j]:
                same = False
                break
        if same:
            hits += 1
    return hits


@njit(cache=True, parallel=True)
def count_all_preimages(orbit, candidates, cartan, target):
    """count_preimages for every candidate row."""
    hits = np.zeros(candidates.shape[0], dtype=np.int64)
    for c in prange(candidates.shape[0]):
        hits[c] = count_preimages(orbit, candidates[c], cartan, target)
    return hits


@njit(cache=True)
def _row_strings(orbit, r, roots, coroots, points, lengths, steps, which, start, write):
    """Walk the strings through row r; returns start + the number of dominant interior points."""
    rank = orbit.shape[1]
    n = start
    for q in range(roots.shape[0]):
        pairing = 0
        for j in range(rank):
            pairing += orbit[r, j] * coroots[q, j]
        length = abs(pairing)
        sign = 1 if pairing > 0 else -1
        for k in range(1, length):
            dominant = True
            for j in range(rank):
                if orbit[r, j] - sign * k * roots[q, j] < 0:
                    dominant = False
                    break
            if dominant:
                if write:
                    for j in range(rank):
                        points[n, j] = orbit[r, j] - sign * k * roots[q, j]
                    lengths[n] = length
                    steps[n] = k
                    which[n] = q
                n += 1
    return n


@njit(cache=True, parallel=True)
def string_points(orbit, roots, coroots):
    """
    Dominant interior points of the reflection strings through each orbit element.

    For ω in the orbit and a positive root α with l = <ω, α^∨>, |l| >= 2, the
    points ω - sign(l)·k·α for k = 1..|l|-1 lie strictly between ω and s_α ω.
    Only the dominant ones are returned: points (m × N), |l| (m), k (m) and the
    root index (m), grouped by orbit row in row order.
    """
    rows, rank = orbit.shape
    nothing = np.empty((0, rank), dtype=np.int64)
    none = np.empty(0, dtype=np.int64)
    counts = np.zeros(rows + 1, dtype=np.int64)
    for r in prange(rows):
        counts[r + 1] = _row_strings(orbit, r, roots, coroots, nothing, none, none, none, 0, False)
    offsets = np.cumsum(counts)
    m = offsets[rows]
    points = np.empty((m, rank), dtype=np.int64)
    lengths = np.empty(m, dtype=np.int64)
    steps = np.empty(m, dtype=np.int64)
    which = np.empty(m, dtype=np.int64)
    for r in prange(rows):
        _row_strings(orbit, r, roots, coroots, points, lengths, steps, which, offsets[r], True)
    return points, lengths, steps, which
