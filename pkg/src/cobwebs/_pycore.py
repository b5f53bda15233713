"""Pure-Python fallbacks for the kernels in ``_core.pyx``."""
import numpy as np


def bool_product(a, b):
    """Boolean (OR of ANDs) matrix product."""
    a = np.asarray(a, dtype=np.uint8)
    b = np.asarray(b, dtype=np.uint8)
    if a.shape[1] != b.shape[0]:
        raise ValueError("shape mismatch")
    out = np.zeros((a.shape[0], b.shape[1]), dtype=np.uint8)
    for i in range(a.shape[0]):
        for k in np.flatnonzero(a[i]):
            out[i] |= b[k]
    return out


def bool_closure(a):
    a = np.ascontiguousarray(a, dtype=np.uint8)
    n = a.shape[0]
    if a.shape[1] != n:
        raise ValueError("square matrix expected")
    result = np.eye(n, dtype=np.uint8)
    power = a
    for _ in range(n + 1):
        if not power.any():
            return result
        result |= power
        power = bool_product(power, a)
    raise ValueError("matrix is not nilpotent")


def count_chain_tuples(zeta, starts, stops):
    starts = [int(s) for s in starts]
    stops = [int(s) for s in stops]
    if len(starts) != len(stops):
        raise ValueError("starts/stops length mismatch")
    m = len(starts)
    if m == 0:
        return 1
    if any(hi <= lo for lo, hi in zip(starts, stops)):
        return 0
    zeta = np.asarray(zeta, dtype=np.uint8)
    if m == 1:
        return stops[0] - starts[0]
    last_lo, last_hi = starts[-1], stops[-1]
    # last level handled as one row-slice sum per prefix
    tails = {x: int(zeta[x, last_lo:last_hi].sum(dtype=np.int64))
             for x in range(starts[-2], stops[-2])}

    def walk(depth, prev):
        if depth == m - 2:
            return sum(tails[x] for x in range(starts[depth], stops[depth])
                       if prev is None or zeta[prev, x])
        total = 0
        for x in range(starts[depth], stops[depth]):
            if prev is None or zeta[prev, x]:
                total += walk(depth + 1, x)
        return total

    return walk(0, None)
