"""F-denominated cobweb posets and their zeta and Moebius matrices.

Vertices carry labels ``1..V`` assigned level by level, left to right; level
``s`` (``s >= 1``) has ``s_F`` vertices and occupies labels
``S(s-1)+1 .. S(s)``.  Every matrix here is indexed by ``label - 1``.

Several published closed forms for zeta are built verbatim so they can be
compared against :func:`zeta_definitional`, which encodes the order itself.
"""
from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass, field
from typing import NamedTuple

import numpy as np

from . import kernels
from .errors import FormMismatchError, IndexOutOfRangeError, InvalidParameterError, NotUnitriangularError
from .seq import FSequence

KROT_PARSES = ("each-minus-one", "product-minus-one", "rewritten")


class GridPoint(NamedTuple):
    """Grid coordinates ``<s, t>``: position ``s`` within level ``t``."""

    pos: int
    level: int


@dataclass(frozen=True)
class CobwebPoset:
    seq: FSequence
    n_levels: int
    level_sizes: tuple[int, ...] = field(init=False)
    bounds: tuple[int, ...] = field(init=False, repr=False)

    def __post_init__(self):
        if self.n_levels < 1:
            raise InvalidParameterError("a cobweb poset needs at least one level")
        sizes = self.seq.prefix(self.n_levels)
        bounds = [0]
        for sz in sizes:
            bounds.append(bounds[-1] + sz)
        object.__setattr__(self, "level_sizes", sizes)
        object.__setattr__(self, "bounds", tuple(bounds))

    @classmethod
    def covering(cls, seq: FSequence, size: int) -> CobwebPoset:
        """Fewest levels whose vertex count reaches ``size``."""
        if size < 1:
            raise InvalidParameterError("size must be >= 1")
        n, total = 0, 0
        while total < size:
            n += 1
            total += seq.term(n)
        return cls(seq, n)

    @property
    def size(self) -> int:
        return self.bounds[-1]

    def level_range(self, s: int) -> range:
        """Labels of level ``s``."""
        if not 1 <= s <= self.n_levels:
            raise IndexOutOfRangeError(f"level {s} outside 1..{self.n_levels}")
        return range(self.bounds[s - 1] + 1, self.bounds[s] + 1)

    def level_of(self, label: int) -> int:
        if not 1 <= label <= self.size:
            raise IndexOutOfRangeError(f"label {label} outside 1..{self.size}")
        return bisect_left(self.bounds, label)

    def levels(self, size: int | None = None) -> np.ndarray:
        """Level of each label ``1..size`` as an array."""
        size = self.size if size is None else size
        if size > self.size:
            raise IndexOutOfRangeError(f"poset has {self.size} vertices, {size} requested")
        return np.repeat(np.arange(1, self.n_levels + 1), self.level_sizes)[:size]


def coords_of(poset: CobwebPoset, label: int) -> GridPoint:
    t = poset.level_of(label)
    return GridPoint(label - poset.bounds[t - 1], t)


def label_of(poset: CobwebPoset, level: int, pos: int) -> int:
    if not 1 <= level <= poset.n_levels:
        raise IndexOutOfRangeError(f"level {level} outside 1..{poset.n_levels}")
    if not 1 <= pos <= poset.level_sizes[level - 1]:
        raise IndexOutOfRangeError(f"position {pos} outside level {level}")
    return poset.bounds[level - 1] + pos


# zeta constructions

def zeta_definitional(poset: CobwebPoset, size: int | None = None) -> np.ndarray:
    """``zeta(x, y) = 1`` iff ``x == y`` or ``level(x) < level(y)``."""
    lv = poset.levels(size)
    z = lv[:, None] < lv[None, :]
    np.fill_diagonal(z, True)
    return z.astype(np.uint8)


def zeta_dziemianczuk(seq: FSequence, size: int) -> np.ndarray:
    """``[x<=y] - [x<y] sum_{n>=0} [x > S(n)][y <= S(n+1)]``, term by term."""
    S = [0]
    while S[-1] < size:
        S.append(S[-1] + seq.term(len(S)))
    z = np.zeros((size, size), dtype=np.uint8)
    for x in range(1, size + 1):
        for y in range(1, size + 1):
            cut = 0
            if x < y:
                for n in range(len(S) - 1):
                    cut += (x > S[n]) * (y <= S[n + 1])
            z[x - 1, y - 1] = (x <= y) - (x < y) * cut
    return z


def zeta_delta_fib(size: int, k_start: int = 0) -> np.ndarray:
    """Fibonacci zeta as ``zeta_1 - zeta_0`` with Kronecker-delta sums.

    ``zeta_0(x, y) = sum_{k>=k_start} sum_{s>=0} delta(x, F_{s+1}+k)
    sum_{r=1}^{F_s-k-1} delta(k+F_{s+1}+r, y)``.  ``k_start`` 0 or 1 selects
    between the two printed lower limits.
    """
    if k_start not in (0, 1):
        raise InvalidParameterError("k_start must be 0 or 1")
    fib = FSequence.fibonacci()
    zeta1 = np.triu(np.ones((size, size), dtype=np.int64))
    zeta0 = np.zeros((size, size), dtype=np.int64)
    s = 0
    while fib.term(s + 1) <= size:
        base = fib.term(s + 1)
        k = k_start
        while base + k <= size:
            x = base + k
            for r in range(1, fib.term(s) - k):
                y = k + base + r
                if y <= size:
                    zeta0[x - 1, y - 1] += 1
            k += 1
        s += 1
    raw = zeta1 - zeta0
    return raw.astype(np.uint8) if _is_boolean(raw) else raw


def _is_boolean(m) -> bool:
    return bool(np.isin(m, (0, 1)).all())


def zeta_delta_general(seq: FSequence, size: int, variant: str = "knuth") -> np.ndarray:
    """Raw integer ``zeta_1 - zeta_0`` for the general upside-down rewrites.

    ``knuth``: ``zeta_0 = sum_{s>=1} sum_{k>=1} [x = k + s_F][1 <= y <= s_F + (s-1)_F - 1]``
    ``shift``: ``zeta_0 = sum_{s>=1} sum_{k>=1} delta(x, k + s_F) sum_{r=1}^{(s-1)_F-k-1} delta(x+r, y)``

    No clamping is applied, so over-subtraction shows up as negative entries.
    The ``s`` sums stop at the number of levels needed to hold ``size`` vertices.
    """
    if variant not in ("knuth", "shift"):
        raise InvalidParameterError(f"unknown variant {variant!r}")
    n_levels = CobwebPoset.covering(seq, size).n_levels
    zeta1 = np.triu(np.ones((size, size), dtype=np.int64))
    zeta0 = np.zeros((size, size), dtype=np.int64)
    for s in range(1, n_levels + 1):
        sf, prev = seq.term(s), seq.term(s - 1)
        for k in range(1, size - sf + 1):
            x = k + sf
            if variant == "knuth":
                hi = min(sf + prev - 1, size)
                if hi >= 1:
                    zeta0[x - 1, :hi] += 1
            else:
                for r in range(1, prev - k):
                    if x + r <= size:
                        zeta0[x - 1, x + r - 1] += 1
    return zeta1 - zeta0


def adjacency_blocks(seq: FSequence, n_levels: int) -> np.ndarray:
    """``A_F``: all-ones ``s_F x (s+1)_F`` blocks on the block superdiagonal."""
    poset = CobwebPoset(seq, n_levels)
    a = np.zeros((poset.size, poset.size), dtype=np.uint8)
    for s in range(1, n_levels):
        lo, hi = poset.bounds[s - 1], poset.bounds[s]
        a[lo:hi, hi:poset.bounds[s + 1]] = 1
    return a


def zeta_blocks(seq: FSequence, n_levels: int) -> np.ndarray:
    """``I + A_F + A_F^2 + ...`` under the Boolean product."""
    return kernels.bool_closure(adjacency_blocks(seq, n_levels))


def _check_grid(poset: CobwebPoset, p) -> GridPoint:
    s, t = p
    if not 1 <= t <= poset.n_levels or not 1 <= s <= poset.level_sizes[t - 1]:
        raise IndexOutOfRangeError(f"invalid grid point <{s},{t}>")
    return GridPoint(s, t)


def zeta_krot_grid(seq: FSequence, x, y, poset: CobwebPoset | None = None) -> int:
    """``delta(s,u) delta(t,v) + sum_{k>=1} delta(t+k, v)`` for ``x=<s,t>``, ``y=<u,v>``."""
    if poset is not None:
        x, y = _check_grid(poset, x), _check_grid(poset, y)
    else:
        x, y = _check_grid_free(seq, x), _check_grid_free(seq, y)
    (s, t), (u, v) = x, y
    return int(s == u and t == v) + int(v > t)


def _check_grid_free(seq: FSequence, p) -> GridPoint:
    s, t = p
    if t < 1 or not 1 <= s <= seq.term(t):
        raise IndexOutOfRangeError(f"invalid grid point <{s},{t}>")
    return GridPoint(s, t)


def zeta_krot_matrix(poset: CobwebPoset, size: int | None = None) -> np.ndarray:
    size = poset.size if size is None else size
    pts = [coords_of(poset, x) for x in range(1, size + 1)]
    z = np.zeros((size, size), dtype=np.uint8)
    for i, p in enumerate(pts):
        for j, q in enumerate(pts):
            z[i, j] = zeta_krot_grid(poset.seq, p, q, poset)
    return z


# Moebius matrices

def mobius_from_zeta(zeta) -> np.ndarray:
    """Exact integer inverse of an upper unitriangular zeta matrix.

    Uses ``mu(x, y) = -sum_{x <= z < y} mu(x, z) zeta(z, y)``; entries are
    Python ints in an object array.
    """
    z = np.asarray(zeta)
    n = z.shape[0]
    if z.shape != (n, n):
        raise NotUnitriangularError("square matrix expected")
    if not (np.diagonal(z) == 1).all() or np.tril(z, -1).any():
        raise NotUnitriangularError("zeta must be upper unitriangular")
    zi = [[int(v) for v in row] for row in z]
    mu = [[0] * n for _ in range(n)]
    for x in range(n):
        row = mu[x]
        row[x] = 1
        for y in range(x + 1, n):
            acc = 0
            for w in range(x, y):
                if row[w] and zi[w][y]:
                    acc += row[w] * zi[w][y]
            row[y] = -acc
    out = np.empty((n, n), dtype=object)
    out[:] = mu
    return out


def int_matmul(a, b) -> np.ndarray:
    """Exact integer matrix product (object arrays of Python ints)."""
    a = np.asarray(a, dtype=object)
    b = np.asarray(b, dtype=object)
    return a.dot(b)


def mobius_krot(seq: FSequence, x, y, parse: str = "each-minus-one") -> int:
    """Closed-form Moebius value between grid points ``x=<s,t>``, ``y=<u,v>``.

    ``parse`` selects the reading of the printed product over
    ``i = t+1 .. v-1``: ``prod(F_i - 1)`` (each-minus-one),
    ``prod(F_i) - 1`` (product-minus-one) or ``prod((i-1)_F)`` (rewritten;
    its sum starts at ``k = 1`` with no separate cover term).
    """
    if parse not in KROT_PARSES:
        raise InvalidParameterError(f"unknown parse {parse!r}; expected one of {KROT_PARSES}")
    (s, t), (u, v) = _check_grid_free(seq, x), _check_grid_free(seq, y)
    value = int(s == u and t == v)
    k = v - t
    if parse == "rewritten":
        if k >= 1:
            prod = 1
            for i in range(t + 1, v):
                prod *= seq.term(i - 1)
            value += (-1) ** k * prod
        return value
    if k == 1:
        value -= 1
    elif k >= 2:
        if parse == "each-minus-one":
            prod = 1
            for i in range(t + 1, v):
                prod *= seq.term(i) - 1
        else:
            prod = 1
            for i in range(t + 1, v):
                prod *= seq.term(i)
            prod -= 1
        value += (-1) ** k * prod
    return value


def mobius_krot_matrix(poset: CobwebPoset, parse: str = "each-minus-one",
                       size: int | None = None) -> np.ndarray:
    size = poset.size if size is None else size
    pts = [coords_of(poset, x) for x in range(1, size + 1)]
    out = np.empty((size, size), dtype=object)
    for i, p in enumerate(pts):
        for j, q in enumerate(pts):
            out[i, j] = mobius_krot(poset.seq, p, q, parse)
    return out


# comparison

def mismatches(expected, got) -> list[tuple[int, int, int, int]]:
    """Cells that differ, as 1-based ``(x, y, expected, got)``."""
    e = np.asarray(expected)
    g = np.asarray(got)
    if e.shape != g.shape:
        raise InvalidParameterError(f"shape mismatch {e.shape} vs {g.shape}")
    return [(int(i) + 1, int(j) + 1, int(e[i, j]), int(g[i, j]))
            for i, j in zip(*np.nonzero(e != g))]


def diff_report(title: str, expected, got, limit: int | None = None) -> str:
    """Plain-text listing of every mismatch plus a summary count."""
    bad = mismatches(expected, got)
    lines = [f"# {title}", "x,y,expected,got"]
    shown = bad if limit is None else bad[:limit]
    lines += [f"{x},{y},{e},{g}" for x, y, e, g in shown]
    if limit is not None and len(bad) > limit:
        lines.append(f"... {len(bad) - limit} more")
    n = np.asarray(expected).shape[0]
    lines.append(f"mismatches: {len(bad)} of {n * n} cells")
    return "\n".join(lines) + "\n"


def require_fibonacci(seq: FSequence):
    if seq.kind != "fibonacci":
        raise FormMismatchError(f"this formula is defined for fibonacci, not {seq}")
