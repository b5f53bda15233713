"""Maximal chains of cobweb layers, counted by brute force and in closed form."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from math import prod

from . import kernels
from .cobweb import CobwebPoset, zeta_definitional
from .errors import CapExceededError, InvalidParameterError
from .fnomial import f_factorial, f_falling, fnomial
from .seq import FSequence

DEFAULT_CAP = 10**6


@dataclass(frozen=True)
class Layer:
    """Levels ``start..end`` of a cobweb poset.

    ``start == end + 1`` is the empty layer, whose only maximal chain is
    the empty one.
    """

    poset: CobwebPoset
    start: int
    end: int

    def __post_init__(self):
        if self.start < 1 or self.end > self.poset.n_levels or self.start > self.end + 1:
            raise InvalidParameterError(
                f"layer <{self.start} -> {self.end}> invalid for {self.poset.n_levels} levels"
            )

    @classmethod
    def of(cls, seq: FSequence, start: int, end: int) -> Layer:
        return cls(CobwebPoset(seq, max(end, 1)), start, end)

    def level_ranges(self) -> list[range]:
        return [self.poset.level_range(s) for s in range(self.start, self.end + 1)]

    @property
    def vertices(self) -> list[int]:
        return [x for r in self.level_ranges() for x in r]

    @property
    def product_size(self) -> int:
        return prod(len(r) for r in self.level_ranges())


def enumerate_max_chains(layer: Layer, cap: int = DEFAULT_CAP) -> list[tuple[int, ...]]:
    """Every chain picking one vertex per level, as label tuples."""
    size = layer.product_size
    if size > cap:
        raise CapExceededError(size, cap)
    return list(product(*layer.level_ranges()))


def count_max_chains(layer: Layer) -> int:
    """Count maximal chains by visiting every tuple of the level product and
    testing each consecutive pair against the definitional zeta matrix."""
    ranges = layer.level_ranges()
    if not ranges:
        return 1
    zeta = zeta_definitional(layer.poset)
    starts = [r.start - 1 for r in ranges]
    stops = [r.stop - 1 for r in ranges]
    if layer.product_size >= 2**63:
        return kernels.python_kernels.count_chain_tuples(zeta, starts, stops)
    return int(kernels.count_chain_tuples(zeta, starts, stops))


def count_max_chains_closed(seq: FSequence, k: int, n: int) -> int:
    """``n_F! / (k-1)_F!`` maximal chains in the layer from level ``k`` to ``n``."""
    if not 1 <= k <= n:
        raise InvalidParameterError(f"need 1 <= k <= n, got k={k}, n={n}")
    return f_factorial(seq, n) // f_factorial(seq, k - 1)


def count_chains_from_vertex(seq: FSequence, k: int, n: int) -> int:
    """Chains from one fixed vertex on level ``k`` up to level ``n``: ``n_F^(m)``, ``m = n-k``."""
    if not 1 <= k <= n:
        raise InvalidParameterError(f"need 1 <= k <= n, got k={k}, n={n}")
    return f_falling(seq, n, n - k)


@dataclass(frozen=True)
class PartitionReport:
    seq: str
    n: int
    k: int
    layer_count: int
    fnomial: int
    block_size: int

    @property
    def holds(self) -> bool:
        return self.layer_count == self.fnomial * self.block_size

    CSV_HEADER = "seq,n,k,layer_count,fnomial,block_size,holds"

    def csv_row(self) -> str:
        return (f"{self.seq},{self.n},{self.k},{self.layer_count},"
                f"{self.fnomial},{self.block_size},{str(self.holds).lower()}")

    def __str__(self):
        verdict = "holds" if self.holds else "FAILS"
        return (f"{self.seq} n={self.n} k={self.k}: |C_max<Phi_{self.k + 1} -> Phi_{self.n}>| = "
                f"{self.layer_count} = {self.fnomial} * {self.block_size} {verdict}")


def verify_partition_theorem(seq: FSequence, n: int, k: int) -> PartitionReport:
    """Check ``|C_max<Phi_{k+1} -> Phi_n>| = binom(n,k)_F * m_F!`` with ``m = n - k``.

    The left side is a brute-force count over the layer; the right side
    comes from F-nomial arithmetic only.
    """
    if not 0 <= k <= n or n < 1:
        raise InvalidParameterError(f"need 0 <= k <= n and n >= 1, got n={n}, k={k}")
    layer = Layer(CobwebPoset(seq, n), k + 1, n)
    return PartitionReport(
        seq=seq.descriptor,
        n=n,
        k=k,
        layer_count=count_max_chains(layer),
        fnomial=fnomial(seq, n, k),
        block_size=f_factorial(seq, n - k),
    )
