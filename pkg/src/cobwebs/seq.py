"""Natural-number sequences ``F`` that denominate F-nomials and cobweb posets.

A sequence is addressed in upside-down notation: ``f_term(seq, k)`` is
``k_F``.  Only terms with ``k >= 1`` are level sizes or factorial factors;
``F_0`` is stored for completeness (see :attr:`FSequence.zero_term`).
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import IndexOutOfRangeError, InvalidParameterError

KINDS = ("naturals", "fibonacci", "gaussian", "constant", "custom")


@lru_cache(maxsize=None)
def _fibonacci(k: int) -> int:
    a, b = 0, 1
    for _ in range(k):
        a, b = b, a + b
    return a


@dataclass(frozen=True)
class FSequence:
    """An immutable natural-numbers-valued sequence.

    ``param`` is ``q`` for ``gaussian`` and ``c`` for ``constant``; ``terms``
    holds ``F_1, F_2, ...`` for ``custom``.
    """

    kind: str
    param: int | None = None
    terms: tuple[int, ...] = ()
    zero_term: int = 0

    def __post_init__(self):
        if self.kind not in KINDS:
            raise InvalidParameterError(f"unknown sequence kind {self.kind!r}")
        if self.kind == "gaussian" and (self.param is None or self.param < 2):
            raise InvalidParameterError(f"gaussian needs q >= 2, got {self.param}")
        if self.kind == "constant" and (self.param is None or self.param < 1):
            raise InvalidParameterError(f"constant needs c >= 1, got {self.param}")
        if self.kind == "custom":
            if not self.terms:
                raise InvalidParameterError("custom sequence needs at least one term")
            for i, t in enumerate(self.terms, start=1):
                if not isinstance(t, int) or t < 1:
                    raise InvalidParameterError(f"custom term F_{i} = {t!r} is not >= 1")
        if self.zero_term < 0:
            raise InvalidParameterError("F_0 must be a natural number")

    # constructors

    @classmethod
    def naturals(cls) -> FSequence:
        return cls("naturals")

    @classmethod
    def fibonacci(cls) -> FSequence:
        return cls("fibonacci")

    @classmethod
    def gaussian(cls, q: int) -> FSequence:
        return cls("gaussian", param=q)

    @classmethod
    def constant(cls, c: int) -> FSequence:
        return cls("constant", param=c, zero_term=c)

    @classmethod
    def custom(cls, terms, zero_term: int = 1) -> FSequence:
        return cls("custom", terms=tuple(terms), zero_term=zero_term)

    # access

    def term(self, k: int) -> int:
        if k < 0:
            raise IndexOutOfRangeError(f"negative index {k}")
        if k == 0:
            return self.zero_term
        if self.kind == "naturals":
            return k
        if self.kind == "fibonacci":
            return _fibonacci(k)
        if self.kind == "gaussian":
            q = self.param
            return (q**k - 1) // (q - 1)
        if self.kind == "constant":
            return self.param
        if k > len(self.terms):
            raise IndexOutOfRangeError(
                f"custom sequence has {len(self.terms)} terms, F_{k} requested"
            )
        return self.terms[k - 1]

    __getitem__ = term

    def prefix(self, n: int) -> tuple[int, ...]:
        """``(1_F, ..., n_F)``."""
        return tuple(self.term(k) for k in range(1, n + 1))

    @property
    def max_index(self) -> int | None:
        """Largest available index, or ``None`` when unbounded."""
        return len(self.terms) if self.kind == "custom" else None

    @property
    def descriptor(self) -> str:
        if self.kind in ("naturals", "fibonacci"):
            return self.kind
        if self.kind in ("gaussian", "constant"):
            return f"{self.kind}:{self.param}"
        return "custom:" + ",".join(map(str, self.terms))

    def __str__(self):
        return self.descriptor


def f_term(seq: FSequence, k: int) -> int:
    return seq.term(k)


def cumulative_sum(seq: FSequence, n: int) -> int:
    """``S(n) = 1_F + 2_F + ... + n_F``, with ``S(0) = 0``."""
    if n < 0:
        raise IndexOutOfRangeError(f"negative index {n}")
    return sum(seq.term(k) for k in range(1, n + 1))


def make_sequence(spec: str | FSequence) -> FSequence:
    """Parse ``naturals | fibonacci | gaussian:<q> | constant:<c> | custom:<t1>,<t2>,...``."""
    if isinstance(spec, FSequence):
        return spec
    name, sep, arg = spec.partition(":")
    if name in ("naturals", "fibonacci"):
        if sep:
            raise InvalidParameterError(f"{name} takes no parameter: {spec!r}")
        return FSequence(name)
    if not sep or not arg:
        raise InvalidParameterError(f"malformed sequence descriptor {spec!r}")
    try:
        if name == "gaussian":
            return FSequence.gaussian(int(arg))
        if name == "constant":
            return FSequence.constant(int(arg))
        if name == "custom":
            return FSequence.custom(int(t) for t in arg.split(","))
    except ValueError as exc:
        if isinstance(exc, InvalidParameterError):
            raise
        raise InvalidParameterError(f"malformed sequence descriptor {spec!r}") from exc
    raise InvalidParameterError(f"unknown sequence kind in {spec!r}")
