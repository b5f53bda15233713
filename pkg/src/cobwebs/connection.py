"""Connection constants between persistent-root polynomial sequences.

Two monic sequences ``q_n = q_{n-1} (x - r_n)`` and ``p_n = p_{n-1} (x - s_n)``
are tied by ``p_n = sum_k c_{n,k} q_k``.  The table ``c`` (generalized Lah
numbers) is computed here two independent ways: by the three-term recurrence
in :func:`lah_table` and by back-substitution in :func:`connection_oracle`.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Callable, Sequence

from .errors import (
    IndexOutOfRangeError,
    InsufficientPrefixError,
    InvalidParameterError,
    NotUnitriangularError,
)
from .fnomial import fnomial
from .polynomial import Polynomial
from .seq import FSequence


@dataclass(frozen=True)
class RootSequence:
    """Roots ``r_1, r_2, ...`` as a finite prefix, optionally extended by a rule.

    ``rule`` receives the tuple of all earlier roots and returns the next one.
    """

    terms: tuple[Fraction, ...]
    rule: Callable[[tuple[Fraction, ...]], Fraction] | None = None
    name: str = ""

    def __post_init__(self):
        object.__setattr__(self, "terms", tuple(Fraction(t) for t in self.terms))

    def prefix(self, n: int) -> tuple[Fraction, ...]:
        """``(r_1, ..., r_n)``, extending through ``rule`` when needed."""
        out = list(self.terms[:n])
        if len(out) < n:
            if self.rule is None:
                raise InsufficientPrefixError(
                    f"root sequence {self.name or ''} has {len(self.terms)} terms, {n} needed"
                )
            while len(out) < n:
                out.append(Fraction(self.rule(tuple(out))))
        return tuple(out)

    def __getitem__(self, k: int) -> Fraction:
        if k < 1:
            raise IndexOutOfRangeError("root sequences are indexed from 1")
        return self.prefix(k)[-1]

    def __len__(self):
        return len(self.terms)


def zero_roots() -> RootSequence:
    return RootSequence((), rule=lambda prev: Fraction(0), name="zeros")


def constant_roots(c) -> RootSequence:
    c = Fraction(c)
    return RootSequence((), rule=lambda prev: c, name=f"const:{c}")


def q_power_roots(q: int) -> RootSequence:
    """``r_k = q^(k-1)``: the roots of the q-Gaussian polynomials."""
    return RootSequence((), rule=lambda prev: Fraction(q) ** len(prev), name=f"qpowers:{q}")


def lucas_roots() -> RootSequence:
    """``r_1 = 0, r_2 = 2, r_k = 1 - r_{k-1}^2``."""

    def rule(prev):
        if len(prev) == 0:
            return Fraction(0)
        if len(prev) == 1:
            return Fraction(2)
        return 1 - prev[-1] ** 2

    return RootSequence((), rule=rule, name="lucas")


def natural_roots(offset: int = 0) -> RootSequence:
    """``r_k = k - 1 + offset``; offset 0 gives the falling factorials."""
    return RootSequence((), rule=lambda prev: Fraction(len(prev) + offset), name=f"naturals+{offset}")


def parse_roots(spec: str) -> RootSequence:
    """``zeros | lucas | qpowers:<q> | const:<c> | falling | <r1>,<r2>,...``."""
    if spec == "zeros":
        return zero_roots()
    if spec == "lucas":
        return lucas_roots()
    if spec == "falling":
        return natural_roots()
    name, sep, arg = spec.partition(":")
    try:
        if name == "qpowers" and sep:
            return q_power_roots(int(arg))
        if name == "const" and sep:
            return constant_roots(Fraction(arg))
        return RootSequence(tuple(Fraction(t) for t in spec.split(",")), name=spec)
    except (ValueError, ZeroDivisionError) as exc:
        raise InvalidParameterError(f"malformed root descriptor {spec!r}") from exc


def persistent_poly(roots: RootSequence, n: int) -> Polynomial:
    """Monic ``(x - r_1)...(x - r_n)``; ``n = 0`` gives ``1``."""
    return Polynomial.from_roots(roots.prefix(n))


@dataclass(frozen=True)
class ConnectionTable:
    """Lower-triangular exact table ``rows[n][k] = c_{n,k}``, ``0 <= k <= n``."""

    rows: tuple[tuple[Fraction, ...], ...]
    r: RootSequence | None = None
    s: RootSequence | None = None

    @property
    def n_max(self) -> int:
        return len(self.rows) - 1

    def __getitem__(self, nk):
        n, k = nk
        if k < 0 or k > n:
            return Fraction(0)
        return self.rows[n][k]

    def row_sum(self, n: int) -> Fraction:
        return sum(self.rows[n], Fraction(0))

    def same_entries(self, other: ConnectionTable) -> bool:
        return self.rows == other.rows

    def to_csv(self) -> str:
        return "".join(",".join(str(c) for c in row) + "\n" for row in self.rows)


def lah_table(r: RootSequence, s: RootSequence, n_max: int) -> ConnectionTable:
    """Generalized Lah numbers from the recurrence alone:

    ``L_{n+1,k} = L_{n,k-1} + (r_{k+1} - s_{n+1}) L_{n,k}``, ``L_{0,0} = 1``.
    """
    rr = r.prefix(n_max)
    ss = s.prefix(n_max)
    rows = [(Fraction(1),)]
    for n in range(n_max):
        prev = rows[-1]
        row = []
        for k in range(n + 2):
            left = prev[k - 1] if k >= 1 else 0
            here = (rr[k] - ss[n]) * prev[k] if k <= n else 0
            row.append(Fraction(left + here))
        rows.append(tuple(row))
    return ConnectionTable(tuple(rows), r, s)


def ccc(table: ConnectionTable, n: int) -> Fraction:
    """Cumulative connection constant ``C_n = sum_k c_{n,k}``."""
    if not 0 <= n <= table.n_max:
        raise IndexOutOfRangeError(f"row {n} outside table of size {table.n_max}")
    return table.row_sum(n)


def ccc_step(row: Sequence, r: RootSequence, s: RootSequence, c_n) -> Fraction:
    """``C_{n+1} = (1 - s_{n+1}) C_n + sum_{k<=n} c_{n,k} r_{k+1}`` from row ``n``."""
    n = len(row) - 1
    rr = r.prefix(n + 1)
    s_next = s.prefix(n + 1)[n]
    return (1 - s_next) * Fraction(c_n) + sum((Fraction(c) * rr[k] for k, c in enumerate(row)), Fraction(0))


def _check_basis(basis, n_max, what, monic):
    if len(basis) <= n_max:
        raise InsufficientPrefixError(f"{what} has {len(basis)} polynomials, {n_max + 1} needed")
    for i in range(n_max + 1):
        if basis[i].degree != i:
            raise NotUnitriangularError(f"{what}[{i}] has degree {basis[i].degree}")
        if monic and not basis[i].is_monic():
            raise NotUnitriangularError(f"{what}[{i}] is not monic")


def connection_oracle(p_basis: Sequence[Polynomial], q_basis: Sequence[Polynomial],
                      n_max: int) -> ConnectionTable:
    """Solve ``p_n = sum_k c_{n,k} q_k`` by peeling off leading terms."""
    _check_basis(p_basis, n_max, "p basis", monic=False)
    _check_basis(q_basis, n_max, "q basis", monic=True)
    rows = []
    for n in range(n_max + 1):
        rem = p_basis[n]
        row = [Fraction(0)] * (n + 1)
        for k in range(n, -1, -1):
            c = rem.coeff(k)
            row[k] = c
            if c:
                rem = rem - q_basis[k] * c
        if rem.coeffs:
            raise NotUnitriangularError(f"residual {rem} after expanding p_{n}")
        rows.append(tuple(row))
    return ConnectionTable(tuple(rows))


def invert_unitriangular(rows: Sequence[Sequence]) -> list[list[Fraction]]:
    """Inverse of a lower unitriangular table by forward substitution."""
    n = len(rows)
    for i in range(n):
        if Fraction(rows[i][i]) != 1:
            raise NotUnitriangularError(f"diagonal entry ({i},{i}) is {rows[i][i]}")
    inv = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        inv[i][i] = Fraction(1)
        for j in range(i - 1, -1, -1):
            acc = Fraction(0)
            for m in range(j, i):
                acc += Fraction(rows[i][m]) * inv[m][j]
            inv[i][j] = -acc
    return inv


def basis_from_connection(table: ConnectionTable) -> list[Polynomial]:
    """Recover ``B_0, ..., B_N`` from ``x^n = sum_k c_{n,k} B_k``."""
    inv = invert_unitriangular(table.rows)
    return [Polynomial(inv[k][: k + 1]) for k in range(len(inv))]


def table_from_function(f: Callable[[int, int], object], n_max: int) -> ConnectionTable:
    return ConnectionTable(
        tuple(tuple(Fraction(f(n, k)) for k in range(n + 1)) for n in range(n_max + 1))
    )


# classical bases

def monomials(n_max: int) -> list[Polynomial]:
    return [Polynomial.monomial(n) for n in range(n_max + 1)]


def falling_factorials(n_max: int) -> list[Polynomial]:
    return [Polynomial.from_roots(range(n)) for n in range(n_max + 1)]


def rising_factorials(n_max: int) -> list[Polynomial]:
    return [Polynomial.from_roots(-j for j in range(n)) for n in range(n_max + 1)]


def gaussian_polys(q: int, n_max: int) -> list[Polynomial]:
    """``Phi_k(x) = (x - 1)(x - q)...(x - q^(k-1))``."""
    return [Polynomial.from_roots(q**s for s in range(k)) for k in range(n_max + 1)]


def h_polys(q: int, n_max: int) -> list[Polynomial]:
    """``H_k(x) = (x +_q 1)^k = sum_l binom(k, l)_q x^l``."""
    seq = FSequence.gaussian(q)
    return [Polynomial(fnomial(seq, k, l) for l in range(k + 1)) for k in range(n_max + 1)]


def gamma_polys(q: int, n_max: int) -> list[Polynomial]:
    """``Gamma_k(x) = sum_l binom(k, l)_q (-1)^(k-l) x^l``."""
    seq = FSequence.gaussian(q)
    return [Polynomial(fnomial(seq, k, l) * (-1) ** (k - l) for l in range(k + 1))
            for k in range(n_max + 1)]


# Stirling and Bell numbers

def stirling2_table(n_max: int) -> list[list[int]]:
    t = [[1]]
    for n in range(1, n_max + 1):
        prev = t[-1]
        row = [0] * (n + 1)
        for k in range(1, n + 1):
            row[k] = (k * prev[k] if k < n else 0) + prev[k - 1]
        t.append(row)
    return t


def stirling1_unsigned_table(n_max: int) -> list[list[int]]:
    t = [[1]]
    for n in range(1, n_max + 1):
        prev = t[-1]
        row = [0] * (n + 1)
        for k in range(1, n + 1):
            row[k] = ((n - 1) * prev[k] if k < n else 0) + prev[k - 1]
        t.append(row)
    return t


def _triangle_entry(table_fn, n, k):
    if n < 0:
        raise InvalidParameterError(f"negative index {n}")
    if k < 0 or k > n:
        return 0
    return table_fn(n)[n][k]


def stirling2(n: int, k: int) -> int:
    """Set partitions of an n-set into k blocks."""
    return _triangle_entry(stirling2_table, n, k)


def stirling1_unsigned(n: int, k: int) -> int:
    """Permutations of n letters with k cycles."""
    return _triangle_entry(stirling1_unsigned_table, n, k)


def bell(n: int) -> int:
    if n < 0:
        raise InvalidParameterError(f"negative index {n}")
    return sum(stirling2_table(n)[n])


def bell_identity_check(n: int) -> bool:
    """``sum_k binom(n,k) B_k == B_n + sum_{k>=1} S(n,k) k``, exactly."""
    lhs = sum(comb(n, k) * bell(k) for k in range(n + 1))
    row = stirling2_table(n)[n]
    rhs = bell(n) + sum(row[k] * k for k in range(1, n + 1))
    return lhs == rhs


def solve_root_sequence(target: Sequence, s: RootSequence) -> RootSequence:
    """Roots ``[r]`` whose Lah table against ``[s]`` has row sums ``target``.

    Works greedily through the ccc recurrence: in the step to ``C_{n+1}`` the
    unknown ``r_{n+1}`` is multiplied by ``c_{n,n} = 1``.
    """
    target = [Fraction(c) for c in target]
    if not target or target[0] != 1:
        raise InvalidParameterError("target must start with C_0 = 1")
    n_max = len(target) - 1
    ss = s.prefix(n_max)
    roots: list[Fraction] = []
    row: tuple[Fraction, ...] = (Fraction(1),)
    for n in range(n_max):
        known = sum((row[k] * roots[k] for k in range(n)), Fraction(0))
        r_next = (target[n + 1] - (1 - ss[n]) * target[n] - known) / row[n]
        roots.append(r_next)
        row = tuple(
            (row[k - 1] if k >= 1 else 0) + ((roots[k] - ss[n]) * row[k] if k <= n else 0)
            for k in range(n + 2)
        )
        row = tuple(Fraction(c) for c in row)
    return RootSequence(tuple(roots), name="solved")


def fibonacci_target(n_max: int) -> list[int]:
    """``C_0 = 1`` then ``C_n = F_n`` for ``1 <= n <= n_max``."""
    fib = FSequence.fibonacci()
    return [1] + [fib.term(n) for n in range(1, n_max + 1)]


def lucas_numbers(n_max: int) -> list[int]:
    """``L_0 = 2, L_1 = 1, L_n = L_{n-1} + L_{n-2}``."""
    out = [2, 1]
    while len(out) <= n_max:
        out.append(out[-1] + out[-2])
    return out[: n_max + 1]


def clue_examples_report(n_max: int = 12) -> tuple[list[str], bool]:
    """Audit the Fibonacci and Lucas root-sequence pairs as printed.

    Returns report lines and whether the canonical checks hold.  The
    Fibonacci pair ``[r] = [s] = [0]`` is reported, not failed: under the
    recurrence it gives ``C_n = 1``.
    """
    lines = []
    ok = True

    printed = lah_table(zero_roots(), zero_roots(), n_max)
    got = [ccc(printed, n) for n in range(1, n_max + 1)]
    fib = fibonacci_target(n_max)[1:]
    lines.append("fibonacci pair as printed: [r] = [0], [s] = [0]")
    lines.append("  C_1..C_%d = %s" % (n_max, ",".join(map(str, got))))
    lines.append("  F_1..F_%d = %s" % (n_max, ",".join(map(str, fib))))
    agree = [g == f for g, f in zip(got, fib)]
    status = "MATCH" if all(agree) else f"DISCREPANCY ({agree.count(False)} of {n_max} differ)"
    lines.append(f"  status: {status}")

    solved = solve_root_sequence(fibonacci_target(n_max), zero_roots())
    forward = lah_table(solved, zero_roots(), n_max)
    fwd = [ccc(forward, n) for n in range(1, n_max + 1)]
    solved_ok = fwd == [Fraction(f) for f in fib]
    ok &= solved_ok
    lines.append("solved roots for C_n = F_n, [s] = [0]:")
    lines.append("  [r] = " + ",".join(map(str, solved.terms)))
    lines.append(f"  forward check C_1..C_{n_max}: {'PASS' if solved_ok else 'FAIL'}")

    luc_table = lah_table(lucas_roots(), zero_roots(), n_max)
    luc = [ccc(luc_table, n) for n in range(1, n_max + 1)]
    expected = lucas_numbers(n_max)[1:]
    luc_ok = luc == [Fraction(v) for v in expected]
    ok &= luc_ok
    lines.append("lucas pair: r_1 = 0, r_2 = 2, r_k = 1 - r_{k-1}^2, [s] = [0]")
    lines.append("  C_1..C_%d = %s" % (n_max, ",".join(map(str, luc))))
    lines.append(f"  status: {'PASS' if luc_ok else 'FAIL'}")
    return lines, ok
