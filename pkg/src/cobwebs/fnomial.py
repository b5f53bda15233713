"""F-factorials, F-nomial coefficients and the F-umbral operations built on them."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from .errors import FormMismatchError, InadmissibleError, InvalidParameterError
from .polynomial import Polynomial
from .seq import FSequence

FORMS = ("form-A", "form-B", "q-form")


def f_factorial(seq: FSequence, n: int) -> int:
    """``n_F! = 1_F * 2_F * ... * n_F``; ``0_F! = 1``."""
    if n < 0:
        raise InvalidParameterError(f"negative index {n}")
    out = 1
    for j in range(1, n + 1):
        out *= seq.term(j)
    return out


def f_falling(seq: FSequence, n: int, k: int) -> int:
    """``n_F (n-1)_F ... (n-k+1)_F``; the empty product is 1."""
    if k < 0 or k > n:
        raise InvalidParameterError(f"falling F-factorial needs 0 <= k <= n, got n={n}, k={k}")
    out = 1
    for j in range(n - k + 1, n + 1):
        out *= seq.term(j)
    return out


def fnomial(seq: FSequence, n: int, k: int) -> int:
    """Exact ``binom(n, k)_F``; zero outside ``0 <= k <= n``.

    Raises :class:`InadmissibleError` when the quotient is not an integer.
    """
    if k < 0 or n < 0 or k > n:
        return 0
    j = min(k, n - k)
    num = f_falling(seq, n, j)
    den = f_factorial(seq, j)
    q, r = divmod(num, den)
    if r:
        raise InadmissibleError(n, k, num, den)
    return q


@dataclass(frozen=True)
class FNomialTable:
    """Triangle ``rows[n][k] = binom(n, k)_F`` for ``0 <= k <= n <= n_max``."""

    seq: FSequence
    rows: tuple[tuple[int, ...], ...]

    @property
    def n_max(self) -> int:
        return len(self.rows) - 1

    def __getitem__(self, nk):
        n, k = nk
        if k < 0 or k > n:
            return 0
        return self.rows[n][k]

    def row_sums(self) -> list[int]:
        return [sum(r) for r in self.rows]

    def to_csv(self) -> str:
        return "".join(",".join(map(str, r)) + "\n" for r in self.rows)


def fnomial_table(seq: FSequence, n_max: int) -> FNomialTable:
    """Triangle from the falling-factorial quotient."""
    return FNomialTable(
        seq, tuple(tuple(fnomial(seq, n, k) for k in range(n + 1)) for n in range(n_max + 1))
    )


def _fib_signed(seq: FSequence, j: int) -> int:
    # F_{-1} = F_1 - F_0 = 1: needed by form-B at k = n + 1
    return 1 if j == -1 else seq.term(j)


def fnomial_recurrence(seq: FSequence, n_max: int, form: str) -> FNomialTable:
    """Build the triangle from a two-term recurrence alone.

    ``form-A``: ``F_{k-1} B(n,k) + F_{n-k+2} B(n,k-1)`` (Fibonacci)
    ``form-B``: ``F_{k+1} B(n,k) + F_{n-k} B(n,k-1)``   (Fibonacci)
    ``q-form``: ``q^k B(n,k) + B(n,k-1)``                (Gaussian)
    """
    if form not in FORMS:
        raise FormMismatchError(f"unknown recurrence form {form!r}")
    if form in ("form-A", "form-B") and seq.kind != "fibonacci":
        raise FormMismatchError(f"{form} applies to fibonacci, not {seq}")
    if form == "q-form" and seq.kind != "gaussian":
        raise FormMismatchError(f"q-form applies to gaussian:<q>, not {seq}")

    def at(row, k):
        return row[k] if 0 <= k < len(row) else 0

    rows = [(1,)]
    for n in range(n_max):
        prev = rows[-1]
        new = [1]
        for k in range(1, n + 2):
            if form == "form-A":
                v = (_fib_signed(seq, k - 1) * at(prev, k)
                     + _fib_signed(seq, n - k + 2) * at(prev, k - 1))
            elif form == "form-B":
                v = (_fib_signed(seq, k + 1) * at(prev, k)
                     + _fib_signed(seq, n - k) * at(prev, k - 1))
            else:
                v = seq.param**k * at(prev, k) + at(prev, k - 1)
            new.append(v)
        rows.append(tuple(new))
    return FNomialTable(seq, tuple(rows))


def ccc_rowsum(seq: FSequence, n: int) -> int:
    """``C_n = sum_k binom(n, k)_F``."""
    return sum(fnomial(seq, n, k) for k in range(n + 1))


def f_shift_power(seq: FSequence, a, n: int) -> Polynomial:
    """``(x +_F a)^n = sum_k binom(n, k)_F a^k x^(n-k)``."""
    a = Fraction(a)
    coeffs = [Fraction(0)] * (n + 1)
    for k in range(n + 1):
        coeffs[n - k] = fnomial(seq, n, k) * a**k
    return Polynomial(coeffs)


def f_derivative(seq: FSequence, p: Polynomial) -> Polynomial:
    """Linear map ``x^n -> n_F x^(n-1)``."""
    return Polynomial(seq.term(n) * c for n, c in enumerate(p.coeffs) if n >= 1)


class Admissibility(NamedTuple):
    admissible: bool
    failure: tuple[int, int] | None = None

    def __bool__(self):
        return self.admissible


def is_admissible(seq: FSequence, n_max: int) -> Admissibility:
    """Check every ``binom(n, k)_F`` with ``n <= n_max`` for integrality.

    The first failure in (n, k) lexicographic order is reported.
    """
    for n in range(n_max + 1):
        for k in range(n + 1):
            num = f_falling(seq, n, k)
            if num % f_factorial(seq, k):
                return Admissibility(False, (n, k))
    return Admissibility(True)
