"""Text and bitmap renderings of 0/1 incidence matrices (the La Scala picture)."""
from __future__ import annotations

import numpy as np

from .errors import InvalidParameterError

STYLES = ("ascii", "pgm", "csv")


def _as_boolean(zeta) -> np.ndarray:
    z = np.asarray(zeta)
    if z.ndim != 2 or z.shape[0] != z.shape[1]:
        raise InvalidParameterError(f"square matrix expected, got shape {z.shape}")
    if not np.isin(z, (0, 1)).all():
        raise InvalidParameterError("matrix has entries outside {0, 1}; use csv for raw output")
    return z.astype(np.uint8)


def render_ascii(zeta, align: str = "right") -> str:
    """Upper triangle only: ``1`` on the diagonal, ``-`` for a one, ``0`` for a zero.

    Cells are separated by one space.  With ``align="right"`` the cells below
    the diagonal are blank, so rows line up at the right edge as a staircase;
    ``align="left"`` drops them.  A nonzero below the diagonal is drawn as
    ``*``.
    """
    if align not in ("right", "left"):
        raise InvalidParameterError(f"align must be 'right' or 'left', got {align!r}")
    z = _as_boolean(zeta)
    n = z.shape[0]
    lines = []
    for i in range(n):
        below = ["*" if z[i, j] else " " for j in range(i)]
        if align == "left":
            below = [c for c in below if c != " "]
        cells = below + ["1" if z[i, i] else "0"]
        cells += ["-" if z[i, j] else "0" for j in range(i + 1, n)]
        lines.append(" ".join(cells))
    return "\n".join(lines) + "\n"


def render_pgm(zeta) -> str:
    """Plain ``P1`` bitmap: width = height = V, ``1`` (black) where related."""
    z = _as_boolean(zeta)
    n = z.shape[0]
    rows = [" ".join(str(int(v)) for v in row) for row in z]
    return f"P1\n{n} {n}\n" + "\n".join(rows) + "\n"


def render_csv(matrix) -> str:
    """Comma-separated rows; integer entries are written as-is."""
    m = np.asarray(matrix)
    return "".join(",".join(str(int(v)) for v in row) + "\n" for row in m)


def render_la_scala(zeta, style: str = "ascii", **kwargs) -> str:
    if style == "ascii":
        return render_ascii(zeta, **kwargs)
    if style == "pgm":
        return render_pgm(zeta)
    if style == "csv":
        return render_csv(zeta)
    raise InvalidParameterError(f"unknown style {style!r}; expected one of {STYLES}")


def zero_runs_after_diagonal(ascii_text: str) -> list[int]:
    """For each row of :func:`render_ascii` output, the count of ``0`` cells
    between the diagonal ``1`` and the first ``-``."""
    runs = []
    for line in ascii_text.splitlines():
        cells = line.split()
        cells = [c for c in cells if c != "*"]
        run = 0
        for c in cells[1:]:
            if c != "0":
                break
            run += 1
        runs.append(run)
    return runs
