"""Direct solvers for the almost-tridiagonal collocation systems.

Every linear system in this package is tridiagonal except for one extra
entry in the first row (column 2) and one in the last row (column n-3),
introduced by the boundary rows.  Each boundary row is used once to
eliminate the end unknown from its neighbouring interior row, the interior
block is swept with the standard forward-elimination / back-substitution
pass, and the end unknowns are recovered from the untouched boundary rows.
(Subtracting a multiple of an interior row from the boundary row instead
would cancel the boundary row's diagonal exactly whenever the two rows
share the symmetric (c, m, c) stencil, as they do for Dirichlet steps.)

A dense Gaussian-elimination routine with partial pivoting is kept
alongside as an independent cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

_PIVOT_FLOOR = 1e-13


class SingularSystemError(RuntimeError):
    """Raised when elimination meets a pivot too close to zero."""

    def __init__(self, row: int, pivot: float):
        self.row = row
        self.pivot = pivot
        super().__init__(f"elimination broke down at row {row} (pivot {pivot!r})")


@dataclass
class CornerTridiagonalSystem:
    """Tridiagonal system with corner entries at (0, 2) and (n-1, n-3).

    sub[i] sits at (i+1, i), diag[i] at (i, i), sup[i] at (i, i+1).
    """

    sub: np.ndarray
    diag: np.ndarray
    sup: np.ndarray
    corner_top: float
    corner_bottom: float
    rhs: np.ndarray

    def __post_init__(self) -> None:
        self.sub = np.asarray(self.sub, dtype=float)
        self.diag = np.asarray(self.diag, dtype=float)
        self.sup = np.asarray(self.sup, dtype=float)
        self.rhs = np.asarray(self.rhs, dtype=float)
        n = self.diag.size
        if n < 4:
            raise ValueError(f"system needs at least 4 rows, got {n}")
        if self.sub.size != n - 1 or self.sup.size != n - 1 or self.rhs.size != n:
            raise ValueError(
                "inconsistent band sizes: "
                f"diag {n}, sub {self.sub.size}, sup {self.sup.size}, rhs {self.rhs.size}"
            )
        for name, data in (
            ("sub", self.sub),
            ("diag", self.diag),
            ("sup", self.sup),
            ("rhs", self.rhs),
            ("corners", np.array([self.corner_top, self.corner_bottom])),
        ):
            if not np.isfinite(data).all():
                raise ValueError(f"non-finite entries in {name}")

    @property
    def n(self) -> int:
        return self.diag.size

    def dense(self) -> np.ndarray:
        """The full n-by-n matrix, for oracles and diagnostics."""
        n = self.n
        full = np.zeros((n, n))
        full[np.arange(n), np.arange(n)] = self.diag
        full[np.arange(1, n), np.arange(n - 1)] = self.sub
        full[np.arange(n - 1), np.arange(1, n)] = self.sup
        full[0, 2] += self.corner_top
        full[n - 1, n - 3] += self.corner_bottom
        return full


def solve(system: CornerTridiagonalSystem) -> np.ndarray:
    """Solve the corner-tridiagonal system; the input is left untouched."""
    n = system.n
    sub = system.sub.copy()
    diag = system.diag.copy()
    sup = system.sup.copy()
    rhs = system.rhs.copy()
    corner_top = system.corner_top
    corner_bottom = system.corner_bottom

    # row 0 (d0, sup[0], corner_top) eliminates the column-0 entry of row 1
    d0 = diag[0]
    if abs(d0) < _PIVOT_FLOOR:
        raise SingularSystemError(0, d0)
    factor = sub[0] / d0
    diag[1] -= factor * sup[0]
    sup[1] -= factor * corner_top
    rhs[1] -= factor * rhs[0]

    # row n-1 (corner_bottom, sub[n-2], dn) eliminates column n-1 of row n-2
    dn = diag[n - 1]
    if abs(dn) < _PIVOT_FLOOR:
        raise SingularSystemError(n - 1, dn)
    factor = sup[n - 2] / dn
    diag[n - 2] -= factor * sub[n - 2]
    sub[n - 3] -= factor * corner_bottom
    rhs[n - 2] -= factor * rhs[n - 1]

    # forward sweep over the interior block, rows/unknowns 1 .. n-2
    sup_ = np.empty(n - 3)
    rhs_ = np.empty(n - 2)
    pivot = diag[1]
    if abs(pivot) < _PIVOT_FLOOR:
        raise SingularSystemError(1, pivot)
    sup_[0] = sup[1] / pivot
    rhs_[0] = rhs[1] / pivot
    for i in range(2, n - 1):
        pivot = diag[i] - sub[i - 1] * sup_[i - 2]
        if abs(pivot) < _PIVOT_FLOOR:
            raise SingularSystemError(i, pivot)
        if i < n - 2:
            sup_[i - 1] = sup[i] / pivot
        rhs_[i - 1] = (rhs[i] - sub[i - 1] * rhs_[i - 2]) / pivot

    # back substitution through the interior, then the two boundary rows
    x = np.empty(n)
    x[n - 2] = rhs_[n - 3]
    for i in range(n - 3, 0, -1):
        x[i] = rhs_[i - 1] - sup_[i - 1] * x[i + 1]
    x[0] = (rhs[0] - sup[0] * x[1] - corner_top * x[2]) / d0
    x[n - 1] = (rhs[n - 1] - corner_bottom * x[n - 3] - sub[n - 2] * x[n - 2]) / dn
    return x


def dense_solve_oracle(matrix: np.ndarray, rhs: np.ndarray) -> np.ndarray:
    """Gaussian elimination with partial pivoting on a dense matrix.

    Deliberately independent of :func:`solve` so the two can be used to
    cross-check each other.
    """
    a = np.array(matrix, dtype=float, copy=True)
    b = np.array(rhs, dtype=float, copy=True)
    n = b.size
    if a.shape != (n, n):
        raise ValueError(f"matrix shape {a.shape} does not match rhs size {n}")
    for col in range(n):
        pivot_row = col + int(np.argmax(np.abs(a[col:, col])))
        if abs(a[pivot_row, col]) < _PIVOT_FLOOR:
            raise SingularSystemError(col, a[pivot_row, col])
        if pivot_row != col:
            a[[col, pivot_row]] = a[[pivot_row, col]]
            b[[col, pivot_row]] = b[[pivot_row, col]]
        factors = a[col + 1 :, col] / a[col, col]
        a[col + 1 :, col:] -= np.outer(factors, a[col, col:])
        b[col + 1 :] -= factors * b[col]
    x = np.empty(n)
    for row in range(n - 1, -1, -1):
        x[row] = (b[row] - a[row, row + 1 :] @ x[row + 1 :]) / a[row, row]
    return x
