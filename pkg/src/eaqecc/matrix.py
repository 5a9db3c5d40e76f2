"""Dense linear algebra over GF(q).

Row reduction, rank, nullspaces, and row-space sums and intersections on
matrices of integer element codes.  A matrix always carries its column
count, so zero-row matrices keep a well-defined ambient dimension.  The
canonical form of a row space (reduced row echelon form with zero rows
dropped and pivot columns ascending) doubles as a subspace identity: two
row spaces are equal iff their canonical matrices are entrywise equal.
"""

from __future__ import annotations

from typing import Sequence

import numpy as np

from .field import GF

_DTYPE = np.int16


class GfMatrix:
    """Immutable dense matrix over a GF instance."""

    __slots__ = ("field", "array", "_rref")

    def __init__(self, field: GF, data) -> None:
        arr = np.array(data, dtype=_DTYPE)
        if arr.ndim != 2:
            raise ValueError(f"matrix data must be 2-D, got shape {arr.shape}")
        if arr.size and (arr.min() < 0 or arr.max() >= field.q):
            raise ValueError(f"matrix entries must be codes in 0..{field.q - 1}")
        arr.setflags(write=False)
        self.field = field
        self.array = arr
        self._rref: tuple[GfMatrix, tuple[int, ...]] | None = None

    @classmethod
    def zeros(cls, field: GF, rows: int, cols: int) -> "GfMatrix":
        return cls(field, np.zeros((rows, cols), dtype=_DTYPE))

    @classmethod
    def identity(cls, field: GF, n: int) -> "GfMatrix":
        return cls(field, np.eye(n, dtype=_DTYPE))

    @property
    def rows(self) -> int:
        return self.array.shape[0]

    @property
    def cols(self) -> int:
        return self.array.shape[1]

    def is_zero(self) -> bool:
        return not self.array.any()

    def row(self, i: int) -> np.ndarray:
        return self.array[i]

    def transpose(self) -> "GfMatrix":
        return GfMatrix(self.field, self.array.T.copy())

    def delete_columns(self, cols: Sequence[int]) -> "GfMatrix":
        return GfMatrix(self.field, np.delete(self.array, list(cols), axis=1))

    # ------------------------------------------------------------------
    def rref(self) -> tuple["GfMatrix", tuple[int, ...]]:
        """Reduced row echelon form with zero rows dropped, plus pivots.

        The result is the unique canonical representative of the row
        space; the pivot columns come back sorted ascending (0-indexed).
        """
        if self._rref is not None:
            return self._rref
        f = self.field
        a = self.array.copy()
        n_rows, n_cols = a.shape
        pivots: list[int] = []
        r = 0
        for c in range(n_cols):
            if r == n_rows:
                break
            nz = np.flatnonzero(a[r:, c])
            if nz.size == 0:
                continue
            p = r + int(nz[0])
            if p != r:
                a[[r, p]] = a[[p, r]]
            pivot = int(a[r, c])
            if pivot != 1:
                a[r] = f.mul_table[int(f.inv_table[pivot])][a[r]]
            factors = a[:, c].copy()
            factors[r] = 0
            if factors.any():
                a = f.sub_table[a, f.mul_table[factors[:, None], a[r][None, :]]]
            pivots.append(c)
            r += 1
        reduced = GfMatrix(f, a[:r]) if r else GfMatrix.zeros(f, 0, n_cols)
        result = (reduced, tuple(pivots))
        reduced._rref = result  # rref is idempotent
        self._rref = result
        return result

    def canonical(self) -> "GfMatrix":
        return self.rref()[0]

    def rank(self) -> int:
        return self.rref()[0].rows

    def nullspace(self) -> "GfMatrix":
        """Canonical basis of {x : self @ x^T = 0}; cols - rank rows."""
        f = self.field
        reduced, pivots = self.rref()
        free = [c for c in range(self.cols) if c not in set(pivots)]
        if not free:
            return GfMatrix.zeros(f, 0, self.cols)
        basis = np.zeros((len(free), self.cols), dtype=_DTYPE)
        for idx, fc in enumerate(free):
            basis[idx, fc] = 1
            for k, pc in enumerate(pivots):
                basis[idx, pc] = f.neg_table[reduced.array[k, fc]]
        return GfMatrix(f, basis).canonical()

    def __matmul__(self, other: "GfMatrix") -> "GfMatrix":
        if not isinstance(other, GfMatrix):
            return NotImplemented
        _require_same_field(self, other)
        if self.cols != other.rows:
            raise ValueError(
                f"shape mismatch for product: {self.rows}x{self.cols} @ "
                f"{other.rows}x{other.cols}")
        if self.rows == 0 or other.cols == 0 or self.cols == 0:
            return GfMatrix.zeros(self.field, self.rows, other.cols)
        f = self.field
        prods = f.mul_table[self.array[:, :, None], other.array[None, :, :]]
        return GfMatrix(f, f.vsum(prods, axis=1))

    def row_space_contains(self, vectors) -> np.ndarray:
        """Boolean mask: which of the given row vectors lie in the row space."""
        f = self.field
        x = np.array(vectors, dtype=_DTYPE)
        single = x.ndim == 1
        if single:
            x = x[None, :]
        if x.shape[1] != self.cols:
            raise ValueError(f"vectors must have {self.cols} columns")
        reduced, pivots = self.rref()
        for k, pc in enumerate(pivots):
            coef = x[:, pc]
            if coef.any():
                x = f.sub_table[x, f.mul_table[coef[:, None],
                                               reduced.array[k][None, :]]]
        mask = ~x.any(axis=1)
        return mask if not single else mask[:1]

    # ------------------------------------------------------------------
    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GfMatrix):
            return NotImplemented
        return (self.field == other.field
                and self.array.shape == other.array.shape
                and bool(np.array_equal(self.array, other.array)))

    def __repr__(self) -> str:
        return f"GfMatrix({self.field!r}, {self.array.tolist()!r})"


def _require_same_field(a: GfMatrix, b: GfMatrix) -> None:
    if a.field != b.field:
        raise ValueError("matrices belong to different fields")


def _require_compatible(a: GfMatrix, b: GfMatrix) -> None:
    _require_same_field(a, b)
    if a.cols != b.cols:
        raise ValueError(f"column counts differ: {a.cols} vs {b.cols}")


def row_space_sum(a: GfMatrix, b: GfMatrix) -> GfMatrix:
    """Canonical basis of rowspace(a) + rowspace(b)."""
    _require_compatible(a, b)
    stacked = np.vstack([a.array, b.array])
    return GfMatrix(a.field, stacked).canonical()


def row_space_intersect(a: GfMatrix, b: GfMatrix) -> GfMatrix:
    """Canonical basis of rowspace(a) n rowspace(b).

    Uses the Zassenhaus block construction: reduce [[A A], [B 0]]; the
    rows whose left block vanished carry the intersection in their right
    block.  Cross-checked elsewhere against the dimension identity
    dim(U+V) + dim(U n V) = dim U + dim V.
    """
    _require_compatible(a, b)
    f, nc = a.field, a.cols
    if a.rows == 0 or b.rows == 0:
        return GfMatrix.zeros(f, 0, nc)
    top = np.hstack([a.array, a.array])
    bottom = np.hstack([b.array, np.zeros((b.rows, nc), dtype=_DTYPE)])
    reduced = GfMatrix(f, np.vstack([top, bottom])).canonical()
    mask = ~reduced.array[:, :nc].any(axis=1)
    return GfMatrix(f, reduced.array[mask, nc:]).canonical()
