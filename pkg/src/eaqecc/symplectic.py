"""Linear codes in F_q^{2n} under the symplectic inner product.

A vector (a|b) concatenates two length-n halves.  The symplectic product
of (a|b) and (c|d) is <a,d> - <b,c> (Euclidean products of the crossed
halves), and the symplectic weight of (a|b) counts the positions i with
(a_i, b_i) != (0, 0).  The dual of a code collects all vectors with zero
symplectic product against it; codes are stored in canonical reduced row
echelon form, so code equality is plain basis-matrix equality.

Parameter bookkeeping follows the stabilizer picture.  A code C of block
length n consumes c = (dim C - dim(C n dual(C))) / 2 preshared entangled
pairs and encodes k = c + n - dim C logical qudits.  Its distance d is
the minimum symplectic weight of the dual outside C (outside {0} when
c = 0), while the pure distance is the minimum over the dual minus the
zero vector.  Both are reported, since they can differ when c > 0.

Weight minima are found by exhaustive codeword enumeration, guarded by a
codeword cap (default 2^22) so that accidental large runs fail fast with
a CapExceededError instead of hanging.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass

import numpy as np

from .errors import CapExceededError
from .field import GF
from .matrix import GfMatrix, row_space_intersect

_DTYPE = np.int16

DEFAULT_CAP = 1 << 22
_CHUNK_BITS = 14


def symplectic_product(field: GF, x, y) -> int:
    """Symplectic inner product <(a|b),(c|d)> = <a,d> - <b,c>."""
    xv = np.asarray(x, dtype=_DTYPE)
    yv = np.asarray(y, dtype=_DTYPE)
    if xv.ndim != 1 or yv.ndim != 1 or xv.size != yv.size or xv.size % 2:
        raise ValueError("vectors must be 1-D with the same even length")
    for v in (xv, yv):
        if v.size and (v.min() < 0 or v.max() >= field.q):
            raise ValueError(f"vector entries must be codes in 0..{field.q - 1}")
    n = xv.size // 2
    ad = field.vdot(xv[:n], yv[n:])
    bc = field.vdot(xv[n:], yv[:n])
    return field.sub(ad, bc)


def symplectic_weight(x) -> int:
    """Number of positions i where the pair (a_i, b_i) is nonzero."""
    xv = np.asarray(x, dtype=_DTYPE)
    if xv.ndim != 1 or xv.size % 2:
        raise ValueError("vector must be 1-D with even length")
    n = xv.size // 2
    return int(np.count_nonzero((xv[:n] != 0) | (xv[n:] != 0)))


def symplectic_weights(block: np.ndarray, n: int) -> np.ndarray:
    """Symplectic weights of each row of a (N, 2n) code array."""
    return np.count_nonzero((block[:, :n] != 0) | (block[:, n:] != 0), axis=1)


def symplectic_form_matrix(field: GF, n: int) -> GfMatrix:
    """The 2n x 2n block matrix [[0, I], [-I, 0]] defining the form."""
    arr = np.zeros((2 * n, 2 * n), dtype=_DTYPE)
    idx = np.arange(n)
    arr[idx, n + idx] = 1
    arr[n + idx, idx] = field.neg(1)
    return GfMatrix(field, arr)


@dataclass(frozen=True)
class CodeParams:
    """Parameter tuple of a stabilizer (entanglement-assisted) code.

    `d` and `pure_d` are None when the defining minimum ranges over an
    empty set, or when a report skips weight enumeration entirely.
    """

    q: int
    n: int
    k: int
    d: int | None
    c: int
    pure_d: int | None
    is_stabilizer_qecc: bool

    def display(self) -> str:
        d = "?" if self.d is None else str(self.d)
        return f"[[{self.n},{self.k},{d};{self.c}]]_{self.q}"

    def to_dict(self) -> dict:
        return {
            "q": self.q, "n": self.n, "k": self.k, "d": self.d, "c": self.c,
            "pure_d": self.pure_d,
            "is_stabilizer_qecc": self.is_stabilizer_qecc,
            "display": self.display(),
        }

    @classmethod
    def from_dict(cls, data: dict) -> "CodeParams":
        return cls(q=data["q"], n=data["n"], k=data["k"], d=data["d"],
                   c=data["c"], pure_d=data["pure_d"],
                   is_stabilizer_qecc=data["is_stabilizer_qecc"])


class LinearCode:
    """A linear code in F_q^{2n}, held as a canonical RREF basis.

    Instances are immutable; derived objects (the dual, weight minima,
    parameters) are cached on first use.
    """

    __slots__ = ("field", "n", "basis", "_dual", "_min_sw", "_min_hw", "_params")

    def __init__(self, field: GF, n: int, rows=None) -> None:
        if n < 0:
            raise ValueError("block length n must be nonnegative")
        if rows is None:
            mat = GfMatrix.zeros(field, 0, 2 * n)
        elif isinstance(rows, GfMatrix):
            if rows.field != field:
                raise ValueError("basis matrix belongs to a different field")
            mat = rows
        else:
            data = [list(r) for r in rows]
            mat = (GfMatrix(field, data) if data
                   else GfMatrix.zeros(field, 0, 2 * n))
        if mat.cols != 2 * n:
            raise ValueError(f"basis needs 2n = {2 * n} columns, got {mat.cols}")
        self.field = field
        self.n = n
        self.basis = mat.canonical()
        self._dual: LinearCode | None = None
        self._min_sw: int | None | bool = False  # False marks "not computed"
        self._min_hw: int | None | bool = False
        self._params: CodeParams | None = None

    @property
    def dim(self) -> int:
        return self.basis.rows

    def codeword_count(self) -> int:
        return self.field.q ** self.dim

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LinearCode):
            return NotImplemented
        return self.field == other.field and self.n == other.n and self.basis == other.basis

    def __repr__(self) -> str:
        return f"LinearCode({self.field!r}, n={self.n}, dim={self.dim})"

    # ------------------------------------------------------------------
    def contains(self, vector) -> bool:
        v = np.asarray(vector, dtype=_DTYPE)
        if v.ndim != 1 or v.size != 2 * self.n:
            raise ValueError(f"vector must have length {2 * self.n}")
        return bool(self.basis.row_space_contains(v)[0])

    def contains_code(self, other: "LinearCode") -> bool:
        if other.field != self.field or other.n != self.n:
            raise ValueError("codes live in different spaces")
        if other.dim == 0:
            return True
        return bool(self.basis.row_space_contains(other.basis.array).all())

    def dual(self) -> "LinearCode":
        """The symplectic dual; dim dual = 2n - dim."""
        if self._dual is None:
            lam = symplectic_form_matrix(self.field, self.n)
            kernel = (self.basis @ lam).nullspace()
            self._dual = LinearCode(self.field, self.n, kernel)
        return self._dual

    def is_self_orthogonal(self) -> bool:
        """True iff all pairs of basis rows have symplectic product zero."""
        lam = symplectic_form_matrix(self.field, self.n)
        gram = (self.basis @ lam) @ self.basis.transpose()
        return gram.is_zero()

    # ------------------------------------------------------------------
    # exhaustive enumeration
    # ------------------------------------------------------------------
    def _codeword_chunks(self):
        """Yield all q^dim codewords as (N, 2n) blocks of bounded size."""
        f = self.field
        arr = self.basis.array
        r, cols = arr.shape
        if r == 0:
            yield np.zeros((1, cols), dtype=_DTYPE)
            return
        per_chunk = max(1, int(_CHUNK_BITS / math.log2(f.q)))
        low = min(r, per_chunk)
        words = np.zeros((1, cols), dtype=_DTYPE)
        for i in range(low):
            variants = f.mul_table[:, arr[i]]  # all q scalar multiples of row i
            words = f.add_table[words[:, None, :], variants[None, :, :]]
            words = words.reshape(-1, cols)
        if low == r:
            yield words
            return
        high = arr[low:]
        for coeffs in itertools.product(range(f.q), repeat=r - low):
            offset = np.zeros(cols, dtype=_DTYPE)
            for coef, row in zip(coeffs, high):
                if coef:
                    offset = f.add_table[offset, f.mul_table[coef][row]]
            yield f.add_table[words, offset[None, :]]

    def _min_weight(self, weight_fn, exclude: "LinearCode | None", cap: int):
        required = self.codeword_count()
        if required > cap:
            raise CapExceededError(required, cap)
        if exclude is not None:
            if exclude.field != self.field or exclude.n != self.n:
                raise ValueError("exclude code lives in a different space")
            if not self.contains_code(exclude):
                raise ValueError("exclude must be a subcode of the enumerated code")
        best: int | None = None
        for block in self._codeword_chunks():
            weights = weight_fn(block)
            if exclude is None:
                mask = weights > 0
            else:
                mask = ~exclude.basis.row_space_contains(block)
            if mask.any():
                local = int(weights[mask].min())
                if best is None or local < best:
                    best = local
                if best <= 1:
                    break  # cannot get lighter than a single position
        return best

    def min_symplectic_weight(self, exclude: "LinearCode | None" = None,
                              cap: int = DEFAULT_CAP) -> int | None:
        """Minimum symplectic weight over this code minus `exclude`.

        `exclude` defaults to the zero code, so the zero vector is always
        skipped; it must be a subcode of this code.  Returns None when
        the enumeration domain is empty.  Raises CapExceededError when
        q^dim exceeds `cap`.
        """
        if exclude is None and self._min_sw is not False:
            return self._min_sw
        result = self._min_weight(
            lambda block: symplectic_weights(block, self.n), exclude, cap)
        if exclude is None:
            self._min_sw = result
        return result

    def min_hamming_weight(self, exclude: "LinearCode | None" = None,
                           cap: int = DEFAULT_CAP) -> int | None:
        """Minimum Hamming weight, viewing codewords as plain length-2n vectors."""
        if exclude is None and self._min_hw is not False:
            return self._min_hw
        result = self._min_weight(
            lambda block: np.count_nonzero(block, axis=1), exclude, cap)
        if exclude is None:
            self._min_hw = result
        return result

    # ------------------------------------------------------------------
    def params(self, cap: int = DEFAULT_CAP) -> CodeParams:
        """Full parameter tuple, including both distance flavors.

        Enumerates the dual (and, when c > 0, the dual minus this code's
        intersection with it), so it can raise CapExceededError.
        """
        if self._params is not None:
            return self._params
        structural = self.structural_params()
        dual = self.dual()
        pure_d = dual.min_symplectic_weight(cap=cap)
        if structural.c == 0:
            d = pure_d
        else:
            meet = LinearCode(self.field, self.n,
                              row_space_intersect(self.basis, dual.basis))
            d = dual.min_symplectic_weight(exclude=meet, cap=cap)
        self._params = CodeParams(
            q=structural.q, n=structural.n, k=structural.k, d=d,
            c=structural.c, pure_d=pure_d,
            is_stabilizer_qecc=structural.is_stabilizer_qecc)
        return self._params

    def structural_params(self) -> CodeParams:
        """Parameters that need no weight enumeration; distances stay None.

        Used by lemma reports, where the checks are purely dimensional and
        a full distance computation could blow the enumeration cap.
        """
        dual = self.dual()
        meet = row_space_intersect(self.basis, dual.basis)
        excess = self.dim - meet.rows
        assert excess % 2 == 0  # the form is nondegenerate modulo the radical
        c = excess // 2
        k = c + self.n - self.dim
        return CodeParams(q=self.field.q, n=self.n, k=int(k), d=None, c=int(c),
                          pure_d=None,
                          is_stabilizer_qecc=(c == 0 and self.is_self_orthogonal()))


def random_self_orthogonal(field: GF, n: int, target_dim: int,
                           seed: int = 0) -> LinearCode:
    """Deterministic random code C with C inside dual(C) and the given dim.

    Grows the code one generator at a time: each step draws a uniformly
    random vector of the current span's symplectic dual (Mersenne Twister
    seeded with `seed`) and keeps it once it falls outside the span.  The
    dual is strictly larger than the span while dim < n, so this always
    terminates.
    """
    if not 0 <= target_dim <= n:
        raise ValueError(f"target_dim must be in 0..{n}, got {target_dim}")
    rng = random.Random(seed)
    code = LinearCode(field, n)
    while code.dim < target_dim:
        dual = code.dual()
        while True:
            coeffs = [[rng.randrange(field.q) for _ in range(dual.dim)]]
            vec = (GfMatrix(field, coeffs) @ dual.basis).array[0]
            if vec.any() and not code.contains(vec):
                break
        stacked = np.vstack([code.basis.array, vec[None, :]])
        code = LinearCode(field, n, GfMatrix(field, stacked))
    return code
