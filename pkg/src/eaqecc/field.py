"""Exact arithmetic in GF(p^m) with elements stored as integer codes.

An element c0 + c1*x + ... + c_{m-1}*x^{m-1} of GF(p^m) is stored as the
integer c0 + c1*p + ... + c_{m-1}*p^{m-1} (little-endian base-p digits),
so codes run from 0 to q-1, with 0 the additive identity and 1 the
multiplicative identity.  Extension fields reduce polynomial products
modulo a monic irreducible polynomial of degree m; prime fields are plain
integers mod p.

Every field eagerly precomputes dense q x q numpy operation tables, which
the linear-algebra and enumeration layers apply to whole arrays at once
via fancy indexing.  This caps the supported order at q <= 256, which is
far beyond the scale where exhaustive weight enumeration stays practical
anyway.

Built-in irreducible polynomials (little-endian coefficient tuples):

    GF(4): x^2 + x + 1   -> (1, 1, 1)
    GF(8): x^3 + x + 1   -> (1, 1, 0, 1)
    GF(9): x^2 + 1       -> (1, 0, 1)

Any other extension field requires an explicit polynomial.
"""

from __future__ import annotations

import itertools
from typing import Sequence

import numpy as np

MAX_Q = 256

DEFAULT_IRREDUCIBLE: dict[int, tuple[int, ...]] = {
    4: (1, 1, 1),
    8: (1, 1, 0, 1),
    9: (1, 0, 1),
}

_DTYPE = np.int16


def prime_power_decomposition(q: int) -> tuple[int, int]:
    """Return (p, m) with q = p^m and p prime, or raise ValueError."""
    if not isinstance(q, int) or isinstance(q, bool) or q < 2:
        raise ValueError(f"field order must be an integer >= 2, got {q!r}")
    p = next(d for d in range(2, q + 1) if q % d == 0)  # smallest divisor is prime
    m = 0
    rest = q
    while rest % p == 0:
        rest //= p
        m += 1
    if rest != 1:
        raise ValueError(f"field order {q} is not a prime power")
    return p, m


def _poly_trim(coeffs: list[int]) -> list[int]:
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


def _poly_mul(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return out


def _poly_mod(num: Sequence[int], den: Sequence[int], p: int) -> list[int]:
    """Remainder of num modulo a monic den, coefficients mod p."""
    rem = [c % p for c in num]
    dd = len(_poly_trim(list(den))) - 1
    while len(_poly_trim(rem)) - 1 >= dd:
        rem = _poly_trim(rem)
        shift = len(rem) - 1 - dd
        lead = rem[-1]
        for i, dc in enumerate(den[:dd + 1]):
            rem[shift + i] = (rem[shift + i] - lead * dc) % p
    return _poly_trim(rem)


def _validate_irreducible(poly: Sequence[int], p: int, m: int) -> tuple[int, ...]:
    poly = tuple(int(c) for c in poly)
    if len(poly) != m + 1:
        raise ValueError(
            f"irreducible polynomial needs {m + 1} coefficients for degree {m}, "
            f"got {len(poly)}")
    if any(c < 0 or c >= p for c in poly):
        raise ValueError(f"polynomial coefficients must lie in 0..{p - 1}")
    if poly[-1] != 1:
        raise ValueError("irreducible polynomial must be monic")
    if m in (2, 3):
        # Degree 2 or 3 is reducible iff it has a root.
        for a in range(p):
            acc = 0
            for c in reversed(poly):
                acc = (acc * a + c) % p
            if acc == 0:
                raise ValueError(
                    f"polynomial is reducible over GF({p}): root at {a}")
    elif m >= 4:
        # No monic divisor of degree up to m/2 (degree 1 covers roots).
        for deg in range(1, m // 2 + 1):
            for tail in itertools.product(range(p), repeat=deg):
                g = list(tail) + [1]
                if not _poly_mod(poly, g, p):
                    raise ValueError(
                        f"polynomial is reducible over GF({p}): "
                        f"divisor of degree {deg} found")
    return poly


class GF:
    """The finite field GF(q) for q = p^m, acting on integer element codes.

    Parameters
    ----------
    q : int
        Field order; a prime power with q <= 256.
    irreducible : sequence of int, optional
        Little-endian coefficients (length m+1, monic) of the modulus
        polynomial.  Ignored for prime q.  Extension fields fall back to
        the built-in defaults for q in {4, 8, 9} and otherwise require an
        explicit polynomial.

    Instances are immutable and safe to share between threads; all
    operations are pure table lookups.
    """

    __slots__ = ("p", "m", "q", "irreducible", "add_table", "sub_table",
                 "neg_table", "mul_table", "inv_table", "_digits", "_ppow")

    def __init__(self, q: int, irreducible: Sequence[int] | None = None) -> None:
        p, m = prime_power_decomposition(q)
        if q > MAX_Q:
            raise ValueError(f"field order {q} exceeds the supported cap {MAX_Q}")
        self.p = p
        self.m = m
        self.q = q
        if m == 1:
            self.irreducible = None  # modulus is just p
        else:
            poly = irreducible if irreducible is not None else DEFAULT_IRREDUCIBLE.get(q)
            if poly is None:
                raise ValueError(
                    f"GF({q}) has no built-in irreducible polynomial; pass one "
                    f"explicitly (length {m + 1}, monic, little-endian)")
            self.irreducible = _validate_irreducible(poly, p, m)
        self._build_tables()

    # ------------------------------------------------------------------
    # table construction
    # ------------------------------------------------------------------
    def _build_tables(self) -> None:
        p, m, q = self.p, self.m, self.q
        codes = np.arange(q, dtype=np.int64)
        digits = np.empty((q, m), dtype=np.int64)
        for j in range(m):
            digits[:, j] = (codes // p**j) % p
        ppow = p ** np.arange(m, dtype=np.int64)

        add = (((digits[:, None, :] + digits[None, :, :]) % p) @ ppow)
        neg = (((p - digits) % p) @ ppow)

        if m == 1:
            mul = (codes[:, None] * codes[None, :]) % p
        else:
            mul = np.zeros((q, q), dtype=np.int64)
            polys = [list(digits[c]) for c in range(q)]
            for a in range(1, q):
                for b in range(a, q):
                    rem = _poly_mod(_poly_mul(polys[a], polys[b], p),
                                    self.irreducible, p)
                    code = sum(c * int(pw) for c, pw in zip(rem, ppow))
                    mul[a, b] = mul[b, a] = code

        self.add_table = add.astype(_DTYPE)
        self.neg_table = neg.astype(_DTYPE)
        self.sub_table = self.add_table[:, self.neg_table]
        self.mul_table = mul.astype(_DTYPE)

        inv = np.zeros(q, dtype=_DTYPE)
        for a in range(1, q):
            inv[a] = self._pow_by_table(a, q - 2)
        self.inv_table = inv

        self._digits = digits.astype(np.int64)
        self._ppow = ppow
        for table in (self.add_table, self.sub_table, self.neg_table,
                      self.mul_table, self.inv_table, self._digits, self._ppow):
            table.setflags(write=False)

    def _pow_by_table(self, a: int, e: int) -> int:
        result, base = 1, a
        while e:
            if e & 1:
                result = int(self.mul_table[result, base])
            base = int(self.mul_table[base, base])
            e >>= 1
        return result

    # ------------------------------------------------------------------
    # scalar operations on element codes
    # ------------------------------------------------------------------
    def _check(self, a: int) -> int:
        code = int(a)
        if code < 0 or code >= self.q:
            raise ValueError(f"element code {a} is not in GF({self.q})")
        return code

    def add(self, a: int, b: int) -> int:
        """Coefficient-wise addition mod p."""
        return int(self.add_table[self._check(a), self._check(b)])

    def sub(self, a: int, b: int) -> int:
        return int(self.sub_table[self._check(a), self._check(b)])

    def mul(self, a: int, b: int) -> int:
        """Polynomial product reduced modulo the field polynomial."""
        return int(self.mul_table[self._check(a), self._check(b)])

    def neg(self, a: int) -> int:
        return int(self.neg_table[self._check(a)])

    def inv(self, a: int) -> int:
        """Multiplicative inverse, computed as a^(q-2).

        Raises ZeroDivisionError for the zero element.
        """
        code = self._check(a)
        if code == 0:
            raise ZeroDivisionError(f"0 has no multiplicative inverse in GF({self.q})")
        return int(self.inv_table[code])

    def pow(self, a: int, e: int) -> int:
        code = self._check(a)
        if e < 0:
            code = self.inv(code)
            e = -e
        return self._pow_by_table(code, e)

    def elements(self) -> range:
        """All q element codes in order 0..q-1."""
        return range(self.q)

    # ------------------------------------------------------------------
    # vectorized operations on arrays of element codes (no validation)
    # ------------------------------------------------------------------
    def vadd(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        return self.add_table[x, y]

    def vsub(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        return self.sub_table[x, y]

    def vmul(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        return self.mul_table[x, y]

    def vneg(self, x: np.ndarray) -> np.ndarray:
        return self.neg_table[x]

    def vsum(self, values: np.ndarray, axis: int) -> np.ndarray:
        """Field sum along a nonnegative axis, via base-p digit arithmetic."""
        assert axis >= 0
        d = self._digits[np.asarray(values, dtype=np.int64)]
        s = d.sum(axis=axis, dtype=np.int64) % self.p
        return (s @ self._ppow).astype(_DTYPE)

    def vdot(self, x: np.ndarray, y: np.ndarray) -> int:
        """Euclidean inner product of two 1-D code arrays."""
        prods = self.vmul(np.asarray(x, dtype=_DTYPE), np.asarray(y, dtype=_DTYPE))
        if prods.size == 0:
            return 0
        return int(self.vsum(prods, axis=0))

    # ------------------------------------------------------------------
    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GF):
            return NotImplemented
        return (self.p, self.m, self.irreducible) == (other.p, other.m, other.irreducible)

    def __hash__(self) -> int:
        return hash((self.p, self.m, self.irreducible))

    def __repr__(self) -> str:
        if self.m == 1 or self.irreducible == DEFAULT_IRREDUCIBLE.get(self.q):
            return f"GF({self.q})"
        return f"GF({self.q}, irreducible={self.irreducible})"
