"""Independent reference computations used to cross-check the library.

These deliberately take different routes than the implementation:
inverses by exhaustive search, field products by fresh schoolbook
polynomial arithmetic, minimum weights by growing-support enumeration
with RREF membership tests, and Hamming minima by a plain pure-Python
walk over all coefficient tuples.
"""

import itertools

import numpy as np


def inverse_by_search(field, a: int) -> int:
    """Exhaustive search for the multiplicative inverse."""
    for b in range(1, field.q):
        if field.mul(a, b) == 1:
            return b
    raise AssertionError(f"no inverse found for {a} in GF({field.q})")


def mul_by_schoolbook(field, a: int, b: int) -> int:
    """Recompute a*b by convolving base-p digits and long division."""
    p, m = field.p, field.m
    da = [(a // p**j) % p for j in range(m)]
    db = [(b // p**j) % p for j in range(m)]
    prod = [0] * (2 * m - 1)
    for i, x in enumerate(da):
        for j, y in enumerate(db):
            prod[i + j] = (prod[i + j] + x * y) % p
    if m > 1:
        mod = list(field.irreducible)
        for top in range(len(prod) - 1, m - 1, -1):
            coef = prod[top]
            if coef:
                shift = top - m
                for k, c in enumerate(mod):
                    prod[shift + k] = (prod[shift + k] - coef * c) % p
    return sum(c * p**j for j, c in enumerate(prod[:m]))


def oracle_cost(n: int, q: int, up_to_weight: int) -> int:
    """Number of candidate vectors the growing-support oracle would visit."""
    from math import comb
    per_position = q * q - 1
    return sum(comb(n, w) * per_position**w for w in range(1, up_to_weight + 1))


def min_weight_by_growing_support(code, up_to_weight: int | None = None,
                                  batch: int = 4096) -> int | None:
    """Minimum symplectic weight via by-increasing-weight enumeration.

    For each candidate weight w, generates every vector whose nonzero
    pairs sit on a size-w support, and tests membership with an RREF
    solve.  Returns the first w with a hit, or None if nothing is found
    up to `up_to_weight` (default n).
    """
    n, q = code.n, code.field.q
    if code.dim == 0:
        return None
    limit = n if up_to_weight is None else min(up_to_weight, n)
    pairs = [(x, y) for x in range(q) for y in range(q) if (x, y) != (0, 0)]
    for w in range(1, limit + 1):
        for support in itertools.combinations(range(n), w):
            assignments = itertools.product(pairs, repeat=w)
            while True:
                block = list(itertools.islice(assignments, batch))
                if not block:
                    break
                candidates = np.zeros((len(block), 2 * n), dtype=np.int16)
                for r, assignment in enumerate(block):
                    for pos, (x, y) in zip(support, assignment):
                        candidates[r, pos] = x
                        candidates[r, n + pos] = y
                if code.basis.row_space_contains(candidates).any():
                    return w
    return None


def min_hamming_weight_bruteforce(code) -> int | None:
    """Minimum Hamming weight by a pure-Python walk over all codewords."""
    f = code.field
    rows = [list(map(int, r)) for r in code.basis.array]
    if not rows:
        return None
    best = None
    width = len(rows[0])
    for coeffs in itertools.product(range(f.q), repeat=len(rows)):
        if not any(coeffs):
            continue
        word = [0] * width
        for coef, row in zip(coeffs, rows):
            if coef:
                for j in range(width):
                    word[j] = f.add(word[j], f.mul(coef, row[j]))
        weight = sum(1 for v in word if v)
        if best is None or weight < best:
            best = weight
    return best


def random_code(field, n: int, dim: int, rng) -> "LinearCode":
    """Random subspace of F_q^{2n} from `dim` uniform rows (dim may shrink)."""
    from eaqecc import LinearCode
    rows = [[rng.randrange(field.q) for _ in range(2 * n)] for _ in range(dim)]
    return LinearCode(field, n, rows)
