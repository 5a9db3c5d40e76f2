"""Puncturing and shortening of symplectic codes, and the derived
entanglement-assisted construction with its machine checks.

Puncturing at position i deletes the paired coordinates (i, n+i) from
every codeword; shortening first restricts to the codewords vanishing
there.  Starting from a self-orthogonal code C whose dual has minimum
symplectic weight d, puncturing any set of l <= d-1 positions yields an
entanglement-assisted stabilizer code that keeps k while trading the l
removed pairs for l units of preshared entanglement, and the new dual's
minimum weight stays at least d.

`construct_eaqecc` performs that construction and re-verifies each clause
on the concrete instance, `verify_lemmas` checks the supporting
single-position facts, `search_positions` sweeps all position sets of a
given size, and `compare_applicability` contrasts the admissible l-range
with the stricter criterion based on the dual's classical Hamming weight.

Position sets are 1-indexed at this interface (position i names the
column pair (i, n+i)); multi-position operations delete all selected
pairs simultaneously, with indices always referring to the original
code's coordinates.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field
from typing import Iterable

import numpy as np

from .matrix import GfMatrix, row_space_intersect
from .symplectic import DEFAULT_CAP, CodeParams, LinearCode

_DTYPE = np.int16

PASS = "pass"
FAIL = "fail"
VACUOUS = "vacuous"


class PositionSet:
    """Sorted duplicate-free set of 1-indexed coordinate positions."""

    __slots__ = ("positions",)

    def __init__(self, positions: Iterable[int]) -> None:
        pos = tuple(int(i) for i in positions)
        if any(i < 1 for i in pos):
            raise ValueError(f"positions are 1-indexed, got {sorted(pos)}")
        if len(set(pos)) != len(pos):
            raise ValueError(f"duplicate positions in {sorted(pos)}")
        self.positions = tuple(sorted(pos))

    @classmethod
    def parse(cls, text: str) -> "PositionSet":
        """Parse a comma-separated list such as '1,3'."""
        items = [t.strip() for t in text.split(",") if t.strip()]
        try:
            return cls(int(t) for t in items)
        except ValueError as exc:
            raise ValueError(f"bad position list {text!r}: {exc}") from exc

    @property
    def ell(self) -> int:
        return len(self.positions)

    def validate_for(self, n: int) -> None:
        for i in self.positions:
            if i > n:
                raise ValueError(f"position {i} out of range for n={n}")

    def columns(self, n: int) -> list[int]:
        """0-indexed columns (i-1 and n+i-1 for each position i), ascending."""
        return [i - 1 for i in self.positions] + [n + i - 1 for i in self.positions]

    def __len__(self) -> int:
        return len(self.positions)

    def __iter__(self):
        return iter(self.positions)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PositionSet):
            return NotImplemented
        return self.positions == other.positions

    def __hash__(self) -> int:
        return hash(self.positions)

    def __str__(self) -> str:
        return ",".join(str(i) for i in self.positions)

    def __repr__(self) -> str:
        return f"PositionSet({list(self.positions)!r})"


def _as_positions(positions) -> PositionSet:
    return positions if isinstance(positions, PositionSet) else PositionSet(positions)


@dataclass(frozen=True)
class CheckResult:
    """One verified clause: an expectation, what was observed, a status."""

    name: str
    expected: str
    actual: str
    status: str

    def to_dict(self) -> dict:
        return {"name": self.name, "expected": self.expected,
                "actual": self.actual, "status": self.status}

    @classmethod
    def from_dict(cls, data: dict) -> "CheckResult":
        return cls(name=data["name"], expected=data["expected"],
                   actual=data["actual"], status=data["status"])


@dataclass
class TheoremReport:
    """Outcome of a construction or lemma verification run.

    `overall` is True iff no check failed; vacuous checks (hypothesis not
    met) neither pass nor fail.
    """

    positions: PositionSet
    input_params: CodeParams
    output_params: CodeParams | None
    checks: list[CheckResult] = dc_field(default_factory=list)
    overall: bool = True

    def to_dict(self) -> dict:
        return {
            "positions": list(self.positions),
            "input_params": self.input_params.to_dict(),
            "output_params": (self.output_params.to_dict()
                              if self.output_params is not None else None),
            "checks": [c.to_dict() for c in self.checks],
            "overall": self.overall,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "TheoremReport":
        out = data["output_params"]
        return cls(
            positions=PositionSet(data["positions"]),
            input_params=CodeParams.from_dict(data["input_params"]),
            output_params=CodeParams.from_dict(out) if out is not None else None,
            checks=[CheckResult.from_dict(c) for c in data["checks"]],
            overall=data["overall"],
        )


def _check(name: str, expected, actual, ok: bool) -> CheckResult:
    return CheckResult(name, str(expected), str(actual), PASS if ok else FAIL)


def _check_eq(name: str, expected, actual) -> CheckResult:
    return _check(name, expected, actual, expected == actual)


def _vacuous(name: str, note: str) -> CheckResult:
    return CheckResult(name, "hypothesis: min symplectic weight >= 2", note, VACUOUS)


def _overall(checks: Iterable[CheckResult]) -> bool:
    return all(c.status != FAIL for c in checks)


# ----------------------------------------------------------------------
# puncture / shorten
# ----------------------------------------------------------------------
def puncture(code: LinearCode, positions) -> LinearCode:
    """Delete the paired coordinates of every selected position at once."""
    pset = _as_positions(positions)
    pset.validate_for(code.n)
    cols = pset.columns(code.n)
    basis = code.basis.delete_columns(cols)
    return LinearCode(code.field, code.n - len(pset), basis)


def shorten(code: LinearCode, positions) -> LinearCode:
    """Restrict to codewords vanishing on the selected pairs, then delete them.

    Implemented by row-reducing with the selected columns ordered first:
    rows whose pivot lands beyond that block are exactly the codewords
    that vanish there.
    """
    pset = _as_positions(positions)
    pset.validate_for(code.n)
    cols = pset.columns(code.n)
    if not cols:
        return code
    keep = [j for j in range(2 * code.n) if j not in set(cols)]
    arr = code.basis.array
    permuted = GfMatrix(code.field,
                        np.concatenate([arr[:, cols], arr[:, keep]], axis=1))
    reduced, pivots = permuted.rref()
    take = [r for r, p in enumerate(pivots) if p >= len(cols)]
    short = reduced.array[take][:, len(cols):]
    return LinearCode(code.field, code.n - len(pset),
                      GfMatrix(code.field, short))


# ----------------------------------------------------------------------
# the construction
# ----------------------------------------------------------------------
def construct_eaqecc(code: LinearCode, positions, cap: int = DEFAULT_CAP,
                     trusted_d: int | None = None
                     ) -> tuple[LinearCode, TheoremReport]:
    """Puncture a self-orthogonal code and verify the resulting parameters.

    Requires 1 <= l <= d-1 where l is the number of positions and d is
    the minimum symplectic weight of the dual; d is recomputed here
    unless the caller passes `trusted_d` (the fast path for sweeps that
    already know it).  Returns the punctured code together with a report
    whose six checks cover dimension preservation, the entanglement and
    logical-qudit counts, the distance lower bound, the exchange of
    puncturing and shortening under duality, and the intersection
    identity tying the new code's self-orthogonal part to shortening.
    """
    pset = _as_positions(positions)
    pset.validate_for(code.n)
    if not code.is_self_orthogonal():
        raise ValueError("input code is not self-orthogonal under the symplectic form")
    dual = code.dual()
    d = trusted_d if trusted_d is not None else dual.min_symplectic_weight(cap=cap)
    ell = pset.ell
    if d is None or not 1 <= ell <= d - 1:
        raise ValueError(f"l must satisfy 1 <= l <= d-1 (l={ell}, d={d})")

    if trusted_d is not None:
        base = code.structural_params()
        input_params = CodeParams(q=base.q, n=base.n, k=base.k, d=d, c=base.c,
                                  pure_d=d, is_stabilizer_qecc=base.is_stabilizer_qecc)
    else:
        input_params = code.params(cap=cap)

    punctured = puncture(code, pset)
    new_dual = punctured.dual()
    shortened_dual = shorten(dual, pset)
    shortened_code = shorten(code, pset)
    meet = LinearCode(code.field, punctured.n,
                      row_space_intersect(punctured.basis, new_dual.basis))
    output_params = punctured.params(cap=cap)

    k_by_formula = ell + (code.n - ell) - punctured.dim
    checks = [
        _check_eq("dim_preserved", code.dim, punctured.dim),
        _check_eq("entanglement_equals_l", ell, output_params.c),
        _check_eq("k_preserved", input_params.k, k_by_formula),
        _check("dual_min_weight_at_least_d", f">= {d}", output_params.pure_d,
               output_params.pure_d is not None and output_params.pure_d >= d),
        _check("duality_exchange",
               "dual of punctured == shortened dual",
               "equal" if new_dual == shortened_dual else "different",
               new_dual == shortened_dual),
        _check("intersection_identity",
               "punctured n its dual == shortened code",
               "equal" if meet == shortened_code else "different",
               meet == shortened_code),
    ]
    report = TheoremReport(positions=pset, input_params=input_params,
                           output_params=output_params, checks=checks,
                           overall=_overall(checks))
    return punctured, report


# ----------------------------------------------------------------------
# lemma-level verification
# ----------------------------------------------------------------------
def _zero_column_exists(mat: GfMatrix) -> bool:
    if mat.rows == 0:
        return mat.cols > 0
    return bool((~mat.array.any(axis=0)).any())


def _pair_dependent(mat: GfMatrix, col_a: int, col_b: int) -> bool:
    """True iff the two columns are linearly dependent (as a 2-column matrix)."""
    if mat.rows == 0:
        return True
    pair = GfMatrix(mat.field, np.stack([mat.array[:, col_a],
                                         mat.array[:, col_b]], axis=1))
    return pair.rank() <= 1


def verify_lemmas(code: LinearCode, position: int,
                  cap: int = DEFAULT_CAP) -> TheoremReport:
    """Check the single-position facts behind the construction at `position`.

    All four main checks are conditional on the code having minimum
    symplectic weight at least 2; when that hypothesis fails they are
    reported as vacuous.  A fifth check runs in the other direction: if
    the dual's basis matrix has a zero column or the position's column
    pair is linearly dependent, the code must contain a weight-1 word.

    Reports structural parameters only (no distance enumeration for the
    punctured side), since every check here is dimensional.
    """
    pset = PositionSet([position])
    pset.validate_for(code.n)
    w = code.min_symplectic_weight(cap=cap)
    hypothesis = w is not None and w >= 2
    dual = code.dual()
    mat = dual.basis
    i0 = position - 1
    zero_col = _zero_column_exists(mat)
    dependent = _pair_dependent(mat, i0, code.n + i0)
    column_condition_violated = zero_col or dependent
    punctured = puncture(code, pset)

    if hypothesis:
        shortened_dual = shorten(dual, pset)
        new_dual = punctured.dual()
        checks = [
            _check_eq("puncture_preserves_dim", code.dim, punctured.dim),
            _check("dual_matrix_column_condition",
                   "no zero column; pair columns independent",
                   f"zero column: {zero_col}; dependent pair: {dependent}",
                   not column_condition_violated),
            _check_eq("shorten_dual_drops_dim_by_two",
                      dual.dim - 2, shortened_dual.dim),
            _check("shortened_dual_is_dual_of_punctured",
                   "shortened dual == dual of punctured",
                   "equal" if shortened_dual == new_dual else "different",
                   shortened_dual == new_dual),
        ]
    else:
        note = f"hypothesis not met (min weight {w})"
        checks = [
            _vacuous("puncture_preserves_dim", note),
            _vacuous("dual_matrix_column_condition", note),
            _vacuous("shorten_dual_drops_dim_by_two", note),
            _vacuous("shortened_dual_is_dual_of_punctured", note),
        ]

    if column_condition_violated:
        checks.append(_check("column_condition_implies_weight_one",
                             "min weight 1", w, w == 1))
    else:
        checks.append(CheckResult("column_condition_implies_weight_one",
                                  "hypothesis: zero column or dependent pair",
                                  "column condition holds", VACUOUS))

    return TheoremReport(positions=pset,
                         input_params=code.structural_params(),
                         output_params=punctured.structural_params(),
                         checks=checks, overall=_overall(checks))


# ----------------------------------------------------------------------
# applicability comparison and position search
# ----------------------------------------------------------------------
def compare_applicability(code: LinearCode,
                          cap: int = DEFAULT_CAP) -> tuple[int, int]:
    """Largest admissible l under each of two hypotheses on the dual.

    Returns (symplectic_max_l, hamming_max_l): d - 1 where d is the
    dual's minimum symplectic weight, versus the largest l with
    2l < w_H where w_H is the dual's minimum Hamming weight as a plain
    length-2n code.  Since the symplectic weight of a vector never
    exceeds its Hamming weight (a nonzero pair costs at most two nonzero
    entries), the first bound always dominates the second.
    """
    if not code.is_self_orthogonal():
        raise ValueError("input code is not self-orthogonal under the symplectic form")
    dual = code.dual()
    d = dual.min_symplectic_weight(cap=cap)
    w_h = dual.min_hamming_weight(cap=cap)
    if d is None or w_h is None:
        raise ValueError("dual code is trivial; applicability is undefined")
    return d - 1, (w_h + 1) // 2 - 1


def search_positions(code: LinearCode, ell: int, cap: int = DEFAULT_CAP,
                     limit: int | None = None
                     ) -> list[tuple[PositionSet, CodeParams]]:
    """Run the construction over position sets of size `ell`.

    Evaluates all C(n, ell) sets (or the first `limit` in lexicographic
    order) and returns (positions, parameters) pairs sorted by descending
    dual minimum weight, ties broken by ascending positions.
    """
    if not code.is_self_orthogonal():
        raise ValueError("input code is not self-orthogonal under the symplectic form")
    d = code.dual().min_symplectic_weight(cap=cap)
    if d is None or not 1 <= ell <= d - 1:
        raise ValueError(f"l must satisfy 1 <= l <= d-1 (l={ell}, d={d})")
    combos = itertools.combinations(range(1, code.n + 1), ell)
    if limit is not None:
        combos = itertools.islice(combos, limit)
    results = []
    for combo in combos:
        pset = PositionSet(combo)
        _, report = construct_eaqecc(code, pset, cap=cap, trusted_d=d)
        results.append((pset, report.output_params))
    results.sort(key=lambda item: (-(item[1].pure_d or 0), item[0].positions))
    return results
