"""Parity check systems (H|S) and their two-way link with coset-presented codes.

A system over R consists of an m x n check matrix H and an m x s syndrome
matrix S subject to three conditions:

  (i)   every entry s_ij lies in the image ideal {h_i . x : x in R^n},
  (ii)  the columns of S are pairwise distinct,
  (iii) every dependency among the rows of H carries over to the rows of S,
        i.e. r H = 0 implies r S = 0.

The code of a system is {x in R^n : H x^T is a column of S}; it is a union
of s cosets of D = {x : H x^T = 0} and need not be linear.  Conversely a
code given as reps + D is turned into a system by taking H to generate the
dual of D and tabulating the reps' syndromes.
"""

from __future__ import annotations

import math
from typing import Optional, Sequence

import numpy as np

from .rings import (
    RingElem,
    RingSpec,
    RingVec,
    from_components,
    scale,
    vec_add,
    vec_sub,
    zero_vec,
)
from .submodules import Submodule, factor_matrix, solve_right, syzygies


class PCSValidationError(Exception):
    """A proposed (H|S) pair violates one of the three defining conditions."""


class ConditionIViolation(PCSValidationError):
    """S entry outside the image ideal of its H row.  Indices are 1-based."""

    def __init__(self, row: int, col: int, message: str = ""):
        self.row = row
        self.col = col
        super().__init__(
            message
            or f"S entry at row {row}, column {col} is outside the image of H row {row}"
        )


class ConditionIIViolation(PCSValidationError):
    """Two equal syndrome columns.  Indices are 1-based."""

    def __init__(self, col_a: int, col_b: int):
        self.col_a = col_a
        self.col_b = col_b
        super().__init__(f"S columns {col_a} and {col_b} are equal")


class ConditionIIIViolation(PCSValidationError):
    """A row dependency of H that the rows of S do not satisfy."""

    def __init__(self, witness: RingVec):
        self.witness = witness
        super().__init__(
            f"row dependency {witness} annihilates H's rows but not S's rows"
        )


class InternalInconsistency(Exception):
    """A validated system failed an operation its validity guarantees."""


class ParityCheckSystem:
    """A validated (H|S) pair with cached module data and syndrome lookup."""

    def __init__(self, h_rows: Sequence[RingVec], s_rows: Sequence[RingVec]):
        if not h_rows:
            raise ValueError("H needs at least one row (a zero row is fine)")
        self.spec = h_rows[0].spec
        self.h_rows = tuple(h_rows)
        self.s_rows = tuple(s_rows)
        self.m = len(h_rows)
        self.n = len(h_rows[0])
        if len(s_rows) != self.m:
            raise ValueError("H and S must have the same number of rows")
        self.s = len(s_rows[0])
        if self.s < 1:
            raise ValueError("S needs at least one column")
        for row in h_rows:
            if row.spec != self.spec or len(row) != self.n:
                raise ValueError("ragged or mixed-ring H")
        for row in s_rows:
            if row.spec != self.spec or len(row) != self.s:
                raise ValueError("ragged or mixed-ring S")
        # per-factor H for fast syndromes
        self._h_mats = [
            factor_matrix(self.spec, self.h_rows, f, self.n)
            for f in range(self.spec.nfactors)
        ]
        self.s_cols = tuple(
            RingVec(self.spec, tuple(r.coords[j] for r in self.s_rows))
            for j in range(self.s)
        )
        self.syndrome_to_col = {col: j + 1 for j, col in enumerate(self.s_cols)}
        self._row_module: Optional[Submodule] = None
        self._kernel_module: Optional[Submodule] = None
        self._h_forms = None

    @property
    def row_module(self) -> Submodule:
        """The submodule of R^n generated by the rows of H."""
        if self._row_module is None:
            self._row_module = Submodule.from_generators(
                self.spec, self.n, self.h_rows
            )
        return self._row_module

    @property
    def kernel_module(self) -> Submodule:
        """D = {x : H x^T = 0}, the common kernel of the checks."""
        if self._kernel_module is None:
            self._kernel_module = self.row_module.annihilator()
        return self._kernel_module

    def syndrome(self, x: RingVec) -> RingVec:
        if x.spec != self.spec or len(x) != self.n:
            raise ValueError("vector does not match the system's ambient space")
        parts = []
        for f, t in enumerate(self.spec.factors):
            xs = np.array(x.component(f), dtype=np.int64)
            parts.append((self._h_mats[f] * xs % t).sum(axis=1) % t)
        return from_components(self.spec, parts)

    def express_over_rows(self, x: RingVec) -> Optional[RingVec]:
        """Coefficients r with r H = x and free directions zeroed, or None.

        Same answer as solve_left on the H rows, but the per-factor Howell
        forms are computed once and reused across calls.
        """
        if x.spec != self.spec or len(x) != self.n:
            raise ValueError("vector does not match the system's ambient space")
        if self._h_forms is None:
            from .howell import howell_form

            self._h_forms = tuple(
                howell_form(self._h_mats[f], t)
                for f, t in enumerate(self.spec.factors)
            )
        parts = []
        for f, t in enumerate(self.spec.factors):
            hf = self._h_forms[f]
            coeffs = hf.express(np.array(x.component(f), dtype=np.int64))
            if coeffs is None:
                return None
            if len(coeffs):
                parts.append((coeffs @ hf.transform) % t)
            else:
                parts.append(np.zeros(self.m, dtype=np.int64))
        return from_components(self.spec, parts)

    def code_cardinality(self) -> int:
        return self.s * self.kernel_module.cardinality

    def __repr__(self) -> str:
        return (
            f"ParityCheckSystem({self.spec}, m={self.m}, n={self.n}, s={self.s})"
        )


def _image_ideal_gcds(spec: RingSpec, row: RingVec) -> tuple[int, ...]:
    """Per factor f: gcd of the row's residues with t_f, generating the image ideal."""
    out = []
    for f, t in enumerate(spec.factors):
        g = t
        for c in row.coords:
            g = math.gcd(g, c[f])
        out.append(g)
    return tuple(out)


def validate_pcs(
    h_rows: Sequence[RingVec], s_rows: Sequence[RingVec]
) -> ParityCheckSystem:
    """Check conditions (i) to (iii) and return the packaged system.

    Raises ConditionIViolation / ConditionIIViolation / ConditionIIIViolation
    with 1-based witness data.  Condition (iii) only needs checking on a
    generating set of the row dependencies, since both sides are linear in r.
    """
    pcs = ParityCheckSystem(h_rows, s_rows)
    spec = pcs.spec
    # (i): each S entry must lie in its row's image ideal, factor by factor
    for i, h_row in enumerate(pcs.h_rows):
        gcds = _image_ideal_gcds(spec, h_row)
        for j in range(pcs.s):
            entry = pcs.s_rows[i].coords[j]
            for f, g in enumerate(gcds):
                if entry[f] % g:
                    raise ConditionIViolation(i + 1, j + 1)
    # (ii): distinct columns
    seen: dict[RingVec, int] = {}
    for j, col in enumerate(pcs.s_cols):
        if col in seen:
            raise ConditionIIViolation(seen[col], j + 1)
        seen[col] = j + 1
    # (iii): generators of the syzygy module must annihilate S's rows
    syz = syzygies(spec, pcs.h_rows)
    zero_s = zero_vec(spec, pcs.s)
    for r in syz.generators:
        combo = zero_s
        for i in range(pcs.m):
            combo = vec_add(combo, scale(r[i], pcs.s_rows[i]))
        if combo != zero_s:
            raise ConditionIIIViolation(r)
    return pcs


class CodePresentation:
    """A code written as s pairwise-disjoint cosets of a submodule D."""

    def __init__(self, kernel: Submodule, representatives: Sequence[RingVec]):
        self.spec = kernel.spec
        self.n = kernel.ambient_n
        self.kernel = kernel
        self.representatives = tuple(representatives)
        if not self.representatives:
            raise ValueError("a code needs at least one coset representative")
        for d in self.representatives:
            if d.spec != self.spec or len(d) != self.n:
                raise ValueError("representative outside the ambient space")
        reps = self.representatives
        for a in range(len(reps)):
            for b in range(a + 1, len(reps)):
                if kernel.contains(vec_sub(reps[a], reps[b])):
                    raise ValueError(
                        f"representatives {a + 1} and {b + 1} present the same coset"
                    )
        self._dual: Optional[Submodule] = None

    @property
    def s(self) -> int:
        return len(self.representatives)

    @property
    def cardinality(self) -> int:
        return self.s * self.kernel.cardinality

    def dual_module(self) -> Submodule:
        """The annihilator of D, cached; its generators feed the H matrix."""
        if self._dual is None:
            self._dual = self.kernel.annihilator()
        return self._dual

    def __repr__(self) -> str:
        return (
            f"CodePresentation({self.spec}, n={self.n}, s={self.s}, "
            f"cardinality={self.cardinality})"
        )


def code_to_pcs(
    pres: CodePresentation, dual_gens: Optional[Sequence[RingVec]] = None
) -> ParityCheckSystem:
    """Present a coset code as a system: H generates the dual of D, S = H . reps.

    When dual_gens is supplied it must generate exactly the dual of D and is
    used as H verbatim; otherwise the canonical dual generators are used
    (with a single zero row when the dual is trivial).
    """
    spec = pres.spec
    dual = pres.dual_module()
    if dual_gens is not None:
        cand = Submodule.from_generators(spec, pres.n, tuple(dual_gens))
        if cand != dual:
            raise ValueError("supplied rows do not generate the dual of D")
        h_rows = tuple(dual_gens)
    else:
        h_rows = dual.canonical_generators()
        if not h_rows:
            h_rows = (zero_vec(spec, pres.n),)
    s_rows = []
    from .rings import dot

    for h in h_rows:
        s_rows.append(RingVec.of(spec, [dot(h, d) for d in pres.representatives]))
    return validate_pcs(h_rows, tuple(s_rows))


def pcs_to_code(pcs: ParityCheckSystem) -> CodePresentation:
    """Recover the coset presentation: D is the common kernel, reps solve H x = col."""
    reps = []
    for j, col in enumerate(pcs.s_cols):
        x = solve_right(pcs.h_rows, col)
        if x is None:
            raise InternalInconsistency(
                f"column {j + 1} of a validated system has no preimage"
            )
        reps.append(x)
    return CodePresentation(pcs.kernel_module, tuple(reps))


def member(pcs: ParityCheckSystem, x: RingVec) -> Optional[int]:
    """1-based syndrome column index of x, or None when x is outside the code."""
    return pcs.syndrome_to_col.get(pcs.syndrome(x))


def kernel(pcs: ParityCheckSystem) -> Submodule:
    """The kernel of the code: {y : r y + c stays in the code for all r, c}.

    Work happens on the finite syndrome side.  A syndrome sigma belongs to
    the kernel of col(S) when r sigma + col(S) = col(S) for every scalar r;
    candidates are narrowed to the column differences shared by every
    column before the full scalar scan.  Each surviving sigma is pulled
    back through one solve, and those pullbacks together with D generate
    the kernel.
    """
    spec = pcs.spec
    cols = list(pcs.s_cols)
    colset = set(cols)
    candidates = {vec_sub(c, cols[0]) for c in cols}
    for base in cols[1:]:
        candidates &= {vec_sub(c, base) for c in cols}
    scalars = spec.elements()
    kernel_syndromes = []
    for sigma in sorted(candidates, key=lambda v: v.coords):
        ok = True
        for r in scalars:
            shifted = {vec_add(scale(r, sigma), c) for c in cols}
            if shifted != colset:
                ok = False
                break
        if ok:
            kernel_syndromes.append(sigma)
    gens = list(pcs.kernel_module.canonical_generators())
    for sigma in kernel_syndromes:
        x = solve_right(pcs.h_rows, sigma)
        if x is None:
            raise InternalInconsistency("kernel syndrome has no preimage")
        gens.append(x)
    return Submodule.from_generators(spec, pcs.n, tuple(gens))


def is_linear(pcs: ParityCheckSystem) -> bool:
    """Whether the code is a submodule: col(S) closed under + and scalars."""
    cols = pcs.s_cols
    colset = set(cols)
    for a in cols:
        for b in cols:
            if vec_add(a, b) not in colset:
                return False
    for r in pcs.spec.elements():
        for a in cols:
            if scale(r, a) not in colset:
                return False
    return True
