"""Brute-force reference computations used to cross-check everything else.

Nothing here touches Howell forms, cached submodules or syndrome algebra:
only elementwise ring arithmetic and exhaustive scans, so agreement with
the main routines is meaningful evidence.  All scans are budget-gated.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .pcs import ParityCheckSystem
from .rings import (
    DEFAULT_BUDGET,
    BudgetExceeded,
    RingSpec,
    RingVec,
    dot,
    enumerate_vectors,
    hamming,
    scale,
    vec_add,
    vec_sub,
)


@dataclass(frozen=True)
class ExplicitCode:
    """A code as a plain set of words."""

    spec: RingSpec
    n: int
    words: frozenset[RingVec]

    def __post_init__(self):
        if not self.words:
            raise ValueError("a code must be nonempty")

    @property
    def cardinality(self) -> int:
        return len(self.words)


def _gate_pairs(code: ExplicitCode, budget: int) -> None:
    if len(code.words) ** 2 > budget:
        raise BudgetExceeded(len(code.words) ** 2, budget, "all-pairs scan")


def oracle_code_from_pcs(
    pcs: ParityCheckSystem, budget: int = DEFAULT_BUDGET
) -> ExplicitCode:
    """Scan R^n and keep the words whose syndrome is a column of S."""
    colset = set(pcs.s_cols)
    words = []
    for x in enumerate_vectors(pcs.spec, pcs.n, budget):
        syn = RingVec.of(pcs.spec, [dot(h, x) for h in pcs.h_rows])
        if syn in colset:
            words.append(x)
    return ExplicitCode(pcs.spec, pcs.n, frozenset(words))


def oracle_min_distance(code: ExplicitCode, budget: int = DEFAULT_BUDGET) -> int:
    """Minimum over all pairs of distinct words."""
    if len(code.words) < 2:
        raise ValueError("minimum distance needs at least two words")
    _gate_pairs(code, budget)
    words = sorted(code.words, key=lambda v: v.coords)
    best = code.n
    for i, a in enumerate(words):
        for b in words[i + 1 :]:
            d = hamming(a, b)
            if d < best:
                best = d
    return best


def oracle_distance_distribution(
    code: ExplicitCode, budget: int = DEFAULT_BUDGET
) -> list[int]:
    """Ordered-pair distance histogram, length n + 1."""
    _gate_pairs(code, budget)
    words = list(code.words)
    hist = [0] * (code.n + 1)
    for a in words:
        for b in words:
            hist[hamming(a, b)] += 1
    return hist


def oracle_kernel(code: ExplicitCode, budget: int = DEFAULT_BUDGET) -> frozenset[RingVec]:
    """{y : r y + c is a word, for every scalar r and word c}, by scanning.

    The r = 1 case already forces y to be a difference of words, so the
    candidates are taken from word differences before the full scan.
    """
    words = code.words
    first = next(iter(sorted(words, key=lambda v: v.coords)))
    candidates = {vec_sub(w, first) for w in words}
    scalars = code.spec.elements()
    if len(candidates) * len(words) * len(scalars) > budget:
        raise BudgetExceeded(
            len(candidates) * len(words) * len(scalars), budget, "kernel scan"
        )
    out = []
    for y in candidates:
        ok = True
        for r in scalars:
            ry = scale(r, y)
            if any(vec_add(ry, c) not in words for c in words):
                ok = False
                break
        if ok:
            out.append(y)
    return frozenset(out)


def oracle_is_linear(code: ExplicitCode, budget: int = DEFAULT_BUDGET) -> bool:
    """Closure of the word set under addition and scalar multiples."""
    _gate_pairs(code, budget)
    words = code.words
    for a in words:
        for b in words:
            if vec_add(a, b) not in words:
                return False
    for r in code.spec.elements():
        for a in words:
            if scale(r, a) not in words:
                return False
    return True


def oracle_annihilator(
    spec: RingSpec, n: int, vectors: Iterable[RingVec], budget: int = DEFAULT_BUDGET
) -> frozenset[RingVec]:
    """All y in R^n with x . y = 0 for every given x, by scanning R^n."""
    vecs = list(vectors)
    out = []
    for y in enumerate_vectors(spec, n, budget):
        if all(dot(x, y).is_zero() for x in vecs):
            out.append(y)
    return frozenset(out)


def oracle_fourier(code: ExplicitCode, x: RingVec) -> complex:
    """Direct complex sum of the conjugated character over the words."""
    spec = code.spec
    L = spec.char_order
    weights = [L // t for t in spec.factors]
    acc = 0j
    for c in code.words:
        e = 0
        for cx, cc in zip(x.coords, c.coords):
            for f, w in enumerate(weights):
                e += cx[f] * cc[f] * w
        acc += cmath.exp(-2j * cmath.pi * (e % L) / L)
    return acc


def oracle_nearest(code: ExplicitCode, x: RingVec) -> tuple[int, list[RingVec]]:
    """Distance to the code and every word attaining it."""
    best = code.n + 1
    hits: list[RingVec] = []
    for c in sorted(code.words, key=lambda v: v.coords):
        d = hamming(x, c)
        if d < best:
            best, hits = d, [c]
        elif d == best:
            hits.append(c)
    return best, hits


def oracle_validate(
    h_rows: Sequence[RingVec],
    s_rows: Sequence[RingVec],
    budget: int = DEFAULT_BUDGET,
) -> Optional[tuple[int, tuple]]:
    """Check the three system conditions by exhaustive scans.

    Returns None when all conditions hold, else (condition, witness) with
    1-based indices.  Condition (i) scans R^n for the image of each row;
    condition (iii) scans all coefficient vectors in R^m (coefficient pairs
    with equal combinations reduce to a single difference vector, which is
    what the scan visits).
    """
    spec = h_rows[0].spec
    n = len(h_rows[0])
    m = len(h_rows)
    s = len(s_rows[0])
    images = [set() for _ in range(m)]
    for x in enumerate_vectors(spec, n, budget):
        for i, h in enumerate(h_rows):
            images[i].add(dot(h, x))
    for i in range(m):
        for j in range(s):
            if s_rows[i][j] not in images[i]:
                return (1, (i + 1, j + 1))
    cols = [tuple(r.coords[j] for r in s_rows) for j in range(s)]
    for a in range(s):
        for b in range(a + 1, s):
            if cols[a] == cols[b]:
                return (2, (a + 1, b + 1))
    if spec.cardinality**m > budget:
        raise BudgetExceeded(spec.cardinality**m, budget, "dependency scan")
    for r in enumerate_vectors(spec, m, budget):
        combo_h = None
        combo_s = None
        for i in range(m):
            sh = scale(r[i], h_rows[i])
            ss = scale(r[i], s_rows[i])
            combo_h = sh if combo_h is None else vec_add(combo_h, sh)
            combo_s = ss if combo_s is None else vec_add(combo_s, ss)
        if all(c == (0,) * spec.nfactors for c in combo_h.coords):
            if any(c != (0,) * spec.nfactors for c in combo_s.coords):
                return (3, tuple(r[i] for i in range(m)))
    return None
