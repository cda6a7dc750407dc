"""Distance enumerators computed from syndrome data alone.

The two-variable system polynomial N(x, y) collects |Fourier coefficient|^2
mass by weight over the row span of H.  Substituting
(x + (|R|-1) y, x - y) and dividing by |R|^n turns it into the distance
distribution D(x, y) of the code, whose coefficient on x^(n-i) y^i counts
ordered codeword pairs at Hamming distance i.  For linear codes D / |C| is
the weight enumerator and matches the MacWilliams transform of the dual
code's enumerator, giving a second, independent route to the same
polynomial.

The |.|^2 accumulation stays in exact root-of-unity arithmetic; each weight
bin is evaluated to a number exactly once, and the binomial substitution is
done in exact integer arithmetic whenever the bins are integers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence, Union

from .fourier import ExponentSum, fourier_coeff_pcs
from .pcs import ParityCheckSystem, is_linear, pcs_to_code
from .rings import DEFAULT_BUDGET, RingVec, weight
from .submodules import Submodule

Number = Union[int, float]

#: Relative deviation from an integer tolerated before rounding a coefficient.
INTEGER_TOLERANCE = 1e-6


class NonIntegerCoefficient(Exception):
    """A coefficient that must be an integer strayed too far from one."""

    def __init__(self, index: int, value: float):
        self.index = index
        self.value = value
        super().__init__(f"coefficient {index} is {value!r}, expected an integer")


@dataclass(frozen=True)
class EnumeratorPoly:
    """Homogeneous two-variable polynomial; coefficient i sits on x^(n-i) y^i."""

    n: int
    coeffs: tuple[Number, ...]

    def __post_init__(self):
        if len(self.coeffs) != self.n + 1:
            raise ValueError("need exactly n + 1 coefficients")

    def coefficient(self, i: int) -> Number:
        return self.coeffs[i]

    def evaluate(self, x: complex, y: complex) -> complex:
        return sum(
            c * x ** (self.n - i) * y**i for i, c in enumerate(self.coeffs) if c
        )

    def __str__(self) -> str:
        parts = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            xs = f"x^{self.n - i}" if self.n - i > 1 else ("x" if self.n - i else "")
            ys = f"y^{i}" if i > 1 else ("y" if i else "")
            mono = "".join(p for p in (xs, ys) if p) or "1"
            parts.append(f"{c}{'*' + mono if mono != '1' else ''}")
        return " + ".join(parts) if parts else "0"


def _snap(value: float, index: int, strict: bool) -> Number:
    """Round to the nearest integer within the relative gate, or complain."""
    r = round(value)
    if abs(value - r) <= INTEGER_TOLERANCE * max(1.0, abs(value)):
        return int(r)
    if strict:
        raise NonIntegerCoefficient(index, value)
    return value


def _weight_bins(pcs: ParityCheckSystem, budget: int) -> list[ExponentSum]:
    """Exact sum of |Fourier coefficient|^2 per weight over the row span of H."""
    L = pcs.spec.char_order
    bins = [ExponentSum.zero(L) for _ in range(pcs.n + 1)]
    for h in pcs.row_module.enumerate(budget):
        es = fourier_coeff_pcs(pcs, h)
        bins[weight(h)] = bins[weight(h)] + es * es.conjugate()
    return bins


def pcs_enumerator_poly(
    pcs: ParityCheckSystem, budget: int = DEFAULT_BUDGET
) -> EnumeratorPoly:
    """The system polynomial N(x, y); coefficients snap to ints when they are."""
    coeffs = []
    for i, b in enumerate(_weight_bins(pcs, budget)):
        v = b.evaluate()
        if abs(v.imag) > INTEGER_TOLERANCE * max(1.0, abs(v.real)):
            raise NonIntegerCoefficient(i, v.imag)
        value = v.real
        r = round(value)
        if abs(value - r) <= INTEGER_TOLERANCE * max(1.0, abs(value)):
            coeffs.append(int(r))
        else:
            coeffs.append(value)
    return EnumeratorPoly(pcs.n, tuple(coeffs))


def _binomial_substitution(coeffs: Sequence[Number], q: int, n: int) -> list[Number]:
    """Coefficients of sum_w c_w (x + (q-1) y)^(n-w) (x - y)^w, exact for ints."""
    out: list[Number] = [0] * (n + 1)
    a = q - 1
    for w, c in enumerate(coeffs):
        if not c:
            continue
        left = [math.comb(n - w, i) * a**i for i in range(n - w + 1)]
        right = [math.comb(w, i) * (-1) ** i for i in range(w + 1)]
        for i, li in enumerate(left):
            if not li:
                continue
            for j, rj in enumerate(right):
                out[i + j] += c * li * rj
    return out


def distance_distribution(
    pcs: ParityCheckSystem, budget: int = DEFAULT_BUDGET
) -> EnumeratorPoly:
    """Ordered-pair distance counts D_0..D_n as exact integers.

    Raises NonIntegerCoefficient when any coefficient deviates from an
    integer by more than the relative gate, which a valid system never
    produces.
    """
    npoly = pcs_enumerator_poly(pcs, budget)
    q = pcs.spec.cardinality
    raw = _binomial_substitution(npoly.coeffs, q, pcs.n)
    denom = q**pcs.n
    coeffs = []
    for i, v in enumerate(raw):
        if isinstance(v, int):
            quot, rem = divmod(v, denom)
            if rem:
                raise NonIntegerCoefficient(i, v / denom)
            coeffs.append(quot)
        else:
            coeffs.append(_snap(v / denom, i, strict=True))
    return EnumeratorPoly(pcs.n, tuple(coeffs))


def macwilliams_transform(poly: EnumeratorPoly, q: int, divisor: int) -> EnumeratorPoly:
    """(1/divisor) * poly(x + (q-1) y, x - y), demanding integer output."""
    raw = _binomial_substitution(poly.coeffs, q, poly.n)
    coeffs = []
    for i, v in enumerate(raw):
        if isinstance(v, int):
            quot, rem = divmod(v, divisor)
            if rem:
                raise NonIntegerCoefficient(i, v / divisor)
            coeffs.append(quot)
        else:
            coeffs.append(_snap(v / divisor, i, strict=True))
    return EnumeratorPoly(poly.n, tuple(coeffs))


def weight_enumerator_linear(
    pcs: ParityCheckSystem, budget: int = DEFAULT_BUDGET
) -> EnumeratorPoly:
    """Weight enumerator of a linear code, cross-checked along two routes.

    Route one divides the distance distribution by |C|.  Route two builds
    the actual dual code (the annihilator of the module the code spans) and
    MacWilliams-transforms its weight enumerator.  The routes must agree
    coefficient by coefficient; a mismatch means a bug, not bad input.
    """
    if not is_linear(pcs):
        raise ValueError("the code of this system is not linear")
    dd = distance_distribution(pcs, budget)
    size = pcs.code_cardinality()
    direct = []
    for i, v in enumerate(dd.coeffs):
        quot, rem = divmod(int(v), size)
        if rem:
            raise NonIntegerCoefficient(i, v / size)
        direct.append(quot)
    direct_poly = EnumeratorPoly(pcs.n, tuple(direct))

    pres = pcs_to_code(pcs)
    code_module = Submodule.from_generators(
        pcs.spec,
        pcs.n,
        pcs.kernel_module.canonical_generators() + pres.representatives,
    )
    if code_module.cardinality != size:  # pragma: no cover - guarded by is_linear
        raise AssertionError("linear code does not span its own cardinality")
    dual = code_module.annihilator()
    counts = [0] * (pcs.n + 1)
    for y in dual.enumerate(budget):
        counts[weight(y)] += 1
    dual_poly = EnumeratorPoly(pcs.n, tuple(counts))
    via_dual = macwilliams_transform(dual_poly, pcs.spec.cardinality, dual.cardinality)
    if direct_poly != via_dual:
        raise AssertionError(
            f"enumerator routes disagree: {direct_poly} vs {via_dual}"
        )
    return direct_poly
