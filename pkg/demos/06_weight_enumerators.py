"""Weight enumerators and the distance distribution.

N(x, y) bins the squared magnitudes of the code's Fourier coefficients
by weight of the dual point; substituting (x + (q-1)y, x - y) and
dividing by q^n turns it into the distance distribution D(x, y), whose
i-th coefficient counts ordered codeword pairs at distance i.  All of
this is exact integer arithmetic — any non-integer coefficient would be
reported as an error rather than rounded away.

For linear codes D/|C| is the classical weight enumerator, and the
MacWilliams identity ties it to the enumerator of the dual code.
"""

from ringcodes import (
    EnumeratorPoly,
    RingVec,
    Submodule,
    CodePresentation,
    code_to_pcs,
    distance_distribution,
    is_linear,
    macwilliams_transform,
    min_distance,
    parse_ring,
    pcs_enumerator_poly,
    validate_pcs,
    weight,
    weight_enumerator_linear,
    zero_vec,
)


def main() -> None:
    z6 = parse_ring("Z6")
    pcs = validate_pcs(
        [RingVec.of(z6, [1, 1, 3, 5]), RingVec.of(z6, [0, 4, 2, 2])],
        [RingVec.of(z6, [0, 1, 5]), RingVec.of(z6, [0, 2, 4])],
    )

    print("== the showcase system over Z6 ==")
    N = pcs_enumerator_poly(pcs)
    D = distance_distribution(pcs)
    print(f"N(x, y) = {N}")
    print(f"D(x, y) = {D}")
    size = pcs.code_cardinality()
    print(f"D_0 = |C| = {D.coefficient(0)}, "
          f"sum of D_i = |C|^2 = {sum(D.coeffs)} = {size}^2")
    d = min_distance(pcs)
    first = min(i for i, c in enumerate(D.coeffs) if i and c)
    print(f"first positive index {first} == minimum distance {d}")
    print(f"(the code is linear: {is_linear(pcs)})")

    print()
    print("== MacWilliams identity for a linear code over Z4 ==")
    z4 = parse_ring("Z4")
    M = Submodule.from_generators(
        z4, 2, [RingVec.of(z4, [2, 0]), RingVec.of(z4, [0, 2])]
    )
    pres = CodePresentation(M, (zero_vec(z4, 2),))
    lin = code_to_pcs(pres)
    W = weight_enumerator_linear(lin)
    print(f"code = <(2,0), (0,2)> in Z4^2, W(x, y) = {W}")

    dual = M.annihilator()
    counts = [0] * 3
    for v in dual.enumerate():
        counts[weight(v)] += 1
    W_dual = EnumeratorPoly(2, tuple(counts))
    print(f"dual code has {dual.cardinality} words, "
          f"W_dual(x, y) = {W_dual}")
    back = macwilliams_transform(W_dual, 4, dual.cardinality)
    print(f"MacWilliams transform of W_dual: {back}")
    print(f"identity holds coefficientwise: {back.coeffs == W.coeffs}")


if __name__ == "__main__":
    main()
