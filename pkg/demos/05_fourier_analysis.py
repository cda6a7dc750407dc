"""Fourier coefficients of a code, computed two independent ways.

Every ring here carries a generating character: a -> zeta_L^eps(a) with
L the characteristic.  The Fourier coefficient of a code C at a point x
is sum over the dual support, and it can be computed either

  * from a coset presentation: |ker H| * sum_j zeta^(-eps(x . rep_j)), or
  * from the system itself:  (|R|^n / |row span H|) * sum_j zeta^(-eps(S_x(j)))

where S_x is the row combination of S matching x's combination of H's
rows.  Both land in exact cyclotomic integer sums, so the agreement is
literal, not approximate.  Poisson summation then turns sums over the
code into sums over the dual support.
"""

from ringcodes import (
    RingVec,
    fourier_coeff_coset,
    fourier_coeff_pcs,
    generating_character,
    parse_ring,
    pcs_to_code,
    poisson_sum,
    validate_pcs,
    vec_add,
    weight,
)


def main() -> None:
    print("== generating characters ==")
    for name in ("Z6", "Z2xZ3", "Z2xZ2"):
        spec = parse_ring(name)
        chi = generating_character(spec)
        samples = ", ".join(
            f"eps({a}) = {chi.exponent(a)}"
            for a in list(spec.elements())[:4]
        )
        print(f"  {name:>5} (order {chi.order}): {samples}")

    z6 = parse_ring("Z6")
    pcs = validate_pcs(
        [RingVec.of(z6, [1, 1, 3, 5]), RingVec.of(z6, [0, 4, 2, 2])],
        [RingVec.of(z6, [0, 1, 5]), RingVec.of(z6, [0, 2, 4])],
    )
    pres = pcs_to_code(pcs)

    print()
    print("== the transform over the dual support ==")
    print("x".ljust(14), "via cosets".rjust(12), "via system".rjust(12))
    for x in sorted(pcs.row_module.enumerate(), key=lambda v: v.coords):
        a = fourier_coeff_coset(pres, x)
        b = fourier_coeff_pcs(pcs, x)
        assert a == b, "the two routes are exactly equal exponent sums"
        va, vb = a.evaluate(), b.evaluate()
        ra = 0.0 if abs(va.real) < 1e-9 else va.real
        rb = 0.0 if abs(vb.real) < 1e-9 else vb.real
        print(str(x).ljust(14), f"{ra:12.6f}", f"{rb:12.6f}",
              "" if abs(va.imag) > 1e-9 else "  (real)")

    print()
    print("== Poisson summation ==")
    x0, y0 = 0.75, 0.25
    direct = sum(
        x0 ** (pres.n - weight(vec_add(k, r))) * y0 ** weight(vec_add(k, r))
        for k in pres.kernel.enumerate()
        for r in pres.representatives
    )
    via_dual = poisson_sum(
        pres, lambda v: x0 ** (pres.n - weight(v)) * y0 ** weight(v)
    )
    print(f"f(v) = {x0}^(n - wt v) * {y0}^(wt v) summed over all "
          f"{pres.cardinality} codewords:")
    print(f"  direct:            {direct:.12f}")
    print(f"  via the dual side: {via_dual.real:.12f} "
          f"(a sum over just {pres.dual_module().cardinality} points)")


if __name__ == "__main__":
    main()
