"""Parity check systems: validation, membership, and code conversions.

A parity check system is a pair of matrices (H | S) over a finite ring.
The code it describes is {x : H x^T is a column of S} — a union of s
cosets of ker(H), one per column.  Validation enforces three conditions:

  (i)   every entry of S lies in the ideal generated by its row of H,
  (ii)  the columns of S are pairwise distinct,
  (iii) every dependency among the rows of H also kills the rows of S.

Together these make the syndrome-to-column map well defined and
collision free, so membership testing is a single syndrome lookup.
"""

from ringcodes import (
    ConditionIViolation,
    RingVec,
    code_to_pcs,
    is_linear,
    kernel,
    member,
    parse_ring,
    pcs_to_code,
    validate_pcs,
)


def main() -> None:
    z6 = parse_ring("Z6")
    h_rows = [RingVec.of(z6, [1, 1, 3, 5]), RingVec.of(z6, [0, 4, 2, 2])]
    s_rows = [RingVec.of(z6, [0, 1, 5]), RingVec.of(z6, [0, 2, 4])]

    print("== validation ==")
    pcs = validate_pcs(h_rows, s_rows)
    print(f"H is {pcs.m} x {pcs.n}, S is {pcs.m} x {pcs.s} over {pcs.spec}")
    print(f"|ker H| = {pcs.kernel_module.cardinality}, "
          f"columns s = {pcs.s}, so |C| = {pcs.code_cardinality()}")

    try:
        validate_pcs(h_rows, [RingVec.of(z6, [0, 1, 5, 1]),
                              RingVec.of(z6, [0, 2, 4, 1])])
    except ConditionIViolation as exc:
        print(f"appending column (1,1) fails: {exc}")

    print()
    print("== membership by syndrome lookup ==")
    for coords in ((5, 2, 0, 0), (0, 0, 0, 0), (1, 0, 0, 0)):
        x = RingVec.of(z6, coords)
        j = member(pcs, x)
        verdict = f"coset {j}" if j else "not in the code"
        print(f"  {x}: syndrome {pcs.syndrome(x)} -> {verdict}")

    print()
    print("== system -> code -> system round trip ==")
    pres = pcs_to_code(pcs)
    print(f"kernel cardinality {pres.kernel.cardinality}, "
          f"{pres.s} coset representatives:")
    for r in pres.representatives:
        print(f"  {r}")
    back = code_to_pcs(pres)
    same = all(
        member(back, x) == member(pcs, x)
        for x in pres.kernel.enumerate()
    )
    print(f"round trip preserves membership on the kernel: {same}")

    print()
    print("== kernel and linearity ==")
    K = kernel(pcs)
    print(f"the kernel of the code (translations preserving it) has "
          f"{K.cardinality} elements")
    print(f"is the code linear (a submodule)? {is_linear(pcs)}")
    print(f"kernel == ker(H)? {K == pcs.kernel_module} "
          f"(ker H always sits inside)")


if __name__ == "__main__":
    main()
