"""Submodules of R^n, canonical generators, and annihilator duality.

A submodule is stored as one Howell normal form per ring factor, which
gives a canonical matrix: two generating sets span the same submodule
exactly when their canonical forms coincide.  The annihilator
D^perp = {x : x . d = 0 for all d in D} plays the role of the dual, and
over these rings |D| * |D^perp| always equals |R^n|.
"""

import random

from ringcodes import RingVec, Submodule, dot, parse_ring


def main() -> None:
    z6 = parse_ring("Z6")

    gens = [
        RingVec.of(z6, [2, 1, 1, 0]),
        RingVec.of(z6, [0, 1, 0, 1]),
        RingVec.of(z6, [3, 0, 3, 0]),
    ]
    D = Submodule.from_generators(z6, 4, gens)
    print("== a submodule of Z6^4 ==")
    print(f"generators: {[str(g) for g in gens]}")
    print(f"cardinality: {D.cardinality}")
    print("canonical generators (independent of the generating set):")
    for row in D.canonical_generators():
        print(f"  {row}")

    shuffled = Submodule.from_generators(
        z6, 4, [gens[2], gens[0], gens[1], gens[0]]
    )
    print(f"same module from shuffled redundant generators: {shuffled == D}")

    print()
    print("== annihilator ==")
    dual = D.annihilator()
    print(f"|D| = {D.cardinality}, |D^perp| = {dual.cardinality}, "
          f"product = {D.cardinality * dual.cardinality} = 6^4")
    print("D^perp generators:")
    for row in dual.canonical_generators():
        print(f"  {row}")
    sample = next(iter(dual.enumerate()))
    checks = all(dot(x, d).is_zero() for x in dual.enumerate()
                 for d in D.enumerate())
    print(f"every pairing x . d vanishes: {checks} "
          f"(e.g. {sample} pairs to zero with all of D)")
    print(f"double annihilator returns D: {dual.annihilator() == D}")

    print()
    print("== the law |D| * |D^perp| = |R|^n on random modules ==")
    rng = random.Random(7)
    for name in ("Z4", "Z2xZ3", "Z8", "Z6"):
        spec = parse_ring(name)
        n = rng.randint(1, 3)
        elements = list(spec.elements())
        gens = [
            RingVec.of(spec, [rng.choice(elements) for _ in range(n)])
            for _ in range(rng.randint(0, 2))
        ]
        M = Submodule.from_generators(spec, n, gens)
        Mp = M.annihilator()
        total = spec.cardinality ** n
        print(f"  {name:>5}, n={n}: |M|={M.cardinality:>3} "
              f"|M^perp|={Mp.cardinality:>3} product={total}")
        assert M.cardinality * Mp.cardinality == total


if __name__ == "__main__":
    main()
