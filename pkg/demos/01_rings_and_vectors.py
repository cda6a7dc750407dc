"""Tour of the base rings and vector arithmetic.

Rings here are finite direct products Z_{t1} x ... x Z_{tk}, written as
strings like "Z6" or "Z2xZ3".  Elements keep one residue per factor, so
Z4 and Z2xZ2 stay distinct rings even though both have four elements.
"""

from ringcodes import (
    RingVec,
    dot,
    hamming,
    parse_ring,
    scale,
    vec_add,
    vec_sub,
    weight,
)


def main() -> None:
    z6 = parse_ring("Z6")
    z23 = parse_ring("Z2xZ3")
    z4 = parse_ring("Z4")
    z22 = parse_ring("Z2xZ2")

    print("== ring specs ==")
    for spec in (z6, z23, z4, z22):
        print(f"{str(spec):>6}: {spec.cardinality} elements, "
              f"characteristic {spec.char_order}")

    print()
    print("== Z4 is not Z2xZ2 ==")
    two_z4 = z4.elem(2)
    print(f"in Z4:    2 + 2 = {two_z4 + two_z4}   (2 has additive order 2, "
          f"but 1+1 = {z4.one() + z4.one()} != 0)")
    one_z22 = z22.one()
    print(f"in Z2xZ2: 1 + 1 = {one_z22 + one_z22}   (every element doubles "
          f"to zero)")

    print()
    print("== vectors over Z6 ==")
    x = RingVec.of(z6, [1, 4, 0, 0])
    y = RingVec.of(z6, [5, 0, 0, 1])
    print(f"x       = {x}")
    print(f"y       = {y}")
    print(f"x + y   = {vec_add(x, y)}")
    print(f"x - y   = {vec_sub(x, y)}")
    print(f"3 * x   = {scale(z6.elem(3), x)}")
    print(f"x . y   = {dot(x, y)}")
    print(f"wt(x)   = {weight(x)}  (number of nonzero coordinates)")
    print(f"d(x, y) = {hamming(x, y)}  (= wt(x - y))")

    print()
    print("== product coordinates ==")
    v = RingVec.of(z23, [(1, 2), (0, 1), (1, 0)])
    print(f"v = {v} over {z23}")
    print(f"  Z2 component: {v.component(0)}")
    print(f"  Z3 component: {v.component(1)}")


if __name__ == "__main__":
    main()
