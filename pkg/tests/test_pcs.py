"""System validation, code conversion, membership, kernels, linearity."""

import random

import pytest

from ringcodes import (
    CodePresentation,
    ConditionIIIViolation,
    ConditionIIViolation,
    ConditionIViolation,
    ParityCheckSystem,
    RingVec,
    Submodule,
    code_to_pcs,
    dot,
    enumerate_vectors,
    is_linear,
    kernel,
    member,
    oracle_code_from_pcs,
    oracle_is_linear,
    oracle_kernel,
    oracle_validate,
    parse_ring,
    pcs_to_code,
    scale,
    validate_pcs,
    vec_add,
    vec_sub,
    zero_vec,
)
from conftest import (
    Z6,
    Z6_H,
    Z6_REPS,
    Z6_S_ROWS,
    build_z6_pcs,
    build_z6_presentation,
    code_words,
    random_instance,
    random_vec,
    rv,
)


def test_golden_system_validates(z6_pcs):
    assert z6_pcs.m == 2 and z6_pcs.n == 4 and z6_pcs.s == 3
    assert z6_pcs.kernel_module.cardinality == 72
    assert z6_pcs.row_module.cardinality == 18
    assert z6_pcs.code_cardinality() == 216


def test_condition_i_violation_appended_column():
    s_rows = [rv(Z6, (0, 1, 5, 1)), rv(Z6, (0, 2, 4, 1))]
    with pytest.raises(ConditionIViolation) as exc:
        validate_pcs([rv(Z6, h) for h in Z6_H], s_rows)
    assert exc.value.row == 2
    assert exc.value.col == 4


def test_condition_ii_violation_duplicate_columns():
    s_rows = [rv(Z6, (0, 0)), rv(Z6, (0, 0))]
    with pytest.raises(ConditionIIViolation) as exc:
        validate_pcs([rv(Z6, h) for h in Z6_H], s_rows)
    assert (exc.value.col_a, exc.value.col_b) == (1, 2)


def test_condition_iii_violation_broken_dependency():
    # rows (1,1) and (2,2) over Z6 satisfy 4*h1 + h2 = 0, so S must obey it
    h_rows = [rv(Z6, (1, 1)), rv(Z6, (2, 2))]
    s_rows = [rv(Z6, (0, 1)), rv(Z6, (0, 0))]
    with pytest.raises(ConditionIIIViolation) as exc:
        validate_pcs(h_rows, s_rows)
    w = exc.value.witness
    # the witness really is a dependency of H's rows that S's rows break
    assert vec_add(scale(w[0], h_rows[0]), scale(w[1], h_rows[1])) == zero_vec(Z6, 2)
    assert vec_add(scale(w[0], s_rows[0]), scale(w[1], s_rows[1])) != zero_vec(Z6, 2)


def test_validate_requires_consistent_shapes():
    with pytest.raises(ValueError):
        ParityCheckSystem([], [])
    with pytest.raises(ValueError):
        ParityCheckSystem([rv(Z6, (1, 2))], [])
    with pytest.raises(ValueError):
        ParityCheckSystem([rv(Z6, (1, 2))], [rv(Z6, (0,)), rv(Z6, (0,))])
    with pytest.raises(ValueError):
        ParityCheckSystem(
            [rv(Z6, (1, 2)), rv(Z6, (1,))], [rv(Z6, (0,)), rv(Z6, (0,))]
        )


def test_syndrome_and_member_golden(z6_pcs):
    assert z6_pcs.syndrome(rv(Z6, (5, 0, 0, 1))) == rv(Z6, (4, 2))
    assert member(z6_pcs, rv(Z6, (5, 2, 0, 0))) == 2
    assert member(z6_pcs, rv(Z6, (0, 0, 0, 0))) == 1
    assert member(z6_pcs, rv(Z6, (1, 0, 0, 0))) is None


def test_member_agrees_with_scan_on_golden(z6_pcs):
    words = oracle_code_from_pcs(z6_pcs).words
    hits = 0
    for x in enumerate_vectors(Z6, 4):
        j = member(z6_pcs, x)
        assert (j is not None) == (x in words)
        hits += j is not None
    assert hits == 216


def test_pcs_to_code_recovers_the_cosets(z6_pcs):
    pres = pcs_to_code(z6_pcs)
    assert pres.kernel.cardinality == 72
    assert pres.s == 3
    assert pres.cardinality == 216
    # each recovered representative lies in the documented coset
    for got, expected in zip(pres.representatives, Z6_REPS):
        assert pres.kernel.contains(vec_sub(got, rv(Z6, expected)))
    # and H maps representative j onto syndrome column j
    for j, d in enumerate(pres.representatives):
        assert z6_pcs.syndrome(d) == z6_pcs.s_cols[j]


def test_code_to_pcs_golden_presentation(z6_pres):
    pcs = code_to_pcs(z6_pres)
    assert pcs.s == 3
    assert pcs.kernel_module == z6_pres.kernel
    assert pcs.code_cardinality() == 216
    # same code as the hand-written system: identical word sets
    direct = build_z6_pcs()
    assert oracle_code_from_pcs(pcs).words == oracle_code_from_pcs(direct).words


def test_code_to_pcs_with_supplied_rows(z6_pres):
    # with the documented H rows the documented syndrome matrix comes back
    pcs = code_to_pcs(z6_pres, dual_gens=[rv(Z6, h) for h in Z6_H])
    assert pcs.h_rows == tuple(rv(Z6, h) for h in Z6_H)
    assert pcs.s_rows == (rv(Z6, (0, 1, 5)), rv(Z6, (0, 2, 4)))
    # supplied rows must generate exactly the dual
    with pytest.raises(ValueError):
        code_to_pcs(z6_pres, dual_gens=[rv(Z6, (1, 1, 3, 5))])


def test_code_to_pcs_trivial_dual():
    spec = parse_ring("Z4")
    full = Submodule.from_generators(
        spec, 2, [rv(spec, (1, 0)), rv(spec, (0, 1))]
    )
    pcs = code_to_pcs(CodePresentation(full, (zero_vec(spec, 2),)))
    assert pcs.m == 1
    assert pcs.h_rows[0] == zero_vec(spec, 2)
    assert pcs.code_cardinality() == 16


def test_presentation_rejects_clashing_cosets():
    kernel = Submodule.from_generators(Z6, 2, [rv(Z6, (0, 3))])
    with pytest.raises(ValueError):
        CodePresentation(kernel, (rv(Z6, (1, 0)), rv(Z6, (1, 3))))


def test_round_trips_random():
    rng = random.Random(777001)
    for _ in range(40):
        pcs, pres = random_instance(rng)
        # system -> presentation -> system presents the same code
        back = code_to_pcs(pcs_to_code(pcs))
        assert back.kernel_module == pcs.kernel_module
        for x in enumerate_vectors(pcs.spec, pcs.n):
            assert member(pcs, x) == member(back, x)
        # presentation -> system -> presentation recovers the cosets in order
        pres2 = pcs_to_code(code_to_pcs(pres))
        assert pres2.kernel == pres.kernel
        for a, b in zip(pres2.representatives, pres.representatives):
            assert pres.kernel.contains(vec_sub(a, b))


def test_member_matches_scan_random():
    rng = random.Random(5)
    for _ in range(25):
        pcs, pres = random_instance(rng, space_cap=700)
        words = code_words(pres)
        for x in enumerate_vectors(pcs.spec, pcs.n):
            assert (member(pcs, x) is not None) == (x in words)


def test_kernel_golden_equals_check_kernel(z6_pcs):
    ker = kernel(z6_pcs)
    assert ker.cardinality == 72
    assert ker == z6_pcs.kernel_module


def test_kernel_of_linear_code_is_the_code_itself():
    # C = span{(1,1),(2,0)} in Z4^2 written as two cosets of a smaller module
    spec = parse_ring("Z4")
    D = Submodule.from_generators(spec, 2, [rv(spec, (2, 0)), rv(spec, (0, 2))])
    pres = CodePresentation(D, (zero_vec(spec, 2), rv(spec, (1, 1))))
    pcs = code_to_pcs(pres)
    assert is_linear(pcs)
    ker = kernel(pcs)
    assert ker.cardinality == 8
    assert set(ker.enumerate()) == code_words(pres)


def test_kernel_matches_scan_random():
    rng = random.Random(1337)
    for _ in range(30):
        pcs, pres = random_instance(rng, space_cap=400)
        expected = oracle_kernel(oracle_code_from_pcs(pcs))
        assert set(kernel(pcs).enumerate()) == set(expected)


def test_is_linear_golden_and_random(z6_pcs):
    assert not is_linear(z6_pcs)
    rng = random.Random(99)
    for _ in range(30):
        pcs, pres = random_instance(rng, space_cap=400)
        assert is_linear(pcs) == oracle_is_linear(oracle_code_from_pcs(pcs))


def test_validate_agrees_with_exhaustive_checks():
    rng = random.Random(246810)
    checked = 0
    for _ in range(40):
        pcs, _ = random_instance(rng, space_cap=300, max_n=3)
        h_rows, s_rows = list(pcs.h_rows), list(pcs.s_rows)
        roll = rng.random()
        if roll < 0.4:
            # duplicate an existing column
            j = rng.randrange(pcs.s)
            s_rows = [
                RingVec.of(pcs.spec, list(r) + [r[j]]) for r in s_rows
            ]
        elif roll < 0.8:
            # bump one entry of S by a random nonzero element
            i = rng.randrange(pcs.m)
            j = rng.randrange(pcs.s)
            bump = random_vec(rng, pcs.spec, 1)[0]
            row = list(s_rows[i])
            row[j] = row[j] + bump
            s_rows[i] = RingVec.of(pcs.spec, row)
        try:
            validate_pcs(h_rows, s_rows)
            got = None
        except ConditionIViolation as exc:
            got = (1, (exc.row, exc.col))
        except ConditionIIViolation as exc:
            got = (2, (exc.col_a, exc.col_b))
        except ConditionIIIViolation:
            got = (3, None)
        expected = oracle_validate(h_rows, s_rows)
        if expected is None:
            assert got is None
        else:
            assert got is not None
            assert got[0] == expected[0]
            if got[0] in (1, 2) and got[1] is not None:
                assert got[1] == expected[1]
        checked += 1
    assert checked == 40


def test_trivial_check_matrix_accepts_everything():
    spec = parse_ring("Z4")
    h_rows = [zero_vec(spec, 2), zero_vec(spec, 2)]
    s_rows = [rv(spec, (0,)), rv(spec, (0,))]
    pcs = validate_pcs(h_rows, s_rows)
    assert pcs.code_cardinality() == 16
    for x in enumerate_vectors(spec, 2):
        assert member(pcs, x) == 1


def test_repr_smoke(z6_pcs):
    assert "Z6" in repr(z6_pcs)
    assert "216" in repr(pcs_to_code(z6_pcs))
