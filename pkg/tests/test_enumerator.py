"""System polynomial, distance distribution, MacWilliams cross-checks."""

import random

import pytest

from ringcodes import (
    CodePresentation,
    EnumeratorPoly,
    NonIntegerCoefficient,
    Submodule,
    code_to_pcs,
    distance_distribution,
    macwilliams_transform,
    min_distance,
    oracle_code_from_pcs,
    oracle_distance_distribution,
    parse_ring,
    pcs_enumerator_poly,
    validate_pcs,
    weight_enumerator_linear,
    zero_vec,
)
from conftest import Z6, code_words, random_instance, random_vec, rv

Z6_DISTANCE_DISTRIBUTION = (216, 0, 6480, 17280, 22680)


def test_system_polynomial_golden(z6_pcs):
    npoly = pcs_enumerator_poly(z6_pcs)
    assert npoly.coeffs == (46656, 0, 0, 0, 233280)
    assert npoly.n == 4
    # weight-0 term is |C|^2, total N(1,1) is |R|^n * D(1,1) / |R|^n ...
    assert npoly.coeffs[0] == 216**2


def test_distance_distribution_golden(z6_pcs):
    dd = distance_distribution(z6_pcs)
    assert dd.coeffs == Z6_DISTANCE_DISTRIBUTION
    assert dd.coeffs == tuple(
        oracle_distance_distribution(oracle_code_from_pcs(z6_pcs))
    )
    # sanity identities: D_0 = |C|, sum D_i = |C|^2, first gap = min distance
    assert dd.coeffs[0] == 216
    assert sum(dd.coeffs) == 216**2
    assert min(i for i, c in enumerate(dd.coeffs) if i and c) == min_distance(
        z6_pcs
    )


def test_distribution_matches_histogram_random():
    rng = random.Random(424242)
    for _ in range(25):
        pcs, _ = random_instance(rng, space_cap=500)
        dd = distance_distribution(pcs)
        hist = oracle_distance_distribution(oracle_code_from_pcs(pcs))
        assert list(dd.coeffs) == hist
        assert dd.coeffs[0] == pcs.code_cardinality()
        assert sum(dd.coeffs) == pcs.code_cardinality() ** 2
        if pcs.code_cardinality() > 1:
            first = min(i for i, c in enumerate(dd.coeffs) if i and c)
            assert first == min_distance(pcs)


def test_trivial_checks_give_full_space_distribution():
    spec = parse_ring("Z4")
    pcs = validate_pcs(
        [zero_vec(spec, 2), zero_vec(spec, 2)],
        [rv(spec, (0,)), rv(spec, (0,))],
    )
    npoly = pcs_enumerator_poly(pcs)
    assert npoly.coeffs == (16**2, 0, 0)
    dd = distance_distribution(pcs)
    # all ordered pairs of R^2, counted by distance
    assert dd.coeffs == (16, 2 * 16 * 3, 16 * 9)


def test_enumerator_poly_str_and_eval():
    poly = EnumeratorPoly(2, (1, 0, 3))
    assert str(poly) == "1*x^2 + 3*y^2"
    assert poly.evaluate(2, 1) == 7
    assert EnumeratorPoly(1, (0, 0)).evaluate(5, 5) == 0
    assert str(EnumeratorPoly(1, (0, 0))) == "0"
    with pytest.raises(ValueError):
        EnumeratorPoly(2, (1, 0))


def test_macwilliams_transform_rejects_non_integers():
    poly = EnumeratorPoly(1, (1, 1))
    with pytest.raises(NonIntegerCoefficient):
        macwilliams_transform(poly, 2, 7)


def test_macwilliams_involution_on_binary_repetition():
    # W(C) for C = {00, 11} in Z2^2; its dual is itself
    poly = EnumeratorPoly(2, (1, 0, 1))
    dual = macwilliams_transform(poly, 2, 2)
    assert dual.coeffs == (1, 0, 1)


def test_weight_enumerator_full_space():
    spec = parse_ring("Z2")
    full = Submodule.from_generators(spec, 2, [rv(spec, (1, 0)), rv(spec, (0, 1))])
    pcs = code_to_pcs(CodePresentation(full, (zero_vec(spec, 2),)))
    w = weight_enumerator_linear(pcs)
    assert w.coeffs == (1, 2, 1)  # (x + y)^2


def test_weight_enumerator_trivial_code():
    spec = parse_ring("Z6")
    trivial = Submodule.from_generators(spec, 3, [])
    pcs = code_to_pcs(CodePresentation(trivial, (zero_vec(spec, 3),)))
    assert weight_enumerator_linear(pcs).coeffs == (1, 0, 0, 0)


def test_weight_enumerator_split_presentation():
    # the linear code span{(1,1),(2,0)} in Z4^2 presented as two cosets
    spec = parse_ring("Z4")
    D = Submodule.from_generators(spec, 2, [rv(spec, (2, 0)), rv(spec, (0, 2))])
    pres = CodePresentation(D, (zero_vec(spec, 2), rv(spec, (1, 1))))
    pcs = code_to_pcs(pres)
    w = weight_enumerator_linear(pcs)
    # words: 00, 20, 02, 22, 11, 31, 13, 33 -> weights 0,1,1,2,2,2,2,2
    assert w.coeffs == (1, 2, 5)


def test_weight_enumerator_rejects_nonlinear(z6_pcs):
    with pytest.raises(ValueError):
        weight_enumerator_linear(z6_pcs)


def test_weight_enumerator_counts_weights_random():
    from ringcodes import is_linear, weight

    rng = random.Random(140)
    done = 0
    for _ in range(400):
        if done == 15:
            break
        pcs, pres = random_instance(rng, space_cap=400)
        if not is_linear(pcs):
            continue
        w = weight_enumerator_linear(pcs)
        counts = [0] * (pcs.n + 1)
        for c in code_words(pres):
            counts[weight(c)] += 1
        assert list(w.coeffs) == counts
        done += 1
    assert done == 15
