import random
from fractions import Fraction

import pytest

from stratachain import (GroundCapError, SignedVector, Stratification,
                         assemble, builtin_complex,
                         canonical_reorientation_class, complex_matroid,
                         enumerate_circuits, top_cycle_matroid)
from stratachain.matroid import _min_encoding, circuit_pairs

from oracles import brute_circuit_set, naive_min_encoding, random_subspace


def as_sign_pairs(circuits):
    return {(c.positive, c.negative) for c in circuits}


def test_signed_vector_operations():
    v = SignedVector.from_vector((3, 0, -2, 1))
    assert v.n == 4
    assert v.positive == frozenset({0, 3})
    assert v.negative == frozenset({2})
    assert v.support == frozenset({0, 2, 3})
    assert v.negate() == SignedVector(4, frozenset({2}), frozenset({0, 3}))
    assert v.flip([0]) == SignedVector(4, frozenset({3}), frozenset({0, 2}))
    w = v.permute({0: 1, 1: 0, 2: 3, 3: 2})
    assert w == SignedVector(4, frozenset({1, 2}), frozenset({3}))


def test_circuits_of_line():
    circuits = enumerate_circuits([(1, 1)], 2)
    assert as_sign_pairs(circuits) == {
        (frozenset({0, 1}), frozenset()), (frozenset(), frozenset({0, 1}))}


def test_circuits_of_axis():
    circuits = enumerate_circuits([(1, 0)], 2)
    assert as_sign_pairs(circuits) == {
        (frozenset({0}), frozenset()), (frozenset(), frozenset({0}))}


def test_circuits_of_plane():
    circuits = enumerate_circuits([(1, 0, -1), (0, 1, -1)], 3)
    assert as_sign_pairs(circuits) == {
        (frozenset({0}), frozenset({2})), (frozenset({2}), frozenset({0})),
        (frozenset({1}), frozenset({2})), (frozenset({2}), frozenset({1})),
        (frozenset({0}), frozenset({1})), (frozenset({1}), frozenset({0}))}


def test_zero_space_has_no_circuits():
    assert enumerate_circuits([], 3) == []
    assert enumerate_circuits([(0, 0, 0)], 3) == []


def test_circuits_accept_rational_entries():
    circuits = enumerate_circuits([(Fraction(1, 2), Fraction(-1, 3))], 2)
    assert as_sign_pairs(circuits) == {
        (frozenset({0}), frozenset({1})), (frozenset({1}), frozenset({0}))}


def test_circuits_match_brute_force_oracle():
    rng = random.Random(8451)
    for _ in range(40):
        basis, n = random_subspace(rng, max_n=8)
        got = as_sign_pairs(enumerate_circuits(basis, n))
        assert got == brute_circuit_set(basis, n)


def test_min_encoding_equals_naive_full_scan():
    rng = random.Random(5230)
    for _ in range(40):
        basis, n = random_subspace(rng, max_n=7)
        circuits = enumerate_circuits(basis, n)
        pairs = circuit_pairs(circuits)
        assert _min_encoding(pairs, n) == naive_min_encoding(pairs, n)


def test_canonical_form_reorientation_invariance():
    rng = random.Random(90125)
    for _ in range(25):
        basis, n = random_subspace(rng, max_n=7)
        circuits = enumerate_circuits(basis, n)
        base = canonical_reorientation_class(circuits, n).canonical_form
        for _ in range(10):
            axes = [i for i in range(n) if rng.random() < 0.5]
            flipped = [c.flip(axes) for c in circuits]
            assert canonical_reorientation_class(
                flipped, n).canonical_form == base


def test_canonical_form_strings():
    circuits = enumerate_circuits([(1, 1)], 2)
    cls = canonical_reorientation_class(circuits, 2)
    # minimum over flips: flipping nothing gives masks (0, {0,1})
    assert cls.canonical_form == "n=2;circuits=[-0-1]"
    assert canonical_reorientation_class([], 0).canonical_form == \
        "n=0;circuits=[]"


def test_ground_cap():
    with pytest.raises(GroundCapError):
        canonical_reorientation_class([], 17)
    chain = assemble(Stratification(builtin_complex("wedge2spheres")))
    with pytest.raises(GroundCapError):
        top_cycle_matroid(chain, max_ground=1)


def test_top_cycle_matroid_on_corpus():
    chain = assemble(Stratification(builtin_complex("wedge2spheres")))
    ground, circuits, cls = top_cycle_matroid(chain)
    assert list(ground) == [0, 1]
    assert as_sign_pairs(circuits) == {
        (frozenset({0}), frozenset()), (frozenset(), frozenset({0})),
        (frozenset({1}), frozenset()), (frozenset(), frozenset({1}))}
    assert cls.canonical_form == "n=2;circuits=[-0,-1]"

    chain = assemble(Stratification(builtin_complex("sphere2")))
    ground, circuits, cls = top_cycle_matroid(chain)
    assert list(ground) == [0]
    assert len(circuits) == 2
    assert cls.canonical_form == "n=1;circuits=[-0]"

    chain = assemble(Stratification(builtin_complex("klein8")))
    ground, circuits, cls = top_cycle_matroid(chain)
    assert list(ground) == []
    assert circuits == []
    assert cls.canonical_form == "n=0;circuits=[]"

    chain = assemble(Stratification(builtin_complex("theta")))
    ground, circuits, cls = top_cycle_matroid(chain)
    assert list(ground) == [0, 1, 2]
    # cycle space is 2-dimensional: three circuit pairs, pairwise supports
    assert len(circuits) == 6


def test_empty_chain_matroid():
    from stratachain import SimplicialComplex
    chain = assemble(Stratification(SimplicialComplex([])))
    ground, circuits, cls = top_cycle_matroid(chain)
    assert ground == () and circuits == []
    assert cls.canonical_form == "n=0;circuits=[]"


def test_complex_matroid_matches_chain_route(corpus):
    for name, K in corpus.items():
        ground, circuits, cls = complex_matroid(K)
        chain = assemble(Stratification(K))
        ground2, circuits2, cls2 = top_cycle_matroid(chain)
        assert ground == ground2, name
        assert as_sign_pairs(circuits) == as_sign_pairs(circuits2), name
        assert cls.canonical_form == cls2.canonical_form, name


def test_complex_matroid_honours_ground_cap():
    with pytest.raises(GroundCapError):
        complex_matroid(builtin_complex("wedge2spheres"), max_ground=1)
