"""Evaluation codes, generalized weights, and the distance bridge."""

import pytest
from hypothesis import given, settings, strategies as st

from gmdkit.codes import (
    ENUMERATE_LIMIT,
    LinearCode,
    ProjectivePointSet,
    bridge_check,
    evaluate_monomial,
    evaluation_code,
    generalized_hamming_weight,
    projective_points,
    support_size,
)
from gmdkit.gflinalg import FieldMatrix, FieldSpec, rank
from gmdkit.groebner import groebner_basis, normal_form
from gmdkit.polyring import graded_piece_basis

from oracles import P1_F2, ghw_by_span_enumeration

F2 = FieldSpec(2)
F3 = FieldSpec(3)


def test_point_normalization():
    ps = ProjectivePointSet(F3, 3, [(0, 2, 1)])
    # scaled so the first nonzero coordinate is 1
    assert ps.points == ((0, 1, 2),)
    with pytest.raises(ValueError, match="zero vector"):
        ProjectivePointSet(F2, 2, [(0, 0)])
    with pytest.raises(ValueError, match="duplicate"):
        ProjectivePointSet(F3, 2, [(1, 2), (2, 4)])
    with pytest.raises(ValueError, match="coordinates"):
        ProjectivePointSet(F2, 3, [(1, 0)])
    with pytest.raises(ValueError, match="empty"):
        ProjectivePointSet(F2, 2, [])
    with pytest.raises(ValueError):
        ProjectivePointSet(F2, 1, [(1,)])


def test_projective_point_counts():
    line2 = projective_points(F2, 2)
    plane2 = projective_points(F2, 3)
    plane3 = projective_points(F3, 3)
    assert len(line2) == 3
    assert len(plane2) == 7
    assert len(plane3) == 13
    for pts in (line2, plane2, plane3):
        assert len(set(pts)) == len(pts)
        assert pts == sorted(pts)
        for pt in pts:
            first = next(c for c in pt if c)
            assert first == 1


def test_point_primes_vanish_exactly_at_their_point():
    ps = ProjectivePointSet(F3, 3, [(1, 0, 0), (0, 1, 2), (1, 1, 1)])
    ring = ps.ring()
    for i in range(len(ps)):
        prime = ps.point_prime(ring, i)
        assert len(prime.gens) == 2  # a point in the plane needs two forms
        for g in prime.gens:
            for j, pt in enumerate(ps.points):
                val = 0
                for e, c in g.terms.items():
                    val = (val + c * evaluate_monomial(e, pt, 3)) % 3
                if i == j:
                    assert val == 0
        # some generator must be nonzero at every other point
        for j, pt in enumerate(ps.points):
            if i == j:
                continue
            values = []
            for g in prime.gens:
                val = 0
                for e, c in g.terms.items():
                    val = (val + c * evaluate_monomial(e, pt, 3)) % 3
                values.append(val)
            assert any(values), (i, j)


def test_vanishing_profile_shape_and_memoization():
    ps = ProjectivePointSet(F2, 3, [(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1)])
    profile = ps.vanishing_profile()
    assert profile.reduced_certified
    assert profile.dim == 1
    assert profile.multiplicity == 4
    assert all(p.mult == 1 and p.is_top for p in profile.primes)
    assert profile.family_backend is not None
    assert ps.vanishing_profile() is profile


def test_backend_piece_dims_match_groebner_route():
    ps = ProjectivePointSet(F3, 3, [(1, 0, 0), (0, 1, 0), (1, 1, 2), (1, 2, 1)])
    profile = ps.vanishing_profile()
    backend = profile.family_backend
    for indices in [(0,), (1, 2), (0, 3), (0, 1, 2), (0, 1, 2, 3)]:
        fam = profile.intersect_family(indices)
        for t in range(1, 5):
            got = fam.quotient_dim(t)
            # drop to the Groebner route by differencing Hilbert functions
            from gmdkit.hilbert import hilbert_function

            expected = hilbert_function(profile.ideal, t) - hilbert_function(
                fam.ideal, t
            )
            assert got == expected, (indices, t)
    # functions vanishing on j of the 4 points stabilize at 4 - j dimensions
    for j in range(1, 5):
        fam = profile.intersect_family(tuple(range(j)))
        t = fam.regime() + 1
        assert fam.quotient_dim(t) == 4 - j, j


def test_evaluation_code_shape():
    ps = ProjectivePointSet(F2, 2, list(P1_F2["points"]))
    code = evaluation_code(ps, 1)
    assert code.length == P1_F2["code"]["length"]
    assert code.dimension == P1_F2["code"]["dimension"]
    assert rank(code.generator) == code.dimension
    with pytest.raises(ValueError):
        evaluation_code(ps, 0)


def test_evaluation_code_rows_are_monomial_evaluations():
    ps = ProjectivePointSet(F3, 3, [(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1)])
    code = evaluation_code(ps, 2)
    # every codeword is a combination of monomial evaluation rows
    monos = graded_piece_basis(ps.ring(), 2)
    eval_rows = [
        [evaluate_monomial(m, pt, 3) for pt in ps.points] for m in monos
    ]
    eval_matrix = FieldMatrix(F3, eval_rows)
    stacked = FieldMatrix(
        F3, eval_matrix.to_lists() + code.generator.to_lists()
    )
    assert rank(stacked) == rank(eval_matrix) == code.dimension


def test_linear_code_validation():
    with pytest.raises(ValueError, match="dependent"):
        LinearCode(F2, FieldMatrix(F2, [[1, 0, 1], [1, 0, 1]]))
    with pytest.raises(ValueError):
        LinearCode(F2, FieldMatrix(F2, [list() for _ in range(0)]))


def test_support_size():
    m = FieldMatrix(F2, [[1, 0, 1, 0], [0, 0, 1, 0]])
    assert support_size(m) == 2
    assert support_size(FieldMatrix(F2, [[0, 0]])) == 0


HAND_CODES = [
    (2, [[1, 0, 1], [0, 1, 1]]),
    (2, [[1, 1, 1, 1]]),
    (2, [[1, 0, 0, 1, 1], [0, 1, 0, 1, 0], [0, 0, 1, 0, 1]]),
    (3, [[1, 0, 1, 2], [0, 1, 1, 1]]),
    (3, [[1, 0, 0, 1], [0, 1, 0, 2], [0, 0, 1, 1]]),
]


@pytest.mark.parametrize("p, rows", HAND_CODES)
def test_ghw_strategies_agree_with_span_oracle(p, rows):
    field = FieldSpec(p)
    code = LinearCode(field, FieldMatrix(field, rows))
    for r in range(1, code.dimension + 1):
        oracle = ghw_by_span_enumeration(rows, p, r)
        enum = generalized_hamming_weight(code, r, strategy="enumerate")
        short = generalized_hamming_weight(code, r, strategy="shorten")
        assert enum.value == oracle, (p, rows, r)
        assert short.value == oracle, (p, rows, r)
        # witnesses really span r-dimensional subcodes of that weight
        for result in (enum, short):
            w = FieldMatrix(field, result.witness)
            assert rank(w) == r
            assert support_size(w) == oracle
            stacked = FieldMatrix(field, rows + result.witness)
            assert rank(stacked) == code.dimension


@pytest.mark.parametrize("p, rows", HAND_CODES)
def test_weights_strictly_increase(p, rows):
    field = FieldSpec(p)
    code = LinearCode(field, FieldMatrix(field, rows))
    weights = [
        generalized_hamming_weight(code, r).value
        for r in range(1, code.dimension + 1)
    ]
    assert all(a < b for a, b in zip(weights, weights[1:]))
    assert weights[-1] == support_size(code.generator)


def test_ghw_argument_validation():
    code = LinearCode(F2, FieldMatrix(F2, [[1, 0, 1], [0, 1, 1]]))
    with pytest.raises(ValueError):
        generalized_hamming_weight(code, 0)
    with pytest.raises(ValueError):
        generalized_hamming_weight(code, 3)
    with pytest.raises(ValueError):
        generalized_hamming_weight(code, 1, strategy="guess")


def test_ghw_auto_strategy_switches():
    code = LinearCode(F2, FieldMatrix(F2, [[1, 0, 1], [0, 1, 1]]))
    assert generalized_hamming_weight(code, 1).strategy == "enumerate"
    # force the shorten branch through a tiny limit
    import gmdkit.codes as codes_mod

    old = codes_mod.ENUMERATE_LIMIT
    codes_mod.ENUMERATE_LIMIT = 0
    try:
        assert generalized_hamming_weight(code, 1).strategy == "shorten"
    finally:
        codes_mod.ENUMERATE_LIMIT = old


def test_ghw_jobs_split_agrees():
    field = FieldSpec(2)
    rows = [[1, 0, 0, 1, 1], [0, 1, 0, 1, 0], [0, 0, 1, 0, 1]]
    code = LinearCode(field, FieldMatrix(field, rows))
    for r in (1, 2):
        single = generalized_hamming_weight(code, r, strategy="enumerate", jobs=1)
        multi = generalized_hamming_weight(code, r, strategy="enumerate", jobs=3)
        assert single.value == multi.value
        assert single.witness == multi.witness


def test_bridge_hand_case():
    ps = ProjectivePointSet(F2, 2, list(P1_F2["points"]))
    for ell, expected in P1_F2["weights"].items():
        report = bridge_check(ps, 1, ell)
        assert report.agree
        assert report.ghw_value == expected
        assert report.delta_value == expected
        assert report.code_length == 3
        assert report.code_dimension == 2
    with pytest.raises(ValueError):
        bridge_check(ps, 1, 3)


def test_bridge_degree_two_on_the_line():
    ps = ProjectivePointSet(F2, 2, list(P1_F2["points"]))
    code = evaluation_code(ps, 2)
    assert (code.length, code.dimension) == (3, 3)
    for ell, expected in {1: 1, 2: 2, 3: 3}.items():
        report = bridge_check(ps, 2, ell)
        assert report.agree
        assert report.ghw_value == expected


@settings(max_examples=25, deadline=None, database=None, derandomize=True)
@given(st.integers(min_value=0, max_value=10_000))
def test_random_plane_point_sets_bridge(seed):
    import random

    rng = random.Random(seed)
    p = rng.choice([2, 3])
    field = FieldSpec(p)
    universe = projective_points(field, 3)
    size = rng.randint(3, 6)
    pts = ProjectivePointSet(field, 3, rng.sample(universe, size))
    t = rng.randint(1, 2)
    code = evaluation_code(pts, t)
    ell = rng.randint(1, min(2, code.dimension))
    report = bridge_check(pts, t, ell)
    assert report.agree, (p, pts.points, t, ell)
