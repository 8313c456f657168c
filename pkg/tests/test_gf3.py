import random
from concurrent.futures import ThreadPoolExecutor
from itertools import product

import pytest

from golay486 import gf3
from golay486.codes import golay_code


def random_vector(rng, n):
    return tuple(rng.randrange(3) for _ in range(n))


def test_vec_arithmetic_examples():
    assert gf3.vec_add((1, 2, 0), (2, 2, 1)) == (0, 1, 1)
    assert gf3.vec_neg((0, 0, 0, 0)) == (0, 0, 0, 0)
    assert gf3.vec_scale(2, (1, 2)) == (2, 1)


def test_vec_add_length_mismatch():
    with pytest.raises(gf3.DimensionError):
        gf3.vec_add((1, 2), (1, 2, 0))


def test_vec_properties_random():
    rng = random.Random(101)
    for _ in range(200):
        n = rng.randrange(1, 12)
        u, v = random_vector(rng, n), random_vector(rng, n)
        assert gf3.vec_add(u, gf3.vec_neg(u)) == (0,) * n
        assert gf3.vec_add(u, v) == gf3.vec_add(v, u)
        assert gf3.vec_sub(u, v) == gf3.vec_add(u, gf3.vec_neg(v))


def test_hamming_weight():
    assert gf3.hamming_weight((0, 0, 0)) == 0
    assert gf3.hamming_weight((2, 1, 2, 1, 1, 1, 2, 2, 2, 1, 2)) == 11
    assert gf3.hamming_weight(gf3.unit_vector(11, 0)) == 1


def test_rref_identity_and_duplicates():
    ident = gf3.matrix([[1, 0, 0], [0, 1, 0], [0, 0, 1]])
    reduced, rank, pivots = gf3.rref(ident)
    assert reduced == ident and rank == 3 and pivots == (0, 1, 2)

    reduced, rank, pivots = gf3.rref(gf3.matrix([[1, 2], [1, 2]]))
    assert rank == 1 and pivots == (0,)
    assert reduced == ((1, 2), (0, 0))


def test_rref_golay_circulant_rank():
    row = tuple(1 if ch == "+" else 2 for ch in "-+-+++---+-")
    shifts = gf3.matrix([row[i:] + row[:i] for i in range(11)])
    _, rank, _ = gf3.rref(shifts)
    assert rank == 6


def test_rref_idempotent_and_row_space_random():
    rng = random.Random(202)
    for _ in range(50):
        nrows, ncols = rng.randrange(1, 6), rng.randrange(1, 7)
        m = gf3.matrix([random_vector(rng, ncols) for _ in range(nrows)])
        reduced, rank, _ = gf3.rref(m)
        again, rank2, _ = gf3.rref(reduced)
        assert again == reduced and rank2 == rank
        # row space is preserved both ways
        basis = gf3.row_space_basis(m)
        for row in m:
            assert gf3.in_row_space(basis, row)
        for row in basis:
            assert gf3.in_row_space(m, row)


def test_null_space_annihilates():
    rng = random.Random(303)
    for _ in range(30):
        nrows, ncols = rng.randrange(1, 5), rng.randrange(2, 7)
        m = gf3.matrix([random_vector(rng, ncols) for _ in range(nrows)])
        kernel = gf3.null_space(m, width=ncols)
        _, rank, _ = gf3.rref(m)
        assert len(kernel) == ncols - rank
        for v in kernel:
            assert all(gf3.dot(row, v) == 0 for row in m)


def test_enumerate_subspace_counts():
    assert list(gf3.enumerate_subspace((), length=5)) == [(0, 0, 0, 0, 0)]
    basis = gf3.matrix([[1, 0, 0], [0, 1, 0]])
    vectors = list(gf3.enumerate_subspace(basis))
    assert len(vectors) == 9
    assert len(set(vectors)) == 9
    ten = golay_code().generator + tuple(
        gf3.unit_vector(11, i) for i in (6, 7, 8, 9)
    )
    assert len(gf3.row_space_basis(ten)) == 10
    count = sum(1 for _ in gf3.enumerate_subspace(gf3.row_space_basis(ten)))
    assert count == 59049


def test_enumerate_subspace_closed_under_negation():
    rng = random.Random(404)
    for _ in range(20):
        ncols = rng.randrange(2, 6)
        rows = [random_vector(rng, ncols) for _ in range(rng.randrange(1, 4))]
        basis = gf3.row_space_basis(gf3.matrix(rows))
        if not basis:
            continue
        vectors = set(gf3.enumerate_subspace(basis))
        assert len(vectors) == 3 ** len(basis)
        assert all(gf3.vec_neg(v) in vectors for v in vectors)


def test_enumerate_subspace_rejects_dependent_basis():
    with pytest.raises(ValueError):
        list(gf3.enumerate_subspace(gf3.matrix([[1, 2], [2, 1]])))


def test_subspace_weight_counts_against_enumeration():
    rng = random.Random(505)
    for _ in range(20):
        ncols = rng.randrange(1, 7)
        rows = [random_vector(rng, ncols) for _ in range(rng.randrange(0, 4))]
        basis = gf3.row_space_basis(gf3.matrix(rows))
        shift = random_vector(rng, ncols)
        counts = gf3.subspace_weight_counts(basis, length=ncols, shift=shift)
        expected = [0] * (ncols + 1)
        for v in gf3.enumerate_subspace(basis, length=ncols):
            expected[gf3.hamming_weight(gf3.vec_add(v, shift))] += 1
        assert counts == tuple(expected)


def test_intermediate_hyperplanes_of_golay(golay):
    e0 = gf3.unit_vector(11, 0)
    duals = gf3.null_space(golay.generator, width=11)
    assert len(gf3.projective_points(duals, length=11)) == 121
    functionals = gf3.hyperplane_functionals(golay.generator, e0)
    assert len(functionals) == 81  # 121 - 40 through e0
    hyperplanes = gf3.intermediate_hyperplanes(golay.generator, e0)
    assert len(hyperplanes) == 81
    assert len(set(hyperplanes)) == 81  # pairwise distinct row spaces
    for basis in hyperplanes:
        assert len(basis) == 10
        _, rank, _ = gf3.rref(basis)
        assert rank == 10
        assert all(gf3.in_row_space(basis, row) for row in golay.generator)
        assert not gf3.in_row_space(basis, e0)


def test_intermediate_hyperplanes_precondition_errors(golay):
    with pytest.raises(ValueError):
        gf3.hyperplane_functionals(golay.generator, golay.generator[0])
    with pytest.raises(ValueError):
        gf3.hyperplane_functionals(gf3.matrix([[1, 2], [2, 1]]), (1, 0))


def test_parallel_weight_counts_match_serial(golay):
    e0 = gf3.unit_vector(11, 0)
    bases = gf3.intermediate_hyperplanes(golay.generator, e0)[:8]
    serial = [gf3.subspace_weight_counts(b) for b in bases]
    with ThreadPoolExecutor(max_workers=4) as pool:
        parallel = list(pool.map(gf3.subspace_weight_counts, bases))
    assert parallel == serial


def test_matrix_text_round_trip():
    m = gf3.matrix([[0, 1, 2], [2, 2, 0]])
    text = gf3.matrix_to_text(m)
    assert text == "012\n220\n"
    assert gf3.matrix_from_text(text) == m
    with pytest.raises(ValueError):
        gf3.matrix_from_text("013\n")


def test_enumeration_order_is_lexicographic_in_coefficients():
    basis = gf3.matrix([[1, 0], [0, 1]])
    got = list(gf3.enumerate_subspace(basis))
    expected = [
        tuple((a * basis[0][i] + b * basis[1][i]) % 3 for i in range(2))
        for a, b in product(range(3), repeat=2)
    ]
    assert got == expected
