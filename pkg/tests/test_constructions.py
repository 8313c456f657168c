import random
from collections import Counter
from itertools import product

import pytest

from golay486 import codes, gf3
from golay486.constructions import (
    TYPE_I_WEIGHTS,
    TYPE_II_WEIGHTS,
    blocks_report,
    build_from_orbitals,
    build_lambda_coordinate,
    build_sigma_coordinate,
    build_std_ag,
    classify_types,
    coset_half,
    cross_verify,
    experiment_flat_incidence,
    golay_coset_reps,
    verify_koolen_riebeek_blocks,
)
from golay486.graph import (
    antipodal_fold,
    are_isomorphic,
    bipartite_halves,
    complement,
    intersection_spectrum,
    is_distance_regular,
    srg_parameters,
    verify_bijection,
)


def test_gamma_parameters(gamma):
    assert srg_parameters(gamma).as_tuple() == (243, 22, 1, 2)
    eig = intersection_spectrum(is_distance_regular(gamma))
    assert eig == pytest.approx((22, 4, -5), abs=1e-9)


def test_gamma_every_edge_in_one_triangle(gamma):
    rng = random.Random(3)
    edges = list(gamma.edges())
    for u, v in rng.sample(edges, 200):
        common = set(gamma.neighbors(u)) & set(gamma.neighbors(v))
        assert len(common) == 1  # lambda = 1


def test_gamma_eccentricities_are_two(gamma):
    from golay486.graph import bfs_distances

    for v in range(gamma.n):
        assert max(bfs_distances(gamma, v)) == 2


def test_classify_types_counts_and_tallies():
    family = classify_types()
    assert family.subspace_count == 81
    assert family.flat_count == 243
    counts = Counter(family.types)
    assert counts == {"I": 45, "II": 36}
    # reference tallies, recomputed rather than trusted
    for index in family.type_indices("I")[:3]:
        assert gf3.subspace_weight_counts(family.bases[index]) == TYPE_I_WEIGHTS
    for index in family.type_indices("II")[:3]:
        assert gf3.subspace_weight_counts(family.bases[index]) == TYPE_II_WEIGHTS
    assert sum(TYPE_I_WEIGHTS) == sum(TYPE_II_WEIGHTS) == 3**10
    # weight-1 content separates the classes: 4 vs 10 unit vectors
    assert TYPE_I_WEIGHTS[1] == 4 and TYPE_II_WEIGHTS[1] == 10


def test_type_tally_is_basis_independent():
    family = classify_types()
    rng = random.Random(55)
    for index in (0, 40, 80):
        basis = list(family.bases[index])
        rng.shuffle(basis)
        mixed = [basis[0]] + [
            gf3.vec_add(row, basis[i - 1]) for i, row in enumerate(basis) if i
        ]
        tally = gf3.subspace_weight_counts(gf3.row_space_basis(gf3.matrix(mixed)))
        assert tally == gf3.subspace_weight_counts(family.bases[index])


def test_sigma_coordinate_structure():
    model = build_sigma_coordinate()
    g = model.graph
    assert g.n == 486
    arr = is_distance_regular(g)
    assert str(arr) == "{81,80,54,1; 1,27,80,81}"
    assert arr.is_bipartite() and arr.is_antipodal()
    # one neighbor-flat per subspace for every coset vertex
    family = classify_types()
    for ci in range(0, 243, 13):
        flats = g.neighbors(ci)
        assert len(flats) == 81
        assert len({(f - 243) // 3 for f in flats}) == 81
    # flat-side antipodal classes are the translate triples
    _, classes = antipodal_fold(g)
    flat_classes = [c for c in classes if c[0] >= 243]
    assert len(flat_classes) == 81
    for c in flat_classes:
        assert len(c) == 3
        assert len({(f - 243) // 3 for f in c}) == 1
    # coset vertices pair with the canonical representatives in syndrome order
    reps = golay_coset_reps()
    golay = codes.golay_code()
    syndromes = list(product((0, 1, 2), repeat=5))
    for i in (0, 100, 242):
        assert codes.syndrome(golay, reps[i]) == syndromes[i]


def test_std_ag_small_arrays():
    arr = is_distance_regular(build_std_ag(3))
    assert str(arr) == "{9,8,6,1; 1,3,8,9}"
    g2 = build_std_ag(2)
    assert g2.n == 18
    arr = is_distance_regular(g2)
    assert str(arr) == "{3,2,2,1; 1,1,2,3}"
    with pytest.raises(ValueError):
        build_std_ag(8)


def test_coset_half_is_standard_labelling():
    assert coset_half() == tuple(range(243))


def test_orbital_models_arrays(orbital_models):
    assert str(is_distance_regular(orbital_models["delta"].graph)) == "{45,44,36,5; 1,9,40,45}"
    assert str(is_distance_regular(orbital_models["upsilon"].graph)) == "{56,45,16,1; 1,8,45,56}"
    assert str(is_distance_regular(orbital_models["sigma"].graph)) == "{81,80,54,1; 1,27,80,81}"
    assert str(is_distance_regular(orbital_models["lambda"])) == "{20,18,4,1; 1,2,18,20}"
    assert srg_parameters(orbital_models["gamma_half"]).as_tuple() == (243, 22, 1, 2)


def test_orbital_model_halves(orbital_models):
    delta = orbital_models["delta"]
    assert delta.half_a == tuple(range(243))
    assert delta.half_b == tuple(range(243, 486))
    assert delta.provenance == "orbital"


def test_build_from_orbitals_rejects_unknown():
    with pytest.raises(ValueError):
        build_from_orbitals("theta")


def test_vertex_counts_from_arrays(orbital_models, gamma):
    for graph in (
        gamma,
        orbital_models["delta"].graph,
        orbital_models["upsilon"].graph,
        orbital_models["sigma"].graph,
        orbital_models["lambda"],
    ):
        arr = is_distance_regular(graph)
        assert arr.vertex_count() == graph.n


def test_fold_sizes_multiply_back(orbital_models):
    for graph in (orbital_models["upsilon"].graph, orbital_models["lambda"]):
        folded, classes = antipodal_fold(graph)
        assert len({len(c) for c in classes}) == 1
        assert folded.n * len(classes[0]) == graph.n


def test_upsilon_antipodal_classes_are_2_suborbits(orbital_models, decomp):
    upsilon = orbital_models["upsilon"].graph
    _, classes = antipodal_fold(upsilon)
    by_size = decomp.id_by_suborbit_size()
    two = by_size[2]
    ids = decomp.pair_ids
    n = 486
    class_of = {}
    for c in classes:
        for v in c:
            class_of[v] = set(c)
    for v in range(n):
        mates = {w for w in range(n) if ids[v * n + w] == two}
        assert class_of[v] == {v} | mates


def test_upsilon_restricted_to_half_is_lambda(orbital_models):
    # the induced subgraph of the valency-56 graph on the coset half equals
    # the induced 20-orbital graph
    from golay486.graph import induced_subgraph

    upsilon = orbital_models["upsilon"].graph
    induced, labels = induced_subgraph(upsilon, range(243))
    assert labels == tuple(range(243))
    assert induced == orbital_models["lambda"]


def test_blocks_report(orbital_models):
    report = verify_koolen_riebeek_blocks()
    assert report.blocks_checked == 243
    assert report.block_size == 45
    assert report.all_cocliques
    assert report.halved_equals_complement
    assert report.counterexample is None
    same = blocks_report(orbital_models["delta"], orbital_models["gamma_half"])
    assert same == report


def test_halved_delta_equals_complement_directly(orbital_models):
    half0, half1, (side0, side1) = bipartite_halves(orbital_models["delta"].graph)
    assert side0 == tuple(range(243))
    comp = complement(orbital_models["gamma_half"])
    assert half0.edge_set() == comp.edge_set()
    # the other half has the same strongly regular parameters
    assert srg_parameters(half0).as_tuple() == (243, 220, 199, 200)
    assert srg_parameters(half1).as_tuple() == (243, 220, 199, 200)


def test_coset_shapes_match_coset_half_suborbits(decomp, golay):
    shapes = codes.classify_cosets(golay)
    half_suborbit_ids = {decomp.suborbit_of_vertex[v] for v in range(243)}
    sizes = sorted(decomp.suborbit_sizes[k] for k in half_suborbit_ids)
    assert sorted(shapes.values()) == sizes == [1, 2, 20, 40, 180]


def test_lambda_coordinate():
    lam = build_lambda_coordinate()
    arr = is_distance_regular(lam)
    assert str(arr) == "{20,18,4,1; 1,2,18,20}"
    folded, classes = antipodal_fold(lam)
    assert len(classes[0]) == 3
    assert srg_parameters(folded).as_tuple() == (81, 20, 1, 6)


def test_lambda_coordinate_isomorphic_to_shortened_coset_graph(golay):
    lam = build_lambda_coordinate()
    shortened = codes.coset_graph(codes.shorten(golay, 0))
    mapping = are_isomorphic(lam, shortened)
    assert mapping is not None and verify_bijection(lam, shortened, mapping)


def test_cross_verify_all_pass():
    claims = cross_verify()
    assert len(claims) == 5
    assert all(c.passed for c in claims)
    ids = {c.claim_id for c in claims}
    assert "sigma.orbital_vs_coordinate" in ids
    assert "upsilon.folded_srg" in ids


def test_experiment_flat_incidence():
    report = experiment_flat_incidence("type1")
    assert report.coset_degree_counts == ((45, 243),)
    assert report.flat_degree_counts == ((0, 108), (81, 135))
    assert not report.regular
    assert not report.distance_regular
    assert "no identification" in report.note

    flipped = experiment_flat_incidence("type2")
    assert flipped.coset_degree_counts == ((36, 243),)
    assert flipped.flat_degree_counts == ((0, 135), (81, 108))

    with pytest.raises(ValueError):
        experiment_flat_incidence("type3")
