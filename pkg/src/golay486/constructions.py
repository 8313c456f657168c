"""The pipeline tying codes, flats and the rank-9 action together.

Builds the coset graph of the ternary Golay code (the Berlekamp-van
Lint-Seidel graph), the 81 intermediate ten-spaces with their two weight
classes, the symmetric-transversal-design incidence graphs, the three
486-vertex distance-regular graphs carried by the bundled rank-9 action
(the Koolen-Riebeek graph, the second Soicher graph and the AG(5,3) design
graph), the induced 243-vertex subgraph, and the cross-verifications
between the orbital and coordinate models.

Everything here is deterministic and cached; graphs are immutable, so the
cached values are safe to share.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import cache
from importlib import resources
from itertools import combinations, product

from . import codes, gf3, permaction
from .gf3 import Matrix, Vector
from .graph import (
    Graph,
    GraphStructureError,
    antipodal_fold,
    are_isomorphic,
    bipartition,
    bipartite_halves,
    complement,
    induced_subgraph,
    is_connected,
    is_distance_regular,
    srg_parameters,
    verify_bijection,
)
from .permaction import GroupAction, OrbitalDecomposition

# Weight tallies of the two classes of ten-spaces between the Golay code
# and its ambient space.  Type I is the 45-member class (4 weight-1
# vectors, i.e. the kernels of weight-9 dual functionals); Type II is the
# 36-member class (10 weight-1 vectors, kernels of weight-6 functionals).
TYPE_I_WEIGHTS = (1, 4, 76, 456, 1716, 4956, 9912, 13944, 14214, 9314, 3776, 680)
TYPE_II_WEIGHTS = (1, 10, 70, 420, 1770, 4992, 9822, 13980, 14160, 9440, 3680, 704)

# Suborbit sizes of the bundled action, split by the bipartition of the
# Koolen-Riebeek graph: coset-like and flat-like.
COSET_SUBORBIT_SIZES = frozenset({1, 2, 20, 40, 180})
FLAT_SUBORBIT_SIZES = frozenset({36, 45, 72, 90})

ORBITAL_MODELS = ("delta", "upsilon", "sigma", "lambda", "gamma_half")


@dataclass(frozen=True)
class FlatFamily:
    """The 81 ten-spaces containing the Golay code but not e0, with types.

    Subspace i is the kernel of functionals[i] (canonical, lex-sorted);
    its three translates are the flats {x : functionals[i](x) = c} for
    c in {0,1,2}, giving 243 flats in all.
    """

    functionals: tuple[Vector, ...]
    bases: tuple[Matrix, ...]
    types: tuple[str, ...]

    def __post_init__(self):
        if not (len(self.functionals) == len(self.bases) == len(self.types)):
            raise ValueError("parallel fields must have equal lengths")

    @property
    def subspace_count(self) -> int:
        return len(self.functionals)

    @property
    def flat_count(self) -> int:
        return 3 * self.subspace_count

    def type_indices(self, label: str) -> tuple[int, ...]:
        return tuple(i for i, t in enumerate(self.types) if t == label)

    def flat_index(self, subspace: int, value: int) -> int:
        """Dense index of the flat {x : functional_subspace(x) = value}."""
        return 3 * subspace + value


@dataclass(frozen=True)
class LabeledModel:
    """A 486-vertex graph together with its coset/flat vertex split."""

    graph: Graph
    half_a: tuple[int, ...]
    half_b: tuple[int, ...]
    provenance: str

    def __post_init__(self):
        if sorted(self.half_a + self.half_b) != list(range(self.graph.n)):
            raise ValueError("halves must partition the vertex set")
        if len(self.half_a) != len(self.half_b):
            raise ValueError("halves must have equal sizes")


@dataclass(frozen=True)
class ClaimCheck:
    claim_id: str
    description: str
    expected: str
    observed: str
    passed: bool


@dataclass(frozen=True)
class BlocksReport:
    blocks_checked: int
    block_size: int
    all_cocliques: bool
    halved_equals_complement: bool
    counterexample: tuple[int, int, int] | None


@dataclass(frozen=True)
class IncidenceExperimentReport:
    """Outcome of the literal translate-incidence construction.

    The graph built from "coset x meets the translates U+x over the chosen
    type class" is biregular (all cosets at the class size, flats at 81 or
    0), so it is not regular and in particular no identification with the
    Koolen-Riebeek graph is asserted.
    """

    rule: str
    coset_degree_counts: tuple[tuple[int, int], ...]
    flat_degree_counts: tuple[tuple[int, int], ...]
    regular: bool
    distance_regular: bool
    note: str


@cache
def build_gamma() -> Graph:
    """Coset graph of the ternary Golay code: SRG(243,22,1,2)."""
    return codes.coset_graph(codes.golay_code())


@cache
def golay_coset_reps() -> tuple[Vector, ...]:
    """Canonical coset representatives in syndrome (vertex) order."""
    table = codes.syndrome_table(codes.golay_code())
    return tuple(table[s] for s in product((0, 1, 2), repeat=5))


@cache
def classify_types() -> FlatFamily:
    """Classify the 81 ten-spaces by weight distribution.

    Both reference tallies must occur, with 45 Type I and 36 Type II
    subspaces and nothing else; an unmatched tally is a data error and is
    reported verbatim.
    """
    golay = codes.golay_code()
    e0 = gf3.unit_vector(11, 0)
    functionals = gf3.hyperplane_functionals(golay.generator, e0)
    bases = gf3.intermediate_hyperplanes(golay.generator, e0)
    types = []
    for phi, basis in zip(functionals, bases):
        tally = gf3.subspace_weight_counts(basis)
        if tally == TYPE_I_WEIGHTS:
            types.append("I")
        elif tally == TYPE_II_WEIGHTS:
            types.append("II")
        else:
            raise ValueError(
                f"subspace of functional {phi} has unmatched weight tally {tally}"
            )
    family = FlatFamily(
        functionals=functionals, bases=bases, types=tuple(types)
    )
    counts = Counter(types)
    if counts["I"] != 45 or counts["II"] != 36:
        raise ValueError(f"unexpected type counts {dict(counts)}")
    return family


def _incidence_graph(family: FlatFamily, subspace_indices) -> Graph:
    """Bipartite graph: 243 cosets, then the 243 flats of the family;
    coset x is joined to the translate of each chosen subspace containing x."""
    reps = golay_coset_reps()
    edges = []
    for ci, rep in enumerate(reps):
        for fi in subspace_indices:
            value = gf3.dot(family.functionals[fi], rep)
            edges.append((ci, 243 + family.flat_index(fi, value)))
    return Graph(243 + family.flat_count, edges)


@cache
def build_sigma_coordinate() -> LabeledModel:
    """Incidence graph of all 243 cosets versus all 243 flats.

    Distance-regular with array {81,80,54,1; 1,27,80,81}, bipartite and
    antipodal: the flat-side antipodal classes are the translate triples.
    """
    family = classify_types()
    graph = _incidence_graph(family, range(family.subspace_count))
    return LabeledModel(
        graph=graph,
        half_a=tuple(range(243)),
        half_b=tuple(range(243, 486)),
        provenance="coordinate",
    )


def build_std_ag(n: int) -> Graph:
    """Incidence graph of the symmetric transversal design from AG(n,3).

    Points are the vectors of F_3^n; blocks are the hyperplane flats whose
    direction does not contain the first unit vector.  The result is
    bipartite antipodal distance-regular on 2*3^n vertices, with array
    {3^(n-1), 3^(n-1)-1, 3^(n-1)-3^(n-2), 1; 1, 3^(n-2), 3^(n-1)-1, 3^(n-1)}.
    """
    if not 2 <= n <= 7:
        raise ValueError(f"n={n} outside the supported range 2..7")
    full = tuple(gf3.unit_vector(n, i) for i in range(n))
    e0 = gf3.unit_vector(n, 0)
    functionals = tuple(
        phi for phi in gf3.projective_points(full, length=n) if gf3.dot(phi, e0)
    )
    points = list(product((0, 1, 2), repeat=n))
    size = 3**n
    edges = []
    for xi, x in enumerate(points):
        for fi, phi in enumerate(functionals):
            value = gf3.dot(phi, x)
            edges.append((xi, size + 3 * fi + value))
    return Graph(2 * size, edges)


def _bundled_generators_text() -> str:
    return (
        resources.files("golay486").joinpath("data/generators_486.txt").read_text()
    )


@cache
def bundled_action() -> GroupAction:
    """The rank-9 degree-486 action shipped with the package."""
    action = permaction.parse_generator_file(_bundled_generators_text(), degree=486)
    if not permaction.is_transitive(action):
        raise GraphStructureError("bundled action is not transitive")
    return action


@cache
def bundled_orbitals() -> OrbitalDecomposition:
    return permaction.orbitals(bundled_action())


def orbital_graph(decomp: OrbitalDecomposition, sizes: set[int]) -> Graph:
    """Union of the orbitals whose suborbit sizes are given (sizes are unique)."""
    by_size = decomp.id_by_suborbit_size()
    missing = sizes - by_size.keys()
    if missing:
        raise GraphStructureError(f"no suborbits of sizes {sorted(missing)}")
    return permaction.orbital_union_graph(decomp, {by_size[s] for s in sizes})


def compute_coset_half(decomp: OrbitalDecomposition) -> tuple[int, ...]:
    """The bipartition class of the 45-orbital graph holding the cosets.

    Computed, not assumed: it is the union of the suborbits of sizes
    1,2,20,40,180, and must agree with the bipartition class of the
    45-orbital graph containing the base vertex.
    """
    size_of = [decomp.suborbit_sizes[s] for s in decomp.suborbit_of_vertex]
    half = tuple(
        sorted(
            v
            for v in range(decomp.action.degree)
            if size_of[v] in COSET_SUBORBIT_SIZES
        )
    )
    leftover = {size_of[v] for v in range(decomp.action.degree)} - (
        COSET_SUBORBIT_SIZES | FLAT_SUBORBIT_SIZES
    )
    if leftover:
        raise GraphStructureError(
            f"unexpected suborbit sizes {sorted(leftover)}; not the rank-9 action"
        )
    delta = orbital_graph(decomp, {45})
    side0, _ = bipartition(delta)
    if half != side0:
        raise GraphStructureError(
            "coset suborbits do not form a bipartition class of the 45-orbital graph"
        )
    return half


@cache
def coset_half() -> tuple[int, ...]:
    """Coset half of the bundled action, which labels the cosets 0..242."""
    half = compute_coset_half(bundled_orbitals())
    if half != tuple(range(243)):
        raise GraphStructureError("bundled labelling does not put cosets at 0..242")
    return half


def orbital_model(
    decomp: OrbitalDecomposition, which: str, half: tuple[int, ...] | None = None
) -> LabeledModel | Graph:
    """Orbital model of one of the five graphs, for any rank-9 action.

    delta = the 45-orbital; upsilon = 20+36; sigma = 45+36; lambda = the
    20-orbital induced on the coset half; gamma_half = the (2+20)-union
    induced on the coset half.  Suborbit-to-size matching is computed.
    """
    if which not in ORBITAL_MODELS:
        raise ValueError(f"unknown model {which!r}; expected one of {ORBITAL_MODELS}")
    if half is None:
        half = compute_coset_half(decomp)
    if which in ("delta", "upsilon", "sigma"):
        sizes = {"delta": {45}, "upsilon": {20, 36}, "sigma": {45, 36}}[which]
        graph = orbital_graph(decomp, sizes)
        other = tuple(v for v in range(graph.n) if v not in set(half))
        return LabeledModel(
            graph=graph, half_a=half, half_b=other, provenance="orbital"
        )
    sizes = {"lambda": {20}, "gamma_half": {2, 20}}[which]
    graph, labels = induced_subgraph(orbital_graph(decomp, sizes), half)
    assert labels == half
    return graph


@cache
def build_from_orbitals(which: str) -> LabeledModel | Graph:
    """Orbital model of one of the five graphs over the bundled action."""
    return orbital_model(bundled_orbitals(), which, half=coset_half())


def blocks_report(delta: LabeledModel, gamma_half: Graph) -> BlocksReport:
    """Check the block structure of an orbital Koolen-Riebeek model.

    Every flat-side vertex's 45 coset-side neighbors must form a coclique
    in the coset-half graph, and the halved graph on the coset side must
    equal the complement of that graph edge-for-edge on shared labels.
    """
    counterexample = None
    blocks = 0
    sizes = set()
    for f in delta.half_b:
        block = delta.graph.neighbors(f)
        sizes.add(len(block))
        for u, v in combinations(block, 2):
            if gamma_half.has_edge(u, v):
                counterexample = (f, u, v)
                break
        if counterexample:
            break
        blocks += 1
    half0, _, (side0, _) = bipartite_halves(delta.graph)
    halved_ok = side0 == delta.half_a and half0.edge_set() == complement(
        gamma_half
    ).edge_set()
    return BlocksReport(
        blocks_checked=blocks,
        block_size=sizes.pop() if len(sizes) == 1 else -1,
        all_cocliques=counterexample is None,
        halved_equals_complement=halved_ok,
        counterexample=counterexample,
    )


@cache
def verify_koolen_riebeek_blocks() -> BlocksReport:
    """Block structure report for the bundled orbital models."""
    return blocks_report(
        build_from_orbitals("delta"), build_from_orbitals("gamma_half")
    )


@cache
def build_lambda_coordinate() -> Graph:
    """Graph on the 243 cosets joining those differing by a weight-1 coset
    away from coordinate 0; distance-regular {20,18,4,1; 1,2,18,20}."""
    golay = codes.golay_code()
    offsets = set()
    for i in range(1, 11):
        for a in (1, 2):
            s = codes.syndrome(golay, gf3.unit_vector(11, i, a))
            if any(s):
                offsets.add(s)
    edges = []
    for s in product((0, 1, 2), repeat=5):
        i = codes.syndrome_index(s)
        for t in offsets:
            j = codes.syndrome_index(gf3.vec_add(s, t))
            if i < j:
                edges.append((i, j))
    return Graph(243, edges)


def _iso_claim(claim_id: str, description: str, g1: Graph, g2: Graph) -> ClaimCheck:
    mapping = are_isomorphic(g1, g2)
    ok = mapping is not None and verify_bijection(g1, g2, mapping)
    return ClaimCheck(
        claim_id=claim_id,
        description=description,
        expected="isomorphic (certificate re-verified)",
        observed="isomorphic" if ok else "no isomorphism found",
        passed=ok,
    )


@cache
def cross_verify() -> tuple[ClaimCheck, ...]:
    """Isomorphism and parameter claims linking the models, as a verdict list."""
    claims = [
        _iso_claim(
            "sigma.orbital_vs_coordinate",
            "orbital 486-vertex design graph matches the coset/flat incidence model",
            build_from_orbitals("sigma").graph,
            build_sigma_coordinate().graph,
        ),
        _iso_claim(
            "sigma.coordinate_vs_affine",
            "coset/flat incidence model matches the AG(5,3) design graph",
            build_sigma_coordinate().graph,
            build_std_ag(5),
        ),
        _iso_claim(
            "lambda.orbital_vs_coordinate",
            "induced orbital graph on cosets matches the weight-1 coset graph",
            build_from_orbitals("lambda"),
            build_lambda_coordinate(),
        ),
        _iso_claim(
            "lambda.coordinate_vs_shortened",
            "weight-1 coset graph matches the coset graph of the shortened Golay code",
            build_lambda_coordinate(),
            codes.coset_graph(codes.shorten(codes.golay_code(), 0)),
        ),
    ]
    folded, classes = antipodal_fold(build_from_orbitals("upsilon").graph)
    params = srg_parameters(folded)
    observed = params.as_tuple() if params else None
    claims.append(
        ClaimCheck(
            claim_id="upsilon.folded_srg",
            description="folded antipodal quotient of the valency-56 graph",
            expected="(162, 56, 10, 24) with classes of size 3",
            observed=f"{observed} with classes of size {len(classes[0])}",
            passed=observed == (162, 56, 10, 24) and len(classes[0]) == 3,
        )
    )
    return tuple(claims)


def experiment_flat_incidence(rule: str = "type1") -> IncidenceExperimentReport:
    """Build the literal translate-incidence graph and report its degrees.

    Under the literal reading, every coset meets one translate of each
    chosen subspace (degree 45 for the Type I class) while flats from the
    chosen class meet all 81 of their cosets and the others meet none.
    The report records that split and deliberately asserts nothing more.
    """
    label = {"type1": "I", "type2": "II"}.get(rule)
    if label is None:
        raise ValueError(f"unknown rule {rule!r}; expected 'type1' or 'type2'")
    family = classify_types()
    graph = _incidence_graph(family, family.type_indices(label))
    coset_degrees = Counter(graph.degree(v) for v in range(243))
    flat_degrees = Counter(graph.degree(v) for v in range(243, graph.n))
    regular = len(set(graph.degree(v) for v in range(graph.n))) == 1
    distance_regular = False
    if regular and is_connected(graph):
        distance_regular = is_distance_regular(graph) is not None
    return IncidenceExperimentReport(
        rule=rule,
        coset_degree_counts=tuple(sorted(coset_degrees.items())),
        flat_degree_counts=tuple(sorted(flat_degrees.items())),
        regular=regular,
        distance_regular=distance_regular,
        note=(
            "biregular incidence of cosets against translate classes; "
            "degrees alone rule out regularity, and no identification with "
            "the 45-regular bipartite graph is claimed"
        ),
    )
