"""Permutations and transitive group actions.

Permutations are image tuples on 0..n-1 (1-based only in the external
cycle notation).  The module covers cycle-notation parsing, orbits, exact
group order by a deterministic Schreier-Sims stabilizer chain, the orbital
(pair-orbit) decomposition of a transitive action, edge-orbit closures,
collapsed adjacency matrices, and the scan that finds every union of
orbitals forming a distance-regular graph.
"""

from __future__ import annotations

import re
from array import array
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from math import lcm
from collections.abc import Iterable, Sequence

from .graph import Graph, GraphStructureError, IntersectionArray

Permutation = tuple[int, ...]

# With rank r there are up to 2^(r-1) orbital unions to scan.
MAX_SCAN_RANK = 24


class CycleParseError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


def identity(degree: int) -> Permutation:
    return tuple(range(degree))


def compose(p: Permutation, q: Permutation) -> Permutation:
    """Apply p, then q."""
    if len(p) != len(q):
        raise ValueError(f"degree mismatch: {len(p)} vs {len(q)}")
    return tuple(q[i] for i in p)


def inverse(p: Permutation) -> Permutation:
    inv = [0] * len(p)
    for i, j in enumerate(p):
        inv[j] = i
    return tuple(inv)


def cycles(p: Permutation, include_fixed: bool = False) -> list[tuple[int, ...]]:
    """Disjoint cycle decomposition (0-based), cycles led by their minimum."""
    seen = [False] * len(p)
    out = []
    for start in range(len(p)):
        if seen[start]:
            continue
        cycle = [start]
        seen[start] = True
        x = p[start]
        while x != start:
            cycle.append(x)
            seen[x] = True
            x = p[x]
        if len(cycle) > 1 or include_fixed:
            out.append(tuple(cycle))
    return out


def order_of(p: Permutation) -> int:
    """lcm of the cycle lengths."""
    return lcm(*(len(c) for c in cycles(p)), 1)


def format_cycles(p: Permutation) -> str:
    """1-based cycle notation, identity rendered as ()."""
    cs = cycles(p)
    if not cs:
        return "()"
    return "".join("(" + ",".join(str(x + 1) for x in c) + ")" for c in cs)


_TOKEN = re.compile(r"\s*([(),;.]|\d+)")


def parse_cycles(text: str, degree: int) -> Permutation:
    """Parse a product of disjoint cycles of 1-based points in 1..degree.

    Whitespace and newlines may appear anywhere between tokens; points not
    mentioned are fixed; optional trailing punctuation (';' or '.') is
    allowed.  Repeated points, out-of-range points and malformed tokens
    raise CycleParseError with the offending position.
    """
    images = list(range(degree))
    seen: set[int] = set()
    pos = 0
    length = len(text)

    def next_token():
        nonlocal pos
        m = _TOKEN.match(text, pos)
        if m is None:
            if text[pos:].strip():
                bad = pos + len(text[pos:]) - len(text[pos:].lstrip())
                raise CycleParseError(f"unexpected character {text[bad]!r}", bad)
            pos = length
            return None, length
        pos = m.end()
        return m.group(1), m.start(1)

    while True:
        tok, at = next_token()
        if tok is None:
            return tuple(images)
        if tok in ";.":
            # trailing punctuation: nothing but whitespace may follow
            tok, at = next_token()
            if tok is not None:
                raise CycleParseError(f"unexpected token {tok!r} after terminator", at)
            return tuple(images)
        if tok != "(":
            raise CycleParseError(f"expected '(' but found {tok!r}", at)
        cycle: list[int] = []
        expect_point = True
        while True:
            tok, at = next_token()
            if tok is None:
                raise CycleParseError("unterminated cycle", length)
            if tok == ")":
                if expect_point and cycle:
                    raise CycleParseError("trailing comma in cycle", at)
                break
            if tok == ",":
                if expect_point:
                    raise CycleParseError("misplaced comma", at)
                expect_point = True
                continue
            if not tok.isdigit():
                raise CycleParseError(f"expected a point but found {tok!r}", at)
            if not expect_point:
                raise CycleParseError("missing comma between points", at)
            point = int(tok)
            if not 1 <= point <= degree:
                raise CycleParseError(f"point {point} outside 1..{degree}", at)
            if point - 1 in seen:
                raise CycleParseError(f"point {point} repeated", at)
            seen.add(point - 1)
            cycle.append(point - 1)
            expect_point = False
        for i, x in enumerate(cycle):
            images[x] = cycle[(i + 1) % len(cycle)]


def parse_generator_file(text: str, degree: int | None = None) -> "GroupAction":
    """Parse "name := cycles" assignments (the bundled-asset layout).

    Assignments may span lines; the degree defaults to the largest point
    mentioned.  Raises CycleParseError on malformed cycle text.
    """
    pieces = re.split(r"^\s*(\w+)\s*:=", text, flags=re.MULTILINE)
    if len(pieces) < 3:
        raise CycleParseError("no 'name := cycles' assignment found", 0)
    bodies = [pieces[i + 1] for i in range(1, len(pieces) - 1, 2)]
    if degree is None:
        points = [int(tok) for body in bodies for tok in re.findall(r"\d+", body)]
        if not points:
            raise CycleParseError("no points in generator file", 0)
        degree = max(points)
    return GroupAction(
        degree=degree,
        generators=tuple(parse_cycles(body, degree) for body in bodies),
    )


@dataclass(frozen=True)
class GroupAction:
    """A permutation group given by generators of common degree."""

    degree: int
    generators: tuple[Permutation, ...]

    def __post_init__(self):
        for g in self.generators:
            if len(g) != self.degree:
                raise ValueError("generator degree mismatch")
            if sorted(g) != list(range(self.degree)):
                raise ValueError("generator is not a permutation")


def orbit(action: GroupAction, point: int) -> set[int]:
    """Closure of {point} under the generators (breadth-first)."""
    seen = {point}
    queue = deque([point])
    while queue:
        x = queue.popleft()
        for g in action.generators:
            y = g[x]
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return seen


def is_transitive(action: GroupAction) -> bool:
    return len(orbit(action, 0)) == action.degree


# ---------------------------------------------------------------------------
# Deterministic Schreier-Sims
# ---------------------------------------------------------------------------


class _ChainLevel:
    __slots__ = ("base", "gens", "transversal")

    def __init__(self, base: int):
        self.base = base
        self.gens: list[Permutation] = []
        self.transversal: dict[int, Permutation] = {}


class StabilizerChain:
    """A base and strong generating set for a permutation group.

    Built incrementally by sifting (each new generator is reduced against
    the chain and stored at the first level whose base it moves), then
    certified by a deterministic verification pass that sifts every
    Schreier generator of every level; sift-to-identity proves membership
    outright, so a clean pass makes the chain strong by Schreier's lemma.
    Level j's orbit uses the generators of levels j and deeper, all of
    which fix the earlier base points.
    """

    def __init__(self, action: GroupAction):
        self.degree = action.degree
        self.levels: list[_ChainLevel] = []
        for g in action.generators:
            self._add(g)
        self._verify()

    def _gens_from(self, idx: int) -> list[Permutation]:
        return [g for level in self.levels[idx:] for g in level.gens]

    def _rebuild(self, idx: int):
        level = self.levels[idx]
        gens = self._gens_from(idx)
        level.transversal = {level.base: identity(self.degree)}
        queue = deque([level.base])
        while queue:
            x = queue.popleft()
            tx = level.transversal[x]
            for g in gens:
                y = g[x]
                if y not in level.transversal:
                    level.transversal[y] = compose(tx, g)
                    queue.append(y)

    def _sift(self, g: Permutation) -> tuple[Permutation, int]:
        for idx, level in enumerate(self.levels):
            y = g[level.base]
            if y == level.base:
                continue
            t = level.transversal.get(y)
            if t is None:
                return g, idx
            g = compose(g, inverse(t))
        return g, len(self.levels)

    def _add(self, g: Permutation):
        ident = identity(self.degree)
        stack = [g]
        while stack:
            h, idx = self._sift(stack.pop())
            if h == ident:
                continue
            if idx == len(self.levels):
                base = min(i for i in range(self.degree) if h[i] != i)
                self.levels.append(_ChainLevel(base))
            level = self.levels[idx]
            level.gens.append(h)
            # the new generator acts at this level and every shallower one
            for j in range(idx, -1, -1):
                self._rebuild(j)
            for x, tx in level.transversal.items():
                for s in self._gens_from(idx):
                    schreier = compose(
                        compose(tx, s), inverse(level.transversal[s[x]])
                    )
                    if schreier != ident:
                        stack.append(schreier)

    def _verify(self):
        """Sift all Schreier generators; add any non-member residue and retry."""
        ident = identity(self.degree)
        while True:
            witness = None
            for idx in range(len(self.levels) - 1, -1, -1):
                level = self.levels[idx]
                gens = self._gens_from(idx)
                for x, tx in level.transversal.items():
                    for s in gens:
                        schreier = compose(
                            compose(tx, s), inverse(level.transversal[s[x]])
                        )
                        residue, _ = self._sift(schreier)
                        if residue != ident:
                            witness = residue
                            break
                    if witness:
                        break
                if witness:
                    break
            if witness is None:
                return
            self._add(witness)

    def order(self) -> int:
        n = 1
        for level in self.levels:
            n *= len(level.transversal)
        return n

    def contains(self, g: Permutation) -> bool:
        residue, _ = self._sift(g)
        return residue == identity(self.degree)

    def base(self) -> tuple[int, ...]:
        return tuple(level.base for level in self.levels)


def group_order(action: GroupAction) -> int:
    """Exact order of the generated group."""
    return StabilizerChain(action).order()


# ---------------------------------------------------------------------------
# Orbitals of a transitive action
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class OrbitalDecomposition:
    """Orbit partition of ordered pairs under the diagonal action.

    pair_ids[i*n + j] is the orbital id of (i, j); ids are assigned by
    breadth-first closure from the pairs (0, y) in ascending y, so the
    labelling is deterministic.  For a transitive action the diagonal is a
    single orbital and every orbital meets {base} x points.
    """

    action: GroupAction
    base: int
    pair_ids: array
    rank: int
    suborbit_sizes: tuple[int, ...]
    pairing: tuple[int, ...]
    diagonal_id: int

    def orbital_id(self, i: int, j: int) -> int:
        return self.pair_ids[i * self.action.degree + j]

    def suborbit_id(self, v: int) -> int:
        """Orbital id of (base, v); suborbits are the point-stabilizer orbits."""
        return self.pair_ids[self.base * self.action.degree + v]

    @cached_property
    def suborbit_of_vertex(self) -> tuple[int, ...]:
        n = self.action.degree
        return tuple(self.pair_ids[self.base * n + v] for v in range(n))

    def suborbit_members(self, orbital: int) -> tuple[int, ...]:
        return tuple(
            v for v, s in enumerate(self.suborbit_of_vertex) if s == orbital
        )

    def nontrivial_ids(self) -> tuple[int, ...]:
        return tuple(k for k in range(self.rank) if k != self.diagonal_id)

    def id_by_suborbit_size(self) -> dict[int, int]:
        """size -> orbital id; raises if any two suborbits share a size."""
        sizes = self.suborbit_sizes
        if len(set(sizes)) != len(sizes):
            raise GraphStructureError("suborbit sizes are not distinct")
        return {size: k for k, size in enumerate(sizes)}


def orbitals(action: GroupAction) -> OrbitalDecomposition:
    """Pair-orbit decomposition of a transitive action (checked)."""
    if not is_transitive(action):
        raise GraphStructureError("action is not transitive")
    n = action.degree
    gens = action.generators
    ids = array("i", [-1]) * (n * n)
    rank = 0
    first_pairs = []
    for y0 in range(n):
        if ids[y0] != -1:
            continue
        ids[y0] = rank
        first_pairs.append((0, y0))
        queue = deque([(0, y0)])
        while queue:
            i, j = queue.popleft()
            for g in gens:
                gi, gj = g[i], g[j]
                k = gi * n + gj
                if ids[k] == -1:
                    ids[k] = rank
                    queue.append((gi, gj))
        rank += 1
    # transitivity makes row 0 meet every orbital, so nothing is left over
    sizes = [0] * rank
    for y in range(n):
        sizes[ids[y]] += 1
    pairing = tuple(ids[j * n + i] for (i, j) in first_pairs)
    return OrbitalDecomposition(
        action=action,
        base=0,
        pair_ids=ids,
        rank=rank,
        suborbit_sizes=tuple(sizes),
        pairing=pairing,
        diagonal_id=ids[0],
    )


def edge_orbit_graph(
    action: GroupAction, seed_pairs: Iterable[tuple[int, int]]
) -> Graph:
    """Undirected graph on the edge-closure of the seed pairs under the action."""
    n = action.degree
    seen: set[tuple[int, int]] = set()
    queue: deque[tuple[int, int]] = deque()
    for u, v in seed_pairs:
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"seed pair ({u},{v}) out of range")
        if u == v:
            raise ValueError("seed pairs must be off-diagonal")
        for pair in ((u, v), (v, u)):
            if pair not in seen:
                seen.add(pair)
                queue.append(pair)
    while queue:
        i, j = queue.popleft()
        for g in action.generators:
            pair = (g[i], g[j])
            if pair not in seen:
                seen.add(pair)
                seen.add(pair[::-1])
                queue.append(pair)
                queue.append(pair[::-1])
    return Graph(n, [(u, v) for (u, v) in seen if u < v])


def orbital_union_graph(
    decomp: OrbitalDecomposition, orbital_ids: Iterable[int]
) -> Graph:
    """Graph whose edges are exactly the chosen orbital classes."""
    chosen = set(orbital_ids)
    if not chosen:
        raise ValueError("no orbitals chosen")
    if decomp.diagonal_id in chosen:
        raise ValueError("the diagonal orbital is not an edge set")
    for k in chosen:
        if not 0 <= k < decomp.rank:
            raise ValueError(f"orbital id {k} out of range")
        if decomp.pairing[k] not in chosen:
            raise ValueError(
                f"selection is not symmetric: orbital {k} lacks its transpose "
                f"{decomp.pairing[k]}"
            )
    n = decomp.action.degree
    ids = decomp.pair_ids
    edges = []
    for u in range(n):
        row = u * n
        for v in range(u + 1, n):
            if ids[row + v] in chosen:
                edges.append((u, v))
    return Graph(n, edges)


def verify_invariance(action: GroupAction, graph: Graph) -> bool:
    """True iff every generator maps every edge to an edge."""
    if action.degree != graph.n:
        raise ValueError("degree and vertex count differ")
    for g in action.generators:
        for u, v in graph.edges():
            if not graph.has_edge(g[u], g[v]):
                return False
    return True


def collapsed_matrix(
    graph: Graph, decomp: OrbitalDecomposition
) -> tuple[tuple[int, ...], ...]:
    """B[i][j] = neighbors in suborbit j of any vertex in suborbit i.

    Verified two ways: the edge set must be invariant under the action
    (i.e. a union of orbitals), and the counts must be constant over every
    vertex of each suborbit, not just a representative.
    """
    if not verify_invariance(decomp.action, graph):
        raise ValueError("edge set is not invariant under the action")
    n = graph.n
    sub = decomp.suborbit_of_vertex
    rank = decomp.rank
    rows: list[tuple[int, ...] | None] = [None] * rank
    for v in range(n):
        counts = [0] * rank
        for w in graph.neighbors(v):
            counts[sub[w]] += 1
        counts = tuple(counts)
        i = sub[v]
        if rows[i] is None:
            rows[i] = counts
        elif rows[i] != counts:
            witness = decomp.suborbit_members(i)[0]
            raise ValueError(
                f"counts differ within suborbit {i}: vertices {witness} and {v}"
            )
    return tuple(rows)  # type: ignore[arg-type]


def _orbital_collapsed_rows(decomp: OrbitalDecomposition) -> list[list[list[int]]]:
    """B_k[i][j] for every orbital k, from one representative per suborbit.

    Constancy over each suborbit is guaranteed by invariance of orbitals, so
    representatives suffice here (the public collapsed_matrix re-verifies).
    """
    n = decomp.action.degree
    ids = decomp.pair_ids
    sub = decomp.suborbit_of_vertex
    rank = decomp.rank
    reps: list[int | None] = [None] * rank
    for v in range(n):
        if reps[sub[v]] is None:
            reps[sub[v]] = v
    b = [[[0] * rank for _ in range(rank)] for _ in range(rank)]
    for i, v in enumerate(reps):
        row = v * n
        for w in range(n):
            b[ids[row + w]][i][sub[w]] += 1
    return b


def _quotient_intersection_array(
    b_union: Sequence[Sequence[int]], diagonal: int
) -> IntersectionArray | None | str:
    """DRG test on the suborbit quotient.

    For a vertex-transitive graph whose edges are a union of orbitals, the
    distance classes around the base vertex are unions of suborbits and the
    neighbor counts are constant on each suborbit, so the graph is
    distance-regular iff the counts agree across all suborbits at the same
    distance.  Returns the array, None for a non-DRG, or "disconnected".
    """
    rank = len(b_union)
    dist = [-1] * rank
    dist[diagonal] = 0
    queue = deque([diagonal])
    while queue:
        s = queue.popleft()
        for t in range(rank):
            if b_union[s][t] and dist[t] == -1:
                dist[t] = dist[s] + 1
                queue.append(t)
    if -1 in dist:
        return "disconnected"
    d = max(dist)
    c_at = [set() for _ in range(d + 1)]
    a_at = [set() for _ in range(d + 1)]
    b_at = [set() for _ in range(d + 1)]
    for s in range(rank):
        i = dist[s]
        c = a = b = 0
        for t in range(rank):
            gap = dist[t] - i
            if gap == -1:
                c += b_union[s][t]
            elif gap == 0:
                a += b_union[s][t]
            elif gap == 1:
                b += b_union[s][t]
            elif b_union[s][t]:
                return None  # neighbors may not skip a distance level
        c_at[i].add(c)
        a_at[i].add(a)
        b_at[i].add(b)
    for i in range(d + 1):
        if len(c_at[i]) > 1 or len(a_at[i]) > 1 or len(b_at[i]) > 1:
            return None
    return IntersectionArray(
        b=tuple(b_at[i].pop() for i in range(d)),
        c=tuple(c_at[i].pop() for i in range(1, d + 1)),
    )


@dataclass(frozen=True)
class ScanResult:
    orbital_ids: frozenset[int]
    suborbit_sizes: tuple[int, ...]
    array: IntersectionArray


def scan_orbital_unions(decomp: OrbitalDecomposition) -> list[ScanResult]:
    """Every transpose-closed union of nontrivial orbitals that is a
    connected distance-regular graph, with its intersection array.

    Unions are enumerated in ascending-mask order over the transpose-pair
    units, so the output order is deterministic.
    """
    if decomp.rank > MAX_SCAN_RANK:
        raise GraphStructureError(
            f"rank {decomp.rank} exceeds the scan bound {MAX_SCAN_RANK}"
        )
    units = []
    seen: set[int] = set()
    for k in decomp.nontrivial_ids():
        if k in seen:
            continue
        unit = frozenset({k, decomp.pairing[k]})
        seen |= unit
        units.append(unit)
    b_orbit = _orbital_collapsed_rows(decomp)
    rank = decomp.rank
    results = []
    for mask in range(1, 2 ** len(units)):
        chosen: frozenset[int] = frozenset()
        for i, unit in enumerate(units):
            if mask >> i & 1:
                chosen |= unit
        b_union = [
            [sum(b_orbit[k][i][j] for k in chosen) for j in range(rank)]
            for i in range(rank)
        ]
        arr = _quotient_intersection_array(b_union, decomp.diagonal_id)
        if isinstance(arr, IntersectionArray):
            results.append(
                ScanResult(
                    orbital_ids=chosen,
                    suborbit_sizes=tuple(
                        sorted(decomp.suborbit_sizes[k] for k in chosen)
                    ),
                    array=arr,
                )
            )
    return results
