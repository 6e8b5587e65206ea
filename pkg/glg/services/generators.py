# Copyright (c) 2024 Travis Frisinger
#
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

"""Graph generators - Δ(d), chains, rooted trees, orbit graphs and random DAGs."""

import itertools
import logging
import random
import re
from typing import Dict, List, Optional, Sequence, Tuple, Union

from glg.errors import GeneratorError
from glg.models.domain.ranked_digraph import DagSkeleton, Edge, RankedDigraph
from glg.services.ranking import canonical_rank, topological_order

logger = logging.getLogger(__name__)

_CYCLE = re.compile(r"\(([^()]*)\)")

Cycles = Sequence[Sequence[int]]


def gen_delta(length: int) -> RankedDigraph:
    """Two vertices ``max`` (rank d) and ``min`` (rank 0) joined by one edge of length d."""
    if length < 1:
        raise GeneratorError(f"delta length must be at least 1, got {length}")
    return RankedDigraph.from_records(
        [("max", length), ("min", 0)], [("e", "max", "min")]
    )


def gen_chain(lengths: Sequence[int]) -> RankedDigraph:
    """
    A directed path v0 -> v1 -> ... -> vk with l(e_i) = lengths[i-1].

    The last vertex is the sink at rank 0.
    """
    for position, length in enumerate(lengths, start=1):
        if length < 1:
            raise GeneratorError(f"edge e{position} has length {length}, expected >= 1")

    total = sum(lengths)
    vertices = [("v0", total)]
    edges = []
    for position, length in enumerate(lengths, start=1):
        total -= length
        vertices.append((f"v{position}", total))
        edges.append((f"e{position}", f"v{position - 1}", f"v{position}"))
    return RankedDigraph.from_records(vertices, edges)


def _parse_tree_spec(spec: str) -> List[Tuple[int, int]]:
    entries: List[Tuple[int, int]] = []
    for index, item in enumerate(
        (part.strip() for part in spec.split(",") if part.strip()), start=1
    ):
        parent_text, sep, length_text = item.partition(":")
        if not sep:
            raise GeneratorError(f"tree entry {index} {item!r} is not 'parent:length'")
        try:
            parent, length = int(parent_text), int(length_text)
        except ValueError:
            raise GeneratorError(
                f"tree entry {index} {item!r} is not 'parent:length'"
            ) from None
        entries.append((parent, length))
    return entries


def gen_tree(spec: Union[str, Sequence[Tuple[int, int]]]) -> RankedDigraph:
    """
    A rooted tree directed towards its root v0 (rank 0).

    ``spec`` lists "parent:length" for v1, v2, ... in order; each parent is
    the index of an earlier vertex. Vertex vi gets the edge ei into its
    parent, and rank(vi) = rank(parent) + length.

    Example:
        "0:1,1:2,0:3" builds v1 -> v0 (length 1), v2 -> v1 (length 2) and
        v3 -> v0 (length 3).
    """
    entries = _parse_tree_spec(spec) if isinstance(spec, str) else list(spec)

    ranks: List[int] = [0]
    edges = []
    for index, (parent, length) in enumerate(entries, start=1):
        if not 0 <= parent < index:
            raise GeneratorError(
                f"vertex v{index} names parent v{parent}, which is not an earlier vertex"
            )
        if length < 1:
            raise GeneratorError(f"edge e{index} has length {length}, expected >= 1")
        ranks.append(ranks[parent] + length)
        edges.append((f"e{index}", f"v{index}", f"v{parent}"))

    return RankedDigraph.from_records(
        [(f"v{index}", rank) for index, rank in enumerate(ranks)], edges
    )


def gen_random_tree(vertex_count: int, max_length: int, seed: int) -> RankedDigraph:
    """Seeded random rooted tree with edge lengths in 1..max_length."""
    if vertex_count < 1:
        raise GeneratorError(f"vertex count must be at least 1, got {vertex_count}")
    if max_length < 1:
        raise GeneratorError(f"maximum edge length must be at least 1, got {max_length}")

    rng = random.Random(seed)
    entries = [
        (rng.randrange(index), rng.randint(1, max_length))
        for index in range(1, vertex_count)
    ]
    return gen_tree(entries)


def parse_permutation(text: str, size: int) -> List[List[int]]:
    """
    Parse cycle notation such as "(1 2)(3 5 4)" on {1..size}.

    An empty string, "()" or "id" is the identity.
    """
    stripped = text.strip()
    if stripped in ("", "id", "()"):
        return []
    if _CYCLE.sub("", stripped).strip():
        raise GeneratorError(f"invalid permutation {text!r}: expected cycle notation")

    cycles: List[List[int]] = []
    seen = set()
    for match in _CYCLE.finditer(stripped):
        try:
            cycle = [int(token) for token in match.group(1).replace(",", " ").split()]
        except ValueError:
            raise GeneratorError(
                f"invalid permutation {text!r}: cycles must list integers"
            ) from None
        for element in cycle:
            if not 1 <= element <= size:
                raise GeneratorError(
                    f"invalid permutation {text!r}: {element} is outside 1..{size}"
                )
            if element in seen:
                raise GeneratorError(
                    f"invalid permutation {text!r}: {element} appears twice"
                )
            seen.add(element)
        if cycle:
            cycles.append(cycle)
    return cycles


def permutation_orbits(size: int, cycles: Cycles) -> List[Tuple[int, ...]]:
    """Orbits of the permutation on {1..size}, each sorted, ordered by least element."""
    orbit_of: Dict[int, Tuple[int, ...]] = {}
    for cycle in cycles:
        orbit = tuple(sorted(cycle))
        for element in orbit:
            orbit_of[element] = orbit
    orbits: List[Tuple[int, ...]] = []
    for element in range(1, size + 1):
        orbit = orbit_of.get(element, (element,))
        if orbit[0] == element:
            orbits.append(orbit)
    return orbits


def gen_sym_orbit(size: int, permutation: Union[str, Cycles] = "") -> RankedDigraph:
    """
    Hasse graph of the subsets of the orbit set of a permutation of {1..size}.

    A vertex is a set of orbits, ranked by the number of points it covers;
    edges remove one orbit, so l(e) is the size of the removed orbit. Orbits
    are labelled by their elements joined with ".", vertices by their orbit
    labels joined with "_", and the empty set is "*".
    """
    if size < 1:
        raise GeneratorError(f"permutation size must be at least 1, got {size}")
    cycles = (
        parse_permutation(permutation, size)
        if isinstance(permutation, str)
        else [list(c) for c in permutation]
    )
    if not isinstance(permutation, str):
        flat = [x for c in cycles for x in c]
        if len(set(flat)) != len(flat) or any(not 1 <= x <= size for x in flat):
            raise GeneratorError(f"invalid permutation {cycles} on 1..{size}")

    orbits = permutation_orbits(size, cycles)
    labels = [".".join(str(x) for x in orbit) for orbit in orbits]

    def vertex_name(members: Tuple[int, ...]) -> str:
        return "_".join(labels[i] for i in members) if members else "*"

    def vertex_rank(members: Tuple[int, ...]) -> int:
        return sum(len(orbits[i]) for i in members)

    subsets = [
        members
        for count in range(len(orbits) + 1)
        for members in itertools.combinations(range(len(orbits)), count)
    ]
    subsets.sort(key=lambda members: (-vertex_rank(members), members))
    position = {members: index for index, members in enumerate(subsets)}

    edges = []
    for members in subsets:
        heads = [tuple(m for m in members if m != removed) for removed in members]
        for head in sorted(heads, key=position.__getitem__):
            edges.append((f"e{len(edges) + 1}", vertex_name(members), vertex_name(head)))

    logger.debug(f"Orbit graph for {len(orbits)} orbits on {size} points")
    return RankedDigraph.from_records(
        [(vertex_name(members), vertex_rank(members)) for members in subsets], edges
    )


def _lift_ranks(
    skeleton: DagSkeleton, canonical: Dict[str, int], bound: int, rng: random.Random
) -> Dict[str, int]:
    highest = max(canonical.values(), default=0)
    if bound < highest:
        raise GeneratorError(
            f"rank bound {bound} is below the longest path length {highest}"
        )

    order = topological_order(skeleton)
    successors: Dict[str, List[str]] = {name: [] for name in skeleton.vertices}
    # longest path ending at each vertex
    depth: Dict[str, int] = {name: 0 for name in skeleton.vertices}
    for edge in skeleton.edges:
        successors[edge.tail].append(edge.head)
    for vertex in order:
        for head in successors[vertex]:
            depth[head] = max(depth[head], depth[vertex] + 1)

    ranks: Dict[str, int] = {}
    for vertex in reversed(order):
        if not successors[vertex]:
            ranks[vertex] = 0
            continue
        lowest = 1 + max(ranks[h] for h in successors[vertex])
        ranks[vertex] = rng.randint(lowest, bound - depth[vertex])
    return ranks


def gen_random_dag(
    vertex_count: int,
    edge_probability: float,
    rank_bound: Optional[int] = None,
    seed: int = 0,
    ensure_unique_sink: bool = True,
) -> RankedDigraph:
    """
    Seeded random generalized layered graph.

    Edges are sampled along a shuffled vertex order (so the result is
    acyclic), ranks start canonical, and when ``rank_bound`` is given each
    non-sink vertex is lifted to a random rank that still leaves room for
    its ancestors under the bound. With ``ensure_unique_sink`` every extra
    sink is wired to the last vertex of the order, which becomes the unique
    rank-0 minimal vertex.
    """
    if vertex_count < 1:
        raise GeneratorError(f"vertex count must be at least 1, got {vertex_count}")
    if not 0.0 <= edge_probability <= 1.0:
        raise GeneratorError(
            f"edge probability must lie in [0, 1], got {edge_probability}"
        )
    if rank_bound is not None and rank_bound < 0:
        raise GeneratorError(f"rank bound must be nonnegative, got {rank_bound}")

    rng = random.Random(seed)
    names = [f"v{index}" for index in range(vertex_count)]
    order = list(names)
    rng.shuffle(order)

    edge_pairs: List[Tuple[str, str]] = []
    for i, tail in enumerate(order):
        for head in order[i + 1 :]:
            if rng.random() < edge_probability:
                edge_pairs.append((tail, head))

    if ensure_unique_sink and vertex_count > 1:
        tails = {tail for tail, _ in edge_pairs}
        for vertex in order[:-1]:
            if vertex not in tails:
                edge_pairs.append((vertex, order[-1]))

    edges = [(f"e{index}", t, h) for index, (t, h) in enumerate(edge_pairs, start=1)]
    skeleton = DagSkeleton(
        vertices=tuple(names),
        edges=tuple(Edge(name=n, tail=t, head=h) for n, t, h in edges),
    )
    ranks = canonical_rank(skeleton)
    if rank_bound is not None:
        ranks = _lift_ranks(skeleton, ranks, rank_bound, rng)

    graph = RankedDigraph.from_records([(n, ranks[n]) for n in names], edges)
    logger.debug(
        f"Random DAG seed={seed}: {vertex_count} vertices, {len(edges)} edges, "
        f"max rank {graph.max_rank}"
    )
    return graph
