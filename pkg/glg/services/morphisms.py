# Copyright (c) 2024 Travis Frisinger
#
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

"""Morphism service - morphisms of layered graphs and their generator maps."""

import logging
from typing import Callable, Dict, Iterable

from glg.errors import MorphismError, OperationError
from glg.models.domain.free_polynomial import FreePolynomial, Generator
from glg.models.domain.morphism import GraphMorphism
from glg.models.domain.ranked_digraph import RankedDigraph

logger = logging.getLogger(__name__)

# Generator -> image, defined on every generator of the source graph
GeneratorMap = Dict[Generator, FreePolynomial]


def generators_of(graph: RankedDigraph) -> Iterable[Generator]:
    """a_i(e) for every edge e and 1 <= i <= l(e), in edge order."""
    for edge in graph.edges:
        for index in range(1, graph.length(edge) + 1):
            yield Generator(edge.name, index)


def identity_morphism(graph: RankedDigraph) -> GraphMorphism:
    return GraphMorphism(
        source=graph,
        target=graph,
        vertex_map={v: v for v in graph.vertex_names},
        edge_map={e: e for e in graph.edge_names},
    )


def compose_morphisms(outer: GraphMorphism, inner: GraphMorphism) -> GraphMorphism:
    """outer ∘ inner."""
    if inner.target != outer.source:
        raise MorphismError("cannot compose: target of the inner morphism is not the source of the outer")
    return GraphMorphism(
        source=inner.source,
        target=outer.target,
        vertex_map={v: outer.vertex_map[w] for v, w in inner.vertex_map.items()},
        edge_map={e: outer.edge_map[f] for e, f in inner.edge_map.items()},
    )


def add_edge_inclusion(graph: RankedDigraph, extended: RankedDigraph) -> GraphMorphism:
    """
    The inclusion i^e of Γ into Γ^e: identity on vertices, injection on edges.

    Raises:
        MorphismError: If ``extended`` does not contain ``graph``
    """
    return GraphMorphism(
        source=graph,
        target=extended,
        vertex_map={v: v for v in graph.vertex_names},
        edge_map={e: e for e in graph.edge_names},
    )


def induced_generator_map(morphism: GraphMorphism) -> GeneratorMap:
    """a_i(e) -> a_i(φ(e)), or 0 when i exceeds l(φ(e))."""
    images: GeneratorMap = {}
    for generator in generators_of(morphism.source):
        image_edge = morphism.edge_map[generator.edge]
        if generator.index <= morphism.target.length(image_edge):
            images[generator] = FreePolynomial.generator(image_edge, generator.index)
        else:
            images[generator] = FreePolynomial.zero()
    return images


def add_vertex_map(
    graph: RankedDigraph,
    edge: str,
    position: int,
    first_name: str = "",
    second_name: str = "",
) -> GeneratorMap:
    """
    ι̃ for the vertex placed on ``edge`` at height ``position`` above its head.

    a_j(f) -> a_j(f) for f != e, and
    a_j(e) -> Σ a_(j-k)(e1)·a_k(e2) over max(0, j - l(e1)) <= k <= min(i, j),
    with a_0 = 1, l(e1) = l(e) - i and l(e2) = i. Edge names default to
    "{e}_1" and "{e}_2", matching :func:`glg.services.graph_operations.add_vertex`.
    """
    if not graph.has_edge(edge):
        raise OperationError(f"unknown edge {edge!r}")
    length = graph.length(edge)
    if length < 2:
        raise OperationError(f"edge {edge!r} has length {length}; a vertex needs length > 1")
    if not 0 < position < length:
        raise OperationError(
            f"position {position} out of range 1..{length - 1} for edge {edge!r}"
        )

    upper = first_name or f"{edge}_1"
    lower = second_name or f"{edge}_2"
    upper_length = length - position

    def a(name: str, index: int) -> FreePolynomial:
        return FreePolynomial.one() if index == 0 else FreePolynomial.generator(name, index)

    images: GeneratorMap = {}
    for generator in generators_of(graph):
        if generator.edge != edge:
            images[generator] = FreePolynomial.generator(generator.edge, generator.index)
            continue
        j = generator.index
        images[generator] = FreePolynomial.add_all(
            a(upper, j - k) * a(lower, k)
            for k in range(max(0, j - upper_length), min(position, j) + 1)
        )
    return images


def compose_generator_maps(outer: GeneratorMap, inner: GeneratorMap) -> GeneratorMap:
    """(outer ∘ inner)(x) = outer applied to inner(x)."""
    return {
        generator: image.substitute(as_substitution(outer))
        for generator, image in inner.items()
    }


def as_substitution(mapping: GeneratorMap) -> Callable[[Generator], FreePolynomial]:
    """Substitution callable for :meth:`FreePolynomial.substitute`."""

    def image(generator: Generator) -> FreePolynomial:
        try:
            return mapping[generator]
        except KeyError:
            raise MorphismError(f"generator {generator} is outside the map's domain") from None

    return image


def apply_generator_map(mapping: GeneratorMap, polynomial: FreePolynomial) -> FreePolynomial:
    return polynomial.substitute(as_substitution(mapping))
