"""Sofic defect: share of points whose labeled ball in F differs from the ball in Delta."""

from __future__ import annotations

import logging
from collections import deque
from fractions import Fraction
from typing import Callable, Iterable

import networkx as nx
import numpy as np
from networkx.algorithms.isomorphism import categorical_edge_match, categorical_node_match

from ..delta_core import DeltaElement, DeltaGroup
from .templates import FolnerTemplate

logger = logging.getLogger(__name__)

_NODE_MATCH = categorical_node_match("root", False)
_EDGE_MATCH = categorical_edge_match("label", None)


def labeled_ball(
    delta: DeltaGroup,
    center: DeltaElement,
    radius: int,
    inside: Callable[[DeltaElement], bool] | None = None,
) -> nx.DiGraph:
    """Right-multiplication ball of ``radius`` around ``center``, edges labeled by generator.

    With ``inside`` given, only vertices satisfying it are kept (Schreier graph of F).
    """
    graph = nx.DiGraph()
    graph.add_node(center, root=True)
    depth = {center: 0}
    queue = deque([center])
    while queue:
        current = queue.popleft()
        for label in delta.generator_labels:
            nxt = delta.apply_generator(current, label)
            if inside is not None and not inside(nxt):
                continue
            if nxt not in depth:
                if depth[current] == radius:
                    continue
                depth[nxt] = depth[current] + 1
                graph.add_node(nxt, root=False)
                queue.append(nxt)
            graph.add_edge(current, nxt, label=label)
    return graph


def balls_match(ball: nx.DiGraph, reference: nx.DiGraph) -> bool:
    if ball.number_of_nodes() != reference.number_of_nodes():
        return False
    if ball.number_of_edges() != reference.number_of_edges():
        return False
    return nx.is_isomorphic(ball, reference, node_match=_NODE_MATCH, edge_match=_EDGE_MATCH)


def sofic_defect(
    delta: DeltaGroup,
    template: FolnerTemplate,
    radius: int,
    elements: Iterable[DeltaElement] | None = None,
    *,
    sample: int | None = None,
    seed: int = 0,
) -> Fraction:
    """Fraction of points of F whose labeled ``radius``-ball is not the identity's ball.

    Exhaustive over ``elements`` (or the whole template) unless ``sample`` asks for a
    seeded uniform sample.
    """
    if radius == 0:
        return Fraction(0)
    reference = labeled_ball(delta, delta.identity(), radius)
    if sample is not None:
        rng = np.random.default_rng(seed)
        points: Iterable[DeltaElement] = (template.random_element(rng) for _ in range(sample))
    else:
        points = template.elements() if elements is None else elements
    total = bad = 0
    for x in points:
        total += 1
        if not balls_match(labeled_ball(delta, x, radius, template.contains), reference):
            bad += 1
    logger.info(
        "sofic defect index=%s radius=%s bad=%s total=%s", template.index, radius, bad, total
    )
    return Fraction(bad, total) if total else Fraction(0)


__all__ = ["balls_match", "labeled_ball", "sofic_defect"]
