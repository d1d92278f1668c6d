"""Propagate count ratios across a graph of sequences differing by one moved degree."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Any, Iterable

import networkx as nx

from ..core.sequence import DegreeSequence
from ..errors import DisconnectedGraphError, SequenceError
from .functions import RatioFunction, Value


@dataclass
class PropagationResult:
    weights: dict[DegreeSequence, Value]
    max_inconsistency: float
    cycles_checked: int

    def as_dict(self) -> dict[str, Any]:
        return {
            "weights": [
                {"degrees": list(seq.degrees), "weight": str(weight)}
                for seq, weight in sorted(self.weights.items(), key=lambda item: item[0].degrees)
            ],
            "max_inconsistency": self.max_inconsistency,
            "cycles_checked": self.cycles_checked,
        }


def _move(u: DegreeSequence, w: DegreeSequence) -> tuple[int, int] | None:
    """Return (a, b) with u = d - e_a and w = d - e_b, if the two differ by one move."""

    if u.n != w.n:
        return None
    up = [i for i, (x, y) in enumerate(zip(u.degrees, w.degrees)) if x != y]
    if len(up) != 2:
        return None
    i, j = up
    if w[i] - u[i] == 1 and u[j] - w[j] == 1:
        return i, j
    if w[j] - u[j] == 1 and u[i] - w[i] == 1:
        return j, i
    return None


def sequence_graph(
    vertices: Iterable[DegreeSequence], edges: Iterable[tuple[DegreeSequence, DegreeSequence]] | None = None
) -> nx.Graph:
    """Graph on sequences; each edge stores (a, b, d) with endpoints d - e_a and d - e_b."""

    graph = nx.Graph()
    members = list(vertices)
    graph.add_nodes_from(members)
    if edges is None:
        present = set(members)
        candidates = []
        for u in members:
            for a in range(u.n):
                for b in range(u.n):
                    if a == b or u[b] == 0:
                        continue
                    w = u.shifted({a: 1, b: -1})
                    if w in present:
                        candidates.append((u, w))
        edges = candidates
    for u, w in edges:
        move = _move(u, w)
        if move is None:
            raise SequenceError(
                "edge endpoints must differ by one moved degree",
                context={"u": list(u.degrees), "w": list(w.degrees)},
            )
        a, b = move
        graph.add_edge(u, w, move=(u, a, b, u.shifted({a: 1})))
    return graph


def _step(weight: Value, data: dict[str, Any], start: DegreeSequence, r: RatioFunction) -> Value:
    """Weight of the far endpoint from the weight of ``start``; N(d-e_a)/N(d-e_b) = r_ab(d)."""

    origin, a, b, d = data["move"]
    ratio = r(a, b, d)
    return weight / ratio if start == origin else weight * ratio


def ratio_propagate(
    vertices: Iterable[DegreeSequence],
    r: RatioFunction,
    reference: DegreeSequence,
    *,
    edges: Iterable[tuple[DegreeSequence, DegreeSequence]] | None = None,
) -> PropagationResult:
    """Weights proportional to N along a spanning tree, plus the worst cycle mismatch."""

    graph = sequence_graph(vertices, edges)
    if reference not in graph:
        raise SequenceError("reference sequence is not a vertex", context={"reference": list(reference.degrees)})
    if not nx.is_connected(graph):
        components = [
            sorted(list(seq.degrees) for seq in component) for component in nx.connected_components(graph)
        ]
        raise DisconnectedGraphError(
            "sequence graph is disconnected", context={"components": components}
        )

    weights: dict[DegreeSequence, Value] = {reference: 1}
    tree_edges = set()
    for parent, child in nx.bfs_edges(graph, reference):
        weights[child] = _step(weights[parent], graph.edges[parent, child], parent, r)
        tree_edges.add(frozenset((parent, child)))

    worst = 0.0
    checked = 0
    for u, w, data in graph.edges(data=True):
        if frozenset((u, w)) in tree_edges:
            continue
        checked += 1
        predicted = _step(weights[u], data, u, r)
        if predicted == weights[w]:
            continue
        if predicted <= 0 or weights[w] <= 0:
            worst = math.inf
            continue
        worst = max(worst, abs(math.log(predicted / weights[w])))
    return PropagationResult(weights=weights, max_inconsistency=worst, cycles_checked=checked)


__all__ = ["PropagationResult", "ratio_propagate", "sequence_graph"]
