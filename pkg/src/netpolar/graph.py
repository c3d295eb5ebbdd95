"""Node- and edge-weighted undirected networks and geodesic distances.

A network couples a connected weighted graph with a non-negative mass on
every node.  Edge weights are direct distances (a larger weight means a
weaker connection); weight 0 is a legal edge meaning distance 0 and is
distinct from the absence of an edge.  All-pairs geodesic distances are
computed with a vectorized Floyd-Warshall sweep.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Iterable, Mapping, Sequence

import numpy as np

from .errors import (
    DisconnectedError,
    DuplicateEdgeError,
    DuplicateNodeError,
    EmptyNodeSetError,
    NegativeMassError,
    NegativeWeightError,
    NonpositiveLambdaError,
    NoSuchEdgeError,
    NoSuchNodeError,
    SchemaError,
    SelfLoopError,
    SingleNodeError,
    UnknownNodeError,
    WouldDisconnectError,
)

Edge = tuple[str, str, float]


@dataclass(frozen=True)
class Network:
    """A validated (graph, masses) pair.

    ``ids`` fixes the node order used by every matrix produced from this
    network.  ``longest_path_convention`` marks networks that were admitted
    despite being disconnected; cross-component distances are then set to
    the largest finite geodesic distance.
    """

    ids: tuple[str, ...]
    masses: tuple[float, ...]
    edges: tuple[Edge, ...]
    longest_path_convention: bool = False

    @property
    def n(self) -> int:
        return len(self.ids)

    @property
    def total_mass(self) -> float:
        return float(sum(self.masses))

    def index(self, node_id: str) -> int:
        try:
            return self.ids.index(node_id)
        except ValueError:
            raise NoSuchNodeError(f"no node {node_id!r}") from None

    def mass_vector(self) -> np.ndarray:
        return np.asarray(self.masses, dtype=float)

    def adjacency(self) -> np.ndarray:
        """Dense direct-distance matrix, ``inf`` where no edge exists."""
        adj = np.full((self.n, self.n), np.inf)
        np.fill_diagonal(adj, 0.0)
        idx = {v: i for i, v in enumerate(self.ids)}
        for u, v, w in self.edges:
            i, j = idx[u], idx[v]
            adj[i, j] = adj[j, i] = w
        return adj

    def has_edge(self, u: str, v: str) -> bool:
        pair = frozenset((u, v))
        return any(frozenset((a, b)) == pair for a, b, _ in self.edges)


@dataclass(frozen=True)
class DistanceMatrix:
    """All-pairs geodesic distances in the node order of the source network."""

    ids: tuple[str, ...]
    d: np.ndarray
    diameter: float
    diameter_pair: tuple[str, str] | None

    def distance(self, u: str, v: str) -> float:
        ids = list(self.ids)
        return float(self.d[ids.index(u), ids.index(v)])


def validate_network(
    nodes: Sequence[tuple[str, float]],
    edges: Iterable[tuple[str, str, float]] = (),
    allow_disconnected: bool = False,
) -> Network:
    """Validate raw node/edge data and return a :class:`Network`.

    ``nodes`` is an ordered sequence of ``(id, mass)`` pairs; ``edges`` an
    iterable of ``(u, v, weight)`` triples.  Connectivity is verified by
    traversal unless ``allow_disconnected`` opts into the longest-path
    convention for cross-component distances.
    """
    nodes = list(nodes)
    if not nodes:
        raise EmptyNodeSetError("network needs at least one node")
    ids = tuple(str(i) for i, _ in nodes)
    if len(set(ids)) != len(ids):
        raise DuplicateNodeError("node ids must be unique")
    masses = tuple(float(m) for _, m in nodes)
    for i, m in zip(ids, masses):
        if m < 0 or not np.isfinite(m):
            raise NegativeMassError(f"node {i!r} has invalid mass {m}")

    known = set(ids)
    seen: set[frozenset[str]] = set()
    clean: list[Edge] = []
    for u, v, w in edges:
        u, v, w = str(u), str(v), float(w)
        if u not in known or v not in known:
            raise UnknownNodeError(f"edge ({u!r}, {v!r}) references unknown node")
        if u == v:
            raise SelfLoopError(f"self-loop at {u!r}")
        if w < 0 or not np.isfinite(w):
            raise NegativeWeightError(f"edge ({u!r}, {v!r}) has invalid weight {w}")
        key = frozenset((u, v))
        if key in seen:
            raise DuplicateEdgeError(f"duplicate edge ({u!r}, {v!r})")
        seen.add(key)
        clean.append((u, v, w))

    net = Network(ids, masses, tuple(clean), longest_path_convention=allow_disconnected)
    if not _is_connected(net) and not allow_disconnected:
        raise DisconnectedError("graph is not connected")
    return net


def _is_connected(net: Network) -> bool:
    if net.n <= 1:
        return True
    neighbors: dict[str, list[str]] = {i: [] for i in net.ids}
    for u, v, _ in net.edges:
        neighbors[u].append(v)
        neighbors[v].append(u)
    seen = {net.ids[0]}
    stack = [net.ids[0]]
    while stack:
        for w in neighbors[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == net.n


def geodesic_distances(net: Network) -> DistanceMatrix:
    """All-pairs shortest-path distances, diameter and one attaining pair.

    The diameter pair is the first maximizing pair in node order, which
    makes the tie-break deterministic.  Under the longest-path convention,
    distances between components are replaced by the largest finite
    geodesic distance in the whole graph.
    """
    d = net.adjacency()
    n = net.n
    for k in range(n):
        np.minimum(d, d[:, k, None] + d[None, k, :], out=d)
    if np.isinf(d).any():
        if not net.longest_path_convention:
            raise DisconnectedError("graph is not connected")
        finite = d[np.isfinite(d)]
        d[np.isinf(d)] = finite.max() if finite.size else 0.0
    d.flags.writeable = False
    if n < 2:
        return DistanceMatrix(net.ids, d, 0.0, None)
    iu = np.triu_indices(n, k=1)
    flat = d[iu]
    k = int(np.argmax(flat))
    pair = (net.ids[int(iu[0][k])], net.ids[int(iu[1][k])])
    return DistanceMatrix(net.ids, d, float(flat[k]), pair)


def diameter(net: Network) -> tuple[tuple[str, str] | None, float]:
    """Maximal geodesic distance and its (lexicographically first) pair."""
    dm = geodesic_distances(net)
    return dm.diameter_pair, dm.diameter


def average_path_length(net: Network) -> float:
    """Mean geodesic distance over ordered node pairs, sum d(i,j) / (n(n-1))."""
    if net.n < 2:
        raise SingleNodeError("average path length needs at least two nodes")
    dm = geodesic_distances(net)
    return float(dm.d.sum() / (net.n * (net.n - 1)))


def delete_edge(net: Network, u: str, v: str) -> Network:
    """Remove edge uv; refuse if it does not exist or would disconnect."""
    pair = frozenset((u, v))
    kept = tuple(e for e in net.edges if frozenset(e[:2]) != pair)
    if len(kept) == len(net.edges):
        raise NoSuchEdgeError(f"no edge ({u!r}, {v!r})")
    out = replace(net, edges=kept)
    if not _is_connected(out) and not net.longest_path_convention:
        raise WouldDisconnectError(f"deleting edge ({u!r}, {v!r}) disconnects the graph")
    return out


def delete_node(net: Network, u: str) -> Network:
    """Remove node u with its incident edges; refuse if it would disconnect."""
    if u not in net.ids:
        raise NoSuchNodeError(f"no node {u!r}")
    ids = tuple(i for i in net.ids if i != u)
    if not ids:
        raise EmptyNodeSetError("cannot delete the only node")
    masses = tuple(m for i, m in zip(net.ids, net.masses) if i != u)
    edges = tuple(e for e in net.edges if u not in e[:2])
    out = Network(ids, masses, edges, net.longest_path_convention)
    if not _is_connected(out) and not net.longest_path_convention:
        raise WouldDisconnectError(f"deleting node {u!r} disconnects the graph")
    return out


def scale_masses(net: Network, lam: float) -> Network:
    """Multiply every node mass by ``lam > 0``; the graph is unchanged."""
    if not lam > 0:
        raise NonpositiveLambdaError(f"scale factor must be positive, got {lam}")
    return replace(net, masses=tuple(m * lam for m in net.masses))


# -- JSON wire format --------------------------------------------------------

def network_from_dict(raw: Mapping, allow_disconnected: bool = False) -> Network:
    """Build a network from the JSON schema ``{"nodes": [...], "edges": [...]}``.

    The schema is strict: unknown keys anywhere are rejected.
    """
    if not isinstance(raw, Mapping):
        raise SchemaError("network document must be a JSON object")
    extra = set(raw) - {"nodes", "edges"}
    if extra:
        raise SchemaError(f"unknown top-level keys: {sorted(extra)}")
    if "nodes" not in raw:
        raise SchemaError("missing 'nodes'")
    nodes = []
    for rec in raw["nodes"]:
        if not isinstance(rec, Mapping) or set(rec) != {"id", "mass"}:
            raise SchemaError(f"node record must have exactly 'id' and 'mass': {rec!r}")
        if not isinstance(rec["mass"], (int, float)) or isinstance(rec["mass"], bool):
            raise SchemaError(f"mass must be a number: {rec!r}")
        nodes.append((str(rec["id"]), float(rec["mass"])))
    edges = []
    for rec in raw.get("edges", []):
        if not isinstance(rec, Mapping) or set(rec) != {"u", "v", "w"}:
            raise SchemaError(f"edge record must have exactly 'u', 'v' and 'w': {rec!r}")
        if not isinstance(rec["w"], (int, float)) or isinstance(rec["w"], bool):
            raise SchemaError(f"weight must be a number: {rec!r}")
        edges.append((str(rec["u"]), str(rec["v"]), float(rec["w"])))
    try:
        return validate_network(nodes, edges, allow_disconnected=allow_disconnected)
    except UnknownNodeError as exc:
        raise SchemaError(str(exc)) from exc


def network_to_dict(net: Network) -> dict:
    return {
        "nodes": [{"id": i, "mass": m} for i, m in zip(net.ids, net.masses)],
        "edges": [{"u": u, "v": v, "w": w} for u, v, w in net.edges],
    }
