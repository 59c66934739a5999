"""Immutable simple graphs over dense integer ids, backed by adjacency bitmasks.

Vertex sets cross the public API as ``frozenset[int]``; internally every set
is an ``int`` whose bit ``v`` is set iff ``v`` is a member.
"""
from __future__ import annotations

from collections import deque
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

VertexSet = frozenset


class GraphError(ValueError):
    """Raised for malformed graphs or out-of-range vertex ids."""


def bits(mask: int) -> Iterator[int]:
    """Yield the positions of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def to_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def to_set(mask: int) -> frozenset:
    return frozenset(bits(mask))


class Graph:
    """Undirected simple graph on vertices ``0..n-1``.

    ``adj[v]`` is the neighbor bitmask of ``v``.  Optional ``labels`` carry
    per-vertex tags (generators use them to mark ``a``, ``b`` and layer
    coordinates).  Instances are treated as immutable values.
    """

    __slots__ = ("n", "adj", "labels", "_full")

    def __init__(self, n: int, adj: Sequence[int], labels: Optional[Sequence[str]] = None):
        if n < 0:
            raise GraphError(f"vertex count must be non-negative, got {n}")
        if len(adj) != n:
            raise GraphError(f"expected {n} adjacency masks, got {len(adj)}")
        if labels is not None and len(labels) != n:
            raise GraphError(f"expected {n} labels, got {len(labels)}")
        self.n = n
        self.adj: Tuple[int, ...] = tuple(adj)
        self.labels: Optional[Tuple[str, ...]] = tuple(labels) if labels is not None else None
        self._full = (1 << n) - 1

    # -- basic queries -------------------------------------------------

    @property
    def full_mask(self) -> int:
        return self._full

    def vertices(self) -> range:
        return range(self.n)

    def neighbors(self, v: int) -> frozenset:
        self._check_vertex(v)
        return to_set(self.adj[v])

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return popcount(self.adj[v])

    def degrees(self) -> List[int]:
        return [popcount(m) for m in self.adj]

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> List[Tuple[int, int]]:
        """All edges as ``(u, v)`` with ``u < v``, sorted."""
        out = []
        for u in range(self.n):
            for v in bits(self.adj[u] >> (u + 1)):
                out.append((u, u + 1 + v))
        return out

    @property
    def m(self) -> int:
        return sum(popcount(a) for a in self.adj) // 2

    def vertex(self, label: str) -> int:
        """Id of the vertex carrying ``label``."""
        if self.labels is None:
            raise GraphError("graph has no labels")
        try:
            return self.labels.index(label)
        except ValueError:
            raise GraphError(f"no vertex labelled {label!r}") from None

    def label(self, v: int) -> str:
        self._check_vertex(v)
        return self.labels[v] if self.labels is not None else str(v)

    # -- validation ----------------------------------------------------

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise GraphError(f"vertex {v} out of range 0..{self.n - 1}")

    def check_mask(self, mask: int) -> None:
        if mask < 0 or mask & ~self._full:
            raise GraphError(f"vertex set {sorted(bits(mask & ~self._full))} out of range 0..{self.n - 1}")

    def check_invariants(self) -> None:
        """Raise ``GraphError`` unless adjacency is symmetric, loop-free and in range."""
        for u, nb in enumerate(self.adj):
            if nb & ~self._full:
                raise GraphError(f"vertex {u} has out-of-range neighbors")
            if nb >> u & 1:
                raise GraphError(f"self-loop at {u}")
            for v in bits(nb):
                if not self.adj[v] >> u & 1:
                    raise GraphError(f"asymmetric adjacency {u}-{v}")

    # -- value semantics -----------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj and self.labels == other.labels

    def __hash__(self) -> int:
        return hash((self.n, self.adj, self.labels))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def build_graph(n: int, edges: Iterable[Tuple[int, int]], labels: Optional[Sequence[str]] = None) -> Graph:
    """Build a graph from an edge list; duplicate edges collapse to one."""
    if n < 0:
        raise GraphError(f"vertex count must be non-negative, got {n}")
    adj = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) out of range 0..{n - 1}")
        if u == v:
            raise GraphError(f"self-loop ({u}, {u}) rejected")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, adj, labels)


def _as_mask(G: Graph, X) -> int:
    mask = X if isinstance(X, int) else to_mask(X)
    G.check_mask(mask)
    return mask


def neighborhood_mask(G: Graph, mask: int) -> int:
    out = 0
    adj = G.adj
    for u in bits(mask):
        out |= adj[u]
    return out & ~mask


def neighborhood(G: Graph, X: Iterable[int]) -> frozenset:
    """Open neighborhood N(X): vertices outside ``X`` adjacent to some member of ``X``."""
    return to_set(neighborhood_mask(G, _as_mask(G, X)))


def component_mask(G: Graph, start: int, allowed: int) -> int:
    """Vertices reachable from ``start`` inside the vertex mask ``allowed``."""
    adj = G.adj
    seen = 1 << start
    frontier = seen
    while frontier:
        grow = 0
        for u in bits(frontier):
            grow |= adj[u]
        frontier = grow & allowed & ~seen
        seen |= frontier
    return seen


def component_masks(G: Graph, allowed: int) -> List[int]:
    """Connected components of ``G[allowed]``, ordered by smallest member."""
    out = []
    rest = allowed
    while rest:
        low = (rest & -rest).bit_length() - 1
        comp = component_mask(G, low, allowed)
        out.append(comp)
        rest &= ~comp
    return out


def connected_components(G: Graph) -> List[frozenset]:
    return [to_set(c) for c in component_masks(G, G.full_mask)]


def is_connected_mask(G: Graph, mask: int) -> bool:
    if not mask:
        return True
    low = (mask & -mask).bit_length() - 1
    return component_mask(G, low, mask) == mask


def induced_subgraph(G: Graph, keep: Iterable[int]) -> Tuple[Graph, Dict[int, int]]:
    """Subgraph induced by ``keep``, re-indexed in increasing id order."""
    keep_mask = _as_mask(G, keep)
    order = list(bits(keep_mask))
    mapping = {old: new for new, old in enumerate(order)}
    adj = []
    for old in order:
        adj.append(to_mask(mapping[w] for w in bits(G.adj[old] & keep_mask)))
    labels = [G.labels[old] for old in order] if G.labels is not None else None
    return Graph(len(order), adj, labels), mapping


def remove_vertices(G: Graph, X: Iterable[int]) -> Tuple[Graph, Dict[int, int]]:
    """G - X, re-indexed; returns the graph and the old->new id map."""
    mask = _as_mask(G, X)
    return induced_subgraph(G, G.full_mask & ~mask)


def contract_edge(G: Graph, u: int, v: int) -> Graph:
    """G/uv: ``u`` becomes adjacent to N({u, v}) and ``v`` is removed.

    Ids above ``v`` shift down by one; ``u`` keeps its id when ``u < v``.
    """
    if not G.has_edge(u, v):
        raise GraphError(f"({u}, {v}) is not an edge")
    adj = list(G.adj)
    merged = (adj[u] | adj[v]) & ~(1 << u) & ~(1 << v)
    for w in bits(adj[v]):
        adj[w] &= ~(1 << v)
    for w in bits(merged):
        adj[w] |= 1 << u
    adj[u] = merged
    adj[v] = 0
    H = Graph(G.n, adj, G.labels)
    sub, _ = remove_vertices(H, [v])
    return sub


def complement(G: Graph) -> Graph:
    full = G.full_mask
    return Graph(G.n, [full & ~(1 << v) & ~a for v, a in enumerate(G.adj)], G.labels)


def graph_from_edge_mask(n: int, mask: int) -> Graph:
    """Graph whose edge set is selected by ``mask`` over pairs in lexicographic order."""
    edges = []
    bit = 0
    for u in range(n):
        for v in range(u + 1, n):
            if mask >> bit & 1:
                edges.append((u, v))
            bit += 1
    return build_graph(n, edges)


def all_graphs(n: int) -> Iterator[Graph]:
    """Every labelled graph on ``n`` vertices, one per edge mask."""
    pairs = n * (n - 1) // 2
    for mask in range(1 << pairs):
        yield graph_from_edge_mask(n, mask)


def path_graph(n: int) -> Graph:
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("a cycle needs at least 3 vertices")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return build_graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def bfs_reachable(G: Graph, start: int, removed: Iterable[int] = ()) -> frozenset:
    """Plain set-based BFS, kept independent of the bitmask routines for cross-checks."""
    removed = set(removed)
    seen = {start}
    queue = deque([start])
    while queue:
        u = queue.popleft()
        for w in G.neighbors(u):
            if w not in seen and w not in removed:
                seen.add(w)
                queue.append(w)
    return frozenset(seen)
