"""Minimal separators: predicates, a brute-force oracle and a branching enumerator.

The enumerator grows a connected set ``A`` from a root vertex.  At every node
the lowest-id vertex ``u`` of ``N(A)`` not yet placed in the accumulated
separator is either put into the separator (the measure ``|V| - d`` drops by
one, as in ``G - u``) or absorbed into ``A`` (the measure drops by two, as in
the contraction ``G/au`` together with one more unit of imbalance).  Leaves are
the nodes where ``N(A)`` is exhausted, so the number of leaves below a node of
measure ``mu`` is at most ``GOLDEN ** mu``.
"""
from __future__ import annotations

import math
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from typing import Dict, FrozenSet, Iterable, List, Optional, Set, Tuple

from .graph import (
    Graph,
    GraphError,
    all_graphs,
    bits,
    build_graph,
    component_mask,
    component_masks,
    is_connected_mask,
    neighborhood_mask,
    popcount,
    to_mask,
    to_set,
)

GOLDEN = (1 + math.sqrt(5)) / 2
BRUTE_FORCE_CAP = 22
MAX_SEP_EXHAUSTIVE_CAP = 7

BALANCED = "balanced"
ALL = "all"


class CapExceeded(ValueError):
    """The graph is too large for an exhaustive routine."""


@dataclass(frozen=True)
class Separation:
    """A partition ``(A, S, B)`` with ``A`` connected, ``S = N(A)`` and ``|A| <= |B| - d``."""

    A: FrozenSet[int]
    S: FrozenSet[int]
    B: FrozenSet[int]
    d: int = 0
    root: Optional[int] = None

    def validate(self, G: Graph) -> None:
        A, S, B = to_mask(self.A), to_mask(self.S), to_mask(self.B)
        if A & S or A & B or S & B or A | S | B != G.full_mask:
            raise ValueError("(A, S, B) is not a partition of V")
        if not A or not is_connected_mask(G, A):
            raise ValueError("G[A] is not connected")
        if neighborhood_mask(G, A) != S:
            raise ValueError("S != N(A)")
        if len(self.A) > len(self.B) - self.d:
            raise ValueError("|A| > |B| - d")
        if self.root is not None and self.root not in self.A:
            raise ValueError("root not in A")


@dataclass
class EnumerationReport:
    n: int
    mode: str
    separators: List[FrozenSet[int]]
    leaf_count: int = 0
    node_count: int = 0
    pruned_count: int = 0
    start_vertex_stats: Dict[int, int] = field(default_factory=dict)

    @property
    def count(self) -> int:
        return len(self.separators)

    def leaf_bound(self) -> float:
        """Per-root bound on the number of leaves, ``GOLDEN ** n``."""
        return GOLDEN ** self.n

    def to_json(self, emit_separators: bool = False) -> dict:
        out = {
            "n": self.n,
            "count": self.count,
            "mode": self.mode,
            "leaf_count": self.leaf_count,
            "node_count": self.node_count,
            "pruned_count": self.pruned_count,
            "max_root_leaf_count": max(self.start_vertex_stats.values(), default=0),
            "rho_n": GOLDEN ** self.n,
        }
        if emit_separators:
            out["separators"] = [sorted(s) for s in self.separators]
        return out


def canonical_order(separators: Iterable[Iterable[int]]) -> List[FrozenSet[int]]:
    """Sort vertex sets by their sorted member lists, lexicographically."""
    return [frozenset(t) for t in sorted(tuple(sorted(s)) for s in separators)]


# -- predicates --------------------------------------------------------------


def _mask(G: Graph, S) -> int:
    m = S if isinstance(S, int) else to_mask(S)
    G.check_mask(m)
    return m


def _check_pair(G: Graph, S: int, a: int, b: int) -> None:
    G._check_vertex(a)
    G._check_vertex(b)
    if a == b:
        raise GraphError("a and b must be distinct")
    if S >> a & 1 or S >> b & 1:
        raise GraphError("a and b must lie outside S")


def is_ab_separator(G: Graph, S, a: int, b: int) -> bool:
    """True iff ``a`` and ``b`` lie in different components of ``G - S``.

    If ``a`` and ``b`` are already disconnected in ``G``, the empty set qualifies.
    """
    S = _mask(G, S)
    _check_pair(G, S, a, b)
    return not component_mask(G, a, G.full_mask & ~S) >> b & 1


def _is_full(G: Graph, comp: int, S: int) -> bool:
    return neighborhood_mask(G, comp) == S


def is_minimal_ab_separator(G: Graph, S, a: int, b: int) -> bool:
    """Full-component test: the components of ``a`` and ``b`` in ``G - S`` both see all of ``S``."""
    S = _mask(G, S)
    _check_pair(G, S, a, b)
    rest = G.full_mask & ~S
    ca = component_mask(G, a, rest)
    if ca >> b & 1:
        return False
    cb = component_mask(G, b, rest)
    return _is_full(G, ca, S) and _is_full(G, cb, S)


def is_minimal_ab_separator_by_subsets(G: Graph, S, a: int, b: int) -> bool:
    """Definitional check: ``S`` separates and no proper subset of it does."""
    S = _mask(G, S)
    _check_pair(G, S, a, b)
    if not is_ab_separator(G, S, a, b):
        return False
    members = list(bits(S))
    for r in range(len(members)):
        for sub in combinations(members, r):
            if is_ab_separator(G, to_mask(sub), a, b):
                return False
    return True


def full_components(G: Graph, S) -> List[FrozenSet[int]]:
    S = _mask(G, S)
    return [to_set(c) for c in component_masks(G, G.full_mask & ~S) if _is_full(G, c, S)]


def _is_minimal_separator_mask(G: Graph, S: int) -> bool:
    full = 0
    for c in component_masks(G, G.full_mask & ~S):
        if neighborhood_mask(G, c) == S:
            full += 1
            if full == 2:
                return True
    return False


def is_minimal_separator(G: Graph, S) -> bool:
    """True iff at least two components of ``G - S`` have neighborhood exactly ``S``."""
    return _is_minimal_separator_mask(G, _mask(G, S))


def separating_pairs(G: Graph, S) -> List[Tuple[int, int]]:
    """All pairs ``(a, b)``, ``a < b``, for which ``S`` is a minimal (a,b)-separator."""
    S = _mask(G, S)
    fulls = [c for c in component_masks(G, G.full_mask & ~S) if _is_full(G, c, S)]
    pairs = []
    for c1, c2 in combinations(fulls, 2):
        for a in bits(c1):
            for b in bits(c2):
                pairs.append((min(a, b), max(a, b)))
    return sorted(pairs)


# -- brute force oracle ------------------------------------------------------


def _check_cap(G: Graph, cap: Optional[int]) -> None:
    cap = BRUTE_FORCE_CAP if cap is None else cap
    if G.n > cap:
        raise CapExceeded(f"brute force limited to n <= {cap}, got n = {G.n}")


def brute_force_minimal_separators(G: Graph, cap: Optional[int] = None) -> Set[FrozenSet[int]]:
    """Every ``S`` in the power set of ``V`` passing :func:`is_minimal_separator`."""
    _check_cap(G, cap)
    return {to_set(S) for S in range(1 << G.n) if _is_minimal_separator_mask(G, S)}


def brute_force_minimal_ab_separators(G: Graph, a: int, b: int, cap: Optional[int] = None) -> Set[FrozenSet[int]]:
    _check_cap(G, cap)
    _check_pair(G, 0, a, b)
    avoid = (1 << a) | (1 << b)
    return {to_set(S) for S in range(1 << G.n) if not S & avoid and is_minimal_ab_separator(G, S, a, b)}


# -- branching enumeration ---------------------------------------------------


class _Brancher:
    """Depth-first branching from a fixed root; see the module docstring."""

    def __init__(self, G: Graph, root: int, balanced: bool, target: Optional[int] = None):
        self.G = G
        self.adj = G.adj
        self.full = G.full_mask
        self.n = G.n
        self.root = root
        self.balanced = balanced
        self.target = target
        self.found: List[Tuple[int, int]] = []
        self.leaves = 0
        self.nodes = 0
        self.pruned = 0

    def run(self) -> "_Brancher":
        root_bit = 1 << self.root
        nbhd = self.adj[self.root]
        if self.target is not None and nbhd >> self.target & 1:
            # b adjacent to a: no (a,b)-separator exists
            self.nodes += 1
            self.pruned += 1
            return self
        limit = sys.getrecursionlimit()
        if self.n + 100 > limit:
            sys.setrecursionlimit(self.n + 100)
        self._branch(root_bit, 1, nbhd, 0, 0)
        return self

    def _branch(self, A: int, size_a: int, nbhd: int, S: int, size_s: int) -> None:
        self.nodes += 1
        if self.balanced and 2 * size_a > self.n - size_s:
            self.pruned += 1
            return
        frontier = nbhd & ~S
        if not frontier:
            self.leaves += 1
            self._leaf(A, S)
            return
        u_bit = frontier & -frontier
        # u goes to the separator
        self._branch(A, size_a, nbhd, S | u_bit, size_s + 1)
        # u joins A
        u = u_bit.bit_length() - 1
        grown = A | u_bit
        new_nbhd = (nbhd | self.adj[u]) & ~grown
        if self.target is not None and new_nbhd >> self.target & 1:
            self.nodes += 1
            self.pruned += 1
            return
        self._branch(grown, size_a + 1, new_nbhd, S, size_s)

    def _leaf(self, A: int, S: int) -> None:
        G = self.G
        rest = self.full & ~A & ~S
        if not rest:
            return
        if self.target is not None:
            cb = component_mask(G, self.target, rest)
            if neighborhood_mask(G, cb) == S:
                self.found.append((A, S))
            return
        for c in component_masks(G, rest):
            if neighborhood_mask(G, c) == S:
                self.found.append((A, S))
                return


def _run_root(args) -> Tuple[int, List[int], int, int, int]:
    G, root, balanced = args
    br = _Brancher(G, root, balanced).run()
    return root, [S for _, S in br.found], br.leaves, br.nodes, br.pruned


def enumerate_minimal_separators(G: Graph, mode: str = BALANCED, jobs: int = 1) -> EnumerationReport:
    """All minimal separators of ``G`` via per-root branching, deduplicated.

    ``mode="balanced"`` prunes nodes with ``2|A| > n - |S_acc|``; ``mode="all"``
    keeps every branch.  With ``jobs > 1`` roots are processed in worker
    processes and merged afterwards; the result does not depend on ``jobs``.
    """
    if mode not in (BALANCED, ALL):
        raise ValueError(f"unknown mode {mode!r}")
    balanced = mode == BALANCED
    tasks = [(G, r, balanced) for r in range(G.n)]
    if jobs > 1 and G.n > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_run_root, tasks))
    else:
        results = [_run_root(t) for t in tasks]
    seps: Set[int] = set()
    report = EnumerationReport(n=G.n, mode=mode, separators=[])
    for root, found, leaves, nodes, pruned in results:
        seps.update(found)
        report.leaf_count += leaves
        report.node_count += nodes
        report.pruned_count += pruned
        report.start_vertex_stats[root] = leaves
    report.separators = canonical_order(to_set(S) for S in seps)
    return report


def enumerate_separations(G: Graph, root: int, mode: str = BALANCED) -> List[Separation]:
    """The accepted leaves of one root's branching, as verified separations."""
    G._check_vertex(root)
    br = _Brancher(G, root, mode == BALANCED).run()
    out = []
    for A, S in br.found:
        B = G.full_mask & ~A & ~S
        out.append(Separation(to_set(A), to_set(S), to_set(B), 0, root))
    return out


def enumerate_minimal_ab_separators(G: Graph, a: int, b: int) -> Set[FrozenSet[int]]:
    """All minimal (a,b)-separators, by branching from ``a`` with ``b`` kept on the far side."""
    G._check_vertex(a)
    G._check_vertex(b)
    if a == b:
        raise GraphError("a and b must be distinct")
    br = _Brancher(G, a, balanced=False, target=b).run()
    return {to_set(S) for _, S in br.found}


def count_minimal_ab_separators(G: Graph, a: int, b: int) -> Tuple[int, int, int]:
    """``(count, leaf_count, node_count)`` for the targeted enumeration."""
    br = _Brancher(G, a, balanced=False, target=b).run()
    return len(br.found), br.leaves, br.nodes


# -- extremal search ---------------------------------------------------------


def _atlas_graphs(n: int):
    import networkx as nx

    for H in nx.graph_atlas_g():
        if H.number_of_nodes() == n:
            yield build_graph(n, H.edges())


def max_sep_exhaustive(n: int, reduce_isomorphism: bool = False) -> Tuple[int, Graph]:
    """Exact ``sep(n)`` and the first graph attaining it.

    By default every labelled graph (edge mask) is examined.  With
    ``reduce_isomorphism`` the unlabelled graphs of the networkx atlas are used
    instead, one per isomorphism class.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    if n > MAX_SEP_EXHAUSTIVE_CAP:
        raise CapExceeded(f"exhaustive search limited to n <= {MAX_SEP_EXHAUSTIVE_CAP}")
    source = _atlas_graphs(n) if reduce_isomorphism else all_graphs(n)
    best, witness = -1, None
    for G in source:
        c = enumerate_minimal_separators(G, BALANCED).count
        if c > best:
            best, witness = c, G
    return best, witness
