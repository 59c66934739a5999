"""Chordality, brute-force minimal triangulations and potential maximal cliques."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations
from typing import FrozenSet, Iterable, List, Optional, Set, Tuple

from .graph import Graph, GraphError, bits, component_masks, neighborhood_mask, popcount, to_mask, to_set
from .separators import BRUTE_FORCE_CAP, CapExceeded, enumerate_minimal_separators

Edge = Tuple[int, int]

TRIANGULATION_CAP = 8
SUBSET_FILL_LIMIT = 16

DEFINITIONAL = "definitional"
CHARACTERIZATION = "characterization"


@dataclass(frozen=True)
class Triangulation:
    base: Graph
    fill: FrozenSet[Edge]

    @property
    def graph(self) -> Graph:
        return add_edges(self.base, self.fill)

    def maximal_cliques(self) -> List[FrozenSet[int]]:
        return maximal_cliques(self.graph)


@dataclass(frozen=True)
class PmcSet:
    members: FrozenSet[FrozenSet[int]]
    source: str

    def __len__(self) -> int:
        return len(self.members)


@dataclass(frozen=True)
class CorollaryReport:
    n: int
    pmc_count: int
    sep_count: int

    @property
    def holds(self) -> bool:
        # pmc >= sep / n, kept in integers
        return self.pmc_count * self.n >= self.sep_count

    def __bool__(self) -> bool:
        return self.holds

    def to_json(self) -> dict:
        return {"n": self.n, "pmc_count": self.pmc_count, "sep_count": self.sep_count,
                "corollary_holds": self.holds}


def add_edges(G: Graph, edges: Iterable[Edge]) -> Graph:
    adj = list(G.adj)
    for u, v in edges:
        if u == v or not (0 <= u < G.n and 0 <= v < G.n):
            raise GraphError(f"invalid fill edge ({u}, {v})")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(G.n, adj, G.labels)


def non_edges(G: Graph) -> List[Edge]:
    return [(u, v) for u in range(G.n) for v in range(u + 1, G.n) if not G.adj[u] >> v & 1]


# -- chordality ----------------------------------------------------------------


def _mcs_order(adj: Tuple[int, ...], n: int) -> List[int]:
    """Maximum cardinality search; returns vertices in visiting order."""
    weight = [0] * n
    unvisited = (1 << n) - 1
    order = []
    while unvisited:
        v = max(bits(unvisited), key=lambda x: (weight[x], -x))
        order.append(v)
        unvisited &= ~(1 << v)
        for w in bits(adj[v] & unvisited):
            weight[w] += 1
    return order


def _is_chordal_adj(adj: Tuple[int, ...], n: int) -> bool:
    # reverse MCS order is a perfect elimination ordering iff the graph is chordal
    order = _mcs_order(adj, n)
    before = 0
    for v in order:
        earlier = adj[v] & before
        if earlier:
            # the latest-visited earlier neighbor must see all other earlier neighbors
            parent = max(bits(earlier), key=order.index)
            if (earlier & ~(1 << parent)) & ~adj[parent]:
                return False
        before |= 1 << v
    return True


def is_chordal(G: Graph) -> bool:
    """True iff ``G`` has a perfect elimination ordering."""
    return _is_chordal_adj(G.adj, G.n)


def is_perfect_elimination_ordering(G: Graph, order: List[int]) -> bool:
    later = G.full_mask
    for v in order:
        later &= ~(1 << v)
        nb = G.adj[v] & later
        for u in bits(nb):
            if (nb & ~(1 << u)) & ~G.adj[u]:
                return False
    return True


def has_long_induced_cycle(G: Graph) -> bool:
    """Brute force: some vertex subset of size >= 4 induces a cycle."""
    for size in range(4, G.n + 1):
        for combo in combinations(range(G.n), size):
            mask = to_mask(combo)
            if all(popcount(G.adj[v] & mask) == 2 for v in combo):
                if len(component_masks(G, mask)) == 1:
                    return True
    return False


# -- cliques -------------------------------------------------------------------


def maximal_cliques(G: Graph) -> List[FrozenSet[int]]:
    """Bron-Kerbosch with pivoting; output sorted lexicographically."""
    adj = G.adj
    out = []

    def expand(R: int, P: int, X: int) -> None:
        if not P and not X:
            out.append(R)
            return
        pivot = max(bits(P | X), key=lambda u: popcount(P & adj[u]))
        for v in bits(P & ~adj[pivot]):
            vb = 1 << v
            expand(R | vb, P & adj[v], X & adj[v])
            P &= ~vb
            X |= vb

    if G.n:
        expand(0, G.full_mask, 0)
    return [frozenset(t) for t in sorted(tuple(bits(c)) for c in out)]


# -- minimal triangulations ------------------------------------------------------


def _check_cap(G: Graph, cap: int) -> None:
    if G.n > cap:
        raise CapExceeded(f"limited to n <= {cap}, got n = {G.n}")


def _fill_mask_edges(pairs: List[Edge], mask: int) -> FrozenSet[Edge]:
    return frozenset(pairs[i] for i in bits(mask))


def _with_fill(G: Graph, pairs: List[Edge], mask: int) -> Tuple[int, ...]:
    adj = list(G.adj)
    for i in bits(mask):
        u, v = pairs[i]
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return tuple(adj)


def _minimal_by_fill_subsets(G: Graph, exact: bool) -> List[int]:
    pairs = non_edges(G)
    n = G.n
    chordal = [F for F in range(1 << len(pairs)) if _is_chordal_adj(_with_fill(G, pairs, F), n)]
    chordal_set = set(chordal)
    out = []
    for F in chordal:
        if any(F & ~(1 << i) in chordal_set for i in bits(F)):
            continue
        if exact:
            # every proper sub-fill, not just single-edge removals
            sub = (F - 1) & F
            proper_ok = True
            while True:
                if sub != F and sub in chordal_set:
                    proper_ok = False
                    break
                if sub == 0:
                    break
                sub = (sub - 1) & F
            if not proper_ok:
                continue
        out.append(F)
    return out


def elimination_fill(G: Graph, order: Iterable[int]) -> FrozenSet[Edge]:
    """Fill edges created by eliminating vertices of ``G`` in ``order``."""
    adj = list(G.adj)
    remaining = G.full_mask
    fill = set()
    for v in order:
        remaining &= ~(1 << v)
        nb = adj[v] & remaining
        for u in bits(nb):
            missing = nb & ~adj[u] & ~(1 << u)
            for w in bits(missing):
                if u < w:
                    fill.add((u, w))
                adj[u] |= 1 << w
                adj[w] |= 1 << u
    return frozenset(fill)


def _minimal_by_orderings(G: Graph) -> List[FrozenSet[Edge]]:
    fills = {elimination_fill(G, p) for p in permutations(range(G.n))}
    return [F for F in fills if not any(other < F for other in fills)]


def minimal_triangulations(G: Graph, method: str = "auto", cap: int = TRIANGULATION_CAP) -> List[Triangulation]:
    """Every minimal triangulation of ``G``, sorted by fill.

    ``method="subsets"`` scans all fill subsets over the non-edges and keeps the
    chordal ones from which no single fill edge can be dropped; for ``n <= 6``
    full subset minimality is checked too.  ``method="orderings"`` takes the
    inclusion-minimal fills over all elimination orderings.  ``auto`` picks
    subsets when there are at most 16 non-edges.
    """
    _check_cap(G, cap)
    if method == "auto":
        method = "subsets" if len(non_edges(G)) <= SUBSET_FILL_LIMIT else "orderings"
    if method == "subsets":
        pairs = non_edges(G)
        fills = [_fill_mask_edges(pairs, F) for F in _minimal_by_fill_subsets(G, exact=G.n <= 6)]
    elif method == "orderings":
        fills = _minimal_by_orderings(G)
    else:
        raise ValueError(f"unknown method {method!r}")
    return [Triangulation(G, f) for f in sorted(fills, key=lambda f: sorted(f))]


# -- potential maximal cliques ---------------------------------------------------


def pmcs_definitional(G: Graph, cap: int = TRIANGULATION_CAP) -> PmcSet:
    """Union of the maximal cliques of all minimal triangulations."""
    members: Set[FrozenSet[int]] = set()
    for T in minimal_triangulations(G, cap=cap):
        members.update(T.maximal_cliques())
    return PmcSet(frozenset(members), DEFINITIONAL)


def _is_pmc_mask(G: Graph, omega: int) -> bool:
    adj = G.adj
    comps = component_masks(G, G.full_mask & ~omega)
    seen = []
    for c in comps:
        nc = neighborhood_mask(G, c)
        if nc == omega:
            return False
        seen.append(nc)
    for u in bits(omega):
        need = omega & ~adj[u] & ~(1 << u) & ~((1 << (u + 1)) - 1)
        for v in bits(need):
            pair = (1 << u) | (1 << v)
            if not any(nc & pair == pair for nc in seen):
                return False
    return True


def is_pmc(G: Graph, omega) -> bool:
    """Characterization test: ``G - omega`` has no full component, and every
    non-adjacent pair of ``omega`` lies in the neighborhood of one component."""
    mask = omega if isinstance(omega, int) else to_mask(omega)
    G.check_mask(mask)
    if not mask:
        raise GraphError("omega must be nonempty")
    return _is_pmc_mask(G, mask)


def pmcs_by_characterization(G: Graph, cap: Optional[int] = None) -> PmcSet:
    _check_cap(G, BRUTE_FORCE_CAP if cap is None else cap)
    members = frozenset(to_set(m) for m in range(1, 1 << G.n) if _is_pmc_mask(G, m))
    return PmcSet(members, CHARACTERIZATION)


def check_corollary(G: Graph, cap: Optional[int] = None) -> CorollaryReport:
    """Count PMCs and minimal separators of ``G`` and compare ``pmc * n`` with ``sep``."""
    _check_cap(G, BRUTE_FORCE_CAP if cap is None else cap)
    pmc = len(pmcs_by_characterization(G, cap))
    sep = enumerate_minimal_separators(G).count
    return CorollaryReport(G.n, pmc, sep)
