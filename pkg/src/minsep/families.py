"""Extremal graph families and their exact counting formulas.

Vertex numbering is canonical: ``a = 0``, ``b = 1`` and the internal vertex at
depth ``i`` of layer ``j`` (both 1-based) follows at
``2 + (j - 1) * depth + (i - 1)``, where the depth is 3 for melons and 6 for
blocks.  Labels are ``"a"``, ``"b"`` and ``"v_i_j"``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from decimal import ROUND_FLOOR, Decimal, localcontext
from fractions import Fraction
from itertools import product
from typing import FrozenSet, List, Set, Tuple

from .graph import Graph, build_graph
from .separators import enumerate_minimal_ab_separators, is_minimal_ab_separator

BLOCK_DEPTH = 6
MELON_DEPTH = 3
DEFAULT_LAYERS = 24
A, B = 0, 1


class FamilyError(ValueError):
    pass


class LayerFamilyViolation(AssertionError):
    """A constructed layer-family member is not a minimal (a,b)-separator."""

    def __init__(self, j: int, separator: FrozenSet[int]):
        self.j = j
        self.separator = separator
        super().__init__(f"layer {j}: {sorted(separator)} is not a minimal (a,b)-separator")


@dataclass(frozen=True)
class FamilyParams:
    m: int = DEFAULT_LAYERS
    ell: int = 1
    k: int = 1

    def __post_init__(self):
        if self.m < 2:
            raise FamilyError(f"block graphs need m >= 2 layers, got {self.m}")
        if self.ell < 1:
            raise FamilyError(f"ell must be >= 1, got {self.ell}")
        if self.k < 1:
            raise FamilyError(f"melons need k >= 1 layers, got {self.k}")


@dataclass(frozen=True)
class LayerFamily:
    j: int
    separators: FrozenSet[FrozenSet[int]]

    def __len__(self) -> int:
        return len(self.separators)


def vertex_id(i: int, j: int, depth: int = BLOCK_DEPTH) -> int:
    return 2 + (j - 1) * depth + (i - 1)


def _labels(n_layers: int, depth: int) -> List[str]:
    labels = ["a", "b"]
    for j in range(1, n_layers + 1):
        labels.extend(f"v_{i}_{j}" for i in range(1, depth + 1))
    return labels


def melon(k: int) -> Graph:
    """``k`` internally disjoint a-b paths with three internal vertices each."""
    if k < 1:
        raise FamilyError(f"melon needs k >= 1, got {k}")
    edges = []
    for j in range(1, k + 1):
        path = [A] + [vertex_id(i, j, MELON_DEPTH) for i in (1, 2, 3)] + [B]
        edges.extend(zip(path, path[1:]))
    return build_graph(3 * k + 2, edges, _labels(k, MELON_DEPTH))


def block(m: int) -> Graph:
    """The layered block: per layer the paths a-v1-v2-v3 and v4-v5-v6-b,
    plus the cross edges ``v_3_j v_4_k`` for every ``j != k``."""
    if m < 2:
        raise FamilyError(f"block needs m >= 2 layers, got {m}")
    v = vertex_id
    edges = []
    for j in range(1, m + 1):
        edges += [(A, v(1, j)), (v(1, j), v(2, j)), (v(2, j), v(3, j))]
        edges += [(v(4, j), v(5, j)), (v(5, j), v(6, j)), (v(6, j), B)]
    for j in range(1, m + 1):
        for k in range(1, m + 1):
            if j != k:
                edges.append((v(3, j), v(4, k)))
    return build_graph(BLOCK_DEPTH * m + 2, edges, _labels(m, BLOCK_DEPTH))


def glued(ell: int, m: int) -> Graph:
    """``ell`` copies of ``block(m)`` sharing ``a`` and ``b``.

    Copy ``c`` (0-based) occupies ids ``2 + c*6m .. 1 + (c+1)*6m`` in the same
    internal order as a single block; labels gain a ``_c<c+1>`` suffix when
    ``ell > 1``.
    """
    if ell < 1:
        raise FamilyError(f"ell must be >= 1, got {ell}")
    base = block(m)
    if ell == 1:
        return base
    per = BLOCK_DEPTH * m
    edges = []
    labels = ["a", "b"]
    for c in range(ell):
        shift = c * per

        def move(x: int) -> int:
            return x if x < 2 else x + shift

        edges.extend((move(u), move(w)) for u, w in base.edges())
        labels.extend(f"{lab}_c{c + 1}" for lab in base.labels[2:])
    return build_graph(ell * per + 2, edges, labels)


def _block_layers(G: Graph) -> int:
    m, rem = divmod(G.n - 2, BLOCK_DEPTH)
    if rem or m < 2 or G != block(m):
        raise FamilyError("graph was not produced by block(m)")
    return m


def layer_family(G: Graph, j: int, verify: bool = True) -> LayerFamily:
    """Minimal (a,b)-separators of ``block(m)`` avoiding layer ``j``, built as the
    product of one upper-half and one lower-half choice per other layer."""
    m = _block_layers(G)
    if not 1 <= j <= m:
        raise FamilyError(f"layer {j} out of range 1..{m}")
    choices = []
    for k in range(1, m + 1):
        if k == j:
            continue
        choices.append([vertex_id(i, k) for i in (1, 2, 3)])
        choices.append([vertex_id(i, k) for i in (4, 5, 6)])
    seps = set()
    for pick in product(*choices):
        S = frozenset(pick)
        if verify and not is_minimal_ab_separator(G, S, A, B):
            raise LayerFamilyViolation(j, S)
        seps.add(S)
    return LayerFamily(j, frozenset(seps))


def layer_vertices(m: int, j: int) -> FrozenSet[int]:
    return frozenset(vertex_id(i, j) for i in range(1, BLOCK_DEPTH + 1))


def avoiding_layer_separators(G: Graph, j: int) -> Set[FrozenSet[int]]:
    """The minimal (a,b)-separators of ``block(m)`` that miss layer ``j``, by enumeration."""
    m = _block_layers(G)
    if not 1 <= j <= m:
        raise FamilyError(f"layer {j} out of range 1..{m}")
    layer = layer_vertices(m, j)
    return {S for S in enumerate_minimal_ab_separators(G, A, B) if not S & layer}


def all_layer_families(G: Graph, verify: bool = True) -> List[LayerFamily]:
    m = _block_layers(G)
    return [layer_family(G, j, verify) for j in range(1, m + 1)]


# -- formulas ----------------------------------------------------------------


def lb_count(m: int) -> int:
    """Exact ``m * 3**(2(m-1))``: the separators covered by the layer families of block(m)."""
    if m < 2:
        raise FamilyError(f"m must be >= 2, got {m}")
    return m * 3 ** (2 * (m - 1))


def melon_count(k: int) -> int:
    return 3 ** k


def glued_lb_count(ell: int, m: int) -> int:
    return lb_count(m) ** ell


def _floor_sig(x: Decimal, digits: int) -> Decimal:
    exp = x.adjusted() - digits + 1
    return x.quantize(Decimal(1).scaleb(exp), rounding=ROUND_FLOOR)


def _root_floor(value: int, degree: int, digits: int) -> Decimal:
    """Largest ``digits``-significant decimal ``r`` with ``r ** degree <= value``."""
    with localcontext() as ctx:
        ctx.prec = digits + 40
        approx = (Decimal(value).ln() / degree).exp()
        r = _floor_sig(approx, digits)
        step = Decimal(1).scaleb(r.adjusted() - digits + 1)
        # exact integer check fixes the rare case where the approximation rounded up
        while Fraction(r) ** degree > value:
            r -= step
        while Fraction(r + step) ** degree <= value:
            r += step
    return r


def growth_base(m: int, digits: int = 12) -> Decimal:
    """``lb_count(m) ** (1 / 6m)`` rounded down to ``digits`` significant digits.

    The rounding direction is certified with exact rational arithmetic, so the
    result is itself a valid lower bound on the per-vertex growth rate.
    """
    return _root_floor(lb_count(m), BLOCK_DEPTH * m, digits)


def log_growth(m: int) -> float:
    """``ln(lb_count(m)) / 6m`` from the big-integer logarithm."""
    return math.log(lb_count(m)) / (BLOCK_DEPTH * m)


def log_growth_by_terms(m: int) -> float:
    """Same quantity as :func:`log_growth`, summed factor by factor."""
    total = math.log(m)
    for _ in range(2 * (m - 1)):
        total += math.log(3)
    return total / (BLOCK_DEPTH * m)


def best_layer_count(max_m: int, digits: int = 12) -> Tuple[int, Decimal]:
    """Layer count in ``2..max_m`` maximising the growth base; ties go to the smaller m.

    Candidates are compared exactly: ``x**(1/6p) > y**(1/6q)`` iff
    ``x**(6q) > y**(6p)`` for the integer counts ``x, y``.
    """
    if max_m < 2:
        raise FamilyError(f"max_m must be >= 2, got {max_m}")
    best = 2
    for m in range(3, max_m + 1):
        if lb_count(m) ** (BLOCK_DEPTH * best) > lb_count(best) ** (BLOCK_DEPTH * m):
            best = m
    return best, growth_base(best, digits)


def scientific(value: int, digits: int = 5) -> str:
    """``value`` rounded to ``digits`` significant digits, e.g. ``"2.1271e23"``."""
    with localcontext() as ctx:
        ctx.prec = digits
        d = +Decimal(value)
    mant, exp = f"{d:.{digits - 1}e}".split("e")
    return f"{mant}e{int(exp)}"

