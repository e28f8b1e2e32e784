"""Brute-force ground truth on small instances.

Everything here works by direct edge scans over explicitly materialized
descendant sets and exhaustive shore enumeration. It deliberately shares no
machinery with the table/evaluation modules it is used to validate.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import GuardExceededError, UnboundedCertificateError
from .graph import WeightedGraph
from .tree import RootedTree

GUARD_N = 20


def _check_guard(n: int, override: bool):
    if n > GUARD_N and not override:
        raise GuardExceededError(f"n={n} exceeds the brute-force guard ({GUARD_N})")


def _descendant_masks(tree: RootedTree) -> list[int]:
    """desc[v] = bitmask of the subtree rooted at v, rebuilt here from parents."""
    n = tree.n
    desc = [0] * (n + 1)
    for v in range(1, n + 1):
        desc[v] = 1 << (v - 1)
    for v in sorted(range(1, n + 1), key=lambda x: -tree.depth[x]):
        p = tree.parent[v]
        if p:
            desc[p] |= desc[v]
    return desc


def _crosses(mask: int, u: int, v: int) -> bool:
    return (mask >> (u - 1) & 1) != (mask >> (v - 1) & 1)


def oracle_tau(g: WeightedGraph, tree: RootedTree, u: int) -> int:
    mask = _descendant_masks(tree)[u]
    return sum(w for a, b, w in g.edges if _crosses(mask, a, b))


def oracle_pi(g: WeightedGraph, tree: RootedTree, u: int, v: int) -> int:
    desc = _descendant_masks(tree)
    mu, mv = desc[u], desc[v]
    return sum(w for a, b, w in g.edges if _crosses(mu, a, b) and _crosses(mv, a, b))


def oracle_sigma(g: WeightedGraph, tree: RootedTree, u: int, v: int) -> int:
    desc = _descendant_masks(tree)
    mask = desc[u] ^ desc[v]
    if mask == 0:
        return 0
    return sum(w for a, b, w in g.edges if _crosses(mask, a, b))


def oracle_boundary_intersection(g: WeightedGraph, tree: RootedTree, vs) -> int:
    """w of the common intersection of the subtree boundaries delta(D(v)), v in vs."""
    desc = _descendant_masks(tree)
    masks = [desc[v] for v in vs]
    return sum(w for a, b, w in g.edges if all(_crosses(m, a, b) for m in masks))


def oracle_xor_cut(g: WeightedGraph, tree: RootedTree, vs) -> int:
    """w(delta(A)) for the shore A = xor of the descendant sets of vs."""
    desc = _descendant_masks(tree)
    mask = 0
    for v in vs:
        mask ^= desc[v]
    if mask == 0 or mask == (1 << g.n) - 1:
        return 0
    return sum(w for a, b, w in g.edges if _crosses(mask, a, b))


def enumerate_shore_masks(n: int, override_guard: bool = False):
    """All canonical proper shores (vertex 1 excluded), as bitmasks."""
    _check_guard(n, override_guard)
    # masks over vertices 2..n shifted into bits 1..n-1; bit 0 (vertex 1) stays 0
    for sub in range(1, 1 << (n - 1)):
        yield sub << 1


@dataclass(frozen=True)
class ShoreTable:
    """Per-shore cut weights and, per tree, tree-crossing counts."""

    n: int
    masks: tuple[int, ...]
    weights: tuple[int, ...]

    def crossings(self, tree: RootedTree) -> list[int]:
        pedges = [(v, tree.parent[v]) for v in range(1, tree.n + 1) if tree.parent[v]]
        out = []
        for mask in self.masks:
            out.append(sum(1 for a, b in pedges if _crosses(mask, a, b)))
        return out


def shore_table(g: WeightedGraph, override_guard: bool = False) -> ShoreTable:
    masks = tuple(enumerate_shore_masks(g.n, override_guard))
    weights = []
    for mask in masks:
        weights.append(sum(w for a, b, w in g.edges if _crosses(mask, a, b)))
    return ShoreTable(n=g.n, masks=masks, weights=tuple(weights))


def oracle_lambda(g: WeightedGraph, override_guard: bool = False) -> int:
    tab = shore_table(g, override_guard)
    return min(tab.weights)


@dataclass(frozen=True)
class OracleTheta:
    ratio: Fraction
    crossings: int
    weight: int
    shore_mask: int
    endpoints: tuple[int, ...]  # child endpoints of the crossed tree edges


def shore_to_endpoints(tree: RootedTree, mask: int) -> tuple[int, ...]:
    """Child endpoints of the tree edges crossed by the shore."""
    out = []
    for v in range(1, tree.n + 1):
        p = tree.parent[v]
        if p and _crosses(mask, v, p):
            out.append(v)
    return tuple(sorted(out))


def oracle_theta(
    g: WeightedGraph, tree: RootedTree, k: int, override_guard: bool = False
) -> OracleTheta:
    """Exhaustive max of crossings/weight over shores crossing the tree <= k times."""
    best = None
    tab = shore_table(g, override_guard)
    crossings = tab.crossings(tree)
    for mask, w, t in zip(tab.masks, tab.weights, crossings):
        if t == 0 or t > k:
            continue
        if w == 0:
            raise UnboundedCertificateError(
                "zero-weight cut crosses the tree", witness=shore_to_endpoints(tree, mask)
            )
        if best is None or t * best[1] > best[0] * w:
            best = (t, w, mask)
    t, w, mask = best
    return OracleTheta(
        ratio=Fraction(t, w),
        crossings=t,
        weight=w,
        shore_mask=mask,
        endpoints=shore_to_endpoints(tree, mask),
    )


def oracle_thinness(g: WeightedGraph, tree: RootedTree, override_guard: bool = False) -> Fraction:
    """Unrestricted thinness: max crossings/weight over all proper shores."""
    return oracle_theta(g, tree, g.n - 1, override_guard).ratio


def oracle_near_min_cuts(
    g: WeightedGraph, alpha, override_guard: bool = False
) -> list[tuple[int, int]]:
    """All canonical shores with weight <= alpha * lambda, as (mask, weight)."""
    alpha = Fraction(alpha) if not isinstance(alpha, Fraction) else alpha
    tab = shore_table(g, override_guard)
    lam = min(tab.weights)
    out = []
    for mask, w in zip(tab.masks, tab.weights):
        if w * alpha.denominator <= alpha.numerator * lam:
            out.append((mask, w))
    return out
