"""Rooted spanning tree with Euler-tour intervals, LCA, and fundamental-cycle swaps.

The preorder interval [tin(v), tout(v)] of each vertex covers exactly its
descendant set, so descendant sets are nested or disjoint and subtree queries
are contiguous range queries in Euler coordinates.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
import hashlib

import numpy as np

from .errors import NotSpanningTreeError
from .graph import WeightedGraph
from .rng import make_rng


@dataclass(frozen=True, eq=False)
class RootedTree:
    n: int
    root: int
    parent: tuple[int, ...]  # parent[v]; parent[root] = 0; index 0 unused
    depth: tuple[int, ...]
    tin: tuple[int, ...]  # preorder positions 1..n
    tout: tuple[int, ...]  # max tin over the subtree
    order: tuple[int, ...]  # order[i] = vertex with tin == i
    children: tuple[tuple[int, ...], ...]
    edges: frozenset  # frozenset of (min(u,p), max(u,p))
    # numpy mirrors for batch work
    parent_np: np.ndarray = field(repr=False)
    depth_np: np.ndarray = field(repr=False)
    tin_np: np.ndarray = field(repr=False)
    tout_np: np.ndarray = field(repr=False)
    up: np.ndarray = field(repr=False)  # (LOG, n+1) binary-lifting table

    @cached_property
    def fingerprint(self) -> str:
        payload = f"{self.n}:{self.root}:" + ",".join(
            f"{u}-{v}" for u, v in sorted(self.edges)
        )
        return hashlib.sha1(payload.encode("utf-8")).hexdigest()

    def is_ancestor(self, u: int, v: int) -> bool:
        """True iff u is an ancestor of v (reflexive)."""
        return self.tin[u] <= self.tin[v] and self.tout[v] <= self.tout[u]

    def lca(self, u: int, v: int) -> int:
        if self.is_ancestor(u, v):
            return u
        if self.is_ancestor(v, u):
            return v
        up = self.up
        for j in range(up.shape[0] - 1, -1, -1):
            a = int(up[j, u])
            if a and not (self.tin[a] <= self.tin[v] <= self.tout[a]):
                u = a
        return self.parent[u]

    def subtree_size(self, v: int) -> int:
        return self.tout[v] - self.tin[v] + 1

    def path(self, u: int, v: int) -> list[int]:
        """Vertices of the tree path u..v, in order from u to v."""
        a = self.lca(u, v)
        left = []
        x = u
        while x != a:
            left.append(x)
            x = self.parent[x]
        right = []
        x = v
        while x != a:
            right.append(x)
            x = self.parent[x]
        return left + [a] + right[::-1]

    def parent_edge(self, v: int) -> tuple[int, int]:
        p = self.parent[v]
        if p == 0:
            raise ValueError("root has no parent edge")
        return (v, p) if v < p else (p, v)


def lca_batch(t: RootedTree, us: np.ndarray, vs: np.ndarray) -> np.ndarray:
    """Vectorized LCA over parallel arrays of vertices."""
    us = us.astype(np.int64).copy()
    vs = vs.astype(np.int64).copy()
    dep = t.depth_np
    swap = dep[us] < dep[vs]
    tmp = us[swap].copy()
    us[swap] = vs[swap]
    vs[swap] = tmp
    # lift the deeper endpoint up to equal depth
    diff = dep[us] - dep[vs]
    for j in range(t.up.shape[0]):
        mask = (diff >> j) & 1 == 1
        if mask.any():
            us[mask] = t.up[j][us[mask]]
    done = us == vs
    for j in range(t.up.shape[0] - 1, -1, -1):
        pu = t.up[j][us]
        pv = t.up[j][vs]
        step = (~done) & (pu != pv)
        if step.any():
            us[step] = pu[step]
            vs[step] = pv[step]
    out = np.where(done, us, t.up[0][us])
    return out


def _index_tree(n: int, root: int, adj: list[list[int]]) -> RootedTree:
    parent = [0] * (n + 1)
    depth = [0] * (n + 1)
    tin = [0] * (n + 1)
    tout = [0] * (n + 1)
    order = [0] * (n + 1)
    children: list[list[int]] = [[] for _ in range(n + 1)]
    for a in adj:
        a.sort()
    seen = [False] * (n + 1)
    seen[root] = True
    entry = [0] * (n + 1)  # per-vertex cursor into its adjacency list
    stack = [root]
    timer = 1
    tin[root] = timer
    order[timer] = root
    while stack:
        u = stack[-1]
        advanced = False
        while entry[u] < len(adj[u]):
            v = adj[u][entry[u]]
            entry[u] += 1
            if not seen[v]:
                seen[v] = True
                parent[v] = u
                depth[v] = depth[u] + 1
                children[u].append(v)
                timer += 1
                tin[v] = timer
                order[timer] = v
                stack.append(v)
                advanced = True
                break
        if not advanced:
            tout[u] = timer
            stack.pop()
    if timer != n:
        raise NotSpanningTreeError("edge set does not span the graph")
    edges = frozenset((min(v, parent[v]), max(v, parent[v])) for v in range(1, n + 1) if parent[v])
    log = max(1, (n).bit_length())
    up = np.zeros((log, n + 1), dtype=np.int64)
    up[0] = np.array(parent, dtype=np.int64)
    for j in range(1, log):
        up[j] = up[j - 1][up[j - 1]]
    return RootedTree(
        n=n,
        root=root,
        parent=tuple(parent),
        depth=tuple(depth),
        tin=tuple(tin),
        tout=tuple(tout),
        order=tuple(order),
        children=tuple(tuple(c) for c in children),
        edges=edges,
        parent_np=np.array(parent, dtype=np.int64),
        depth_np=np.array(depth, dtype=np.int64),
        tin_np=np.array(tin, dtype=np.int64),
        tout_np=np.array(tout, dtype=np.int64),
        up=up,
    )


def _kruskal(g: WeightedGraph, keyed_edges) -> list[tuple[int, int]]:
    parent = list(range(g.n + 1))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    picked = []
    for _, u, v in keyed_edges:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
            picked.append((u, v))
            if len(picked) == g.n - 1:
                break
    return picked


def build_tree(
    g: WeightedGraph,
    tree_edges=None,
    policy: str | None = None,
    seed: int = 0,
    root: int = 1,
) -> RootedTree:
    """Index a spanning tree given explicitly or by policy.

    Policies: "mst" (weight then edge-id tie-break), "unit-mst" (edge-id order,
    i.e. MST under unit weights), "random" (random edge weights then MST).
    """
    if (tree_edges is None) == (policy is None):
        raise ValueError("give exactly one of tree_edges or policy")
    if policy is not None:
        if policy == "mst":
            keyed = sorted((w, u, v) for i, (u, v, w) in enumerate(g.edges))
            keyed = [((w, i), u, v) for i, (w, u, v) in enumerate(keyed)]
        elif policy == "unit-mst":
            keyed = [((1, i), u, v) for i, (u, v, _) in enumerate(g.edges)]
        elif policy == "random":
            rng = make_rng(seed, "tree-random")
            draws = rng.random(g.m)
            keyed = [((draws[i], i), u, v) for i, (u, v, _) in enumerate(g.edges)]
        else:
            raise ValueError(f"unknown tree policy '{policy}'")
        keyed.sort(key=lambda kuv: kuv[0])
        tree_edges = _kruskal(g, keyed)
    tree_edges = [tuple(sorted(e[:2])) for e in tree_edges]
    if len(tree_edges) != g.n - 1:
        raise NotSpanningTreeError(f"need {g.n - 1} edges, got {len(tree_edges)}")
    if len(set(tree_edges)) != len(tree_edges):
        raise NotSpanningTreeError("duplicate tree edge")
    for u, v in tree_edges:
        if not g.has_edge(u, v):
            raise NotSpanningTreeError(f"({u}, {v}) is not an edge of the graph")
    adj: list[list[int]] = [[] for _ in range(g.n + 1)]
    for u, v in tree_edges:
        adj[u].append(v)
        adj[v].append(u)
    return _index_tree(g.n, root, adj)


def tree_from_edges(n: int, edges, root: int = 1) -> RootedTree:
    """Index a tree given bare edges (no host-graph membership check)."""
    edges = [tuple(sorted(e[:2])) for e in edges]
    if len(edges) != n - 1 or len(set(edges)) != len(edges):
        raise NotSpanningTreeError(f"need {n - 1} distinct edges")
    adj: list[list[int]] = [[] for _ in range(n + 1)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    return _index_tree(n, root, adj)


def parse_tree(text: str, n: int | None = None) -> RootedTree:
    """Parse the tree format: "t <n> <root>" then n-1 lines "b <child> <parent>"."""
    from .errors import GraphFormatError

    header = None
    pairs = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "t":
            if header is not None:
                raise GraphFormatError("duplicate tree header", line=lineno)
            if len(parts) != 3:
                raise GraphFormatError("tree header must be 't <n> <root>'", line=lineno)
            header = (int(parts[1]), int(parts[2]))
        elif parts[0] == "b":
            if header is None:
                raise GraphFormatError("branch before header", line=lineno)
            if len(parts) != 3:
                raise GraphFormatError("branch line must be 'b <child> <parent>'", line=lineno)
            pairs.append((int(parts[1]), int(parts[2])))
        else:
            raise GraphFormatError(f"unknown record '{parts[0]}'", line=lineno)
    if header is None:
        raise GraphFormatError("missing 't' header")
    tn, root = header
    if n is not None and tn != n:
        raise GraphFormatError(f"tree is over {tn} vertices, graph has {n}")
    return tree_from_edges(tn, pairs, root=root)


def serialize_tree(t: RootedTree) -> str:
    lines = [f"t {t.n} {t.root}"]
    for v in sorted(range(1, t.n + 1)):
        if v != t.root:
            lines.append(f"b {v} {t.parent[v]}")
    return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class SwapMove:
    """Exchange: tree edge e leaves, non-tree edge f enters; e lies on f's
    fundamental cycle (the tree path between f's endpoints)."""

    f: tuple[int, int]
    e: tuple[int, int]
    cycle: tuple[int, ...]  # vertices of the tree path between f's endpoints


def fundamental_cycle(t: RootedTree, f: tuple[int, int]) -> list[SwapMove]:
    """All legal swaps for non-tree edge f: one per tree edge on its cycle."""
    x, y = f
    fkey = (min(x, y), max(x, y))
    if fkey in t.edges:
        raise ValueError(f"{fkey} is already a tree edge")
    cyc = tuple(t.path(x, y))
    moves = []
    for a, b in zip(cyc, cyc[1:]):
        e = (min(a, b), max(a, b))
        moves.append(SwapMove(f=fkey, e=e, cycle=cyc))
    return moves


def apply_swap(t: RootedTree, move: SwapMove) -> tuple[RootedTree, frozenset]:
    """Apply T - e + f; returns the re-indexed tree and a certified superset of
    the vertices whose ancestor relations changed (all lie on the cycle)."""
    if move.e not in t.edges:
        raise ValueError(f"swap edge {move.e} is not in the tree")
    fkey = (min(move.f), max(move.f))
    if fkey in t.edges:
        raise ValueError(f"entering edge {fkey} is already in the tree")
    cyc = move.cycle
    cyc_edges = {(min(a, b), max(a, b)) for a, b in zip(cyc, cyc[1:])}
    if move.e not in cyc_edges:
        raise ValueError("swap edge is not on the fundamental cycle of f")
    new_edges = (t.edges - {move.e}) | {fkey}
    adj: list[list[int]] = [[] for _ in range(t.n + 1)]
    for u, v in new_edges:
        adj[u].append(v)
        adj[v].append(u)
    new_t = _index_tree(t.n, t.root, adj)
    affected = set(cyc)
    affected.update(v for v in range(1, t.n + 1) if new_t.parent[v] != t.parent[v])
    affected.discard(t.root)
    return new_t, frozenset(affected)
