"""Weighted multigraph with exact integer weights, text I/O, generators, global min cut.

Vertices are 1-indexed. Parallel edges are merged at construction by summing
weights (every downstream quantity is linear in edge weight), so after
construction each unordered pair appears at most once.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
import hashlib

from .errors import DisconnectedGraphError, GraphFormatError
from .rng import make_rng


@dataclass(frozen=True)
class WeightedGraph:
    n: int
    # merged edges (u, v, w) with u < v, sorted by (u, v); weights are exact ints >= 0
    edges: tuple[tuple[int, int, int], ...]
    # pre-merge (u, v) pairs in input line order, when parsed from text; used as
    # the edge-id reference for rotation files
    line_pairs: tuple[tuple[int, int], ...] | None = field(default=None, compare=False)

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def adjacency(self) -> tuple[tuple[tuple[int, int], ...], ...]:
        """adjacency[v] = ((neighbor, weight), ...); index 0 unused."""
        adj: list[list[tuple[int, int]]] = [[] for _ in range(self.n + 1)]
        for u, v, w in self.edges:
            adj[u].append((v, w))
            adj[v].append((u, w))
        return tuple(tuple(sorted(a)) for a in adj)

    @cached_property
    def weight_map(self) -> dict[tuple[int, int], int]:
        return {(u, v): w for u, v, w in self.edges}

    def weight(self, u: int, v: int) -> int:
        if u > v:
            u, v = v, u
        return self.weight_map.get((u, v), 0)

    def has_edge(self, u: int, v: int) -> bool:
        if u > v:
            u, v = v, u
        return (u, v) in self.weight_map

    @cached_property
    def total_weight(self) -> int:
        return sum(w for _, _, w in self.edges)

    @cached_property
    def sha(self) -> str:
        return hashlib.sha256(serialize_graph(self).encode("utf-8")).hexdigest()

    def is_connected(self) -> bool:
        if self.n == 0:
            return False
        seen = [False] * (self.n + 1)
        stack = [1]
        seen[1] = True
        count = 1
        while stack:
            u = stack.pop()
            for v, _ in self.adjacency[u]:
                if not seen[v]:
                    seen[v] = True
                    count += 1
                    stack.append(v)
        return count == self.n


def make_graph(n: int, edges, line_pairs=None) -> WeightedGraph:
    """Build a merged graph from (u, v, w) triples, validating vertex ids and weights."""
    if n < 1:
        raise GraphFormatError(f"vertex count must be >= 1, got {n}")
    merged: dict[tuple[int, int], int] = {}
    for u, v, w in edges:
        if not (1 <= u <= n) or not (1 <= v <= n):
            raise GraphFormatError(f"vertex id out of range 1..{n}: ({u}, {v})")
        if u == v:
            raise GraphFormatError(f"self-loop at vertex {u}")
        if w < 0:
            raise GraphFormatError(f"negative weight {w} on edge ({u}, {v})")
        if u > v:
            u, v = v, u
        merged[(u, v)] = merged.get((u, v), 0) + w
    out = tuple(sorted((u, v, w) for (u, v), w in merged.items()))
    return WeightedGraph(n=n, edges=out, line_pairs=line_pairs)


def parse_graph(text: str, decimal_scale: int = 0) -> WeightedGraph:
    """Parse the line format: header "p <n> <m>", then m lines "e <u> <v> <w>".

    "#" starts a comment. Weights must be integers unless decimal_scale > 0, in
    which case decimal weights are multiplied by 10**decimal_scale and must come
    out integral. Disconnected graphs parse fine; connectivity is checked only
    by operations that need it.
    """
    n = None
    declared_m = None
    triples: list[tuple[int, int, int]] = []
    pairs: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "p":
            if n is not None:
                raise GraphFormatError("duplicate header", line=lineno)
            if len(parts) != 3:
                raise GraphFormatError("header must be 'p <n> <m>'", line=lineno)
            try:
                n, declared_m = int(parts[1]), int(parts[2])
            except ValueError:
                raise GraphFormatError("non-integer header fields", line=lineno) from None
            if n < 1:
                raise GraphFormatError(f"vertex count must be >= 1, got {n}", line=lineno)
        elif parts[0] == "e":
            if n is None:
                raise GraphFormatError("edge before header", line=lineno)
            if len(parts) != 4:
                raise GraphFormatError("edge line must be 'e <u> <v> <w>'", line=lineno)
            try:
                u, v = int(parts[1]), int(parts[2])
                w = _parse_weight(parts[3], decimal_scale)
            except GraphFormatError:
                raise
            except ValueError:
                raise GraphFormatError("non-numeric edge fields", line=lineno) from None
            if not (1 <= u <= n) or not (1 <= v <= n):
                raise GraphFormatError(f"vertex id out of range 1..{n}", line=lineno)
            if u == v:
                raise GraphFormatError(f"self-loop at vertex {u}", line=lineno)
            if w < 0:
                raise GraphFormatError(f"negative weight {w}", line=lineno)
            triples.append((u, v, w))
            pairs.append((u, v) if u < v else (v, u))
        else:
            raise GraphFormatError(f"unknown record '{parts[0]}'", line=lineno)
    if n is None:
        raise GraphFormatError("missing 'p' header")
    if declared_m is not None and declared_m != len(triples):
        raise GraphFormatError(f"header declares {declared_m} edges, found {len(triples)}")
    return make_graph(n, triples, line_pairs=tuple(pairs))


def _parse_weight(token: str, decimal_scale: int) -> int:
    if decimal_scale == 0:
        return int(token)
    frac = Fraction(token) * Fraction(10) ** decimal_scale
    if frac.denominator != 1:
        raise GraphFormatError(
            f"weight {token} not integral after scaling by 10^{decimal_scale}"
        )
    return frac.numerator


def serialize_graph(g: WeightedGraph) -> str:
    lines = [f"p {g.n} {g.m}"]
    lines.extend(f"e {u} {v} {w}" for u, v, w in g.edges)
    return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class CutShore:
    """One shore of a proper cut, canonicalized so vertex 1 is never a member.

    mask bit (v-1) is set iff v is in the shore; A and its complement share the
    canonical representation.
    """

    n: int
    mask: int

    def __post_init__(self):
        full = (1 << self.n) - 1
        if self.mask & 1:
            object.__setattr__(self, "mask", self.mask ^ full)
        if self.mask == 0 or self.mask == full:
            raise ValueError("cut shore must be nonempty and proper")
        if self.mask & ~full:
            raise ValueError("shore mask has bits outside 1..n")

    @classmethod
    def from_members(cls, n: int, members) -> "CutShore":
        mask = 0
        for v in members:
            if not (1 <= v <= n):
                raise ValueError(f"vertex {v} out of range")
            mask |= 1 << (v - 1)
        return cls(n, mask)

    @property
    def members(self) -> tuple[int, ...]:
        return tuple(v for v in range(1, self.n + 1) if self.mask >> (v - 1) & 1)

    def contains(self, v: int) -> bool:
        return bool(self.mask >> (v - 1) & 1)

    def complement(self) -> "CutShore":
        return CutShore(self.n, self.mask ^ ((1 << self.n) - 1))


def cut_weight(g: WeightedGraph, a: CutShore) -> int:
    """Total weight of edges with exactly one endpoint in the shore."""
    mask = a.mask
    total = 0
    for u, v, w in g.edges:
        if (mask >> (u - 1) & 1) != (mask >> (v - 1) & 1):
            total += w
    return total


def min_cut_lambda(g: WeightedGraph) -> int:
    """Global min cut by Stoer-Wagner with smallest-id tie-breaks; 0 iff disconnected."""
    n = g.n
    if n < 2:
        raise ValueError("min cut needs at least 2 vertices")
    # dense weight matrix over supernodes, 0-indexed working ids
    w = [[0] * n for _ in range(n)]
    for u, v, wt in g.edges:
        w[u - 1][v - 1] += wt
        w[v - 1][u - 1] += wt
    active = list(range(n))
    best = None
    while len(active) > 1:
        # maximum adjacency order starting from the smallest active id
        conn = {v: 0 for v in active}
        order = []
        in_a = set()
        for _ in range(len(active)):
            pick = None
            for v in active:
                if v in in_a:
                    continue
                if pick is None or conn[v] > conn[pick]:
                    pick = v
            order.append(pick)
            in_a.add(pick)
            for v in active:
                if v not in in_a:
                    conn[v] += w[pick][v]
        t = order[-1]
        s = order[-2]
        cut_of_phase = conn[t]
        if best is None or cut_of_phase < best:
            best = cut_of_phase
        # merge t into s
        for v in active:
            if v != s and v != t:
                w[s][v] += w[t][v]
                w[v][s] = w[s][v]
        active.remove(t)
    return best


def require_positive_lambda(g: WeightedGraph) -> int:
    lam = min_cut_lambda(g)
    if lam <= 0:
        raise DisconnectedGraphError(
            "graph has a zero cut (disconnected or zero-weight bottleneck); "
            "this operation needs min cut > 0"
        )
    return lam


# ---------------------------------------------------------------------------
# generators


def generate(kind: str, n: int, seed: int = 0) -> WeightedGraph:
    """Deterministic unit-weight generators: cycle, grid, complete, wheel,
    random-regular-like."""
    if kind == "cycle":
        if n < 3:
            raise ValueError("cycle needs n >= 3")
        edges = [(i, i + 1, 1) for i in range(1, n)] + [(n, 1, 1)]
        return make_graph(n, edges)
    if kind == "complete":
        if n < 3:
            raise ValueError("complete needs n >= 3")
        edges = [(u, v, 1) for u in range(1, n + 1) for v in range(u + 1, n + 1)]
        return make_graph(n, edges)
    if kind == "grid":
        side = round(n**0.5)
        if side * side != n or side < 2:
            raise ValueError("grid needs n to be a perfect square >= 4")
        edges = []
        for r in range(side):
            for c in range(side):
                v = r * side + c + 1
                if c + 1 < side:
                    edges.append((v, v + 1, 1))
                if r + 1 < side:
                    edges.append((v, v + side, 1))
        return make_graph(n, edges)
    if kind == "wheel":
        if n < 4:
            raise ValueError("wheel needs n >= 4")
        rim = list(range(2, n + 1))
        edges = [(1, v, 1) for v in rim]
        edges += [(rim[i], rim[(i + 1) % len(rim)], 1) for i in range(len(rim))]
        return make_graph(n, edges)
    if kind == "random-regular-like":
        if n < 3:
            raise ValueError("random-regular-like needs n >= 3")
        rng = make_rng(seed, "gen-regular")
        perm = list(rng.permutation(n) + 1)
        pairs = {tuple(sorted((perm[i], perm[(i + 1) % n]))) for i in range(n)}
        target = min(2 * n, n * (n - 1) // 2)
        attempts = 0
        while len(pairs) < target and attempts < 50 * n:
            u = int(rng.integers(1, n + 1))
            v = int(rng.integers(1, n + 1))
            attempts += 1
            if u != v:
                pairs.add(tuple(sorted((u, v))))
        return make_graph(n, [(u, v, 1) for u, v in sorted(pairs)])
    raise ValueError(f"unknown generator kind '{kind}'")


def random_connected(
    n: int, seed: int, weight_range: tuple[int, int] = (1, 10), extra_edges: int | None = None
) -> WeightedGraph:
    """Random connected graph: random attachment tree plus extra random edges."""
    if n < 2:
        raise ValueError("random_connected needs n >= 2")
    rng = make_rng(seed, "gen-random-connected")
    lo, hi = weight_range
    pairs = set()
    for v in range(2, n + 1):
        p = int(rng.integers(1, v))
        pairs.add((p, v))
    if extra_edges is None:
        extra_edges = int(rng.integers(0, n + 1))
    attempts = 0
    want = len(pairs) + extra_edges
    limit = n * (n - 1) // 2
    while len(pairs) < min(want, limit) and attempts < 50 * (extra_edges + 1):
        u = int(rng.integers(1, n + 1))
        v = int(rng.integers(1, n + 1))
        attempts += 1
        if u != v:
            pairs.add((min(u, v), max(u, v)))
    edges = [(u, v, int(rng.integers(lo, hi + 1))) for u, v in sorted(pairs)]
    return make_graph(n, edges)
