"""Chromatic polynomials by deletion-contraction, plus a brute-force counting oracle."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Literal

from ptchrom.exactmath import Polynomial
from ptchrom.graphs import Graph, canonical_form

EdgePick = Literal["max-degree-endpoint", "first"]
MEMO_MAX_N = 20
BRUTE_MAX_N = 12
BRUTE_MAX_Q = 8


class TooLarge(ValueError):
    """Input exceeds the brute-force complexity guard."""


@dataclass(frozen=True)
class DCConfig:
    use_memo: bool = True
    use_clique_shortcut: bool = True
    edge_pick: EdgePick = "max-degree-endpoint"

    def __post_init__(self) -> None:
        if self.edge_pick not in ("max-degree-endpoint", "first"):
            raise ValueError(f"unknown edge_pick {self.edge_pick!r}")


# int coefficient lists, low -> high ---------------------------------------

IntPoly = list[int]


def _mul(a: IntPoly, b: IntPoly) -> IntPoly:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _sub(a: IntPoly, b: IntPoly) -> IntPoly:
    n = max(len(a), len(b))
    out = [(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)]
    while out and out[-1] == 0:
        out.pop()
    return out


def _falling(s: int) -> IntPoly:
    out = [1]
    for j in range(s):
        out = _mul(out, [-j, 1])
    return out


def _div_linear(a: IntPoly, root: int) -> IntPoly:
    """Exact synthetic division of ``a`` by ``q - root``."""
    n = len(a) - 1
    quo = [0] * n
    carry = 0
    for i in range(n, 0, -1):
        carry = a[i] + carry * root
        quo[i - 1] = carry
    if a[0] + carry * root != 0:
        raise ArithmeticError("inexact division in clique separator step")
    return quo


def _div_falling(a: IntPoly, s: int) -> IntPoly:
    for j in range(s):
        a = _div_linear(a, j)
    return a


# bitmask graph helpers ----------------------------------------------------


def _bits(m: int):
    while m:
        low = m & -m
        yield low.bit_length() - 1
        m ^= low


def _component(adj: tuple[int, ...], start: int, allowed: int) -> int:
    seen = 1 << start
    frontier = seen
    while frontier:
        nxt = 0
        for v in _bits(frontier):
            nxt |= adj[v]
        nxt &= allowed
        frontier = nxt & ~seen
        seen |= nxt
    return seen


def _induced(adj: tuple[int, ...], keep: int) -> tuple[int, ...]:
    verts = list(_bits(keep))
    index = {v: i for i, v in enumerate(verts)}
    out = []
    for v in verts:
        m = 0
        for u in _bits(adj[v] & keep):
            m |= 1 << index[u]
        out.append(m)
    return tuple(out)


def _remove_bit(x: int, v: int) -> int:
    low = x & ((1 << v) - 1)
    return low | ((x >> (v + 1)) << v)


def _delete_edge(adj: tuple[int, ...], u: int, v: int) -> tuple[int, ...]:
    out = list(adj)
    out[u] &= ~(1 << v)
    out[v] &= ~(1 << u)
    return tuple(out)


def _contract(adj: tuple[int, ...], u: int, v: int) -> tuple[int, ...]:
    """Merge ``v`` into ``u``; parallel edges and the loop disappear."""
    merged = (adj[u] | adj[v]) & ~(1 << u) & ~(1 << v)
    out = list(adj)
    out[u] = merged
    for w in _bits(merged):
        out[w] = (out[w] & ~(1 << v)) | (1 << u)
    del out[v]
    return tuple(_remove_bit(x, v) for x in out)


def _remove_vertex(adj: tuple[int, ...], v: int) -> tuple[int, ...]:
    out = [x for i, x in enumerate(adj) if i != v]
    return tuple(_remove_bit(x, v) for x in out)


def _is_clique(adj: tuple[int, ...], verts: int) -> bool:
    for v in _bits(verts):
        if (adj[v] | (1 << v)) & verts != verts:
            return False
    return True


class _Engine:
    def __init__(self, cfg: DCConfig) -> None:
        self.cfg = cfg
        self.memo: dict[tuple, IntPoly] = {}

    def poly(self, adj: tuple[int, ...]) -> IntPoly:
        n = len(adj)
        if n == 0:
            return [1]
        full = (1 << n) - 1
        comp = _component(adj, 0, full)
        if comp != full:
            # product over connected components
            rest = full & ~comp
            return _mul(self.poly(_induced(adj, comp)), self.poly(_induced(adj, rest)))
        e2 = sum(x.bit_count() for x in adj)
        e = e2 // 2
        if e == 0:
            return [0] * n + [1]
        if e == n * (n - 1) // 2:
            return _falling(n)
        if e == n - 1:
            # tree: q (q-1)^(n-1)
            out = [0, 1]
            for _ in range(n - 1):
                out = _mul(out, [-1, 1])
            return out
        if self.cfg.use_clique_shortcut:
            hit = self._simplicial(adj)
            if hit is not None:
                v, d = hit
                return _mul(self.poly(_remove_vertex(adj, v)), [-d, 1])
        key = None
        if self.cfg.use_memo and n <= MEMO_MAX_N:
            key = canonical_form(Graph.from_adjacency(adj))
            cached = self.memo.get(key)
            if cached is not None:
                return cached
        result = None
        if self.cfg.use_clique_shortcut:
            result = self._clique_separator(adj)
        if result is None:
            u, v = self._pick_edge(adj)
            result = _sub(self.poly(_delete_edge(adj, u, v)), self.poly(_contract(adj, u, v)))
        if key is not None:
            self.memo[key] = result
        return result

    @staticmethod
    def _simplicial(adj: tuple[int, ...]) -> tuple[int, int] | None:
        """A vertex whose neighbourhood is a clique: P(G) = P(G-v)(q-d)."""
        for v, a in enumerate(adj):
            if _is_clique(adj, a):
                return v, a.bit_count()
        return None

    def _clique_separator(self, adj: tuple[int, ...]) -> IntPoly | None:
        """Split along a separating clique of size at most 4."""
        n = len(adj)
        full = (1 << n) - 1
        for s in range(1, 5):
            if s >= n - 1:
                break
            for combo in _cliques(adj, s):
                sep = 0
                for v in combo:
                    sep |= 1 << v
                rest = full & ~sep
                first = _component(adj, (rest & -rest).bit_length() - 1, rest)
                if first == rest:
                    continue
                parts = [first]
                remaining = rest & ~first
                while remaining:
                    c = _component(adj, (remaining & -remaining).bit_length() - 1, remaining)
                    parts.append(c)
                    remaining &= ~c
                out = self.poly(_induced(adj, parts[0] | sep))
                for c in parts[1:]:
                    out = _div_falling(_mul(out, self.poly(_induced(adj, c | sep))), s)
                return out
        return None

    def _pick_edge(self, adj: tuple[int, ...]) -> tuple[int, int]:
        if self.cfg.edge_pick == "first":
            for u, a in enumerate(adj):
                if a:
                    return u, (a & -a).bit_length() - 1
        degs = [a.bit_count() for a in adj]
        u = max(range(len(adj)), key=lambda i: (degs[i], -i))
        v = (adj[u] & -adj[u]).bit_length() - 1
        return u, v


def _cliques(adj: tuple[int, ...], s: int):
    """All cliques of size ``s`` as increasing vertex tuples."""
    n = len(adj)
    if s == 1:
        for v in range(n):
            yield (v,)
        return

    def extend(clique: tuple[int, ...], cand: int):
        if len(clique) == s:
            yield clique
            return
        for v in _bits(cand):
            yield from extend(clique + (v,), cand & adj[v] & ~((1 << (v + 1)) - 1))

    for v in range(n):
        yield from extend((v,), adj[v] & ~((1 << (v + 1)) - 1))


_shared_memo: dict[tuple, IntPoly] = {}


def chromatic_poly(g: Graph, cfg: DCConfig | None = None) -> Polynomial:
    """Exact chromatic polynomial of ``g``.

    Deletion-contraction with closed forms for edgeless, complete and tree
    components, simplicial-vertex removal and separating cliques of size at
    most 4.  The memo is keyed by canonical form and never changes results.
    """
    cfg = cfg or DCConfig()
    eng = _Engine(cfg)
    if cfg.use_memo:
        # single dict get/set are atomic; values are immutable once stored
        eng.memo = _shared_memo
    return Polynomial(eng.poly(g.adjacency))


def clear_memo() -> None:
    _shared_memo.clear()


def brute_force_count(g: Graph, q: int) -> int:
    """Number of proper ``q``-colourings, by exhaustive assignment.

    Colours are assigned vertex by vertex in canonical order (a new colour
    is always the smallest unused one); each complete assignment using ``k``
    colours stands for ``q(q-1)...(q-k+1)`` colourings.
    """
    if g.n > BRUTE_MAX_N or q > BRUTE_MAX_Q:
        raise TooLarge(f"brute force limited to n <= {BRUTE_MAX_N}, q <= {BRUTE_MAX_Q}")
    if q < 0:
        raise ValueError("q must be nonnegative")
    n = g.n
    if n == 0:
        return 1
    adj = g.adjacency
    colour = [-1] * n
    counts = [0] * (n + 1)

    def place(v: int, used: int) -> None:
        if v == n:
            counts[used] += 1
            return
        forbidden = {colour[u] for u in range(v) if adj[v] >> u & 1}
        for c in range(min(used + 1, q)):
            if c not in forbidden:
                colour[v] = c
                place(v + 1, max(used, c + 1))
        colour[v] = -1

    place(0, 0)
    return sum(cnt * math.perm(q, k) for k, cnt in enumerate(counts) if cnt)


def chromatic_number(g: Graph, cfg: DCConfig | None = None) -> int:
    """Least positive integer ``k`` with ``P(g, k) > 0``."""
    if g.n == 0:
        return 0
    p = chromatic_poly(g, cfg)
    k = 1
    while p(k) <= 0:
        k += 1
    return k


def is_k_critical(g: Graph, cfg: DCConfig | None = None) -> bool:
    """True iff ``P(g, chi) = chi!`` for the chromatic number ``chi``."""
    chi = chromatic_number(g, cfg)
    return chromatic_poly(g, cfg)(chi) == math.factorial(chi)
