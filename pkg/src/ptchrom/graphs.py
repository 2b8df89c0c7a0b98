"""Simple graphs, family constructors, structural statistics and canonical forms."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable


class BadParameter(ValueError):
    """A constructor parameter is outside its admissible range."""


class BrownUndefined(ValueError):
    """The triangle bound u(G) needs at least three vertices."""


class Graph:
    """Immutable simple undirected graph on vertices ``0..n-1``."""

    __slots__ = ("_n", "_edges", "_adj")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()) -> None:
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        es: set[tuple[int, int]] = set()
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            a, b = (u, v) if u < v else (v, u)
            es.add((a, b))
            adj[a] |= 1 << b
            adj[b] |= 1 << a
        self._n = n
        self._edges = frozenset(es)
        self._adj = tuple(adj)

    @classmethod
    def from_adjacency(cls, adj: Iterable[int]) -> Graph:
        adj = list(adj)
        edges = [(u, v) for u in range(len(adj)) for v in range(u + 1, len(adj)) if adj[u] >> v & 1]
        return cls(len(adj), edges)

    @property
    def n(self) -> int:
        return self._n

    @property
    def e(self) -> int:
        return len(self._edges)

    @property
    def edges(self) -> frozenset[tuple[int, int]]:
        return self._edges

    @property
    def adjacency(self) -> tuple[int, ...]:
        """Neighbour bitmask per vertex."""
        return self._adj

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self._edges)

    def degree(self, v: int) -> int:
        return self._adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [a.bit_count() for a in self._adj]

    def neighbors(self, v: int) -> list[int]:
        a = self._adj[v]
        return [u for u in range(self._n) if a >> u & 1]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._adj[u] >> v & 1)

    def is_connected(self) -> bool:
        if self._n == 0:
            return True
        seen = 1
        frontier = 1
        while frontier:
            nxt = 0
            m = frontier
            while m:
                low = m & -m
                nxt |= self._adj[low.bit_length() - 1]
                m ^= low
            frontier = nxt & ~seen
            seen |= nxt
        return seen == (1 << self._n) - 1

    def relabel(self, perm: list[int]) -> Graph:
        """Graph with vertex ``v`` renamed ``perm[v]``."""
        return Graph(self._n, ((perm[u], perm[v]) for u, v in self._edges))

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._edges == other._edges

    def __hash__(self) -> int:
        return hash((self._n, self._edges))

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, e={self.e})"

    def to_edge_list(self) -> str:
        return "".join(f"{u} {v}\n" for u, v in self.sorted_edges())

    def to_dot(self, name: str = "G") -> str:
        lines = [f"graph {name} {{"]
        lines += [f"  {v};" for v in range(self._n)]
        lines += [f"  {u} -- {v};" for u, v in self.sorted_edges()]
        lines.append("}")
        return "\n".join(lines) + "\n"


# basic constructors ----------------------------------------------------


def make_empty(n: int) -> Graph:
    return Graph(n)


def make_complete(s: int) -> Graph:
    if s < 1:
        raise BadParameter("complete graph needs s >= 1")
    return Graph(s, combinations(range(s), 2))


def make_path(n: int) -> Graph:
    if n < 1:
        raise BadParameter("path needs n >= 1")
    return Graph(n, ((i, i + 1) for i in range(n - 1)))


def make_cycle(n: int) -> Graph:
    if n < 3:
        raise BadParameter("cycle needs n >= 3")
    return Graph(n, ((i, (i + 1) % n) for i in range(n)))


def disjoint_union(g: Graph, h: Graph) -> Graph:
    off = g.n
    return Graph(g.n + h.n, list(g.edges) + [(u + off, v + off) for u, v in h.edges])


def join(g: Graph, h: Graph) -> Graph:
    """Disjoint union plus every edge between the two vertex sets."""
    off = g.n
    cross = [(u, off + v) for u in range(g.n) for v in range(h.n)]
    return Graph(g.n + h.n, list(disjoint_union(g, h).edges) + cross)


def make_wheel(m: int) -> Graph:
    return join(make_complete(1), make_cycle(m))


def make_bipyramid(m: int) -> Graph:
    """Cycle C_m joined with two nonadjacent apexes."""
    if m < 3:
        raise BadParameter("bipyramid B_m is defined for m >= 3")
    return join(make_cycle(m), make_empty(2))


def make_r(m: int) -> Graph:
    """R_m, the join of the path P_m with an edge."""
    if m < 1:
        raise BadParameter("R_m is defined for m >= 1")
    return join(make_path(m), make_path(2))


def make_tc_strip(m: int) -> Graph:
    """``m`` triangle layers, consecutive layers forming octahedra."""
    if m < 1:
        raise BadParameter("TC_m is defined for m >= 1")
    edges: list[tuple[int, int]] = []
    for k in range(m):
        a = [3 * k + i for i in range(3)]
        edges += [(a[0], a[1]), (a[1], a[2]), (a[0], a[2])]
        if k + 1 < m:
            b = [3 * (k + 1) + i for i in range(3)]
            # a_i is opposite b_i in the octahedron
            edges += [(a[i], b[j]) for i in range(3) for j in range(3) if i != j]
    return Graph(3 * m, edges)


def make_icosahedron() -> Graph:
    top, bottom = 0, 11
    upper = [1, 2, 3, 4, 5]
    lower = [6, 7, 8, 9, 10]
    edges: list[tuple[int, int]] = []
    for i in range(5):
        j = (i + 1) % 5
        edges += [(top, upper[i]), (bottom, lower[i])]
        edges += [(upper[i], upper[j]), (lower[i], lower[j])]
        edges += [(upper[i], lower[i]), (upper[i], lower[(i - 1) % 5])]
    return Graph(12, edges)


def glue_on_triangle(g: Graph, tri_g: tuple[int, int, int], h: Graph,
                     tri_h: tuple[int, int, int]) -> Graph:
    """Identify triangle ``tri_h`` of ``h`` with triangle ``tri_g`` of ``g``."""
    mapping: dict[int, int] = dict(zip(tri_h, tri_g))
    nxt = g.n
    for v in range(h.n):
        if v not in mapping:
            mapping[v] = nxt
            nxt += 1
    return Graph(nxt, list(g.edges) + [(mapping[u], mapping[v]) for u, v in h.edges])


def make_iterated_icosahedra(m: int) -> Graph:
    """I_m: ``m`` icosahedra, each glued onto a face of the previous one."""
    if m < 1:
        raise BadParameter("I_m is defined for m >= 1")
    ico = make_icosahedron()
    g = ico
    last = (0, 1, 2)
    for k in range(1, m):
        n0 = g.n
        g = glue_on_triangle(g, last, ico, (11, 6, 7))
        # the bottom face of the newest copy, away from the glued one
        last = (n0 + 0, n0 + 1, n0 + 2)
    return g


# statistics --------------------------------------------------------------


def count_triangles(g: Graph) -> int:
    adj = g.adjacency
    total = 0
    for u, v in g.edges:
        common = adj[u] & adj[v]
        total += (common >> (v + 1)).bit_count()
    return total


def is_triangulation_consistent(g: Graph) -> bool:
    """Euler edge count ``e = 3(n-2)`` for a connected graph with n >= 3."""
    return g.n >= 3 and g.e == 3 * (g.n - 2) and g.is_connected()


def brown_u(g: Graph) -> Fraction:
    """``u(G) = (e(e-n) + n - 1) / (2(n-2))``."""
    n, e = g.n, g.e
    if n < 3:
        raise BrownUndefined("u(G) needs n >= 3")
    return Fraction(e * (e - n) + n - 1, 2 * (n - 2))


@dataclass(frozen=True)
class GraphStats:
    n: int
    e: int
    f_implied: int
    is_planar_triangulation_consistent: bool
    N_t: int
    chi: int
    d_eff: Fraction
    brown_u: Fraction | None


def stats(g: Graph) -> GraphStats:
    from ptchrom.chromatic import chromatic_number

    consistent = is_triangulation_consistent(g)
    return GraphStats(
        n=g.n,
        e=g.e,
        f_implied=2 * (g.n - 2) if consistent else g.e - g.n + 2,
        is_planar_triangulation_consistent=consistent,
        N_t=count_triangles(g),
        chi=chromatic_number(g),
        d_eff=Fraction(2 * g.e, g.n) if g.n else Fraction(0),
        brown_u=brown_u(g) if g.n >= 3 else None,
    )


# canonical form ------------------------------------------------------------


def _refine(adj: tuple[int, ...], cells: list[list[int]]) -> list[list[int]]:
    """Equitable refinement: split cells by neighbour counts into every cell."""
    cells = [list(c) for c in cells]
    changed = True
    while changed:
        changed = False
        masks = [sum(1 << v for v in c) for c in cells]
        new_cells: list[list[int]] = []
        for c in cells:
            if len(c) == 1:
                new_cells.append(c)
                continue
            keyed = sorted(c, key=lambda v: tuple((adj[v] & m).bit_count() for m in masks))
            groups: list[list[int]] = []
            prev = None
            for v in keyed:
                k = tuple((adj[v] & m).bit_count() for m in masks)
                if k != prev:
                    groups.append([])
                    prev = k
                groups[-1].append(v)
            if len(groups) > 1:
                changed = True
            new_cells.extend(groups)
        cells = new_cells
    return cells


def _certificate(g: Graph, order: list[int]) -> tuple[tuple[int, int], ...]:
    pos = {v: i for i, v in enumerate(order)}
    return tuple(sorted(tuple(sorted((pos[u], pos[v]))) for u, v in g.edges))


def canonical_labeling(g: Graph) -> list[int]:
    """Vertex order whose relabelling gives the canonical form.

    Individualisation-refinement over the first non-singleton cell, keeping
    the lexicographically least edge certificate; automorphisms found at the
    leaves prune sibling branches that lie in the same orbit.
    """
    adj = g.adjacency
    if g.n == 0:
        return []
    root = _refine(adj, [list(range(g.n))])
    best: list | None = None
    best_cert = None

    autos: list[tuple[int, ...]] = []

    def search(cells: list[list[int]], path: tuple[int, ...]) -> None:
        nonlocal best, best_cert
        target = next((i for i, c in enumerate(cells) if len(c) > 1), None)
        if target is None:
            order = [c[0] for c in cells]
            cert = _certificate(g, order)
            if best_cert is None or cert < best_cert:
                best, best_cert = order, cert
            elif cert == best_cert:
                # order -> best is an automorphism
                perm = [0] * g.n
                for a, b in zip(order, best):
                    perm[a] = b
                autos.append(tuple(perm))
            return
        cell = cells[target]
        done: set[int] = set()
        for v in cell:
            if v in done:
                continue
            rest = [u for u in cell if u != v]
            child = cells[:target] + [[v], rest] + cells[target + 1:]
            search(_refine(adj, child), path + (v,))
            # only automorphisms fixing the individualised prefix may prune here
            usable = [p for p in autos if all(p[x] == x for x in path)]
            orbit = {v}
            grew = True
            while grew:
                grew = False
                for p in usable:
                    for u in list(orbit):
                        w = p[u]
                        if w not in orbit:
                            orbit.add(w)
                            grew = True
            done |= orbit

    search(root, ())
    assert best is not None
    return best


def canonical_form(g: Graph) -> tuple[int, tuple[tuple[int, int], ...]]:
    """Isomorphism invariant: ``(n, sorted relabelled edges)``."""
    order = canonical_labeling(g)
    return g.n, _certificate(g, order)


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.e != h.e or sorted(g.degrees()) != sorted(h.degrees()):
        return False
    return canonical_form(g) == canonical_form(h)
