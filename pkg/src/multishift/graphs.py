"""Word graphs G(m, n) and exact counting of their Euler tours.

Vertices of G(m, n) are the words of length n and arcs the words of length
n + m; arc w joins w[1..n] to w[m+1..m+n].  Both are identified with their
radix-a rank, so arc x has tail ``x // a**m`` and head ``x % a**n``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from math import factorial
from typing import Sequence

from .errors import ConstructionError, DomainError, GuardExceeded, PreconditionError
from .verify import is_multishift_db
from .words import DbParams, Word, WordLike, unrank, window_ranks

MAX_VERTICES = 4096
MAX_ARCS = 1 << 20
MAX_DET_VERTICES = 64
MAX_FACTORIAL_DEGREE = 10 ** 4
MAX_BRUTE_ARCS = 16


@dataclass(frozen=True, eq=False)
class WordGraph:
    a: int
    m: int
    n: int
    tails: tuple
    heads: tuple

    @property
    def num_vertices(self) -> int:
        return self.a ** self.n

    @property
    def num_arcs(self) -> int:
        return len(self.tails)

    @property
    def degree(self) -> int:
        return self.a ** self.m

    def arc_word(self, x: int) -> Word:
        return unrank(x, self.n + self.m, self.a)

    def vertex_word(self, v: int) -> Word:
        return unrank(v, self.n, self.a)

    def indegrees(self) -> list[int]:
        deg = [0] * self.num_vertices
        for h in self.heads:
            deg[h] += 1
        return deg

    def outdegrees(self) -> list[int]:
        deg = [0] * self.num_vertices
        for t in self.tails:
            deg[t] += 1
        return deg

    def arc_pairs(self) -> list[tuple[int, int]]:
        return list(zip(self.tails, self.heads))

    def same_as(self, other: "WordGraph") -> bool:
        """Identical parameters, arc labels and incidence."""
        return ((self.a, self.m, self.n) == (other.a, other.m, other.n)
                and self.tails == other.tails and self.heads == other.heads)

    def is_connected(self) -> bool:
        """Every vertex reaches and is reached from vertex 0^n."""
        out = [[] for _ in range(self.num_vertices)]
        back = [[] for _ in range(self.num_vertices)]
        for t, h in zip(self.tails, self.heads):
            out[t].append(h)
            back[h].append(t)
        return _reaches_all(out, 0) and _reaches_all(back, 0)


def _reaches_all(adj, root) -> bool:
    seen = [False] * len(adj)
    seen[root] = True
    todo = deque([root])
    while todo:
        v = todo.popleft()
        for u in adj[v]:
            if not seen[u]:
                seen[u] = True
                todo.append(u)
    return all(seen)


def build_word_graph(a: int, m: int, n: int, max_vertices: int = MAX_VERTICES) -> WordGraph:
    """G(m, n) over an a-letter alphabet; n = 0 gives the one-vertex graph."""
    if a < 1 or m < 1 or n < 0:
        raise DomainError("need a >= 1, m >= 1, n >= 0")
    if a ** n > max_vertices:
        raise GuardExceeded(f"{a ** n} vertices exceeds limit {max_vertices}")
    arcs = a ** (n + m)
    if arcs > MAX_ARCS:
        raise GuardExceeded(f"{arcs} arcs exceeds limit {MAX_ARCS}")
    shift, mod = a ** m, a ** n
    tails = tuple(x // shift for x in range(arcs))
    heads = tuple(x % mod for x in range(arcs))
    return WordGraph(a, m, n, tails, heads)


def explicit_arc_graph(g: WordGraph) -> list[tuple[int, int, int]]:
    """Arc-graph of g built from consecutive arc pairs.

    Returns ``(label, first_arc, second_arc)`` for every pair with
    head(first) == tail(second); the label is first * a^m + (last m symbols
    of second), i.e. the rank of first . second[n+1..n+m].
    """
    shift = g.a ** g.m
    leaving = [[] for _ in range(g.num_vertices)]
    for x, t in enumerate(g.tails):
        leaving[t].append(x)
    triples = []
    for x1, h in enumerate(g.heads):
        for x2 in leaving[h]:
            triples.append((x1 * shift + x2 % shift, x1, x2))
    return triples


def arc_graph(g: WordGraph, max_vertices: int = MAX_VERTICES) -> WordGraph:
    """G(m, n)* as G(m, n + m), checked arc-for-arc against the explicit pairing."""
    result = build_word_graph(g.a, g.m, g.n + g.m, max_vertices=max(max_vertices, g.num_arcs))
    triples = explicit_arc_graph(g)
    if len(triples) != result.num_arcs:
        raise ConstructionError("arc-graph has the wrong number of arcs")
    for label, x1, x2 in triples:
        if result.tails[label] != x1 or result.heads[label] != x2:
            raise ConstructionError(f"arc {label} of the arc-graph disagrees with G(m, n+m)")
    if len({label for label, _, _ in triples}) != result.num_arcs:
        raise ConstructionError("arc-graph labels are not distinct")
    return result


def det_bareiss(matrix: Sequence[Sequence[int]]) -> int:
    """Exact determinant of an integer matrix by fraction-free elimination."""
    M = [list(map(int, row)) for row in matrix]
    size = len(M)
    if size == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(size - 1):
        if M[k][k] == 0:
            for i in range(k + 1, size):
                if M[i][k] != 0:
                    M[k], M[i] = M[i], M[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = M[k][k]
        row_k = M[k]
        for i in range(k + 1, size):
            row_i = M[i]
            lead = row_i[k]
            for j in range(k + 1, size):
                # exact division is guaranteed by Sylvester's identity
                row_i[j] = (row_i[j] * pivot - lead * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * M[-1][-1]


def laplacian(g: WordGraph) -> list[list[int]]:
    """Out-degree Laplacian with self-loops dropped."""
    V = g.num_vertices
    L = [[0] * V for _ in range(V)]
    for t, h in zip(g.tails, g.heads):
        if t != h:
            L[t][t] += 1
            L[t][h] -= 1
    return L


def arborescence_count(g: WordGraph, root: int = 0,
                       max_vertices: int = MAX_DET_VERTICES) -> int:
    """Spanning arborescences via the directed Matrix-Tree theorem."""
    V = g.num_vertices
    if V > max_vertices:
        raise GuardExceeded(f"{V} vertices exceeds determinant limit {max_vertices}")
    L = laplacian(g)
    minor = [row[:root] + row[root + 1:] for i, row in enumerate(L) if i != root]
    return det_bareiss(minor)


def euler_count_best(g: WordGraph, max_vertices: int = MAX_DET_VERTICES) -> int:
    """Euler tours, counted up to rotation, by the BEST theorem."""
    if g.degree > MAX_FACTORIAL_DEGREE:
        raise GuardExceeded(f"degree {g.degree} exceeds factorial limit {MAX_FACTORIAL_DEGREE}")
    arbs = arborescence_count(g, max_vertices=max_vertices)
    return factorial(g.degree - 1) ** g.num_vertices * arbs


def count_euler_tours(num_vertices: int, arcs: Sequence[tuple[int, int]],
                      max_arcs: int = MAX_BRUTE_ARCS) -> int:
    """Brute-force count of Euler tours of an arbitrary multigraph.

    Arcs are distinct objects even when parallel.  Rotations are identified
    by forcing arc 0 to come first.
    """
    if len(arcs) > max_arcs:
        raise GuardExceeded(f"{len(arcs)} arcs exceeds brute-force limit {max_arcs}")
    if not arcs:
        return 0
    indeg = [0] * num_vertices
    outdeg = [0] * num_vertices
    leaving = [[] for _ in range(num_vertices)]
    for i, (t, h) in enumerate(arcs):
        outdeg[t] += 1
        indeg[h] += 1
        leaving[t].append(i)
    if indeg != outdeg:
        return 0
    used = [False] * len(arcs)
    start = arcs[0][0]
    used[0] = True

    def extend(v, remaining):
        if remaining == 0:
            return 1 if v == start else 0
        total = 0
        for i in leaving[v]:
            if not used[i]:
                used[i] = True
                total += extend(arcs[i][1], remaining - 1)
                used[i] = False
        return total

    return extend(arcs[0][1], len(arcs) - 1)


def euler_count_brute(g: WordGraph, max_arcs: int = MAX_BRUTE_ARCS) -> int:
    return count_euler_tours(g.num_vertices, g.arc_pairs(), max_arcs=max_arcs)


def _check_tour(g: WordGraph, tour: Sequence[int]):
    if sorted(tour) != list(range(g.num_arcs)):
        raise DomainError("tour must use every arc exactly once")
    for x, y in zip(tour, list(tour[1:]) + [tour[0]]):
        if g.heads[x] != g.tails[y]:
            raise DomainError(f"arcs {x} and {y} are not consecutive")


def sequence_from_euler(g: WordGraph, tour: Sequence[int], start_index: int = 0) -> Word:
    """Unroll an Euler tour of G(m, n-m) into an m-shift sequence of order n.

    The tour is read from ``tour[start_index]``: the first arc contributes
    all its symbols, each later arc its last m symbols.
    """
    tour = list(tour)
    _check_tour(g, tour)
    if not 0 <= start_index < len(tour):
        raise DomainError("start_index out of range")
    tour = tour[start_index:] + tour[:start_index]
    shift = g.a ** g.m
    out = list(g.arc_word(tour[0]))
    for x in tour[1:]:
        out.extend(unrank(x % shift, g.m, g.a))
    return Word(out)


def euler_from_sequence(w: WordLike, p: DbParams) -> list[int]:
    """Euler tour of G(m, n-m) read off the modulo-m windows of w."""
    if p.m > p.n:
        raise PreconditionError("tour correspondence needs m <= n")
    w = Word(w)
    if not is_multishift_db(w, p).ok:
        raise DomainError("word is not an m-shift de Bruijn sequence")
    return list(window_ranks(w, p.a, p.m, p.n))
