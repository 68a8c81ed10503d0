"""The initial complex of the special fiber.

Vertices are the pairs ``(a, b)`` with ``1 <= a < b <= c``, read as open
intervals.  The complex is flag: its minimal non-faces are the crossing pairs
and the pairs ``{(a, b), (bar g, bar h)}``.  Facets are enumerated twice,
once as maximal cliques of the compatibility graph and once from the binary
tree shape they are known to have.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from math import comb
from typing import Iterable, NamedTuple

import networkx as nx

from .errors import BoundExceeded, ConstraintViolated
from .scroll import ScrollSpec, bar, gamma_and_ell

DEFAULT_CLIQUE_BOUND = 12


class Interval(NamedTuple):
    left: int
    right: int

    @property
    def length(self) -> int:
        return self.right - self.left

    def contains(self, other: "Interval") -> bool:
        return self.left <= other.left and other.right <= self.right


def interval(a: int, b: int) -> Interval:
    """The interval with endpoints ``a`` and ``b`` in either order."""
    if a == b:
        raise ValueError(f"degenerate interval ({a},{b})")
    return Interval(min(a, b), max(a, b))


def vertices(spec: ScrollSpec) -> list[Interval]:
    return [Interval(a, b) for a, b in combinations(range(1, spec.c + 1), 2)]


def crossing(u: Interval, v: Interval) -> bool:
    """True if the two intervals overlap without being nested."""
    if u > v:
        u, v = v, u
    return u.left < v.left < u.right < v.right


Pair = tuple  # tuple[Interval, Interval], sorted


def _pair(u: Interval, v: Interval) -> Pair:
    if u == v:
        raise AssertionError(f"non-face pair collapses to one vertex {u}")
    return (u, v) if u < v else (v, u)


@lru_cache(maxsize=None)
def minimal_nonfaces(spec: ScrollSpec) -> tuple[tuple[Pair, ...], tuple[Pair, ...]]:
    """``(crossing pairs, barred pairs)``, each sorted."""
    c, d = spec.c, spec.d
    cross = sorted(
        _pair(Interval(a, g), Interval(b, h)) for a, b, g, h in combinations(range(1, c + 1), 4)
    )
    barred = sorted(
        {
            _pair(Interval(a, b), interval(bar(spec, g), bar(spec, h)))
            for a, b, g, h in combinations(range(1, c - d + 1), 4)
        }
    )
    return tuple(cross), tuple(barred)


@lru_cache(maxsize=None)
def _barred_set(spec: ScrollSpec) -> frozenset:
    return frozenset(minimal_nonfaces(spec)[1])


def compatible(spec: ScrollSpec, u: Interval, v: Interval) -> bool:
    return not crossing(u, v) and _pair(u, v) not in _barred_set(spec)


def is_face(spec: ScrollSpec, face: Iterable) -> bool:
    items = sorted({Interval(*u) for u in face})
    for u in items:
        if not 1 <= u.left < u.right <= spec.c:
            raise ValueError(f"interval {tuple(u)} outside [1,{spec.c}]")
    return all(compatible(spec, u, v) for u, v in combinations(items, 2))


def is_facet(spec: ScrollSpec, face: Iterable) -> bool:
    items = {Interval(*u) for u in face}
    if not is_face(spec, items):
        return False
    return not any(all(compatible(spec, v, u) for u in items) for v in vertices(spec) if v not in items)


def compatibility_graph(spec: ScrollSpec) -> nx.Graph:
    g = nx.Graph()
    vs = vertices(spec)
    g.add_nodes_from(vs)
    g.add_edges_from((u, v) for u, v in combinations(vs, 2) if compatible(spec, u, v))
    return g


def canonical(facets: Iterable) -> list[tuple[Interval, ...]]:
    return sorted(tuple(sorted(f)) for f in facets)


def facets_clique(spec: ScrollSpec, bound: int = DEFAULT_CLIQUE_BOUND) -> list[tuple[Interval, ...]]:
    """All facets as maximal cliques of the compatibility graph (the complex is flag)."""
    if spec.c > bound:
        raise BoundExceeded(f"clique enumeration capped at c <= {bound}, got c = {spec.c}")
    if spec.c == 1:
        return [()]
    return canonical(nx.find_cliques(compatibility_graph(spec)))


# -- tree-shaped enumeration ---------------------------------------------------

class _TreeEnumerator:
    """Sets F with root (1,c), binary Hasse tree, leaves exactly the black units.

    A node with one child drops a white unit at one end; a node with two
    children splits into two adjacent intervals.
    """

    def __init__(self, c: int, black: set[int]):
        self.c = c
        self.black = black
        self.memo: dict = {}
        self.count_memo: dict = {}

    def trees(self, a: int, b: int) -> list[frozenset]:
        key = (a, b)
        if key in self.memo:
            return self.memo[key]
        node = Interval(a, b)
        out = []
        if b == a + 1:
            if a in self.black:
                out.append(frozenset([node]))
        else:
            if a not in self.black:
                out.extend(s | {node} for s in self.trees(a + 1, b))
            if b - 1 not in self.black:
                out.extend(s | {node} for s in self.trees(a, b - 1))
            for g in range(a + 1, b):
                left = self.trees(a, g)
                if not left:
                    continue
                right = self.trees(g, b)
                out.extend(l | r | {node} for l in left for r in right)
        self.memo[key] = out
        return out

    def count(self, a: int, b: int) -> int:
        key = (a, b)
        if key in self.count_memo:
            return self.count_memo[key]
        if b == a + 1:
            n = 1 if a in self.black else 0
        else:
            n = 0
            if a not in self.black:
                n += self.count(a + 1, b)
            if b - 1 not in self.black:
                n += self.count(a, b - 1)
            for g in range(a + 1, b):
                n += self.count(a, g) * self.count(g, b)
        self.count_memo[key] = n
        return n


def facet_leaves(spec: ScrollSpec, alpha: int) -> set[int]:
    """Left endpoints of the unitary leaves of facets whose first leaf is ``(alpha, alpha+1)``."""
    c, d = spec.c, spec.d
    ell = gamma_and_ell(spec, alpha)[1]
    return set(range(alpha, alpha + ell + 1)) | set(range(c - d + ell - 1, c))


def facets_tree(spec: ScrollSpec) -> list[tuple[Interval, ...]]:
    """All facets, built from their tree shape.

    For ``c < d + 4`` every unit is a leaf (the Grassmann case); otherwise the
    leaves are fixed by the first leaf ``alpha`` and the window ``ell_alpha``.
    """
    c = spec.c
    if c == 1:
        return [()]
    if spec.grassmann:
        leaf_sets = [set(range(1, c))]
    else:
        leaf_sets = [facet_leaves(spec, a) for a in range(1, c - spec.d - 1)]
    out = []
    for black in leaf_sets:
        out.extend(_TreeEnumerator(c, black).trees(1, c))
    return canonical(out)


def catalan(n: int) -> int:
    if n < 0:
        raise ValueError("catalan(n) needs n >= 0")
    return comb(2 * n, n) // (n + 1)


def catalan_trapezoid(m: int, n: int, k: int) -> int:
    """``C_m(n, k)``; the middle clause includes ``k = n + m - 1``."""
    if m < 1 or n < 0 or k < 0:
        raise ValueError("catalan_trapezoid needs m >= 1 and n, k >= 0")
    if k < m:
        return comb(n + k, k)
    if k <= n + m - 1:
        return comb(n + k, k) - comb(n + k, k - m)
    return 0


def facet_count_formula(spec: ScrollSpec) -> int:
    c, d = spec.c, spec.d
    if c == 1:
        return 1
    if spec.grassmann:
        return catalan(c - 2)
    return sum(comb(c + d - 1, a + d) for a in range(1, c - d - 1)) - (c - d - 2) * comb(c + d - 1, d)


def facet_dimension_size(spec: ScrollSpec) -> int:
    """Cardinality shared by all facets."""
    if spec.c == 1:
        return 0
    return 2 * spec.c - 3 if spec.grassmann else spec.c + spec.d


# -- colour signatures -----------------------------------------------------------

def _sigma_black(alpha: int, beta1: int, gamma: int, beta2: int, c: int) -> set[int]:
    for name, v in (("alpha", alpha), ("beta1", beta1), ("gamma", gamma), ("beta2", beta2)):
        if not isinstance(v, int) or v < 0:
            raise ConstraintViolated(f"{name} must be a nonnegative integer, got {v!r}")
    if beta1 <= 0:
        raise ConstraintViolated("beta1 must be positive")
    if alpha + beta1 + gamma + beta2 != c - 1:
        raise ConstraintViolated(f"alpha+beta1+gamma+beta2 must equal c-1 = {c - 1}")
    if gamma == 0 and beta2 != 0:
        raise ConstraintViolated("beta2 must be 0 when gamma is 0")
    start2 = alpha + beta1 + gamma
    return set(range(alpha + 1, alpha + beta1 + 1)) | set(range(start2 + 1, start2 + beta2 + 1))


def sigma_enumerate(alpha: int, beta1: int, gamma: int, beta2: int, c: int) -> list[tuple[Interval, ...]]:
    """Tree-shaped sets whose leaves are exactly the black units.

    Units ``(k, k+1)``, k = 1..c-1, are coloured: ``alpha`` white, ``beta1``
    black, ``gamma`` white, ``beta2`` black.
    """
    black = _sigma_black(alpha, beta1, gamma, beta2, c)
    return canonical(_TreeEnumerator(c, black).trees(1, c))


def sigma_count(alpha: int, beta1: int, gamma: int, beta2: int, c: int) -> int:
    black = _sigma_black(alpha, beta1, gamma, beta2, c)
    return _TreeEnumerator(c, black).count(1, c)


def sigma_formula(alpha: int, beta1: int, gamma: int, beta2: int) -> int:
    return catalan_trapezoid(alpha + 1, beta1 + gamma + beta2 - 1, alpha + beta1 + beta2 - 1)


def sigma_signatures(c: int) -> list[tuple[int, int, int, int]]:
    """Every valid ``(alpha, beta1, gamma, beta2)`` for the given c."""
    out = []
    total = c - 1
    for alpha in range(total + 1):
        for beta1 in range(1, total - alpha + 1):
            for gamma in range(total - alpha - beta1 + 1):
                beta2 = total - alpha - beta1 - gamma
                if gamma == 0 and beta2:
                    continue
                out.append((alpha, beta1, gamma, beta2))
    return out


def facet_count_tree(spec: ScrollSpec) -> int:
    """Facet count by the tree recursion, without materializing facets."""
    c = spec.c
    if c == 1:
        return 1
    if spec.grassmann:
        return _TreeEnumerator(c, set(range(1, c))).count(1, c)
    return sum(_TreeEnumerator(c, facet_leaves(spec, a)).count(1, c) for a in range(1, c - spec.d - 1))


def facets_json(facets) -> list:
    return [[[u.left, u.right] for u in f] for f in facets]
