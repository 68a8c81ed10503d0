"""The scroll term order and a plain graded-lex order.

Both orders expose ``key(monomial)``: a tuple whose natural ordering is the
monomial order (larger key = larger monomial).  For the scroll order the key
is ``(mdeg, sdeg, lex)`` where ``lex`` lists the exponents by decreasing
variable rank.
"""

from __future__ import annotations

import json
from functools import lru_cache
from typing import Sequence

from .errors import ZeroPolynomial
from .poly import Monomial, Polynomial, Ring, TVar, scroll_ring
from .scroll import ScrollSpec, XVar, column_of_bottom


class MonomialOrder:
    """Base class; subclasses fill ``_key_cache`` lazily through ``_compute_key``."""

    ring: Ring

    def __init__(self):
        self._key_cache: dict[Monomial, tuple] = {}

    def key(self, m: Monomial) -> tuple:
        k = self._key_cache.get(m)
        if k is None:
            k = self._key_cache[m] = self._compute_key(m)
        return k

    def _compute_key(self, m: Monomial) -> tuple:
        raise NotImplementedError

    def compare(self, m1: Monomial, m2: Monomial) -> int:
        k1, k2 = self.key(m1), self.key(m2)
        return (k1 > k2) - (k1 < k2)

    def leading_term(self, p: Polynomial):
        if not p.terms:
            raise ZeroPolynomial("leading term of the zero polynomial")
        m = max(p.terms, key=self.key)
        return m, p.terms[m]

    def leading_monomial(self, p: Polynomial) -> Monomial:
        return self.leading_term(p)[0]

    def sort_desc(self, monos):
        return sorted(monos, key=self.key, reverse=True)

    def __getstate__(self):
        state = self.__dict__.copy()
        state["_key_cache"] = {}
        return state


def variable_chain(spec: ScrollSpec) -> list:
    """All variables of the T-ring from largest to smallest."""
    xs_nonterminal = [XVar(i, j) for i, ni in enumerate(spec.n, 1) for j in range(ni)]
    xs_nonterminal.sort(key=lambda v: (v.j, v.i))
    xs_terminal = [XVar(i, spec.n[i - 1]) for i in range(spec.d, 0, -1)]
    ts = [TVar(a, b) for a in range(1, spec.c + 1) for b in range(a + 1, spec.c + 1)]
    return xs_nonterminal + xs_terminal + ts


class OrderContext(MonomialOrder):
    """Multidegree first, then s-degree, then lex on the variable chain."""

    def __init__(self, spec: ScrollSpec):
        super().__init__()
        self.spec = spec
        self.ring = scroll_ring(spec, "m")
        c, d = spec.c, spec.d
        chain = variable_chain(spec)
        nv = self.ring.nvars
        # rank: 0 is the smallest variable
        self.rank = [0] * nv
        for pos, v in enumerate(chain):
            self.rank[self.ring.var_id(v)] = len(chain) - 1 - pos
        self.by_rank_desc = [self.ring.var_id(v) for v in chain]
        self.mdeg_of: list[tuple[int, ...]] = []
        self.sdeg_of: list[int] = []
        for v in self.ring.variables:
            vec = [0] * (c + d)
            if isinstance(v, TVar):
                vec[v.a + d - 1] += 1
                vec[v.b + d - 1] += 1
                self.sdeg_of.append(c - v.a)
            else:
                if v.j == 0:
                    vec[v.i - 1] = 1
                else:
                    vec[column_of_bottom(spec, v) + d - 1] = 1
                self.sdeg_of.append(0)
            self.mdeg_of.append(tuple(vec))
        x_mdegs = [md for v, md in zip(self.ring.variables, self.mdeg_of) if isinstance(v, XVar)]
        if len(set(x_mdegs)) != len(x_mdegs):
            raise AssertionError("x-variables must have pairwise distinct multidegrees")

    def variable_rank(self, v) -> int:
        """Position of ``v`` in the variable order; larger rank = larger variable."""
        return self.rank[self.ring.var_id(v)]

    def mdeg(self, m: Monomial) -> tuple[int, ...]:
        vec = [0] * (self.spec.c + self.spec.d)
        for v, e in m:
            for k, x in enumerate(self.mdeg_of[v]):
                if x:
                    vec[k] += x * e
        return tuple(vec)

    def sdeg(self, m: Monomial) -> int:
        return sum(self.sdeg_of[v] * e for v, e in m)

    def _compute_key(self, m: Monomial) -> tuple:
        exps = dict(m)
        lex = tuple(exps.get(v, 0) for v in self.by_rank_desc)
        return (self.mdeg(m), self.sdeg(m), lex)

    def dump_variables(self) -> str:
        return "\n".join(self.ring.name(v) for v in self.by_rank_desc)

    def dump_degrees(self) -> str:
        rows = []
        for v in self.by_rank_desc:
            rows.append({"var": self.ring.name(v), "mdeg": list(self.mdeg_of[v]), "sdeg": self.sdeg_of[v]})
        return json.dumps(rows)


@lru_cache(maxsize=None)
def order_context(spec: ScrollSpec) -> OrderContext:
    return OrderContext(spec)


class GradedLex(MonomialOrder):
    """Total degree, ties broken lexicographically along ``var_order`` (largest first)."""

    def __init__(self, ring: Ring, var_order: Sequence[int] | None = None):
        super().__init__()
        self.ring = ring
        self.var_order = list(var_order) if var_order is not None else list(range(ring.nvars))
        if sorted(self.var_order) != list(range(ring.nvars)):
            raise ValueError("var_order must be a permutation of the ring's variable ids")

    def _compute_key(self, m: Monomial) -> tuple:
        exps = dict(m)
        return (sum(exps.values()), tuple(exps.get(v, 0) for v in self.var_order))


class GradedRevLex(MonomialOrder):
    """Total degree, ties broken by reverse lex along ``var_order`` (largest first)."""

    def __init__(self, ring: Ring, var_order: Sequence[int] | None = None):
        super().__init__()
        self.ring = ring
        self.var_order = list(var_order) if var_order is not None else list(range(ring.nvars))

    def _compute_key(self, m: Monomial) -> tuple:
        exps = dict(m)
        return (sum(exps.values()), tuple(-exps.get(v, 0) for v in reversed(self.var_order)))
