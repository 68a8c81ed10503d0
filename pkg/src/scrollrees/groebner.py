"""Division, S-polynomials, Buchberger's criterion and completion.

Any object with ``key(monomial)`` and ``ring`` (see :mod:`scrollrees.order`)
serves as the monomial order.  Coefficients are exact rationals, or integers
modulo a prime when ``modulus`` is given.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from .errors import PairBudgetExceeded, ZeroDivisor, ZeroPolynomial
from .poly import (
    Monomial,
    Polynomial,
    mono_coprime,
    mono_degree,
    mono_div,
    mono_divisors,
    mono_lcm,
    mono_mul,
    normalize_coeff,
)

# When True every reduce() call re-checks  f == sum(q_i g_i) + r.
DEBUG_CHECKS = False

DEFAULT_PAIR_BUDGET = 10**6


def to_modular(p: Polynomial, modulus: int) -> Polynomial:
    terms = {}
    for m, c in p.terms.items():
        if isinstance(c, Fraction):
            v = c.numerator * pow(c.denominator, -1, modulus) % modulus
        else:
            v = c % modulus
        if v:
            terms[m] = v
    return Polynomial._raw(p.ring, terms)


class _Field:
    def __init__(self, modulus: Optional[int]):
        self.p = modulus

    def div(self, a, b):
        if self.p:
            return a * pow(b, -1, self.p) % self.p
        if b == 1:
            return a
        if b == -1:
            return -a
        return normalize_coeff(Fraction(a) / b)

    def mul(self, a, b):
        if self.p:
            return a * b % self.p
        return normalize_coeff(a * b)

    def sub(self, a, b):
        if self.p:
            return (a - b) % self.p
        return normalize_coeff(a - b)

    def convert(self, p: Polynomial) -> Polynomial:
        return to_modular(p, self.p) if self.p else p


@dataclass
class ReductionTrace:
    input: Polynomial
    quotients: list[Polynomial]
    remainder: Polynomial

    def identity_holds(self, basis: Sequence[Polynomial], modulus: Optional[int] = None) -> bool:
        total = self.remainder
        for q, g in zip(self.quotients, basis):
            total = total + q * g
        diff = total - self.input
        if modulus:
            diff = to_modular(diff, modulus)
        return diff.is_zero()


class Reducer:
    """Division by a fixed list of polynomials.

    The highest reducible monomial is always cancelled first, using the earliest
    basis element whose leading monomial divides it.
    """

    def __init__(self, order, basis: Sequence[Polynomial], modulus: Optional[int] = None):
        self.order = order
        self.field = _Field(modulus)
        self.basis = [self.field.convert(g) for g in basis]
        self.lms: list[Monomial] = []
        self.lcs = []
        self.lm_index: dict[Monomial, int] = {}
        for k, g in enumerate(self.basis):
            if g.is_zero():
                raise ZeroDivisor(f"basis element {k} is zero")
            m, c = order.leading_term(g)
            self.lms.append(m)
            self.lcs.append(c)
            self.lm_index.setdefault(m, k)
        self.lm_degrees = {mono_degree(m) for m in self.lms}

    def divisor_of(self, m: Monomial) -> Optional[int]:
        best = None
        for q in mono_divisors(m):
            if mono_degree(q) in self.lm_degrees:
                k = self.lm_index.get(q)
                if k is not None and (best is None or k < best):
                    best = k
        return best

    def reduce_terms(self, terms: dict, track: bool = False):
        F = self.field
        key = self.order.key
        f = dict(terms)
        rem = {}
        quotients = {} if track else None
        while f:
            m = max(f, key=key)
            c = f.pop(m)
            k = self.divisor_of(m)
            if k is None:
                rem[m] = c
                continue
            factor = F.div(c, self.lcs[k])
            mult = mono_div(m, self.lms[k])
            lm = self.lms[k]
            for gm, gc in self.basis[k].terms.items():
                if gm == lm:
                    continue
                t = mono_mul(mult, gm)
                v = F.sub(f.get(t, 0), F.mul(factor, gc))
                if v:
                    f[t] = v
                else:
                    f.pop(t, None)
            if track:
                qk = quotients.setdefault(k, {})
                v = F.sub(qk.get(mult, 0), -factor)
                if v:
                    qk[mult] = v
                else:
                    qk.pop(mult, None)
        return rem, quotients

    def reduce(self, f: Polynomial, track: bool = True) -> ReductionTrace:
        f = self.field.convert(f)
        rem, qs = self.reduce_terms(f.terms, track=track)
        ring = f.ring
        quotients = []
        if track:
            quotients = [Polynomial._raw(ring, qs.get(k, {})) for k in range(len(self.basis))]
        trace = ReductionTrace(f, quotients, Polynomial._raw(ring, rem))
        if DEBUG_CHECKS and track and not trace.identity_holds(self.basis, self.field.p):
            raise AssertionError("division identity violated")
        return trace


def reduce(order, f: Polynomial, basis: Sequence[Polynomial], modulus: Optional[int] = None) -> ReductionTrace:
    """Divide ``f`` by ``basis``; the trace records quotients and remainder."""
    return Reducer(order, basis, modulus).reduce(f)


def s_poly(order, f: Polynomial, g: Polynomial, modulus: Optional[int] = None) -> Polynomial:
    if f.is_zero() or g.is_zero():
        raise ZeroPolynomial("S-polynomial of the zero polynomial")
    F = _Field(modulus)
    f, g = F.convert(f), F.convert(g)
    mf, cf = order.leading_term(f)
    mg, cg = order.leading_term(g)
    lcm = mono_lcm(mf, mg)
    left = f.mul_term(mono_div(lcm, mf), F.div(1, cf))
    right = g.mul_term(mono_div(lcm, mg), F.div(1, cg))
    return F.convert(left - right)


@dataclass
class GBCheck:
    is_gb: bool
    spairs_checked: int
    spairs_skipped: int
    failures: list[tuple[int, int]] = field(default_factory=list)
    pair_types: dict[str, list[int]] = field(default_factory=dict)

    def to_json_obj(self, labels: Optional[Sequence[str]] = None) -> dict:
        fails = [[labels[i], labels[j]] if labels else [i, j] for i, j in self.failures]
        return {"is_gb": self.is_gb, "spairs_checked": self.spairs_checked, "failures": fails}


def is_groebner(
    order,
    basis: Sequence[Polynomial],
    families: Optional[Sequence[str]] = None,
    modulus: Optional[int] = None,
    skip_coprime: bool = True,
    budget: Optional[int] = None,
) -> GBCheck:
    """Buchberger's criterion: every S-pair reduces to zero modulo ``basis``.

    ``families`` (one tag per basis element) enables per-type pair counts,
    keyed like ``"L,M"`` with the tags sorted.
    """
    red = Reducer(order, basis, modulus)
    checked = skipped = 0
    failures = []
    types: dict[str, list[int]] = {}
    n = len(red.basis)
    for i in range(n):
        for j in range(i + 1, n):
            if skip_coprime and mono_coprime(red.lms[i], red.lms[j]):
                skipped += 1
                continue
            if budget is not None and checked >= budget:
                raise PairBudgetExceeded(f"S-pair budget {budget} exhausted")
            sp = s_poly(order, red.basis[i], red.basis[j], modulus)
            rem, _ = red.reduce_terms(sp.terms)
            checked += 1
            ok = not rem
            if not ok:
                failures.append((i, j))
            if families is not None:
                tkey = ",".join(sorted((families[i], families[j])))
                slot = types.setdefault(tkey, [0, 0])
                slot[0] += 1
                slot[1] += 0 if ok else 1
    return GBCheck(not failures, checked, skipped, failures, types)


def buchberger_complete(
    order,
    gens: Sequence[Polynomial],
    budget: int = DEFAULT_PAIR_BUDGET,
    modulus: Optional[int] = None,
) -> list[Polynomial]:
    """Extend ``gens`` to a Groebner basis (not reduced) by Buchberger's algorithm."""
    F = _Field(modulus)
    basis = [F.convert(g) for g in gens if not g.is_zero()]
    if not basis:
        return []
    pairs = [(i, j) for i in range(len(basis)) for j in range(i + 1, len(basis))]
    red = Reducer(order, basis, modulus)
    spent = 0
    while pairs:
        i, j = pairs.pop(0)
        if mono_coprime(red.lms[i], red.lms[j]):
            continue
        spent += 1
        if spent > budget:
            raise PairBudgetExceeded(f"S-pair budget {budget} exhausted")
        sp = s_poly(order, basis[i], basis[j], modulus)
        rem, _ = red.reduce_terms(sp.terms)
        if rem:
            new = Polynomial._raw(sp.ring, rem)
            basis.append(new)
            red = Reducer(order, basis, modulus)
            k = len(basis) - 1
            pairs.extend((a, k) for a in range(k))
    return basis


def leading_monomials(order, polys: Sequence[Polynomial]) -> list[Monomial]:
    return [order.leading_monomial(p) for p in polys]
