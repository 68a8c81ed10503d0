"""Sparse multivariate polynomials with exact rational coefficients.

A :class:`Ring` is an ordered list of variables; a monomial is a tuple of
``(variable id, exponent)`` pairs sorted by id, and a :class:`Polynomial`
maps monomials to nonzero ``int`` or ``Fraction`` coefficients.  Rings for a
scroll are cached, so polynomials built for the same scroll share one ring.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Mapping, Union

from .errors import BadIndices, SpecMismatch
from .scroll import ScrollSpec, XVar, build_matrix_M, build_matrix_X

Coeff = Union[int, Fraction]
Monomial = tuple  # tuple[tuple[int, int], ...]

ONE: Monomial = ()


@dataclass(frozen=True, order=True)
class TVar:
    a: int
    b: int

    def __post_init__(self):
        if not self.a < self.b:
            raise BadIndices(f"T[{self.a},{self.b}] must have a < b")

    def name(self) -> str:
        return f"T[{self.a},{self.b}]"


@dataclass(frozen=True, order=True)
class YVar:
    a: int
    b: int

    def __post_init__(self):
        if not self.a < self.b:
            raise BadIndices(f"Y[{self.a},{self.b}] must have a < b")

    def name(self) -> str:
        return f"Y[{self.a},{self.b}]"


@dataclass(frozen=True, order=True)
class PlainVar:
    label: str

    def name(self) -> str:
        return self.label


def normalize_coeff(c: Coeff) -> Coeff:
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


def coeff_str(c: Coeff) -> str:
    c = normalize_coeff(c)
    if isinstance(c, Fraction):
        return f"{c.numerator}/{c.denominator}"
    return str(c)


def parse_coeff(text: str) -> Coeff:
    return normalize_coeff(Fraction(text))


# -- monomials ---------------------------------------------------------------

def mono_mul(m1: Monomial, m2: Monomial) -> Monomial:
    if not m1:
        return m2
    if not m2:
        return m1
    d = dict(m1)
    for v, e in m2:
        d[v] = d.get(v, 0) + e
    return tuple(sorted(d.items()))


def mono_divides(m1: Monomial, m2: Monomial) -> bool:
    """True iff ``m1`` divides ``m2``."""
    d = dict(m2)
    return all(d.get(v, 0) >= e for v, e in m1)


def mono_div(m1: Monomial, m2: Monomial) -> Monomial:
    """``m1 / m2``; the caller guarantees divisibility."""
    d = dict(m1)
    for v, e in m2:
        d[v] -= e
    return tuple((v, e) for v, e in sorted(d.items()) if e)


def mono_lcm(m1: Monomial, m2: Monomial) -> Monomial:
    d = dict(m1)
    for v, e in m2:
        if e > d.get(v, 0):
            d[v] = e
    return tuple(sorted(d.items()))


def mono_coprime(m1: Monomial, m2: Monomial) -> bool:
    vs = {v for v, _ in m1}
    return not any(v in vs for v, _ in m2)


def mono_degree(m: Monomial) -> int:
    return sum(e for _, e in m)


def mono_divisors(m: Monomial):
    """Every monomial dividing ``m`` (including 1 and ``m``)."""
    out = [()]
    for v, e in m:
        out = [base + ((v, k),) if k else base for base in out for k in range(e + 1)]
    return out


# -- rings -------------------------------------------------------------------

class Ring:
    """An ordered set of variables.  Rings compare equal iff their tags do."""

    def __init__(self, variables: Iterable, tag):
        self.variables = tuple(variables)
        self.index = {v: k for k, v in enumerate(self.variables)}
        if len(self.index) != len(self.variables):
            raise ValueError("duplicate ring variables")
        self.tag = tag
        self._names = tuple(v.name() for v in self.variables)
        self._by_name = {n: k for k, n in enumerate(self._names)}

    def __eq__(self, other):
        return isinstance(other, Ring) and self.tag == other.tag

    def __hash__(self):
        return hash(self.tag)

    def __repr__(self):
        return f"Ring({self.tag!r}, nvars={len(self.variables)})"

    def __reduce__(self):
        return (Ring, (self.variables, self.tag))

    @property
    def nvars(self) -> int:
        return len(self.variables)

    def name(self, vid: int) -> str:
        return self._names[vid]

    def var_id(self, v) -> int:
        return self.index[v]

    def var_id_by_name(self, name: str) -> int:
        return self._by_name[name]

    def var(self, v) -> "Polynomial":
        return Polynomial._raw(self, {((self.index[v], 1),): 1})

    def one(self) -> "Polynomial":
        return Polynomial._raw(self, {ONE: 1})

    def zero(self) -> "Polynomial":
        return Polynomial._raw(self, {})

    def monomial(self, powers: Mapping) -> Monomial:
        """Build a monomial from ``{variable: exponent}``."""
        return tuple(sorted((self.index[v], e) for v, e in powers.items() if e))

    def term(self, coeff: Coeff, powers: Mapping) -> "Polynomial":
        coeff = normalize_coeff(coeff)
        return Polynomial._raw(self, {self.monomial(powers): coeff} if coeff else {})

    def bidegree(self, m: Monomial) -> tuple[int, int]:
        """(x-degree, T/Y-degree) of a monomial."""
        xdeg = tdeg = 0
        for v, e in m:
            if isinstance(self.variables[v], (TVar, YVar)):
                tdeg += e
            else:
                xdeg += e
        return xdeg, tdeg

    def mono_str(self, m: Monomial) -> str:
        parts = []
        for v, e in m:
            parts.append(self._names[v] if e == 1 else f"{self._names[v]}^{e}")
        return "*".join(parts) if parts else "1"


@lru_cache(maxsize=None)
def scroll_ring(spec: ScrollSpec, presentation: str = "m") -> Ring:
    """Ring of all ``x[i,j]`` plus ``T[a,b]`` (presentation "m") or ``Y[a,b]`` ("x")."""
    if presentation not in ("m", "x"):
        raise ValueError(f"unknown presentation {presentation!r}")
    xs = [XVar(i, j) for i, ni in enumerate(spec.n, 1) for j in range(ni + 1)]
    cls = TVar if presentation == "m" else YVar
    ts = [cls(a, b) for a, b in combinations(range(1, spec.c + 1), 2)]
    return Ring(xs + ts, ("scroll", spec.n, presentation))


def plain_ring(names: Iterable[str], tag=None) -> Ring:
    names = list(names)
    return Ring([PlainVar(n) for n in names], tag or ("plain", tuple(names)))


# -- polynomials ---------------------------------------------------------------

class Polynomial:
    """Immutable sparse polynomial; ``terms`` maps monomials to coefficients."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: Ring, terms: Mapping[Monomial, Coeff] | None = None):
        self.ring = ring
        self.terms = {}
        for m, c in (terms or {}).items():
            c = normalize_coeff(c)
            if c:
                self.terms[tuple(m)] = c

    @classmethod
    def _raw(cls, ring, terms):
        p = cls.__new__(cls)
        p.ring = ring
        p.terms = terms
        return p

    def _check(self, other: "Polynomial"):
        if self.ring != other.ring:
            raise SpecMismatch(f"operands from different rings: {self.ring.tag} vs {other.ring.tag}")

    def _lift(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)):
            other = normalize_coeff(other)
            return Polynomial._raw(self.ring, {ONE: other} if other else {})
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = normalize_coeff(s)
            else:
                out.pop(m, None)
        return Polynomial._raw(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw(self.ring, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._check(other)
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = mono_mul(m1, m2)
                s = out.get(m, 0) + c1 * c2
                if s:
                    out[m] = s
                else:
                    del out[m]
        return Polynomial._raw(self.ring, {m: normalize_coeff(c) for m, c in out.items()})

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, k: int):
        result = self.ring.one()
        for _ in range(k):
            result = result * self
        return result

    def scale(self, c: Coeff) -> "Polynomial":
        c = normalize_coeff(c)
        if not c:
            return self.ring.zero()
        return Polynomial._raw(self.ring, {m: normalize_coeff(v * c) for m, v in self.terms.items()})

    def mul_term(self, m: Monomial, c: Coeff) -> "Polynomial":
        return Polynomial._raw(self.ring, {mono_mul(k, m): normalize_coeff(v * c) for k, v in self.terms.items()})

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial._raw(self.ring, {ONE: other} if other else {})
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._check(other)
        return self.terms == other.terms

    __hash__ = None

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __len__(self):
        return len(self.terms)

    def variables(self) -> set[int]:
        return {v for m in self.terms for v, _ in m}

    def bidegrees(self) -> set[tuple[int, int]]:
        return {self.ring.bidegree(m) for m in self.terms}

    def total_degrees(self) -> set[int]:
        return {mono_degree(m) for m in self.terms}

    def sorted_terms(self):
        """Terms in canonical order (by monomial tuple)."""
        return sorted(self.terms.items())

    def substitute(self, images: Mapping[int, "Polynomial"], target: Ring | None = None) -> "Polynomial":
        """Ring map sending variable id ``v`` to ``images[v]`` (others kept, which
        requires ``target`` to contain them under the same variable object)."""
        target = target or self.ring
        cache: dict[tuple[int, int], Polynomial] = {}

        def image(v, e):
            key = (v, e)
            if key not in cache:
                base = images.get(v)
                if base is None:
                    base = target.var(self.ring.variables[v])
                cache[key] = base if e == 1 else base ** e
            return cache[key]

        result = target.zero()
        for m, c in self.terms.items():
            t = target.one().scale(c)
            for v, e in m:
                t = t * image(v, e)
            result = result + t
        return result

    def __str__(self):
        return self.text()

    def __repr__(self):
        return f"Polynomial({self.text()!r})"

    def text(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for k, (m, c) in enumerate(self.sorted_terms()):
            neg = c < 0
            a = -c if neg else c
            body = self.ring.mono_str(m)
            if a != 1:
                body = coeff_str(a) if not m else f"{coeff_str(a)}*{body}"
            if k == 0:
                pieces.append(f"-{body}" if neg else body)
            else:
                pieces.append(f"- {body}" if neg else f"+ {body}")
        return " ".join(pieces)

    def to_json_obj(self) -> list:
        return [
            {"coeff": coeff_str(c), "mono": {self.ring.name(v): e for v, e in m}}
            for m, c in self.sorted_terms()
        ]

    @classmethod
    def from_json_obj(cls, ring: Ring, data: list) -> "Polynomial":
        terms = {}
        for item in data:
            m = tuple(sorted((ring.var_id_by_name(n), int(e)) for n, e in item["mono"].items() if int(e)))
            terms[m] = terms.get(m, 0) + parse_coeff(str(item["coeff"]))
        return cls(ring, terms)


_TERM_RE = re.compile(r"\s*([+-])?\s*([^+-]+)")


def parse_poly(ring: Ring, text: str) -> Polynomial:
    """Parse the text form produced by :meth:`Polynomial.text`."""
    text = text.strip()
    if text == "0":
        return ring.zero()
    result = ring.zero()
    for sign, body in _TERM_RE.findall(text):
        coeff: Coeff = 1
        powers: dict[int, int] = {}
        for factor in body.strip().split("*"):
            factor = factor.strip()
            if not factor:
                continue
            if factor[0].isdigit():
                coeff = coeff * parse_coeff(factor)
                continue
            name, _, exp = factor.partition("^")
            vid = ring.var_id_by_name(name)
            powers[vid] = powers.get(vid, 0) + (int(exp) if exp else 1)
        if sign == "-":
            coeff = -coeff
        m = tuple(sorted(powers.items()))
        result = result + Polynomial(ring, {m: coeff})
    return result


# -- minors and substitution --------------------------------------------------

def minor_g(spec: ScrollSpec, alpha: int, beta: int) -> Polynomial:
    """2x2 minor of M on columns alpha < beta, in the x-part of the T-ring."""
    if not 1 <= alpha < beta <= spec.c:
        raise BadIndices(f"minor needs 1 <= alpha < beta <= c, got ({alpha},{beta})")
    return _minor(spec, "m", alpha, beta)


def minor_f(spec: ScrollSpec, alpha: int, beta: int) -> Polynomial:
    """2x2 minor of X on columns alpha < beta, in the x-part of the Y-ring."""
    if not 1 <= alpha < beta <= spec.c:
        raise BadIndices(f"minor needs 1 <= alpha < beta <= c, got ({alpha},{beta})")
    return _minor(spec, "x", alpha, beta)


@lru_cache(maxsize=None)
def _minor(spec, presentation, alpha, beta):
    ring = scroll_ring(spec, presentation)
    cols = (build_matrix_M(spec) if presentation == "m" else build_matrix_X(spec)).cols
    a, b = cols[alpha - 1], cols[beta - 1]
    return ring.var(a.top) * ring.var(b.bottom) - ring.var(b.top) * ring.var(a.bottom)


@lru_cache(maxsize=None)
def _pi_images(spec: ScrollSpec, presentation: str):
    ring = scroll_ring(spec, presentation)
    images = {}
    for vid, v in enumerate(ring.variables):
        if isinstance(v, (TVar, YVar)):
            images[vid] = _minor(spec, presentation, v.a, v.b)
    return images


def pi_substitute(spec: ScrollSpec, p: Polynomial) -> Polynomial:
    """Replace every ``T[a,b]`` by the minor g_{a,b} of M (``Y[a,b]`` by f_{a,b} of X).

    The Rees variable t is not tracked; the T-degree records its exponent.
    """
    presentation = p.ring.tag[2] if isinstance(p.ring.tag, tuple) and p.ring.tag[0] == "scroll" else None
    if presentation is None or p.ring != scroll_ring(spec, presentation):
        raise SpecMismatch(f"polynomial ring {p.ring.tag} does not belong to spec {spec}")
    return p.substitute(_pi_images(spec, presentation))
