"""Defining equations of the Rees ring and the special fiber ring.

Generators are built in the T-presentation (minors of M).  The families are

* ``L[a,b,c] = mu1[a] T[b,c] - mu1[b] T[a,c] + mu1[c] T[a,b]``  (row 1 of M)
* ``M[a,b,c]``: the same with row 2
* ``P[a,b,c,d]``: Pluecker quadrics
* ``Q[a,b,c,d]``: the six-term quadrics pairing T[.,.] with T[bar .,bar .]

``to_x_presentation`` rewrites them in the Y-variables attached to X.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, permutations
from typing import NamedTuple, Optional, Sequence

from .errors import BadIndices
from .poly import Polynomial, TVar, YVar, scroll_ring
from .scroll import ScrollSpec, bar, build_matrix_M, build_matrix_X, tau

FAMILIES = ("P", "Q", "L", "M")


class SignedT(NamedTuple):
    sign: int
    var: Optional[TVar]


def t_signed(alpha: int, beta: int) -> SignedT:
    """Normalize ``T[alpha,beta]`` using ``T[b,a] = -T[a,b]`` and ``T[a,a] = 0``."""
    if alpha == beta:
        return SignedT(0, None)
    if alpha < beta:
        return SignedT(1, TVar(alpha, beta))
    return SignedT(-1, TVar(beta, alpha))


def T(spec: ScrollSpec, alpha: int, beta: int) -> Polynomial:
    """``T[alpha,beta]`` as a polynomial, with the sign convention applied."""
    ring = scroll_ring(spec, "m")
    s = t_signed(alpha, beta)
    if s.sign == 0:
        return ring.zero()
    if s.var.b > spec.c:
        raise BadIndices(f"T[{alpha},{beta}] outside [c] = [1,{spec.c}]")
    return ring.var(s.var).scale(s.sign)


def mu(spec: ScrollSpec, row: int, col: int) -> Polynomial:
    m = build_matrix_M(spec)
    v = m.top(col) if row == 1 else m.bottom(col)
    return scroll_ring(spec, "m").var(v)


def perm_sign(seq: Sequence[int]) -> int:
    """Sign of the permutation sorting ``seq`` (0 if it has repeats)."""
    seq = list(seq)
    if len(set(seq)) < len(seq):
        return 0
    sign = 1
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            if seq[i] > seq[j]:
                sign = -sign
    return sign


def _check_increasing(idx: Sequence[int], upper: int, what: str):
    if any(a >= b for a, b in zip(idx, idx[1:])) or idx[0] < 1 or idx[-1] > upper:
        raise BadIndices(f"{what}{tuple(idx)} needs strictly increasing indices in [1,{upper}]")


@lru_cache(maxsize=None)
def _linear(spec: ScrollSpec, row: int, a: int, b: int, c: int) -> Polynomial:
    return (mu(spec, row, a) * T(spec, b, c) - mu(spec, row, b) * T(spec, a, c)
            + mu(spec, row, c) * T(spec, a, b))


def gen_L(spec: ScrollSpec, alpha: int, beta: int, gamma: int) -> Polynomial:
    _check_increasing((alpha, beta, gamma), spec.c, "L")
    return _linear(spec, 1, alpha, beta, gamma)


def gen_M(spec: ScrollSpec, alpha: int, beta: int, gamma: int) -> Polynomial:
    _check_increasing((alpha, beta, gamma), spec.c, "M")
    return _linear(spec, 2, alpha, beta, gamma)


@lru_cache(maxsize=None)
def _plucker(spec, a, b, c, d):
    return T(spec, a, b) * T(spec, c, d) - T(spec, a, c) * T(spec, b, d) + T(spec, a, d) * T(spec, b, c)


def gen_P(spec: ScrollSpec, alpha: int, beta: int, gamma: int, delta: int) -> Polynomial:
    _check_increasing((alpha, beta, gamma, delta), spec.c, "P")
    return _plucker(spec, alpha, beta, gamma, delta)


@lru_cache(maxsize=None)
def _q(spec, a, b, c, d):
    def tb(x, y):
        return T(spec, bar(spec, x), bar(spec, y))

    return (T(spec, a, b) * tb(c, d) - T(spec, a, c) * tb(b, d) + T(spec, a, d) * tb(b, c)
            + T(spec, b, c) * tb(a, d) - T(spec, b, d) * tb(a, c) + T(spec, c, d) * tb(a, b))


def gen_Q(spec: ScrollSpec, alpha: int, beta: int, gamma: int, delta: int) -> Polynomial:
    _check_increasing((alpha, beta, gamma, delta), spec.c - spec.d, "Q")
    return _q(spec, alpha, beta, gamma, delta)


_ARITY = {"L": 3, "M": 3, "P": 4, "Q": 4}
_SORTED_BUILDERS = {"L": gen_L, "M": gen_M, "P": gen_P, "Q": gen_Q}


def signed_generator(spec: ScrollSpec, kind: str, idx: Sequence[int]) -> Polynomial:
    """Alternating extension: sign of the sorting permutation times the sorted generator."""
    if kind not in _ARITY:
        raise ValueError(f"unknown family {kind!r}")
    if len(idx) != _ARITY[kind]:
        raise BadIndices(f"{kind} takes {_ARITY[kind]} indices, got {len(idx)}")
    s = perm_sign(idx)
    if s == 0:
        return scroll_ring(spec, "m").zero()
    g = _SORTED_BUILDERS[kind](spec, *sorted(idx))
    return g if s == 1 else -g


class Generator(NamedTuple):
    family: str
    indices: tuple[int, ...]
    poly: Polynomial

    @property
    def label(self) -> str:
        return f"{self.family}{list(self.indices)}".replace(" ", "")


@dataclass
class GeneratorSet:
    spec: ScrollSpec
    target: str
    families: dict[str, list[Generator]] = field(default_factory=dict)
    presentation: str = "m"

    def all(self) -> list[Generator]:
        return [g for fam in FAMILIES for g in self.families.get(fam, [])]

    def polys(self) -> list[Polynomial]:
        return [g.poly for g in self.all()]

    def counts(self) -> dict[str, int]:
        return {fam: len(self.families.get(fam, [])) for fam in FAMILIES}

    def __len__(self):
        return sum(len(v) for v in self.families.values())


@lru_cache(maxsize=None)
def generators(spec: ScrollSpec, target: str = "rees") -> GeneratorSet:
    """``fiber``: all P and Q; ``rees``: additionally all L and M.  Canonical tuple order."""
    if target not in ("fiber", "rees"):
        raise ValueError(f"target must be 'fiber' or 'rees', not {target!r}")
    c, d = spec.c, spec.d
    fams = {
        "P": [Generator("P", t, gen_P(spec, *t)) for t in combinations(range(1, c + 1), 4)],
        "Q": [Generator("Q", t, gen_Q(spec, *t)) for t in combinations(range(1, c - d + 1), 4)],
    }
    if target == "rees":
        fams["L"] = [Generator("L", t, gen_L(spec, *t)) for t in combinations(range(1, c + 1), 3)]
        fams["M"] = [Generator("M", t, gen_M(spec, *t)) for t in combinations(range(1, c + 1), 3)]
    return GeneratorSet(spec, target, fams)


# -- the X-presentation --------------------------------------------------------

@lru_cache(maxsize=None)
def _theta_inverse_images(spec: ScrollSpec):
    src = scroll_ring(spec, "m")
    dst = scroll_ring(spec, "x")
    t = tau(spec)
    images = {}
    for vid, v in enumerate(src.variables):
        if isinstance(v, TVar):
            a, b = t.inv(v.a), t.inv(v.b)
            images[vid] = dst.var(YVar(min(a, b), max(a, b))).scale(1 if a < b else -1)
    return images


def theta_inverse(spec: ScrollSpec, p: Polynomial) -> Polynomial:
    """Rewrite a T-polynomial in Y-variables: ``T[tau a, tau b] -> Y[a,b]`` (signed)."""
    return p.substitute(_theta_inverse_images(spec), target=scroll_ring(spec, "x"))


def to_x_presentation(spec: ScrollSpec, gens: GeneratorSet) -> GeneratorSet:
    t = tau(spec)
    fams = {}
    for fam, items in gens.families.items():
        fams[fam] = [
            Generator(fam, tuple(t.inv(a) for a in g.indices), theta_inverse(spec, g.poly)) for g in items
        ]
    return GeneratorSet(spec, gens.target, fams, presentation="x")


# The X-side families written directly from X, used to cross-check the translation.

def _xi(spec, row, col):
    m = build_matrix_X(spec)
    col = m.cols[col - 1]
    return scroll_ring(spec, "x").var(col.top if row == 1 else col.bottom)


def _Y(spec, a, b):
    ring = scroll_ring(spec, "x")
    if a == b:
        return ring.zero()
    return ring.var(YVar(min(a, b), max(a, b))).scale(1 if a < b else -1)


def x_linear(spec: ScrollSpec, row: int, a: int, b: int, c: int) -> Polynomial:
    return _xi(spec, row, a) * _Y(spec, b, c) - _xi(spec, row, b) * _Y(spec, a, c) + _xi(spec, row, c) * _Y(spec, a, b)


def x_plucker(spec: ScrollSpec, a: int, b: int, c: int, d: int) -> Polynomial:
    return _Y(spec, a, b) * _Y(spec, c, d) - _Y(spec, a, c) * _Y(spec, b, d) + _Y(spec, a, d) * _Y(spec, b, c)


def x_nonplucker(spec: ScrollSpec, a: int, b: int, c: int, d: int) -> Polynomial:
    Y = lambda p, q: _Y(spec, p, q)  # noqa: E731
    return (Y(a, b) * Y(c + 1, d + 1) - Y(a, c) * Y(b + 1, d + 1) + Y(a, d) * Y(b + 1, c + 1)
            + Y(b, c) * Y(a + 1, d + 1) - Y(b, d) * Y(a + 1, c + 1) + Y(c, d) * Y(a + 1, b + 1))


def nonterminal_x_columns(spec: ScrollSpec) -> list[int]:
    """Columns of X that are not the last column of their block."""
    ends, pos = set(), 0
    for k in spec.n:
        pos += k
        ends.add(pos)
    return [a for a in range(1, spec.c + 1) if a not in ends]


def x_families(spec: ScrollSpec, target: str = "rees") -> dict[str, list[Polynomial]]:
    c = spec.c
    fams = {
        "P": [x_plucker(spec, *t) for t in combinations(range(1, c + 1), 4)],
        "Q": [x_nonplucker(spec, *t) for t in combinations(nonterminal_x_columns(spec), 4)],
    }
    if target == "rees":
        fams["L"] = [x_linear(spec, 1, *t) for t in combinations(range(1, c + 1), 3)]
        fams["M"] = [x_linear(spec, 2, *t) for t in combinations(range(1, c + 1), 3)]
    return fams


def signed_permutations(n: int, constraint) -> list[tuple[int, tuple[int, ...]]]:
    """``(sign, perm)`` for all permutations of ``range(n)`` accepted by ``constraint``."""
    return [(perm_sign(p), p) for p in permutations(range(n)) if constraint(p)]
