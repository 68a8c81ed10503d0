"""Hilbert series of standard graded quotients.

A series is stored as the numerator N(t) of  N(t) / (1 - t)^nvars,  never
reduced, so two series over the same ambient ring are equal exactly when the
numerators agree coefficient by coefficient.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from math import comb
from typing import Iterable, Sequence

from .errors import AmbientMismatch
from .groebner import DEFAULT_PAIR_BUDGET, buchberger_complete
from .poly import Monomial, Polynomial, mono_coprime, mono_degree, mono_divides


def _trim(coeffs) -> tuple[int, ...]:
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


def _add(p, q):
    n = max(len(p), len(q))
    return [(p[k] if k < len(p) else 0) + (q[k] if k < len(q) else 0) for k in range(n)]


def _mul(p, q):
    out = [0] * (len(p) + len(q) - 1) if p and q else []
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return out


def _shift(p, k):
    return [0] * k + list(p)


@dataclass(frozen=True)
class HilbertSeries:
    numerator: tuple[int, ...]
    nvars: int

    def coefficients(self, upto: int) -> list[int]:
        """Dimensions of the graded pieces in degrees 0..upto."""
        # 1/(1-t)^n = sum binom(k+n-1, n-1) t^k
        series = [comb(k + self.nvars - 1, self.nvars - 1) if self.nvars else int(k == 0) for k in range(upto + 1)]
        out = [0] * (upto + 1)
        for i, a in enumerate(self.numerator):
            for k in range(i, upto + 1):
                out[k] += a * series[k - i]
        return out

    def to_json_obj(self) -> dict:
        return {"numerator": list(self.numerator), "nvars": self.nvars}

    def __str__(self):
        terms = []
        for k, a in enumerate(self.numerator):
            if a:
                mono = "" if k == 0 else ("t" if k == 1 else f"t^{k}")
                coeff = str(a) if (not mono or abs(a) != 1) else ("-" if a < 0 else "")
                terms.append(coeff + ("*" if mono and coeff not in ("", "-") else "") + mono)
        num = " + ".join(terms).replace("+ -", "- ") or "0"
        return f"({num}) / (1-t)^{self.nvars}"


def minimalize(gens: Iterable[Monomial]) -> list[Monomial]:
    """Drop duplicates and generators divisible by another generator."""
    gens = sorted(set(gens), key=lambda m: (mono_degree(m), m))
    out: list[Monomial] = []
    for m in gens:
        if not any(mono_divides(g, m) for g in out):
            out.append(m)
    return out


def _colon_var(m: Monomial, v: int) -> Monomial:
    return tuple((w, e - 1) if w == v else (w, e) for w, e in m if not (w == v and e == 1))


def _numerator(gens: tuple, memo: dict) -> list[int]:
    hit = memo.get(gens)
    if hit is not None:
        return hit
    if not gens:
        result = [1]
    elif all(mono_coprime(a, b) for k, a in enumerate(gens) for b in gens[k + 1:]):
        # complete intersection of monomials
        result = [1]
        for m in gens:
            result = _mul(result, [1] + [0] * (mono_degree(m) - 1) + [-1])
    else:
        freq = Counter(v for m in gens if mono_degree(m) > 1 for v, _ in m)
        pivot = min(freq, key=lambda v: (-freq[v], v))
        # N(I) = N(I + (x)) + t * N(I : x)
        plus = tuple(minimalize([m for m in gens if all(w != pivot for w, _ in m)] + [((pivot, 1),)]))
        colon = tuple(minimalize(_colon_var(m, pivot) for m in gens))
        result = _add(_numerator(plus, memo), _shift(_numerator(colon, memo), 1))
    memo[gens] = result
    return result


def hs_monomial(gens: Iterable[Monomial], nvars: int) -> HilbertSeries:
    """Hilbert series of K[x_0..x_{nvars-1}] / (gens) for monomial generators."""
    gens = list(gens)
    for m in gens:
        if any(not 0 <= v < nvars for v, _ in m):
            raise ValueError(f"monomial {m} uses a variable outside the ambient ring")
    if any(mono_degree(m) == 0 for m in gens):
        return HilbertSeries((), nvars)
    return HilbertSeries(_trim(_numerator(tuple(minimalize(gens)), {})), nvars)


def hs_of_ideal(
    order, gens: Sequence[Polynomial], nvars: int | None = None, budget: int = DEFAULT_PAIR_BUDGET
) -> HilbertSeries:
    """Complete ``gens`` to a Groebner basis, then take the series of the leading monomials."""
    if nvars is None:
        nvars = order.ring.nvars
    basis = buchberger_complete(order, gens, budget=budget)
    return hs_monomial([order.leading_monomial(g) for g in basis], nvars)


def hs_equal(a: HilbertSeries, b: HilbertSeries) -> bool:
    if a.nvars != b.nvars:
        raise AmbientMismatch(f"series over {a.nvars} and {b.nvars} variables are not comparable")
    return a.numerator == b.numerator
