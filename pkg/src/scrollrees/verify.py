"""Reproducible finite checks.

Each ``verify_*`` function returns a :class:`VerificationReport` (or a bool for
the single-identity checks).  ``verify_all`` runs them over a list of scrolls.
"""

from __future__ import annotations

import json
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations, permutations
from typing import Callable, Optional, Sequence

from . import complex as cx
from .errors import BadIndices, BoundExceeded, UnsupportedM
from .groebner import is_groebner
from .hilbert import HilbertSeries, hs_equal, hs_monomial, hs_of_ideal
from .order import GradedLex, order_context
from .poly import Monomial, PlainVar, Polynomial, Ring, TVar, pi_substitute, scroll_ring
from .relations import (
    T,
    gen_Q,
    generators,
    mu,
    perm_sign,
    signed_generator,
    to_x_presentation,
)
from .scroll import ScrollSpec, bar, build_matrix_M

PASS, FAIL, SKIP = "pass", "fail", "skip"


@dataclass
class CheckResult:
    name: str
    status: str
    detail: str = ""

    def to_json_obj(self) -> dict:
        out = {"name": self.name, "status": self.status}
        if self.detail:
            out["detail"] = self.detail
        return out


@dataclass
class VerificationReport:
    suite: str
    checks: list[CheckResult] = field(default_factory=list)
    counters: dict[str, int] = field(default_factory=dict)
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return all(ch.status != FAIL for ch in self.checks)

    def add(self, name: str, ok: bool, detail: str = "") -> bool:
        self.checks.append(CheckResult(name, PASS if ok else FAIL, detail))
        return ok

    def skip(self, name: str, detail: str = ""):
        self.checks.append(CheckResult(name, SKIP, detail))

    def bump(self, key: str, n: int = 1):
        self.counters[key] = self.counters.get(key, 0) + n

    def extend(self, other: "VerificationReport", prefix: str = ""):
        for ch in other.checks:
            self.checks.append(CheckResult(prefix + ch.name, ch.status, ch.detail))
        for k, v in other.counters.items():
            self.bump(k, v)
        self.elapsed += other.elapsed

    def failures(self) -> list[CheckResult]:
        return [ch for ch in self.checks if ch.status == FAIL]

    def to_json_obj(self, timing: bool = False) -> dict:
        out = {
            "suite": self.suite,
            "passed": self.passed,
            "counters": dict(sorted(self.counters.items())),
            "checks": [ch.to_json_obj() for ch in self.checks],
        }
        if timing:
            out["elapsed_seconds"] = round(self.elapsed, 3)
        return out

    def to_json(self, timing: bool = False) -> str:
        return json.dumps(self.to_json_obj(timing), indent=2)


def _timed(fn):
    def wrapper(*args, **kwargs):
        t0 = time.perf_counter()
        rep = fn(*args, **kwargs)
        rep.elapsed = time.perf_counter() - t0
        return rep

    wrapper.__name__ = fn.__name__
    wrapper.__doc__ = fn.__doc__
    return wrapper


# -- leading monomials ---------------------------------------------------------

def _tmono(ring: Ring, a: int, b: int) -> Monomial:
    return ring.monomial({TVar(min(a, b), max(a, b)): 1})


def _mono_product(*monos: Monomial) -> Monomial:
    acc: dict[int, int] = {}
    for m in monos:
        for v, e in m:
            acc[v] = acc.get(v, 0) + e
    return tuple(sorted(acc.items()))


def expected_leading_monomial(spec: ScrollSpec, family: str, idx: Sequence[int]) -> Monomial:
    """Closed-form leading monomial of a generator in canonical index order."""
    ring = scroll_ring(spec, "m")
    M = build_matrix_M(spec)

    def x(v):
        return ring.monomial({v: 1})

    if family == "P":
        a, b, g, h = idx
        return _mono_product(_tmono(ring, a, g), _tmono(ring, b, h))
    if family == "Q":
        a, b, g, h = idx
        return _mono_product(_tmono(ring, a, b), _tmono(ring, bar(spec, g), bar(spec, h)))
    if family == "M":
        a, b, g = idx
        return _mono_product(x(M.bottom(b)), _tmono(ring, a, g))
    if family == "L":
        # the term whose x-variable has the lowest row j, then the lowest block i
        a, b, g = idx
        options = [(M.top(a), (b, g)), (M.top(b), (a, g)), (M.top(g), (a, b))]
        v, (p, q) = min(options, key=lambda o: (o[0].j, o[0].i))
        return _mono_product(x(v), _tmono(ring, p, q))
    raise ValueError(f"unknown family {family!r}")


@_timed
def verify_lm_table(spec: ScrollSpec) -> VerificationReport:
    """Compare the leading monomial of every Rees generator with its closed form.

    For L also confirm that the leader is the first or the last term, and the
    last only when the largest index exceeds c - d.
    """
    rep = VerificationReport("lm")
    ctx = order_context(spec)
    ring = ctx.ring
    M = build_matrix_M(spec)
    c, d = spec.c, spec.d
    bad = []
    for g in generators(spec, "rees").all():
        rep.bump("generators_checked")
        lm = ctx.leading_monomial(g.poly)
        if lm != expected_leading_monomial(spec, g.family, g.indices):
            bad.append(g.label)
            continue
        if g.family == "L":
            a, b, gg = g.indices
            first = _mono_product(ring.monomial({M.top(a): 1}), _tmono(ring, b, gg))
            last = _mono_product(ring.monomial({M.top(gg): 1}), _tmono(ring, a, b))
            if lm not in (first, last) or (lm == last and lm != first and gg <= c - d):
                bad.append(g.label + " (first/last rule)")
    rep.add(f"leading monomials {spec}", not bad, ", ".join(bad[:10]))
    return rep


# -- syzygies ------------------------------------------------------------------

SYZYGIES = ("qm_barred_T", "qm_barred_M", "ql_eps", "qm_eps", "mixed_eps", "lm")

_SYZ_SHAPE = {
    # (tuple length, index range is [c-d] rather than [c], takes epsilon)
    "qm_barred_T": (5, True, False),
    "qm_barred_M": (5, True, False),
    "ql_eps": (4, True, True),
    "qm_eps": (4, True, True),
    "mixed_eps": (4, True, True),
    "lm": (4, False, False),
}


def _perm_sum(alpha: Sequence[int], accept: Callable, term: Callable, ring: Ring) -> Polynomial:
    total = ring.zero()
    for p in permutations(range(len(alpha))):
        if accept(p):
            a = [alpha[k] for k in p]
            total = total + term(a).scale(perm_sign(p))
    return total


def _asc(p, *groups):
    return all(all(p[i] < p[i + 1] for i in range(lo, hi - 1)) for lo, hi in groups)


def syzygy_sides(spec: ScrollSpec, sid: str, indices: Sequence[int]) -> tuple[Polynomial, Polynomial]:
    """Both sides of the named syzygy, expanded."""
    if sid not in _SYZ_SHAPE:
        raise ValueError(f"unknown syzygy {sid!r}; expected one of {', '.join(SYZYGIES)}")
    n, short, has_eps = _SYZ_SHAPE[sid]
    indices = list(indices)
    if len(indices) != n + has_eps:
        raise BadIndices(f"{sid} takes {n + has_eps} indices, got {len(indices)}")
    alpha = indices[:n]
    upper = spec.c - spec.d if short else spec.c
    if any(a >= b for a, b in zip(alpha, alpha[1:])) or alpha[0] < 1 or alpha[-1] > upper:
        raise BadIndices(f"{sid}: {tuple(alpha)} must be strictly increasing in [1,{upper}]")
    eps = indices[n] if has_eps else None
    if has_eps and not 1 <= eps <= spec.c:
        raise BadIndices(f"{sid}: epsilon={eps} outside [1,{spec.c}]")

    ring = scroll_ring(spec, "m")

    def L(*i):
        return signed_generator(spec, "L", i)

    def Mg(*i):
        return signed_generator(spec, "M", i)

    def P(*i):
        return signed_generator(spec, "P", i)

    def b(k):
        return bar(spec, k)

    def mu1(k):
        return mu(spec, 1, k)

    def mu2(k):
        return mu(spec, 2, k)

    def S(accept, term):
        return _perm_sum(alpha, accept, term, ring)

    pairs_then_pair = lambda p: _asc(p, (0, 2), (2, 4))  # noqa: E731
    first_three = lambda p: _asc(p, (0, 3))  # noqa: E731
    first_two = lambda p: _asc(p, (0, 2))  # noqa: E731

    if sid == "qm_barred_T":
        lhs = S(lambda p: _asc(p, (0, 2), (2, 5)), lambda a: T(spec, b(a[0]), b(a[1])) * Mg(a[2], a[3], a[4]))
        rhs = S(lambda p: _asc(p, (1, 5)), lambda a: mu2(a[0]) * gen_Q(spec, *a[1:]))
    elif sid == "qm_barred_M":
        lhs = S(lambda p: _asc(p, (0, 2), (2, 5)), lambda a: T(spec, a[0], a[1]) * Mg(b(a[2]), b(a[3]), b(a[4])))
        rhs = S(lambda p: _asc(p, (1, 5)), lambda a: mu2(b(a[0])) * gen_Q(spec, *a[1:]))
    elif sid == "ql_eps":
        lhs = S(pairs_then_pair, lambda a: T(spec, a[0], a[1]) * L(b(a[2]), b(a[3]), eps))
        rhs = gen_Q(spec, *alpha) * mu1(eps) + S(first_three, lambda a: Mg(a[0], a[1], a[2]) * T(spec, b(a[3]), eps))
    elif sid == "qm_eps":
        lhs = S(pairs_then_pair, lambda a: T(spec, b(a[0]), b(a[1])) * Mg(a[2], a[3], eps))
        rhs = gen_Q(spec, *alpha) * mu2(eps) + S(first_three, lambda a: L(b(a[0]), b(a[1]), b(a[2])) * T(spec, a[3], eps))
    elif sid == "mixed_eps":
        lhs = (
            S(pairs_then_pair, lambda a: T(spec, b(a[0]), b(a[1])) * L(a[2], a[3], eps))
            + S(first_two, lambda a: Mg(a[0], a[1], eps) * T(spec, a[2], b(a[3])))
            - S(first_three, lambda a: P(a[0], a[1], a[2], eps) * mu2(b(a[3])))
            + S(first_three, lambda a: Mg(a[0], a[1], a[2]) * T(spec, b(a[3]), eps))
        )
        rhs = (
            mu1(eps) * gen_Q(spec, *alpha)
            + S(first_two, lambda a: L(b(a[0]), b(a[1]), a[2]) * T(spec, a[3], eps))
            + S(first_two, lambda a: T(spec, a[0], a[1]) * Mg(a[2], b(a[3]), eps))
        )
    else:  # "lm"
        lhs = S(first_three, lambda a: L(a[0], a[1], a[2]) * mu2(a[3]))
        rhs = -S(first_three, lambda a: Mg(a[0], a[1], a[2]) * mu1(a[3]))
    return lhs, rhs


def verify_syzygy(spec: ScrollSpec, sid: str, indices: Sequence[int]) -> bool:
    lhs, rhs = syzygy_sides(spec, sid, indices)
    return (lhs - rhs).is_zero()


def syzygy_index_tuples(spec: ScrollSpec, sid: str) -> list[tuple[int, ...]]:
    n, short, has_eps = _SYZ_SHAPE[sid]
    upper = spec.c - spec.d if short else spec.c
    base = list(combinations(range(1, upper + 1), n))
    if has_eps:
        return [t + (e,) for t in base for e in range(1, spec.c + 1)]
    return base


@_timed
def verify_syzygies(
    spec: ScrollSpec, exhaustive_limit: int = 10**4, sample: int = 500, seed: int = 0
) -> VerificationReport:
    """Every syzygy on every index tuple, or on a seeded random sample when there are too many."""
    rep = VerificationReport("syzygies")
    rng = random.Random(seed)
    for sid in SYZYGIES:
        tuples = syzygy_index_tuples(spec, sid)
        if len(tuples) > exhaustive_limit:
            tuples = sorted(rng.sample(tuples, sample))
        bad = [t for t in tuples if not verify_syzygy(spec, sid, t)]
        rep.bump("syzygy_instances", len(tuples))
        rep.add(f"syzygy {sid} {spec}", not bad, f"{len(tuples)} tuples; failing: {bad[:5]}" if bad else f"{len(tuples)} tuples")
    return rep


# -- Groebner certification ------------------------------------------------------

SPAIR_TYPES_DIRECT = ("M,Q", "L,Q", "L,M")


@_timed
def verify_gb(spec: ScrollSpec, target: str, modulus: Optional[int] = None) -> VerificationReport:
    rep = VerificationReport(f"{target}-gb")
    gens = generators(spec, target)
    all_gens = gens.all()
    res = is_groebner(order_context(spec), gens.polys(), [g.family for g in all_gens], modulus=modulus)
    rep.bump("spairs_checked", res.spairs_checked)
    rep.bump("spairs_skipped", res.spairs_skipped)
    labels = [g.label for g in all_gens]
    fails = [f"{labels[i]}/{labels[j]}" for i, j in res.failures]
    rep.add(f"{target} generators form a Groebner basis {spec}", res.is_gb, ", ".join(fails[:10]))
    if target == "rees":
        for t in SPAIR_TYPES_DIRECT:
            checked, failed = res.pair_types.get(t, [0, 0])
            rep.add(f"S-pairs of type ({t}) reduce to 0 {spec}", failed == 0, f"{checked} pairs")
    return rep


def _nonface_monomial(ring: Ring, pair) -> Monomial:
    u, v = pair
    return _mono_product(_tmono(ring, *u), _tmono(ring, *v))


def verify_initial_complex(spec: ScrollSpec, max_c: int = 7) -> bool:
    """The fiber generators are a Groebner basis whose leading monomials are exactly the minimal non-faces."""
    if spec.c > max_c:
        raise BoundExceeded(f"initial-complex check capped at c <= {max_c}, got c = {spec.c}")
    ctx = order_context(spec)
    polys = generators(spec, "fiber").polys()
    if polys and not is_groebner(ctx, polys).is_gb:
        return False
    lms = {ctx.leading_monomial(p) for p in polys}
    cross, barred = cx.minimal_nonfaces(spec)
    expected = {_nonface_monomial(ctx.ring, pr) for pr in cross + barred}
    return lms == expected


# -- kernel membership and minimality ------------------------------------------

@_timed
def verify_kernel(spec: ScrollSpec) -> VerificationReport:
    rep = VerificationReport("kernel")
    gens = generators(spec, "rees")
    bad = [g.label for g in gens.all() if not pi_substitute(spec, g.poly).is_zero()]
    rep.add(f"generators vanish under the minor map {spec}", not bad, ", ".join(bad[:10]))
    xgens = to_x_presentation(spec, gens)
    bad = [g.label for g in xgens.all() if not pi_substitute(spec, g.poly).is_zero()]
    rep.add(f"X-presentation generators vanish {spec}", not bad, ", ".join(bad[:10]))
    rep.bump("kernel_polys", 2 * len(gens))
    return rep


_RANK_PRIME = 2_147_483_647


def modular_rank(polys: Sequence[Polynomial], p: int = _RANK_PRIME) -> int:
    """Rank of the coefficient vectors mod p (a lower bound for the rank over Q)."""
    pivots: dict = {}
    rank = 0
    for f in polys:
        row = {m: int(c.numerator * pow(c.denominator, -1, p) if hasattr(c, "denominator") else c) % p
               for m, c in f.terms.items()}
        row = {m: v for m, v in row.items() if v}
        while row:
            lead = max(row)
            if lead not in pivots:
                inv = pow(row[lead], -1, p)
                pivots[lead] = {m: v * inv % p for m, v in row.items()}
                rank += 1
                break
            prow = pivots[lead]
            factor = row[lead]
            for m, v in prow.items():
                nv = (row.get(m, 0) - factor * v) % p
                if nv:
                    row[m] = nv
                else:
                    row.pop(m, None)
    return rank


@_timed
def verify_minimality(spec: ScrollSpec, target: str = "rees") -> VerificationReport:
    """All generators are quadrics, so minimality is linear independence."""
    rep = VerificationReport("minimality")
    polys = generators(spec, target).polys()
    r = modular_rank(polys)
    rep.add(f"{target} generators are minimal {spec}", r == len(polys), f"rank {r} of {len(polys)}")
    return rep


# -- complex -------------------------------------------------------------------

@_timed
def verify_complex(spec: ScrollSpec, clique_bound: int = cx.DEFAULT_CLIQUE_BOUND) -> VerificationReport:
    rep = VerificationReport("complex")
    formula = cx.facet_count_formula(spec)
    tree = cx.facets_tree(spec)
    rep.bump("facets", len(tree))
    rep.add(f"tree enumeration matches formula {spec}", len(tree) == formula, f"{len(tree)} vs {formula}")
    size = cx.facet_dimension_size(spec)
    rep.add(f"complex is pure {spec}", all(len(f) == size for f in tree), f"size {size}")
    units = all(
        u.length == 1
        for f in tree
        for u in f
        if not any(v != u and u.contains(v) for v in f)
    )
    rep.add(f"minimal intervals of facets are unitary {spec}", units)
    if spec.c <= clique_bound:
        rep.add(f"clique enumeration matches tree enumeration {spec}", cx.facets_clique(spec, clique_bound) == tree)
    else:
        rep.skip(f"clique enumeration matches tree enumeration {spec}", f"c > {clique_bound}")
    return rep


# -- the Hilbert-series harness ------------------------------------------------

def admissible_orders(m: int) -> list[tuple[int, ...]]:
    """Total orders on x_1..x_m, written largest first, such that
    for a < b < g, x_b > x_g forces x_a > x_b."""
    if m not in (4, 5):
        raise UnsupportedM(f"admissible orders are only tabulated for m in (4, 5), got {m}")
    out = []
    for perm in permutations(range(1, m + 1)):
        rank = {v: -k for k, v in enumerate(perm)}  # larger rank = larger variable
        if all(rank[a] > rank[b] for a, b, g in combinations(range(1, m + 1), 3) if rank[b] > rank[g]):
            out.append(perm)
    return sorted(out)


def harness_ring(m: int) -> Ring:
    xs = [PlainVar(f"x{k}") for k in range(1, m + 1)]
    ts = [TVar(a, b) for a, b in combinations(range(1, m + 1), 2)]
    return Ring(xs + ts, ("harness", m))


def _hx(ring: Ring, k: int) -> Polynomial:
    return ring.var(PlainVar(f"x{k}"))


def _ht(ring: Ring, a: int, b: int) -> Polynomial:
    return ring.var(TVar(a, b))


def harness_G(m: int) -> list[Polynomial]:
    """Pluecker quadrics plus the linear syzygies x_a T_bg - x_b T_ag + x_g T_ab."""
    R = harness_ring(m)
    out = []
    for a, b, g, h in combinations(range(1, m + 1), 4):
        out.append(_ht(R, a, b) * _ht(R, g, h) - _ht(R, a, g) * _ht(R, b, h) + _ht(R, a, h) * _ht(R, b, g))
    for a, b, g in combinations(range(1, m + 1), 3):
        out.append(_hx(R, a) * _ht(R, b, g) - _hx(R, b) * _ht(R, a, g) + _hx(R, g) * _ht(R, a, b))
    return out


def _hmono(R: Ring, *vs) -> Monomial:
    return R.monomial({v: 1 for v in vs})


def _harness_plucker_lms(m: int) -> list[Monomial]:
    R = harness_ring(m)
    return [_hmono(R, TVar(a, g), TVar(b, h)) for a, b, g, h in combinations(range(1, m + 1), 4)]


def harness_M(m: int) -> list[Monomial]:
    R = harness_ring(m)
    lin = [_hmono(R, PlainVar(f"x{b}"), TVar(a, g)) for a, b, g in combinations(range(1, m + 1), 3)]
    return _harness_plucker_lms(m) + lin


def harness_L(m: int, order: Sequence[int]) -> list[Monomial]:
    """Leading monomials when each linear generator is led by its largest x under ``order``."""
    R = harness_ring(m)
    pos = {v: k for k, v in enumerate(order)}
    lin = []
    for trip in combinations(range(1, m + 1), 3):
        top = min(trip, key=lambda v: pos[v])
        p, q = [v for v in trip if v != top]
        lin.append(_hmono(R, PlainVar(f"x{top}"), TVar(p, q)))
    return _harness_plucker_lms(m) + lin


def harness_series(m: int, order=None) -> HilbertSeries:
    R = harness_ring(m)
    return hs_of_ideal(order or GradedLex(R), harness_G(m), R.nvars)


def harness_case(name: str) -> HilbertSeries:
    """Series of a named case: ``G4``, ``M5``, ``L5:3`` (third admissible order, 1-based)."""
    kind, _, rest = name.partition(":")
    if len(kind) != 2 or kind[0] not in "GML" or kind[1] not in "45":
        raise ValueError(f"unknown harness case {name!r}")
    m = int(kind[1])
    R = harness_ring(m)
    if kind[0] == "G":
        return harness_series(m)
    if kind[0] == "M":
        return hs_monomial(harness_M(m), R.nvars)
    orders = admissible_orders(m)
    if not rest.isdigit() or not 1 <= int(rest) <= len(orders):
        raise ValueError(f"{name!r}: order index must be in 1..{len(orders)}")
    return hs_monomial(harness_L(m, orders[int(rest) - 1]), R.nvars)


@_timed
def run_hilbert_harness() -> VerificationReport:
    """Compare the series of the linear-plus-Pluecker ideal with its candidate initial ideals."""
    rep = VerificationReport("hilbert-harness")
    expected_sizes = {4: 5, 5: 15}
    expected_orders = {4: 8, 5: 16}
    for m in (4, 5):
        R = harness_ring(m)
        G = harness_G(m)
        rep.add(f"|G{m}| = {expected_sizes[m]}", len(G) == expected_sizes[m], str(len(G)))
        Mm = harness_M(m)
        rep.add(f"|M{m}| = {expected_sizes[m]}", len(set(Mm)) == expected_sizes[m], str(len(set(Mm))))
        hs_g = harness_series(m)
        rep.add(f"HS(G{m}) = HS(M{m})", hs_equal(hs_g, hs_monomial(Mm, R.nvars)))
        rep.bump("cases")
        orders = admissible_orders(m)
        rep.add(f"{expected_orders[m]} admissible orders for m={m}", len(orders) == expected_orders[m], str(len(orders)))
        for k, order in enumerate(orders, 1):
            Lm = harness_L(m, order)
            label = "".join(map(str, order))
            ok = len(set(Lm)) == expected_sizes[m] and hs_equal(hs_g, hs_monomial(Lm, R.nvars))
            rep.add(f"HS(G{m}) = HS(L{m}) for order {label}", ok)
            rep.bump("cases")
    return rep


# -- orchestration -------------------------------------------------------------

DEPTH_LIMITS = {
    # suite -> max c (fast, slow)
    "fiber-gb": (7, 8),
    "rees-gb": (6, 7),
    "initial-complex": (7, 8),
    "complex": (10, 12),
}


def verify_spec(spec: ScrollSpec, depth: str = "fast", suites: Sequence[str] = ("lm", "syzygies", "kernel",
                "minimality", "fiber-gb", "rees-gb", "initial-complex", "complex")) -> VerificationReport:
    slow = depth == "slow"
    rep = VerificationReport(f"spec {spec}")
    t0 = time.perf_counter()

    def cap(name):
        return DEPTH_LIMITS[name][1 if slow else 0]

    for suite in suites:
        if suite == "lm":
            rep.extend(verify_lm_table(spec))
        elif suite == "syzygies":
            rep.extend(verify_syzygies(spec))
        elif suite == "kernel":
            rep.extend(verify_kernel(spec))
        elif suite == "minimality":
            rep.extend(verify_minimality(spec))
        elif suite in ("fiber-gb", "rees-gb"):
            target = suite.split("-")[0]
            if spec.c <= cap(suite):
                rep.extend(verify_gb(spec, target))
            else:
                rep.skip(f"{target} Groebner basis {spec}", f"c > {cap(suite)} at depth {depth}")
        elif suite == "initial-complex":
            if spec.c <= cap(suite):
                rep.add(f"initial complex {spec}", verify_initial_complex(spec, max_c=cap(suite)))
            else:
                rep.skip(f"initial complex {spec}", f"c > {cap(suite)} at depth {depth}")
        elif suite == "complex":
            if spec.c <= cap(suite):
                rep.extend(verify_complex(spec))
            else:
                rep.skip(f"complex {spec}", f"c > {cap(suite)} at depth {depth}")
        else:
            raise ValueError(f"unknown suite {suite!r}")
    rep.elapsed = time.perf_counter() - t0
    return rep


def _verify_spec_args(args):
    return verify_spec(*args)


def verify_all(
    specs: Sequence[ScrollSpec], depth: str = "fast", jobs: int = 1, harness: bool = True,
    suites: Optional[Sequence[str]] = None,
) -> VerificationReport:
    """Run every per-spec suite plus (optionally) the Hilbert harness; results in input order."""
    if depth not in ("fast", "slow"):
        raise ValueError("depth must be 'fast' or 'slow'")
    rep = VerificationReport("all")
    t0 = time.perf_counter()
    extra = () if suites is None else (tuple(suites),)
    work = [(s, depth) + extra for s in specs]
    if jobs > 1 and len(work) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_verify_spec_args, work))
    else:
        results = [_verify_spec_args(w) for w in work]
    for r in results:
        rep.extend(r)
    if harness and specs:
        rep.extend(run_hilbert_harness())
    rep.elapsed = time.perf_counter() - t0
    return rep
