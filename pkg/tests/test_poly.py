from fractions import Fraction
import random

import pytest
from hypothesis import given, strategies as st

from oracles import evaluate
from scrollrees.errors import BadIndices, SpecMismatch
from scrollrees.poly import (
    Polynomial,
    TVar,
    minor_f,
    minor_g,
    parse_poly,
    pi_substitute,
    plain_ring,
    scroll_ring,
)
from scrollrees.scroll import XVar, make_spec

SPEC = make_spec([1, 2, 2, 3])
R = scroll_ring(SPEC, "m")


def T(a, b):
    return R.var(TVar(a, b))


def x(i, j):
    return R.var(XVar(i, j))


def test_arith_examples():
    assert (T(1, 2) + T(1, 3)) - T(1, 3) == T(1, 2)
    assert (T(1, 2) * 0).is_zero()
    assert (x(1, 0) - x(1, 0)).is_zero()
    assert (T(1, 2) * R.zero()).is_zero()


def test_mixed_rings_rejected():
    other = scroll_ring(make_spec([2, 2]), "m")
    with pytest.raises(SpecMismatch):
        T(1, 2) + other.var(TVar(1, 2))
    with pytest.raises(SpecMismatch):
        T(1, 2) == other.var(TVar(1, 2))


def test_tvar_requires_order():
    with pytest.raises(BadIndices):
        TVar(2, 1)


def test_minor_examples():
    assert minor_g(SPEC, 1, 2) == x(2, 0) * x(3, 1) - x(3, 0) * x(2, 1)
    s = make_spec([4])
    rs = scroll_ring(s, "m")
    xv = lambda j: rs.var(XVar(1, j))  # noqa: E731
    assert minor_g(s, 1, 2) == xv(0) * xv(2) - xv(1) ** 2
    for a, b in [(1, 1), (2, 1), (0, 2), (1, 9)]:
        with pytest.raises(BadIndices):
            minor_g(SPEC, a, b)


def test_pi_examples():
    assert pi_substitute(SPEC, T(1, 2)) == minor_g(SPEC, 1, 2)
    p1234 = T(1, 2) * T(3, 4) - T(1, 3) * T(2, 4) + T(1, 4) * T(2, 3)
    assert pi_substitute(SPEC, p1234).is_zero()
    with pytest.raises(SpecMismatch):
        pi_substitute(make_spec([2, 2]), T(1, 2))


def test_bidegree_and_text():
    p = x(1, 0) * T(1, 2) - Fraction(3, 2) * T(2, 3) ** 2
    assert p.bidegrees() == {(1, 1), (0, 2)}
    assert parse_poly(R, p.text()) == p
    assert Polynomial.from_json_obj(R, p.to_json_obj()) == p
    assert p.to_json_obj()[0]["coeff"] in ("1", "-3/2")


def test_plain_ring_parse():
    ring = plain_ring(["u", "v", "w"])
    p = parse_poly(ring, "u*v - 2*w^2 + 1/3")
    assert len(p) == 3
    assert parse_poly(ring, "0").is_zero()


# random small polynomials over the (1,2,2,3) T-ring
_var_ids = st.integers(0, R.nvars - 1)
_monos = st.lists(st.tuples(_var_ids, st.integers(1, 2)), max_size=3).map(
    lambda items: tuple(sorted(dict(items).items()))
)
_coeffs = st.one_of(st.integers(-5, 5), st.fractions(min_value=-3, max_value=3, max_denominator=4))
polys = st.dictionaries(_monos, _coeffs, max_size=4).map(lambda d: Polynomial(R, d))


@given(polys, polys, polys)
def test_ring_axioms(p, q, r):
    assert p + q == q + p
    assert p * q == q * p
    assert (p + q) + r == p + (q + r)
    assert p * (q + r) == p * q + p * r
    assert (p - p).is_zero()
    assert all(c != 0 for c in (p * q).terms.values())


@given(polys, polys)
def test_pi_is_a_ring_map(p, q):
    assert pi_substitute(SPEC, p * q) == pi_substitute(SPEC, p) * pi_substitute(SPEC, q)
    assert pi_substitute(SPEC, p + q) == pi_substitute(SPEC, p) + pi_substitute(SPEC, q)
    out = pi_substitute(SPEC, p)
    assert all(R.bidegree(m)[1] == 0 for m in out.terms)


@given(polys)
def test_serialization_roundtrip(p):
    assert parse_poly(R, p.text()) == p
    assert Polynomial.from_json_obj(R, p.to_json_obj()) == p


@given(polys, st.integers(0, 2**32))
def test_pi_matches_numeric_evaluation(p, seed):
    from oracles import kernel_point

    rng = random.Random(seed)
    point = kernel_point(SPEC, R, "m", rng)
    assert evaluate(pi_substitute(SPEC, p), point) == evaluate(p, point)


def test_minor_f_is_x_side():
    s = make_spec([1, 2])
    ry = scroll_ring(s, "x")
    xv = lambda i, j: ry.var(XVar(i, j))  # noqa: E731
    assert minor_f(s, 1, 2) == xv(1, 0) * xv(2, 1) - xv(2, 0) * xv(1, 1)
