import json

import pytest
from hypothesis import given, strategies as st

from scrollrees.errors import ZeroPolynomial
from scrollrees.order import GradedLex, GradedRevLex, order_context, variable_chain
from scrollrees.poly import TVar, mono_mul, plain_ring
from scrollrees.relations import gen_L, gen_M, gen_P, gen_Q
from scrollrees.scroll import XVar, bar, build_matrix_M, make_spec, partitions_up_to

SPEC = make_spec([1, 2, 2, 3])


def _mdeg_oracle(spec, v):
    """Multidegree of a single variable straight from its meaning."""
    c, d = spec.c, spec.d
    vec = [0] * (c + d)
    if isinstance(v, TVar):
        vec[v.a + d - 1] += 1
        vec[v.b + d - 1] += 1
    elif v.j == 0:
        vec[v.i - 1] = 1
    else:
        m = build_matrix_M(spec)
        gamma = [k for k in range(1, c + 1) if m.bottom(k) == v]
        assert len(gamma) == 1
        vec[gamma[0] + d - 1] = 1
    return tuple(vec)


def test_x_chain_example():
    names = [v.name() for v in variable_chain(SPEC) if isinstance(v, XVar)]
    assert names == ["x[1,0]", "x[2,0]", "x[3,0]", "x[4,0]", "x[2,1]", "x[3,1]", "x[4,1]", "x[4,2]",
                     "x[4,3]", "x[3,2]", "x[2,2]", "x[1,1]"]
    # the tail follows the second row of M
    m = build_matrix_M(SPEC)
    assert names[SPEC.d:] == [m.bottom(k).name() for k in range(1, SPEC.c + 1)]


@pytest.mark.parametrize("spec", partitions_up_to(7, 3))
def test_variable_rank_rules(spec):
    ctx = order_context(spec)
    r = ctx.variable_rank
    ts = [v for v in ctx.ring.variables if isinstance(v, TVar)]
    xs = [v for v in ctx.ring.variables if isinstance(v, XVar)]
    assert r(TVar(1, 2)) > r(TVar(1, 3)) > r(TVar(2, 3))
    assert min(r(v) for v in xs) > max(r(v) for v in ts)
    for u in ts:
        for v in ts:
            if (u.a, u.b) < (v.a, v.b):
                assert r(u) > r(v)
    ranks = sorted(ctx.rank)
    assert ranks == list(range(ctx.ring.nvars))


def test_degrees_examples():
    ctx = order_context(SPEC)
    R = ctx.ring
    t12 = R.monomial({TVar(1, 2): 1})
    vec = [0] * 12
    vec[4] = vec[5] = 1
    assert ctx.mdeg(t12) == tuple(vec)
    x20 = R.monomial({XVar(2, 0): 1})
    assert ctx.mdeg(x20) == tuple(int(k == 1) for k in range(12)) and ctx.sdeg(x20) == 0
    assert ctx.sdeg(R.monomial({TVar(1, 2): 1, TVar(2, 3): 1})) == 13


def test_compare_examples():
    ctx = order_context(SPEC)
    R = ctx.ring
    mono = lambda *ts: R.monomial({TVar(*t): 1 for t in ts})  # noqa: E731
    assert ctx.compare(mono((1, 3), (2, 4)), mono((1, 4), (2, 3))) == 1
    assert ctx.compare(mono((1, 3)), mono((1, 3))) == 0
    q = gen_Q(SPEC, 1, 2, 3, 4)
    assert ctx.leading_monomial(q) == mono((1, 2), (4, 5))
    d = SPEC.d
    assert ctx.variable_rank(XVar(d, SPEC.n[-1])) > ctx.variable_rank(TVar(1, 2))


def test_leading_term_examples():
    ctx = order_context(SPEC)
    m = build_matrix_M(SPEC)
    R = ctx.ring
    lm, lc = ctx.leading_term(gen_M(SPEC, 1, 2, 3))
    assert lm == R.monomial({m.bottom(2): 1, TVar(1, 3): 1}) and lc == -1
    single = R.var(TVar(2, 5))
    assert ctx.leading_term(single) == (R.monomial({TVar(2, 5): 1}), 1)
    with pytest.raises(ZeroPolynomial):
        ctx.leading_term(R.zero())
    lm, _ = ctx.leading_term(gen_L(SPEC, 1, 2, 3))
    assert lm == R.monomial({XVar(2, 0): 1, TVar(2, 3): 1})
    assert ctx.leading_monomial(gen_P(SPEC, 1, 2, 3, 4)) == R.monomial({TVar(1, 3): 1, TVar(2, 4): 1})


@pytest.mark.parametrize("spec", partitions_up_to(9))
def test_mdeg_oracle_and_first_row(spec):
    ctx = order_context(spec)
    for vid, v in enumerate(ctx.ring.variables):
        assert ctx.mdeg_of[vid] == _mdeg_oracle(spec, v)
    m = build_matrix_M(spec)
    c, d = spec.c, spec.d
    row1 = [ctx.variable_rank(m.top(k)) for k in range(1, c + 1)]
    # decreasing through column c-d+1, then increasing
    assert all(row1[k] > row1[k + 1] for k in range(c - d))
    assert all(row1[k] < row1[k + 1] for k in range(c - d, c - 1))
    for a in range(1, c + 1):
        for b in range(1, c + 1):
            ra, rb = ctx.variable_rank(m.top(a)), ctx.variable_rank(m.top(b))
            ma = ctx.mdeg(ctx.ring.monomial({m.top(a): 1}))
            mb = ctx.mdeg(ctx.ring.monomial({m.top(b): 1}))
            assert (ra > rb) == (ma > mb)


specs_small = st.sampled_from(partitions_up_to(6, 3))


@st.composite
def spec_and_monos(draw, k=3):
    spec = draw(specs_small)
    n = order_context(spec).ring.nvars
    mono = st.lists(st.tuples(st.integers(0, n - 1), st.integers(1, 2)), max_size=4).map(
        lambda items: tuple(sorted(dict(items).items()))
    )
    return spec, [draw(mono) for _ in range(k)]


@given(spec_and_monos())
def test_order_is_total_and_multiplicative(data):
    spec, (m1, m2, m) = data
    ctx = order_context(spec)
    cmp = ctx.compare(m1, m2)
    assert cmp == -ctx.compare(m2, m1)
    assert (cmp == 0) == (m1 == m2)
    if cmp:
        assert ctx.compare(mono_mul(m, m1), mono_mul(m, m2)) == cmp
    assert ctx.compare(m1, ()) >= 0
    assert (cmp > 0) == (ctx.key(m1) > ctx.key(m2))


@given(spec_and_monos())
def test_order_transitive(data):
    spec, ms = data
    ctx = order_context(spec)
    a, b, c = ctx.sort_desc(ms)
    assert ctx.compare(a, b) >= 0 and ctx.compare(b, c) >= 0 and ctx.compare(a, c) >= 0


def test_dumps():
    ctx = order_context(SPEC)
    lines = ctx.dump_variables().splitlines()
    assert lines[0] == "x[1,0]" and lines[-1] == "T[7,8]"
    rows = json.loads(ctx.dump_degrees())
    assert rows[0]["var"] == "x[1,0]" and rows[-1]["sdeg"] == 1


def test_graded_orders():
    ring = plain_ring(["u", "v", "w"])
    gl, grl = GradedLex(ring), GradedRevLex(ring)
    uw = ring.monomial({ring.variables[0]: 1, ring.variables[2]: 1})
    vv = ring.monomial({ring.variables[1]: 2})
    u = ring.monomial({ring.variables[0]: 1})
    assert gl.compare(uw, vv) == 1
    assert grl.compare(uw, vv) == -1
    assert gl.compare(uw, u) == 1 and grl.compare(uw, u) == 1
    with pytest.raises(ValueError):
        GradedLex(ring, [0, 0, 1])
