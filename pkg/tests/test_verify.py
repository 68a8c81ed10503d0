import json

import pytest

from conftest import golden_json
from scrollrees import verify as vf
from scrollrees.errors import BadIndices, BoundExceeded, UnsupportedM
from scrollrees.scroll import make_spec

FAST = [make_spec(n) for n in ([1, 1], [3], [1, 1, 2], [2, 3], [3, 3], [1, 2, 2, 3])]


@pytest.mark.parametrize("m", [4, 5])
def test_admissible_orders_golden(m):
    got = ["".join(map(str, o)) for o in vf.admissible_orders(m)]
    assert got == golden_json("admissible_orders.json")[str(m)]


def test_admissible_orders_exclusions():
    assert (2, 1, 3, 4) not in vf.admissible_orders(4)
    for m in (3, 6):
        with pytest.raises(UnsupportedM):
            vf.admissible_orders(m)


def test_lm_table():
    rep = vf.verify_lm_table(make_spec([1, 2, 2, 3]))
    assert rep.passed and rep.counters["generators_checked"] == 183
    assert vf.verify_lm_table(make_spec([4])).passed
    small = vf.verify_lm_table(make_spec([1, 1]))
    assert small.passed and small.counters.get("generators_checked", 0) == 0


@pytest.mark.parametrize("spec", [make_spec(n) for n in ([3, 3], [1, 2, 2, 3])])
def test_syzygies_exhaustive(spec):
    rep = vf.verify_syzygies(spec)
    assert rep.passed, rep.failures()
    assert rep.counters["syzygy_instances"] == sum(len(vf.syzygy_index_tuples(spec, s)) for s in vf.SYZYGIES)


def test_syzygy_negative_cases():
    spec = make_spec([3, 3])
    lhs, rhs = vf.syzygy_sides(spec, "qm_eps", (1, 2, 3, 4, 5))
    assert not lhs.is_zero()
    assert lhs == rhs
    # perturb one side: the check has to notice
    from scrollrees.relations import gen_P

    assert not (lhs + gen_P(spec, 1, 2, 3, 4) - rhs).is_zero()
    lhs, rhs = vf.syzygy_sides(spec, "lm", (1, 2, 3, 4))
    assert not lhs.is_zero() and lhs == rhs
    with pytest.raises(BadIndices):
        vf.syzygy_sides(spec, "lm", (1, 2, 3))
    with pytest.raises(BadIndices):
        vf.syzygy_sides(spec, "ql_eps", (1, 2, 3, 5, 1))
    with pytest.raises(ValueError):
        vf.syzygy_sides(spec, "nope", (1, 2, 3, 4))


def test_initial_complex():
    for n in ([3, 3], [1, 1, 1, 1], [1, 2, 2, 3]):
        assert vf.verify_initial_complex(make_spec(n), max_c=8)
    with pytest.raises(BoundExceeded):
        vf.verify_initial_complex(make_spec([1, 2, 2, 3]))


def test_kernel_and_minimality():
    for spec in FAST:
        assert vf.verify_kernel(spec).passed
        assert vf.verify_minimality(spec).passed
    p = vf.verify_minimality(make_spec([3, 3])).checks[0]
    assert p.status == vf.PASS


def test_modular_rank():
    from scrollrees.poly import parse_poly, plain_ring

    r = plain_ring(["u", "v"])
    ps = [parse_poly(r, s) for s in ("u + v", "u - v", "2*u")]
    assert vf.modular_rank(ps) == 2


def test_verify_all_fast_list():
    rep = vf.verify_all(FAST)
    assert rep.passed, [c.name for c in rep.failures()]
    assert rep.counters["cases"] == 26
    obj = json.loads(rep.to_json())
    assert obj["passed"] is True
    assert "elapsed" not in json.dumps(obj)


def test_verify_all_empty_is_vacuous():
    rep = vf.verify_all([])
    assert rep.passed and not rep.checks


def test_verify_spec_skips_are_recorded():
    rep = vf.verify_spec(make_spec([1, 1, 1, 2, 2, 2]), suites=("rees-gb",))
    assert rep.passed and rep.checks[0].status == vf.SKIP
    with pytest.raises(ValueError):
        vf.verify_spec(make_spec([3]), suites=("bogus",))


def test_harness():
    rep = vf.run_hilbert_harness()
    assert rep.passed and rep.counters["cases"] == 26
    assert vf.harness_case("L5:16") == vf.harness_case("G5")
    for bad in ("L5:17", "L4:0", "X4", "G6"):
        with pytest.raises(ValueError):
            vf.harness_case(bad)
