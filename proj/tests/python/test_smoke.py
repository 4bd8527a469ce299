import math

import necklace


def test_central_residual_vanishes():
    for m in (2, 3, 4):
        assert necklace.central_residual(m) <= 1e-9


def test_growth_vector():
    gv = necklace.growth_vector(3)
    assert len(gv) == 3
    assert abs(gv[0] + 1.0) < 1e-10
    assert abs(gv[1] + 0.5) < 1e-10
    assert abs(gv[2] - 1.5) < 1e-10
    assert abs(sum(gv)) < 1e-10


def test_limit_graph_height():
    # u^+ central closed form: (1/(m-1)) log|z^m - 1| at m = 3, z = 2
    h = necklace.limit_graph_height(3, True, 2.0 + 0.0j)
    assert abs(h - 0.5 * math.log(7.0)) < 1e-10


def test_jacobian_summary():
    s = necklace.jacobian_summary(2)
    assert s["surjective"]
    assert s["rank"] == 7
    assert s["kernel_dimension"] == 5
    assert all(b["verdict"] for b in s["blocks"])


def test_schedules():
    valid, idx, _ = necklace.validate_schedule([3, 5, 7, 9])
    assert valid and idx == -1
    valid, idx, _ = necklace.validate_schedule([3, 4])
    assert not valid and idx == 3

    growths = necklace.minimal_growths(5)
    assert abs(growths[-1] - 2.1875) < 1e-15


def test_quartic_pair():
    same, iso = necklace.quartic_pair_comparison(0.01)
    assert same and not iso


def test_dimension_audit():
    assert necklace.dimension_audit(0, 3) == (4, 2, 2)
