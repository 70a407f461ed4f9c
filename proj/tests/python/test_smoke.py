import math
import os
import tempfile

import pytest

import nullforge as nf


def test_expr_parse_and_derivative():
    f = nf.parse("sin(2*x)")
    assert f(0.5) == pytest.approx(math.sin(1.0), abs=1e-14)
    assert f.derivative()(0.0) == pytest.approx(2.0, abs=1e-14)
    with pytest.raises(ValueError):
        nf.parse("2*+x")


def test_catalog_goldens():
    assert len(nf.list_examples()) == 9
    a2 = nf.example_curve("alpha2", {"p": 2, "q": 1})
    assert a2.dimension == 4
    assert a2.position(0.0) == pytest.approx([-0.75, 0.0, 0.25, 0.0], abs=1e-12)
    assert nf.surface_point("f4", 0.0, 0.0) == pytest.approx(
        [-0.5, -1.0, -0.5], abs=1e-12
    )


def test_forward_maps_are_null():
    c42 = nf.forward_e42("exp(2*x)", "exp(x)", "exp(x)", "1")
    c31 = nf.forward_e31("exp(4*x)", "exp(2*x)", "exp(x)")
    for curve, signs in ((c42, (1, 1, -1, -1)), (c31, (1, 1, -1))):
        for xi in (-0.4, 0.0, 0.3):
            d = curve.derivative(xi)
            ip = sum(s * v * v for s, v in zip(signs, d))
            assert abs(ip) <= 1e-9 * max(1.0, sum(v * v for v in d))


def test_constraint_errors():
    with pytest.raises(ValueError):
        nf.example_curve("alpha1", {"r": 1, "s": 1})


def test_minimality():
    rep = nf.verify_minimality("f5", tol=1e-8, grid=11)
    assert rep["pass"]


def test_cli_run():
    assert nf.run(["examples"]) == 0
    with tempfile.TemporaryDirectory() as d:
        out = os.path.join(d, "a5.csv")
        code = nf.run(
            ["curve", "--example", "alpha5", "--interval", "0:1",
             "--samples", "3", "--out", out]
        )
        assert code == 0
        with open(out) as f:
            assert len(f.readlines()) == 4
    assert nf.run(["curve", "--bogus"]) == 2
