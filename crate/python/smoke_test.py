"""Smoke test for the kflat extension module.

Build and run from the repository root:

    cargo build -p kflat-python --release --features extension-module
    cp target/release/libkflat.so python/kflat.so
    python3 python/smoke_test.py
"""

import os
import sys

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

import kflat  # noqa: E402


def main():
    r = kflat.Ring(["x", "y"], field="Fp:3")
    i = r.ideal("x, y")
    p = i.frob_power(4)
    assert [str(g) for g in p.groebner_basis()] == ["x^4", "x^3*y", "x*y^3", "y^4"]
    assert "x^2*y^2" not in p
    assert r.var("x") ** 4 in p

    q = kflat.Ring(["u", "v"])
    assert q.ideal("v^2, v*u^3").torsion_length() == 3
    assert q.ideal("v^2, v*u^3").pure_part() == "v"
    assert q.ideal("u*v").intersect("u^2") == q.ideal("u^2*v")

    axes = kflat.chow_ideal_axes(3)
    assert len(axes.groebner_basis()) == 6
    assert kflat.find_weight_subset([1, 1, 1]) is None

    sym = kflat.CnDeformation.parse("n 3\n1 2: x2^-1\n2 1: x1^-1\n")
    assert sym.is_kflat() and not sym.is_flat()
    double = kflat.CnDeformation.parse("n 3\n1 2: x2^-2\n")
    assert not double.is_kflat()
    assert double.refute(seed=0) is not None

    flags = kflat.PlaneDeformation.monomial(2, 3, "t^-1").classify()
    assert flags == {"flat": False, "globalizes": False, "cflat": True, "psi_regular": True}

    frob, gaps, lemma = kflat.semigroup(3, 5)
    assert (frob, gaps, lemma) == (7, [1, 2, 4, 7], True)
    assert kflat.monomial_cflat_nonglobal_dim(3, 5) == 4

    g = kflat.Ring(["x"]).poly("x^3 - 2*x + 5")
    assert kflat.companion_char_poly(g, "x") == g

    try:
        r.poly("x + w")
    except kflat.KflatError as e:
        assert "byte 4" in str(e)
    else:
        raise AssertionError("expected a parse error")

    print("kflat smoke test: ok")


if __name__ == "__main__":
    main()
