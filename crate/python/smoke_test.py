"""Smoke test for the Python bindings."""

import json
from fractions import Fraction

import rota_baxter_py as rb


def main():
    b = rb.binomial(4)
    assert b.dim == 5
    assert b.weight == "-1"
    assert b.check()["pass"]
    assert dict(b.coproduct(1)) == {(0, 1): "1", (1, 0): "1", (1, 1): "-1"}

    d = b.double_coproduct()
    assert d.check()["pass"]
    r = b.rescale("2")
    assert r.weight == "2" and r.check()["pass"]
    assert b.complement().check()["pass"]

    a = b.dualize()
    assert a.check()["pass"]
    e0 = ["1", "0", "0", "0", "0"]
    assert a.multiply(e0, e0) == e0

    for hopf in ("z2", "z3", "sweedler"):
        for op in ("p1", "p2"):
            s = rb.smash(hopf, op)
            assert s.check()["pass"], (hopf, op)
            assert s.is_idempotent()

    q = rb.qpoly("2", 5)
    assert q.check()["pass"]
    assert Fraction(q.operator[0][0]) == Fraction(2, 1 - 2)
    assert rb.qpoly_dual("2", 5).check()["pass"]

    ok, tuples = rb.lemma_check(6)
    assert ok and tuples == sum((n + 1) ** 3 for n in range(7))

    back = rb.from_json(b.to_json())
    assert back.to_json() == b.to_json()
    assert json.loads(b.to_json())["kind"] == "rb-coalgebra"

    try:
        rb.smash("z2", "p3")
    except ValueError:
        pass
    else:
        raise AssertionError("expected ValueError")

    print("smoke test passed")


if __name__ == "__main__":
    main()
