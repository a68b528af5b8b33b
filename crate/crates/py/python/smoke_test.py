"""Smoke test for the factorlab_py extension.

Build and run:
    pip install maturin
    maturin develop --release -m crates/py/Cargo.toml
    python crates/py/python/smoke_test.py
"""

import json
from fractions import Fraction

import factorlab_py as fl


def main():
    p = fl.petersen_edges()
    assert len(p) == 15

    value, cut = fl.toughness_exact(10, p)
    assert Fraction(value) == Fraction(4, 3), value
    assert cut is not None and len(cut) == 4

    alpha, cw = fl.independence(10, p)
    assert alpha == 4 and Fraction(cw) == Fraction(5, 2)

    matching = fl.near_factor(10, p, 1)
    assert matching is not None and len(matching) == 5

    assert fl.eulerian(10, p) is None
    assert fl.spanning_trees(10, p, 1) is not None
    assert fl.spanning_trees(10, p, 2) is None
    assert Fraction(fl.omega(10, p, 1)) == 1

    k4 = [(u, v) for u in range(4) for v in range(u + 1, 4)]
    assert fl.iso_toughness_exact(4, k4) == "3"
    assert len(fl.connected_graphs(5)) == 1 + 1 + 2 + 6 + 21

    k7 = [(u, v) for u in range(7) for v in range(u + 1, 7)]
    report = json.loads(fl.audit("T-A:r=2", 7, k7, "K7"))
    assert report["verdict"] == "PASS", report["verdict"]
    star = json.loads(fl.audit("T-A:r=2", 4, [(0, 1), (0, 2), (0, 3)]))
    assert star["verdict"] == "VACUOUS"

    try:
        fl.audit("T-NOPE", 2, [(0, 1)])
    except ValueError:
        pass
    else:
        raise AssertionError("unknown theorem accepted")

    print("smoke test ok")


if __name__ == "__main__":
    main()
