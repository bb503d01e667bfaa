"""Smoke test for the kprom_py extension.

Build and install first:  pip install --no-build-isolation ./crates/py
(or `maturin develop` inside crates/py), then run this file.
"""

import json

import kprom_py as k


def tableau(kind, rows, q):
    return json.dumps(
        {"kind": kind, "shape": [len(r) for r in rows], "rows": rows, "q": q, "offset": 0}
    )


def main():
    t = tableau("standard", [[1, 3, 4, 6], [2, 5, 9], [7, 8]], 9)
    assert json.loads(k.promote(t))["rows"] == [[1, 2, 3, 5], [4, 7, 8], [6, 9]]
    assert k.lattice_word(t) == "1 2 1 1 2 1 3 3 2"
    assert json.loads(k.from_lattice("121121332")) == json.loads(t)

    u = tableau("standard", [[1, 2, 6], [3, 5, 8], [4, 7, 9]], 9)
    ds = k.promotion_digraphs(u)
    edges = sorted(map(tuple, json.loads(ds)[0]["edges"]))
    assert edges == sorted([(1, 5), (5, 8), (8, 9), (9, 6), (6, 7), (7, 1), (2, 3), (3, 4), (4, 2)])
    assert json.loads(k.reconstruct_standard(ds, [3, 3, 3])) == json.loads(u)
    assert "1 -> 5" in k.digraph_dot(json.dumps(json.loads(ds)[0]))

    inc = tableau("increasing", [[1, 2, 3, 5, 7], [2, 3, 6, 9], [4, 6, 8]], 9)
    assert json.loads(k.promote(inc))["rows"] == [[1, 2, 4, 6, 9], [2, 5, 7, 8], [3, 7, 9]]

    rect = tableau("increasing", [[1, 2, 3, 6], [4, 5, 6, 9], [7, 8, 9, 10]], 10)
    back = k.reconstruct_rect_increasing(k.promotion_digraphs(rect), 3, 4, 10)
    assert json.loads(back) == json.loads(rect)

    two_row = tableau("increasing", [[1, 2, 4], [3, 5, 6]], 6)
    p = k.pi(two_row)
    assert json.loads(k.pi_inverse(p, 3)) == json.loads(two_row)
    web = k.partition_to_plabic(p)
    assert json.loads(k.classify(web))["planar"]
    assert json.loads(k.trip_digraph(web, 1, 2)) == json.loads(k.promotion_digraphs(two_row))[0]

    assert len(k.enumerate_syt([3, 3])) == 5
    assert len(k.enumerate_nc_partitions(5)) == 42
    assert len(k.enumerate_flamingo(6, 2)) == 5
    assert k.order(u) in (1, 3, 9)

    reports = [json.loads(r) for r in k.run_check("counting")]
    assert reports[0]["status"] == "pass"
    assert "conjecture-3row" in k.check_ids()
    try:
        k.promote("{")
    except ValueError:
        pass
    else:
        raise AssertionError("bad JSON accepted")
    print("kprom_py smoke test: ok")


if __name__ == "__main__":
    main()
