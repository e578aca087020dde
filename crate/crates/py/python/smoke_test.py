"""Smoke test for the `fiedler` extension module.

Build first:  pip install --no-build-isolation -e crates/py
Then run:     python3 crates/py/python/smoke_test.py
"""

import csv
import io
import math
import sys

import numpy as np

import fiedler


def parse_certificate(text):
    fields, coords = {}, []
    lines = iter(text.splitlines())
    for line in lines:
        if line == "coordinates:":
            break
        key, _, value = line.partition(": ")
        fields[key] = value
    for line in lines:
        v, x, y = line.split()
        coords.append((int(v), float(x), float(y)))
    return fields, coords


def recheck(graph, cert):
    """Recompute the certificate's claims from its text alone."""
    fields, coords = parse_certificate(cert.to_text())
    n = int(fields["vertices"])
    assert n == graph.vertex_count == len(coords)
    pts = np.array([[x, y] for _, x, y in coords])
    assert np.linalg.norm(pts.sum(axis=0)) <= 1e-9, "embedding not zero-sum"
    separator = {int(v) for v in fields["separator"].split()}
    for v in separator:
        assert np.allclose(pts[v], 0.0)
    for v in set(range(n)) - separator:
        assert abs(np.hypot(*pts[v]) - 1.0) <= 1e-12
    num = sum(np.sum((pts[u] - pts[v]) ** 2) for u, v in graph.edges())
    quotient = num / np.sum(pts**2)
    cross, remaining = map(int, fields["bound"].split("/"))
    assert remaining == n - len(separator)
    assert abs(quotient - cross / remaining) <= 1e-9
    assert abs(quotient - float(fields["quotient"])) <= 1e-12
    lam2 = np.linalg.eigvalsh(np.array(graph.laplacian()))[1]
    assert quotient >= lam2 - 1e-8, (quotient, lam2)
    assert cert.soundness(graph)["ok"]
    return quotient, lam2


def main():
    # spectra against numpy
    for spec in ["doublewheel:10", "quadrangulation:8", "fan:7", "cube", "grid:3:4", "kh:5:12"]:
        g = fiedler.family(spec)
        ours = np.array(g.spectrum())
        ref = np.linalg.eigvalsh(np.array(g.laplacian()))
        assert np.max(np.abs(ours - ref)) <= 1e-9, spec
    assert abs(fiedler.fiedler_value(fiedler.family("complete:4")) - 4.0) <= 1e-12

    # closed forms
    for n in (6, 12, 40):
        cf = fiedler.closed_form(f"doublewheel:{n}")
        assert abs(cf["lambda2"] - (4 - 2 * math.cos(2 * math.pi / n))) <= 1e-15
        assert abs(fiedler.family(f"doublewheel:{n}").fiedler_value() - cf["lambda2"]) <= 1e-8
    assert not fiedler.closed_form("quadrangulation:4")["valid"]

    # certificates: by hand, automatic, triangulation
    star = fiedler.family("star:7")
    cert = fiedler.certify(star, [0])
    assert cert.bound_fraction == "6/6"
    q, lam2 = recheck(star, cert)
    assert abs(q - 1) <= 1e-12 and abs(lam2 - 1) <= 1e-12

    diamond = fiedler.Graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (2, 3)])
    assert fiedler.certify(diamond, [0, 2]).bound_fraction == "4/2"

    for spec, mode in [("path:9", "tree"), ("wheel:8", "bfs"), ("grid:4:5", "bfs"), ("doublewheel:12", "bfs")]:
        g = fiedler.family(spec)
        recheck(g, fiedler.certify_auto(g, mode))

    hexagon, cert = fiedler.certify_triangulation(6, [(0, 2), (0, 3), (0, 4)])
    assert cert.origin.startswith("outerplanar case")
    recheck(hexagon, cert)

    try:
        fiedler.certify(fiedler.family("complete:4"), [0, 1])
    except fiedler.FiedlerError as e:
        assert "component containing vertex 2" in str(e)
    else:
        raise AssertionError("unbalanced separator accepted")

    # placements
    pts = fiedler.balanced_circle_placement([3.0, 1.0, 2.0, 2.0])
    s = np.array([[w * x, w * y] for w, (x, y) in zip([3, 1, 2, 2], pts)]).sum(axis=0)
    assert np.linalg.norm(s) <= 1e-12

    # sweep CSV and checks
    rows = list(csv.DictReader(io.StringIO(fiedler.sweep_csv("quadrangulation", [4, 6, 8], True))))
    assert rows[0]["n"] == "4" and rows[0]["closed_form"] == ""
    assert all(float(r["abs_gap"]) <= 1e-8 for r in rows[1:])
    failing = [r for r in fiedler.run_checks() if not r[4]]
    assert not failing, failing

    # edge-list round trip
    g = fiedler.family("grid:3:3")
    assert fiedler.Graph.parse(g.to_edge_list()) == g

    print("smoke test passed")
    return 0


if __name__ == "__main__":
    sys.exit(main())
