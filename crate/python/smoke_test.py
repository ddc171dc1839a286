#!/usr/bin/env python3
"""Smoke test for the degpart_py extension module.

Builds nothing itself: looks for the compiled cdylib under target/ (release
first, then debug), copies it next to a temp dir under the importable name,
and runs a few end-to-end checks.
"""

import pathlib
import shutil
import sys
import sysconfig
import tempfile

ROOT = pathlib.Path(__file__).resolve().parent.parent


def locate_library() -> pathlib.Path:
    suffix = sysconfig.get_config_var("EXT_SUFFIX") or ".so"
    names = ["libdegpart_py.so", "degpart_py.dll", "libdegpart_py.dylib"]
    for profile in ("release", "debug"):
        base = ROOT / "target" / profile
        for name in names:
            cand = base / name
            if cand.exists():
                return cand
    sys.exit(
        "degpart_py library not found; build it first:\n"
        "  cargo build --release -p degpart-py"
    )
    del suffix


def main() -> None:
    lib = locate_library()
    tmp = tempfile.mkdtemp(prefix="degpart_py_")
    shutil.copy(lib, pathlib.Path(tmp) / "degpart_py.so")
    sys.path.insert(0, tmp)
    import degpart_py as dp

    # O_5: 9 vertices, 19 edges, chi 5, vertex critical, classified as itself.
    o5, roles = dp.Graph.o_n(5)
    assert o5.n == 9 and o5.m == 19, (o5.n, o5.m)
    assert o5.max_degree() == 5
    assert o5.degree(roles["x"]) == 5 and o5.degree(roles["y"]) == 5
    assert dp.exact_chi(o5) == 5
    assert dp.is_vertex_critical(o5)
    assert dp.high_vertices(o5, 5) == sorted([roles["x"], roles["y"]])
    assert dp.omega_d(o5, 4) == 1
    assert dp.classify_critical(o5, 1) == "IsO5"

    # K_7 classifies as the complete graph.
    k7 = dp.Graph.complete(7)
    assert dp.classify_critical(k7, 1) == "IsCompleteKChi"

    # C_5 partition: obstruction-free and verified.
    c5 = dp.Graph.cycle(5)
    cert = dp.find_partition_t1(c5, [2, 2], 4)
    assert cert["outcome"] == "partition" and cert["verified"], cert

    # K_5 with wt(r) = d = 4 forces the clique structure.
    k5 = dp.Graph.complete(5)
    cert = dp.find_partition_t1(k5, [2, 2], 4)
    assert cert["outcome"] == "clique_structure" and cert["verified"], cert
    assert len(cert["q"]) == 5

    # Degeneracy split of C_6 with r = (1, 2).
    cert = dp.find_partition_t2(dp.Graph.cycle(6), [1, 2], 2)
    assert cert["outcome"] == "partition" and cert["verified"], cert

    # Petersen: Brooks 3-coloring, Borodin split with an edgeless side.
    petersen = dp.Graph(
        10,
        [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0),
         (0, 5), (1, 6), (2, 7), (3, 8), (4, 9),
         (5, 7), (7, 9), (9, 6), (6, 8), (8, 5)],
    )
    colors = dp.brooks_color(petersen, 3)
    assert len(set(colors)) <= 3
    for (u, v) in petersen.edges():
        assert colors[u] != colors[v]
    v1, v2 = dp.borodin_partition(petersen, 1, 2)
    assert sorted(v1 + v2) == list(range(10))
    for u in v1:
        assert not any(w in v1 for w in petersen.neighbors(u))

    # Critical structure of O_5 at k = 2: cliques of sizes 3 and 2.
    cs = dp.extract_critical_structure(o5, 2)
    assert sorted(len(c) for c in cs["cliques"]) == [2, 3]
    assert cs["chi"] == 5 and cs["omega_h"] == 1

    # Enumeration sanity: 11 graphs on 4 vertices, 6 connected.
    assert len(dp.enumerate_graphs(4)) == 11
    assert len(dp.enumerate_graphs(4, True)) == 6

    # cost_f on K_3 with r = (1, 1) and the (2, 1)-split.
    k3 = dp.Graph.complete(3)
    assert dp.cost_f(k3, [[0, 1], [2]], [1, 1]) == -2

    print("smoke test: OK")


if __name__ == "__main__":
    main()
