"""Backend parity: the compiled kernels and the pure-Python twins must agree
bit for bit on every exposed operation."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from forcing_lab import _kernels_py

compiled = pytest.importorskip("forcing_lab._ckernels")


def graph_rows(order: int, edge_bits: int):
    pairs = [(u, v) for u in range(order) for v in range(u + 1, order)]
    rows = [0] * order
    for i, (u, v) in enumerate(pairs):
        if (edge_bits >> i) & 1:
            rows[u] |= 1 << v
            rows[v] |= 1 << u
    return tuple(rows)


graphs = st.integers(min_value=2, max_value=9).flatmap(
    lambda n: st.tuples(
        st.just(n), st.integers(min_value=0, max_value=(1 << (n * (n - 1) // 2)) - 1)
    )
)


@given(graphs)
@settings(max_examples=300, deadline=None)
def test_pm_enumeration_parity(gh):
    n, bits = gh
    rows = graph_rows(n, bits)
    full = (1 << n) - 1
    hp = _kernels_py.make_handle(rows)
    hc = compiled.make_handle(rows)
    assert _kernels_py.pm_enumerate(hp, full, -1) == compiled.pm_enumerate(hc, full, -1)
    for cap in (1, 2, 5):
        assert _kernels_py.pm_count(hp, full, cap) == compiled.pm_count(hc, full, cap)


@given(graphs, st.integers(min_value=0, max_value=2**20))
@settings(max_examples=200, deadline=None)
def test_pm_subset_parity(gh, seed):
    n, bits = gh
    rows = graph_rows(n, bits)
    active = seed % (1 << n)
    hp = _kernels_py.make_handle(rows)
    hc = compiled.make_handle(rows)
    assert _kernels_py.pm_enumerate(hp, active, -1) == compiled.pm_enumerate(hc, active, -1)


@given(graphs)
@settings(max_examples=200, deadline=None)
def test_cycles_and_mis_parity(gh):
    n, bits = gh
    rows = graph_rows(n, bits)
    full = (1 << n) - 1
    hp = _kernels_py.make_handle(rows)
    hc = compiled.make_handle(rows)
    assert _kernels_py.mis(hp, full) == compiled.mis(hc, full)
    pms = _kernels_py.pm_enumerate(hp, full, 1)
    if pms:
        mates = [-1] * n
        for u, v in pms[0]:
            mates[u] = v
            mates[v] = u
        mates = tuple(mates)
        assert _kernels_py.alt_cycles(hp, mates, 10**6) == compiled.alt_cycles(
            hc, mates, 10**6
        )


@given(graphs, st.integers(min_value=0, max_value=3))
@settings(max_examples=120, deadline=None)
def test_removed_edges_parity(gh, drop):
    n, bits = gh
    rows = graph_rows(n, bits)
    full = (1 << n) - 1
    edges = [
        (u, v) for u in range(n) for v in range(u + 1, n) if rows[u] >> v & 1
    ]
    removed = tuple(edges[:drop])
    hp = _kernels_py.make_handle(rows)
    hc = compiled.make_handle(rows)
    assert _kernels_py.pm_count(hp, full, 10, removed) == compiled.pm_count(
        hc, full, 10, removed
    )
    assert _kernels_py.pm_enumerate(hp, full, -1, removed) == compiled.pm_enumerate(
        hc, full, -1, removed
    )


@given(
    st.lists(
        st.integers(min_value=1, max_value=(1 << 12) - 1), min_size=0, max_size=14
    )
)
@settings(max_examples=200, deadline=None)
def test_pack_masks_parity(masks):
    assert _kernels_py.pack_masks(tuple(masks)) == compiled.pack_masks(tuple(masks))


@given(graphs)
@settings(max_examples=150, deadline=None)
def test_search_fastpath_matches_python_search(gh):
    # the compiled whole-search values must agree with the witness-producing
    # subset search (an independent code path)
    from forcing_lab.graphs import build_graph
    from forcing_lab.matchings import enumerate_perfect_matchings
    from forcing_lab.solver import anti_forcing_number, forcing_number

    n, bits = gh
    rows = graph_rows(n, bits)
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rows[u] >> v & 1]
    g = build_graph(n, edges)
    pms = enumerate_perfect_matchings(g)
    h = compiled.make_handle(rows)
    for m in pms[:3]:
        mates = m.mates(n)
        assert compiled.forcing_value(h, mates, 10**7) == forcing_number(g, m).value
        assert (
            compiled.anti_forcing_value(h, mates, 10**7)
            == anti_forcing_number(g, m).value
        )


def test_search_fastpath_budget_sentinel():
    from forcing_lab.graphs import generate
    from forcing_lab.matchings import enumerate_perfect_matchings

    g = generate("complete_bipartite", 4, 4)
    m = enumerate_perfect_matchings(g, limit=1)[0]
    h = compiled.make_handle(g.adj)
    assert compiled.forcing_value(h, m.mates(g.order), 2) == -1


def test_cycle_ceiling_sentinel():
    rows = graph_rows(6, (1 << 15) - 1)  # K6
    hp = _kernels_py.make_handle(rows)
    hc = compiled.make_handle(rows)
    pms = _kernels_py.pm_enumerate(hp, 63, 1)
    mates = [-1] * 6
    for u, v in pms[0]:
        mates[u] = v
        mates[v] = u
    mates = tuple(mates)
    assert _kernels_py.alt_cycles(hp, mates, 1) is None
    assert compiled.alt_cycles(hc, mates, 1) is None


def test_backend_env_override(tmp_path):
    import subprocess
    import sys

    code = "import forcing_lab; print(forcing_lab.BACKEND_NAME)"
    out = subprocess.run(
        [sys.executable, "-c", code],
        capture_output=True,
        text=True,
        env={"FORCING_LAB_BACKEND": "python", "PATH": "/usr/bin:/bin"},
    )
    assert out.stdout.strip() == "python"
    out = subprocess.run(
        [sys.executable, "-c", code],
        capture_output=True,
        text=True,
        env={"FORCING_LAB_BACKEND": "compiled", "PATH": "/usr/bin:/bin"},
    )
    assert out.stdout.strip() == "compiled"
