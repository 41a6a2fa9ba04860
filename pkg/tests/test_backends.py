from __future__ import annotations

import pytest

from sepkit import _backend, _flowpure
from sepkit.flow import _csr
from sepkit.oracle import named_separator_corpus, random_separator_corpus

compiled = _backend.available_backends().get("compiled")


def _run_all(kernel, inst, trial):
    g = inst.graph()
    flat, off = _csr(g)
    n = g.n
    forced = [0] * n
    active = [1] * n
    if trial >= 1:
        forced[(inst.k + trial) % n] = 1
    if trial == 2:
        active[(inst.k * 5 + 2) % n] = 0
    xs = sorted(v - 1 for v in inst.x if active[v - 1])
    ys = sorted(v - 1 for v in inst.y if active[v - 1])
    flow, paths, rin, rout = kernel.solve(n, flat, off, xs, ys, forced, active, inst.k + 1, [])
    return flow, paths, bytes(rin), bytes(rout)


@pytest.mark.skipif(compiled is None, reason="compiled kernel not built")
def test_backends_bit_identical():
    insts = random_separator_corpus(150, seed=23) + named_separator_corpus()
    for inst in insts:
        for trial in range(3):
            assert _run_all(_flowpure, inst, trial) == _run_all(compiled, inst, trial)


@pytest.mark.skipif(compiled is None, reason="compiled kernel not built")
def test_warm_start_identical():
    insts = random_separator_corpus(60, seed=31)
    for inst in insts:
        g = inst.graph()
        flat, off = _csr(g)
        n = g.n
        xs = sorted(v - 1 for v in inst.x)
        ys = sorted(v - 1 for v in inst.y)
        base = _flowpure.solve(n, flat, off, xs, ys, [0] * n, [1] * n, inst.k + 1, [])
        if not base[1]:
            continue
        warm = base[1][: (len(base[1]) + 1) // 2]
        a = _flowpure.solve(n, flat, off, xs, ys, [0] * n, [1] * n, inst.k + 1, warm)
        b = compiled.solve(n, flat, off, xs, ys, [0] * n, [1] * n, inst.k + 1, warm)
        assert (a[0], a[1], bytes(a[2]), bytes(a[3])) == (b[0], b[1], bytes(b[2]), bytes(b[3]))


def test_backend_selection_reports():
    assert _backend.backend_name() in ("pure", "compiled")
    assert "pure" in _backend.available_backends()
