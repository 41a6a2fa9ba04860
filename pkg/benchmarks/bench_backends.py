#!/usr/bin/env python3
"""Compare the compiled and pure-Python flow kernels on realistic loads.

Each workload is timed in a fresh subprocess with SEPKIT_BACKEND pinned,
since the kernel is chosen at import time. Results are identical across
backends by contract (the twin test asserts bit-equality); this measures
speed only.

Run:  python benchmarks/bench_backends.py
"""

from __future__ import annotations

import json
import os
import subprocess
import sys

WORKLOADS = [
    ("minsep BT(12) k=8", "minsep_bt"),
    ("minsep GRID(20x20) k=20", "minsep_grid"),
    ("enum BT(8) k=6 leftmost", "enum_bt8"),
    ("enum BT(9) k=7 leftmost", "enum_bt9"),
    ("tw GRID(6x6) k=5", "tw_grid"),
    ("tw PATH(120) k=3", "tw_path"),
]


def _run_workload(tag: str) -> float:
    import time

    from sepkit import decompose, enumerate_leftmost, leftmost_min_separator
    from sepkit.oracle import bt_leaves, fixtures

    t0 = time.perf_counter()
    if tag == "minsep_bt":
        g = fixtures("BT", 12)
        for _ in range(5):
            leftmost_min_separator(g, bt_leaves(12), {1}, 8)
    elif tag == "minsep_grid":
        g = fixtures("GRID", 20, 20)
        left = frozenset(range(1, 401, 20))
        right = frozenset(range(20, 401, 20))
        for _ in range(3):
            leftmost_min_separator(g, left, right, 20)
    elif tag == "enum_bt8":
        g = fixtures("BT", 8)
        assert enumerate_leftmost(g, bt_leaves(8), {1}, 6).count == 42
    elif tag == "enum_bt9":
        g = fixtures("BT", 9)
        assert enumerate_leftmost(g, bt_leaves(9), {1}, 7).count == 132
    elif tag == "tw_grid":
        decompose(fixtures("GRID", 6, 6), 5)
    elif tag == "tw_path":
        decompose(fixtures("PATH", 120), 3)
    else:
        raise SystemExit(f"unknown workload {tag}")
    return time.perf_counter() - t0


def main() -> None:
    if len(sys.argv) == 3 and sys.argv[1] == "--worker":
        print(json.dumps(_run_workload(sys.argv[2])))
        return

    from sepkit._backend import available_backends

    backends = list(available_backends())
    if "compiled" not in backends:
        print("note: compiled kernel not built; timing pure only", file=sys.stderr)
    results: dict[str, dict[str, float]] = {}
    for backend in backends:
        env = dict(os.environ, SEPKIT_BACKEND=backend)
        for label, tag in WORKLOADS:
            out = subprocess.run(
                [sys.executable, __file__, "--worker", tag],
                env=env,
                capture_output=True,
                text=True,
                check=True,
            )
            results.setdefault(label, {})[backend] = json.loads(out.stdout)

    width = max(len(label) for label, _ in WORKLOADS)
    header = f"{'workload':<{width}}  " + "".join(f"{b:>10}" for b in backends)
    if len(backends) > 1:
        header += f"{'speedup':>10}"
    print(header)
    for label, _ in WORKLOADS:
        row = f"{label:<{width}}  "
        for b in backends:
            row += f"{results[label][b]:>9.3f}s"
        if len(backends) > 1:
            row += f"{results[label]['pure'] / results[label]['compiled']:>9.1f}x"
        print(row)


if __name__ == "__main__":
    main()
