"""Pure-Python residual-flow kernel for vertex-disjoint path packing.

This is the reference implementation of the kernel interface; the
compiled twin in ``_flowcore.pyx`` must produce bit-identical results.

Model: each vertex v of the input graph becomes an in-node 2v and an
out-node 2v+1 joined by an internal arc of capacity 1 (unlimited when v
is forced out of every cut). Every graph arc u->w becomes an unlimited
arc from out(u) to in(w). A super-source feeds every in-node of X and
every out-node of Y feeds a super-sink, so cuts may contain vertices of
X and of Y. Max flow then equals the maximum number of vertex-disjoint
X->Y paths (disjoint except at forced-out vertices), and the set
{v : in(v) residual-reachable, out(v) not} is the minimum cut pushed as
far toward X as possible.

Determinism: arc lists are built in ascending-vertex order and the
augmenting DFS scans them in that order, so path sets, residual
reachability, and the extracted cut are reproducible. From an out-node
the sink arc (if any) is scanned first, then the internal back-arc,
then forward arcs by ascending head vertex.

All vertex ids in this module are 0-based; callers translate.
"""

from __future__ import annotations

BIG = 1 << 30


def solve(
    n: int,
    nbr_flat: list[int],
    nbr_off: list[int],
    xs: list[int],
    ys: list[int],
    forced: list[int],
    active: list[int],
    cap: int,
    warm_paths: list[list[int]],
):
    """Augment a path packing up to ``cap`` and report the residual state.

    Returns (flow, paths, reach_in, reach_out). The reachability masks
    describe the final residual network; they identify the leftmost
    minimum cut only when flow < cap (i.e. augmentation stalled rather
    than hitting the budget).
    """
    src = 2 * n
    snk = 2 * n + 1
    nodes = 2 * n + 2

    arc_to: list[int] = []
    res: list[int] = []
    adj: list[list[int]] = [[] for _ in range(nodes)]

    def add_arc(a: int, b: int, capacity: int) -> int:
        i = len(arc_to)
        arc_to.append(b)
        res.append(capacity)
        arc_to.append(a)
        res.append(0)
        adj[a].append(i)
        adj[b].append(i + 1)
        return i

    internal_arc = [-1] * n
    sink_arc = [-1] * n
    src_arc = [-1] * n
    edge_arc: dict[tuple[int, int], int] = {}

    in_y = bytearray(n)
    for y in ys:
        in_y[y] = 1
    for v in range(n):
        if not active[v]:
            continue
        if in_y[v]:
            sink_arc[v] = add_arc(2 * v + 1, snk, BIG)
        internal_arc[v] = add_arc(2 * v, 2 * v + 1, BIG if forced[v] else 1)
    for v in range(n):
        if not active[v]:
            continue
        base = nbr_off[v]
        for j in range(base, nbr_off[v + 1]):
            w = nbr_flat[j]
            if active[w]:
                edge_arc[(v, w)] = add_arc(2 * v + 1, 2 * w, BIG)
    for x in xs:
        src_arc[x] = add_arc(src, 2 * x, BIG)

    def push_unit(i: int) -> None:
        res[i] -= 1
        res[i ^ 1] += 1

    flow = 0
    for path in warm_paths:
        push_unit(src_arc[path[0]])
        for idx, v in enumerate(path):
            push_unit(internal_arc[v])
            if idx + 1 < len(path):
                push_unit(edge_arc[(v, path[idx + 1])])
        push_unit(sink_arc[path[-1]])
        flow += 1

    # Iterative DFS for one augmenting path; visited is timestamped so
    # repeated attempts reuse the arrays.
    visited = [0] * nodes
    stamp = 0
    parent_arc = [0] * nodes

    def augment() -> bool:
        nonlocal stamp
        stamp += 1
        visited[src] = stamp
        stack = [(src, 0)]
        while stack:
            node, it = stack[-1]
            arcs = adj[node]
            advanced = False
            while it < len(arcs):
                i = arcs[it]
                it += 1
                if res[i] > 0:
                    b = arc_to[i]
                    if visited[b] != stamp:
                        visited[b] = stamp
                        parent_arc[b] = i
                        if b == snk:
                            node2 = snk
                            while node2 != src:
                                i2 = parent_arc[node2]
                                res[i2] -= 1
                                res[i2 ^ 1] += 1
                                node2 = arc_to[i2 ^ 1]
                            return True
                        stack[-1] = (node, it)
                        stack.append((b, 0))
                        advanced = True
                        break
            if not advanced:
                stack.pop()
        return False

    while flow < cap and augment():
        flow += 1

    # Residual reachability from the super-source.
    reach = bytearray(nodes)
    reach[src] = 1
    stack = [src]
    while stack:
        node = stack.pop()
        for i in adj[node]:
            if res[i] > 0:
                b = arc_to[i]
                if not reach[b]:
                    reach[b] = 1
                    stack.append(b)
    reach_in = bytearray(n)
    reach_out = bytearray(n)
    for v in range(n):
        reach_in[v] = reach[2 * v]
        reach_out[v] = reach[2 * v + 1]

    # Decompose the flow into vertex paths, lowest start / lowest
    # continuation first. Stray circulations (possible after
    # cancellations) are excised so every reported path is simple.
    remaining = [0] * len(arc_to)
    for i in range(0, len(arc_to), 2):
        remaining[i] = res[i ^ 1]
    paths: list[list[int]] = []
    for x in xs:
        i = src_arc[x]
        while remaining[i] > 0:
            remaining[i] -= 1
            remaining[internal_arc[x]] -= 1
            path = [x]
            pos = {x: 0}
            v = x
            while not (sink_arc[v] >= 0 and remaining[sink_arc[v]] > 0):
                nxt = -1
                for j in range(nbr_off[v], nbr_off[v + 1]):
                    w = nbr_flat[j]
                    if active[w] and remaining[edge_arc[(v, w)]] > 0:
                        nxt = w
                        remaining[edge_arc[(v, w)]] -= 1
                        break
                if nxt < 0:
                    raise AssertionError("flow decomposition stalled")
                remaining[internal_arc[nxt]] -= 1
                if nxt in pos:
                    for u in path[pos[nxt] + 1 :]:
                        del pos[u]
                    del path[pos[nxt] + 1 :]
                else:
                    pos[nxt] = len(path)
                    path.append(nxt)
                v = nxt
            remaining[sink_arc[v]] -= 1
            paths.append(path)

    return flow, paths, reach_in, reach_out
