# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled residual-flow kernel.

Mirrors ``_flowpure.solve`` exactly: same residual model, same
ascending-vertex arc order, same DFS tie-breaking, same path
decomposition. Outputs are bit-identical to the pure kernel; only the
speed differs. See _flowpure for the model documentation.
"""

from libc.stdlib cimport free, malloc

cdef int BIG = 1 << 30


cdef inline void _fail(void *p) except *:
    if p == NULL:
        raise MemoryError()


def solve(int n, nbr_flat, nbr_off, xs, ys, forced, active, int cap, warm_paths):
    cdef int src = 2 * n
    cdef int snk = 2 * n + 1
    cdef int nodes = 2 * n + 2
    cdef int n_flat = len(nbr_flat)
    cdef int n_xs = len(xs)
    cdef int n_ys = len(ys)

    cdef int *flat = <int *> malloc(max(n_flat, 1) * sizeof(int))
    cdef int *off = <int *> malloc((n + 1) * sizeof(int))
    cdef int *act = <int *> malloc(max(n, 1) * sizeof(int))
    cdef int *frc = <int *> malloc(max(n, 1) * sizeof(int))
    cdef int *in_y = <int *> malloc(max(n, 1) * sizeof(int))
    _fail(flat); _fail(off); _fail(act); _fail(frc); _fail(in_y)
    cdef int i, v, w, j
    for i in range(n_flat):
        flat[i] = nbr_flat[i]
    for i in range(n + 1):
        off[i] = nbr_off[i]
    for i in range(n):
        act[i] = active[i]
        frc[i] = forced[i]
        in_y[i] = 0
    for i in range(n_ys):
        in_y[<int> ys[i]] = 1

    # Arc-pair budget: internal + sink per vertex, one per live CSR entry,
    # one per source. Arcs are created in the exact order the pure kernel
    # uses so adjacency scan order matches.
    cdef int max_pairs = 2 * n + n_flat + n_xs
    cdef int *arc_to = <int *> malloc(max(2 * max_pairs, 1) * sizeof(int))
    cdef int *res = <int *> malloc(max(2 * max_pairs, 1) * sizeof(int))
    cdef int *deg = <int *> malloc(nodes * sizeof(int))
    cdef int *internal_arc = <int *> malloc(max(n, 1) * sizeof(int))
    cdef int *sink_arc = <int *> malloc(max(n, 1) * sizeof(int))
    cdef int *src_arc = <int *> malloc(max(n, 1) * sizeof(int))
    cdef int *csr_arc = <int *> malloc(max(n_flat, 1) * sizeof(int))
    _fail(arc_to); _fail(res); _fail(deg)
    _fail(internal_arc); _fail(sink_arc); _fail(src_arc); _fail(csr_arc)

    for i in range(nodes):
        deg[i] = 0
    for i in range(n):
        internal_arc[i] = -1
        sink_arc[i] = -1
        src_arc[i] = -1
    for i in range(n_flat):
        csr_arc[i] = -1

    cdef int n_arcs = 0

    # Pass 1: count arc endpoints per node.
    for v in range(n):
        if not act[v]:
            continue
        if in_y[v]:
            deg[2 * v + 1] += 1; deg[snk] += 1
        deg[2 * v] += 1; deg[2 * v + 1] += 1
    for v in range(n):
        if not act[v]:
            continue
        for j in range(off[v], off[v + 1]):
            w = flat[j]
            if act[w]:
                deg[2 * v + 1] += 1; deg[2 * w] += 1
    for i in range(n_xs):
        v = <int> xs[i]
        deg[src] += 1; deg[2 * v] += 1

    cdef int *adj_off = <int *> malloc((nodes + 1) * sizeof(int))
    _fail(adj_off)
    adj_off[0] = 0
    for i in range(nodes):
        adj_off[i + 1] = adj_off[i] + deg[i]
    cdef int total_adj = adj_off[nodes]
    cdef int *adj = <int *> malloc(max(total_adj, 1) * sizeof(int))
    cdef int *cursor = <int *> malloc(nodes * sizeof(int))
    _fail(adj); _fail(cursor)
    for i in range(nodes):
        cursor[i] = adj_off[i]

    cdef int a, b, capacity, arc_id

    # Pass 2: create arcs.
    for v in range(n):
        if not act[v]:
            continue
        if in_y[v]:
            a = 2 * v + 1; b = snk
            arc_id = n_arcs
            arc_to[arc_id] = b; res[arc_id] = BIG
            arc_to[arc_id + 1] = a; res[arc_id + 1] = 0
            adj[cursor[a]] = arc_id; cursor[a] += 1
            adj[cursor[b]] = arc_id + 1; cursor[b] += 1
            sink_arc[v] = arc_id
            n_arcs += 2
        a = 2 * v; b = 2 * v + 1
        capacity = BIG if frc[v] else 1
        arc_id = n_arcs
        arc_to[arc_id] = b; res[arc_id] = capacity
        arc_to[arc_id + 1] = a; res[arc_id + 1] = 0
        adj[cursor[a]] = arc_id; cursor[a] += 1
        adj[cursor[b]] = arc_id + 1; cursor[b] += 1
        internal_arc[v] = arc_id
        n_arcs += 2
    for v in range(n):
        if not act[v]:
            continue
        for j in range(off[v], off[v + 1]):
            w = flat[j]
            if act[w]:
                a = 2 * v + 1; b = 2 * w
                arc_id = n_arcs
                arc_to[arc_id] = b; res[arc_id] = BIG
                arc_to[arc_id + 1] = a; res[arc_id + 1] = 0
                adj[cursor[a]] = arc_id; cursor[a] += 1
                adj[cursor[b]] = arc_id + 1; cursor[b] += 1
                csr_arc[j] = arc_id
                n_arcs += 2
    for i in range(n_xs):
        v = <int> xs[i]
        a = src; b = 2 * v
        arc_id = n_arcs
        arc_to[arc_id] = b; res[arc_id] = BIG
        arc_to[arc_id + 1] = a; res[arc_id + 1] = 0
        adj[cursor[a]] = arc_id; cursor[a] += 1
        adj[cursor[b]] = arc_id + 1; cursor[b] += 1
        src_arc[v] = arc_id
        n_arcs += 2

    cdef int flow = 0
    cdef list path_obj
    cdef int plen, idx, u

    for path_obj in warm_paths:
        plen = len(path_obj)
        v = <int> path_obj[0]
        arc_id = src_arc[v]
        res[arc_id] -= 1; res[arc_id ^ 1] += 1
        for idx in range(plen):
            v = <int> path_obj[idx]
            arc_id = internal_arc[v]
            res[arc_id] -= 1; res[arc_id ^ 1] += 1
            if idx + 1 < plen:
                w = <int> path_obj[idx + 1]
                arc_id = -1
                for j in range(off[v], off[v + 1]):
                    if flat[j] == w and csr_arc[j] >= 0:
                        arc_id = csr_arc[j]
                        break
                if arc_id < 0:
                    raise ValueError("warm path uses a missing edge")
                res[arc_id] -= 1; res[arc_id ^ 1] += 1
        v = <int> path_obj[plen - 1]
        arc_id = sink_arc[v]
        res[arc_id] -= 1; res[arc_id ^ 1] += 1
        flow += 1

    cdef int *visited = <int *> malloc(nodes * sizeof(int))
    cdef int *parent_arc = <int *> malloc(nodes * sizeof(int))
    cdef int *stack_node = <int *> malloc(nodes * sizeof(int))
    cdef int *stack_it = <int *> malloc(nodes * sizeof(int))
    _fail(visited); _fail(parent_arc); _fail(stack_node); _fail(stack_it)
    for i in range(nodes):
        visited[i] = 0
    cdef int stamp = 0
    cdef int depth, node, it, found, node2, i2, advanced

    while flow < cap:
        stamp += 1
        visited[src] = stamp
        stack_node[0] = src
        stack_it[0] = adj_off[src]
        depth = 0
        found = 0
        while depth >= 0:
            node = stack_node[depth]
            it = stack_it[depth]
            advanced = 0
            while it < adj_off[node + 1]:
                i = adj[it]
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
                            found = 1
                            break
                        stack_it[depth] = it
                        depth += 1
                        stack_node[depth] = b
                        stack_it[depth] = adj_off[b]
                        advanced = 1
                        break
            if found:
                break
            if not advanced:
                depth -= 1
        if not found:
            break
        flow += 1

    cdef unsigned char *reach = <unsigned char *> malloc(nodes)
    _fail(reach)
    for i in range(nodes):
        reach[i] = 0
    reach[src] = 1
    depth = 0
    stack_node[0] = src
    while depth >= 0:
        node = stack_node[depth]
        depth -= 1
        for it in range(adj_off[node], adj_off[node + 1]):
            i = adj[it]
            if res[i] > 0:
                b = arc_to[i]
                if not reach[b]:
                    reach[b] = 1
                    depth += 1
                    stack_node[depth] = b
    reach_in = bytearray(n)
    reach_out = bytearray(n)
    for v in range(n):
        reach_in[v] = reach[2 * v]
        reach_out[v] = reach[2 * v + 1]

    cdef int *remaining = <int *> malloc(max(n_arcs, 1) * sizeof(int))
    cdef int *pos = <int *> malloc(max(n, 1) * sizeof(int))
    _fail(remaining); _fail(pos)
    for i in range(0, n_arcs, 2):
        remaining[i] = res[i ^ 1]
        remaining[i + 1] = 0
    for i in range(n):
        pos[i] = -1
    paths = []
    cdef int x, nxt, drop
    for idx in range(n_xs):
        x = <int> xs[idx]
        i = src_arc[x]
        while remaining[i] > 0:
            remaining[i] -= 1
            remaining[internal_arc[x]] -= 1
            path_obj = [x]
            pos[x] = 0
            v = x
            while not (sink_arc[v] >= 0 and remaining[sink_arc[v]] > 0):
                nxt = -1
                for j in range(off[v], off[v + 1]):
                    w = flat[j]
                    if act[w] and csr_arc[j] >= 0 and remaining[csr_arc[j]] > 0:
                        nxt = w
                        remaining[csr_arc[j]] -= 1
                        break
                if nxt < 0:
                    raise AssertionError("flow decomposition stalled")
                remaining[internal_arc[nxt]] -= 1
                if pos[nxt] >= 0:
                    drop = pos[nxt] + 1
                    for u in path_obj[drop:]:
                        pos[u] = -1
                    del path_obj[drop:]
                else:
                    pos[nxt] = len(path_obj)
                    path_obj.append(nxt)
                v = nxt
            remaining[sink_arc[v]] -= 1
            for u in path_obj:
                pos[u] = -1
            paths.append(path_obj)

    free(flat); free(off); free(act); free(frc); free(in_y)
    free(arc_to); free(res); free(deg)
    free(internal_arc); free(sink_arc); free(src_arc); free(csr_arc)
    free(adj_off); free(adj); free(cursor)
    free(visited); free(parent_arc); free(stack_node); free(stack_it)
    free(reach); free(remaining); free(pos)
    return flow, paths, reach_in, reach_out
