"""Pure-Python kernels. Must stay step-for-step identical to ``_ckernels.pyx``."""

FOUND = 1
NONE = 0
BUDGET = -1


def _select(n, k, color, sat, degree, tier):
    # -1: nothing left, -2: some uncolored node has no color left
    best = -1
    for u in range(n):
        if color[u] >= 0:
            continue
        if sat[u] >= k:
            return -2
        if best < 0:
            best = u
            continue
        if tier[u] != tier[best]:
            if tier[u] < tier[best]:
                best = u
        elif sat[u] != sat[best]:
            if sat[u] > sat[best]:
                best = u
        elif degree[u] > degree[best]:
            best = u
    return best


def color_search(indptr, indices, degree, tier, forbidden, k, symmetry, budget):
    """DSATUR branch and bound for a proper ``k``-coloring.

    ``forbidden`` is a flat n*k 0/1 table of colors excluded up front. Colors
    are 0-based. Returns ``(status, colors, nodes)``.
    """
    n = len(degree)
    if n == 0:
        return FOUND, [], 0
    if k <= 0:
        return NONE, None, 0
    color = [-1] * n
    count = list(forbidden)
    sat = [0] * n
    for u in range(n):
        base = u * k
        sat[u] = sum(1 for c in range(k) if count[base + c])

    order = [0] * n
    nextc = [0] * n
    prevmax = [0] * n
    maxused = -1
    nodes = 0

    u = _select(n, k, color, sat, degree, tier)
    if u == -2:
        return NONE, None, 0
    depth = 0
    order[0] = u
    nextc[0] = 0
    while depth >= 0:
        u = order[depth]
        c = color[u]
        if c >= 0:
            color[u] = -1
            for i in range(indptr[u], indptr[u + 1]):
                idx = indices[i] * k + c
                count[idx] -= 1
                if count[idx] == 0:
                    sat[indices[i]] -= 1
            maxused = prevmax[depth]
        c = nextc[depth]
        limit = k
        if symmetry and maxused + 2 < limit:
            limit = maxused + 2
        base = u * k
        while c < limit and count[base + c] > 0:
            c += 1
        if c >= limit:
            depth -= 1
            continue
        nextc[depth] = c + 1
        nodes += 1
        if 0 <= budget < nodes:
            return BUDGET, None, nodes
        prevmax[depth] = maxused
        color[u] = c
        for i in range(indptr[u], indptr[u + 1]):
            idx = indices[i] * k + c
            if count[idx] == 0:
                sat[indices[i]] += 1
            count[idx] += 1
        if c > maxused:
            maxused = c
        if depth + 1 == n:
            return FOUND, color, nodes
        v = _select(n, k, color, sat, degree, tier)
        if v == -2:
            continue
        depth += 1
        order[depth] = v
        nextc[depth] = 0
    return NONE, None, nodes


def max_flow(n, source, sink, tails, heads, caps):
    """Dinic max-flow. Returns ``(value, source_side)`` for the minimum cut.

    Arc ``i`` of the input becomes residual arcs ``2i`` (forward) and
    ``2i+1`` (reverse, capacity 0).
    """
    m = len(tails)
    to = [0] * (2 * m)
    cap = [0] * (2 * m)
    nxt = [0] * (2 * m)
    first = [-1] * n
    for i in range(m):
        a, b = 2 * i, 2 * i + 1
        to[a] = heads[i]
        cap[a] = caps[i]
        nxt[a] = first[tails[i]]
        first[tails[i]] = a
        to[b] = tails[i]
        cap[b] = 0
        nxt[b] = first[heads[i]]
        first[heads[i]] = b

    flow = 0
    level = [-1] * n
    it = [0] * n
    while True:
        for i in range(n):
            level[i] = -1
        level[source] = 0
        queue = [source]
        qh = 0
        while qh < len(queue):
            x = queue[qh]
            qh += 1
            a = first[x]
            while a >= 0:
                if cap[a] > 0 and level[to[a]] < 0:
                    level[to[a]] = level[x] + 1
                    queue.append(to[a])
                a = nxt[a]
        if level[sink] < 0:
            break
        for i in range(n):
            it[i] = first[i]
        # iterative blocking-flow DFS; path holds arc ids from the source
        path = []
        x = source
        while True:
            if x == sink:
                push = min(cap[a] for a in path)
                for a in path:
                    cap[a] -= push
                    cap[a ^ 1] += push
                flow += push
                path = []
                x = source
                continue
            a = it[x]
            while a >= 0 and not (cap[a] > 0 and level[to[a]] == level[x] + 1):
                a = nxt[a]
            it[x] = a
            if a >= 0:
                path.append(a)
                x = to[a]
                continue
            if x == source:
                break
            level[x] = -1
            a = path.pop()
            x = to[a ^ 1]
            it[x] = nxt[it[x]]

    side = [False] * n
    side[source] = True
    queue = [source]
    qh = 0
    while qh < len(queue):
        x = queue[qh]
        qh += 1
        a = first[x]
        while a >= 0:
            if cap[a] > 0 and not side[to[a]]:
                side[to[a]] = True
                queue.append(to[a])
            a = nxt[a]
    return flow, side
