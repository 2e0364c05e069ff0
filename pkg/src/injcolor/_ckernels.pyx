# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels. Mirrors ``_pykernels`` step for step."""

from libc.stdlib cimport free, malloc

cdef enum:
    FOUND = 1
    NONE = 0
    BUDGET = -1


cdef int _select(int n, int k, int* color, int* sat, const int[:] degree, const int[:] tier) noexcept nogil:
    cdef int best = -1
    cdef int u
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


def color_search(const int[:] indptr, const int[:] indices, const int[:] degree,
                 const int[:] tier, const signed char[:] forbidden, int k,
                 bint symmetry, long long budget):
    cdef int n = degree.shape[0]
    if n == 0:
        return FOUND, [], 0
    if k <= 0:
        return NONE, None, 0

    cdef int* color = <int*>malloc(n * sizeof(int))
    cdef int* count = <int*>malloc(n * k * sizeof(int))
    cdef int* sat = <int*>malloc(n * sizeof(int))
    cdef int* order = <int*>malloc(n * sizeof(int))
    cdef int* nextc = <int*>malloc(n * sizeof(int))
    cdef int* prevmax = <int*>malloc(n * sizeof(int))
    if not (color and count and sat and order and nextc and prevmax):
        free(color); free(count); free(sat); free(order); free(nextc); free(prevmax)
        raise MemoryError()

    cdef int u, v, c, i, idx, base, limit, depth
    cdef int maxused = -1
    cdef long long nodes = 0
    cdef int status = NONE
    try:
        for u in range(n):
            color[u] = -1
            sat[u] = 0
            base = u * k
            for c in range(k):
                count[base + c] = forbidden[base + c]
                if forbidden[base + c]:
                    sat[u] += 1

        with nogil:
            u = _select(n, k, color, sat, degree, tier)
            if u != -2:
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
                    if budget >= 0 and nodes > budget:
                        status = BUDGET
                        break
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
                        status = FOUND
                        break
                    v = _select(n, k, color, sat, degree, tier)
                    if v == -2:
                        continue
                    depth += 1
                    order[depth] = v
                    nextc[depth] = 0

        if status == FOUND:
            return FOUND, [color[u] for u in range(n)], nodes
        return status, None, nodes
    finally:
        free(color); free(count); free(sat); free(order); free(nextc); free(prevmax)


def max_flow(int n, int source, int sink, const int[:] tails, const int[:] heads,
             const long long[:] caps):
    cdef int m = tails.shape[0]
    cdef int* to = <int*>malloc(2 * m * sizeof(int) + 1)
    cdef long long* cap = <long long*>malloc(2 * m * sizeof(long long) + 1)
    cdef int* nxt = <int*>malloc(2 * m * sizeof(int) + 1)
    cdef int* first = <int*>malloc(n * sizeof(int))
    cdef int* level = <int*>malloc(n * sizeof(int))
    cdef int* it = <int*>malloc(n * sizeof(int))
    cdef int* queue = <int*>malloc(n * sizeof(int))
    cdef int* path = <int*>malloc((n + 1) * sizeof(int))
    if not (to and cap and nxt and first and level and it and queue and path):
        free(to); free(cap); free(nxt); free(first); free(level); free(it); free(queue); free(path)
        raise MemoryError()

    cdef int i, a, b, x, qh, qt, plen
    cdef long long flow = 0
    cdef long long push
    try:
        for i in range(n):
            first[i] = -1
        for i in range(m):
            a = 2 * i
            b = a + 1
            to[a] = heads[i]
            cap[a] = caps[i]
            nxt[a] = first[tails[i]]
            first[tails[i]] = a
            to[b] = tails[i]
            cap[b] = 0
            nxt[b] = first[heads[i]]
            first[heads[i]] = b

        with nogil:
            while True:
                for i in range(n):
                    level[i] = -1
                level[source] = 0
                queue[0] = source
                qh = 0
                qt = 1
                while qh < qt:
                    x = queue[qh]
                    qh += 1
                    a = first[x]
                    while a >= 0:
                        if cap[a] > 0 and level[to[a]] < 0:
                            level[to[a]] = level[x] + 1
                            queue[qt] = to[a]
                            qt += 1
                        a = nxt[a]
                if level[sink] < 0:
                    break
                for i in range(n):
                    it[i] = first[i]
                plen = 0
                x = source
                while True:
                    if x == sink:
                        push = cap[path[0]]
                        for i in range(1, plen):
                            if cap[path[i]] < push:
                                push = cap[path[i]]
                        for i in range(plen):
                            cap[path[i]] -= push
                            cap[path[i] ^ 1] += push
                        flow += push
                        plen = 0
                        x = source
                        continue
                    a = it[x]
                    while a >= 0 and not (cap[a] > 0 and level[to[a]] == level[x] + 1):
                        a = nxt[a]
                    it[x] = a
                    if a >= 0:
                        path[plen] = a
                        plen += 1
                        x = to[a]
                        continue
                    if x == source:
                        break
                    level[x] = -1
                    plen -= 1
                    a = path[plen]
                    x = to[a ^ 1]
                    it[x] = nxt[it[x]]

            for i in range(n):
                level[i] = 0
            level[source] = 1
            queue[0] = source
            qh = 0
            qt = 1
            while qh < qt:
                x = queue[qh]
                qh += 1
                a = first[x]
                while a >= 0:
                    if cap[a] > 0 and level[to[a]] == 0:
                        level[to[a]] = 1
                        queue[qt] = to[a]
                        qt += 1
                    a = nxt[a]

        return flow, [level[i] == 1 for i in range(n)]
    finally:
        free(to); free(cap); free(nxt); free(first); free(level); free(it); free(queue); free(path)
