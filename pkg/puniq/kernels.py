"""
Pair-Graph Kernels
Compiled breadth-first search over ordered vertex pairs
"""

import numpy as np
from numba import njit


@njit(cache=True, nogil=True)
def find_reconvergence(mask, q, n, visited, parent, queue):
    """
    Search for two distinct equal-length walks with common endpoints

    A pair (x, y), x != y, stands for two walks that left a common vertex
    along different edges and now sit at x and y. Arcs move both walks
    one member edge forward. The edge set fails path-uniqueness exactly
    when some pair steps onto a diagonal pair (c, c). Breadth-first order
    from the pairs right after divergence makes the first such step a
    shortest witness.

    Args:
        mask: uint8 membership vector indexed by edge u*q + s
        q: Alphabet size
        n: Vertex count q^d
        visited: int8 workspace of size n*n, all zero on entry and exit
        parent: int64 workspace of size n*n; seeds store -(u+1) for the
            vertex u they diverged from, later pairs their predecessor
        queue: int64 workspace of size n*n

    Returns:
        (pair index, meeting vertex) of the first reconvergence, or
        (-1, -1) when the edge set is path unique
    """
    head = 0
    tail = 0
    for u in range(n):
        base = (u * q) % n
        for s1 in range(q):
            if mask[u * q + s1] == 0:
                continue
            for s2 in range(s1 + 1, q):
                if mask[u * q + s2] == 0:
                    continue
                p = (base + s1) * n + base + s2
                if visited[p] == 0:
                    visited[p] = 1
                    parent[p] = -(u + 1)
                    queue[tail] = p
                    tail += 1

    found_pair = -1
    found_vertex = -1
    while head < tail and found_pair < 0:
        p = queue[head]
        head += 1
        x = p // n
        y = p % n
        bx = (x * q) % n
        by = (y * q) % n
        for s1 in range(q):
            if found_pair >= 0:
                break
            if mask[x * q + s1] == 0:
                continue
            x2 = bx + s1
            for s2 in range(q):
                if mask[y * q + s2] == 0:
                    continue
                y2 = by + s2
                if x2 == y2:
                    found_pair = p
                    found_vertex = x2
                    break
                p2 = x2 * n + y2
                if visited[p2] == 0:
                    visited[p2] = 1
                    parent[p2] = p
                    queue[tail] = p2
                    tail += 1

    for i in range(tail):
        visited[queue[i]] = 0
    return found_pair, found_vertex


def allocate_workspace(n: int):
    """Zeroed (visited, parent, queue) buffers for n vertices"""
    size = n * n
    return (np.zeros(size, dtype=np.int8),
            np.zeros(size, dtype=np.int64),
            np.zeros(size, dtype=np.int64))
