"""
Annealing Kernels
Compiled simulated-annealing chain over vertex orderings
"""

import math

import numpy as np
from numba import njit

from puniq.kernels import find_reconvergence


@njit(cache=True, nogil=True)
def triangle_mask(position, q, n, mask):
    """Keep edge u -> v iff position[u] <= position[v]; returns the edge count"""
    count = 0
    for edge in range(n * q):
        u = edge // q
        v = (u * q) % n + edge % q
        keep = 1 if position[u] <= position[v] else 0
        mask[edge] = keep
        count += keep
    return count


@njit(cache=True, nogil=True)
def _refresh(edge, position, q, n, mask, changed, previous, n_changed):
    """Recompute one edge after a swap, logging the old value; returns (n_changed, delta)"""
    u = edge // q
    v = (u * q) % n + edge % q
    keep = 1 if position[u] <= position[v] else 0
    if keep == mask[edge]:
        return n_changed, 0
    changed[n_changed] = edge
    previous[n_changed] = mask[edge]
    mask[edge] = keep
    return n_changed + 1, 1 if keep == 1 else -1


@njit(cache=True, nogil=True)
def repair_ordering(q, n, order, swaps, visited, parent, queue):
    """
    Swap positions of order until its upper triangle is path unique

    Args:
        q: Alphabet size
        n: Vertex count q^d
        order: int64 vertex at each position, modified in place
        swaps: int64 (k, 2) position pairs, consumed from the front
        visited, parent, queue: Pair-graph workspaces

    Returns:
        Swaps consumed (0 when order already is path unique), or -1
        when no prefix of swaps reaches a path-unique triangle
    """
    position = np.empty(n, dtype=np.int64)
    for i in range(n):
        position[order[i]] = i
    mask = np.zeros(n * q, dtype=np.uint8)
    triangle_mask(position, q, n, mask)
    if find_reconvergence(mask, q, n, visited, parent, queue)[0] < 0:
        return 0

    for it in range(swaps.shape[0]):
        i = swaps[it, 0]
        j = swaps[it, 1]
        if i == j:
            continue
        a = order[i]
        b = order[j]
        order[i] = b
        order[j] = a
        position[a] = j
        position[b] = i
        triangle_mask(position, q, n, mask)
        if find_reconvergence(mask, q, n, visited, parent, queue)[0] < 0:
            return it + 1
    return -1


@njit(cache=True, nogil=True)
def anneal_chain(q, n, order, swaps, uniforms, temperature, cooling,
                 visited, parent, queue, best_mask):
    """
    Run one annealing chain

    The state is a vertex ordering; its candidate graph is the upper
    triangle (diagonal included) of the reordered adjacency matrix. A
    swap of two positions only touches the edges incident to the two
    vertices, which are updated in place and rolled back on rejection.
    A candidate that is not path unique is always rejected. An invalid
    current state scores as minus infinity, so from there the first
    path-unique candidate is taken whatever its count; otherwise
    worsening candidates are taken with probability exp(delta / T).

    Args:
        q: Alphabet size
        n: Vertex count q^d
        order: int64 vertex at each position, modified in place
        swaps: int64 (iterations, 2) position pairs
        uniforms: float64 acceptance draws, one per iteration
        temperature: Initial temperature
        cooling: Geometric cooling factor
        visited, parent, queue: Pair-graph workspaces
        best_mask: uint8 output, best path-unique mask seen

    Returns:
        (best count or -1, accepted swaps, accepted swaps whose
        candidate was path unique)
    """
    position = np.empty(n, dtype=np.int64)
    for i in range(n):
        position[order[i]] = i
    mask = np.zeros(n * q, dtype=np.uint8)
    count = triangle_mask(position, q, n, mask)
    changed = np.empty(4 * q, dtype=np.int64)
    previous = np.empty(4 * q, dtype=np.uint8)
    stride = n // q

    valid = find_reconvergence(mask, q, n, visited, parent, queue)[0] < 0
    best = -1
    if valid:
        best = count
        best_mask[:] = mask
    accepted = 0
    valid_states = 0

    for it in range(uniforms.shape[0]):
        i = swaps[it, 0]
        j = swaps[it, 1]
        if i == j:
            temperature *= cooling
            continue
        a = order[i]
        b = order[j]
        order[i] = b
        order[j] = a
        position[a] = j
        position[b] = i

        n_changed = 0
        delta = 0
        for t in range(2):
            w = a if t == 0 else b
            for s in range(q):
                n_changed, step = _refresh(w * q + s, position, q, n, mask, changed, previous, n_changed)
                delta += step
            top = w // q
            last = w % q
            for r in range(q):
                n_changed, step = _refresh((top + r * stride) * q + last, position, q, n,
                                           mask, changed, previous, n_changed)
                delta += step

        take = False
        if not valid or delta >= 0 or (temperature > 0.0 and uniforms[it] < math.exp(delta / temperature)):
            take = find_reconvergence(mask, q, n, visited, parent, queue)[0] < 0

        if take:
            count += delta
            accepted += 1
            valid = True
            valid_states += 1
            if count > best:
                best = count
                best_mask[:] = mask
        else:
            for c in range(n_changed - 1, -1, -1):
                mask[changed[c]] = previous[c]
            order[i] = a
            order[j] = b
            position[a] = i
            position[b] = j
        temperature *= cooling

    return best, accepted, valid_states
