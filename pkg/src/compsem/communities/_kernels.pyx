# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled local-moving kernels; see ``_kernels_py`` for the reference twin."""

import numpy as np
cimport numpy as cnp
from libc.math cimport exp, log2

cnp.import_array()

cdef double TIE_EPS = 1e-13


cdef inline double _plogp(double x) nogil:
    if x > 0.0:
        return x * log2(x)
    return 0.0


def move_nodes_modularity(const cnp.int64_t[:] indptr, const cnp.int64_t[:] indices,
                          const double[:] weights, const double[:] node_weight,
                          cnp.int64_t[:] membership, const cnp.int64_t[:] order,
                          double resolution, double tolerance, long max_sweeps):
    cdef Py_ssize_t n = node_weight.shape[0]
    cdef Py_ssize_t v, i, c, own, best_c, t, n_touched, n_empty, idx
    cdef double two_m = 0.0, m, scale, kv, own_gain, best_gain, g, sweep_gain
    cdef long moves, total_moves = 0, sweeps = 0

    for v in range(n):
        two_m += node_weight[v]
    if two_m <= 0.0:
        return 0, 0
    m = two_m / 2.0
    scale = resolution / (2.0 * m * m)

    cdef double[:] comm_deg = np.zeros(n)
    cdef cnp.int64_t[:] comm_size = np.zeros(n, dtype=np.int64)
    cdef double[:] link = np.zeros(n)
    cdef cnp.uint8_t[:] seen = np.zeros(n, dtype=np.uint8)
    cdef cnp.int64_t[:] touched = np.zeros(n, dtype=np.int64)
    cdef cnp.int64_t[:] empty = np.zeros(n, dtype=np.int64)

    for v in range(n):
        comm_deg[membership[v]] += node_weight[v]
        comm_size[membership[v]] += 1
    n_empty = 0
    for c in range(n - 1, -1, -1):
        if comm_size[c] == 0:
            empty[n_empty] = c
            n_empty += 1

    while sweeps < max_sweeps:
        sweeps += 1
        moves = 0
        sweep_gain = 0.0
        for idx in range(order.shape[0]):
            v = order[idx]
            own = membership[v]
            kv = node_weight[v]
            n_touched = 0
            for i in range(indptr[v], indptr[v + 1]):
                c = membership[indices[i]]
                if not seen[c]:
                    seen[c] = 1
                    touched[n_touched] = c
                    n_touched += 1
                link[c] += weights[i]

            comm_deg[own] -= kv
            comm_size[own] -= 1
            if comm_size[own] == 0:
                comm_deg[own] = 0.0
            own_gain = link[own] / m - scale * kv * comm_deg[own]

            best_c = -1
            best_gain = 0.0
            for t in range(n_touched):
                c = touched[t]
                if c == own:
                    continue
                g = link[c] / m - scale * kv * comm_deg[c]
                if best_c < 0 or g > best_gain + TIE_EPS or (g >= best_gain - TIE_EPS and c < best_c):
                    best_c = c
                    best_gain = g
            if comm_size[own] > 0 and n_empty > 0:
                c = empty[n_empty - 1]
                if best_c < 0 or 0.0 > best_gain + TIE_EPS or (0.0 >= best_gain - TIE_EPS and c < best_c):
                    best_c = c
                    best_gain = 0.0

            if best_c >= 0 and best_gain - own_gain > tolerance:
                if comm_size[best_c] == 0:
                    n_empty -= 1
                if comm_size[own] == 0:
                    empty[n_empty] = own
                    n_empty += 1
                membership[v] = best_c
                comm_deg[best_c] += kv
                comm_size[best_c] += 1
                moves += 1
                sweep_gain += best_gain - own_gain
            else:
                comm_deg[own] += kv
                comm_size[own] += 1

            for t in range(n_touched):
                c = touched[t]
                link[c] = 0.0
                seen[c] = 0
        total_moves += moves
        if moves == 0 or sweep_gain <= tolerance:
            break
    return total_moves, sweeps


cdef inline double _map_delta(double total_exit, double qa, double pa, double qa2, double pa2,
                              double qb, double pb, double qb2, double pb2) nogil:
    cdef double new_total = total_exit - qa - qb + qa2 + qb2
    return (
        _plogp(new_total) - _plogp(total_exit)
        - 2.0 * (_plogp(qa2) + _plogp(qb2) - _plogp(qa) - _plogp(qb))
        + _plogp(qa2 + pa2) + _plogp(qb2 + pb2) - _plogp(qa + pa) - _plogp(qb + pb)
    )


def move_nodes_mapequation(const cnp.int64_t[:] indptr, const cnp.int64_t[:] indices,
                           const double[:] flows, const double[:] node_flow,
                           cnp.int64_t[:] membership, const cnp.int64_t[:] order,
                           double tolerance, long max_sweeps):
    cdef Py_ssize_t n = node_flow.shape[0]
    cdef Py_ssize_t v, i, c, a, best_c, t, n_touched, n_empty, idx
    cdef double s, pv, ov, qa, pa, qa2, pa2, qb, pb, qb2, d, best_delta, total_exit, sweep_gain
    cdef long moves, total_moves = 0, sweeps = 0

    cdef double[:] out = np.zeros(n)
    cdef double[:] mod_flow = np.zeros(n)
    cdef double[:] mod_exit = np.zeros(n)
    cdef cnp.int64_t[:] mod_size = np.zeros(n, dtype=np.int64)
    cdef double[:] link = np.zeros(n)
    cdef cnp.uint8_t[:] seen = np.zeros(n, dtype=np.uint8)
    cdef cnp.int64_t[:] touched = np.zeros(n, dtype=np.int64)
    cdef cnp.int64_t[:] empty = np.zeros(n, dtype=np.int64)

    for v in range(n):
        s = 0.0
        for i in range(indptr[v], indptr[v + 1]):
            s += flows[i]
        out[v] = s
    for v in range(n):
        c = membership[v]
        mod_flow[c] += node_flow[v]
        mod_size[c] += 1
        for i in range(indptr[v], indptr[v + 1]):
            if membership[indices[i]] != c:
                mod_exit[c] += flows[i]
    n_empty = 0
    for c in range(n - 1, -1, -1):
        if mod_size[c] == 0:
            empty[n_empty] = c
            n_empty += 1

    while sweeps < max_sweeps:
        sweeps += 1
        moves = 0
        sweep_gain = 0.0
        total_exit = 0.0
        for c in range(n):
            total_exit += mod_exit[c]
        for idx in range(order.shape[0]):
            v = order[idx]
            a = membership[v]
            pv = node_flow[v]
            ov = out[v]
            n_touched = 0
            for i in range(indptr[v], indptr[v + 1]):
                c = membership[indices[i]]
                if not seen[c]:
                    seen[c] = 1
                    touched[n_touched] = c
                    n_touched += 1
                link[c] += flows[i]

            qa = mod_exit[a]
            pa = mod_flow[a]
            if mod_size[a] == 1:
                qa2 = 0.0
                pa2 = 0.0
            else:
                qa2 = qa - ov + 2.0 * link[a]
                pa2 = pa - pv

            best_c = -1
            best_delta = 0.0
            for t in range(n_touched):
                c = touched[t]
                if c == a:
                    continue
                qb = mod_exit[c]
                pb = mod_flow[c]
                d = _map_delta(total_exit, qa, pa, qa2, pa2, qb, pb, qb + ov - 2.0 * link[c], pb + pv)
                if best_c < 0 or d < best_delta - TIE_EPS or (d <= best_delta + TIE_EPS and c < best_c):
                    best_c = c
                    best_delta = d
            if mod_size[a] > 1 and n_empty > 0:
                c = empty[n_empty - 1]
                d = _map_delta(total_exit, qa, pa, qa2, pa2, 0.0, 0.0, ov, pv)
                if best_c < 0 or d < best_delta - TIE_EPS or (d <= best_delta + TIE_EPS and c < best_c):
                    best_c = c
                    best_delta = d

            if best_c >= 0 and best_delta < -tolerance:
                qb = mod_exit[best_c]
                qb2 = qb + ov - 2.0 * link[best_c]
                total_exit = total_exit - qa - qb + qa2 + qb2
                if mod_size[best_c] == 0:
                    n_empty -= 1
                mod_exit[a] = qa2
                mod_flow[a] = pa2
                mod_size[a] -= 1
                if mod_size[a] == 0:
                    empty[n_empty] = a
                    n_empty += 1
                mod_exit[best_c] = qb2
                mod_flow[best_c] += pv
                mod_size[best_c] += 1
                membership[v] = best_c
                moves += 1
                sweep_gain -= best_delta

            for t in range(n_touched):
                c = touched[t]
                link[c] = 0.0
                seen[c] = 0
        total_moves += moves
        if moves == 0 or sweep_gain <= tolerance:
            break
    return total_moves, sweeps


def refine_partition(const cnp.int64_t[:] indptr, const cnp.int64_t[:] indices,
                     const double[:] weights, const double[:] node_weight,
                     const cnp.int64_t[:] membership, const cnp.int64_t[:] order,
                     const double[:] uniforms, double resolution, double randomness):
    cdef Py_ssize_t n = node_weight.shape[0]
    cdef Py_ssize_t v, u, i, c, j, step, t, n_touched, n_cands, chosen
    cdef double two_m = 0.0, s, kv, big, g, top, total, target, acc, e

    cdef cnp.int64_t[:] refined = np.arange(n, dtype=np.int64)
    for v in range(n):
        two_m += node_weight[v]
    if two_m <= 0.0:
        return np.asarray(refined).tolist()

    cdef double[:] parent_deg = np.zeros(n)
    cdef double[:] ref_deg = np.array(node_weight, dtype=np.float64)
    cdef double[:] ref_ext = np.zeros(n)
    cdef cnp.int64_t[:] ref_size = np.ones(n, dtype=np.int64)
    cdef double[:] link = np.zeros(n)
    cdef cnp.uint8_t[:] seen = np.zeros(n, dtype=np.uint8)
    cdef cnp.int64_t[:] touched = np.zeros(n, dtype=np.int64)
    cdef cnp.int64_t[:] cands = np.zeros(n + 1, dtype=np.int64)
    cdef double[:] gains = np.zeros(n + 1)
    cdef double[:] probs = np.zeros(n + 1)

    for v in range(n):
        parent_deg[membership[v]] += node_weight[v]
    for v in range(n):
        s = 0.0
        for i in range(indptr[v], indptr[v + 1]):
            if membership[indices[i]] == membership[v]:
                s += weights[i]
        ref_ext[v] = s

    for step in range(order.shape[0]):
        v = order[step]
        if refined[v] != v or ref_size[v] != 1:
            continue
        kv = node_weight[v]
        big = parent_deg[membership[v]]
        if ref_ext[v] < resolution * kv * (big - kv) / two_m:
            continue
        n_touched = 0
        for i in range(indptr[v], indptr[v + 1]):
            u = indices[i]
            if membership[u] != membership[v]:
                continue
            c = refined[u]
            if not seen[c]:
                seen[c] = 1
                touched[n_touched] = c
                n_touched += 1
            link[c] += weights[i]
        np.asarray(touched[:n_touched]).sort()

        cands[0] = v
        gains[0] = 0.0
        n_cands = 1
        for t in range(n_touched):
            c = touched[t]
            if c == v:
                continue
            if ref_ext[c] < resolution * ref_deg[c] * (big - ref_deg[c]) / two_m:
                continue
            g = link[c] - resolution * kv * ref_deg[c] / two_m
            if g >= 0.0:
                cands[n_cands] = c
                gains[n_cands] = g
                n_cands += 1
        top = gains[0]
        for j in range(n_cands):
            if gains[j] > top:
                top = gains[j]
        total = 0.0
        for j in range(n_cands):
            e = exp((gains[j] - top) / randomness)
            probs[j] = e
            total += e
        target = uniforms[step] * total
        chosen = cands[n_cands - 1]
        acc = 0.0
        for j in range(n_cands):
            acc += probs[j]
            if acc >= target:
                chosen = cands[j]
                break

        if chosen != v:
            refined[v] = chosen
            ref_ext[chosen] = ref_ext[chosen] + ref_ext[v] - 2.0 * link[chosen]
            ref_deg[chosen] += kv
            ref_size[chosen] += 1
            ref_size[v] = 0

        for t in range(n_touched):
            c = touched[t]
            link[c] = 0.0
            seen[c] = 0
    return np.asarray(refined).tolist()
