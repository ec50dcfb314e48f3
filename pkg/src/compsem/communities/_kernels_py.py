"""Pure-Python local-moving kernels.

Reference twin of ``_kernels.pyx``: same arguments, same arithmetic order,
same tie-breaking, so both backends return identical partitions.  Graphs
arrive as CSR arrays without self-loops; per-node weights (degree for
modularity, visit rate for the map equation) carry whatever the self-loops
of an aggregated graph contributed.
"""

from math import exp, log2

# Gains closer than this are treated as equal; the lower community id wins.
TIE_EPS = 1e-13


def _plogp(x):
    return x * log2(x) if x > 0.0 else 0.0


def move_nodes_modularity(indptr, indices, weights, node_weight, membership, order,
                          resolution, tolerance, max_sweeps):
    """Greedy node moves maximising modularity.  Updates ``membership`` in place.

    Returns ``(moves, sweeps)``.
    """
    n = len(node_weight)
    ptr = indptr.tolist()
    nbr = indices.tolist()
    w = weights.tolist()
    k = node_weight.tolist()
    memb = membership.tolist()
    visit = order.tolist()

    two_m = 0.0
    for v in range(n):
        two_m += k[v]
    if two_m <= 0.0:
        return 0, 0
    m = two_m / 2.0
    scale = resolution / (2.0 * m * m)

    comm_deg = [0.0] * n
    comm_size = [0] * n
    for v in range(n):
        comm_deg[memb[v]] += k[v]
        comm_size[memb[v]] += 1
    empty = [c for c in range(n - 1, -1, -1) if comm_size[c] == 0]

    link = [0.0] * n
    seen = [False] * n
    touched = []
    total_moves = 0
    sweeps = 0
    while sweeps < max_sweeps:
        sweeps += 1
        moves = 0
        sweep_gain = 0.0
        for v in visit:
            own = memb[v]
            kv = k[v]
            for i in range(ptr[v], ptr[v + 1]):
                c = memb[nbr[i]]
                if not seen[c]:
                    seen[c] = True
                    touched.append(c)
                link[c] += w[i]

            comm_deg[own] -= kv
            comm_size[own] -= 1
            if comm_size[own] == 0:
                comm_deg[own] = 0.0
            own_gain = link[own] / m - scale * kv * comm_deg[own]

            best_c = -1
            best_gain = 0.0
            for c in touched:
                if c == own:
                    continue
                g = link[c] / m - scale * kv * comm_deg[c]
                if best_c < 0 or g > best_gain + TIE_EPS or (g >= best_gain - TIE_EPS and c < best_c):
                    best_c = c
                    best_gain = g
            if comm_size[own] > 0 and empty:
                c = empty[-1]
                if best_c < 0 or 0.0 > best_gain + TIE_EPS or (0.0 >= best_gain - TIE_EPS and c < best_c):
                    best_c = c
                    best_gain = 0.0

            if best_c >= 0 and best_gain - own_gain > tolerance:
                if comm_size[best_c] == 0:
                    empty.pop()
                if comm_size[own] == 0:
                    empty.append(own)
                memb[v] = best_c
                comm_deg[best_c] += kv
                comm_size[best_c] += 1
                moves += 1
                sweep_gain += best_gain - own_gain
            else:
                comm_deg[own] += kv
                comm_size[own] += 1

            for c in touched:
                link[c] = 0.0
                seen[c] = False
            touched.clear()
        total_moves += moves
        if moves == 0 or sweep_gain <= tolerance:
            break

    membership[:] = memb
    return total_moves, sweeps


def _map_delta(total_exit, qa, pa, qa2, pa2, qb, pb, qb2, pb2):
    new_total = total_exit - qa - qb + qa2 + qb2
    return (
        _plogp(new_total) - _plogp(total_exit)
        - 2.0 * (_plogp(qa2) + _plogp(qb2) - _plogp(qa) - _plogp(qb))
        + _plogp(qa2 + pa2) + _plogp(qb2 + pb2) - _plogp(qa + pa) - _plogp(qb + pb)
    )


def move_nodes_mapequation(indptr, indices, flows, node_flow, membership, order,
                           tolerance, max_sweeps):
    """Greedy node moves minimising the two-level map equation.

    ``flows`` are undirected edge flows (weight / 2m) and ``node_flow`` the
    stationary visit rates.  Updates ``membership`` in place and returns
    ``(moves, sweeps)``.
    """
    n = len(node_flow)
    ptr = indptr.tolist()
    nbr = indices.tolist()
    f = flows.tolist()
    p = node_flow.tolist()
    memb = membership.tolist()
    visit = order.tolist()

    out = [0.0] * n
    for v in range(n):
        s = 0.0
        for i in range(ptr[v], ptr[v + 1]):
            s += f[i]
        out[v] = s

    mod_flow = [0.0] * n
    mod_exit = [0.0] * n
    mod_size = [0] * n
    for v in range(n):
        c = memb[v]
        mod_flow[c] += p[v]
        mod_size[c] += 1
        for i in range(ptr[v], ptr[v + 1]):
            if memb[nbr[i]] != c:
                mod_exit[c] += f[i]
    empty = [c for c in range(n - 1, -1, -1) if mod_size[c] == 0]

    link = [0.0] * n
    seen = [False] * n
    touched = []
    total_moves = 0
    sweeps = 0
    while sweeps < max_sweeps:
        sweeps += 1
        moves = 0
        sweep_gain = 0.0
        total_exit = 0.0
        for c in range(n):
            total_exit += mod_exit[c]
        for v in visit:
            a = memb[v]
            pv = p[v]
            ov = out[v]
            for i in range(ptr[v], ptr[v + 1]):
                c = memb[nbr[i]]
                if not seen[c]:
                    seen[c] = True
                    touched.append(c)
                link[c] += f[i]

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
            for c in touched:
                if c == a:
                    continue
                qb = mod_exit[c]
                pb = mod_flow[c]
                d = _map_delta(total_exit, qa, pa, qa2, pa2, qb, pb, qb + ov - 2.0 * link[c], pb + pv)
                if best_c < 0 or d < best_delta - TIE_EPS or (d <= best_delta + TIE_EPS and c < best_c):
                    best_c = c
                    best_delta = d
            if mod_size[a] > 1 and empty:
                c = empty[-1]
                d = _map_delta(total_exit, qa, pa, qa2, pa2, 0.0, 0.0, ov, pv)
                if best_c < 0 or d < best_delta - TIE_EPS or (d <= best_delta + TIE_EPS and c < best_c):
                    best_c = c
                    best_delta = d

            if best_c >= 0 and best_delta < -tolerance:
                qb = mod_exit[best_c]
                qb2 = qb + ov - 2.0 * link[best_c]
                total_exit = total_exit - qa - qb + qa2 + qb2
                if mod_size[best_c] == 0:
                    empty.pop()
                mod_exit[a] = qa2
                mod_flow[a] = pa2
                mod_size[a] -= 1
                if mod_size[a] == 0:
                    empty.append(a)
                mod_exit[best_c] = qb2
                mod_flow[best_c] += pv
                mod_size[best_c] += 1
                memb[v] = best_c
                moves += 1
                sweep_gain -= best_delta

            for c in touched:
                link[c] = 0.0
                seen[c] = False
            touched.clear()
        total_moves += moves
        if moves == 0 or sweep_gain <= tolerance:
            break

    membership[:] = memb
    return total_moves, sweeps


def refine_partition(indptr, indices, weights, node_weight, membership, order, uniforms,
                     resolution, randomness):
    """Randomised merge of singletons inside each community, kept connected.

    Nodes are visited in ``order``; ``uniforms[i]`` is the random draw used
    for the ``i``-th visited node.  Returns the refined labels as a list.
    """
    n = len(node_weight)
    ptr = indptr.tolist()
    nbr = indices.tolist()
    w = weights.tolist()
    k = node_weight.tolist()
    parent = membership.tolist()
    visit = order.tolist()
    draws = uniforms.tolist()

    two_m = 0.0
    for v in range(n):
        two_m += k[v]
    refined = list(range(n))
    if two_m <= 0.0:
        return refined

    parent_deg = [0.0] * n
    for v in range(n):
        parent_deg[parent[v]] += k[v]
    ref_deg = list(k)
    ref_ext = [0.0] * n
    ref_size = [1] * n
    for v in range(n):
        s = 0.0
        for i in range(ptr[v], ptr[v + 1]):
            if parent[nbr[i]] == parent[v]:
                s += w[i]
        ref_ext[v] = s

    link = [0.0] * n
    seen = [False] * n
    touched = []
    for step in range(len(visit)):
        v = visit[step]
        if refined[v] != v or ref_size[v] != 1:
            continue
        kv = k[v]
        big = parent_deg[parent[v]]
        if ref_ext[v] < resolution * kv * (big - kv) / two_m:
            continue
        for i in range(ptr[v], ptr[v + 1]):
            u = nbr[i]
            if parent[u] != parent[v]:
                continue
            c = refined[u]
            if not seen[c]:
                seen[c] = True
                touched.append(c)
            link[c] += w[i]

        cands = [v]
        gains = [0.0]
        touched.sort()
        for c in touched:
            if c == v:
                continue
            if ref_ext[c] < resolution * ref_deg[c] * (big - ref_deg[c]) / two_m:
                continue
            g = link[c] - resolution * kv * ref_deg[c] / two_m
            if g >= 0.0:
                cands.append(c)
                gains.append(g)
        top = gains[0]
        for g in gains:
            if g > top:
                top = g
        total = 0.0
        probs = []
        for g in gains:
            e = exp((g - top) / randomness)
            probs.append(e)
            total += e
        target = draws[step] * total
        chosen = cands[-1]
        acc = 0.0
        for j in range(len(cands)):
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

        for c in touched:
            link[c] = 0.0
            seen[c] = False
        touched.clear()
    return refined
