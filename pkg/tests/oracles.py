"""Brute-force reference computations on plain tuples; no package code beyond parsing."""
from itertools import combinations


def mul(p, q):
    # apply p, then q
    return tuple(q[x] for x in p)


def closure(gens, degree):
    ident = tuple(range(degree))
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = mul(x, g)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return frozenset(seen)


def order_of(p):
    ident = tuple(range(len(p)))
    k, x = 1, p
    while x != ident:
        x = mul(x, p)
        k += 1
    return k


def all_subgroups(gens, degree):
    """Every subgroup (trivial and whole group included) as frozensets of image tuples.

    Cyclic-seeded closure under joins with every cyclic subgroup; keyed by the
    full sorted element list.
    """
    G = closure(gens, degree)
    cyclic = {}
    for x in G:
        c = closure([x], degree)
        cyclic[tuple(sorted(c))] = c
    found = dict(cyclic)
    frontier = list(found.values())
    while frontier:
        nxt = []
        for H in frontier:
            for C in cyclic.values():
                if C <= H:
                    continue
                K = closure(list(H | C), degree) if len(H) * len(C) < 64 else closure(_gens(H, degree) + _gens(C, degree), degree)
                key = tuple(sorted(K))
                if key not in found:
                    found[key] = K
                    nxt.append(K)
        frontier = nxt
    return G, list(found.values())


def _gens(H, degree):
    # a generating set: greedily add elements not yet generated
    gens = []
    cur = frozenset([tuple(range(degree))])
    for x in sorted(H):
        if x not in cur:
            gens.append(x)
            cur = closure(gens, degree)
            if len(cur) == len(H):
                break
    return gens


def intersection_graph(subgroups, degree):
    """Vertex list and adjacency sets for the non-trivial proper subgroups."""
    ident = tuple(range(degree))
    size = max(len(H) for H in subgroups)
    verts = [H for H in subgroups if 1 < len(H) < size]
    adj = {i: set() for i in range(len(verts))}
    for i, j in combinations(range(len(verts)), 2):
        if (verts[i] & verts[j]) - {ident}:
            adj[i].add(j)
            adj[j].add(i)
    return verts, adj


def bfs(adj, s):
    dist = {s: 0}
    frontier = [s]
    while frontier:
        nxt = []
        for u in frontier:
            for v in adj[u]:
                if v not in dist:
                    dist[v] = dist[u] + 1
                    nxt.append(v)
        frontier = nxt
    return dist


def diameter(adj):
    n = len(adj)
    best = 0
    for s in adj:
        d = bfs(adj, s)
        if len(d) < n:
            return None
        best = max(best, max(d.values()))
    return best
