#!/usr/bin/env python3
"""Regenerate assets/conway_smith.txt and assets/doro.txt.

Conway-Smith: a Z3 voltage cover of the Kneser graph K(7,2) whose voltages
form a GF(3) triangle cocycle that is not a coboundary.

Doro: the 65 Baer sublines of PG(1,25) in one PSL(2,25) orbit, adjacent
when disjoint.

The library re-certifies both files on load, so this script is provenance
only.  Usage: gen_assets.py [outdir]
"""
import itertools
import os
import sys
from collections import deque


def bfs(adj, s):
    d = [-1] * len(adj)
    d[s] = 0
    q = deque([s])
    while q:
        x = q.popleft()
        for y in adj[x]:
            if d[y] < 0:
                d[y] = d[x] + 1
                q.append(y)
    return d


def intersection_array(adj):
    b, c = {}, {}
    for x in range(len(adj)):
        d = bfs(adj, x)
        if -1 in d:
            return None
        for y in range(len(adj)):
            i = d[y]
            ci = sum(1 for z in adj[y] if d[z] == i - 1)
            bi = sum(1 for z in adj[y] if d[z] == i + 1)
            if b.setdefault(i, bi) != bi or c.setdefault(i, ci) != ci:
                return None
    D = max(b)
    return [b[i] for i in range(D)], [c[i] for i in range(1, D + 1)]


def rref_mod(rows, ncols, p):
    rows = [list(r) for r in rows]
    piv = []
    r = 0
    for col in range(ncols):
        pr = next((i for i in range(r, len(rows)) if rows[i][col] % p), None)
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        inv = pow(rows[r][col], p - 2, p)
        rows[r] = [(v * inv) % p for v in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][col]:
                f = rows[i][col]
                rows[i] = [(a - f * b) % p for a, b in zip(rows[i], rows[r])]
        piv.append(col)
        r += 1
        if r == len(rows):
            break
    return rows[:r], piv


def conway_smith():
    pairs = list(itertools.combinations(range(7), 2))
    n = len(pairs)
    edges = [(i, j) for i in range(n) for j in range(i + 1, n)
             if not set(pairs[i]) & set(pairs[j])]
    eid = {e: k for k, e in enumerate(edges)}
    tris = [(a, b, c) for a, b, c in itertools.combinations(range(n), 3)
            if (a, b) in eid and (b, c) in eid and (a, c) in eid]
    m = len(edges)
    # x_ab + x_bc - x_ac = 0 on every triangle
    rows = []
    for a, b, c in tris:
        row = [0] * m
        row[eid[(a, b)]] = 1
        row[eid[(b, c)]] = 1
        row[eid[(a, c)]] = 2
        rows.append(row)
    R, piv = rref_mod(rows, m, 3)
    free = [col for col in range(m) if col not in piv]
    basis = []
    for f in free:
        v = [0] * m
        v[f] = 1
        for i, col in enumerate(piv):
            v[col] = (-R[i][f]) % 3
        basis.append(v)
    cob = []
    for a in range(n):
        row = [0] * m
        for k, (u, w) in enumerate(edges):
            if u == a:
                row[k] = 2
            elif w == a:
                row[k] = 1
        cob.append(row)
    Rc, _ = rref_mod(cob, m, 3)
    sol = next(v for v in basis if len(rref_mod(Rc + [v], m, 3)[0]) > len(Rc))
    N = 3 * n
    adj = [set() for _ in range(N)]
    for k, (a, b) in enumerate(edges):
        for i in range(3):
            u, w = a * 3 + i, b * 3 + (i + sol[k]) % 3
            adj[u].add(w)
            adj[w].add(u)
    return [sorted(s) for s in adj]


def doro():
    # GF(25) = GF(5)[s]/(s^2 - 2), element a + b s stored as (a, b)
    F = [(a, b) for a in range(5) for b in range(5)]

    def add(x, y):
        return ((x[0] + y[0]) % 5, (x[1] + y[1]) % 5)

    def mul(x, y):
        return ((x[0] * y[0] + 2 * x[1] * y[1]) % 5, (x[0] * y[1] + x[1] * y[0]) % 5)

    def neg(x):
        return ((-x[0]) % 5, (-x[1]) % 5)

    Z, O = (0, 0), (1, 0)
    inv = {x: y for x in F for y in F if mul(x, y) == O}
    INF = 'inf'

    def mob(M, z):
        a, b, c, d = M
        if z == INF:
            return INF if c == Z else mul(a, inv[c])
        num, den = add(mul(a, z), b), add(mul(c, z), d)
        return INF if den == Z else mul(num, inv[den])

    base = frozenset([(i, 0) for i in range(5)] + [INF])
    squares = {mul(x, x) for x in F if x != Z}
    orbit = set()
    for a, b, c, d in itertools.product(F, repeat=4):
        det = add(mul(a, d), neg(mul(b, c)))
        if det == Z or det not in squares:
            continue
        orbit.add(frozenset(mob((a, b, c, d), z) for z in base))

    def key(S):
        return sorted((99, 99) if p == INF else p for p in S)

    orb = sorted(orbit, key=key)
    return [sorted(j for j in range(len(orb)) if j != i and not (orb[i] & orb[j]))
            for i in range(len(orb))]


def write(path, adj):
    with open(path, "w") as f:
        f.write("n %d\n" % len(adj))
        for i, a in enumerate(adj):
            f.write("%d: %s\n" % (i, " ".join(map(str, a))))


def main():
    out = sys.argv[1] if len(sys.argv) > 1 else os.path.join(os.path.dirname(__file__), "..", "assets")
    cs = conway_smith()
    assert intersection_array([set(a) for a in cs]) == ([10, 6, 4, 1], [1, 2, 6, 10])
    write(os.path.join(out, "conway_smith.txt"), cs)
    dr = doro()
    assert intersection_array([set(a) for a in dr]) == ([10, 6, 4], [1, 2, 5])
    write(os.path.join(out, "doro.txt"), dr)


if __name__ == "__main__":
    main()
