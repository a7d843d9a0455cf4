#!/usr/bin/env python3
"""Independent brute-force oracle for golden test values.

Works literally from the all-pairs distance matrix definitions:
  D_id(G)  = (1/n) sum_j I(d_ij = d)            (d = 0..dmax)
  Dbar(G)  = mean of D_i over nodes
  N(G)     = JSD(D_1..D_n) / ln(dmax+1)         (natural log)
  D(G,G')  = 0.5*sqrt(JSD(Dbar,Dbar')/ln 2) + 0.5*|sqrt(N)-sqrt(N')|
  P_kd(G)  = sum_i I(n*D_id = k)
  Pcal_kd  = (1/n) P_kd * (sum_k' k' P_k'd) / (sum_c n_c^2)
  P(G,G')  = JSD_2(Pcal, Pcal')                 (base-2 log)
Everything is computed with floating point from first principles,
independent of the Rust implementation.
"""
import math
import itertools
from fractions import Fraction


def bfs_matrix(n, edges):
    """all-pairs hop distances; None = unreachable"""
    adj = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    dist = [[None] * n for _ in range(n)]
    for s in range(n):
        dist[s][s] = 0
        q = [s]
        while q:
            nxt = []
            for u in q:
                for w in adj[u]:
                    if dist[s][w] is None:
                        dist[s][w] = dist[s][u] + 1
                        nxt.append(w)
            q = nxt
    return dist


def entropy(p, base=math.e):
    return -sum(x * math.log(x, base) for x in p if x > 0.0)


def jsd(dists, base=math.e, weights=None):
    k = len(dists)
    if weights is None:
        weights = [1.0 / k] * k
    L = max(len(d) for d in dists)
    dd = [list(d) + [0.0] * (L - len(d)) for d in dists]
    mix = [sum(w * d[i] for w, d in zip(weights, dd)) for i in range(L)]
    return entropy(mix, base) - sum(w * entropy(d, base) for w, d in zip(weights, dd))


def node_dist_rows(n, dist):
    dmax = max((d for row in dist for d in row if d is not None), default=0)
    rows = []
    for i in range(n):
        row = [0.0] * (dmax + 1)
        for j in range(n):
            if dist[i][j] is not None:
                row[dist[i][j]] += 1.0 / n
        rows.append(row)
    return rows, dmax


def renorm(v):
    s = sum(v)
    return [x / s for x in v]


def node_dispersion(n, edges):
    dist = bfs_matrix(n, edges)
    rows, dmax = node_dist_rows(n, dist)
    if dmax == 0:
        raise ValueError("degenerate")
    rows = [renorm(r) for r in rows]
    return jsd(rows) / math.log(dmax + 1)


def mean_distribution(n, edges):
    dist = bfs_matrix(n, edges)
    rows, dmax = node_dist_rows(n, dist)
    mean = [sum(r[d] for r in rows) / n for d in range(dmax + 1)]
    return renorm(mean)


def d_measure(g1, g2):
    (n1, e1), (n2, e2) = g1, g2
    m1, m2 = mean_distribution(n1, e1), mean_distribution(n2, e2)
    t1 = 0.5 * math.sqrt(jsd([m1, m2]) / math.log(2))
    nd1, nd2 = node_dispersion(n1, e1), node_dispersion(n2, e2)
    t2 = 0.5 * abs(math.sqrt(nd1) - math.sqrt(nd2))
    return t1 + t2


def portrait(n, edges):
    dist = bfs_matrix(n, edges)
    dmax = max((d for row in dist for d in row if d is not None), default=0)
    P = [[0] * (n + 1) for _ in range(dmax + 1)]
    for i in range(n):
        for d in range(dmax + 1):
            k = sum(1 for j in range(n) if dist[i][j] == d)
            P[d][k] += 1
    return P


def portrait_prob(n, edges):
    dist = bfs_matrix(n, edges)
    P = portrait(n, edges)
    # component sizes via reachability
    comp_sq = sum(sum(1 for j in range(n) if dist[i][j] is not None) for i in range(n))
    out = {}
    for d, row in enumerate(P):
        wd = sum(k * c for k, c in enumerate(row)) / comp_sq
        for k, c in enumerate(row):
            if c:
                out[(k, d)] = (c / n) * wd
    return out


def portrait_divergence(g1, g2):
    p1, p2 = portrait_prob(*g1), portrait_prob(*g2)
    keys = sorted(set(p1) | set(p2))
    v1 = [p1.get(k, 0.0) for k in keys]
    v2 = [p2.get(k, 0.0) for k in keys]
    assert abs(sum(v1) - 1) < 1e-12 and abs(sum(v2) - 1) < 1e-12
    return jsd([v1, v2], base=2)


K3 = (3, [(0, 1), (1, 2), (0, 2)])
P3 = (3, [(0, 1), (1, 2)])
P4 = (4, [(0, 1), (1, 2), (2, 3)])
STAR4 = (4, [(0, 1), (0, 2), (0, 3)])

print("N(P3)        = %.15f" % node_dispersion(*P3))
print("N(star4)     = %.15f" % node_dispersion(*STAR4))
print("N(P4)        = %.15f" % node_dispersion(*P4))
print("D(K3,P3)     = %.15f" % d_measure(K3, P3))
print("D(star4,P4)  = %.15f" % d_measure(STAR4, P4))
print("PD(star4,P4) = %.15f" % portrait_divergence(STAR4, P4))
print("portrait(P3) =", portrait(*P3))

# --- criterion-5 fixture: ring of 4 cliques K8, single bridges ---
edges = []
for c in range(4):
    base = 8 * c
    for i in range(8):
        for j in range(i + 1, 8):
            edges.append((base + i, base + j))
for c in range(4):
    edges.append((8 * c + 7, (8 * c + 8) % 32))
n = 32
m = len(edges)
deg = [0] * n
for u, v in edges:
    deg[u] += 1
    deg[v] += 1
dist = bfs_matrix(n, edges)
pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
ds = [dist[i][j] for i, j in pairs]
mean_d = Fraction(sum(ds), len(ds))
# clustering
adjset = [set() for _ in range(n)]
for u, v in edges:
    adjset[u].add(v)
    adjset[v].add(u)
Cs = []
for i in range(n):
    k = len(adjset[i])
    if k <= 1:
        Cs.append(Fraction(0))
        continue
    t = sum(1 for x, y in itertools.combinations(sorted(adjset[i]), 2) if y in adjset[x])
    Cs.append(Fraction(2 * t, k * (k - 1)))
meanC = sum(Cs) / n
# assortativity over both orientations
xs = []
for u, v in edges:
    xs.append((deg[u], deg[v]))
    xs.append((deg[v], deg[u]))
N = len(xs)
Ex = sum(x for x, _ in xs) / N
Exy = sum(x * y for x, y in xs) / N
Ex2 = sum(x * x for x, _ in xs) / N
r = (Exy - Ex * Ex) / (Ex2 - Ex * Ex)
# planted modularity: 4 cliques
Q = 4 * (Fraction(28, m) - Fraction(58, 2 * m) ** 2)
print("\nfixture: n=%d m=%d" % (n, m))
print("mean_degree  = %.15f" % (2 * m / n))
print("mean_C       = %.15f  (%s)" % (float(meanC), meanC))
print("mean_d       = %.15f  (%s)" % (float(mean_d), mean_d))
print("d_max        = %d" % max(ds))
print("r            = %.15f" % r)
print("Q(planted)   = %.15f  (%s)" % (float(Q), Q))
print("N(fixture)   = %.15f" % node_dispersion(n, edges))

# WS lattice n=10 k=4 clustering (spec says 0.5)
lat = []
for i in range(10):
    for j in (1, 2):
        lat.append((i, (i + j) % 10))
adjset = [set() for _ in range(10)]
for u, v in lat:
    adjset[u].add(v)
    adjset[v].add(u)
cs = []
for i in range(10):
    k = len(adjset[i])
    t = sum(1 for x, y in itertools.combinations(sorted(adjset[i]), 2) if y in adjset[x])
    cs.append(2 * t / (k * (k - 1)))
print("\nWS lattice n=10 k=4 meanC = %.15f" % (sum(cs) / 10))
