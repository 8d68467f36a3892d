"""Random two-sided functors ``P(x) x Q(y)`` over small posets and cyclic groups."""

import random

from fockcat.fincat import cyclic, poset
from fockcat.setprof import TableProfunctor


def random_tree_poset(rng, n):
    names = [f"p{i}" for i in range(n)]
    parent = {i: rng.randrange(i) for i in range(1, n) if rng.random() < 0.8}
    C = poset(names, [(names[p], names[c]) for c, p in parent.items()])
    return C, parent


def _path_maps(rng, C, parent, sizes, contravariant):
    """Maps along every morphism of a tree poset, composed from random edge maps."""
    # covariant: Q(p) -> Q(c) indexed by Q(p); contravariant: P(c) -> P(p) indexed by P(c)
    edge = {}
    for c, p in parent.items():
        if contravariant:
            edge[c] = tuple(rng.randrange(sizes[p]) for _ in range(sizes[c]))
        else:
            edge[c] = tuple(rng.randrange(sizes[c]) for _ in range(sizes[p]))
    maps = {}
    for f in C.all_morphisms():
        x, y = C.src(f), C.dst(f)
        chain = []
        z = y
        while z != x:
            chain.append(z)
            z = parent[z]
        chain.reverse()  # children from just below x down to y
        if contravariant:   # P(y) -> P(x)
            t = list(range(sizes[y]))
            for z in reversed(chain):
                t = [edge[z][i] for i in t]
        else:               # Q(x) -> Q(y)
            t = list(range(sizes[x]))
            for z in chain:
                t = [edge[z][i] for i in t]
        maps[f] = tuple(t)
    return maps


def _cyclic_action(rng, n, size):
    """A permutation of ``range(size)`` whose cycle lengths divide ``n``."""
    divs = [d for d in range(1, n + 1) if n % d == 0]
    perm, rest = [0] * size, list(range(size))
    rng.shuffle(rest)
    while rest:
        d = rng.choice([d for d in divs if d <= len(rest)])
        cyc, rest = rest[:d], rest[d:]
        for i, x in enumerate(cyc):
            perm[x] = cyc[(i + 1) % d]
    return perm


def random_instance(seed, max_nodes=200):
    """``(C, H)`` with ``H(x, y) = P(x) x Q(y)`` and at most ``max_nodes`` diagonal nodes."""
    rng = random.Random(seed)
    while True:
        if rng.random() < 0.5:
            C, parent = random_tree_poset(rng, rng.randint(1, 8))
            n = C.n_objects
            ps = [rng.randint(1, 7) for _ in range(n)]
            qs = [rng.randint(1, 7) for _ in range(n)]
            pm = _path_maps(rng, C, parent, ps, True)
            qm = _path_maps(rng, C, parent, qs, False)
        else:
            k = rng.randint(2, 4)
            C = cyclic(k)
            ps, qs = [rng.randint(1, 14)], [rng.randint(1, 14)]
            pa, qa = _cyclic_action(rng, k, ps[0]), _cyclic_action(rng, k, qs[0])
            # generator s acts by pa / qa; s^j by powers
            pm, qm = {}, {}
            for f in C.all_morphisms():
                j = f  # morphism f is s^f in the cyclic builder
                tp, tq = list(range(ps[0])), list(range(qs[0]))
                for _ in range(j):
                    tp = [pa[i] for i in tp]
                    tq = [qa[i] for i in tq]
                pm[f], qm[f] = tuple(tp), tuple(tq)
        if sum(ps[z] * qs[z] for z in range(C.n_objects)) <= max_nodes:
            break
    H = product_profunctor(C, ps, qs, pm, qm)
    return C, H


def product_profunctor(C, ps, qs, pm, qm):
    """``H(x, y) = P(x) x Q(y)`` as a table profunctor ``C -/-> C``.

    ``pm[f]`` maps ``P(dst f) -> P(src f)``; ``qm[f]`` maps ``Q(src f) -> Q(dst f)``.
    """
    n = C.n_objects
    sizes = {(x, y): ps[x] * qs[y] for x in range(n) for y in range(n)}
    lact, ract = {}, {}
    for f in C.all_morphisms():
        a, a2 = C.dst(f), C.src(f)
        for y in range(n):
            lact[(f, y)] = tuple(pm[f][i // qs[y]] * qs[y] + i % qs[y]
                                 for i in range(ps[a] * qs[y]))
        b, b2 = C.src(f), C.dst(f)
        for x in range(n):
            ract[(x, f)] = tuple((i // qs[b]) * qs[b2] + qm[f][i % qs[b]]
                                 for i in range(ps[x] * qs[b]))
    return TableProfunctor(C, C, sizes, lact, ract, name="PxQ")
