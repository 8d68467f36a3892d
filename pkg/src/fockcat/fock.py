"""The combinatorial Fock space !C and its structure.

Objects of ``!C`` are tuples of objects of C; a morphism ``x -> y`` is a
pair ``(sigma, fs)`` with ``sigma`` a permutation (image table) and
``fs[i]: x[i] -> y[sigma[i]]``.  Composition is

    (tau, gs) o (sigma, fs) = (tau o sigma, (gs[sigma[i]] o fs[i])_i)

``FockCategory`` is the untruncated category, enumerated lazily by level
(``level(x) = sum(1 + level(x_i))``); ``fock_truncated`` materializes the
part of length at most N as a FinCat.
"""

from __future__ import annotations

import itertools
import math
import os
from functools import lru_cache
from typing import Optional, Sequence

from .coendeng import Composite, TruncationOverflow, compose_chain, prof_compose
from .fincat import (CategoryError, CoproductCategory, FinCat, Functor, LevelMap,
                     ProductCategory, apply_levels, chain_levels, coproduct, empty,
                     identity_functor, injection, join_levels, opposite, terminal)
from .setprof import (FinSet, HomAlong, Profunctor, ProfTensor, Restrict, hom_profunctor,
                      objkey, prof_restrict, prof_tensor)


class SizeOverflow(RuntimeError):
    """A generated category would exceed FOCKCAT_MAX_OBJECTS objects."""


def max_objects() -> int:
    return int(os.environ.get("FOCKCAT_MAX_OBJECTS", "100000"))


# ---------------------------------------------------------------------------
# Permutations


@lru_cache(maxsize=None)
def permutations(n: int) -> tuple:
    """Sigma_n as image tables, in lexicographic order."""
    return tuple(itertools.permutations(range(n)))


def perm_compose(t: tuple, s: tuple) -> tuple:
    """``t o s``: apply ``s`` first."""
    return tuple(t[i] for i in s)


def perm_inverse(p: tuple) -> tuple:
    out = [0] * len(p)
    for i, j in enumerate(p):
        out[j] = i
    return tuple(out)


def sigma_classify(p: tuple) -> tuple:
    """Split ``p`` in Sigma_{n+1} into ``(None, q)`` if it fixes ``n``, else ``(j, q)``.

    ``j = p(n)`` and ``q`` in Sigma_n agrees with ``p`` except that the
    position sent to ``n`` is sent to ``j`` instead.
    """
    n = len(p) - 1
    if p[n] == n:
        return None, p[:n]
    j = p[n]
    q = list(p[:n])
    q[q.index(n)] = j
    return j, tuple(q)


def sigma_unclassify(j: Optional[int], q: tuple) -> tuple:
    n = len(q)
    if j is None:
        return q + (n,)
    p = list(q) + [j]
    p[q.index(j)] = n
    return tuple(p)


def certify_sigma_split(n: int) -> bool:
    """``Sigma_{n+1} ~ Sigma_n + [n] x Sigma_n`` is a bijection via the classifier."""
    seen = set()
    for p in permutations(n + 1):
        j, q = sigma_classify(p)
        if sigma_unclassify(j, q) != p or (j, q) in seen:
            return False
        seen.add((j, q))
    expected = {(None, q) for q in permutations(n)} | {
        (j, q) for j in range(n) for q in permutations(n)}
    return seen == expected


# ---------------------------------------------------------------------------
# The Fock category


def fock_levels(m: LevelMap) -> LevelMap:
    """Level bound for ``!`` applied to something bounded by ``m`` slotwise."""
    if m is None:
        return None
    p, q = m
    return (max(p, 1 + q, 0), 0)


class FockCategory:
    """``!C`` for a protocol category C (untruncated, lazily enumerated)."""

    finite = False

    def __init__(self, base):
        self.base = base
        self._at: dict = {}
        self._upto: dict = {}
        self._hom: dict = {}
        self._reach: dict = {}
        self._reaching: dict = {}
        self._levels: dict = {}
        self._comp: dict = {}
        self._dst: dict = {}
        self._src: dict = {}

    def __eq__(self, other):
        return isinstance(other, FockCategory) and self.base == other.base

    def __hash__(self):
        return hash(("fock", self.base))

    def __repr__(self):
        return f"<!{self.base!r}>"

    def level(self, x) -> int:
        n = self._levels.get(x)
        if n is None:
            lv = self.base.level
            n = self._levels[x] = sum(1 + lv(c) for c in x)
        return n

    def objects_at(self, level: int) -> list:
        if level in self._at:
            return self._at[level]
        if level < 0:
            return []
        if level == 0:
            out = [()]
        else:
            out = [(c,) + rest
                   for k in range(1, level + 1)
                   for c in self.base.objects_at(k - 1)
                   for rest in self.objects_at(level - k)]
            if len(out) > max_objects():
                raise SizeOverflow(f"!{self.base!r} has more than {max_objects()} objects at level {level}")
            out.sort()
        self._at[level] = out
        return out

    def objects_upto(self, level: int) -> list:
        if level not in self._upto:
            out = [x for l in range(level + 1) for x in self.objects_at(l)]
            if len(out) > max_objects():
                raise SizeOverflow(f"!{self.base!r} has more than {max_objects()} objects up to level {level}")
            self._upto[level] = out
        return self._upto[level]

    def hom(self, x, y) -> tuple:
        key = (x, y)
        out = self._hom.get(key)
        if out is None:
            n = len(x)
            res = []
            if len(y) == n:
                B = self.base
                for p in permutations(n):
                    hs = [B.hom(x[i], y[p[i]]) for i in range(n)]
                    if all(hs):
                        res.extend((p, c) for c in itertools.product(*hs))
            out = self._hom[key] = tuple(res)
        return out

    def compose(self, g, f):
        key = (g, f)
        out = self._comp.get(key)
        if out is None:
            tau, gs = g
            sigma, fs = f
            comp = self.base.compose
            out = self._comp[key] = (tuple(tau[s] for s in sigma),
                                     tuple(comp(gs[s], fi) for s, fi in zip(sigma, fs)))
        return out

    def identity(self, x):
        n = len(x)
        return (tuple(range(n)), tuple(self.base.identity(c) for c in x))

    def src(self, f):
        out = self._src.get(f)
        if out is None:
            bsrc = self.base.src
            out = self._src[f] = tuple(bsrc(fi) for fi in f[1])
        return out

    def dst(self, f):
        out = self._dst.get(f)
        if out is None:
            sigma, fs = f
            lst = [None] * len(fs)
            bdst = self.base.dst
            for i, fi in enumerate(fs):
                lst[sigma[i]] = bdst(fi)
            out = self._dst[f] = tuple(lst)
        return out

    def gens_from(self, x) -> tuple:
        n = len(x)
        ident = tuple(range(n))
        ids = [self.base.identity(c) for c in x]
        out = []
        for i in range(n - 1):
            p = list(ident)
            p[i], p[i + 1] = i + 1, i
            out.append((tuple(p), tuple(ids)))
        for i in range(n):
            for g in self.base.gens_from(x[i]):
                out.append((ident, tuple(ids[:i]) + (g,) + tuple(ids[i + 1:])))
        return tuple(out)

    def gens_into(self, y) -> tuple:
        n = len(y)
        ident = tuple(range(n))
        ids = [self.base.identity(c) for c in y]
        out = []
        for i in range(n - 1):
            p = list(ident)
            p[i], p[i + 1] = i + 1, i
            comps = list(ids)
            comps[i], comps[i + 1] = ids[i + 1], ids[i]
            out.append((tuple(p), tuple(comps)))
        for i in range(n):
            for g in self.base.gens_into(y[i]):
                out.append((ident, tuple(ids[:i]) + (g,) + tuple(ids[i + 1:])))
        return tuple(out)

    def ckey(self, x):
        return tuple(sorted(self.base.ckey(c) for c in x))

    def _spread(self, options, level: Optional[int] = None) -> list:
        """All rearrangements of tuples picking one entry per slot, up to ``level``."""
        lv = self.base.level
        opts = [[(1 + lv(c), c) for c in o] for o in options]
        budget = float("inf") if level is None else level
        picks = set()

        def walk(i, used, acc):
            if i == len(opts):
                picks.add(tuple(sorted(acc, key=self.base.ckey)))
                return
            for w, c in opts[i]:
                if used + w <= budget:
                    acc.append(c)
                    walk(i + 1, used + w, acc)
                    acc.pop()
        walk(0, 0, [])
        out = set()
        for t in picks:
            out.update(itertools.permutations(t))
        return sorted(out, key=lambda y: (self.level(y), y))

    def reachable_from(self, x) -> list:
        if x not in self._reach:
            self._reach[x] = self._spread([self.base.reachable_from(c) for c in x])
        return self._reach[x]

    def reaching(self, y) -> list:
        if y not in self._reaching:
            self._reaching[y] = self._spread([self.base.reaching(c) for c in y])
        return self._reaching[y]

    def is_identity(self, f) -> bool:
        sigma, fs = f
        return sigma == tuple(range(len(sigma))) and all(
            fi == self.base.identity(self.base.src(fi)) for fi in fs)


@lru_cache(maxsize=None)
def bang(C) -> FockCategory:
    """The shared ``!C`` instance for C (caches are reused across calls)."""
    return FockCategory(C)


def fock_hom(C, xs: tuple, ys: tuple) -> tuple:
    """``!C(xs, ys)``: permutations in lexicographic order, then components."""
    return bang(C).hom(tuple(xs), tuple(ys))


# ---------------------------------------------------------------------------
# Materialized truncation


class TruncatedFock:
    """The full subcategory of ``!C`` on tuples of length at most ``degree``.

    ``cat`` is a FinCat; ``objects[i]`` / ``morphisms[m]`` give the tuple and
    ``(sigma, fs)`` behind each index.
    """

    def __init__(self, base: FinCat, degree: int):
        if degree < 0:
            raise ValueError("degree must be nonnegative")
        self.base = base
        self.degree = degree
        FC = bang(base)
        objs = [()]
        for n in range(1, degree + 1):
            objs.extend(itertools.product(range(base.n_objects), repeat=n))
            if len(objs) > max_objects():
                raise SizeOverflow(f"truncation has more than {max_objects()} objects")
        self.objects = objs
        oidx = {x: i for i, x in enumerate(objs)}
        mors, homs = [], {}
        ids = [0] * len(objs)
        for x in objs:
            for y in objs:
                if len(x) != len(y):
                    continue
                hs = FC.hom(x, y)
                if hs:
                    homs[(x, y)] = range(len(mors), len(mors) + len(hs))
                    mors.extend(hs)
        self.morphisms = mors
        midx = {f: i for i, f in enumerate(mors)}
        for i, x in enumerate(objs):
            ids[i] = midx[FC.identity(x)]
        comp = {}
        for (x, y), fs in homs.items():
            for (y2, z), gs in homs.items():
                if y2 != y:
                    continue
                for fi in fs:
                    f = mors[fi]
                    for gi in gs:
                        comp[(gi, fi)] = midx[FC.compose(mors[gi], f)]

        def olabel(x):
            return "(" + ",".join(base.objects[c] for c in x) + ")"

        def mlabel(f):
            sigma, fs = f
            return "[" + "".join(map(str, sigma)) + "]" + "(" + ",".join(base.mor_label(g) for g in fs) + ")"

        self.cat = FinCat([olabel(x) for x in objs],
                          [(f"{mlabel(f)}:{oidx[FC.src(f)]}", oidx[FC.src(f)], oidx[FC.dst(f)]) for f in mors],
                          ids, comp, name=f"!{base.name}<={degree}")
        self.object_index = oidx
        self.morphism_index = midx


def fock_truncated(C: FinCat, N: int) -> TruncatedFock:
    return TruncatedFock(C, N)


# ---------------------------------------------------------------------------
# Functors into and out of Fock categories


def singleton(A) -> Functor:
    """``a -> (a)``."""
    FA = bang(A)
    return Functor(A, FA, lambda a: (a,), lambda f: ((0,), (f,)), fwd=(1, 1), bwd=(1, -1),
                   name="single", pre=lambda y, l: [y[0]] if len(y) == 1 else [])


def concat(A) -> Functor:
    """``(x, y) -> x . y`` on ``!A x !A``."""
    FA = bang(A)
    P = ProductCategory((FA, FA))

    def mor(fg):
        (s, fs), (t, gs) = fg
        n = len(s)
        return (s + tuple(n + i for i in t), fs + gs)

    return Functor(P, FA, lambda xy: xy[0] + xy[1], mor, fwd=(1, 0), bwd=(1, 0), name="concat",
                   pre=lambda z, l: [(z[:k], z[k:]) for k in range(len(z) + 1)])


def _splittings(z: tuple, blocks: int):
    n = len(z)
    for cuts in itertools.combinations_with_replacement(range(n + 1), blocks - 1):
        bounds = (0,) + cuts + (n,)
        yield tuple(z[bounds[i]:bounds[i + 1]] for i in range(blocks))


def flatten(A) -> Functor:
    """``(x1, ..., xk) -> x1 . ... . xk`` from ``!!A`` to ``!A``."""
    FA = bang(A)
    FFA = bang(FA)

    def mor(F):
        rho, comps = F
        k = len(comps)
        lens = [len(c[0]) for c in comps]
        dst_lens = [0] * k
        for i in range(k):
            dst_lens[rho[i]] = lens[i]
        dst_off = [0] * k
        for i in range(1, k):
            dst_off[i] = dst_off[i - 1] + dst_lens[i - 1]
        perm, fs = [], []
        for i, (pi, gi) in enumerate(comps):
            base = dst_off[rho[i]]
            perm.extend(base + j for j in pi)
            fs.extend(gi)
        return (tuple(perm), tuple(fs))

    def pre(z, level):
        room = level - FA.level(z)
        out = []
        if z == ():
            out.append(())
        for k in range(1, room + 1):
            out.extend(_splittings(z, k))
        return out

    return Functor(FFA, FA, lambda al: tuple(c for blk in al for c in blk), mor,
                   fwd=(1, 0), bwd=None, name="flatten", pre=pre)


def empty_tuple(A) -> Functor:
    """``* -> ()`` from the terminal category."""
    return Functor(terminal(), bang(A), lambda _: (), lambda _: ((), ()), fwd=(0, 0), bwd=(0, 0),
                   name="empty", pre=lambda y, l: [0] if y == () else [])


def append(A) -> Functor:
    """``(a, x) -> x . (a)`` on ``A x !A``."""
    FA = bang(A)

    def mor(fg):
        f, (s, fs) = fg
        return (s + (len(s),), fs + (f,))

    return Functor(ProductCategory((A, FA)), FA, lambda ax: ax[1] + (ax[0],), mor,
                   fwd=(1, 1), bwd=(1, -1), name="append",
                   pre=lambda y, l: [(y[-1], y[:-1])] if y else [])


def prepend(A) -> Functor:
    """``(a, y) -> (a) . y`` on ``A x !A``."""
    FA = bang(A)

    def mor(fg):
        f, (s, gs) = fg
        return ((0,) + tuple(1 + i for i in s), (f,) + gs)

    return Functor(ProductCategory((A, FA)), FA, lambda ay: (ay[0],) + ay[1], mor,
                   fwd=(1, 1), bwd=(1, -1), name="prepend",
                   pre=lambda y, l: [(y[0], y[1:])] if y else [])


def bang_functor(F: Functor) -> Functor:
    """``!F`` acting slotwise."""
    FA, FB = bang(F.src), bang(F.dst)

    def pre(y, level):
        opts = [F.preimages(c, level) for c in y]
        return [x for x in itertools.product(*opts) if FA.level(x) <= level]

    return Functor(FA, FB, lambda x: tuple(F.obj(c) for c in x),
                   lambda f: (f[0], tuple(F.mor(g) for g in f[1])),
                   fwd=fock_levels(F.fwd), bwd=fock_levels(F.bwd), name=f"!{F.name}", pre=pre)


def merge(S, inj1: Functor, inj2: Functor) -> Functor:
    """``(x, y) -> !inj1 x . !inj2 y`` from ``!A x !B`` to ``!(A + B)``."""
    FA, FB, FS = bang(inj1.src), bang(inj2.src), bang(S)

    def obj(xy):
        return tuple(inj1.obj(c) for c in xy[0]) + tuple(inj2.obj(c) for c in xy[1])

    def mor(fg):
        (s, fs), (t, gs) = fg
        n = len(s)
        return (s + tuple(n + i for i in t),
                tuple(inj1.mor(f) for f in fs) + tuple(inj2.mor(g) for g in gs))

    def pre(z, level):
        out = []
        for k in range(len(z) + 1):
            left = [inj1.preimages(c, level) for c in z[:k]]
            right = [inj2.preimages(c, level) for c in z[k:]]
            if all(left) and all(right):
                for x in itertools.product(*left):
                    for y in itertools.product(*right):
                        out.append((x, y))
        return out

    levels = join_levels(fock_levels(inj1.fwd), fock_levels(inj2.fwd))
    back = join_levels(fock_levels(inj1.bwd), fock_levels(inj2.bwd))
    return Functor(ProductCategory((FA, FB)), FS, obj, mor, fwd=levels, bwd=back,
                   name="merge", pre=pre)


def unit_left(X) -> Functor:
    """``x -> (*, x)`` into ``1 x X``."""
    T = terminal()
    return Functor(X, ProductCategory((T, X)), lambda x: (0, x), lambda f: (0, f),
                   name="lunit", pre=lambda y, l: [y[1]] if y[0] == 0 else [])


def unit_right(X) -> Functor:
    """``x -> (x, *)`` into ``X x 1``."""
    T = terminal()
    return Functor(X, ProductCategory((X, T)), lambda x: (x, 0), lambda f: (f, 0),
                   name="runit", pre=lambda y, l: [y[0]] if y[1] == 0 else [])


# ---------------------------------------------------------------------------
# Structural profunctors


def _along(C, F: Functor, G: Functor, name: str) -> HomAlong:
    return HomAlong(C, F, G, name=name)


def bang_unit(A) -> HomAlong:
    """``!iota(*, a) = !A((), a)``."""
    FA = bang(A)
    return _along(FA, empty_tuple(A), identity_functor(FA), "!iota")


def bang_mult(A) -> HomAlong:
    """``!nabla((x, y), z) = !A(x . y, z)``."""
    FA = bang(A)
    return _along(FA, concat(A), identity_functor(FA), "!nabla")


def bang_counit(A) -> HomAlong:
    """``!tau(a, *) = !A(a, ())``."""
    FA = bang(A)
    return _along(FA, identity_functor(FA), empty_tuple(A), "!tau")


def bang_comult(A) -> HomAlong:
    """``!Delta(z, (x, y)) = !A(z, x . y)``."""
    FA = bang(A)
    return _along(FA, identity_functor(FA), concat(A), "!Delta")


def counit_eps(A) -> HomAlong:
    """``eps(x, a) = !A(x, (a))``."""
    FA = bang(A)
    return _along(FA, identity_functor(FA), singleton(A), "eps")


def comult_delta(A) -> HomAlong:
    """``delta(a, alpha) = !A(a, flatten alpha)``."""
    FA = bang(A)
    return _along(FA, identity_functor(FA), flatten(A), "delta")


def unit_eta(A) -> HomAlong:
    """``eta(a, x) = !A((a), x)``."""
    FA = bang(A)
    return _along(FA, singleton(A), identity_functor(FA), "eta")


def mult_mu(A) -> HomAlong:
    """``mu(alpha, a) = !A(flatten alpha, a)``."""
    FA = bang(A)
    return _along(FA, flatten(A), identity_functor(FA), "mu")


def creation(A) -> HomAlong:
    """``create((a, x), y) = !A(x . (a), y)``: ``A x !A -/-> !A``."""
    FA = bang(A)
    return _along(FA, append(A), identity_functor(FA), "create")


def annihilation(A) -> HomAlong:
    """``annihilate(x, (a, y)) = !A(x, (a) . y)``: ``!A -/-> A x !A``."""
    FA = bang(A)
    return _along(FA, identity_functor(FA), prepend(A), "annihilate")


def fock_unit_equiv() -> tuple:
    """``phi: 1 -/-> !0`` and its inverse ``!0 -/-> 1``."""
    O = empty()
    F0 = bang(O)
    e = empty_tuple(O)
    return (_along(F0, e, identity_functor(F0), "phi"),
            _along(F0, identity_functor(F0), e, "phi^-1"))


def fock_sum_equiv(A, B) -> tuple:
    """``phi_{A,B}: !A x !B -/-> !(A + B)``, its inverse, and the coproduct used.

    FinCat inputs give a FinCat coproduct; anything else a lazy one.
    """
    if isinstance(A, FinCat) and isinstance(B, FinCat):
        S, i1, i2 = coproduct(A, B)
    else:
        S = CoproductCategory(A, B)
        i1, i2 = injection(S, 0), injection(S, 1)
    m = merge(S, i1, i2)
    FS = bang(S)
    return (_along(FS, m, identity_functor(FS), "phi_AB"),
            _along(FS, identity_functor(FS), m, "phi_AB^-1"), S)


# ---------------------------------------------------------------------------
# !T


class FockMap(Profunctor):
    """``!T(x, y) = sum over sigma of prod T(x_i, y_sigma(i))`` for equal lengths.

    Elements are ``(sigma, (t_i))``.
    """

    def __init__(self, T: Profunctor, name: str = ""):
        super().__init__(bang(T.src), bang(T.dst))
        self.T = T
        self.fwd = fock_levels(T.fwd)
        self.bwd = fock_levels(T.bwd)
        self.name = name or f"!{T.name}"

    def _elements(self, x, y):
        n = len(x)
        if len(y) != n:
            return ()
        T = self.T
        out = []
        for p in permutations(n):
            es = [T.elements(x[i], y[p[i]]) for i in range(n)]
            if all(es):
                out.extend((p, c) for c in itertools.product(*es))
        return out

    def lact(self, f, y, e):
        tau, fs = f
        s, ts = e
        T = self.T
        return (tuple(s[t] for t in tau),
                tuple(T.lact(fs[i], y[s[tau[i]]], ts[tau[i]]) for i in range(len(tau))))

    def ract(self, x, g, e):
        rho, gs = g
        s, ts = e
        T = self.T
        return (tuple(rho[si] for si in s),
                tuple(T.ract(x[i], gs[s[i]], ts[i]) for i in range(len(s))))

    def _support_right(self, x, level):
        opts = [self.T.support_right(c, level) for c in x]
        return self.dst._spread(opts, level)

    def _support_left(self, y, level):
        opts = [self.T.support_left(c, level) for c in y]
        return self.src._spread(opts, level)


def fock_map(T: Profunctor) -> FockMap:
    return FockMap(T)


# ---------------------------------------------------------------------------
# Creation/annihilation along vectors, extensions, exponentials


def creation_vec(V: Profunctor) -> Composite:
    """``eta^V(x, y) ~ coend over a of V_a x !A(x . (a), y)`` for ``V: 1 -/-> A``."""
    A = V.dst
    FA = bang(A)
    VI = prof_tensor(V, hom_profunctor(FA))
    L = prof_restrict(VI, unit_left(FA), identity_functor(VI.dst), name=f"{V.name}xI")
    return prof_compose(L, creation(A), name=f"create^{V.name}")


def annihilation_covec(W: Profunctor) -> Composite:
    """``eps^W(x, y) ~ coend over a of !A(x, (a) . y) x W_a`` for ``W: A -/-> 1``."""
    A = W.src
    FA = bang(A)
    WI = prof_tensor(W, hom_profunctor(FA))
    R = prof_restrict(WI, identity_functor(WI.src), unit_left(FA), name=f"{W.name}xI")
    return prof_compose(annihilation(A), R, name=f"annihilate^{W.name}")


def kleisli_extension(u: Profunctor) -> Composite:
    """``u# = !u o delta_X`` for ``u: !X -/-> A``."""
    if not isinstance(u.src, FockCategory):
        raise CategoryError("Kleisli extension needs a map out of a Fock category")
    X = u.src.base
    return prof_compose(comult_delta(X), fock_map(u), name=f"{u.name}#")


def coherent_extension(V: Profunctor) -> Composite:
    """``V*``: ``1 ~ !0 -> !!0 ~ !1 -> !A`` through delta, ``!phi^-1`` and ``!V``."""
    phi, psi = fock_unit_equiv()
    O = empty()
    return compose_chain(phi, comult_delta(O), fock_map(psi), fock_map(V))


def product_presheaf(V: Profunctor, x: tuple) -> int:
    """Oracle: ``prod |V_{x_i}|``, the closed form of ``V*`` at ``x`` (no coends)."""
    return math.prod(V.size(0, c) for c in x)


class MonoidalCategory:
    """A strict symmetric monoidal structure on a FinCat.

    ``tensor_obj[x][y]`` and ``tensor_mor[f][g]`` are indices;
    ``symmetry[x][y]`` is a morphism ``x (x) y -> y (x) x``.
    """

    def __init__(self, cat: FinCat, unit: int, tensor_obj, tensor_mor, symmetry, name: str = "M"):
        self.cat = cat
        self.unit = unit
        self.tensor_obj = [list(r) for r in tensor_obj]
        self.tensor_mor = [list(r) for r in tensor_mor]
        self.symmetry = [list(r) for r in symmetry]
        self.name = name

    def tensor_all(self, xs: Sequence[int]) -> int:
        out = self.unit
        for x in xs:
            out = self.tensor_obj[out][x]
        return out

    def tensor_all_mor(self, fs: Sequence[int]) -> int:
        out = self.cat.identity(self.unit)
        for f in fs:
            out = self.tensor_mor[out][f]
        return out

    def permute(self, ys: Sequence[int], labels: Sequence[int]) -> int:
        """Morphism sorting the factors ``ys`` (tagged by ``labels``) into label order."""
        C = self.cat
        ys, labels = list(ys), list(labels)
        out = C.identity(self.tensor_all(ys))
        changed = True
        while changed:
            changed = False
            for k in range(len(ys) - 1):
                if labels[k] > labels[k + 1]:
                    parts = [C.identity(y) for y in ys]
                    swap = self.symmetry[ys[k]][ys[k + 1]]
                    step = self.tensor_all_mor(parts[:k] + [swap] + parts[k + 2:])
                    out = C.compose(step, out)
                    ys[k], ys[k + 1] = ys[k + 1], ys[k]
                    labels[k], labels[k + 1] = labels[k + 1], labels[k]
                    changed = True
        return out

    def tensor_functor(self) -> Functor:
        """``!M -> M``: tensor the factors, then restore the order with symmetries."""
        M = self.cat
        FM = bang(M)

        def mor(f):
            sigma, fs = f
            t = self.tensor_all_mor(fs)
            ys = [M.dst(g) for g in fs]
            return M.compose(self.permute(ys, sigma), t)

        return Functor(FM, M, self.tensor_all, mor, fwd=(0, 0), bwd=None, name="tensor")

    def validate(self):
        """Report for the strict symmetric monoidal axioms."""
        from .fincat import ValidationReport, validate
        rep = ValidationReport()
        rep.extend(validate(self.cat))
        if not rep.ok:
            return rep
        C = self.cat
        obs, mors = range(C.n_objects), list(C.all_morphisms())
        T, Tm = self.tensor_obj, self.tensor_mor
        u = self.unit
        for x in obs:
            if T[u][x] != x or T[x][u] != x:
                rep.add("unit", (x,), "unit is not strict")
            for y in obs:
                if Tm[C.identity(x)][C.identity(y)] != C.identity(T[x][y]):
                    rep.add("identity", (x, y), "tensor does not preserve identities")
                s = self.symmetry[x][y]
                if (C.src(s), C.dst(s)) != (T[x][y], T[y][x]):
                    rep.add("symmetry", (x, y), "symmetry has wrong endpoints")
                    continue
                if C.compose(self.symmetry[y][x], s) != C.identity(T[x][y]):
                    rep.add("symmetry", (x, y), "symmetry is not involutive")
                for z in obs:
                    if T[T[x][y]][z] != T[x][T[y][z]]:
                        rep.add("associativity", (x, y, z), "tensor is not strictly associative")
        for f in mors:
            for g in mors:
                h = Tm[f][g]
                if (C.src(h), C.dst(h)) != (T[C.src(f)][C.src(g)], T[C.dst(f)][C.dst(g)]):
                    rep.add("tensor", (f, g), "tensor of morphisms has wrong endpoints")
                    continue
                for k in mors:
                    if Tm[Tm[f][g]][k] != Tm[f][Tm[g][k]]:
                        rep.add("associativity", (f, g, k), "tensor of morphisms is not associative")
                s1 = self.symmetry[C.src(f)][C.src(g)]
                s2 = self.symmetry[C.dst(f)][C.dst(g)]
                if C.compose(s2, h) != C.compose(Tm[g][f], s1):
                    rep.add("naturality", (f, g), "symmetry is not natural")
        for (g2, f2), _ in C.composition.items():
            for (g1, f1), _ in C.composition.items():
                if Tm[C.compose(g2, f2)][C.compose(g1, f1)] != C.compose(Tm[g2][g1], Tm[f2][f1]):
                    rep.add("functoriality", (g2, f2, g1, f1), "tensor is not functorial")
        for x in obs:
            for y in obs:
                for z in obs:
                    lhs = self.symmetry[x][T[y][z]]
                    rhs = C.compose(Tm[C.identity(y)][self.symmetry[x][z]],
                                    Tm[self.symmetry[x][y]][C.identity(z)])
                    if lhs != rhs:
                        rep.add("hexagon", (x, y, z), "hexagon fails")
        return rep


def discrete_monoidal(elements: Sequence[str], table, unit: int = 0, name: str = "M") -> MonoidalCategory:
    """A commutative monoid as a discrete strict symmetric monoidal category."""
    C = FinCat.build(list(elements), name=name)
    n = len(elements)
    ids = [C.identity(x) for x in range(n)]
    mor_of = {i: x for x, i in enumerate(ids)}
    tm = [[ids[table[mor_of[f]][mor_of[g]]] for g in ids] for f in ids]
    sym = [[ids[table[x][y]] for y in range(n)] for x in range(n)]
    return MonoidalCategory(C, unit, table, tm, sym, name=name)


def algebra_from_monoidal(Mon: MonoidalCategory) -> HomAlong:
    """``M*(x, a) = M(x1 (x) ... (x) xn, a)``: a pseudo algebra ``!M -/-> M``."""
    rep = Mon.validate()
    if not rep.ok:
        raise CategoryError(f"not a strict symmetric monoidal category: {rep}")
    M = Mon.cat
    return HomAlong(M, Mon.tensor_functor(), identity_functor(M), name=f"{Mon.name}*")


EXP_CAP = (2, 0)


def exp_alg(M: Profunctor, T: Profunctor, degree: Optional[int] = None) -> Composite:
    """``exp_M(T) = M o T#`` for an algebra ``M: !A -/-> A`` and ``T: !X -/-> A``."""
    return prof_compose(kleisli_extension(T), M, cap=EXP_CAP, max_outer=degree,
                        name=f"exp_{M.name}({T.name})")


def exp_free(T: Profunctor, degree: Optional[int] = None) -> Composite:
    """``mu o !T o delta`` for ``T: !X -/-> !A``."""
    A = T.dst.base
    return exp_alg(mult_mu(A), T, degree)


def algebra_unit(M: Profunctor, X) -> Composite:
    """``M^(0)`` seen as ``!X -/-> A``: ``M((), -)`` after ``!tau_X``."""
    A = M.dst
    M0 = prof_restrict(M, empty_tuple(A), identity_functor(A), name=f"{M.name}^(0)")
    return prof_compose(bang_counit(X), M0, name=f"{M.name}^(0)")
