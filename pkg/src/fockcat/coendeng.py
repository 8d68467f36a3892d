"""Coends as coequalizers, and profunctor composition built on them.

The composite ``(T o S)(a, c)`` is the quotient of the nodes
``(b, s, t)`` with ``s`` in ``S(a, b)`` and ``t`` in ``T(b, c)`` by the
relation ``(b, s, T(f)(t')) ~ (b', S(f)(s), t')`` for ``f: b -> b'``.
Classes are represented by their least node, so results are canonical.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional, Sequence

from .fincat import LevelMap, apply_levels, chain_levels
from .setprof import EndpointMismatch, FinSet, NatTrans, Profunctor, nat_from_map, objkey

# When set, every composite re-checks that the induced actions are
# independent of the chosen representative.
DEBUG_VALIDATE = False


class TruncationOverflow(RuntimeError):
    pass


class DescentError(AssertionError):
    pass


class UnionFind:
    """Union-find over ``0..n-1``; the root of a class is its least element."""

    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        parent = self.parent
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    def union(self, x: int, y: int) -> None:
        rx, ry = self.find(x), self.find(y)
        if rx < ry:
            self.parent[ry] = rx
        elif ry < rx:
            self.parent[rx] = ry

    def classes(self) -> tuple:
        """(sorted roots, class index of every element)."""
        roots = [self.find(x) for x in range(len(self.parent))]
        reps = sorted(set(roots))
        pos = {r: i for i, r in enumerate(reps)}
        return reps, [pos[r] for r in roots]


# ---------------------------------------------------------------------------
# Plain coends over a finite category


@dataclass
class TwoSidedFunctor:
    """``H: C^op x C -> Set`` by callables.

    ``elements(x, y)`` lists ``H(x, y)``; ``lact(f, y, h)`` maps ``H(x, y)``
    to ``H(x', y)`` for ``f: x' -> x``; ``ract(x, g, h)`` maps ``H(x, y)`` to
    ``H(x, y')`` for ``g: y -> y'``.
    """
    cat: object
    elements: Callable
    lact: Callable
    ract: Callable


def functor_from_profunctor(H: Profunctor) -> TwoSidedFunctor:
    return TwoSidedFunctor(H.src, H.elements, H.lact, H.ract)


@dataclass
class CoendResult:
    classes: FinSet
    reps: list            # class -> (z, element)
    nodes: list           # every node (z, element), in canonical order
    labels: list          # node -> class

    def rep(self, k: int) -> tuple:
        return self.reps[k]

    def project(self, z, h) -> int:
        return self.labels[self._node_index[(z, h)]]

    def __post_init__(self):
        self._node_index = {n: i for i, n in enumerate(self.nodes)}


def coend(C, H, level: int = 0) -> CoendResult:
    """Coend of ``H`` over a finite category ``C``.

    For each morphism ``f: x -> y`` (identities included) and ``h`` in
    ``H(y, x)`` the nodes ``(x, H(f, x)(h))`` and ``(y, H(y, f)(h))`` are
    identified.  ``H`` may be a Profunctor ``C -/-> C``.
    """
    if isinstance(H, Profunctor):
        if H.src != C or H.dst != C:
            raise EndpointMismatch("coend needs an endo-profunctor on the given category")
        H = functor_from_profunctor(H)
    objs = sorted(C.objects_upto(level), key=lambda z: objkey(C, z))
    nodes = [(z, h) for z in objs for h in H.elements(z, z)]
    index = {n: i for i, n in enumerate(nodes)}
    uf = UnionFind(len(nodes))
    for x in objs:
        for y in objs:
            for f in C.hom(x, y):
                for h in H.elements(y, x):
                    try:
                        u = index[(x, H.lact(f, x, h))]
                        v = index[(y, H.ract(y, f, h))]
                    except KeyError as exc:
                        raise ValueError(f"two-sided functor is not well formed at {f}: {exc}") from None
                    uf.union(u, v)
    reps, labels = uf.classes()
    return CoendResult(FinSet(len(reps)), [nodes[r] for r in reps], nodes, labels)


def coend_bruteforce(C, H, level: int = 0) -> list:
    """Oracle: the partition into classes by repeated relabelling to a fixpoint.

    Returns one sorted tuple of node indices per class, ordered by least node.
    """
    if isinstance(H, Profunctor):
        H = functor_from_profunctor(H)
    objs = sorted(C.objects_upto(level), key=lambda z: objkey(C, z))
    nodes = [(z, h) for z in objs for h in H.elements(z, z)]
    index = {n: i for i, n in enumerate(nodes)}
    pairs = []
    for x in objs:
        for y in objs:
            for f in C.hom(x, y):
                for h in H.elements(y, x):
                    pairs.append((index[(x, H.lact(f, x, h))], index[(y, H.ract(y, f, h))]))
    label = list(range(len(nodes)))
    changed = True
    while changed:
        changed = False
        for u, v in pairs:
            m = min(label[u], label[v])
            if label[u] != m or label[v] != m:
                label[u] = label[v] = m
                changed = True
    groups: dict = {}
    for i, l in enumerate(label):
        groups.setdefault(l, []).append(i)
    return sorted(tuple(g) for g in groups.values())


# ---------------------------------------------------------------------------
# Profunctor composition


@dataclass
class _Component:
    mids: list          # middle objects with nodes, in canonical order
    offsets: dict       # b -> (offset, |S(a,b)|, |T(b,c)|)
    labels: list        # node -> class
    reps: list          # class -> (b, i, j)
    nodes: list         # node -> (b, i, j)


class Composite(Profunctor):
    """``T o S`` computed lazily, one component at a time.

    Elements are the class representatives ``(b, i, j)``: indices into
    ``S(a, b)`` and ``T(b, c)`` of the least node of the class.

    The middle objects needed for ``(a, c)`` are bounded by the level maps of
    ``S`` and ``T``.  If neither side bounds them, ``cap`` (an affine map of
    ``level(a) + level(c)``) is used and the levels just above it are probed;
    any contribution there raises TruncationOverflow.  ``max_outer`` refuses
    components beyond a truncation degree.
    """

    PROBE = 2

    def __init__(self, S: Profunctor, T: Profunctor, cap: LevelMap = None,
                 max_outer: Optional[int] = None, name: str = ""):
        if S.dst != T.src:
            raise EndpointMismatch(f"middle categories differ: {S.name} then {T.name}")
        super().__init__(S.src, T.dst)
        self.S, self.T = S, T
        self.mid = S.dst
        self.cap = cap
        self.max_outer = max_outer
        self.fwd = chain_levels(S.fwd, T.fwd)
        self.bwd = chain_levels(T.bwd, S.bwd)
        self.name = name or f"{T.name}.{S.name}"
        self._comp: dict = {}

    # level bound on middle objects for the component (a, c)
    def mid_bound(self, la: int, lc: int) -> tuple:
        bs = apply_levels(self.S.fwd, la)
        bt = apply_levels(self.T.bwd, lc)
        known = [b for b in (bs, bt) if b is not None]
        if known:
            return min(known), False
        if self.cap is None:
            raise TruncationOverflow(
                f"composite {self.name}: middle objects are unbounded and no cap was given")
        return apply_levels(self.cap, la + lc), True

    def component(self, a, c) -> _Component:
        key = (a, c)
        comp = self._comp.get(key)
        if comp is None:
            comp = self._comp[key] = self._build(a, c)
            if DEBUG_VALIDATE:
                self._check_descent(a, c, comp)
        return comp

    def _build(self, a, c) -> _Component:
        S, T, M = self.S, self.T, self.mid
        la, lc = self.src.level(a), self.dst.level(c)
        if self.max_outer is not None and la + lc > self.max_outer:
            raise TruncationOverflow(
                f"composite {self.name}: component {a, c} lies beyond degree {self.max_outer}")
        bound, capped = self.mid_bound(la, lc)
        if capped:
            self._probe(a, c, bound)
        left = S.support_right(a, bound)
        right = set(T.support_left(c, bound))
        mids = [b for b in left if b in right]
        offsets = {}
        total = 0
        for b in mids:
            ns, nt = S.size(a, b), T.size(b, c)
            offsets[b] = (total, ns, nt)
            total += ns * nt
        uf = UnionFind(total)
        for b in mids:
            ob, ns, nt = offsets[b]
            for f in M.gens_from(b):
                b2 = M.dst(f)
                if b2 not in offsets:
                    continue
                ob2, ns2, nt2 = offsets[b2]
                sl = S.ract_table(a, f)      # S(a,b) -> S(a,b2)
                tl = T.lact_table(f, c)      # T(b2,c) -> T(b,c)
                for i in range(ns):
                    u0 = ob + i * nt
                    v0 = ob2 + sl[i] * nt2
                    for j2 in range(nt2):
                        uf.union(u0 + tl[j2], v0 + j2)
        roots, labels = uf.classes()
        node_of = []
        for b in mids:
            ob, ns, nt = offsets[b]
            node_of.extend((b, i, j) for i in range(ns) for j in range(nt))
        return _Component(mids, offsets, labels, [node_of[r] for r in roots], node_of)

    def _probe(self, a, c, bound: int) -> None:
        S, T, M = self.S, self.T, self.mid
        for b in T.support_left(c, bound + self.PROBE):
            if M.level(b) > bound and S.elements(a, b):
                if T.elements(b, c):
                    raise TruncationOverflow(
                        f"composite {self.name}: component {a, c} receives contributions "
                        f"from middle object {b} above the cap {bound}")

    def _elements(self, a, c):
        return self.component(a, c).reps

    def classify(self, a, c, b, i: int, j: int) -> int:
        """Class index of the node ``(b, i, j)``."""
        comp = self.component(a, c)
        ob, ns, nt = comp.offsets[b]
        return comp.labels[ob + i * nt + j]

    def classify_elements(self, a, c, b, s, t) -> tuple:
        """Representative of the class of ``(b, s, t)`` given as elements."""
        k = self.classify(a, c, b, self.S.index(a, b)[s], self.T.index(b, c)[t])
        return self.component(a, c).reps[k]

    def unpack(self, a, c, x) -> tuple:
        """``(b, s, t)`` as elements for a representative ``x = (b, i, j)``."""
        b, i, j = x
        return b, self.S.elements(a, b)[i], self.T.elements(b, c)[j]

    def lact(self, f, c, x):
        a = self.src.dst(f)
        a2 = self.src.src(f)
        b, s, t = self.unpack(a, c, x)
        return self.classify_elements(a2, c, b, self.S.lact(f, b, s), t)

    def ract(self, a, g, x):
        c = self.dst.src(g)
        c2 = self.dst.dst(g)
        b, s, t = self.unpack(a, c, x)
        return self.classify_elements(a, c2, b, s, self.T.ract(b, g, t))

    def _check_descent(self, a, c, comp) -> None:
        S, T = self.S, self.T
        members: dict = {}
        for n, k in enumerate(comp.labels):
            members.setdefault(k, []).append(comp.nodes[n])
        for k, nodes in members.items():
            for f in self.src.gens_into(a):
                a2 = self.src.src(f)
                images = {self.classify_elements(a2, c, b, S.lact(f, b, S.elements(a, b)[i]),
                                                 T.elements(b, c)[j]) for b, i, j in nodes}
                if len(images) != 1:
                    raise DescentError(f"left action along {f} is not well defined on {self.name}")
            for g in self.dst.gens_from(c):
                c2 = self.dst.dst(g)
                images = {self.classify_elements(a, c2, b, S.elements(a, b)[i],
                                                 T.ract(b, g, T.elements(b, c)[j])) for b, i, j in nodes}
                if len(images) != 1:
                    raise DescentError(f"right action along {g} is not well defined on {self.name}")

    def _support_right(self, a, level):
        la = self.src.level(a)
        mb = apply_levels(self.S.fwd, la)
        if mb is None:
            mb = apply_levels(self.T.bwd, level)
        if mb is None:
            mb = apply_levels(self.cap, la + level) if self.cap is not None else None
        if mb is None:
            raise TruncationOverflow(f"composite {self.name}: unbounded middle objects")
        out = set()
        for b in self.S.support_right(a, mb):
            lb = self.mid.level(b)
            for c in self.T.support_right(b, level):
                if lb <= self.mid_bound(la, self.dst.level(c))[0]:
                    out.add(c)
        return sorted(out, key=lambda c: objkey(self.dst, c))

    def _support_left(self, c, level):
        lc = self.dst.level(c)
        mb = apply_levels(self.T.bwd, lc)
        if mb is None:
            mb = apply_levels(self.S.fwd, level)
        if mb is None:
            mb = apply_levels(self.cap, lc + level) if self.cap is not None else None
        if mb is None:
            raise TruncationOverflow(f"composite {self.name}: unbounded middle objects")
        out = set()
        for b in self.T.support_left(c, mb):
            lb = self.mid.level(b)
            for a in self.S.support_left(b, level):
                if lb <= self.mid_bound(self.src.level(a), lc)[0]:
                    out.add(a)
        return sorted(out, key=lambda a: objkey(self.src, a))


def prof_compose(S: Profunctor, T: Profunctor, cap: LevelMap = None,
                 max_outer: Optional[int] = None, name: str = "") -> Composite:
    """``T o S``: first S, then T (diagrammatic ``S ; T``)."""
    return Composite(S, T, cap=cap, max_outer=max_outer, name=name)


def compose_chain(*ps: Profunctor, **kw) -> Profunctor:
    """Compose left to right: ``compose_chain(S, T, U) = U o T o S``."""
    out = ps[0]
    for P in ps[1:]:
        out = Composite(out, P, **kw)
    return out


# ---------------------------------------------------------------------------
# Density formula and 2-cells


@dataclass
class DensityWitness:
    forward: list       # element index of P(c) -> class index
    backward: list      # class index -> element index of P(c)
    composite: Composite

    def validate(self) -> bool:
        n = len(self.forward)
        return (len(self.backward) == n
                and all(self.backward[self.forward[i]] == i for i in range(n))
                and all(self.forward[self.backward[k]] == k for k in range(len(self.backward))))


def density_iso(P: Profunctor, c) -> DensityWitness:
    """``P(c) ~ coend over z of P(z) x C(c, z)`` for a presheaf ``P: C -/-> 1``.

    Forward sends ``x`` to the class of ``(c, id_c, x)``; backward acts on a
    representative ``(z, h, x)`` by ``h``.
    """
    from .setprof import hom_profunctor

    C = P.src
    comp = prof_compose(hom_profunctor(C), P)
    star = P.dst.objects_upto(0)[0]
    X = P.elements(c, star)
    ident = C.identity(c)
    forward = [comp.classify(c, star, c, comp.S.index(c, c)[ident], i) for i in range(len(X))]
    reps = comp.elements(c, star)
    backward = []
    idx = P.index(c, star)
    for x in reps:
        z, h, y = comp.unpack(c, star, x)
        backward.append(idx[P.lact(h, star, y)])
    w = DensityWitness(forward, backward, comp)
    if not w.validate():
        raise AssertionError("density maps are not mutually inverse")
    return w


def horizontal(alpha: NatTrans, beta: NatTrans, left: Composite, right: Composite,
               src_level: int = 0, dst_level: int = 0) -> NatTrans:
    """``beta * alpha``: from ``T o S`` to ``T' o S'`` for ``alpha: S => S'``, ``beta: T => T'``."""
    comps = {}
    for a in left.src.objects_upto(src_level):
        for c in left.support_right(a, dst_level):
            table = []
            for x in left.elements(a, c):
                b, i, j = x
                s2 = alpha.components[(a, b)][i]
                t2 = beta.components[(b, c)][j]
                k = right.classify(a, c, b, s2, t2)
                table.append(k)
            comps[(a, c)] = tuple(table)
    return NatTrans(left, right, comps, src_level, dst_level, iso=alpha.iso and beta.iso)


# ---------------------------------------------------------------------------
# Canonical structure maps of composition


def left_unitor(comp: Composite, src_level: int = 0, dst_level: int = 0) -> NatTrans:
    """``S o I => S``: the class of ``(b, h, s)`` goes to ``S(h)(s)``."""
    S = comp.T

    def fn(a, c, x):
        b, h, s = comp.unpack(a, c, x)
        return S.lact(h, c, s)
    return nat_from_map(comp, S, fn, src_level, dst_level)


def right_unitor(comp: Composite, src_level: int = 0, dst_level: int = 0) -> NatTrans:
    """``I o S => S``: the class of ``(b, s, h)`` goes to ``s`` moved along ``h``."""
    S = comp.S

    def fn(a, c, x):
        b, s, h = comp.unpack(a, c, x)
        return S.ract(a, h, s)
    return nat_from_map(comp, S, fn, src_level, dst_level)


def associator(left: Composite, right: Composite, src_level: int = 0,
               dst_level: int = 0) -> NatTrans:
    """``U o (T o S) => (U o T) o S`` read as ``((S;T);U) => (S;(T;U))``."""
    ST, TU = left.S, right.T

    def fn(a, d, x):
        c, st, u = left.unpack(a, d, x)
        b, s, t = ST.unpack(a, c, st)
        return right.classify_elements(a, d, b, s, TU.classify_elements(b, d, c, t, u))
    return nat_from_map(left, right, fn, src_level, dst_level)
