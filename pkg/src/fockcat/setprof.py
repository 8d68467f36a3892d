"""Finite sets, set-valued functors, profunctors and natural isomorphisms.

A profunctor ``P: A -/-> B`` is a functor ``A^op x B -> Set``.  Components
are tuples of hashable elements; ``lact(f, b, x)`` moves ``x`` in ``P(a, b)``
along ``f: a' -> a`` to ``P(a', b)`` and ``ract(a, g, x)`` moves it along
``g: b -> b'`` to ``P(a, b')``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .fincat import (
    CoproductCategory, FinCat, Functor, LevelMap, ProductCategory, ValidationReport,
    apply_levels, chain_levels, empty, identity_functor, injection, join_levels, opposite,
    terminal,
)


class EndpointMismatch(ValueError):
    pass


def objkey(cat, x):
    return (cat.level(x), x)


def _min_bound(level: int, bound: Optional[int]) -> int:
    return level if bound is None else min(level, bound)


# ---------------------------------------------------------------------------
# Finite sets and set-valued functors


@dataclass(frozen=True)
class FinSet:
    size: int
    labels: Optional[tuple] = None

    def __post_init__(self):
        if self.size < 0:
            raise ValueError("negative size")
        if self.labels is not None:
            if len(self.labels) != self.size or len(set(self.labels)) != self.size:
                raise ValueError("labels must be unique and match the size")

    def label(self, i: int) -> str:
        return str(i) if self.labels is None else self.labels[i]

    def __len__(self):
        return self.size


@dataclass(frozen=True)
class SetFun:
    dom: FinSet
    cod: FinSet
    table: tuple

    def __post_init__(self):
        object.__setattr__(self, "table", tuple(self.table))
        if len(self.table) != self.dom.size:
            raise ValueError("table length differs from domain size")
        if any(not 0 <= t < self.cod.size for t in self.table):
            raise ValueError("table entry outside codomain")

    def __call__(self, i: int) -> int:
        return self.table[i]

    def then(self, other: "SetFun") -> "SetFun":
        return SetFun(self.dom, other.cod, tuple(other.table[t] for t in self.table))

    def is_bijection(self) -> bool:
        return self.dom.size == self.cod.size and len(set(self.table)) == self.dom.size


@dataclass
class SetValuedFunctor:
    """Covariant functor ``base -> FinSet``.  Presheaves use ``opposite(base)``."""
    base: FinCat
    on_obj: Sequence[FinSet]
    on_mor: Sequence[SetFun]


def functor_validate(F: SetValuedFunctor) -> ValidationReport:
    rep = ValidationReport()
    C = F.base
    if len(F.on_obj) != C.n_objects or len(F.on_mor) != C.n_morphisms:
        rep.add("shape", (), "object or morphism table has the wrong length")
        return rep
    for f in C.all_morphisms():
        m = F.on_mor[f]
        if m.dom != F.on_obj[C.src(f)] or m.cod != F.on_obj[C.dst(f)]:
            rep.add("endpoints", (f,), "image function has wrong domain or codomain")
    if rep.violations:
        return rep
    for a in range(C.n_objects):
        if F.on_mor[C.identity(a)].table != tuple(range(F.on_obj[a].size)):
            rep.add("identity", (a,), "identity does not act as the identity table")
    for (g, f), gf in sorted(C.composition.items()):
        if F.on_mor[f].then(F.on_mor[g]).table != F.on_mor[gf].table:
            rep.add("composition", (g, f), "image of composite differs from composite of images")
    return rep


def constant_functor(C: FinCat, size: int = 1) -> SetValuedFunctor:
    S = FinSet(size)
    ident = SetFun(S, S, tuple(range(size)))
    return SetValuedFunctor(C, [S] * C.n_objects, [ident] * C.n_morphisms)


# ---------------------------------------------------------------------------
# Profunctors


class Profunctor:
    """Base class.  Subclasses implement ``_elements``, ``lact`` and ``ract``.

    ``fwd`` bounds ``level(b)`` in terms of ``level(a)`` over nonempty
    components, ``bwd`` bounds ``level(a)`` in terms of ``level(b)``.
    """

    fwd: LevelMap = None
    bwd: LevelMap = None
    name = "P"

    def __init__(self, src, dst):
        self.src = src
        self.dst = dst
        self._elem_cache: dict = {}
        self._index_cache: dict = {}
        self._supp_r: dict = {}
        self._supp_l: dict = {}
        self._tables: dict = {}

    def __repr__(self):
        return f"<{type(self).__name__} {self.name}>"

    def _elements(self, a, b) -> tuple:
        raise NotImplementedError

    def elements(self, a, b) -> tuple:
        key = (a, b)
        try:
            return self._elem_cache[key]
        except KeyError:
            out = self._elem_cache[key] = tuple(self._elements(a, b))
            return out

    def index(self, a, b) -> dict:
        key = (a, b)
        try:
            return self._index_cache[key]
        except KeyError:
            out = self._index_cache[key] = {x: i for i, x in enumerate(self.elements(a, b))}
            return out

    def size(self, a, b) -> int:
        return len(self.elements(a, b))

    def lact(self, f, b, x):
        raise NotImplementedError

    def ract(self, a, g, x):
        raise NotImplementedError

    def lact_table(self, f, b) -> tuple:
        """Index table of ``lact(f, b, -)`` from ``P(dst f, b)`` to ``P(src f, b)``."""
        key = ("l", f, b)
        out = self._tables.get(key)
        if out is None:
            a, a2 = self.src.dst(f), self.src.src(f)
            idx = self.index(a2, b)
            out = self._tables[key] = tuple(idx[self.lact(f, b, x)] for x in self.elements(a, b))
        return out

    def ract_table(self, a, g) -> tuple:
        key = ("r", a, g)
        out = self._tables.get(key)
        if out is None:
            b, b2 = self.dst.src(g), self.dst.dst(g)
            idx = self.index(a, b2)
            out = self._tables[key] = tuple(idx[self.ract(a, g, x)] for x in self.elements(a, b))
        return out

    # supports: sorted lists of objects with nonempty components
    def _support_right(self, a, level: int) -> list:
        return [b for b in self.dst.objects_upto(level) if self.elements(a, b)]

    def _support_left(self, b, level: int) -> list:
        return [a for a in self.src.objects_upto(level) if self.elements(a, b)]

    def support_right(self, a, level: int) -> list:
        level = _min_bound(level, apply_levels(self.fwd, self.src.level(a)))
        key = (a, level)
        if key not in self._supp_r:
            self._supp_r[key] = self._support_right(a, level) if level >= 0 else []
        return self._supp_r[key]

    def support_left(self, b, level: int) -> list:
        level = _min_bound(level, apply_levels(self.bwd, self.dst.level(b)))
        key = (b, level)
        if key not in self._supp_l:
            self._supp_l[key] = self._support_left(b, level) if level >= 0 else []
        return self._supp_l[key]


class HomAlong(Profunctor):
    """``P(a, b) = C(F a, G b)`` with actions by pre- and post-composition."""

    def __init__(self, C, F: Functor, G: Functor, name: str = "hom"):
        super().__init__(F.src, G.src)
        self.C, self.F, self.G = C, F, G
        self.fwd = chain_levels(F.fwd, G.bwd)
        self.bwd = chain_levels(G.fwd, F.bwd)
        self.name = name

    def _elements(self, a, b):
        return self.C.hom(self.F.obj(a), self.G.obj(b))

    def lact(self, f, b, x):
        return self.C.compose(x, self.F.mor(f))

    def ract(self, a, g, x):
        return self.C.compose(self.G.mor(g), x)

    def _support_right(self, a, level):
        out = {b for y in self.C.reachable_from(self.F.obj(a)) for b in self.G.preimages(y, level)}
        return sorted(out, key=lambda b: objkey(self.dst, b))

    def _support_left(self, b, level):
        out = {a for y in self.C.reaching(self.G.obj(b)) for a in self.F.preimages(y, level)}
        return sorted(out, key=lambda a: objkey(self.src, a))


def _identity_functor(C) -> Functor:
    return identity_functor(C)


def hom_profunctor(C) -> HomAlong:
    """The identity profunctor ``I_C``."""
    return HomAlong(C, _identity_functor(C), _identity_functor(C), name="I")


def representable(F: Functor) -> HomAlong:
    """``F_*(a, b) = D(F a, b)``: A -/-> D."""
    return HomAlong(F.dst, F, _identity_functor(F.dst), name=f"{F.name}_*")


def corepresentable(F: Functor) -> HomAlong:
    """``F^*(d, a) = D(d, F a)``: D -/-> A."""
    return HomAlong(F.dst, _identity_functor(F.dst), F, name=f"{F.name}^*")


class TableProfunctor(Profunctor):
    """Explicit profunctor between finite categories with integer elements.

    ``lact_tables[(f, b)]`` sends indices of ``P(dst f, b)`` to ``P(src f, b)``;
    ``ract_tables[(a, g)]`` sends ``P(a, src g)`` to ``P(a, dst g)``.  Tables
    for identities may be omitted.
    """

    fwd = (0, 0)
    bwd = (0, 0)

    def __init__(self, src: FinCat, dst: FinCat, sizes: dict, lact_tables: dict = None,
                 ract_tables: dict = None, name: str = "T", labels: dict = None):
        super().__init__(src, dst)
        self.sizes = {k: v for k, v in sizes.items() if v}
        self.lact_tables = dict(lact_tables or {})
        self.ract_tables = dict(ract_tables or {})
        self.labels = dict(labels or {})
        self.name = name

    def _elements(self, a, b):
        return range(self.sizes.get((a, b), 0))

    def lact(self, f, b, x):
        t = self.lact_tables.get((f, b))
        if t is None:
            if self.src.is_identity(f):
                return x
            raise KeyError(f"no left action table for {(f, b)}")
        return t[x]

    def ract(self, a, g, x):
        t = self.ract_tables.get((a, g))
        if t is None:
            if self.dst.is_identity(g):
                return x
            raise KeyError(f"no right action table for {(a, g)}")
        return t[x]


def vector(A: FinCat, sizes: Sequence[int], actions: dict = None, name: str = "V") -> TableProfunctor:
    """Vector ``1 -/-> A`` with ``V_a`` of size ``sizes[a]``; ``actions[f]`` is V(f)."""
    actions = actions or {}
    return TableProfunctor(terminal(), A, {(0, a): n for a, n in enumerate(sizes)},
                           ract_tables={(0, f): tuple(t) for f, t in actions.items()}, name=name)


def covector(A: FinCat, sizes: Sequence[int], actions: dict = None, name: str = "W") -> TableProfunctor:
    """Covector ``A -/-> 1``; ``actions[f]`` for ``f: a -> b`` maps ``W_b`` to ``W_a``."""
    actions = actions or {}
    return TableProfunctor(A, terminal(), {(a, 0): n for a, n in enumerate(sizes)},
                           lact_tables={(f, 0): tuple(t) for f, t in actions.items()}, name=name)


def vector_from_functor(F: SetValuedFunctor, name: str = "V") -> TableProfunctor:
    return vector(F.base, [s.size for s in F.on_obj],
                  {f: m.table for f, m in enumerate(F.on_mor)}, name=name)


def covector_from_presheaf(F: SetValuedFunctor, name: str = "W") -> TableProfunctor:
    """``F`` is covariant on ``C^op``; the covector lives on ``C``."""
    C = opposite(F.base)
    return covector(C, [s.size for s in F.on_obj],
                    {f: m.table for f, m in enumerate(F.on_mor)}, name=name)


class ProfTensor(Profunctor):
    """Componentwise product ``S1 x ... x Sk`` over product categories."""

    def __init__(self, factors: Sequence[Profunctor], name: str = ""):
        self.factors = tuple(factors)
        super().__init__(ProductCategory([P.src for P in self.factors]),
                         ProductCategory([P.dst for P in self.factors]))
        self.fwd = _sum_levels([P.fwd for P in self.factors])
        self.bwd = _sum_levels([P.bwd for P in self.factors])
        self.name = name or "(" + " x ".join(P.name for P in self.factors) + ")"

    def _elements(self, a, b):
        return itertools.product(*(P.elements(ai, bi) for P, ai, bi in zip(self.factors, a, b)))

    def lact(self, f, b, x):
        return tuple(P.lact(fi, bi, xi) for P, fi, bi, xi in zip(self.factors, f, b, x))

    def ract(self, a, g, x):
        return tuple(P.ract(ai, gi, xi) for P, ai, gi, xi in zip(self.factors, a, g, x))

    def _support_right(self, a, level):
        def rec(i, budget):
            if i == len(self.factors):
                yield ()
                return
            P = self.factors[i]
            for b in P.support_right(a[i], budget):
                for rest in rec(i + 1, budget - P.dst.level(b)):
                    yield (b,) + rest
        return sorted(rec(0, level), key=lambda b: objkey(self.dst, b))

    def _support_left(self, b, level):
        def rec(i, budget):
            if i == len(self.factors):
                yield ()
                return
            P = self.factors[i]
            for a in P.support_left(b[i], budget):
                for rest in rec(i + 1, budget - P.src.level(a)):
                    yield (a,) + rest
        return sorted(rec(0, level), key=lambda a: objkey(self.src, a))


def _sum_levels(maps) -> LevelMap:
    if any(m is None for m in maps):
        return None
    return (max((m[0] for m in maps), default=0), sum(m[1] for m in maps))


def prof_tensor(*factors: Profunctor) -> ProfTensor:
    return ProfTensor(factors)


class ProfSum(Profunctor):
    """Tagged disjoint union; elements are ``(tag, x)``."""

    def __init__(self, parts: Sequence[Profunctor], name: str = ""):
        parts = tuple(parts)
        for P in parts[1:]:
            if P.src != parts[0].src or P.dst != parts[0].dst:
                raise EndpointMismatch("summands must have the same endpoints")
        super().__init__(parts[0].src, parts[0].dst)
        self.parts = parts
        self.fwd = join_levels(*(P.fwd for P in parts))
        self.bwd = join_levels(*(P.bwd for P in parts))
        self.name = name or "(" + " + ".join(P.name for P in parts) + ")"

    def _elements(self, a, b):
        return [(t, x) for t, P in enumerate(self.parts) for x in P.elements(a, b)]

    def lact(self, f, b, x):
        return (x[0], self.parts[x[0]].lact(f, b, x[1]))

    def ract(self, a, g, x):
        return (x[0], self.parts[x[0]].ract(a, g, x[1]))

    def _support_right(self, a, level):
        s = set()
        for P in self.parts:
            s.update(P.support_right(a, level))
        return sorted(s, key=lambda b: objkey(self.dst, b))

    def _support_left(self, b, level):
        s = set()
        for P in self.parts:
            s.update(P.support_left(b, level))
        return sorted(s, key=lambda a: objkey(self.src, a))


def prof_sum(*parts: Profunctor) -> ProfSum:
    return ProfSum(parts)


class ProfZero(Profunctor):
    fwd = (0, 0)
    bwd = (0, 0)

    def __init__(self, A, B):
        super().__init__(A, B)
        self.name = "0"

    def _elements(self, a, b):
        return ()

    def lact(self, f, b, x):
        raise KeyError("zero profunctor has no elements")

    ract = lact

    def _support_right(self, a, level):
        return []

    def _support_left(self, b, level):
        return []


def prof_zero(A, B) -> ProfZero:
    return ProfZero(A, B)


class ProfDual(Profunctor):
    """``T^op(b, a) = T(a, b)``: B^op -/-> A^op."""

    def __init__(self, T: Profunctor):
        super().__init__(opposite(T.dst), opposite(T.src))
        self.inner = T
        self.fwd, self.bwd = T.bwd, T.fwd
        self.name = f"{T.name}^op"

    def _elements(self, b, a):
        return self.inner.elements(a, b)

    def lact(self, f, a, x):
        return self.inner.ract(a, f, x)

    def ract(self, b, g, x):
        return self.inner.lact(g, b, x)

    def _support_right(self, b, level):
        return self.inner.support_left(b, level)

    def _support_left(self, a, level):
        return self.inner.support_right(a, level)


def prof_dual(T: Profunctor) -> Profunctor:
    if isinstance(T, ProfDual):
        return T.inner
    return ProfDual(T)


class Restrict(Profunctor):
    """``Q(a, b) = P(F a, G b)``."""

    def __init__(self, P: Profunctor, F: Functor, G: Functor, name: str = ""):
        super().__init__(F.src, G.src)
        self.P, self.F, self.G = P, F, G
        self.fwd = chain_levels(chain_levels(F.fwd, P.fwd), G.bwd)
        self.bwd = chain_levels(chain_levels(G.fwd, P.bwd), F.bwd)
        self.name = name or f"{P.name}|"

    def _elements(self, a, b):
        return self.P.elements(self.F.obj(a), self.G.obj(b))

    def lact(self, f, b, x):
        return self.P.lact(self.F.mor(f), self.G.obj(b), x)

    def ract(self, a, g, x):
        return self.P.ract(self.F.obj(a), self.G.mor(g), x)

    def _support_right(self, a, level):
        inner = apply_levels(self.G.fwd, level)
        if inner is None:
            return super()._support_right(a, level)
        out = {b for y in self.P.support_right(self.F.obj(a), inner)
               for b in self.G.preimages(y, level)}
        return sorted(out, key=lambda b: objkey(self.dst, b))

    def _support_left(self, b, level):
        inner = apply_levels(self.F.fwd, level)
        if inner is None:
            return super()._support_left(b, level)
        out = {a for y in self.P.support_left(self.G.obj(b), inner)
               for a in self.F.preimages(y, level)}
        return sorted(out, key=lambda a: objkey(self.src, a))


def prof_restrict(P: Profunctor, F: Functor, G: Functor, name: str = "") -> Restrict:
    return Restrict(P, F, G, name)


def pairing(V: Profunctor, W: Profunctor) -> FinSet:
    """``<V, W>``: the coend of ``V_a x W_a`` over ``a``."""
    from .coendeng import prof_compose

    if V.dst != W.src:
        raise EndpointMismatch("vector and covector live over different categories")
    C = prof_compose(V, W)
    return FinSet(C.size(0, 0))


# ---------------------------------------------------------------------------
# Biproducts in Prof: the coproduct of categories is both sum and product


def biproduct(A, B) -> CoproductCategory:
    return CoproductCategory(A, B)


def prof_inj(S: CoproductCategory, tag: int) -> HomAlong:
    """``iota_t: A_t -/-> A_0 + A_1``."""
    return representable(injection(S, tag))


def prof_proj(S: CoproductCategory, tag: int) -> HomAlong:
    """``pi_t: A_0 + A_1 -/-> A_t``."""
    return corepresentable(injection(S, tag))


def fold(A) -> Functor:
    """``A + A -> A``."""
    return Functor(CoproductCategory(A, A), A, lambda x: x[1], lambda f: f[1], name="fold",
                   pre=lambda y, l: [(0, y), (1, y)])


def codiag(A) -> HomAlong:
    """``nabla: A + A -/-> A``."""
    return HomAlong(A, fold(A), identity_functor(A), name="nabla")


def diag(A) -> HomAlong:
    """``Delta: A -/-> A + A``."""
    return HomAlong(A, identity_functor(A), fold(A), name="Delta")


def initial_map(A) -> "ProfZero":
    return ProfZero(empty(), A)


def terminal_map(A) -> "ProfZero":
    return ProfZero(A, empty())


class Cases(Profunctor):
    """``[P, Q]: A + B -/-> C`` from ``P: A -/-> C`` and ``Q: B -/-> C``."""

    def __init__(self, P: Profunctor, Q: Profunctor, name: str = ""):
        if P.dst != Q.dst:
            raise EndpointMismatch("cases need a common target")
        super().__init__(CoproductCategory(P.src, Q.src), P.dst)
        self.parts = (P, Q)
        self.fwd = join_levels(P.fwd, Q.fwd)
        self.bwd = join_levels(P.bwd, Q.bwd)
        self.name = name or f"[{P.name},{Q.name}]"

    def _elements(self, a, c):
        return self.parts[a[0]].elements(a[1], c)

    def lact(self, f, c, x):
        return self.parts[f[0]].lact(f[1], c, x)

    def ract(self, a, g, x):
        return self.parts[a[0]].ract(a[1], g, x)

    def _support_right(self, a, level):
        return self.parts[a[0]].support_right(a[1], level)

    def _support_left(self, c, level):
        return [(t, a) for t, P in enumerate(self.parts) for a in P.support_left(c, level)]


class Tupling(Profunctor):
    """``<P, Q>: C -/-> A + B`` from ``P: C -/-> A`` and ``Q: C -/-> B``."""

    def __init__(self, P: Profunctor, Q: Profunctor, name: str = ""):
        if P.src != Q.src:
            raise EndpointMismatch("tupling needs a common source")
        super().__init__(P.src, CoproductCategory(P.dst, Q.dst))
        self.parts = (P, Q)
        self.fwd = join_levels(P.fwd, Q.fwd)
        self.bwd = join_levels(P.bwd, Q.bwd)
        self.name = name or f"<{P.name},{Q.name}>"

    def _elements(self, c, b):
        return self.parts[b[0]].elements(c, b[1])

    def lact(self, f, b, x):
        return self.parts[b[0]].lact(f, b[1], x)

    def ract(self, c, g, x):
        return self.parts[g[0]].ract(c, g[1], x)

    def _support_right(self, c, level):
        return [(t, b) for t, P in enumerate(self.parts) for b in P.support_right(c, level)]

    def _support_left(self, b, level):
        return self.parts[b[0]].support_left(b[1], level)


class ProfBiprod(Profunctor):
    """``P + Q: A + B -/-> C + D`` acting blockwise."""

    def __init__(self, P: Profunctor, Q: Profunctor, name: str = ""):
        super().__init__(CoproductCategory(P.src, Q.src), CoproductCategory(P.dst, Q.dst))
        self.parts = (P, Q)
        self.fwd = join_levels(P.fwd, Q.fwd)
        self.bwd = join_levels(P.bwd, Q.bwd)
        self.name = name or f"({P.name}(+){Q.name})"

    def _elements(self, a, b):
        if a[0] != b[0]:
            return ()
        return self.parts[a[0]].elements(a[1], b[1])

    def lact(self, f, b, x):
        return self.parts[f[0]].lact(f[1], b[1], x)

    def ract(self, a, g, x):
        return self.parts[g[0]].ract(a[1], g[1], x)

    def _support_right(self, a, level):
        return [(a[0], b) for b in self.parts[a[0]].support_right(a[1], level)]

    def _support_left(self, b, level):
        return [(b[0], a) for a in self.parts[b[0]].support_left(b[1], level)]


def convolution(S: Profunctor, T: Profunctor) -> Profunctor:
    """``S + T`` computed as ``Delta ; (S (+) T) ; nabla``."""
    from .coendeng import compose_chain

    return compose_chain(diag(S.src), ProfBiprod(S, T), codiag(S.dst))


# ---------------------------------------------------------------------------
# Validation of profunctors


def prof_validate(P: Profunctor, src_level: int = 0, dst_level: int = 0,
                  all_morphisms: bool = True) -> ValidationReport:
    """Functoriality and commutation of the two actions on enumerated components."""
    rep = ValidationReport()
    A, B = P.src, P.dst
    As = A.objects_upto(src_level)
    Bs = B.objects_upto(dst_level)

    def homs(cat, objs, x, into):
        if all_morphisms:
            return [f for y in objs for f in (cat.hom(y, x) if into else cat.hom(x, y))]
        return list(cat.gens_into(x) if into else cat.gens_from(x))

    for a in As:
        for b in P.support_right(a, dst_level):
            X = P.elements(a, b)
            for x in X:
                if P.lact(A.identity(a), b, x) != x or P.ract(a, B.identity(b), x) != x:
                    rep.add("identity", (a, b), "identity acts nontrivially")
                    break
            for f in homs(A, As, a, True):
                a2 = A.src(f)
                if any(P.lact(f, b, x) not in P.index(a2, b) for x in X):
                    rep.add("endpoints", (a, b, f), "left action leaves its component")
                    continue
                for f2 in homs(A, As, a2, True):
                    ff = A.compose(f, f2)
                    if any(P.lact(f2, b, P.lact(f, b, x)) != P.lact(ff, b, x) for x in X):
                        rep.add("lact-composition", (a, b, f, f2), "left action not functorial")
                for g in homs(B, Bs, b, False):
                    if any(P.ract(a2, g, P.lact(f, b, x)) != P.lact(f, B.dst(g), P.ract(a, g, x))
                           for x in X):
                        rep.add("commutation", (a, b, f, g), "actions do not commute")
            for g in homs(B, Bs, b, False):
                b2 = B.dst(g)
                if any(P.ract(a, g, x) not in P.index(a, b2) for x in X):
                    rep.add("endpoints", (a, b, g), "right action leaves its component")
                    continue
                for g2 in homs(B, Bs, b2, False):
                    gg = B.compose(g2, g)
                    if any(P.ract(a, g2, P.ract(a, g, x)) != P.ract(a, gg, x) for x in X):
                        rep.add("ract-composition", (a, b, g, g2), "right action not functorial")
    return rep


def prof_equal(P: Profunctor, Q: Profunctor, src_level: int = 0, dst_level: int = 0) -> bool:
    """Structural equality on enumerated components: same elements, same actions."""
    if P.src != Q.src or P.dst != Q.dst:
        return False
    A, B = P.src, P.dst
    for a in A.objects_upto(src_level):
        for b in B.objects_upto(dst_level):
            X = P.elements(a, b)
            if X != Q.elements(a, b):
                return False
            for f in A.gens_into(a):
                if any(P.lact(f, b, x) != Q.lact(f, b, x) for x in X):
                    return False
            for g in B.gens_from(b):
                if any(P.ract(a, g, x) != Q.ract(a, g, x) for x in X):
                    return False
    return True


# ---------------------------------------------------------------------------
# Natural transformations and isomorphism search


@dataclass
class NatTrans:
    """Components ``(a, b) -> index table`` from ``source(a, b)`` to ``target(a, b)``.

    Only nonempty source components are stored.  The enumeration window is
    ``src_level`` / ``dst_level``.
    """
    source: Profunctor
    target: Profunctor
    components: dict
    src_level: int = 0
    dst_level: int = 0
    iso: bool = True
    nodes: int = 0

    def __call__(self, a, b, i: int) -> int:
        return self.components[(a, b)][i]

    def apply(self, a, b, x):
        j = self.components[(a, b)][self.source.index(a, b)[x]]
        return self.target.elements(a, b)[j]


NatIsoWitness = NatTrans


@dataclass
class NoIso:
    reason: str
    component: Optional[tuple] = None
    sizes: Optional[tuple] = None
    nodes: int = 0


@dataclass
class BudgetExceeded:
    nodes: int


def window_components(P: Profunctor, Q: Optional[Profunctor], src_level: int, dst_level: int) -> list:
    out = []
    for a in P.src.objects_upto(src_level):
        bs = set(P.support_right(a, dst_level))
        if Q is not None:
            bs.update(Q.support_right(a, dst_level))
        for b in sorted(bs, key=lambda b: objkey(P.dst, b)):
            out.append((a, b))
    return out


def component_sizes(P: Profunctor, src_level: int = 0, dst_level: int = 0) -> dict:
    return {c: P.size(*c) for c in window_components(P, None, src_level, dst_level)}


def identity_witness(P: Profunctor, src_level: int = 0, dst_level: int = 0) -> NatTrans:
    comps = {c: tuple(range(P.size(*c))) for c in window_components(P, None, src_level, dst_level)}
    return NatTrans(P, P, comps, src_level, dst_level)


def nat_from_map(P: Profunctor, Q: Profunctor, fn, src_level: int = 0, dst_level: int = 0,
                 iso: bool = True) -> NatTrans:
    """Transformation given elementwise by ``fn(a, b, x) -> element of Q(a, b)``."""
    comps = {}
    for a, b in window_components(P, Q if iso else None, src_level, dst_level):
        idx = Q.index(a, b)
        comps[(a, b)] = tuple(idx[fn(a, b, x)] for x in P.elements(a, b))
    return NatTrans(P, Q, comps, src_level, dst_level, iso=iso)


def validate_witness(w: NatTrans, full: bool = False) -> ValidationReport:
    """Re-check a transformation from scratch.

    Naturality is checked along generating morphisms, which suffices since
    every morphism is a composite of generators; ``full`` checks along every
    morphism between enumerated objects instead.
    """
    rep = ValidationReport()
    P, Q = w.source, w.target
    if P.src != Q.src or P.dst != Q.dst:
        rep.add("endpoints", (), "source and target have different endpoints")
        return rep
    A, B = P.src, P.dst
    comps = window_components(P, Q if w.iso else None, w.src_level, w.dst_level)
    As = A.objects_upto(w.src_level)
    Bs = B.objects_upto(w.dst_level)
    for a, b in comps:
        n = P.size(a, b)
        table = w.components.get((a, b), () if n == 0 else None)
        if table is None or len(table) != n:
            rep.add("missing", (a, b), "component missing or of the wrong length")
            continue
        m = Q.size(a, b)
        if any(not 0 <= t < m for t in table):
            rep.add("range", (a, b), "component maps outside the target")
            continue
        if w.iso and (m != n or len(set(table)) != n):
            rep.add("bijection", (a, b), f"component is not a bijection ({n} -> {m})")
    if rep.violations:
        return rep
    for a, b in comps:
        Xp, Xq = P.elements(a, b), Q.elements(a, b)
        table = w.components.get((a, b), ())
        fs = [f for y in As for f in A.hom(y, a)] if full else A.gens_into(a)
        for f in fs:
            a2 = A.src(f)
            t2 = w.components.get((a2, b), ())
            ip, iq = P.index(a2, b), Q.index(a2, b)
            for i, x in enumerate(Xp):
                if t2[ip[P.lact(f, b, x)]] != iq[Q.lact(f, b, Xq[table[i]])]:
                    rep.add("naturality", (a, b, f), "square fails for the left action")
                    break
        gs = [g for y in Bs for g in B.hom(b, y)] if full else B.gens_from(b)
        for g in gs:
            b2 = B.dst(g)
            t2 = w.components.get((a, b2), ())
            ip, iq = P.index(a, b2), Q.index(a, b2)
            for i, x in enumerate(Xp):
                if t2[ip[P.ract(a, g, x)]] != iq[Q.ract(a, g, Xq[table[i]])]:
                    rep.add("naturality", (a, b, g), "square fails for the right action")
                    break
    return rep


class _Search:
    def __init__(self, P, Q, comps, budget):
        self.P, self.Q = P, Q
        self.comps = comps
        self.budget = budget
        self.nodes = 0
        self.maps = {c: [-1] * P.size(*c) for c in comps}
        self.used = {c: set() for c in comps}
        self.trail: list = []
        self._tables: dict = {}

    def tables(self, c):
        """Generator action tables for both sides at component ``c``."""
        if c in self._tables:
            return self._tables[c]
        P, Q = self.P, self.Q
        a, b = c
        out = []
        for f in P.src.gens_into(a):
            c2 = (P.src.src(f), b)
            out.append((c2, P.lact_table(f, b), Q.lact_table(f, b)))
        for g in P.dst.gens_from(b):
            c2 = (a, P.dst.dst(g))
            out.append((c2, P.ract_table(a, g), Q.ract_table(a, g)))
        self._tables[c] = out
        return out

    def signature(self, c, side):
        out = []
        for c2, tp, tq in self.tables(c):
            if c2 == c:
                t = tp if side == 0 else tq
                out.append(tuple(t[i] == i for i in range(len(t))))
        return list(zip(*out)) if out else None

    def assign(self, c, i, j) -> bool:
        queue = [(c, i, j)]
        while queue:
            c, i, j = queue.pop()
            m = self.maps[c]
            if m[i] != -1:
                if m[i] != j:
                    return False
                continue
            if j in self.used[c]:
                return False
            m[i] = j
            self.used[c].add(j)
            self.trail.append((c, i, j))
            for c2, tp, tq in self.tables(c):
                queue.append((c2, tp[i], tq[j]))
        return True

    def undo(self, mark: int) -> None:
        while len(self.trail) > mark:
            c, i, j = self.trail.pop()
            self.maps[c][i] = -1
            self.used[c].discard(j)

    def run(self):
        order = [(c, i) for c in self.comps for i in range(len(self.maps[c]))]
        sigs = {}
        for c in self.comps:
            sp, sq = self.signature(c, 0), self.signature(c, 1)
            sigs[c] = (sp, sq)
        stack = []
        pos = 0
        while True:
            while pos < len(order) and self.maps[order[pos][0]][order[pos][1]] != -1:
                pos += 1
            if pos == len(order):
                return True
            c, i = order[pos]
            sp, sq = sigs[c]
            n = len(self.maps[c])
            cands = [j for j in range(n) if j not in self.used[c] and (sp is None or sp[i] == sq[j])]
            stack.append([pos, cands, 0, len(self.trail)])
            while stack:
                frame = stack[-1]
                fpos, fc, k, mark = frame
                moved = False
                while k < len(fc):
                    j = fc[k]
                    k += 1
                    self.nodes += 1
                    if self.nodes > self.budget:
                        raise _Budget()
                    self.undo(mark)
                    c0, i0 = order[fpos]
                    if self.assign(c0, i0, j):
                        moved = True
                        break
                frame[2] = k
                if moved:
                    pos = fpos + 1
                    break
                self.undo(mark)
                stack.pop()
            else:
                return False


class _Budget(Exception):
    pass


def nat_iso_search(P: Profunctor, Q: Profunctor, src_level: int = 0, dst_level: int = 0,
                   budget: int = 1_000_000):
    """Find a natural isomorphism ``P => Q`` on the enumerated window.

    Returns a NatTrans (validated), NoIso, or BudgetExceeded.
    """
    if P.src != Q.src or P.dst != Q.dst:
        raise EndpointMismatch("profunctors have different endpoints")
    comps = window_components(P, Q, src_level, dst_level)
    for c in comps:
        n, m = P.size(*c), Q.size(*c)
        if n != m:
            return NoIso("cardinality", c, (n, m))
    search = _Search(P, Q, comps, budget)
    try:
        found = search.run()
    except _Budget:
        return BudgetExceeded(search.nodes)
    if not found:
        return NoIso("exhausted", nodes=search.nodes)
    comps_out = {c: tuple(search.maps[c]) for c in comps if search.maps[c]}
    w = NatTrans(P, Q, comps_out, src_level, dst_level, iso=True, nodes=search.nodes)
    rep = validate_witness(w)
    if not rep.ok:  # pragma: no cover - would be a bug in the search
        raise AssertionError(f"search produced an invalid witness: {rep}")
    return w
