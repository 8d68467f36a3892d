"""Finite categories, functors between them, and a small category protocol.

Objects of a FinCat are dense ints ``0..n-1`` and morphisms are dense ints
``0..m-1``; labels are kept separately for display and file round-trips.

Besides ``FinCat`` this module defines the duck-typed protocol shared by
every category the library works with (including the infinite Fock
categories, which are enumerated level by level):

``objects_upto(level)``, ``level(x)``, ``hom(x, y)``, ``compose(g, f)``,
``identity(x)``, ``src(f)``, ``dst(f)``, ``gens_from(x)``, ``gens_into(y)``
and ``ckey(x)``.  ``ckey`` is a connectivity key: if ``hom(x, y)`` is
nonempty then ``ckey(x) == ckey(y)``.  Levels never change along a morphism.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from typing import Any, Callable, Optional, Sequence

import numpy as np


class CategoryError(ValueError):
    pass


# Affine level bounds: (p, q) means level(target) <= p * level(source) + q.
# None means "no bound is known".
LevelMap = Optional[tuple]

IDENTITY_LEVELS = (1, 0)


def chain_levels(first: LevelMap, second: LevelMap) -> LevelMap:
    """Bound for applying ``first`` and then ``second``."""
    if first is None or second is None:
        return None
    p1, q1 = first
    p2, q2 = second
    return (p1 * p2, p2 * q1 + q2)


def join_levels(*maps: LevelMap) -> LevelMap:
    if any(m is None for m in maps):
        return None
    if not maps:
        return (0, 0)
    return (max(m[0] for m in maps), max(m[1] for m in maps))


def apply_levels(m: LevelMap, level: int) -> Optional[int]:
    if m is None:
        return None
    return m[0] * level + m[1]


# ---------------------------------------------------------------------------
# Validation reports


@dataclass(frozen=True)
class Violation:
    kind: str
    ids: tuple
    message: str

    def __str__(self):
        return f"{self.kind} {self.ids}: {self.message}"


@dataclass
class ValidationReport:
    violations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def add(self, kind: str, ids: tuple, message: str) -> None:
        self.violations.append(Violation(kind, tuple(ids), message))

    def extend(self, other: "ValidationReport") -> None:
        self.violations.extend(other.violations)

    def kinds(self) -> set:
        return {v.kind for v in self.violations}

    def __str__(self):
        if self.ok:
            return "ok"
        return "\n".join(str(v) for v in self.violations)


# ---------------------------------------------------------------------------
# Finite categories


class FinCat:
    """An explicit finite category.

    ``morphisms`` is a sequence of ``(label, src, dst)`` with integer
    endpoints, ``identities[a]`` is the identity morphism of object ``a`` and
    ``composition`` maps ``(g, f)`` to ``g o f``.  Nothing is validated on
    construction; call :func:`validate`.
    """

    finite = True

    def __init__(self, objects: Sequence[str], morphisms: Sequence[tuple],
                 identities: Sequence[int], composition: dict, name: str = ""):
        self.objects = tuple(str(o) for o in objects)
        self.morphisms = tuple((str(l), int(s), int(d)) for l, s, d in morphisms)
        self.identities = tuple(int(i) for i in identities)
        self.composition = {(int(g), int(f)): int(h) for (g, f), h in composition.items()}
        self.name = name
        self._key = (self.objects, self.morphisms, self.identities,
                     tuple(sorted(self.composition.items())))
        self._hash = hash(self._key)

    # value semantics
    def __eq__(self, other):
        return isinstance(other, FinCat) and self._key == other._key

    def __hash__(self):
        return self._hash

    def __repr__(self):
        label = f" {self.name}" if self.name else ""
        return f"<FinCat{label}: {self.n_objects} objects, {self.n_morphisms} morphisms>"

    @property
    def n_objects(self) -> int:
        return len(self.objects)

    @property
    def n_morphisms(self) -> int:
        return len(self.morphisms)

    # --- lookup tables, built lazily
    @cached_property
    def _homs(self) -> dict:
        homs: dict = {}
        for m, (_, s, d) in enumerate(self.morphisms):
            homs.setdefault((s, d), []).append(m)
        return {k: tuple(v) for k, v in homs.items()}

    @cached_property
    def _identity_set(self) -> frozenset:
        return frozenset(self.identities)

    @cached_property
    def _gens(self) -> tuple:
        out = [[] for _ in self.objects]
        into = [[] for _ in self.objects]
        for m, (_, s, d) in enumerate(self.morphisms):
            if m in self._identity_set:
                continue
            if 0 <= s < self.n_objects and 0 <= d < self.n_objects:
                out[s].append(m)
                into[d].append(m)
        return tuple(map(tuple, out)), tuple(map(tuple, into))

    @cached_property
    def _components(self) -> tuple:
        parent = list(range(self.n_objects))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for _, s, d in self.morphisms:
            rs, rd = find(s), find(d)
            if rs != rd:
                parent[max(rs, rd)] = min(rs, rd)
        return tuple(find(x) for x in range(self.n_objects))

    @cached_property
    def object_index(self) -> dict:
        return {label: i for i, label in enumerate(self.objects)}

    @cached_property
    def morphism_index(self) -> dict:
        return {label: i for i, (label, _, _) in enumerate(self.morphisms)}

    # --- category protocol
    def objects_upto(self, level: int = 0) -> list:
        return list(range(self.n_objects))

    def objects_at(self, level: int) -> list:
        return list(range(self.n_objects)) if level == 0 else []

    def level(self, x) -> int:
        return 0

    def hom(self, x, y) -> tuple:
        return self._homs.get((x, y), ())

    def compose(self, g, f):
        try:
            return self.composition[(g, f)]
        except KeyError:
            raise CategoryError(f"composite of {g} after {f} is undefined") from None

    def identity(self, x):
        return self.identities[x]

    def is_identity(self, f) -> bool:
        return f in self._identity_set

    def src(self, f):
        return self.morphisms[f][1]

    def dst(self, f):
        return self.morphisms[f][2]

    def gens_from(self, x) -> tuple:
        return self._gens[0][x]

    def gens_into(self, y) -> tuple:
        return self._gens[1][y]

    def ckey(self, x):
        return self._components[x]

    @cached_property
    def _reach(self) -> tuple:
        fwd = [[] for _ in self.objects]
        bwd = [[] for _ in self.objects]
        for (s, d) in sorted(self._homs):
            if 0 <= s < self.n_objects and 0 <= d < self.n_objects:
                fwd[s].append(d)
                bwd[d].append(s)
        return tuple(map(tuple, fwd)), tuple(map(tuple, bwd))

    def reachable_from(self, x) -> tuple:
        """Objects ``y`` with ``hom(x, y)`` nonempty."""
        return self._reach[0][x]

    def reaching(self, y) -> tuple:
        """Objects ``x`` with ``hom(x, y)`` nonempty."""
        return self._reach[1][y]

    def all_morphisms(self) -> range:
        return range(self.n_morphisms)

    def label(self, x) -> str:
        return self.objects[x]

    def mor_label(self, f) -> str:
        return self.morphisms[f][0]

    # --- convenience constructor from labels
    @classmethod
    def build(cls, objects: Sequence[str], morphisms: Sequence[tuple] = (),
              composition: Sequence[tuple] = (), identities: Optional[dict] = None,
              name: str = "") -> "FinCat":
        """Build from labels.

        ``morphisms`` holds ``(label, src_label, dst_label)`` for the
        non-identity arrows, ``composition`` holds ``(g, f, gf)`` label
        triples.  Identities are added as ``id_<obj>`` unless named in
        ``identities``; composites with identities are filled in when absent.
        """
        objects = [str(o) for o in objects]
        oidx = {o: i for i, o in enumerate(objects)}
        if len(oidx) != len(objects):
            raise CategoryError("object labels must be unique")
        identities = dict(identities or {})
        mors: list = []
        ids = []
        for o in objects:
            ids.append(len(mors))
            mors.append((identities.get(o, f"id_{o}"), oidx[o], oidx[o]))
        for label, s, d in morphisms:
            if s not in oidx or d not in oidx:
                raise CategoryError(f"morphism {label} has unknown endpoint")
            mors.append((str(label), oidx[s], oidx[d]))
        midx = {}
        for i, (label, _, _) in enumerate(mors):
            if label in midx:
                raise CategoryError(f"duplicate morphism label {label}")
            midx[label] = i
        comp = {}
        for g, f, gf in composition:
            try:
                comp[(midx[g], midx[f])] = midx[gf]
            except KeyError as exc:
                raise CategoryError(f"unknown morphism {exc.args[0]} in composition") from None
        fill_identity_composites(mors, ids, comp)
        return cls(objects, mors, ids, comp, name=name)


def fill_identity_composites(mors, ids, comp) -> None:
    for m, (_, s, d) in enumerate(mors):
        if 0 <= d < len(ids):
            comp.setdefault((ids[d], m), m)
        if 0 <= s < len(ids):
            comp.setdefault((m, ids[s]), m)


def validate(cat: FinCat) -> ValidationReport:
    """List every violated category axiom with the offending ids."""
    rep = ValidationReport()
    n, m = cat.n_objects, cat.n_morphisms
    if len(set(cat.objects)) != n:
        rep.add("label", (), "object labels are not unique")
    labels = [l for l, _, _ in cat.morphisms]
    if len(set(labels)) != m:
        dup = sorted({l for l in labels if labels.count(l) > 1})
        rep.add("label", tuple(dup), "morphism labels are not unique")
    bad_mor = set()
    for f, (_, s, d) in enumerate(cat.morphisms):
        if not (0 <= s < n and 0 <= d < n):
            rep.add("range", (f,), "morphism endpoint out of range")
            bad_mor.add(f)
    if len(cat.identities) != n:
        rep.add("identity", (), f"{len(cat.identities)} identities for {n} objects")
    for a, i in enumerate(cat.identities[:n]):
        if not 0 <= i < m:
            rep.add("identity", (a, i), "identity id out of range")
            bad_mor.add(-1 - a)
        elif cat.morphisms[i][1:] != (a, a):
            rep.add("identity", (a, i), "identity does not have src = dst = object")
    if rep.violations:
        return rep

    src = np.array([s for _, s, _ in cat.morphisms], dtype=np.int64)
    dst = np.array([d for _, _, d in cat.morphisms], dtype=np.int64)
    table = np.full((m, m), -1, dtype=np.int64)
    for (g, f), h in cat.composition.items():
        if not (0 <= g < m and 0 <= f < m):
            rep.add("range", (g, f), "composition entry refers to unknown morphism")
            continue
        if cat.morphisms[f][2] != cat.morphisms[g][1]:
            rep.add("composable", (g, f), "composite defined for a non-composable pair")
            continue
        if not 0 <= h < m:
            rep.add("range", (g, f), "composite is not a morphism")
            continue
        if (cat.morphisms[h][1], cat.morphisms[h][2]) != (cat.morphisms[f][1], cat.morphisms[g][2]):
            rep.add("endpoints", (g, f), "composite has wrong source or target")
            continue
        table[g, f] = h
    composable = dst[None, :] == src[:, None]  # [g, f]
    for g, f in zip(*np.nonzero(composable & (table < 0))):
        rep.add("totality", (int(g), int(f)), "composite missing for composable pair")
    ids = np.array(cat.identities, dtype=np.int64)
    for f in range(m):
        if table[ids[dst[f]], f] not in (-1, f):
            rep.add("unit", (f,), "left unit law fails")
        if table[f, ids[src[f]]] not in (-1, f):
            rep.add("unit", (f,), "right unit law fails")
    # associativity, one outer morphism at a time
    gf = table
    for h in range(m):
        hg = table[h]  # indexed by g
        left = np.where(gf >= 0, table[h][np.maximum(gf, 0)], -1)
        right = np.where(hg[:, None] >= 0, table[np.maximum(hg, 0)[:, None], np.arange(m)[None, :]], -1)
        both = (gf >= 0) & (hg[:, None] >= 0)
        for g, f in zip(*np.nonzero(both & (left != right))):
            rep.add("associativity", (h, int(g), int(f)), "h(gf) differs from (hg)f")
    return rep


# ---------------------------------------------------------------------------
# Functors


class Functor:
    """A functor given by object and morphism maps.

    ``fwd`` bounds the level of ``F(x)`` by the level of ``x``; ``bwd``
    bounds the level of ``x`` by the level of ``F(x)``.
    """

    def __init__(self, src, dst, obj: Callable, mor: Callable,
                 fwd: LevelMap = IDENTITY_LEVELS, bwd: LevelMap = IDENTITY_LEVELS,
                 name: str = "", pre: Optional[Callable] = None):
        self.src = src
        self.dst = dst
        self.obj = obj
        self.mor = mor
        self.fwd = fwd
        self.bwd = bwd
        self.name = name
        self._pre = pre
        self._pre_cache: dict = {}

    def preimages(self, y, level: int) -> list:
        """Objects ``x`` of level at most ``level`` with ``F(x) == y``."""
        if self._pre is not None:
            return [x for x in self._pre(y, level) if self.src.level(x) <= level]
        table = self._pre_cache.get(level)
        if table is None:
            table = {}
            for x in self.src.objects_upto(level):
                table.setdefault(self.obj(x), []).append(x)
            self._pre_cache[level] = table
        return table.get(y, [])

    def __repr__(self):
        return f"<Functor {self.name or '?'}>"

    @classmethod
    def from_tables(cls, src: FinCat, dst: FinCat, obj_table: Sequence[int],
                    mor_table: Sequence[int], name: str = "") -> "Functor":
        obj_table = tuple(obj_table)
        mor_table = tuple(mor_table)
        f = cls(src, dst, obj_table.__getitem__, mor_table.__getitem__,
                fwd=(0, 0), bwd=(0, 0), name=name)
        f.obj_table = obj_table
        f.mor_table = mor_table
        return f


def identity_functor(cat) -> Functor:
    return Functor(cat, cat, lambda x: x, lambda f: f, name="id", pre=lambda y, l: [y])


def reshape(src, dst, fn: Callable, inverse: Callable, name: str = "reshape") -> Functor:
    """Isomorphism between nested product categories acting on tuples.

    Objects and morphisms of product categories share their nesting, so
    the same function relabels both.
    """
    return Functor(src, dst, fn, fn, name=name, pre=lambda y, l: [inverse(y)])


def compose_functors(G: Functor, F: Functor) -> Functor:
    """G after F."""
    def pre(y, level):
        mid_level = apply_levels(F.fwd, level)
        mids = G.preimages(y, mid_level if mid_level is not None else level)
        return [x for m in mids for x in F.preimages(m, level)]
    return Functor(F.src, G.dst, lambda x: G.obj(F.obj(x)), lambda f: G.mor(F.mor(f)),
                   fwd=chain_levels(F.fwd, G.fwd), bwd=chain_levels(G.bwd, F.bwd),
                   name=f"{G.name}.{F.name}", pre=pre if F.fwd is not None else None)


def validate_functor(F: Functor) -> ValidationReport:
    """Exhaustive functor-law check for functors between finite categories."""
    rep = ValidationReport()
    A, B = F.src, F.dst
    for a in A.objects_upto(0):
        if F.mor(A.identity(a)) != B.identity(F.obj(a)):
            rep.add("identity", (a,), "identity not preserved")
    for f in A.all_morphisms():
        Ff = F.mor(f)
        if (B.src(Ff), B.dst(Ff)) != (F.obj(A.src(f)), F.obj(A.dst(f))):
            rep.add("endpoints", (f,), "image has wrong endpoints")
    for (g, f), gf in sorted(A.composition.items()):
        if B.compose(F.mor(g), F.mor(f)) != F.mor(gf):
            rep.add("composition", (g, f), "composition not preserved")
    return rep


# ---------------------------------------------------------------------------
# Constructors


def terminal() -> FinCat:
    return FinCat.build(["*"], name="1")


def empty() -> FinCat:
    return FinCat((), (), (), {}, name="0")


def discrete(n: int, labels: Optional[Sequence[str]] = None) -> FinCat:
    labels = list(labels) if labels is not None else [chr(ord("a") + i) for i in range(n)]
    return FinCat.build(labels, name=f"disc{n}")


def monoid(table: Sequence[Sequence[int]], names: Optional[Sequence[str]] = None,
           unit: int = 0, obj: str = "*", name: str = "") -> FinCat:
    """One-object category from a multiplication table ``table[g][f] = g*f``."""
    k = len(table)
    names = list(names) if names is not None else ["id" if i == unit else f"m{i}" for i in range(k)]
    order = [unit] + [i for i in range(k) if i != unit]
    pos = {e: i for i, e in enumerate(order)}
    mors = [(names[e], 0, 0) for e in order]
    comp = {(pos[g], pos[f]): pos[table[g][f]] for g in range(k) for f in range(k)}
    return FinCat([obj], mors, [0], comp, name=name)


def cyclic(n: int) -> FinCat:
    """Z/n as a one-object category, generator ``s``."""
    names = ["id"] + ["s" if i == 1 else f"s{i}" for i in range(1, n)]
    return monoid([[(g + f) % n for f in range(n)] for g in range(n)], names, name=f"Z{n}")


def poset(elements: Sequence[str], leq: Sequence[tuple], name: str = "") -> FinCat:
    """Category of a finite poset from generating relations ``(x, y)`` meaning x <= y."""
    elements = list(elements)
    idx = {e: i for i, e in enumerate(elements)}
    n = len(elements)
    rel = [[i == j for j in range(n)] for i in range(n)]
    for x, y in leq:
        rel[idx[x]][idx[y]] = True
    for k in range(n):
        for i in range(n):
            for j in range(n):
                rel[i][j] = rel[i][j] or (rel[i][k] and rel[k][j])
    arrows = [(f"{elements[i]}<{elements[j]}", elements[i], elements[j])
              for i in range(n) for j in range(n) if i != j and rel[i][j]]
    lab = {}
    for i in range(n):
        for j in range(n):
            if rel[i][j]:
                lab[(i, j)] = f"id_{elements[i]}" if i == j else f"{elements[i]}<{elements[j]}"
    comp = [(lab[(j, k)], lab[(i, j)], lab[(i, k)])
            for (i, j) in lab for (j2, k) in lab if j2 == j and not (i == j or j == k)]
    return FinCat.build(elements, arrows, comp, name=name)


def walking_arrow() -> FinCat:
    return FinCat.build(["0", "1"], [("u", "0", "1")], name="arrow")


def opposite(cat):
    """Opposite category; FinCat in, FinCat out, otherwise a lazy wrapper."""
    if isinstance(cat, FinCat):
        mors = [(l, d, s) for l, s, d in cat.morphisms]
        comp = {(f, g): h for (g, f), h in cat.composition.items()}
        return FinCat(cat.objects, mors, cat.identities, comp,
                      name=(cat.name[:-3] if cat.name.endswith("^op") else cat.name + "^op") if cat.name else "")
    if isinstance(cat, OppositeCategory):
        return cat.inner
    return OppositeCategory(cat)


def product(A: FinCat, B: FinCat) -> tuple:
    """Product category with its two projection functors."""
    nb, mb = B.n_objects, B.n_morphisms
    objects = [f"({a},{b})" for a in A.objects for b in B.objects]
    mors = [(f"({fa},{fb})", sa * nb + sb, da * nb + db)
            for fa, sa, da in A.morphisms for fb, sb, db in B.morphisms]
    ids = [A.identities[a] * mb + B.identities[b] for a in range(A.n_objects) for b in range(nb)]
    comp = {}
    for (g1, f1), h1 in A.composition.items():
        for (g2, f2), h2 in B.composition.items():
            comp[(g1 * mb + g2, f1 * mb + f2)] = h1 * mb + h2
    P = FinCat(objects, mors, ids, comp, name=f"{A.name}x{B.name}")
    p1 = Functor.from_tables(P, A, [x // nb for x in range(P.n_objects)],
                             [f // mb for f in range(P.n_morphisms)], name="proj1")
    p2 = Functor.from_tables(P, B, [x % nb for x in range(P.n_objects)],
                             [f % mb for f in range(P.n_morphisms)], name="proj2")
    return P, p1, p2


def coproduct(A: FinCat, B: FinCat) -> tuple:
    """Disjoint union with its two injection functors."""
    na, ma = A.n_objects, A.n_morphisms
    objects = [f"inl.{o}" for o in A.objects] + [f"inr.{o}" for o in B.objects]
    mors = [(f"inl.{l}", s, d) for l, s, d in A.morphisms] + \
           [(f"inr.{l}", s + na, d + na) for l, s, d in B.morphisms]
    ids = list(A.identities) + [i + ma for i in B.identities]
    comp = dict(A.composition)
    comp.update({(g + ma, f + ma): h + ma for (g, f), h in B.composition.items()})
    S = FinCat(objects, mors, ids, comp, name=f"{A.name}+{B.name}")
    i1 = Functor.from_tables(A, S, range(na), range(ma), name="inj1")
    i2 = Functor.from_tables(B, S, [x + na for x in range(B.n_objects)],
                             [f + ma for f in range(B.n_morphisms)], name="inj2")
    return S, i1, i2


# ---------------------------------------------------------------------------
# Lazy categories: products of arbitrary categories, opposites


class ProductCategory:
    """n-ary product of protocol categories; objects and morphisms are tuples."""

    def __init__(self, factors: Sequence):
        self.factors = tuple(factors)
        self.finite = all(getattr(c, "finite", False) for c in self.factors)
        self._cache: dict = {}

    def __eq__(self, other):
        return isinstance(other, ProductCategory) and self.factors == other.factors

    def __hash__(self):
        return hash(("prod", self.factors))

    def __repr__(self):
        return "<Product " + " x ".join(map(repr, self.factors)) + ">"

    def objects_at(self, level: int) -> list:
        key = ("at", level)
        if key not in self._cache:
            self._cache[key] = sorted(
                x for x in self.objects_upto(level) if self.level(x) == level)
        return self._cache[key]

    def objects_upto(self, level: int) -> list:
        key = ("upto", level)
        if key in self._cache:
            return self._cache[key]

        def rec(i, budget):
            if i == len(self.factors):
                yield ()
                return
            C = self.factors[i]
            for c in C.objects_upto(budget):
                l = C.level(c)
                if l <= budget:
                    for rest in rec(i + 1, budget - l):
                        yield (c,) + rest

        out = sorted(rec(0, level), key=lambda x: (self.level(x), x))
        self._cache[key] = out
        return out

    def level(self, x) -> int:
        return sum(C.level(c) for C, c in zip(self.factors, x))

    def hom(self, x, y) -> tuple:
        return tuple(itertools.product(*(C.hom(a, b) for C, a, b in zip(self.factors, x, y))))

    def compose(self, g, f):
        return tuple(C.compose(gi, fi) for C, gi, fi in zip(self.factors, g, f))

    def identity(self, x):
        return tuple(C.identity(c) for C, c in zip(self.factors, x))

    def src(self, f):
        return tuple(C.src(fi) for C, fi in zip(self.factors, f))

    def dst(self, f):
        return tuple(C.dst(fi) for C, fi in zip(self.factors, f))

    def gens_from(self, x) -> tuple:
        out = []
        for i, C in enumerate(self.factors):
            ids = [D.identity(c) for D, c in zip(self.factors, x)]
            for g in C.gens_from(x[i]):
                out.append(tuple(ids[:i]) + (g,) + tuple(ids[i + 1:]))
        return tuple(out)

    def gens_into(self, y) -> tuple:
        out = []
        for i, C in enumerate(self.factors):
            for g in C.gens_into(y[i]):
                ids = [D.identity(c) for D, c in zip(self.factors, y)]
                ids[i] = g
                out.append(tuple(ids))
        return tuple(out)

    def ckey(self, x):
        return tuple(C.ckey(c) for C, c in zip(self.factors, x))

    def reachable_from(self, x) -> list:
        return list(itertools.product(*(C.reachable_from(c) for C, c in zip(self.factors, x))))

    def reaching(self, y) -> list:
        return list(itertools.product(*(C.reaching(c) for C, c in zip(self.factors, y))))


class OppositeCategory:
    """Opposite of a protocol category; morphisms keep their identity."""

    def __init__(self, inner):
        self.inner = inner
        self.finite = getattr(inner, "finite", False)

    def __eq__(self, other):
        return isinstance(other, OppositeCategory) and self.inner == other.inner

    def __hash__(self):
        return hash(("op", self.inner))

    def objects_upto(self, level: int) -> list:
        return self.inner.objects_upto(level)

    def objects_at(self, level: int) -> list:
        return self.inner.objects_at(level)

    def level(self, x) -> int:
        return self.inner.level(x)

    def hom(self, x, y) -> tuple:
        return self.inner.hom(y, x)

    def compose(self, g, f):
        return self.inner.compose(f, g)

    def identity(self, x):
        return self.inner.identity(x)

    def src(self, f):
        return self.inner.dst(f)

    def dst(self, f):
        return self.inner.src(f)

    def gens_from(self, x) -> tuple:
        return self.inner.gens_into(x)

    def gens_into(self, y) -> tuple:
        return self.inner.gens_from(y)

    def ckey(self, x):
        return self.inner.ckey(x)

    def reachable_from(self, x):
        return self.inner.reaching(x)

    def reaching(self, y):
        return self.inner.reachable_from(y)


class CoproductCategory:
    """Binary coproduct of protocol categories; objects are ``(tag, x)``."""

    def __init__(self, A, B):
        self.parts = (A, B)
        self.finite = getattr(A, "finite", False) and getattr(B, "finite", False)

    def __eq__(self, other):
        return isinstance(other, CoproductCategory) and self.parts == other.parts

    def __hash__(self):
        return hash(("coprod", self.parts))

    def objects_upto(self, level: int) -> list:
        out = [(t, x) for t, C in enumerate(self.parts) for x in C.objects_upto(level)]
        return sorted(out, key=lambda o: (self.level(o), o))

    def objects_at(self, level: int) -> list:
        return sorted((t, x) for t, C in enumerate(self.parts) for x in C.objects_at(level))

    def level(self, x) -> int:
        return self.parts[x[0]].level(x[1])

    def hom(self, x, y) -> tuple:
        if x[0] != y[0]:
            return ()
        return tuple((x[0], f) for f in self.parts[x[0]].hom(x[1], y[1]))

    def compose(self, g, f):
        return (g[0], self.parts[g[0]].compose(g[1], f[1]))

    def identity(self, x):
        return (x[0], self.parts[x[0]].identity(x[1]))

    def src(self, f):
        return (f[0], self.parts[f[0]].src(f[1]))

    def dst(self, f):
        return (f[0], self.parts[f[0]].dst(f[1]))

    def gens_from(self, x) -> tuple:
        return tuple((x[0], g) for g in self.parts[x[0]].gens_from(x[1]))

    def gens_into(self, y) -> tuple:
        return tuple((y[0], g) for g in self.parts[y[0]].gens_into(y[1]))

    def ckey(self, x):
        return (x[0], self.parts[x[0]].ckey(x[1]))

    def reachable_from(self, x):
        return [(x[0], y) for y in self.parts[x[0]].reachable_from(x[1])]

    def reaching(self, y):
        return [(y[0], x) for x in self.parts[y[0]].reaching(y[1])]


def injection(S: CoproductCategory, tag: int) -> Functor:
    return Functor(S.parts[tag], S, lambda x: (tag, x), lambda f: (tag, f), name=f"inj{tag + 1}",
                   pre=lambda y, l: [y[1]] if y[0] == tag else [])


def projection(P: ProductCategory, i: int) -> Functor:
    return Functor(P, P.factors[i], lambda x: x[i], lambda f: f[i], fwd=(1, 0), bwd=None,
                   name=f"proj{i + 1}")
