"""Law suites: each law becomes cardinality checks plus a certified witness.

Every check compares two profunctors on a window of components (objects of
the source up to ``src_level``, of the target up to ``dst_level``).  A check
passes only when an isomorphism (found by search or built canonically)
re-validates from scratch, or when a component-size oracle matches exactly.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field
from typing import Callable, Optional

from .coendeng import (Composite, TruncationOverflow, associator, compose_chain, density_iso,
                       left_unitor, prof_compose, right_unitor)
from .fincat import (FinCat, ProductCategory, identity_functor, opposite, reshape, terminal,
                     walking_arrow)
from .fock import (SizeOverflow, algebra_from_monoidal, algebra_unit, annihilation,
                   annihilation_covec, bang, bang_comult, bang_counit, bang_mult, bang_unit,
                   coherent_extension, comult_delta, concat, counit_eps, creation, creation_vec,
                   discrete_monoidal, empty_tuple, exp_alg, exp_free, fock_map, fock_sum_equiv,
                   kleisli_extension, merge, mult_mu, perm_inverse, product_presheaf, singleton,
                   unit_eta, unit_left, unit_right, certify_sigma_split)
from .fincat import Functor, coproduct, empty
from .setprof import (BudgetExceeded, HomAlong, NatTrans, NoIso, ProfSum, ProfTensor, ProfZero,
                      Profunctor, Restrict, Tupling, biproduct, codiag, component_sizes,
                      convolution, covector, diag, hom_profunctor, initial_map, nat_from_map, nat_iso_search,
                      pairing, prof_dual, prof_inj, prof_proj, terminal_map, validate_witness,
                      vector, window_components)

DEFAULT_BUDGET = 1_000_000
SAMPLE = 24


# ---------------------------------------------------------------------------
# Reports


@dataclass
class Check:
    law: str
    anchor: str
    kind: str               # witness | canonical | zero | values
    passed: bool = False
    components: int = 0
    lhs_total: int = 0
    rhs_total: int = 0
    sizes: list = field(default_factory=list)
    witness: bool = False
    nodes: int = 0
    message: str = ""
    data: dict = field(default_factory=dict)
    elapsed: float = 0.0

    def to_dict(self) -> dict:
        """Stable keys; timing is left out so reports are reproducible."""
        return {
            "law": self.law, "anchor": self.anchor, "kind": self.kind,
            "passed": self.passed, "components": self.components,
            "lhs_total": self.lhs_total, "rhs_total": self.rhs_total,
            "sizes": self.sizes, "witness": self.witness, "nodes": self.nodes,
            "message": self.message, "data": self.data,
        }


@dataclass
class SuiteReport:
    suite: str
    subject: str
    degree: Optional[int]
    checks: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_dict(self) -> dict:
        return {"suite": self.suite, "subject": self.subject, "degree": self.degree,
                "passed": self.passed, "checks": [c.to_dict() for c in self.checks]}

    def to_text(self, timings: bool = True) -> str:
        head = f"[{'PASS' if self.passed else 'FAIL'}] {self.suite} on {self.subject}"
        if self.degree is not None:
            head += f" (degree {self.degree})"
        lines = [head]
        for c in self.checks:
            mark = "ok  " if c.passed else "FAIL"
            t = f" {c.elapsed:.2f}s" if timings else ""
            lines.append(f"  {mark} {c.law}: {c.anchor} [{c.kind}; {c.components} components, "
                         f"{c.lhs_total}={c.rhs_total}]{t}")
            if c.message:
                lines.append(f"       {c.message}")
            for k in sorted(c.data):
                lines.append(f"       {k}: {c.data[k]}")
        return "\n".join(lines)


def _label(x) -> str:
    return repr(x).replace(" ", "")


def _sizes(P: Profunctor, Q: Optional[Profunctor], sl: int, dl: int, check: Check) -> list:
    comps = window_components(P, Q, sl, dl)
    rows = [(c, P.size(*c), Q.size(*c) if Q is not None else 0) for c in comps]
    check.components = len(rows)
    check.lhs_total = sum(r[1] for r in rows)
    check.rhs_total = sum(r[2] for r in rows)
    check.sizes = [[_label(c), n, m] for c, n, m in rows[:SAMPLE]]
    return rows


def _guard(check: Check, body: Callable) -> Check:
    t0 = time.perf_counter()
    try:
        body()
    except (TruncationOverflow, SizeOverflow) as exc:
        check.passed = False
        check.message = f"{type(exc).__name__}: {exc}"
    check.elapsed = time.perf_counter() - t0
    return check


def iso_check(law: str, anchor: str, P: Profunctor, Q: Profunctor, sl: int, dl: int,
              budget: int = DEFAULT_BUDGET) -> Check:
    """Cardinalities first, then a searched witness that is re-validated."""
    check = Check(law, anchor, "witness")

    def body():
        rows = _sizes(P, Q, sl, dl, check)
        for c, n, m in rows:
            if n != m:
                check.message = f"cardinality mismatch at {_label(c)}: {n} vs {m}"
                return
        res = nat_iso_search(P, Q, sl, dl, budget)
        if isinstance(res, NatTrans):
            check.nodes = res.nodes
            rep = validate_witness(res)
            check.witness = rep.ok
            check.passed = rep.ok
            if not rep.ok:
                check.message = str(rep)
        elif isinstance(res, BudgetExceeded):
            check.nodes = res.nodes
            check.message = f"search budget exhausted after {res.nodes} nodes"
        else:
            check.nodes = res.nodes
            check.message = f"no isomorphism: {res.reason}"
    return _guard(check, body)


def canonical_check(law: str, anchor: str, build: Callable[[], NatTrans]) -> Check:
    """Validate an explicitly constructed transformation (bijective and natural)."""
    check = Check(law, anchor, "canonical")

    def body():
        w = build()
        _sizes(w.source, w.target, w.src_level, w.dst_level, check)
        rep = validate_witness(w)
        check.witness = rep.ok
        check.passed = rep.ok
        if not rep.ok:
            check.message = str(rep)
    return _guard(check, body)


def zero_check(law: str, anchor: str, P: Profunctor, sl: int, dl: int) -> Check:
    check = Check(law, anchor, "zero")

    def body():
        rows = _sizes(P, None, sl, dl, check)
        bad = [c for c, n, _ in rows if n]
        check.passed = not bad
        if bad:
            check.message = f"nonempty component at {_label(bad[0])}"
    return _guard(check, body)


def values_check(law: str, anchor: str, P: Profunctor, expected: dict) -> Check:
    """``P`` has exactly the given component sizes (all others are not checked)."""
    check = Check(law, anchor, "values")

    def body():
        rows = [(c, P.size(*c), n) for c, n in expected.items()]
        check.components = len(rows)
        check.lhs_total = sum(r[1] for r in rows)
        check.rhs_total = sum(r[2] for r in rows)
        check.sizes = [[_label(c), n, m] for c, n, m in rows[:SAMPLE]]
        bad = [(c, n, m) for c, n, m in rows if n != m]
        check.passed = not bad
        if bad:
            c, n, m = bad[0]
            check.message = f"size {n} at {_label(c)}, expected {m}"
    return _guard(check, body)


# ---------------------------------------------------------------------------
# Shared shapes


def _swap2(P2) -> Functor:
    f = lambda t: (t[1], t[0])
    return reshape(P2, P2, f, f, name="swap")


def _midswap(P22) -> Functor:
    f = lambda t: ((t[0][0], t[1][0]), (t[0][1], t[1][1]))
    return reshape(P22, P22, f, f, name="midswap")


def _unit_pair() -> Functor:
    T = terminal()
    TT = ProductCategory((T, T))
    return reshape(T, TT, lambda x: (x, x), lambda y: y[0], name="diag1")


def interchange_rhs(A) -> Profunctor:
    """``(!Delta x !Delta) ; midswap ; (!nabla x !nabla)`` on ``!A x !A``."""
    FA = bang(A)
    P2 = ProductCategory((FA, FA))
    split = ProfTensor((bang_comult(A), bang_comult(A)))
    join = ProfTensor((bang_mult(A), bang_mult(A)))
    return prof_compose(split, Restrict(join, _midswap(split.dst), identity_functor(P2)))


def constant_vector(A: FinCat, k: int = 1, name: str = "U") -> Profunctor:
    acts = {f: tuple(range(k)) for f in A.all_morphisms() if not A.is_identity(f)}
    return vector(A, [k] * A.n_objects, acts, name=name)


def constant_covector(A: FinCat, k: int = 1, name: str = "U'") -> Profunctor:
    acts = {f: tuple(range(k)) for f in A.all_morphisms() if not A.is_identity(f)}
    return covector(A, [k] * A.n_objects, acts, name=name)


# ---------------------------------------------------------------------------
# Suites


def homset_laws(C: FinCat, N: int = 3, budget: int = DEFAULT_BUDGET) -> SuiteReport:
    """Hom-sets of !C: decomposition along concatenation, small cases, sums."""
    rep = SuiteReport("homset", C.name, N)
    FA = bang(C)
    P2 = ProductCategory((FA, FA))
    I_FA = hom_profunctor(FA)
    cat_ = concat(C)

    lhs = HomAlong(FA, cat_, cat_, name="hom(u.v,x.y)")
    rep.checks.append(iso_check("item1", "!A(u.v, x.y) as a coend of four hom-sets",
                                lhs, interchange_rhs(C), N, N, budget))

    objs = list(range(C.n_objects))
    expected = {((), ()): 1}
    expected.update({((a,), ()): 0 for a in objs})
    expected.update({((), (a,)): 0 for a in objs})
    rep.checks.append(values_check("item2-sizes", "!A((),()) = 1 and singletons vs () are empty",
                                   I_FA, expected))
    S1 = Restrict(I_FA, singleton(C), singleton(C), name="!A((a),(x))")
    rep.checks.append(iso_check("item2-singletons", "!A((a),(x)) = A(a,x)",
                                S1, hom_profunctor(C), 0, 0, budget))

    iota2 = Restrict(ProfTensor((bang_unit(C), bang_unit(C))), _unit_pair(), identity_functor(P2))
    tau2 = Restrict(ProfTensor((bang_counit(C), bang_counit(C))), identity_functor(P2), _unit_pair())
    rep.checks.append(iso_check("item3", "!A((), x.y) = !A((),x) x !A((),y)",
                                HomAlong(FA, empty_tuple(C), cat_), iota2, 0, N, budget))
    rep.checks.append(iso_check("item3-dual", "!A(x.y, ()) = !A(x,()) x !A(y,())",
                                HomAlong(FA, cat_, empty_tuple(C)), tau2, N, 0, budget))

    eta, eps = unit_eta(C), counit_eps(C)
    iu, tu = bang_unit(C), bang_counit(C)
    rhs4 = ProfSum((Restrict(ProfTensor((eta, iu)), unit_right(C), identity_functor(P2)),
                    Restrict(ProfTensor((iu, eta)), unit_left(C), identity_functor(P2))))
    rep.checks.append(iso_check("item4", "!A((a), x.y) = !A((a),x) x !A((),y) + !A((),x) x !A((a),y)",
                                HomAlong(FA, singleton(C), cat_), rhs4, 0, N, budget))
    rhs4d = ProfSum((Restrict(ProfTensor((eps, tu)), identity_functor(P2), unit_right(C)),
                     Restrict(ProfTensor((tu, eps)), identity_functor(P2), unit_left(C))))
    rep.checks.append(iso_check("item4-dual", "!A(x.y, (a)) decomposes dually",
                                HomAlong(FA, cat_, singleton(C)), rhs4d, N, 0, budget))

    S, i1, i2 = coproduct(C, C)
    m = merge(S, i1, i2)
    rep.checks.append(iso_check("item5", "!(A+B)(a.b, x.y) = !A(a,x) x !B(b,y)",
                                HomAlong(bang(S), m, m), ProfTensor((I_FA, I_FA)), N, N, budget))
    return rep


def kronecker_suite(A, budget: int = DEFAULT_BUDGET) -> SuiteReport:
    """Biproduct structure of Prof: injections, projections, convolution."""
    rep = SuiteReport("kronecker", getattr(A, "name", repr(A)), None)
    S = biproduct(A, A)
    inj = [prof_inj(S, 0), prof_inj(S, 1)]
    proj = [prof_proj(S, 0), prof_proj(S, 1)]
    I = hom_profunctor(A)
    for i in range(2):
        for j in range(2):
            comp = prof_compose(inj[i], proj[j])
            law = f"pi{j + 1}.iota{i + 1}"
            if i == j:
                rep.checks.append(iso_check(law, "projection after injection is the identity",
                                            comp, I, 0, 0, budget))
            else:
                rep.checks.append(zero_check(law, "projection after the other injection is zero",
                                             comp, 0, 0))
    rep.checks.append(iso_check("codiag", "nabla = pi1 + pi2", codiag(A),
                                ProfSum(tuple(proj)), 0, 0, budget))
    rep.checks.append(iso_check("diag", "Delta = iota1 + iota2", diag(A),
                                ProfSum(tuple(inj)), 0, 0, budget))
    rep.checks.append(zero_check("zero-map", "A -> 0 -> A is the zero map",
                                 prof_compose(terminal_map(A), initial_map(A)), 0, 0))
    rep.checks.append(iso_check("convolution", "Delta ; (I (+) I) ; nabla = I + I",
                                convolution(I, I), ProfSum((I, I)), 0, 0, budget))
    return rep


def prof_suite(A: FinCat, budget: int = DEFAULT_BUDGET) -> SuiteReport:
    """Unit laws of composition via density, associativity up to iso."""
    rep = SuiteReport("prof", A.name, 2)
    I = hom_profunctor(A)
    V = constant_vector(A, 2, name="V2")
    W = constant_covector(A, 1, name="W1")
    eta = unit_eta(A)
    samples = [(I, 0, 0), (V, 0, 0), (W, 0, 0), (eta, 0, 2)]
    for P, sl, dl in samples:
        IL, IR = hom_profunctor(P.src), hom_profunctor(P.dst)
        rep.checks.append(canonical_check(f"left-unit[{P.name}]", "I ; P => P via density",
                                          lambda P=P, IL=IL, sl=sl, dl=dl:
                                          left_unitor(prof_compose(IL, P), sl, dl)))
        rep.checks.append(canonical_check(f"right-unit[{P.name}]", "P ; I => P via density",
                                          lambda P=P, IR=IR, sl=sl, dl=dl:
                                          right_unitor(prof_compose(P, IR), sl, dl)))

    def density_all():
        ok = True
        for c in range(A.n_objects):
            ok = ok and density_iso(W, c).validate()
            ok = ok and density_iso(constant_covector(A, 3), c).validate()
        return ok
    check = Check("density", "P(c) = coend of P(z) x C(c,z)", "canonical")
    t0 = time.perf_counter()
    check.passed = check.witness = density_all()
    check.components = A.n_objects
    check.elapsed = time.perf_counter() - t0
    rep.checks.append(check)

    triples = [(V, I, W, 0, 0),
               (eta, bang_comult(A), ProfTensor((counit_eps(A), bang_counit(A))), 0, 0)]
    for k, (S_, T_, U_, sl, dl) in enumerate(triples):
        left = prof_compose(prof_compose(S_, T_), U_)
        right = prof_compose(S_, prof_compose(T_, U_))
        rep.checks.append(canonical_check(f"assoc{k + 1}", "(S;T);U => S;(T;U) canonically",
                                          lambda l=left, r=right, sl=sl, dl=dl:
                                          associator(l, r, sl, dl)))
        rep.checks.append(iso_check(f"assoc{k + 1}-search", "(S;T);U = S;(T;U) by search",
                                    left, right, sl, dl, budget))
    return rep


def bialgebra_suite(A, N: int = 3, budget: int = DEFAULT_BUDGET) -> SuiteReport:
    rep = SuiteReport("bialgebra", getattr(A, "name", repr(A)), N)
    FA = bang(A)
    T = terminal()
    P2 = ProductCategory((FA, FA))
    I_FA = hom_profunctor(FA)
    iota, nab, tau, Del = bang_unit(A), bang_mult(A), bang_counit(A), bang_comult(A)
    Id2 = identity_functor(P2)
    IdF = identity_functor(FA)
    P3L = ProductCategory((P2, FA))
    P3R = ProductCategory((FA, P2))
    assoc = reshape(P3L, P3R, lambda t: (t[0][0], (t[0][1], t[1])),
                    lambda t: ((t[0], t[1][0]), t[1][1]), name="assoc")
    assoc_m = Functor(P3L, P3R, assoc.obj, lambda t: (t[0][0], (t[0][1], t[1])),
                      name="assoc", pre=lambda y, l: [((y[0], y[1][0]), y[1][1])])

    lu = prof_compose(Restrict(ProfTensor((iota, I_FA)), unit_left(FA), Id2), nab)
    ru = prof_compose(Restrict(ProfTensor((I_FA, iota)), unit_right(FA), Id2), nab)
    rep.checks.append(iso_check("unit-left", "(!iota x I) ; !nabla = I", lu, I_FA, N, N, budget))
    rep.checks.append(iso_check("unit-right", "(I x !iota) ; !nabla = I", ru, I_FA, N, N, budget))
    lhs = prof_compose(ProfTensor((nab, I_FA)), nab)
    rhs = Restrict(prof_compose(ProfTensor((I_FA, nab)), nab), assoc_m, IdF)
    rep.checks.append(iso_check("assoc", "!nabla is associative", lhs, rhs, N, N, budget))
    rep.checks.append(iso_check("comm", "!nabla o symmetry = !nabla",
                                Restrict(nab, _swap2(P2), IdF), nab, N, N, budget))

    lc = prof_compose(Del, Restrict(ProfTensor((tau, I_FA)), Id2, unit_left(FA)))
    rc = prof_compose(Del, Restrict(ProfTensor((I_FA, tau)), Id2, unit_right(FA)))
    rep.checks.append(iso_check("counit-left", "!Delta ; (!tau x I) = I", lc, I_FA, N, N, budget))
    rep.checks.append(iso_check("counit-right", "!Delta ; (I x !tau) = I", rc, I_FA, N, N, budget))
    lhs = prof_compose(Del, ProfTensor((Del, I_FA)))
    rhs = Restrict(prof_compose(Del, ProfTensor((I_FA, Del))), IdF, assoc_m)
    rep.checks.append(iso_check("coassoc", "!Delta is coassociative", lhs, rhs, N, N, budget))
    rep.checks.append(iso_check("cocomm", "symmetry o !Delta = !Delta",
                                Restrict(Del, IdF, _swap2(P2)), Del, N, N, budget))

    rep.checks.append(iso_check("unit-counit", "!iota ; !tau = I_1",
                                prof_compose(iota, tau), hom_profunctor(T), 0, 0, budget))
    rep.checks.append(iso_check("interchange", "!nabla ; !Delta = (!Delta x !Delta) ; swap ; (!nabla x !nabla)",
                                prof_compose(nab, Del), interchange_rhs(A), N, N, budget))
    rep.checks.append(iso_check("unit-comult", "!iota ; !Delta = !iota x !iota",
                                prof_compose(iota, Del),
                                Restrict(ProfTensor((iota, iota)), _unit_pair(), Id2), 0, N, budget))
    rep.checks.append(iso_check("mult-counit", "!nabla ; !tau = !tau x !tau",
                                prof_compose(nab, tau),
                                Restrict(ProfTensor((tau, tau)), Id2, _unit_pair()), N, 0, budget))
    return rep


def commutation_parts(A) -> tuple:
    """``(lhs, rhs1, rhs2)`` of the commutation relation on ``A x !A``."""
    FA = bang(A)
    AF = ProductCategory((A, FA))
    cr, an = creation(A), annihilation(A)
    IA, IFA = hom_profunctor(A), hom_profunctor(FA)
    lhs = prof_compose(cr, an, name="annihilate.create")
    rhs1 = ProfTensor((IA, IFA))
    AAF = ProductCategory((A, AF))
    sw = lambda t: (t[1][0], (t[0], t[1][1]))
    swapF = reshape(AAF, AAF, sw, sw, name="swap")
    rhs2 = prof_compose(ProfTensor((IA, an)), Restrict(ProfTensor((IA, cr)), swapF, identity_functor(AF)),
                        name="create.swap.annihilate")
    return lhs, rhs1, rhs2


def commutation_witness(A, N: int) -> NatTrans:
    """The canonical bijection ``annihilate.create => I + create.swap.annihilate``.

    An element is a morphism ``h = (pi, f): x.(a) -> (b).y``.  If the created
    slot ``n`` lands in the annihilated slot 0, it is ``(f_n, h')`` in the
    identity summand; otherwise the slot ``j`` landing in 0 is annihilated
    first and ``a`` is created afterwards.
    """
    FA = bang(A)
    lhs, rhs1, rhs2 = commutation_parts(A)
    rhs = ProfSum((rhs1, rhs2))

    def fn(src, dst, x):
        (a, xs), (b, ys) = src, dst
        _, u, v = lhs.unpack(src, dst, x)
        pi, f = FA.compose(v, u)
        n = len(xs)
        if pi[n] == 0:
            return (0, (f[n], (tuple(p - 1 for p in pi[:n]), f[:n])))
        j = pi.index(0)
        rest = [i for i in range(n) if i != j]
        c, ws = xs[j], tuple(xs[i] for i in rest)
        perm1, comps1 = [0] * n, [None] * n
        comps1[j] = A.identity(c)
        for k, i in enumerate(rest):
            perm1[i] = k + 1
            comps1[i] = A.identity(xs[i])
        e1 = (tuple(perm1), tuple(comps1))
        e2 = (tuple(pi[i] - 1 for i in rest) + (pi[n] - 1,), tuple(f[i] for i in rest) + (f[n],))
        mid = (a, (c, ws))
        return (1, rhs2.classify_elements(src, dst, mid, (A.identity(a), e1), (f[j], e2)))

    
    return nat_from_map(lhs, rhs, fn, N - 1, N - 1)


def commutation_suite(A, N: int = 3, budget: int = DEFAULT_BUDGET) -> SuiteReport:
    rep = SuiteReport("commutation", getattr(A, "name", repr(A)), N)
    FA = bang(A)
    AF = ProductCategory((A, FA))
    lhs, rhs1, rhs2 = commutation_parts(A)
    rhs = ProfSum((rhs1, rhs2))
    sigma = Check("sigma-split", "Sigma_{n+1} = Sigma_n + [n] x Sigma_n via the classifier", "canonical")
    sigma.passed = sigma.witness = all(certify_sigma_split(n) for n in range(max(N, 4) + 1))
    sigma.components = max(N, 4) + 1
    rep.checks.append(sigma)

    c1 = iso_check("item1", "annihilate.create = I + create.swap.annihilate", lhs, rhs, N - 1, N - 1, budget)
    a0 = A.objects_upto(0)[0]
    for n in range(N):
        comp = ((a0, (a0,) * n), (a0, (a0,) * n))
        c1.data[f"n={n}"] = f"{lhs.size(*comp)}={rhs1.size(*comp)}+{rhs2.size(*comp)}"
    rep.checks.append(c1)
    if isinstance(A, FinCat) and A.n_objects == 1 and A.n_morphisms == 1:
        top = max(N - 1, 4)
        comps = [((0, (0,) * n), (0, (0,) * n)) for n in range(top + 1)]
        for part, law, size in ((lhs, "factorial-lhs", lambda n: math.factorial(n + 1)),
                                (rhs1, "factorial-identity", math.factorial),
                                (rhs2, "factorial-swap", lambda n: n * math.factorial(n))):
            rep.checks.append(values_check(law, "(n+1)! = n! + n n! on the terminal base",
                                           part, {c: size(len(c[0][1])) for c in comps}))
    rep.checks.append(canonical_check("item1-canonical", "created element survives or is annihilated",
                                      lambda: commutation_witness(A, N)))

    IA = hom_profunctor(A)
    cr, an = creation(A), annihilation(A)
    AAF = ProductCategory((A, AF))
    sw = lambda t: (t[1][0], (t[0], t[1][1]))
    swap12 = reshape(AAF, AAF, sw, sw, name="swap")
    C1 = prof_compose(ProfTensor((IA, cr)), cr)
    rep.checks.append(iso_check("item2", "creation commutes with itself up to symmetry",
                                C1, Restrict(C1, swap12, identity_functor(FA)), N - 2, N, budget))
    D1 = prof_compose(an, ProfTensor((IA, an)))
    rep.checks.append(iso_check("item3", "annihilation commutes with itself up to symmetry",
                                D1, Restrict(D1, identity_functor(FA), swap12), N, N - 2, budget))
    return rep


def interaction_suite(A: FinCat, N: int = 3, V: Profunctor = None, W: Profunctor = None,
                      budget: int = DEFAULT_BUDGET) -> SuiteReport:
    rep = SuiteReport("interaction", A.name, N)
    V = V if V is not None else constant_vector(A, 1, name="V")
    W = W if W is not None else constant_covector(A, 1, name="W")
    FA = bang(A)
    AF = ProductCategory((A, FA))
    P2 = ProductCategory((FA, FA))
    IA, IFA = hom_profunctor(A), hom_profunctor(FA)
    cr, an = creation(A), annihilation(A)
    iota, nab, tau, Del = bang_unit(A), bang_mult(A), bang_counit(A), bang_comult(A)
    eta, eps = unit_eta(A), counit_eps(A)
    Id2 = identity_functor(P2)

    rep.checks.append(zero_check("tau.create", "!tau o create = 0", prof_compose(cr, tau), N, 0))
    rep.checks.append(zero_check("annihilate.iota", "annihilate o !iota = 0",
                                 prof_compose(iota, an), 0, N))

    AP2 = ProductCategory((A, P2))
    F1 = reshape(AP2, ProductCategory((AF, FA)), lambda t: ((t[0], t[1][0]), t[1][1]),
                 lambda t: (t[0][0], (t[0][1], t[1])), name="assoc")
    F2 = reshape(AP2, ProductCategory((FA, AF)), lambda t: (t[1][0], (t[0], t[1][1])),
                 lambda t: (t[1][0], (t[0], t[1][1])), name="shuffle")
    R = ProfSum((Restrict(ProfTensor((cr, IFA)), F1, Id2), Restrict(ProfTensor((IFA, cr)), F2, Id2)))
    rep.checks.append(iso_check("Delta.create", "!Delta o create = create on either side after !Delta",
                                prof_compose(cr, Del), prof_compose(ProfTensor((IA, Del)), R),
                                N - 1, N, budget))
    G = ProfSum((Restrict(ProfTensor((an, IFA)), Id2, F1), Restrict(ProfTensor((IFA, an)), Id2, F2)))
    rep.checks.append(iso_check("annihilate.nabla", "annihilate o !nabla = annihilate on either side",
                                prof_compose(nab, an), prof_compose(G, ProfTensor((IA, nab))),
                                N, N - 1, budget))

    S = biproduct(A, A)
    bi = ProfSum((fock_map(prof_inj(S, 0)), fock_map(prof_inj(S, 1))))
    rep.checks.append(iso_check("lemma1", "eta_{A+A} o Delta = (!iota1 + !iota2) o eta",
                                prof_compose(diag(A), unit_eta(S)), prof_compose(eta, bi), 0, N, budget))
    bp = ProfSum((fock_map(prof_proj(S, 0)), fock_map(prof_proj(S, 1))))
    rep.checks.append(iso_check("lemma1-dual", "nabla o eps_{A+A} = eps o (!pi1 + !pi2)",
                                prof_compose(counit_eps(S), codiag(A)), prof_compose(bp, eps), N, 0, budget))
    rhs = ProfSum((Restrict(ProfTensor((eta, iota)), unit_right(A), Id2),
                   Restrict(ProfTensor((iota, eta)), unit_left(A), Id2)))
    rep.checks.append(iso_check("lemma2", "!Delta o eta = (eta x !iota) + (!iota x eta)",
                                prof_compose(eta, Del), rhs, 0, N, budget))
    rhs = ProfSum((Restrict(ProfTensor((eps, tau)), Id2, unit_right(A)),
                   Restrict(ProfTensor((tau, eps)), Id2, unit_left(A))))
    rep.checks.append(iso_check("lemma2-dual", "eps o !nabla = (eps x !tau) + (!tau x eps)",
                                prof_compose(nab, eps), rhs, N, 0, budget))
    rep.checks.append(zero_check("lemma3", "!tau o eta = 0", prof_compose(eta, tau), 0, 0))
    rep.checks.append(zero_check("lemma3-dual", "eps o !iota = 0", prof_compose(iota, eps), 0, 0))

    crV, anW = creation_vec(V), annihilation_covec(W)
    K = compose_chain(V, eta, eps, W)
    rep.checks.append(values_check("pairing", "W eps eta V has the size of <V,W>",
                                   K, {(0, 0): pairing(V, W).size}))
    lhs = prof_compose(crV, anW)
    rhs = ProfSum((Restrict(ProfTensor((K, IFA)), unit_left(FA), unit_left(FA)), prof_compose(anW, crV)))
    rep.checks.append(iso_check("corollary", "annihilate^W o create^V = <V,W> I + create^V o annihilate^W",
                                lhs, rhs, N - 1, N - 1, budget))
    U, U2 = constant_vector(A, 1, name="U"), constant_covector(A, 1, name="U'")
    cU, aU = creation_vec(U), annihilation_covec(U2)
    rep.checks.append(iso_check("create-commute", "create^u o create^v = create^v o create^u",
                                prof_compose(crV, cU), prof_compose(cU, crV), N - 2, N, budget))
    rep.checks.append(iso_check("annihilate-commute", "annihilate^u o annihilate^v = annihilate^v o annihilate^u",
                                prof_compose(anW, aU), prof_compose(aU, anW), N, N - 2, budget))
    return rep


def _duality_reshape(A: FinCat) -> Profunctor:
    """``(create_{A^op})^op`` restricted to ``!A -/-> A x !A``."""
    Aop = opposite(A)
    FA, FAop = bang(A), bang(Aop)
    OFop = opposite(FAop)

    def flip(f):
        sigma, fs = f
        inv = perm_inverse(sigma)
        return (inv, tuple(fs[inv[j]] for j in range(len(fs))))

    Phi = Functor(FA, OFop, lambda x: x, flip, name="flip", pre=lambda y, l: [y])
    D = prof_dual(creation(Aop))
    Psi = Functor(ProductCategory((A, FA)), D.dst, lambda x: x, lambda f: (f[0], flip(f[1])),
                  name="flip", pre=lambda y, l: [y])
    return Restrict(D, Phi, Psi, name="create_op^op")


def comonad_suite(A: FinCat, N: int = 3, budget: int = DEFAULT_BUDGET) -> SuiteReport:
    rep = SuiteReport("comonad", A.name, N)
    FA = bang(A)
    FFA = bang(FA)
    I_FA = hom_profunctor(FA)
    delta, eps = comult_delta(A), counit_eps(A)
    eta, mu = unit_eta(A), mult_mu(A)

    rep.checks.append(iso_check("counit1", "eps_{!A} o delta = I", prof_compose(delta, counit_eps(FA)),
                                I_FA, N, N, budget))
    rep.checks.append(iso_check("counit2", "!eps o delta = I", prof_compose(delta, fock_map(eps)),
                                I_FA, N, N, budget))
    rep.checks.append(iso_check("coassoc", "delta_{!A} o delta = !delta o delta",
                                prof_compose(delta, comult_delta(FA)),
                                prof_compose(delta, fock_map(delta)), N, 2 * N, budget))
    rep.checks.append(iso_check("unit1", "mu o eta_{!A} = I", prof_compose(unit_eta(FA), mu),
                                I_FA, N, N, budget))
    rep.checks.append(iso_check("unit2", "mu o !eta = I", prof_compose(fock_map(eta), mu),
                                I_FA, N, N, budget))
    rep.checks.append(iso_check("assoc", "mu o mu_{!A} = mu o !mu",
                                prof_compose(mult_mu(FA), mu), prof_compose(fock_map(mu), mu),
                                2 * N, N, budget))
    rep.checks.append(iso_check("duality", "annihilate_A = (create_{A^op})^op",
                                annihilation(A), _duality_reshape(A), N, N - 1, budget))
    rep.checks.append(iso_check("tau.delta", "!tau_{!A} o delta = !tau",
                                prof_compose(delta, bang_counit(FA)), bang_counit(A), N, 0, budget))

    O = empty()
    F0 = bang(O)
    rep.checks.append(iso_check("coherence1", "!(0) o delta_0 = I on !0",
                                prof_compose(comult_delta(O), fock_map(ProfZero(F0, O))),
                                hom_profunctor(F0), 2, 2, budget))

    d2 = min(N, 2)
    phi, _, S = fock_sum_equiv(A, A)
    phiF, _, SF = fock_sum_equiv(FA, FA)
    pi = Tupling(fock_map(HomAlong(S, identity_functor(S), _inj_functor(S, A, 0))),
                 fock_map(HomAlong(S, identity_functor(S), _inj_functor(S, A, 1))))
    lhs = compose_chain(phi, comult_delta(S), fock_map(pi))
    rhs = prof_compose(ProfTensor((delta, delta)), phiF)
    rep.checks.append(iso_check("coherence2", "phi_{!A,!B} o (delta x delta) = !<!pi1,!pi2> o delta o phi",
                                lhs, rhs, d2, 2 * d2, budget))
    return rep


def _inj_functor(S: FinCat, A: FinCat, tag: int) -> Functor:
    na, ma = A.n_objects, A.n_morphisms
    return Functor(A, S, lambda x: x + tag * na, lambda f: f + tag * ma, fwd=(0, 0), bwd=(0, 0),
                   name=f"inj{tag + 1}",
                   pre=lambda y, l: [y - tag * na] if tag * na <= y < (tag + 1) * na else [])


def compat_suite(A, C, budget: int = DEFAULT_BUDGET) -> SuiteReport:
    """Compatibility of the tensor (product) with the biproduct (coproduct) in Prof."""
    rep = SuiteReport("compat", f"{getattr(A, 'name', A)},{getattr(C, 'name', C)}", None)
    IC = hom_profunctor(C)
    AC = ProductCategory((A, C))
    lhs = prof_compose(ProfTensor((terminal_map(A), IC)), ProfTensor((initial_map(A), IC)))
    rep.checks.append(zero_check("zero-tensor", "(i x id)(t x id) is zero", lhs, 0, 0))
    rep.checks.append(iso_check("zero-tensor-both", "(i x id)(t x id) = i_{AxC} t_{AxC}",
                                lhs, prof_compose(terminal_map(AC), initial_map(AC)), 0, 0, budget))
    S = biproduct(A, A)
    d = Tupling(ProfTensor((prof_proj(S, 0), IC)), ProfTensor((prof_proj(S, 1), IC)), name="d")
    rep.checks.append(iso_check("diag", "Delta_{AxC} = d o (Delta_A x id)", diag(AC),
                                prof_compose(ProfTensor((diag(A), IC)), d), 0, 0, budget))
    rep.checks.append(iso_check("codiag", "nabla_A x id = nabla_{AxC} o d", ProfTensor((codiag(A), IC)),
                                prof_compose(d, codiag(AC)), 0, 0, budget))
    rep.checks.append(iso_check("square", "(nabla x id)(Delta x id) = nabla_{AxC} Delta_{AxC}",
                                prof_compose(ProfTensor((diag(A), IC)), ProfTensor((codiag(A), IC))),
                                prof_compose(diag(AC), codiag(AC)), 0, 0, budget))
    return rep


def coherent_suite(V: Profunctor, N: int = 3, budget: int = DEFAULT_BUDGET) -> SuiteReport:
    A = V.dst
    rep = SuiteReport("coherent", f"{V.name} over {A.name}", N)
    FA = bang(A)
    gamma = coherent_extension(V)
    expected = {(0, x): product_presheaf(V, x) for x in FA.objects_upto(N)}
    c = values_check("closed-form", "V*(a) = prod |V_(a_i)|", gamma, expected)
    if A.n_objects >= 2:
        c.data["V*((0,1))"] = gamma.size(0, (0, 1))
    c.data["V*(())"] = gamma.size(0, ())
    rep.checks.append(c)
    AF = ProductCategory((A, FA))
    P2 = ProductCategory((FA, FA))
    rep.checks.append(iso_check("cond1", "annihilate o V* = V x V*", prof_compose(gamma, annihilation(A)),
                                Restrict(ProfTensor((V, gamma)), _unit_pair(), identity_functor(AF)),
                                0, N - 1, budget))
    rep.checks.append(iso_check("cond2", "!tau o V* = id", prof_compose(gamma, bang_counit(A)),
                                hom_profunctor(terminal()), 0, 0, budget))
    rep.checks.append(iso_check("cond3", "!Delta o V* = V* x V*", prof_compose(gamma, bang_comult(A)),
                                Restrict(ProfTensor((gamma, gamma)), _unit_pair(), identity_functor(P2)),
                                0, N, budget))
    zero = vector(A, [0] * A.n_objects, name="0")
    rep.checks.append(iso_check("zero", "0* = !iota", coherent_extension(zero), bang_unit(A), 0, N, budget))
    eps = counit_eps(A)
    sharp = kleisli_extension(eps)
    rep.checks.append(iso_check("kleisli", "annihilate o u# = (u x u#) o !Delta for u = eps",
                                prof_compose(sharp, annihilation(A)),
                                prof_compose(bang_comult(A), ProfTensor((eps, sharp))), N, N - 1, budget))
    return rep


def xor_monoidal():
    """Z/2 under addition as a discrete strict symmetric monoidal category."""
    return discrete_monoidal(["0", "1"], [[0, 1], [1, 0]], name="Z2+")


def exp_suite(V: Profunctor, N: int = 3, budget: int = DEFAULT_BUDGET) -> SuiteReport:
    A = V.dst
    rep = SuiteReport("exp", f"{V.name} over {A.name}", N)
    FA = bang(A)
    iota = bang_unit(A)
    crV = creation_vec(V)
    lhs = prof_compose(iota, exp_free(crV))
    gamma = coherent_extension(V)
    c = iso_check("theorem", "exp_mu(create^V) o !iota = V*", lhs, gamma, 0, N, budget)
    c.data["sizes"] = {_label(x): lhs.size(0, x) for x in FA.objects_upto(min(N, 2))}
    rep.checks.append(c)
    rep.checks.append(values_check("closed-form", "component at a is prod |V_(a_i)|", lhs,
                                   {(0, x): product_presheaf(V, x) for x in FA.objects_upto(N)}))
    rep.checks.append(iso_check("creation-state", "(create^V)# o !iota = (eta o V)*",
                                prof_compose(iota, kleisli_extension(crV)),
                                coherent_extension(prof_compose(V, unit_eta(A))), 0, 2 * N, budget))
    rep.checks.append(iso_check("exp-zero", "exp_mu(0) = mu^(0)", exp_free(ProfZero(FA, FA)),
                                algebra_unit(mult_mu(A), A), N, N, budget))
    Mon = xor_monoidal()
    Mstar = algebra_from_monoidal(Mon)
    rep.checks.append(iso_check("exp-zero-monoidal", "exp_M(0) = M^(0) for M = (Z/2,+)",
                                exp_alg(Mstar, ProfZero(FA, Mon.cat)), algebra_unit(Mstar, A),
                                N, 0, budget))
    U = constant_vector(A, 1, name="U")
    S_, T_ = crV, creation_vec(U)
    rhs = compose_chain(bang_comult(A), ProfTensor((exp_free(S_), exp_free(T_))), bang_mult(A))
    rep.checks.append(iso_check("additivity", "exp(S+T) = !nabla o (exp S x exp T) o !Delta",
                                exp_free(ProfSum((S_, T_))), rhs, N - 1, N, budget))
    zero = vector(A, [0] * A.n_objects, name="0")
    rep.checks.append(iso_check("zero-vector", "exp_mu(create^0) o !iota = !iota",
                                prof_compose(iota, exp_free(creation_vec(zero))), iota, 0, N, budget))
    return rep


# ---------------------------------------------------------------------------
# Registry


@dataclass
class Subject:
    cat: FinCat
    vector: Optional[Profunctor] = None
    covector: Optional[Profunctor] = None


def _vec(s: Subject) -> Profunctor:
    return s.vector if s.vector is not None else constant_vector(s.cat, 1, name="U")


SUITES = {
    "homset": lambda s, N, b: homset_laws(s.cat, N, b),
    "kronecker": lambda s, N, b: kronecker_suite(s.cat, b),
    "prof": lambda s, N, b: prof_suite(s.cat, b),
    "compat": lambda s, N, b: compat_suite(s.cat, walking_arrow(), b),
    "bialgebra": lambda s, N, b: bialgebra_suite(s.cat, N, b),
    "commutation": lambda s, N, b: commutation_suite(s.cat, N, b),
    "interaction": lambda s, N, b: interaction_suite(s.cat, N, s.vector, s.covector, b),
    "comonad": lambda s, N, b: comonad_suite(s.cat, N, b),
    "coherent": lambda s, N, b: coherent_suite(_vec(s), N, b),
    "exp": lambda s, N, b: exp_suite(_vec(s), N, b),
}


def run_suites(names, subject: Subject, N: int, budget: int = DEFAULT_BUDGET) -> list:
    """Run suites in the given order; unknown names raise KeyError."""
    return [SUITES[n](subject, N, budget) for n in names]
