"""Worked examples, each checked against an independent count."""

from fockcat.coendeng import coend, density_iso, prof_compose
from fockcat.fincat import cyclic, opposite, terminal, validate
from fockcat.fock import (bang, bang_unit, concat, counit_eps, fock_unit_equiv, singleton)
from fockcat.setprof import (HomAlong, TableProfunctor, covector, hom_profunctor, nat_iso_search,
                             NatTrans, vector)


def test_z2_category_and_opposite():
    Z2 = cyclic(2)
    assert validate(Z2).ok
    assert opposite(Z2).composition == Z2.composition
    assert hom_profunctor(Z2).size(0, 0) == 2


def test_coend_swap_against_identity_is_one_class():
    Z2 = cyclic(2)
    H = TableProfunctor(Z2, Z2, {(0, 0): 2}, {(1, 0): (1, 0)}, {(0, 1): (0, 1)})
    assert coend(Z2, H).classes.size == 1


def test_density_for_swap_representation():
    Z2 = cyclic(2)
    W = covector(Z2, [2], {1: (1, 0)})
    w = density_iso(W, 0)
    assert w.validate() and len(w.composite.elements(0, 0)) == 2


def test_unit_law_witness_for_z2():
    Z2 = cyclic(2)
    I = hom_profunctor(Z2)
    assert isinstance(nat_iso_search(prof_compose(I, I), I), NatTrans)


def test_fock_z2_hom_size():
    assert len(bang(cyclic(2)).hom((0, 0), (0, 0))) == 8


def test_small_hom_sets():
    F = bang(cyclic(2))
    assert len(F.hom((), ())) == 1
    assert len(F.hom((0,), ())) == 0
    assert len(F.hom((0,), (0,))) == 2
    assert len(F.hom((0,), (0, 0))) == 0


def test_unit_equivalence_and_units():
    phi, _ = fock_unit_equiv()
    assert phi.size(0, ()) == 1
    A = cyclic(2)
    iota = bang_unit(A)
    assert iota.size(0, ()) == 1 and iota.size(0, (0,)) == 0
    assert counit_eps(A).size((0,), 0) == 2


def test_item4_example_on_z2():
    C = cyclic(2)
    FA = bang(C)
    P = HomAlong(FA, singleton(C), concat(C))
    # (a) against (*).() and ().(*): one singleton hom-set of size |Z/2| = 2
    assert P.size(0, ((0,), ())) == 2
    assert P.size(0, ((), (0,))) == 2
    # against a 2-tuple: lengths differ
    assert P.size(0, ((0,), (0,))) == 0


def test_coherent_state_example():
    from fockcat.fincat import discrete
    from fockcat.fock import coherent_extension
    V = vector(discrete(2), [2, 3])
    g = coherent_extension(V)
    assert g.size(0, (0, 1)) == 6 and g.size(0, ()) == 1
    assert g.size(0, (1, 1, 0)) == 18
