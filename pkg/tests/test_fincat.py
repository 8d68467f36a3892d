import itertools

import pytest

from fockcat.fincat import (CategoryError, FinCat, ProductCategory, chain_levels, coproduct,
                            cyclic, discrete, join_levels, apply_levels, monoid, opposite,
                            poset, product, terminal, validate, validate_functor,
                            walking_arrow)


def test_corpus_validates(corpus_cat):
    assert validate(corpus_cat).ok


def test_builders_validate():
    for C in [terminal(), discrete(3), cyclic(4), walking_arrow(),
              poset(["a", "b", "c", "d"], [("a", "b"), ("b", "c"), ("a", "d")])]:
        assert validate(C).ok, C


def test_missing_composite_is_named():
    C = FinCat.build(["x", "y", "z"], [("f", "x", "y"), ("g", "y", "z"), ("h", "x", "z")])
    rep = validate(C)
    assert rep.kinds() == {"totality"}
    (v,) = rep.violations
    g, f = v.ids
    assert (C.mor_label(g), C.mor_label(f)) == ("g", "f")


def test_associativity_violation_detected():
    # a 3-element "monoid" table that is not associative
    table = [[0, 1, 2], [1, 2, 1], [2, 2, 0]]
    rep = validate(monoid(table))
    assert "associativity" in rep.kinds()


def test_identity_law_violation_detected():
    C = cyclic(2)
    bad = FinCat(C.objects, C.morphisms, C.identities, {**C.composition, (0, 1): 0})
    assert not validate(bad).ok


def test_build_rejects_unknown_labels():
    with pytest.raises(CategoryError):
        FinCat.build(["x"], [("f", "x", "nowhere")])
    with pytest.raises(CategoryError):
        FinCat.build(["x"], [("f", "x", "x")], [("f", "g", "f")])


def test_hom_counts_poset():
    P = poset(["a", "b", "c"], [("a", "b"), ("b", "c")])
    sizes = [[len(P.hom(x, y)) for y in range(3)] for x in range(3)]
    assert sizes == [[1, 1, 1], [0, 1, 1], [0, 0, 1]]


def test_opposite_involution(corpus_cat):
    Op = opposite(corpus_cat)
    assert validate(Op).ok
    assert opposite(Op) == corpus_cat


def test_product_and_coproduct_validate():
    A, B = cyclic(2), walking_arrow()
    P, p1, p2 = product(A, B)
    S, i1, i2 = coproduct(A, B)
    assert validate(P).ok and validate(S).ok
    assert P.n_morphisms == A.n_morphisms * B.n_morphisms
    assert S.n_objects == A.n_objects + B.n_objects
    for F in (p1, p2, i1, i2):
        assert validate_functor(F).ok


def test_lazy_product_matches_finite_product():
    A, B = cyclic(2), walking_arrow()
    P, _, _ = product(A, B)
    L = ProductCategory((A, B))
    objs = L.objects_upto(0)
    assert len(objs) == P.n_objects
    total = sum(len(L.hom(x, y)) for x in objs for y in objs)
    assert total == P.n_morphisms
    for x, y, z in itertools.product(objs, repeat=3):
        for f in L.hom(x, y):
            for g in L.hom(y, z):
                assert L.compose(g, f) in L.hom(x, z)


def test_level_maps():
    assert chain_levels((1, 1), (2, 0)) == (2, 2)
    assert chain_levels(None, (1, 0)) is None
    assert join_levels((1, 0), (2, -1)) == (2, 0)
    assert apply_levels((1, 1), 3) == 4
    assert apply_levels(None, 3) is None
