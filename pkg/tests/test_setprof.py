import pytest

from fockcat.fincat import cyclic, discrete, terminal, walking_arrow
from fockcat.setprof import (BudgetExceeded, EndpointMismatch, NatTrans, NoIso, ProfDual,
                             ProfSum, ProfTensor, ProfZero, covector, hom_profunctor,
                             identity_witness, nat_iso_search, pairing, prof_validate,
                             representable, validate_witness, vector)
from fockcat.fincat import Functor


def test_hom_profunctor_is_functorial(corpus_cat):
    assert prof_validate(hom_profunctor(corpus_cat)).ok


def test_hom_sizes_match_category(corpus_cat):
    I = hom_profunctor(corpus_cat)
    n = corpus_cat.n_objects
    assert sum(I.size(a, b) for a in range(n) for b in range(n)) == corpus_cat.n_morphisms


def test_vector_with_bad_action_fails_validation():
    Z2 = cyclic(2)
    good = vector(Z2, [2], {1: (1, 0)})
    bad = vector(Z2, [2], {1: (1, 1)})  # s o s must be the identity
    assert prof_validate(good).ok
    assert not prof_validate(bad).ok


def test_tensor_and_sum_sizes():
    A = discrete(2)
    V = vector(A, [2, 3])
    W = covector(A, [1, 4])
    T = ProfTensor((V, V))
    assert T.size((0, 0), (0, 1)) == 6
    S = ProfSum((V, V))
    assert S.size(0, 1) == 6
    assert pairing(V, W).size == 2 * 1 + 3 * 4


def test_dual_swaps_variance():
    A = walking_arrow()
    V = vector(A, [2, 3], {2: (0, 2)})
    D = ProfDual(V)
    assert D.src.n_objects == 2 and D.size(1, 0) == 3
    assert prof_validate(D).ok


def test_zero_is_empty():
    Z = ProfZero(discrete(2), terminal())
    assert all(Z.size(a, 0) == 0 for a in range(2))


def test_identity_witness_validates():
    V = vector(cyclic(2), [3], {1: (1, 0, 2)})
    assert validate_witness(identity_witness(V)).ok


def test_search_finds_relabelled_action():
    Z2 = cyclic(2)
    V = vector(Z2, [3], {1: (1, 0, 2)})
    W = vector(Z2, [3], {1: (0, 2, 1)})
    w = nat_iso_search(V, W)
    assert isinstance(w, NatTrans)
    assert validate_witness(w).ok


def test_search_rejects_equal_cardinality_non_iso():
    # free Z/2-set of size 2 versus two fixed points
    Z2 = cyclic(2)
    free = vector(Z2, [2], {1: (1, 0)})
    trivial = vector(Z2, [2], {1: (0, 1)})
    res = nat_iso_search(free, trivial)
    assert isinstance(res, NoIso) and res.reason == "exhausted"


def test_search_reports_cardinality_counterexample():
    A = discrete(2)
    res = nat_iso_search(vector(A, [2, 3]), vector(A, [2, 2]))
    assert isinstance(res, NoIso)
    assert res.reason == "cardinality" and res.component == (0, 1) and res.sizes == (3, 2)


def test_search_budget():
    A = discrete(1)
    V = vector(A, [7])
    res = nat_iso_search(ProfTensor((V, V)), ProfTensor((V, V)), budget=1)
    assert isinstance(res, (BudgetExceeded, NatTrans))


def test_broken_witness_is_rejected():
    Z2 = cyclic(2)
    V = vector(Z2, [2], {1: (1, 0)})
    ok = identity_witness(V)
    not_bijective = NatTrans(V, V, {(0, 0): (0, 0)})
    assert not validate_witness(not_bijective).ok
    # a bijection that is not natural: swap on a trivial action versus a free one
    W = vector(Z2, [2], {1: (0, 1)})
    unnatural = NatTrans(W, V, {(0, 0): (0, 1)})
    assert validate_witness(ok).ok
    assert "naturality" in validate_witness(unnatural).kinds()


def test_endpoint_mismatch():
    with pytest.raises(EndpointMismatch):
        nat_iso_search(vector(discrete(2), [1, 1]), vector(discrete(3), [1, 1, 1]))


def test_representable_along_functor():
    A = walking_arrow()
    T = terminal()
    F = Functor(T, A, lambda x: 0, lambda f: A.identity(0), fwd=(0, 0), bwd=(0, 0), name="pick0")
    R = representable(F)  # A(F-, -): 1 -/-> A
    assert [R.size(0, b) for b in range(2)] == [1, 1]
    assert prof_validate(R).ok
