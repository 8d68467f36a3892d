import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))
from randinst import random_instance  # noqa: E402

from fockcat.cli import load_vector
from fockcat.coendeng import (Composite, TruncationOverflow, associator, coend, coend_bruteforce,
                              compose_chain, density_iso, left_unitor, prof_compose,
                              right_unitor)
from fockcat.fincat import cyclic, discrete, terminal, walking_arrow
from fockcat.fock import bang, creation, annihilation, kleisli_extension, creation_vec, mult_mu
from fockcat.setprof import (ProfTensor, covector, hom_profunctor, pairing, prof_validate,
                             validate_witness, vector)


def partition(res):
    return sorted(tuple(i for i, l in enumerate(res.labels) if l == k)
                  for k in range(res.classes.size))


@pytest.mark.parametrize("seed", range(60))
def test_coend_matches_bruteforce(seed):
    C, H = random_instance(seed)
    assert partition(coend(C, H)) == coend_bruteforce(C, H)


def _burnside(k, pa, qa):
    def power(perm, j):
        t = list(range(len(perm)))
        for _ in range(j):
            t = [perm[i] for i in t]
        return t
    fix = lambda t: sum(1 for i, x in enumerate(t) if i == x)
    return sum(fix(power(pa, j)) * fix(power(qa, j)) for j in range(k)) // k


def test_coend_over_group_counts_orbits():
    from randinst import product_profunctor
    C = cyclic(3)
    pa, qa = [1, 2, 0, 3], [1, 2, 0]  # a 3-cycle plus a fixed point, and a 3-cycle
    pm, qm = {}, {}
    tp, tq = list(range(4)), list(range(3))
    for f in C.all_morphisms():  # morphism f is s^f
        pm[f], qm[f] = tuple(tp), tuple(tq)
        tp, tq = [pa[i] for i in tp], [qa[i] for i in tq]
    H = product_profunctor(C, [4], [3], pm, qm)
    assert prof_validate(H).ok
    assert coend(C, H).classes.size == _burnside(3, pa, qa)


def test_hom_coend_counts_components():
    # the coend of C(-,-) over a category is its set of connected "trace" classes;
    # for a discrete category it is one class per object
    C = discrete(3)
    assert coend(C, hom_profunctor(C)).classes.size == 3


def test_composite_of_vector_and_covector_is_pairing():
    A = discrete(2)
    V, W = vector(A, [2, 3]), covector(A, [4, 5])
    K = prof_compose(V, W)
    assert K.size(0, 0) == pairing(V, W).size == 23


@pytest.mark.parametrize("name", ["w12", "poset3_w"])
def test_density_on_presheaves(name):
    W = load_vector(name)
    for c in range(W.src.n_objects):
        assert density_iso(W, c).validate()


def test_unitors_and_associator():
    A = walking_arrow()
    V = vector(A, [2, 3], {2: (0, 2)})
    I = hom_profunctor(A)
    W = covector(A, [1, 2], {2: (0, 0)})
    assert validate_witness(left_unitor(prof_compose(hom_profunctor(V.src), V))).ok
    assert validate_witness(right_unitor(prof_compose(V, I))).ok
    left = prof_compose(prof_compose(V, I), W)
    right = prof_compose(V, prof_compose(I, W))
    assert validate_witness(associator(left, right)).ok


def test_composite_actions_are_functorial():
    C = terminal()
    comp = prof_compose(creation(C), annihilation(C))
    assert prof_validate(comp, 2, 2).ok


def test_annihilate_after_create_sizes_on_terminal():
    C = terminal()
    comp = prof_compose(creation(C), annihilation(C))
    sizes = [comp.size((0, (0,) * n), (0, (0,) * n)) for n in range(4)]
    assert sizes == [1, 2, 6, 24]


def test_compose_chain_is_left_nested():
    A = discrete(2)
    V, W = vector(A, [1, 2]), covector(A, [3, 1])
    K = compose_chain(V, hom_profunctor(A), W)
    assert isinstance(K, Composite) and isinstance(K.S, Composite)
    assert K.size(0, 0) == 5


def test_unbounded_middle_without_cap_overflows():
    C = terminal()
    sharp = kleisli_extension(creation_vec(vector(C, [1])))
    comp = Composite(sharp, mult_mu(C))
    with pytest.raises(TruncationOverflow):
        comp.size((), (0,))


def test_cap_probe_detects_contributions_above_cap():
    C = terminal()
    sharp = kleisli_extension(creation_vec(vector(C, [1])))
    comp = Composite(sharp, mult_mu(C), cap=(0, 0))
    assert comp.size((), ()) == 1
    with pytest.raises(TruncationOverflow):
        comp.size((), (0,))
