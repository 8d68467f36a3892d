import itertools
import math

import pytest

from fockcat.fincat import cyclic, discrete, terminal, validate, walking_arrow
from fockcat.fock import (SizeOverflow, bang, certify_sigma_split, coherent_extension, concat,
                          discrete_monoidal, flatten, fock_map, fock_sum_equiv, fock_truncated,
                          MonoidalCategory, perm_compose, perm_inverse, permutations,
                          product_presheaf, sigma_classify, sigma_unclassify, singleton)
from fockcat.setprof import prof_validate, vector


def brute_hom(C, xs, ys):
    """Oracle: bijections i -> sigma(i) with C-morphisms x_i -> y_sigma(i)."""
    if len(xs) != len(ys):
        return 0
    total = 0
    for p in itertools.permutations(range(len(xs))):
        total += math.prod(len(C.hom(xs[i], ys[p[i]])) for i in range(len(xs)))
    return total


def test_permutations_lexicographic():
    assert permutations(3) == ((0, 1, 2), (0, 2, 1), (1, 0, 2), (1, 2, 0), (2, 0, 1), (2, 1, 0))
    assert [len(permutations(n)) for n in range(6)] == [1, 1, 2, 6, 24, 120]


def test_perm_algebra():
    for s in permutations(4):
        assert perm_compose(s, perm_inverse(s)) == tuple(range(4))
        assert sigma_unclassify(*sigma_classify(s)) == s


@pytest.mark.parametrize("n", range(6))
def test_sigma_split_certified(n):
    assert certify_sigma_split(n)


def test_terminal_diagonal_factorials():
    F = bang(terminal())
    assert [len(F.hom((0,) * n, (0,) * n)) for n in range(6)] == [1, 1, 2, 6, 24, 120]


@pytest.mark.parametrize("k", [2, 3])
def test_monoid_diagonal(k):
    F = bang(cyclic(k))
    for n in range(4):
        assert len(F.hom((0,) * n, (0,) * n)) == math.factorial(n) * k ** n


def test_hom_matches_brute_force(corpus_cat):
    F = bang(corpus_cat)
    objs = F.objects_upto(2)
    for xs in objs:
        for ys in objs:
            assert len(F.hom(xs, ys)) == brute_hom(corpus_cat, xs, ys)


@pytest.mark.parametrize("C,N", [(terminal(), 4), (discrete(2), 3), (cyclic(2), 3),
                                 (walking_arrow(), 3), (cyclic(3), 2)])
def test_truncation_is_a_category(C, N):
    T = fock_truncated(C, N)
    assert validate(T.cat).ok
    assert T.cat.n_objects == sum(C.n_objects ** n for n in range(N + 1))


def test_objects_by_level():
    F = bang(discrete(2))
    assert F.objects_upto(0) == [()]
    assert len(F.objects_upto(2)) == 1 + 2 + 4
    assert F.level((0, 1, 1)) == 3


def test_size_cap(monkeypatch):
    monkeypatch.setenv("FOCKCAT_MAX_OBJECTS", "10")
    with pytest.raises(SizeOverflow):
        fock_truncated(discrete(3), 3)


def test_functor_laws_on_samples():
    C = walking_arrow()
    F = bang(C)
    objs = F.objects_upto(2)
    for G in (singleton(C),):
        for a in range(2):
            for b in range(2):
                for f in C.hom(a, b):
                    assert F.src(G.mor(f)) == G.obj(a) and F.dst(G.mor(f)) == G.obj(b)
    cat_ = concat(C)
    for x in objs:
        for y in objs:
            for f in F.hom(x, y):
                for g in F.hom(y, y):
                    left = cat_.mor((F.compose(g, f), F.identity(())))
                    right = F.compose(cat_.mor((g, F.identity(()))), cat_.mor((f, F.identity(()))))
                    assert left == right


def test_flatten_preserves_composition():
    C = cyclic(2)
    FF = bang(bang(C))
    fl = flatten(C)
    F = bang(C)
    alphas = [a for a in FF.objects_upto(4) if FF.hom(a, a)]
    for a in alphas[:30]:
        homs = FF.hom(a, a)
        for f in homs[:6]:
            for g in homs[:6]:
                assert fl.mor(FF.compose(g, f)) == F.compose(fl.mor(g), fl.mor(f))


def test_fock_map_is_functorial():
    C = cyclic(2)
    V = vector(C, [2], {1: (1, 0)})
    from fockcat.setprof import ProfDual
    assert prof_validate(fock_map(ProfDual(V)), 2, 0).ok


def test_coherent_extension_closed_form():
    A = discrete(2)
    V = vector(A, [2, 3])
    gamma = coherent_extension(V)
    F = bang(A)
    for x in F.objects_upto(3):
        assert gamma.size(0, x) == product_presheaf(V, x)
    assert gamma.size(0, (0, 1)) == 6 and gamma.size(0, ()) == 1


def test_sum_equivalence_sizes():
    A, B = discrete(1), cyclic(2)
    phi, inv, S = fock_sum_equiv(A, B)
    FS = bang(S)
    for x in FS.objects_upto(2):
        assert phi.size(((), ()), x) == (1 if x == () else 0)
    assert phi.size(((0,), (0,)), (0, 1)) == 2  # one way to place each part, times |Z/2|
    assert validate(S).ok


def test_monoidal_validation():
    xor = discrete_monoidal(["0", "1"], [[0, 1], [1, 0]])
    assert xor.validate().ok
    bad = MonoidalCategory(xor.cat, 0, [[0, 1], [1, 1]], xor.tensor_mor, xor.symmetry)
    assert not bad.validate().ok
