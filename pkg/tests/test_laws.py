import json

import pytest

from fockcat import laws
from fockcat.fincat import cyclic, discrete, terminal
from fockcat.fock import bang, bang_comult, bang_mult, creation, annihilation
from fockcat.coendeng import prof_compose
from fockcat.setprof import ProfSum, ProfTensor, hom_profunctor, vector


@pytest.mark.parametrize("suite", sorted(laws.SUITES))
@pytest.mark.parametrize("cat", [terminal(), discrete(2), cyclic(2)], ids=["1", "disc2", "Z2"])
def test_suites_pass(suite, cat):
    rep = laws.SUITES[suite](laws.Subject(cat), 2, laws.DEFAULT_BUDGET)
    assert rep.passed, rep.to_text()
    assert rep.checks


def test_every_witness_check_is_certified():
    rep = laws.bialgebra_suite(discrete(2), 2)
    for c in rep.checks:
        if c.kind in ("witness", "canonical"):
            assert c.witness and c.lhs_total == c.rhs_total


def test_commutation_records_factorials():
    rep = laws.commutation_suite(terminal(), 3)
    item1 = next(c for c in rep.checks if c.law == "item1")
    assert item1.data["n=2"] == "6=2+4"
    assert {c.law for c in rep.checks} >= {"factorial-lhs", "factorial-identity", "factorial-swap"}


def test_cardinality_mismatch_is_reported():
    A = discrete(2)
    c = laws.iso_check("x", "", vector(A, [2, 3]), vector(A, [3, 2]), 0, 0)
    assert not c.passed and "cardinality mismatch at (0,0)" in c.message


def test_non_iso_with_equal_sizes_fails():
    Z2 = cyclic(2)
    c = laws.iso_check("x", "", vector(Z2, [2], {1: (1, 0)}), vector(Z2, [2], {1: (0, 1)}), 0, 0)
    assert not c.passed and c.message.startswith("no isomorphism")


def test_wrong_law_fails():
    # annihilate after create is not just the identity: the swap summand is missing
    C = terminal()
    FA = bang(C)
    lhs = prof_compose(creation(C), annihilation(C))
    rhs = ProfTensor((hom_profunctor(C), hom_profunctor(FA)))
    assert not laws.iso_check("x", "", lhs, rhs, 2, 2).passed


def test_zero_check_flags_nonzero():
    c = laws.zero_check("x", "", hom_profunctor(discrete(2)), 0, 0)
    assert not c.passed and "nonempty" in c.message


def test_overflow_becomes_failed_check():
    from fockcat.fock import kleisli_extension, creation_vec, mult_mu
    from fockcat.coendeng import Composite
    C = terminal()
    bad = Composite(kleisli_extension(creation_vec(vector(C, [1]))), mult_mu(C))
    c = laws.iso_check("x", "", bad, bad, 0, 1)
    assert not c.passed and c.message.startswith("TruncationOverflow")


def test_report_json_has_no_timing():
    rep = laws.kronecker_suite(discrete(2))
    text = json.dumps(rep.to_dict(), sort_keys=True)
    assert "elapsed" not in text
    assert json.loads(text)["passed"] is True


def test_coherent_suite_sizes():
    V = vector(discrete(2), [2, 3])
    rep = laws.coherent_suite(V, 3)
    assert rep.passed
    closed = next(c for c in rep.checks if c.law == "closed-form")
    assert closed.data["V*((0,1))"] == 6
