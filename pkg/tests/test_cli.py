import json
import random

import pytest

from fockcat.cli import (category_from_dict, category_to_dict, corpus_path, load_category,
                         load_vector, main)
from fockcat.fincat import FinCat, cyclic, discrete, poset, terminal, validate, walking_arrow


def write(tmp_path, name, data):
    p = tmp_path / name
    p.write_text(data if isinstance(data, str) else json.dumps(data))
    return str(p)


def test_validate_terminal_file(capsys):
    assert main(["validate", str(corpus_path("terminal"))]) == 0
    assert "valid category" in capsys.readouterr().out


def test_validate_missing_composite_names_pair(tmp_path, capsys):
    path = write(tmp_path, "c.json", {
        "objects": ["x", "y", "z"],
        "morphisms": [{"id": "f", "src": "x", "dst": "y"}, {"id": "g", "src": "y", "dst": "z"},
                      {"id": "h", "src": "x", "dst": "z"}],
        "composition": []})
    assert main(["validate", path]) == 1
    assert "missing composite g o f" in capsys.readouterr().out


def test_validate_malformed(tmp_path):
    assert main(["validate", write(tmp_path, "bad.json", "{not json")]) == 2
    assert main(["validate", write(tmp_path, "bad2.json", {"morphisms": []})]) == 2
    assert main(["validate", str(tmp_path / "absent.json")]) == 2


def test_validate_vectors(tmp_path):
    assert main(["validate", str(corpus_path("v23"))]) == 0
    assert main(["validate", str(corpus_path("poset3_w"))]) == 0
    bad = write(tmp_path, "v.json", {"category": "Z2", "sets": {"*": 2}, "actions": {"s": [1, 1]}})
    assert main(["validate", bad]) == 1


def test_identities_named_explicitly(tmp_path):
    path = write(tmp_path, "c.json", {
        "objects": ["*"], "identities": {"*": "e"},
        "morphisms": [{"id": "e", "src": "*", "dst": "*"}, {"id": "s", "src": "*", "dst": "*"}],
        "composition": [{"g": "s", "f": "s", "gf": "e"}]})
    C = load_category(path)
    assert validate(C).ok and C.mor_label(C.identity(0)) == "e"


def test_fock_tables(capsys):
    assert main(["fock", str(corpus_path("terminal")), "--degree", "3"]) == 0
    rows = capsys.readouterr().out.strip().splitlines()[2:]
    assert [int(r.split()[-1]) for r in rows] == [1, 1, 2, 6]
    assert main(["fock", "Z2", "--degree", "2"]) == 0
    rows = capsys.readouterr().out.strip().splitlines()[2:]
    assert [int(r.split()[-1]) for r in rows] == [1, 2, 8]
    assert main(["fock", "terminal", "--degree", "0"]) == 0
    out = capsys.readouterr().out
    assert "1 objects" in out


def test_check_commutation(capsys):
    assert main(["check", "--suites", "commutation", "--cat", "corpus/terminal", "--degree", "3"]) == 0
    assert "n=2: 6=2+4" in capsys.readouterr().out


def test_check_exp_with_vector(capsys):
    assert main(["check", "--suites", "exp", "--vector", "corpus/v23", "--degree", "3"]) == 0
    assert "'(0,1)': 6" in capsys.readouterr().out


def test_unknown_suite_is_usage_error(capsys):
    assert main(["check", "--suites", "nope", "--cat", "terminal"]) == 2
    with pytest.raises(SystemExit) as exc:
        main(["check", "--degree", "-1", "--cat", "terminal"])
    assert exc.value.code == 2


def test_check_json_is_deterministic(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    args = ["check", "--suites", "homset,kronecker,coherent", "--cat", "discrete2", "--vector", "v23",
            "--degree", "2", "--format", "json"]
    assert main(args + ["--out", str(a)]) == 0
    assert main(args + ["--out", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()
    data = json.loads(a.read_text())
    assert data["passed"] and [s["suite"] for s in data["suites"]] == ["homset", "kronecker", "coherent"]
    assert not list(tmp_path.glob(".*"))  # no temporary files left behind


def test_check_requires_a_category(capsys):
    assert main(["check", "--suites", "homset"]) == 2


def random_category(rng):
    kind = rng.randrange(3)
    if kind == 0:
        return discrete(rng.randint(1, 4))
    if kind == 1:
        return cyclic(rng.randint(1, 5))
    n = rng.randint(1, 5)
    names = [f"e{i}" for i in range(n)]
    leq = [(names[i], names[j]) for i in range(n) for j in range(i + 1, n) if rng.random() < 0.4]
    return poset(names, leq)


@pytest.mark.parametrize("seed", range(20))
def test_round_trip_random(seed):
    C = random_category(random.Random(seed))
    assert category_from_dict(json.loads(json.dumps(category_to_dict(C)))) == C


def test_round_trip_corpus(corpus_cat):
    assert category_from_dict(category_to_dict(corpus_cat)) == corpus_cat


def test_vector_refers_to_category_by_name():
    V = load_vector("v23")
    assert V.dst == discrete(2) and [V.size(0, a) for a in range(2)] == [2, 3]
