"""Command-line front end: ``fockcat validate | fock | check``.

Exit codes: 0 pass, 1 law or validation failure, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import tempfile
from importlib import resources
from pathlib import Path

from . import coendeng, laws
from .fincat import CategoryError, FinCat, terminal, validate
from .fock import SizeOverflow, bang
from .setprof import TableProfunctor, covector, prof_validate, vector

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class ParseError(ValueError):
    pass


# ---------------------------------------------------------------------------
# File formats


def category_to_dict(cat: FinCat) -> dict:
    """Serialize by labels; identity composites are implied and left out."""
    ids = set(cat.identities)
    lab = cat.mor_label
    out = {
        "name": cat.name,
        "objects": list(cat.objects),
        "morphisms": [{"id": l, "src": cat.objects[s], "dst": cat.objects[d]}
                      for f, (l, s, d) in enumerate(cat.morphisms) if f not in ids],
        "composition": [{"g": lab(g), "f": lab(f), "gf": lab(h)}
                        for (g, f), h in sorted(cat.composition.items())
                        if g not in ids and f not in ids],
    }
    named = {cat.objects[a]: lab(i) for a, i in enumerate(cat.identities)
             if lab(i) != f"id_{cat.objects[a]}"}
    if named:
        out["identities"] = named
    return out


def category_from_dict(data: dict, name: str = "") -> FinCat:
    """Parse a category description; structural problems are left to :func:`validate`."""
    try:
        objects = [str(o) for o in data["objects"]]
        ids = {str(k): str(v) for k, v in data.get("identities", {}).items()}
        id_labels = set(ids.values())
        mors = [(str(m["id"]), str(m["src"]), str(m["dst"])) for m in data.get("morphisms", [])]
        mors = [m for m in mors if m[0] not in id_labels]
        comp = [(str(c["g"]), str(c["f"]), str(c["gf"])) for c in data.get("composition", [])]
        return FinCat.build(objects, mors, comp, identities=ids, name=str(data.get("name") or name))
    except (KeyError, TypeError, AttributeError) as exc:
        raise ParseError(f"malformed category description: {exc!r}") from None
    except CategoryError as exc:
        raise ParseError(str(exc)) from None


def corpus_path(name: str) -> Path:
    return Path(str(resources.files("fockcat") / "corpus" / f"{name}.json"))


def resolve(ref: str, base: Path = None) -> Path:
    """A path, a path without ``.json``, or a corpus name such as ``corpus/v23``."""
    cands = [Path(ref), Path(ref + ".json")]
    if base is not None:
        cands = [base / ref, base / (ref + ".json")] + cands
    for p in cands:
        if p.is_file():
            return p
    p = corpus_path(Path(ref).name.removesuffix(".json"))
    if p.is_file():
        return p
    raise ParseError(f"no such file or corpus entry: {ref}")


def read_json(path: Path) -> dict:
    try:
        with open(path) as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise ParseError(f"{path}: {exc}") from None
    if not isinstance(data, dict):
        raise ParseError(f"{path}: expected a JSON object")
    return data


def load_category(ref: str, base: Path = None) -> FinCat:
    path = resolve(ref, base)
    return category_from_dict(read_json(path), name=path.stem)


def is_vector_file(data: dict) -> bool:
    return "sets" in data


def vector_from_dict(data: dict, base: Path = None, name: str = "V") -> TableProfunctor:
    """``variance`` is ``covariant`` (a vector 1 -/-> A) or ``contravariant`` (A -/-> 1)."""
    try:
        ref = data["category"]
        cat = category_from_dict(ref) if isinstance(ref, dict) else load_category(str(ref), base)
        sets = {str(k): int(v) for k, v in data["sets"].items()}
        unknown = set(sets) - set(cat.objects)
        if unknown:
            raise ParseError(f"unknown objects in sets: {sorted(unknown)}")
        sizes = [sets.get(o, 0) for o in cat.objects]
        labels = {cat.mor_label(f): f for f in cat.all_morphisms()}
        actions = {}
        for k, table in data.get("actions", {}).items():
            if str(k) not in labels:
                raise ParseError(f"unknown morphism in actions: {k}")
            actions[labels[str(k)]] = tuple(int(i) for i in table)
        variance = data.get("variance", "covariant")
        name = str(data.get("name") or name)
    except (KeyError, TypeError, ValueError, AttributeError) as exc:
        if isinstance(exc, ParseError):
            raise
        raise ParseError(f"malformed vector description: {exc!r}") from None
    if variance == "covariant":
        return vector(cat, sizes, actions, name=name)
    if variance == "contravariant":
        return covector(cat, sizes, actions, name=name)
    raise ParseError(f"unknown variance {variance!r}")


def load_vector(ref: str) -> TableProfunctor:
    path = resolve(ref)
    return vector_from_dict(read_json(path), path.parent, name=path.stem)


def validate_vector(V: TableProfunctor) -> list:
    """Problems with a table vector: out-of-range entries, missing tables, functoriality."""
    covariant = V.src == terminal()
    cat = V.dst if covariant else V.src
    problems = []
    size = lambda a: V.size(0, a) if covariant else V.size(a, 0)
    tables = V.ract_tables if covariant else V.lact_tables
    for f in cat.all_morphisms():
        if cat.is_identity(f):
            continue
        s, d = cat.src(f), cat.dst(f)
        key = (0, f) if covariant else (f, 0)
        n_in, n_out = (size(s), size(d)) if covariant else (size(d), size(s))
        t = tables.get(key)
        if t is None:
            if n_in:
                problems.append(f"missing action for {cat.mor_label(f)}")
            continue
        if len(t) != n_in or any(not 0 <= x < n_out for x in t):
            problems.append(f"action of {cat.mor_label(f)} is not a map of the right sets")
    if not problems:
        problems.extend(str(v) for v in prof_validate(V).violations)
    return problems


def write_atomic(path: str, text: str) -> None:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.")
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        os.unlink(tmp)
        raise


# ---------------------------------------------------------------------------
# Commands


def describe(cat: FinCat, v) -> str:
    labels = {
        "totality": lambda g, f: f"missing composite {cat.mor_label(g)} o {cat.mor_label(f)}",
        "associativity": lambda h, g, f: (f"associativity fails for {cat.mor_label(h)}, "
                                          f"{cat.mor_label(g)}, {cat.mor_label(f)}"),
    }
    try:
        if v.kind in labels:
            return labels[v.kind](*v.ids)
    except (IndexError, TypeError):
        pass
    return str(v)


def cmd_validate(args) -> int:
    path = resolve(args.file)
    data = read_json(path)
    if is_vector_file(data):
        V = vector_from_dict(data, path.parent, name=path.stem)
        problems = validate_vector(V)
        kind = "vector"
    else:
        cat = category_from_dict(data, name=path.stem)
        problems = [describe(cat, v) for v in validate(cat).violations]
        kind = "category"
    if problems:
        print(f"{path}: invalid {kind}")
        for p in problems:
            print(f"  {p}")
        return EXIT_FAIL
    print(f"{path}: valid {kind}")
    return EXIT_OK


def fock_table(cat: FinCat, N: int) -> list:
    """Rows ``(length, objects, morphisms, diagonal)`` of ``!cat`` up to length ``N``."""
    F = bang(cat)
    rows = []
    for n in range(N + 1):
        objs = [x for x in F.objects_upto(n) if len(x) == n] if cat.n_objects else ([()] if n == 0 else [])
        mors = sum(len(F.hom(x, y)) for x in objs for y in objs)
        diag = len(F.hom(objs[0], objs[0])) if objs else 0
        rows.append((n, len(objs), mors, diag))
    return rows


def cmd_fock(args) -> int:
    cat = load_category(args.file)
    rep = validate(cat)
    if not rep.ok:
        print(f"invalid category:\n{rep}")
        return EXIT_FAIL
    rows = fock_table(cat, args.degree)
    print(f"!{cat.name or 'C'} up to length {args.degree}: {sum(r[1] for r in rows)} objects")
    print(f"{'length':>6} {'objects':>8} {'morphisms':>10} {'diagonal':>9}")
    for n, k, m, d in rows:
        print(f"{n:>6} {k:>8} {m:>10} {d:>9}")
    return EXIT_OK


def parse_suites(text: str) -> list:
    names = list(laws.SUITES) if text == "all" else [s.strip() for s in text.split(",") if s.strip()]
    unknown = [n for n in names if n not in laws.SUITES]
    if unknown or not names:
        raise ParseError(f"unknown suite(s): {', '.join(unknown) or text!r}; "
                         f"choose from {', '.join(laws.SUITES)} or 'all'")
    return names


def build_report(reports: list, subject: laws.Subject, N: int, budget: int) -> dict:
    return {
        "category": subject.cat.name,
        "vector": subject.vector.name if subject.vector is not None else None,
        "covector": subject.covector.name if subject.covector is not None else None,
        "degree": N,
        "budget": budget,
        "passed": all(r.passed for r in reports),
        "suites": [r.to_dict() for r in reports],
    }


def cmd_check(args) -> int:
    names = parse_suites(args.suites)
    V = load_vector(args.vector) if args.vector else None
    W = load_vector(args.covector) if args.covector else None
    if args.cat:
        cat = load_category(args.cat)
    elif V is not None:
        cat = V.dst
    elif W is not None:
        cat = W.src
    else:
        raise ParseError("--cat is required unless --vector or --covector is given")
    rep = validate(cat)
    if not rep.ok:
        print(f"invalid category:\n{rep}", file=sys.stderr)
        return EXIT_FAIL
    if V is not None and V.dst != cat:
        raise ParseError("the vector lives over a different category")
    if W is not None and W.src != cat:
        raise ParseError("the covector lives over a different category")
    for P in (V, W):
        if P is not None and validate_vector(P):
            print(f"invalid vector {P.name}", file=sys.stderr)
            return EXIT_FAIL
    coendeng.DEBUG_VALIDATE = args.debug_validate
    subject = laws.Subject(cat, V, W)
    reports = laws.run_suites(names, subject, args.degree, args.budget)
    if args.format == "json":
        text = json.dumps(build_report(reports, subject, args.degree, args.budget),
                          indent=2, sort_keys=True) + "\n"
    else:
        text = "\n".join(r.to_text(timings=args.out is None) for r in reports) + "\n"
    if args.out:
        write_atomic(args.out, text)
        print(f"{'PASS' if all(r.passed for r in reports) else 'FAIL'}: report written to {args.out}")
    else:
        sys.stdout.write(text)
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAIL


def positive(text: str) -> int:
    n = int(text)
    if n <= 0:
        raise argparse.ArgumentTypeError("must be positive")
    return n


def nonneg(text: str) -> int:
    n = int(text)
    if n < 0:
        raise argparse.ArgumentTypeError("must be non-negative")
    return n


def make_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="fockcat", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("validate", help="validate a category or vector file")
    v.add_argument("file")
    v.set_defaults(func=cmd_validate)

    f = sub.add_parser("fock", help="summarize the free symmetric monoidal completion")
    f.add_argument("file")
    f.add_argument("--degree", type=nonneg, default=3)
    f.set_defaults(func=cmd_fock)

    c = sub.add_parser("check", help="run law suites")
    c.add_argument("--suites", default="all", help="comma-separated suite names or 'all'")
    c.add_argument("--cat")
    c.add_argument("--vector")
    c.add_argument("--covector")
    c.add_argument("--degree", type=nonneg, default=3)
    c.add_argument("--budget", type=positive, default=laws.DEFAULT_BUDGET)
    c.add_argument("--format", choices=("text", "json"), default="text")
    c.add_argument("--out")
    c.add_argument("--debug-validate", action="store_true")
    c.set_defaults(func=cmd_check)
    return p


def main(argv=None) -> int:
    parser = make_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"fockcat: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SizeOverflow as exc:
        print(f"fockcat: size overflow: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
