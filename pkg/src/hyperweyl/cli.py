"""Command-line entry point.

JSON outputs carry tool_version, n, t, command and params next to the result.
Exit status: 0 success, 1 a verification reported failure, 2 usage error.
"""
from __future__ import annotations

import argparse
import json
import sys
from itertools import combinations
from pathlib import Path

from . import __version__
from .errors import HyperWeylError
from .families import FAMILY_IDS, FamilySpec, named_generators
from .hyper import HyperPerm

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _ints(text: str) -> list[int]:
    try:
        return [int(x) for x in text.replace(" ", "").split(",") if x]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma separated integers, got {text!r}")


def _header(command: str, n, t, params: dict) -> dict:
    return {"tool_version": __version__, "n": n, "t": t, "command": command, "params": params}


def _emit(doc: dict, out: str | None = None):
    text = json.dumps(doc, indent=2, ensure_ascii=False, default=_json_default)
    if out:
        Path(out).write_text(text + "\n")
    else:
        print(text)


def _json_default(obj):
    if isinstance(obj, (set, frozenset)):
        return sorted(obj)
    if isinstance(obj, tuple):
        return list(obj)
    raise TypeError(type(obj).__name__)


def _spec_from_args(a) -> FamilySpec:
    params = {}
    for key in ("n", "i", "j", "a", "b", "m"):
        val = getattr(a, key, None)
        if val is not None:
            params[key] = val
    if a.bs:
        params["bs"] = tuple(a.bs)
    if a.C:
        params["C"] = tuple(a.C)
    if a.P:
        params["P"] = tuple(a.P)
    if a.alternative_omega:
        params["alternative_omega"] = True
    return FamilySpec(a.family, params)


def _add_family_args(p):
    p.add_argument("--family", required=True, choices=FAMILY_IDS)
    p.add_argument("--n", type=int)
    for key in ("i", "j", "a", "b", "m"):
        p.add_argument(f"--{key}", type=int)
    p.add_argument("--bs", type=_ints, help="ordered cycle, e.g. 3,4,2")
    p.add_argument("--C", type=_ints)
    p.add_argument("--P", type=_ints)
    p.add_argument("--alternative-omega", action="store_true")


# --- handlers -------------------------------------------------------------

def cmd_stab(a) -> int:
    from .stability import stability_rank
    u = HyperPerm.parse(a.perm, a.n, a.t)
    res = stability_rank(u, a.k_max, a.window)
    doc = _header("stab rank", a.n, a.t, {"perm": a.perm, "k_max": a.k_max, "window": a.window})
    doc.update(res.as_dict())
    _emit(doc)
    return EXIT_OK


def cmd_compat(a) -> int:
    from .compat import compatible
    texts = list(a.pair) + [x for x in (a.u, a.v) if x is not None]
    if len(texts) != 2:
        raise UsageError("compat check needs exactly two permutations")
    a.u, a.v = texts
    u = HyperPerm.parse(a.u, a.n, 2)
    v = HyperPerm.parse(a.v, a.n, 2)
    doc = _header("compat check", a.n, 2, {"u": a.u, "v": a.v})
    doc.update({"u_with_v": compatible(u, v), "v_with_u": compatible(v, u)})
    doc["bicompatible"] = doc["u_with_v"] and doc["v_with_u"]
    _emit(doc)
    return EXIT_OK


def cmd_family(a) -> int:
    spec = _spec_from_args(a)
    gens = named_generators(spec)
    doc = _header("family gens", spec.n, 2, dict(spec.params))
    doc.update({"family": spec.family_id, "label": spec.label(),
                "generators": [{"name": name, "cycles": g.cycles_str()} for name, g in gens]})
    _emit(doc)
    return EXIT_OK


def cmd_group(a) -> int:
    from .groups import fingerprint, isomorphic, model_group
    from .outer import kernel_trivial, pi_sorted
    from .table1 import build, table_rows
    spec = _spec_from_args(a)
    G = build(spec)
    label = next((row.model for row in table_rows() for s in row.specs
                  if s.family_id == spec.family_id), None)
    if spec.family_id == "Kprime":
        label = "Z2xZ2xS4"
    status = isomorphic(G, model_group(label)).status if label else "no label"
    doc = _header("group build", spec.n, 2, dict(spec.params))
    doc.update({
        "family": spec.family_id, "order": G.order, "fingerprint": fingerprint(G).as_dict(),
        "iso_label": label, "iso_status": status, "kernel_trivial": kernel_trivial(G),
        "pi_image": [HyperPerm.from_images(k, spec.n, 2, check=False).cycles_str() for k in pi_sorted(G)],
    })
    _emit(doc, a.report)
    return EXIT_OK


def cmd_outer(a) -> int:
    from .outer import canon, is_inner
    if a.action == "canon":
        u = HyperPerm.parse(a.perm, a.n, 2)
        oc = canon(u)
        inner = is_inner(u)
        doc = _header("outer canon", a.n, 2, {"perm": a.perm})
        doc.update({"canonical": oc.canonical.cycles_str(), "orbit_size": oc.orbit_size,
                    "inner": inner is not None})
        _emit(doc)
        return EXIT_OK
    images = {}
    for path in a.reports:
        rep = json.loads(Path(path).read_text())
        images[path] = frozenset(rep["pi_image"])
    equal = [[p, q] for p, q in combinations(a.reports, 2) if images[p] == images[q]]
    doc = _header("outer pi-distinct", None, 2, {"reports": a.reports})
    doc.update({"equal_pairs": equal, "distinct": not equal})
    _emit(doc)
    return EXIT_OK if not equal else EXIT_FAIL


def cmd_enumerate(a) -> int:
    from . import enumeration as en
    if a.formula:
        params = {"formula": a.formula, "k": a.k, "crosscheck": a.crosscheck}
        try:
            if a.formula == "row":
                if a.k is None:
                    raise UsageError("--k is required with --formula row")
                value = en.count_row_family(a.n, a.k, a.crosscheck)
            else:
                value = en.count_two_disjoint(a.n, a.crosscheck)
        except en.CrosscheckFailed as exc:
            doc = _header("enumerate", a.n, 2, params)
            doc.update({"formula": exc.formula, "brute": exc.brute, "ok": False})
            _emit(doc)
            return EXIT_FAIL
        doc = _header("enumerate", a.n, 2, params)
        doc.update({"count": value, "ok": True})
        _emit(doc)
        return EXIT_OK
    if not a.cycle_type:
        raise UsageError("--cycle-type or --formula is required")
    census = en.enumerate_rank1(a.n, a.cycle_type)
    text = en.census_csv(census)
    if a.out:
        Path(a.out).write_text(text)
    if a.format == "csv":
        sys.stdout.write(text)
        return EXIT_OK
    kinds = {}
    for u in census.perms:
        k = en.kind(u)
        kinds[k] = kinds.get(k, 0) + 1
    doc = _header("enumerate", a.n, 2, {"cycle_type": a.cycle_type})
    doc.update({"candidates": census.candidates, "count": census.count, "kinds": kinds, "csv": a.out})
    _emit(doc)
    return EXIT_OK


def cmd_classify(a) -> int:
    from .bicomp import verify_s4_classification
    rep = verify_s4_classification()
    doc = _header("classify s4", 4, 2, {})
    doc.update(rep.as_dict())
    _emit(doc, a.out)
    return EXIT_OK if rep.passed else EXIT_FAIL


def cmd_verify(a) -> int:
    if a.target == "table1":
        from .table1 import verify_table1
        rep = verify_table1(check_iso=not a.no_iso)
        doc = _header("verify table1", 4, 2, {"check_iso": not a.no_iso})
        doc.update(rep.as_dict())
        ok = rep.passed
    else:
        from .structural import counterexample_sides, crossvalidate
        reps = crossvalidate(a.n, a.random, seed=a.seed)
        doc = _header("verify predicates", a.n, 2, {"random": a.random, "seed": a.seed})
        doc["predicates"] = {r.name: {"checks": r.checks, "positives": r.positives,
                                      "disagreements": r.disagreements} for r in reps}
        doc["counterexamples_n8"] = [{"lhs": l, "rhs": r} for l, r in counterexample_sides()]
        ok = all(r.ok for r in reps)
    doc["passed"] = ok
    _emit(doc, a.out)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_render(a) -> int:
    from .render import render_grid
    u = HyperPerm.parse(a.perm, a.n, 2)
    text = render_grid(u, a.format)
    if a.out:
        Path(a.out).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="hyperweyl", description=__doc__.splitlines()[0])
    ap.add_argument("--version", action="version", version=__version__)
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("stab", help="stability rank of a permutation of [n]^t")
    p.add_argument("action", choices=["rank"])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--t", type=int, default=2)
    p.add_argument("--perm", required=True)
    p.add_argument("--k-max", type=int, default=4)
    p.add_argument("--window", type=int, default=2)
    p.set_defaults(func=cmd_stab)

    p = sub.add_parser("compat", help="compatibility of two level-2 permutations")
    p.add_argument("action", choices=["check"])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("pair", nargs="*", metavar="PERM", help="u and v, positionally")
    p.add_argument("--u")
    p.add_argument("--v")
    p.set_defaults(func=cmd_compat)

    p = sub.add_parser("family", help="named generators of a subgroup family")
    p.add_argument("action", choices=["gens"])
    _add_family_args(p)
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("group", help="build a family group and fingerprint it")
    p.add_argument("action", choices=["build"])
    _add_family_args(p)
    p.add_argument("--report")
    p.set_defaults(func=cmd_group)

    p = sub.add_parser("outer", help="outer classes and π-image comparison")
    osub = p.add_subparsers(dest="action", required=True)
    q = osub.add_parser("canon")
    q.add_argument("--n", type=int, required=True)
    q.add_argument("perm")
    q = osub.add_parser("pi-distinct")
    q.add_argument("--reports", nargs="+", required=True)
    p.set_defaults(func=cmd_outer)

    p = sub.add_parser("enumerate", help="rank-1 census or closed-formula counts")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--cycle-type", type=_ints)
    p.add_argument("--out")
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.add_argument("--formula", choices=["row", "two"])
    p.add_argument("--k", type=int)
    p.add_argument("--crosscheck", action="store_true")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("classify", help="bicompatible S4 subgroups at n=4")
    p.add_argument("target", choices=["s4"])
    p.add_argument("--out")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("verify", help="end-to-end verifications")
    p.add_argument("target", choices=["table1", "predicates"])
    p.add_argument("--out")
    p.add_argument("--no-iso", action="store_true")
    p.add_argument("--n", type=int, default=4)
    p.add_argument("--random", type=int, default=500)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("render", help="draw a level-2 permutation")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--perm", required=True)
    p.add_argument("--format", choices=["svg", "ascii"], default="svg")
    p.add_argument("--out")
    p.set_defaults(func=cmd_render)
    return ap


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        a, extra = parser.parse_known_args(argv)
        if extra:
            # positionals split by options (compat check --n 4 U V) arrive here
            if a.command != "compat" or any(x.startswith("--") for x in extra):
                parser.error(f"unrecognized arguments: {' '.join(extra)}")
            a.pair = list(a.pair) + extra
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        return a.func(a)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except HyperWeylError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
