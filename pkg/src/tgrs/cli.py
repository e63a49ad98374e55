"""Command-line entry point: ``tgrs <command> ...``.

Exit codes: 0 success, 1 a check or assertion failed, 2 bad input or a bound
was exceeded.
"""

from __future__ import annotations

import argparse
import contextlib
import json
import os
import sys
from pathlib import Path

from .code import classify, dual, hull_dim, is_self_dual, is_self_orthogonal, min_distance, quantum_derive
from .criteria import check_so, is_mds
from .errors import NotSelfOrthogonal, TGRSError
from .recipes import RECIPE_IDS, Recipe, construct_full
from .twisted import TGRSInstance

CHECKS = ("so", "sd", "mds", "dmin", "dual", "quantum", "hull")


class InputError(Exception):
    """Unreadable or malformed input file."""


def _emit(obj, fmt: str, text: str, out: str | None = None) -> None:
    body = json.dumps(obj, indent=2, sort_keys=True) if fmt == "structured" else text
    if out:
        Path(out).write_text(body + "\n", encoding="utf-8")
    else:
        print(body)


def _read_json(path: str) -> dict:
    try:
        return json.loads(Path(path).read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"{path}: {exc}") from exc


def _load_instance(path: str) -> TGRSInstance:
    obj = _read_json(path)
    if "instance" in obj and "alpha" not in obj:
        obj = obj["instance"]
    try:
        return TGRSInstance.from_json(obj)
    except (KeyError, TypeError) as exc:
        raise InputError(f"{path}: missing or malformed field {exc}") from exc


@contextlib.contextmanager
def _bounds(max_n: int | None):
    if max_n is None:
        yield
        return
    if max_n <= 0:
        raise InputError("--max-n must be positive")
    old = os.environ.get("TGRS_MAX_N")
    os.environ["TGRS_MAX_N"] = str(max_n)
    try:
        yield
    finally:
        if old is None:
            del os.environ["TGRS_MAX_N"]
        else:
            os.environ["TGRS_MAX_N"] = old


# -- construct ------------------------------------------------------------------


def cmd_construct(args) -> int:
    recipe = Recipe.from_json(_read_json(args.recipe))
    con = construct_full(recipe)
    obj = con.to_json()
    inst = con.instance
    text = (
        f"{recipe.id}: n={inst.n}, k={inst.k}, {inst.shape} over {inst.field.name}\n"
        f"g = {obj['provenance']['g']['text']}"
    )
    if args.out:
        Path(args.out).write_text(json.dumps(obj, indent=2, sort_keys=True) + "\n", encoding="utf-8")
        if args.format == "text":
            print(text)
            print(f"wrote {args.out}")
    else:
        _emit(obj, args.format, json.dumps(obj, indent=2, sort_keys=True))
    return 0


# -- analyze / quantum -------------------------------------------------------------


def _parse_checks(raw: str | None) -> list[str]:
    if not raw:
        return list(CHECKS)
    checks = [c.strip() for c in raw.split(",") if c.strip()]
    bad = [c for c in checks if c not in CHECKS]
    if bad:
        raise InputError(f"unknown checks {bad}; choose from {','.join(CHECKS)}")
    return checks


def analyze_instance(inst: TGRSInstance, checks: list[str]) -> tuple[dict, list[str]]:
    """Report entries for the requested checks, and errors met on the way."""
    C = inst.code()
    rep: dict = {"field": inst.field.name, "shape": inst.shape, "n": inst.n, "k": inst.k}
    errors: list[str] = []
    if "so" in checks:
        rep["self_orthogonal"] = is_self_orthogonal(C)
        if 2 * inst.k <= inst.n:
            rep["criterion"] = check_so(inst).to_dict()
    if "sd" in checks:
        rep["self_dual"] = is_self_dual(C)
    if "hull" in checks:
        rep["hull_dim"] = hull_dim(C)
    if "dmin" in checks or "mds" in checks:
        rep["d"] = min_distance(C)
        rep["singleton_defect"] = inst.n - inst.k + 1 - rep["d"]
    if "mds" in checks:
        rep["mds"] = rep["singleton_defect"] == 0
        rep["mds_witness"] = is_mds(inst)
        cls = classify(C)
        rep["mds_class"] = cls.mds_class
    if "dual" in checks:
        rep["dual"] = {"n": inst.n, "k": inst.n - inst.k, "d": min_distance(dual(C))}
    if "quantum" in checks:
        try:
            qp = quantum_derive(C)
            rep["quantum"] = {
                "params": str(qp),
                "n": qp.n,
                "k": qp.kq,
                "d": qp.dq,
                "saturates_singleton": qp.saturates_singleton,
                "note": qp.note,
            }
        except NotSelfOrthogonal as exc:
            errors.append(f"NotSelfOrthogonal: {exc}")
            rep["quantum"] = None
    return rep, errors


def _report_text(rep: dict) -> str:
    lines = [f"{rep['shape']} TGRS code, n={rep['n']}, k={rep['k']} over {rep['field']}"]
    if "d" in rep:
        lines.append(f"code            [{rep['n']},{rep['k']},{rep['d']}]  defect {rep['singleton_defect']}")
    if "mds_class" in rep:
        lines.append(f"class           {rep['mds_class']}  (witness says MDS={rep['mds_witness']})")
    if "dual" in rep:
        d = rep["dual"]
        lines.append(f"dual            [{d['n']},{d['k']},{d['d']}]")
    for key in ("self_orthogonal", "self_dual", "hull_dim"):
        if key in rep:
            lines.append(f"{key.replace('_', '-'):<16}{rep[key]}")
    if rep.get("criterion"):
        cr = rep["criterion"]
        lines.append(f"criterion       {cr['applicable_case']}: {cr['verdict']}")
        lines += [f"  failed        {c['name']}: {c['lhs']} != {c['rhs']}" for c in cr["failed_conditions"]]
    if rep.get("quantum"):
        q = rep["quantum"]
        sat = "  (saturates quantum Singleton)" if q["saturates_singleton"] else ""
        lines.append(f"quantum         {q['params']}{sat}")
        if q["note"]:
            lines.append(f"  note          {q['note']}")
    return "\n".join(lines)


def _expectations(args, inst: TGRSInstance) -> list[str]:
    C = inst.code()
    failed = []
    if args.expect_so and not is_self_orthogonal(C):
        failed.append("expected self-orthogonal")
    if args.expect_sd and not is_self_dual(C):
        failed.append("expected self-dual")
    if args.expect_mds and min_distance(C) != inst.n - inst.k + 1:
        failed.append("expected MDS")
    if args.expect_d is not None and min_distance(C) != args.expect_d:
        failed.append(f"expected d = {args.expect_d}, got {min_distance(C)}")
    return failed


def cmd_analyze(args) -> int:
    checks = _parse_checks(args.checks)
    with _bounds(args.max_n):
        inst = _load_instance(args.inp)
        rep, errors = analyze_instance(inst, checks)
        failed = _expectations(args, inst)
    rep["errors"] = errors
    rep["failed_expectations"] = failed
    text = _report_text(rep)
    text += "".join(f"\nERROR {e}" for e in errors) + "".join(f"\nFAIL  {f}" for f in failed)
    _emit(rep, args.format, text, args.out)
    return 1 if errors or failed else 0


def cmd_quantum(args) -> int:
    with _bounds(args.max_n):
        inst = _load_instance(args.inp)
        rep, errors = analyze_instance(inst, ["quantum"])
    if errors:
        print(errors[0], file=sys.stderr)
        return 1
    q = rep["quantum"]
    text = q["params"] + ("  saturates quantum Singleton" if q["saturates_singleton"] else "")
    if q["note"]:
        text += f"\nnote: {q['note']}"
    _emit(q, args.format, text, args.out)
    return 0


# -- verify-paper ------------------------------------------------------------------


def cmd_verify_paper(args) -> int:
    from .worked import run_examples

    only = _split(args.only)
    bad = [x for x in only or [] if x not in RECIPE_IDS]
    if bad:
        raise InputError(f"unknown example ids {bad}")
    results = run_examples(only)
    rows = []
    for r in results:
        exp, got = r.case.expected, r.got
        q = got.get("quantum", "-")
        printed = exp.get("printed_quantum")
        rows.append(
            {
                "example": r.case.name,
                "passed": r.passed,
                "code": got["code"],
                "dual": got["dual"],
                "class": got["mds_class"],
                "self_dual": got["self_dual"],
                "quantum": q,
                "published_quantum": printed,
                "diffs": r.diffs,
            }
        )
    npass = sum(r.passed for r in results)
    if args.format == "structured":
        _emit({"passed": npass, "total": len(results), "examples": rows}, "structured", "")
    else:
        print(f"{'example':<18}{'code':<12}{'dual':<12}{'class':<7}{'quantum':<14}result")
        for row in rows:
            code = "[{},{},{}]".format(*row["code"])
            dl = "[{},{},{}]".format(*row["dual"])
            cls = "SD " + row["class"] if row["self_dual"] else row["class"]
            mark = "pass" if row["passed"] else "FAIL"
            print(f"{row['example']:<18}{code:<12}{dl:<12}{cls:<7}{row['quantum']:<14}{mark}")
            if row["published_quantum"] and row["published_quantum"] != row["quantum"]:
                print(f"{'':<18}published value (suspected erratum): {row['published_quantum']}")
            for d in row["diffs"]:
                print(f"{'':<18}diff {d}")
        total_t = sum(r.seconds for r in results)
        print(f"{npass}/{len(results)} passed in {total_t:.1f} s")
    return 0 if npass == len(results) else 1


# -- property-suite ------------------------------------------------------------------


def cmd_property_suite(args) -> int:
    from .suite import SUITES, run_all

    only = _split(args.only)
    bad = [x for x in only or [] if x not in SUITES]
    if bad:
        raise InputError(f"unknown suites {bad}; choose from {','.join(SUITES)}")
    if args.scale <= 0:
        raise InputError("--scale must be positive")
    results = run_all(args.seed, only, args.scale)
    failures = [f for r in results for f in r.failures]
    dumped = []
    if failures:
        outdir = Path(args.out or "counterexamples")
        outdir.mkdir(parents=True, exist_ok=True)
        for i, f in enumerate(failures):
            path = outdir / f"{f.suite}-{i:04d}.json"
            path.write_text(json.dumps(f.to_dict(), indent=2, sort_keys=True) + "\n", encoding="utf-8")
            dumped.append(str(path))
    if args.format == "structured":
        _emit(
            {
                "seed": args.seed,
                "suites": [r.to_dict() for r in results],
                "counterexamples": [f.to_dict() for f in failures],
            },
            "structured",
            "",
        )
    else:
        for r in results:
            mark = "ok" if not r.failures else f"{len(r.failures)} counterexamples"
            print(f"{r.name:<10} {r.tested:>6} instances  {r.seconds:6.1f} s  {mark}")
            for f in r.failures[:3]:
                print(f"{'':<11}{f.reason}")
            if "grid" in r.stats:
                for g in r.stats["grid"]:
                    verdict = "yes" if g["verdict"] else "no "
                    print(f"{'':<11}{g['row']:<36} table {verdict}  SO {g['self_orthogonal']:>3}/{g['tested']}")
        for p in dumped:
            print(f"counterexample written to {p}")
    return 1 if failures else 0


def _split(raw: str | None) -> list[str] | None:
    if not raw:
        return None
    return [x.strip() for x in raw.split(",") if x.strip()]


# -- entry point ----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="tgrs", description="Twisted generalized Reed-Solomon codes.")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--format", choices=("text", "structured"), default="text")
        return p

    p = common(sub.add_parser("construct", help="build an instance from a recipe file"))
    p.add_argument("--recipe", required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_construct)

    p = common(sub.add_parser("analyze", help="parameters, duality and quantum data of an instance"))
    p.add_argument("--in", dest="inp", required=True)
    p.add_argument("--out")
    p.add_argument("--checks", help=f"comma-separated subset of {','.join(CHECKS)}")
    p.add_argument("--expect-so", action="store_true")
    p.add_argument("--expect-sd", action="store_true")
    p.add_argument("--expect-mds", action="store_true")
    p.add_argument("--expect-d", type=int)
    p.add_argument("--max-n", type=int)
    p.set_defaults(func=cmd_analyze)

    p = common(sub.add_parser("quantum", help="quantum code parameters of a self-orthogonal instance"))
    p.add_argument("--in", dest="inp", required=True)
    p.add_argument("--out")
    p.add_argument("--max-n", type=int)
    p.set_defaults(func=cmd_quantum)

    p = common(sub.add_parser("verify-paper", help="reproduce the bundled worked examples"))
    p.add_argument("--only", help="comma-separated example ids")
    p.set_defaults(func=cmd_verify_paper)

    p = common(sub.add_parser("property-suite", help="randomized differential checks"))
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--only", help="comma-separated suite names")
    p.add_argument("--scale", type=float, default=1.0, help="multiply instance counts")
    p.add_argument("--out", help="directory for counterexample files")
    p.set_defaults(func=cmd_property_suite)
    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"InputError: {exc}", file=sys.stderr)
        return 2
    except TGRSError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
