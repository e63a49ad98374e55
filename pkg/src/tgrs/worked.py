"""The ten bundled worked examples and their end-to-end check.

Each data file records the code field, the evaluation points and column
multipliers as powers of the field generator, the twist entries and the
expected parameters.  For the GF(q^2) examples the points are written in
GF(q) (``alpha_field``) and carried up by the standard embedding.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from importlib import resources

from .code import classify, quantum_derive
from .gf import Field, embed
from .recipes import RECIPE_IDS, Recipe, construct_full
from .twisted import TGRSInstance, TwistMatrix, eval_data


@dataclass
class ExampleCase:
    example: str
    label: str
    instance: TGRSInstance
    expected: dict

    @property
    def name(self) -> str:
        return f"{self.example} ({self.label})" if self.label else self.example


@dataclass
class CaseResult:
    case: ExampleCase
    got: dict
    diffs: list[str] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.diffs

    def to_dict(self) -> dict:
        return {
            "example": self.case.name,
            "passed": self.passed,
            "expected": self.case.expected,
            "got": self.got,
            "diffs": self.diffs,
        }


def load_raw(rid: str) -> dict:
    if rid not in RECIPE_IDS:
        raise KeyError(f"no bundled example {rid!r}")
    text = resources.files("tgrs").joinpath("data", f"example_{rid}.json").read_text()
    return json.loads(text)


def load_example(rid: str) -> list[ExampleCase]:
    raw = load_raw(rid)
    F = Field.from_dict(raw["field"])
    if "alpha_field" in raw:
        sub = Field.from_dict(raw["alpha_field"])
        lift = embed(sub, F)
        parse_alpha = lambda x: lift(sub.parse(x))  # noqa: E731
    else:
        parse_alpha = F.parse
    cases = []
    for c in raw["cases"]:
        alpha = [parse_alpha(a) for a in c["alpha"]]
        v = [F.parse(x) for x in c["v"]]
        inst = TGRSInstance(eval_data(alpha, v, F), c["k"], TwistMatrix.from_json(F, c["twist"]))
        cases.append(ExampleCase(rid, c["label"], inst, c["expected"]))
    return cases


def example_recipe(rid: str) -> Recipe:
    return Recipe.from_json(load_raw(rid)["recipe"])


def analyze_case(case: ExampleCase) -> CaseResult:
    t0 = time.perf_counter()
    C = case.instance.code()
    rep = classify(C)
    got = {
        "code": [rep.n, rep.k, rep.d],
        "dual": [rep.n, rep.dual_k, rep.dual_d],
        "mds_class": rep.mds_class,
        "self_orthogonal": rep.self_orthogonal,
        "self_dual": rep.self_dual,
    }
    if rep.self_orthogonal:
        qp = quantum_derive(C)
        got["quantum"] = str(qp)
        got["saturates"] = qp.saturates_singleton
    res = CaseResult(case, got)
    for key, want in case.expected.items():
        if key == "printed_quantum":
            continue
        if got.get(key) != want:
            res.diffs.append(f"{key}: expected {want}, got {got.get(key)}")
    res.seconds = time.perf_counter() - t0
    return res


def recipe_agrees(rid: str) -> list[str]:
    """Differences between the recipe's construction and the bundled data.

    The evaluation sets must coincide, and each multiplier must match up to
    sign (the odd-characteristic recipes pick one of two square roots).
    """
    con = construct_full(example_recipe(rid))
    diffs = []
    for case in load_example(rid):
        ref = case.instance.eval
        if con.instance.field != ref.field:
            diffs.append(f"code field {con.instance.field.name} vs {ref.field.name}")
            continue
        mine = dict(zip((a.value for a in con.instance.eval.alpha), con.instance.eval.v))
        if set(mine) != {a.value for a in ref.alpha}:
            diffs.append("evaluation points differ")
            continue
        for a, v in zip(ref.alpha, ref.v):
            if mine[a.value] * mine[a.value] != v * v:
                diffs.append(f"multiplier at {a} differs beyond sign")
    return diffs


def run_examples(only: list[str] | None = None, recipes: bool = True) -> list[CaseResult]:
    """Analyze every bundled case; with ``recipes`` also rebuild it from its recipe."""
    ids = only or list(RECIPE_IDS)
    results = []
    for rid in ids:
        t0 = time.perf_counter()
        extra = [f"recipe: {d}" for d in recipe_agrees(rid)] if recipes else []
        spent = time.perf_counter() - t0
        for case in load_example(rid):
            res = analyze_case(case)
            res.diffs += extra
            res.seconds += spent
            results.append(res)
    return results
