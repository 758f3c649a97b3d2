"""Fair division of graph-shaped cakes and chores with exact rational arithmetic."""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from ._core import GraphcakeError, build_fixture as _build_fixture, classify as _classify
from ._core import fixture_catalog, powers_of_three as _powers_of_three, protocol_names, run_cli

__all__ = [
    "GraphcakeError",
    "classify",
    "fixture",
    "fixture_catalog",
    "generate",
    "oracle",
    "powers_of_three",
    "protocol_names",
    "run_cli",
    "solve",
    "to_fraction",
    "verify",
]


def to_fraction(text: str) -> Fraction:
    return Fraction(text)


def _document(doc: dict[str, Any] | str) -> str:
    return doc if isinstance(doc, str) else json.dumps(doc)


def _call(args: list[str], stdin: str = "") -> tuple[int, Any]:
    code, out, err = run_cli(args, stdin)
    if code == 1:
        raise GraphcakeError(err.strip().removeprefix("error: "))
    return code, json.loads(out)


def fixture(name: str, **params: Any) -> dict[str, Any]:
    return json.loads(_build_fixture(name, {k: str(v) for k, v in params.items()}))


def generate(seed: int, family: str = "arbitrary", agents: int = 2, edges: int = 6,
             segments: int = 2, chore: bool = False) -> dict[str, Any]:
    args = ["gen", "--seed", str(seed), "--family", family, "--agents", str(agents),
            "--edges", str(edges), "--segments", str(segments)]
    if chore:
        args.append("--chore")
    return _call(args)[1]


def classify(graph: dict[str, Any] | str) -> dict[str, Any]:
    return json.loads(_classify(_document(graph)))


def solve(instance: dict[str, Any] | str, protocol: str, *, alpha: str | Fraction | None = None,
          k: int | None = None, root: str | None = None) -> dict[str, Any]:
    """Runs a protocol. The result carries "guarantee_met"; it is False only on an internal fault."""
    args = ["solve", "--protocol", protocol]
    if alpha is not None:
        args += ["--alpha", str(alpha)]
    if k is not None:
        args += ["--k", str(k)]
    if root is not None:
        args += ["--root", root]
    code, result = _call(args, _document(instance))
    result["guarantee_met"] = code == 0
    return result


def verify(document: dict[str, Any] | str) -> dict[str, Any]:
    """Checks a solve result (or an instance plus "allocation") and returns the report."""
    return _call(["verify"], _document(document))[1]


def oracle(instance: dict[str, Any] | str, grid: int, objective: str = "egal", *,
           pieces: int | None = None, complete: bool = False, threshold: str | None = None,
           strict: bool = False) -> dict[str, Any]:
    args = ["oracle", "--grid", str(grid), "--objective", objective, "--json"]
    if pieces is not None:
        args += ["--pieces", str(pieces)]
    if complete:
        args.append("--complete")
    if threshold is not None:
        args += ["--threshold", str(threshold)]
    if strict:
        args.append("--strict")
    return _call(args, _document(instance))[1]


def powers_of_three(t: int, lo: int, hi: int) -> dict[str, Any]:
    holds, gap, minimizer, combinations = _powers_of_three(t, lo, hi)
    return {"holds": holds, "min_gap": Fraction(gap), "minimizer": minimizer,
            "combinations": combinations}
