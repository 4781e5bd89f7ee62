"""Command-line front end: reports, cache round-trip, verification gate.

All JSON output is sorted-key, indent-2, newline-terminated, so repeated
runs with the same configuration are byte-identical.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
from dataclasses import dataclass

import numpy as np

from .brandt import Brandt
from .congruence import (
    CompatibilityMode,
    congruence_lattice,
    kernel,
)
from .errors import BrandtNsrError, CacheError, LatticeTooLarge
from .generation import (
    NearSemiringTable,
    classify_all,
    build_nsr,
    count_formula,
    endomorphisms,
    validate_nsr,
)
from .maps import canonical_name
from .structure import annihilator, annihilator_of_set, build_C, radical_report
from .structure import report_to_json
from .congruence import right_ideals
from .verify import run_verification

CACHE_FORMAT = 1
DEFAULT_LATTICE_LIMIT = 20000
PARTITION_ELIDE_SIZE = 64


@dataclass(frozen=True)
class RunConfig:
    command: str
    n: int
    mode: CompatibilityMode = CompatibilityMode.TWO_SIDED
    output: str = "text"
    cache_path: str | None = None
    allow_heavy: bool = False


def _table_checksum(add: np.ndarray, mul: np.ndarray) -> str:
    blob = json.dumps(
        {"add": add.tolist(), "mul": mul.tolist()},
        sort_keys=True,
        separators=(",", ":"),
    ).encode()
    return hashlib.sha256(blob).hexdigest()


def save_cache(tbl: NearSemiringTable, path: str) -> None:
    payload = {
        "format": CACHE_FORMAT,
        "n": tbl.n,
        "elements": [None] + [list(f) for f in tbl.elements[1:]],
        "add": tbl.add.tolist(),
        "mul": tbl.mul.tolist(),
        "checksum": _table_checksum(tbl.add, tbl.mul),
    }
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(payload, fh, sort_keys=True)
        fh.write("\n")


def load_cache(path: str) -> NearSemiringTable:
    """Rebuild a table from disk, re-running every validation on the way."""
    try:
        with open(path, "r", encoding="utf-8") as fh:
            payload = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise CacheError(f"unreadable cache {path}: {exc}") from exc
    if payload.get("format") != CACHE_FORMAT:
        raise CacheError(f"cache format {payload.get('format')!r} not supported")
    try:
        n = int(payload["n"])
        elements = payload["elements"]
        add = np.asarray(payload["add"], dtype=np.int32)
        mul = np.asarray(payload["mul"], dtype=np.int32)
        checksum = payload["checksum"]
    except (KeyError, TypeError, ValueError) as exc:
        raise CacheError(f"malformed cache {path}: {exc}") from exc
    if checksum != _table_checksum(add, mul):
        raise CacheError("cache checksum mismatch; file was modified")
    if not elements or elements[0] is not None:
        raise CacheError("cache element list must start with the zero entry")

    bn = Brandt(n)
    maps = [tuple(int(v) for v in row) for row in elements[1:]]
    tbl = NearSemiringTable(
        n=n,
        bn=bn,
        elements=[None] + maps,
        names=["0"] + [canonical_name(bn, f) for f in maps],
        add=add,
        mul=mul,
        breakdown=classify_all(bn, maps),
    )
    validate_nsr(tbl)
    return tbl


def _get_table(cfg: RunConfig) -> NearSemiringTable:
    if cfg.cache_path and os.path.exists(cfg.cache_path):
        tbl = load_cache(cfg.cache_path)
        if tbl.n != cfg.n:
            raise CacheError(f"cache holds n={tbl.n}, requested n={cfg.n}")
        return tbl
    tbl = build_nsr(cfg.n)
    if cfg.cache_path:
        save_cache(tbl, cfg.cache_path)
    return tbl


def _emit(cfg: RunConfig, payload: dict, text_lines: list[str]) -> None:
    if cfg.output == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def _cmd_gen(cfg: RunConfig) -> int:
    if cfg.n >= 5:
        formula = count_formula(cfg.n)
        _emit(
            cfg,
            {"n": cfg.n, "nonzero_formula": formula, "tables": False},
            [
                f"n={cfg.n}: tables not built at this size",
                f"nonzero element count by formula: {formula}",
            ],
        )
        return 0
    tbl = _get_table(cfg)
    nonzero = tbl.size - 1
    formula = 3 if cfg.n == 1 else count_formula(cfg.n)
    payload = {
        "n": cfg.n,
        "total": tbl.size,
        "nonzero": nonzero,
        "formula_nonzero": formula,
        "breakdown": dict(sorted(tbl.breakdown.items())),
        "names": tbl.names,
    }
    b = tbl.breakdown
    lines = [
        f"n={cfg.n}",
        f"elements: total={tbl.size} nonzero={nonzero} (formula {formula})",
        f"breakdown: constants={b['constants']} singletons={b['singletons']} "
        f"n_support={b['n_support']}",
        "names:",
    ] + [f"  {nm}" for nm in tbl.names]
    _emit(cfg, payload, lines)
    return 0


def _cmd_endos(cfg: RunConfig) -> int:
    bn = Brandt(cfg.n)
    endos = endomorphisms(bn)
    payload = {
        "n": cfg.n,
        "count": len(endos),
        "endomorphisms": [list(f) for f in endos],
    }
    lines = [f"n={cfg.n}", f"additive endomorphisms: {len(endos)}"] + [
        f"  {f}" for f in endos
    ]
    _emit(cfg, payload, lines)
    return 0


def _cmd_congruences(cfg: RunConfig) -> int:
    tbl = _get_table(cfg)
    lat = congruence_lattice(tbl, cfg.mode, limit=DEFAULT_LATTICE_LIMIT)
    include_partition = tbl.size <= PARTITION_ELIDE_SIZE
    items = []
    for c in lat:
        item = {
            "classes": c.num_classes,
            "kernel": [tbl.names[x] for x in sorted(kernel(tbl, c))],
            "is_equality": c.num_classes == tbl.size,
            "is_universal": c.num_classes == 1,
        }
        if include_partition:
            item["partition"] = [
                [tbl.names[x] for x in block] for block in c.classes()
            ]
        items.append(item)
    payload = {"mode": cfg.mode.value, "count": len(lat), "congruences": items}
    lines = [f"mode={cfg.mode.value} n={cfg.n}", f"congruences: {len(lat)}"]
    for item in items:
        kern = ",".join(item["kernel"])
        flags = []
        if item["is_equality"]:
            flags.append("equality")
        if item["is_universal"]:
            flags.append("universal")
        suffix = f" ({', '.join(flags)})" if flags else ""
        lines.append(f"  classes={item['classes']} kernel={{{kern}}}{suffix}")
    _emit(cfg, payload, lines)
    return 0


def _cmd_rightideals(cfg: RunConfig) -> int:
    tbl = _get_table(cfg)
    ideals = right_ideals(tbl)
    payload = {
        "n": cfg.n,
        "count": len(ideals),
        "right_ideals": [[tbl.names[x] for x in sorted(s)] for s in ideals],
    }
    lines = [f"n={cfg.n}", f"right ideals (congruence kernels): {len(ideals)}"]
    for s in ideals:
        shown = ",".join(tbl.names[x] for x in sorted(s)[:8])
        more = "" if len(s) <= 8 else f",... ({len(s)} elements)"
        lines.append(f"  {{{shown}{more}}}")
    _emit(cfg, payload, lines)
    return 0


def _cmd_annihilators(cfg: RunConfig) -> int:
    tbl = _get_table(cfg)
    act = build_C(tbl)
    per = [
        {
            "element": tbl.names[act.carrier[p]],
            "annihilator": [tbl.names[x] for x in sorted(annihilator(act, p))],
        }
        for p in range(act.size)
    ]
    whole = annihilator_of_set(act, range(act.size), cross_check=True)
    payload = {
        "n": cfg.n,
        "carrier": [tbl.names[e] for e in act.carrier],
        "annihilators": per,
        "whole_carrier": [tbl.names[x] for x in sorted(whole)],
    }
    lines = [f"n={cfg.n}", f"carrier ({act.size}): "
             + " ".join(tbl.names[e] for e in act.carrier)]
    for item in per:
        ann = item["annihilator"]
        shown = ",".join(ann[:8]) + ("" if len(ann) <= 8 else f",... ({len(ann)})")
        lines.append(f"  A({item['element']}) = {{{shown}}}")
    lines.append(
        "A(carrier) = {" + ",".join(tbl.names[x] for x in sorted(whole)) + "}"
    )
    _emit(cfg, payload, lines)
    return 0


def _cmd_radicals(cfg: RunConfig) -> int:
    tbl = _get_table(cfg)
    report = radical_report(tbl)
    payload = report_to_json(report)
    lines = [f"n={cfg.n}"]
    for e in report.entries:
        lines.append(f"  {e.name} = {e.value if e.value is not None else '(blocked)'}")
    lines.append("premises:")
    seen = []
    for e in report.entries:
        for p in e.premises:
            if p not in seen:
                seen.append(p)
                mark = "ok" if p.holds else "FAILED"
                wit = f" (witness: {p.witness})" if p.witness else ""
                lines.append(f"  [{mark}] {p.claim}{wit}")
    lines.append(f"containment diagram consistent: {report.figure_consistent}")
    _emit(cfg, payload, lines)
    return 0


def _cmd_verify(cfg: RunConfig) -> int:
    checks = run_verification(cfg.n, allow_heavy=cfg.allow_heavy)
    all_passed = all(c.passed for c in checks)
    payload = {
        "n": cfg.n,
        "all_passed": all_passed,
        "checks": [
            {"id": c.id, "n": c.n, "passed": c.passed, "detail": c.detail}
            for c in checks
        ],
    }
    lines = []
    for c in checks:
        lines.append(f"{'PASS' if c.passed else 'FAIL'} {c.id}: {c.detail}")
    lines.append("all checks passed" if all_passed else "FAILURES present")
    _emit(cfg, payload, lines)
    return 0 if all_passed else 1


_COMMANDS = {
    "gen": _cmd_gen,
    "endos": _cmd_endos,
    "congruences": _cmd_congruences,
    "rightideals": _cmd_rightideals,
    "annihilators": _cmd_annihilators,
    "radicals": _cmd_radicals,
    "verify": _cmd_verify,
}

_HEAVY_COMMANDS = {"congruences", "rightideals", "annihilators", "radicals", "verify"}


def _check_gating(cfg: RunConfig) -> str | None:
    """Reason the configuration is refused, or None when runnable."""
    if cfg.n < 1:
        return "n must be at least 1"
    if cfg.command == "gen":
        return None
    if cfg.n >= 5:
        return f"{cfg.command} needs explicit tables; n is capped at 4"
    if cfg.command in _HEAVY_COMMANDS and cfg.n == 4 and not cfg.allow_heavy:
        return f"{cfg.command} at n=4 takes minutes; pass --allow-heavy"
    if (
        cfg.command == "congruences"
        and cfg.mode is not CompatibilityMode.TWO_SIDED
        and cfg.n >= 3
        and not cfg.allow_heavy
    ):
        return (
            f"the {cfg.mode.value} lattice is far too large at n={cfg.n}; "
            "pass --allow-heavy to attempt it under the size limit"
        )
    return None


def run(cfg: RunConfig) -> int:
    reason = _check_gating(cfg)
    if reason is not None:
        print(f"refused: {reason}", file=sys.stderr)
        return 2
    try:
        return _COMMANDS[cfg.command](cfg)
    except LatticeTooLarge as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return 2
    except BrandtNsrError as exc:
        print(f"invariant breach: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return 2


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="brandt-nsr",
        description="Build and interrogate the affine near-semiring tables.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name, helptext in (
        ("gen", "build the operation tables and report element counts"),
        ("endos", "enumerate the additive endomorphisms"),
        ("congruences", "compute a congruence lattice"),
        ("rightideals", "compute the right-ideal kernels"),
        ("annihilators", "annihilators over the constant carrier"),
        ("radicals", "the radical report with premises"),
        ("verify", "run every theorem check for the given n"),
    ):
        p = sub.add_parser(name, help=helptext)
        p.add_argument("--n", type=int, required=True, help="Brandt parameter")
        p.add_argument(
            "--mode",
            choices=["plus", "right", "twosided"],
            default="twosided",
            help="congruence compatibility level",
        )
        p.add_argument("--output", choices=["text", "json"], default="text")
        p.add_argument("--cache", default=None, help="table cache file path")
        p.add_argument("--allow-heavy", action="store_true")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    cfg = RunConfig(
        command=args.command,
        n=args.n,
        mode=CompatibilityMode(args.mode),
        output=args.output,
        cache_path=args.cache,
        allow_heavy=args.allow_heavy,
    )
    return run(cfg)


if __name__ == "__main__":
    sys.exit(main())
