"""Command-line front door: ``baerlab <command> ...``.

Exit codes: 0 success, 2 mathematical violation, 3 cap exceeded, 4 parse error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from typing import Callable

from ..errors import (BaerLabError, LimitExceeded, MultiplierUnavailable, ParseError,
                      SizeCapExceeded)
from ..exactseq import solve_unknowns, verify_exactness
from ..groups.varieties import VarietySpec
from ..multiplier import (certify_torsion, colimit_multiplier, ellis_triple_tail,
                          freeprod_multiplier, homology_group, les_pair, les_triple,
                          nilpotent_triple_multiplier, relative_multiplier_bar,
                          triple_multiplier_bar, witt_multiplier_free_abelian)
from ..simplicial import check_simplicial_identities, homotopy
from . import formats
from .formats import Caps

EXIT_OK, EXIT_VIOLATION, EXIT_CAP, EXIT_PARSE = 0, 2, 3, 4


class Violation(Exception):
    """A computed result contradicts an invariant; carries the partial result."""

    def __init__(self, result: dict, violations: list):
        super().__init__("; ".join(violations))
        self.result = result
        self.violations = violations


def _group(g) -> dict:
    return g.canonical_group().to_json()


def _multiplier(t, is_pair: bool, v: VarietySpec, caps: Caps):
    if v.is_abelian_variety:
        if is_pair:
            return relative_multiplier_bar(t.g, t.n, caps.bar_cap)
        return triple_multiplier_bar(t, caps.bar_cap)
    if v.tag == "nilpotent":
        return nilpotent_triple_multiplier(t, v.param, caps.bar_cap)
    raise MultiplierUnavailable(f"no multiplier computation for the variety {v}")


# -- commands -------------------------------------------------------------------

def cmd_homology(a, caps: Caps) -> dict:
    src = formats.parse_group_file(a.file, caps)
    if a.degree < 0:
        raise ParseError("degree must be non-negative", "<args>")
    if a.degree > caps.trunc - 1:
        raise SizeCapExceeded(f"degree {a.degree} needs truncation {a.degree + 1}, above --trunc {caps.trunc}")
    h = homology_group(src.group, a.degree, caps.bar_cap)
    return {"degree": a.degree, "order": src.group.order, "homology": _group(h),
            "method": "bar-model"}


def cmd_multiplier(a, caps: Caps) -> dict:
    t, is_pair = formats.parse_triple_file(a.file, caps)
    v = VarietySpec.parse(a.variety)
    kind = "pair" if is_pair else "triple"
    try:
        res = _multiplier(t, is_pair, v, caps)
    except MultiplierUnavailable as exc:
        return {"kind": kind, "status": "unavailable", "reason": str(exc), "method": None}
    return {"kind": kind, "status": "computed", "multiplier": res.to_json()}


def cmd_les(a, caps: Caps) -> dict:
    t, is_pair = formats.parse_triple_file(a.file, caps)
    v = VarietySpec.parse(a.variety)
    if is_pair:
        rep = les_pair(t.g, t.n, v, caps.bar_cap)
        out = {"kind": "pair", "sequence": rep.to_json(), "method": "bar-model" if v.is_abelian_variety
               else "group-enumeration"}
        bad = [] if rep.exact else ["pair sequence is not exact"]
    else:
        tl = les_triple(t, v, caps.bar_cap)
        ellis = ellis_triple_tail(t)
        out = {"kind": "triple", "sequences": tl.to_json(), "ellis_tail": ellis.to_json(),
               "method": tl.pi0_method}
        bad = []
        if not tl.first.exact:
            bad.append("first triple sequence is not exact")
        if not tl.second.exact:
            bad.append("second triple sequence is not exact")
        if not ellis.exact:
            bad.append("Ellis tail is not exact")
    if bad:
        raise Violation(out, bad)
    return out


def cmd_freeprod(a, caps: Caps) -> dict:
    t1, _ = formats.parse_triple_file(a.file1, caps)
    t2, _ = formats.parse_triple_file(a.file2, caps)
    res = freeprod_multiplier(t1, t2, VarietySpec.parse(a.variety), caps.bar_cap)
    return {"multiplier": res.to_json()}


def cmd_colimit(a, caps: Caps) -> dict:
    sys_ = formats.parse_system_file(a.file, caps)
    lhs, rhs, verdict = colimit_multiplier(sys_, VarietySpec.parse(a.variety), caps.max_order,
                                           caps.bar_cap)
    out = {"stages": list(sys_.indices), "lhs": _group(lhs), "rhs": _group(rhs),
           "verdict": verdict, "method": "bar-model"}
    if verdict != "isomorphic":
        raise Violation(out, ["multiplier of the colimit differs from the colimit of multipliers"])
    return out


def cmd_simplicial_check(a, caps: Caps) -> dict:
    x = formats.parse_simplicial_file(a.file)
    rep = check_simplicial_identities(x)
    out = {"T": x.T, "identities_ok": rep.ok,
           "violations": [{"family": f, "level": n, "i": i, "j": j} for f, n, i, j in rep.violations],
           "method": "identity-check"}
    if not rep.ok:
        raise Violation(out, [f"simplicial identity {f} violated at level {n} (i={i}, j={j})"
                              for f, n, i, j in rep.violations])
    out["homotopy"] = {str(n): _group(homotopy(x, n, check=False)) for n in range(x.T)}
    return out


def cmd_witt(a, caps: Caps) -> dict:
    if a.n < 0 or a.c < 1:
        raise ParseError("need n >= 0 and c >= 1", "<args>")
    return {"n": a.n, "c": a.c, "multiplier": _group(witt_multiplier_free_abelian(a.n, a.c)),
            "method": "witt-formula"}


def cmd_certify_torsion(a, caps: Caps) -> dict:
    rule, c, hyps = formats.parse_hypothesis_file(a.file)
    try:
        cert = certify_torsion(hyps, c, rule, strict=a.strict)
    except ValueError as exc:
        raise ParseError(str(exc), a.file) from None
    out = cert.to_json()
    out["c_target"] = c
    out["method"] = "rule"
    return out


def cmd_solve_seq(a, caps: Caps) -> dict:
    seq = formats.parse_sequence_file(a.file)
    rep = verify_exactness(seq)
    out = {"exactness": rep.to_json(), "method": "snf"}
    if seq.unknown_slots():
        out["unknowns"] = {k: c.to_json() for k, c in sorted(solve_unknowns(seq).items())}
    if rep.inexact:
        raise Violation(out, [f"sequence is not exact at slot {s.slot} ({s.label})" for s in rep.inexact])
    return out


COMMANDS: dict[str, Callable] = {
    "homology": cmd_homology, "multiplier": cmd_multiplier, "les": cmd_les,
    "freeprod": cmd_freeprod, "colimit": cmd_colimit, "simplicial-check": cmd_simplicial_check,
    "witt": cmd_witt, "certify-torsion": cmd_certify_torsion, "solve-seq": cmd_solve_seq,
}


# -- argument parsing and output ------------------------------------------------

def _positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v <= 0:
        raise argparse.ArgumentTypeError("caps must be positive")
    return v


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n")
        sys.exit(EXIT_PARSE)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--variety", default="abelian")
    common.add_argument("--max-order", type=_positive, default=8)
    common.add_argument("--trunc", type=_positive, default=4)
    common.add_argument("--max-cosets", type=_positive, default=100_000)
    common.add_argument("--format", choices=("json", "tsv"), default="json")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--strict", action="store_true")
    common.add_argument("--timing", action="store_true", help="include wall time (breaks byte identity)")
    p = _Parser(prog="baerlab", description="Baer invariants of groups, pairs and triples.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)
    s = sub.add_parser("homology", parents=[common])
    s.add_argument("file")
    s.add_argument("degree", type=int)
    for name in ("multiplier", "les", "colimit", "simplicial-check", "certify-torsion", "solve-seq"):
        sub.add_parser(name, parents=[common]).add_argument("file")
    s = sub.add_parser("freeprod", parents=[common])
    s.add_argument("file1")
    s.add_argument("file2")
    s = sub.add_parser("witt", parents=[common])
    s.add_argument("n", type=int)
    s.add_argument("c", type=int)
    return p


def _echo(a) -> dict:
    skip = {"format", "timing"}
    return {k.replace("_", "-"): v for k, v in sorted(vars(a).items()) if k not in skip}


def flatten(obj, prefix: str = "") -> list[tuple[str, str]]:
    """Leaf paths of a JSON value; ``{rank, factors}`` groups become ``rank:d1,d2``."""
    if isinstance(obj, dict):
        if set(obj) == {"rank", "factors"}:
            return [(prefix, f"{obj['rank']}:" + ",".join(map(str, obj["factors"])))]
        out = []
        for k in sorted(obj):
            out += flatten(obj[k], f"{prefix}.{k}" if prefix else str(k))
        return out
    if isinstance(obj, list):
        out = []
        for i, x in enumerate(obj):
            out += flatten(x, f"{prefix}[{i}]")
        return out or [(prefix, "[]")]
    return [(prefix, json.dumps(obj))]


def render(report: dict, fmt: str) -> str:
    if fmt == "tsv":
        return "".join(f"{k}\t{v}\n" for k, v in flatten(report))
    return json.dumps(report, sort_keys=True, indent=2) + "\n"


def run(argv=None) -> tuple[int, str, str]:
    """Execute one job; returns ``(exit code, report text, diagnostics)``."""
    try:
        a = build_parser().parse_args(argv)
    except SystemExit as exc:  # usage errors (already printed) and --help
        return int(exc.code or 0), "", ""
    caps = Caps(a.max_order, a.trunc, a.max_cosets)
    report = {"format": 1, "command": a.command, "args": _echo(a), "violations": []}
    diag = ""
    t0 = time.perf_counter()
    try:
        VarietySpec.parse(a.variety)
        report["result"] = COMMANDS[a.command](a, caps)
        report["status"] = "ok"
        code = EXIT_OK
    except Violation as v:
        report.update(result=v.result, status="violation", violations=v.violations)
        code, diag = EXIT_VIOLATION, "; ".join(v.violations)
    except ParseError as exc:
        report.update(status="parse-error", error={"code": exc.code, "message": str(exc)})
        code, diag = EXIT_PARSE, str(exc)
    except (SizeCapExceeded, LimitExceeded) as exc:
        report.update(status="cap-exceeded", error={"code": exc.code, "message": str(exc)})
        code, diag = EXIT_CAP, str(exc)
    except BaerLabError as exc:
        report.update(status="violation", error={"code": exc.code, "message": str(exc)},
                      violations=[f"{exc.code}: {exc}"])
        code, diag = EXIT_VIOLATION, f"{exc.code}: {exc}"
    if a.timing:
        report["timing_s"] = round(time.perf_counter() - t0, 6)
    report["exit_code"] = code
    return code, render(report, a.format), diag


def main(argv=None) -> int:
    code, text, diag = run(argv)
    sys.stdout.write(text)
    if diag:
        sys.stderr.write(f"baerlab: {diag}\n")
    return code


if __name__ == "__main__":
    sys.exit(main())
