"""Command-line front end.

Verbs: analyze, spectrum, verify-rds, search, selftest.  Exit codes:
0 success, 1 false verdict on a verify verb, 2 usage error, 3 I/O or
input-data error, 4 internal invariant violation (the independent
verdict routes disagreed, which would mean a bug in this package).
Identical invocations produce byte-identical output unless --timestamp
is given.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from dataclasses import dataclass

from .boolfun import TruthTable, table_from_json
from .errors import FilterDisagreementError, MpfError
from .gf2n import fe_mul, field_from_json, field_to_json, make_field, poly_is_irreducible, sigma, trace_n
from .planar import (
    VectorialFunction,
    function_from_json,
    is_modified_planar_components,
    is_modified_planar_perm,
)
from .rds import (
    elements_from_json,
    forbidden_subgroup,
    graph_of,
    group_for,
    group_from_json,
    report_to_json,
    rds_verify_bruteforce,
    rds_verify_characters,
)
from .search import SearchJob, run_search
from .search import report_to_json as search_report_to_json
from .transforms import bent4_witnesses, is_flat, transform_U, transform_V

EXIT_OK = 0
EXIT_VERDICT_FALSE = 1
EXIT_USAGE = 2
EXIT_IO = 3
EXIT_INTERNAL = 4


@dataclass(frozen=True)
class Command:
    verb: str
    options: dict


def _default_shards() -> int:
    try:
        return max(1, int(os.environ.get("MPF_DEFAULT_SHARDS", "1")))
    except ValueError:
        return 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mpf",
        description="Analyze modified planar functions, bent4 components, and relative difference sets.",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("analyze", help="run all planarity and RDS verdicts on a function file")
    p.add_argument("--file", required=True, help="vectorial function JSON")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--out", default=None, help="output path (default stdout)")
    p.add_argument("--timestamp", action="store_true", help="stamp the report with wall time")

    p = sub.add_parser("spectrum", help="dump the exact twisted spectrum of a Boolean function")
    p.add_argument("--file", required=True, help="truth table JSON")
    p.add_argument("--c", default="0x0", help="twist element, hex (default 0x0)")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--out", default=None)
    p.add_argument("--timestamp", action="store_true")

    p = sub.add_parser("verify-rds", help="verify a relative difference set")
    p.add_argument("--file", required=True, help="group spec + element list JSON")
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.add_argument("--out", default=None)
    p.add_argument("--timestamp", action="store_true")

    p = sub.add_parser("search", help="enumerate a function class and filter by planarity")
    p.add_argument("--mode", choices=("mv", "uv"), required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--class", dest="klass", required=True,
                   choices=("all", "affine", "do_quadratic", "do_plus_affine"))
    p.add_argument("--filter", choices=("perm", "components", "both"), default="both")
    p.add_argument("--shards", type=int, default=_default_shards())
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--sample", type=int, default=None,
                   help="draw this many candidates instead of exhausting the class")
    p.add_argument("--out", default=None)
    p.add_argument("--stream", default=None, help="write every passing function here, one JSON per line")
    p.add_argument("--timestamp", action="store_true")

    sub.add_parser("selftest", help="run the built-in identity battery")
    return parser


def parse_command(argv) -> Command:
    """Parse argv into a validated Command; usage errors exit with code 2."""
    args = build_parser().parse_args(argv)
    options = {k: v for k, v in vars(args).items() if k != "verb"}
    return Command(args.verb, options)


def _load_json(path: str):
    with open(path) as fh:
        return json.load(fh)


def _write(text: str, out_path: str | None) -> None:
    if out_path is None:
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")
    else:
        with open(out_path, "w") as fh:
            fh.write(text)
            if not text.endswith("\n"):
                fh.write("\n")


def emit_report(result: dict, fmt: str) -> str:
    """Serialize a report dict with stable field order."""
    if fmt == "json":
        return json.dumps(result, indent=2)
    if fmt == "csv":
        return result["csv"]
    lines = result.get("text_lines", [])
    return "\n".join(lines)


def _maybe_timestamp(report: dict, options: dict) -> None:
    if options.get("timestamp"):
        report["generated_at"] = time.strftime("%Y-%m-%dT%H:%M:%SZ", time.gmtime())


def _cmd_analyze(options: dict) -> int:
    F = function_from_json(_load_json(options["file"]))
    perm = is_modified_planar_perm(F)
    components = is_modified_planar_components(F)
    group = group_for(F)
    R = graph_of(F)
    N = forbidden_subgroup(group)
    brute = rds_verify_bruteforce(group, R, N)
    characters = rds_verify_characters(group, R, N)
    verdicts = (perm.is_planar, components, brute.is_rds, characters)
    report = {
        "format_version": "mpf.analyze.v1",
        "mode": F.mode,
        "n": F.n,
        "field": field_to_json(F.spec) if F.spec else None,
        "planar_perm": perm.is_planar,
        "planar_components": components,
        "rds_bruteforce": brute.is_rds,
        "rds_characters": characters,
        "rds_parameters": report_to_json(brute)["parameters"],
        "witness_a": f"0x{perm.witness_a:x}" if perm.witness_a is not None else None,
        "witness_collision": list(perm.collision) if perm.collision else None,
    }
    _maybe_timestamp(report, options)
    rds_word = "RDS verified" if brute.is_rds and characters else "RDS refuted"
    w_perm = "true" if perm.is_planar else "false"
    w_comp = "true" if components else "false"
    report["text_lines"] = [
        "mpf analyze v1",
        f"mode: {F.mode}  n: {F.n}",
        f"modified planar: {w_perm} (perm), {w_comp} (components), {rds_word}",
        f"witness: {report['witness_a'] or '-'}",
    ]
    text = emit_report(report if options["format"] != "json" else _strip_text(report), options["format"])
    _write(text, options["out"])
    if len(set(verdicts)) != 1:
        sys.stderr.write("internal error: verdict routes disagree; this is a bug\n")
        return EXIT_INTERNAL
    return EXIT_OK if all(verdicts) else EXIT_VERDICT_FALSE


def _strip_text(report: dict) -> dict:
    return {k: v for k, v in report.items() if k != "text_lines"}


def _cmd_spectrum(options: dict) -> int:
    obj = _load_json(options["file"])
    g = table_from_json(obj)
    c = int(options["c"], 16)
    if g.mode == "uv":
        spec = field_from_json(obj["field"]) if obj.get("field") else make_field(g.n)
        s = transform_V(spec, g, c)
    else:
        s = transform_U(g, c)
    rows = ["# mpf.spectrum.v1", "u,re,im,norm_sq"]
    norms = s.norms_sq()
    for u in range(s.size):
        re, im = s.values[u]
        rows.append(f"0x{u:x},{re},{im},{norms[u]}")
    report = {
        "format_version": "mpf.spectrum.v1",
        "mode": s.mode,
        "n": s.n,
        "twist": f"0x{s.twist:x}",
        "flat": is_flat(s),
        "values": [[int(re), int(im)] for re, im in s.values],
        "csv": "\n".join(rows),
    }
    _maybe_timestamp(report, options)
    if options["format"] == "json":
        report.pop("csv")
        _write(emit_report(report, "json"), options["out"])
    else:
        _write(report["csv"], options["out"])
    return EXIT_OK


def _cmd_verify_rds(options: dict) -> int:
    obj = _load_json(options["file"])
    group = group_from_json(obj["group"])
    R = elements_from_json(obj["elements"])
    if obj.get("forbidden"):
        N = elements_from_json(obj["forbidden"])
    else:
        N = forbidden_subgroup(group)
    brute = rds_verify_bruteforce(group, R, N)
    characters = None
    if group.law in ("star_mv", "star_uv") and frozenset(N) == forbidden_subgroup(group):
        characters = rds_verify_characters(group, R, N)
    report = {"format_version": "mpf.verify-rds.v1", "group": {"law": group.law, "n": group.n}}
    report.update(report_to_json(brute))
    report["character_criterion"] = characters
    _maybe_timestamp(report, options)
    report["text_lines"] = [
        "mpf verify-rds v1",
        f"group: {group.law}  n: {group.n}",
        f"parameters: ({brute.mu}, {brute.nu}, {brute.k}, {brute.lam})",
        f"is_rds: {str(brute.is_rds).lower()}  characters: {str(characters).lower()}",
    ]
    fmt = options["format"]
    _write(emit_report(report if fmt != "json" else _strip_text(report), fmt), options["out"])
    ok = brute.is_rds and characters is not False
    return EXIT_OK if ok else EXIT_VERDICT_FALSE


def _cmd_search(options: dict) -> int:
    job = SearchJob(
        mode=options["mode"],
        n=options["n"],
        klass=options["klass"],
        filter=options["filter"],
        shards=options["shards"],
        seed=options["seed"],
        sample=options["sample"],
    )
    report = run_search(job, stream=options["stream"])
    obj = {"format_version": "mpf.search.v1"}
    obj.update(search_report_to_json(report))
    _maybe_timestamp(obj, options)
    _write(emit_report(obj, "json"), options["out"])
    return EXIT_OK


def _selftest_checks():
    f4 = make_field(2)
    yield "default moduli irreducible (n=1..8)", all(
        poly_is_irreducible(make_field(n).modulus) for n in range(1, 9)
    )
    yield "GF(4) product alpha*alpha = alpha+1", fe_mul(f4, 2, 2) == 3
    yield "trace values on GF(4)", [trace_n(f4, a) for a in range(4)] == [0, 0, 1, 1]
    yield "sigma values on GF(4) at c=1", [sigma(f4, 1, x) for x in range(4)] == [0, 1, 1, 1]
    g0 = TruthTable(2, 0, "mv")
    s = transform_U(g0, 0b11)
    yield "nega spectrum of zero (n=2) at u=0 is 2i", s.value(0) == (0, 2)
    gu = TruthTable(2, 0, "uv")
    sv = transform_V(f4, gu, 1)
    yield "univariate nega spectrum of zero over GF(4) at u=0 is -2i", sv.value(0) == (0, -2)
    yield "constant functions are negabent (mv, n=2..5)", all(
        is_flat(transform_U(TruthTable(n, 0, "mv"), (1 << n) - 1)) for n in range(2, 6)
    )
    zero_uv = VectorialFunction("uv", 2, (0, 0, 0, 0), f4)
    zero_mv = VectorialFunction("mv", 2, (0, 0, 0, 0))
    yield "univariate zero function is modified planar", is_modified_planar_perm(zero_uv).is_planar
    yield "multivariate zero function is not", not is_modified_planar_perm(zero_mv).is_planar
    g = group_for(zero_uv)
    yield "graph of the univariate zero function is a (4,4,4,1)-RDS", rds_verify_bruteforce(
        g, graph_of(zero_uv), forbidden_subgroup(g)
    ).is_rds
    yield "character criterion agrees", rds_verify_characters(
        g, graph_of(zero_uv), forbidden_subgroup(g)
    )
    witnesses = bent4_witnesses(gu, f4)
    yield "zero function over GF(4) is bent4 exactly at nonzero twists", witnesses == {1, 2, 3}
    report = run_search(SearchJob("uv", 1, "all", "both"))
    yield "all four functions on GF(2) are modified planar", (
        report.examined == 4 and report.passing == 4 and report.cross_check
    )


def _cmd_selftest(options: dict) -> int:
    passed = 0
    total = 0
    for label, ok in _selftest_checks():
        total += 1
        tag = "ok" if ok else "FAIL"
        if ok:
            passed += 1
        print(f"{tag:4} {label}")
    print(f"selftest: {passed}/{total} passed")
    return EXIT_OK if passed == total else EXIT_VERDICT_FALSE


_DISPATCH = {
    "analyze": _cmd_analyze,
    "spectrum": _cmd_spectrum,
    "verify-rds": _cmd_verify_rds,
    "search": _cmd_search,
    "selftest": _cmd_selftest,
}


def main(argv=None) -> int:
    command = parse_command(argv if argv is not None else sys.argv[1:])
    try:
        return _DISPATCH[command.verb](command.options)
    except FilterDisagreementError as exc:
        sys.stderr.write(f"internal error: {exc}\n")
        return EXIT_INTERNAL
    except (OSError, json.JSONDecodeError, KeyError, ValueError, MpfError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
