"""Command-line front end.

Subcommands: area, dehn, rel-ball, dist, converge, verify-theorem.
Common flags: --format table|json|csv, --cache-dir, --length-cap,
--node-cap, --lambda-max, --workers.

Exit codes: 0 success; 2 input or parse error; 3 area not found within
caps; 4 unknown oracle verdict or inconclusive values; 5 a checked
inequality failed (which would mean an implementation bug).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import __version__
from .area import AreaNotFound, Caps, area_search
from .cache import ResultCache, default_cache_dir
from .dehn import DehnComputationError, corollary_check, dehn, theorem_check
from .families import get_family
from .oracles import CosetLimitExceeded, UnknownVerdictError, build_oracle
from .presentations import (
    Presentation,
    PresentationSyntaxError,
    max_relator_length,
    parse_presentation,
    parse_word,
)
from .space import convergence_report, distance, rel_ball

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_NOT_FOUND = 3
EXIT_INCONCLUSIVE = 4
EXIT_VERDICT_FAILED = 5


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--format", choices=("table", "json", "csv"), default="table")
    parser.add_argument("--cache-dir", default=None, help="result cache directory (env MARKEDGROUPS_CACHE_DIR)")
    parser.add_argument("--length-cap", type=int, default=None, help="max intermediate word length in area searches")
    parser.add_argument("--node-cap", type=int, default=1_000_000, help="max states explored per area search")
    parser.add_argument("--lambda-max", type=int, default=10, help="largest radius scanned for ball agreement")
    parser.add_argument("--workers", type=int, default=1, help="parallel workers for per-word area searches")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="markedgroups",
        description="Relation balls, marked-group distances, word areas and Dehn tables.",
    )
    parser.add_argument("--version", action="version", version=f"markedgroups {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p_area = sub.add_parser("area", help="area of a word with a verifiable certificate")
    p_area.add_argument("-p", "--presentation", required=True, help="presentation file")
    p_area.add_argument("-w", "--word", required=True, help="word expression")
    _add_common(p_area)

    p_dehn = sub.add_parser("dehn", help="Dehn-function table over a list of radii")
    p_dehn.add_argument("-p", "--presentation", help="presentation file")
    p_dehn.add_argument("--oracle", help="oracle spec, e.g. abelian:0,5")
    p_dehn.add_argument("--family", help="built-in family name or manifest path")
    p_dehn.add_argument("--i", help="family index")
    p_dehn.add_argument("--n", required=True, help="comma-separated radii, e.g. 2,4,6")
    _add_common(p_dehn)

    p_ball = sub.add_parser("rel-ball", help="relation ball of one marked group")
    p_ball.add_argument("-p", "--presentation", help="presentation file")
    p_ball.add_argument("--oracle", help="oracle spec")
    p_ball.add_argument("--family", help="built-in family name or manifest path")
    p_ball.add_argument("--i", help="family index")
    p_ball.add_argument("--radius", type=int, required=True)
    _add_common(p_ball)

    p_dist = sub.add_parser("dist", help="distance between two marked groups")
    p_dist.add_argument("-p1", "--p1", help="first presentation file")
    p_dist.add_argument("--oracle1", help="oracle spec for the first group")
    p_dist.add_argument("-p2", "--p2", help="second presentation file")
    p_dist.add_argument("--oracle2", help="oracle spec for the second group")
    p_dist.add_argument("--family", help="family member vs limit instead of two files")
    p_dist.add_argument("--i", help="family index")
    _add_common(p_dist)

    p_conv = sub.add_parser("converge", help="distance of each family member to the limit")
    p_conv.add_argument("--family", required=True)
    p_conv.add_argument("--i", required=True, help="range like 3..7 or comma list")
    _add_common(p_conv)

    p_thm = sub.add_parser("verify-theorem", help="check the convergence inequalities member by member")
    p_thm.add_argument("--family", required=True)
    p_thm.add_argument("--i", required=True, help="range like 3..6 or comma list")
    p_thm.add_argument("--n", required=True, help="comma-separated radii")
    _add_common(p_thm)

    return parser


def _parse_indices(text: str) -> list[int]:
    text = text.strip()
    if ".." in text:
        lo, hi = text.split("..", 1)
        return list(range(int(lo), int(hi) + 1))
    return [int(part) for part in text.split(",") if part.strip()]


def _parse_radii(text: str) -> list[int]:
    return [int(part) for part in text.split(",") if part.strip()]


def _load_presentation_file(path: str) -> Presentation:
    with open(path, "r", encoding="utf-8") as handle:
        return parse_presentation(handle.read(), name=path)


def _resolve_group(args) -> tuple[Presentation, object, str]:
    """Presentation plus oracle from either -p/--oracle or --family/--i."""
    if args.family:
        if args.i is None:
            raise ValueError("--family requires --i")
        family = get_family(args.family)
        pres, oracle = family.member(int(args.i))
        return pres, oracle, f"{family.name}[{args.i}]"
    if not args.presentation:
        raise ValueError("give either -p FILE or --family NAME --i K")
    pres = _load_presentation_file(args.presentation)
    if args.oracle:
        oracle = build_oracle(args.oracle, pres)
    elif not pres.relators:
        oracle = build_oracle("free", pres)
    else:
        raise ValueError("--oracle is required for presentations with relators")
    return pres, oracle, args.presentation


def _default_length_cap(args, floor: int, pres: Presentation) -> int:
    if args.length_cap is not None:
        if args.length_cap < floor:
            raise ValueError(f"--length-cap must be at least {floor}")
        return args.length_cap
    L = max_relator_length(pres) or 0
    return max(floor + 2 * L, floor, 4)


def _render_table(headers: list[str], rows: list[list]) -> str:
    cells = [[str(c) for c in row] for row in rows]
    widths = [max(len(h), *(len(r[k]) for r in cells)) if cells else len(h) for k, h in enumerate(headers)]
    lines = ["  ".join(h.ljust(widths[k]) for k, h in enumerate(headers))]
    lines.append("  ".join("-" * w for w in widths))
    for row in cells:
        lines.append("  ".join(row[k].ljust(widths[k]) for k in range(len(headers))))
    return "\n".join(lines)


def _render_csv(headers: list[str], rows: list[list]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(headers)
    writer.writerows(rows)
    return buf.getvalue().rstrip("\n")


def _emit(args, payload: dict, headers: list[str], rows: list[list], footer: str | None = None) -> None:
    if args.format == "json":
        print(json.dumps(payload, indent=2))
    elif args.format == "csv":
        print(_render_csv(headers, rows))
    else:
        print(_render_table(headers, rows))
        if footer:
            print(footer)


def cmd_area(args) -> int:
    pres = _load_presentation_file(args.presentation)
    w = parse_word(args.word, pres.gen_names)
    length_cap = _default_length_cap(args, len(w), pres)
    result = area_search(pres, w, length_cap, args.node_cap)
    payload = {
        "presentation": args.presentation,
        "word": pres.word_str(w),
        **result.to_json(pres),
    }
    cert_text = "; ".join(
        f"{entry['conjugator']} * r{entry['relator']}^{entry['sign']}" for entry in payload["certificate"]
    )
    _emit(
        args,
        payload,
        ["value", "exact", "states_explored", "certificate"],
        [[result.value, result.exact, result.stats.states_explored, cert_text or "-"]],
    )
    return EXIT_OK


def cmd_dehn(args) -> int:
    pres, oracle, label = _resolve_group(args)
    radii = _parse_radii(args.n)
    length_cap = _default_length_cap(args, max(radii, default=0), pres)
    caps = Caps(length_cap, args.node_cap)
    cache = ResultCache(args.cache_dir or default_cache_dir())
    rows_json = []
    for n in radii:
        key = ResultCache.make_key(
            op="dehn",
            presentation=pres.to_text(),
            oracle=oracle.spec,
            n=n,
            length_cap=caps.length_cap,
            node_cap=caps.node_cap,
            version=__version__,
        )
        hit = cache.get(key)
        if hit is not None:
            rows_json.append(hit)
            continue
        value = dehn(pres, oracle, n, caps, workers=args.workers)
        row = value.to_json(pres)
        cache.put(key, row)
        rows_json.append(row)
    payload = {
        "presentation": label,
        "oracle": oracle.spec,
        "caps": {"length_cap": caps.length_cap, "node_cap": caps.node_cap},
        "rows": rows_json,
    }
    table_rows = [
        [row["n"], row["value"], row["exact"], " | ".join(row["witnesses"][:4]) or "-"]
        for row in rows_json
    ]
    _emit(args, payload, ["n", "value", "exact", "witnesses"], table_rows)
    return EXIT_OK


def cmd_rel_ball(args) -> int:
    pres, oracle, label = _resolve_group(args)
    ball = rel_ball(pres, oracle, args.radius)
    payload = {"presentation": label, "oracle": oracle.spec, **ball.to_json(pres)}
    rows = [[word] for word in payload["members"]]
    _emit(args, payload, ["member"], rows, footer=f"{payload['count']} members at radius {args.radius}")
    return EXIT_OK


def cmd_dist(args) -> int:
    if args.family:
        if args.i is None:
            raise ValueError("--family requires --i")
        family = get_family(args.family)
        pres1, oracle1 = family.member(int(args.i))
        pres2, oracle2 = family.limit()
        label1, label2 = f"{family.name}[{args.i}]", f"{family.name}[limit]"
    else:
        if not (args.p1 and args.p2 and args.oracle1 and args.oracle2):
            raise ValueError("give --p1/--oracle1/--p2/--oracle2, or --family/--i")
        pres1 = _load_presentation_file(args.p1)
        pres2 = _load_presentation_file(args.p2)
        oracle1 = build_oracle(args.oracle1, pres1)
        oracle2 = build_oracle(args.oracle2, pres2)
        label1, label2 = args.p1, args.p2
    d = distance(pres1, oracle1, pres2, oracle2, args.lambda_max)
    payload = {"p1": label1, "p2": label2, **d.to_json()}
    _emit(args, payload, ["kind", "lambda", "display"], [[d.kind, d.lam, f"{d.display:.6g}"]])
    return EXIT_OK


def cmd_converge(args) -> int:
    family = get_family(args.family)
    report = convergence_report(family, _parse_indices(args.i), args.lambda_max)
    payload = report.to_json()
    rows = [[row["i"], row["kind"], row["lambda"], f"{row['display']:.6g}"] for row in payload["rows"]]
    footer = f"lambda non-decreasing: {payload['lambda_non_decreasing']}"
    _emit(args, payload, ["i", "kind", "lambda", "display"], rows, footer=footer)
    return EXIT_OK


def cmd_verify_theorem(args) -> int:
    family = get_family(args.family)
    indices = _parse_indices(args.i)
    radii = _parse_radii(args.n)
    L = max_relator_length(family.limit_pres)
    if L is None:
        raise ValueError(
            f"family {family.name!r} has a free limit (no relators): L is undefined, refusing"
        )
    floor = max(radii + [L])
    length_cap = _default_length_cap(args, floor, family.limit_pres)
    caps = Caps(length_cap, args.node_cap)
    reports = []
    for n in radii:
        for i in indices:
            reports.append(theorem_check(family, i, n, caps, workers=args.workers))
    corollaries = [corollary_check(family, indices, n, caps, workers=args.workers) for n in radii]

    inconclusive = any(
        r.applicable and (r.inequality_star_ok is None or r.k_le_delta_L_ok is None)
        for r in reports
    )
    failed = any(not r.all_pass for r in reports) or any(not c.all_pass for c in corollaries)
    if failed:
        status = "failed"
    elif inconclusive:
        status = "inconclusive"
    else:
        status = "verified"
    payload = {
        "family": family.name,
        "L": L,
        "caps": {"length_cap": caps.length_cap, "node_cap": caps.node_cap},
        "reports": [r.to_json() for r in reports],
        "corollary": [c.to_json() for c in corollaries],
        "summary": {
            "status": status,
            "applicable": sum(1 for r in reports if r.applicable),
            "checked": len(reports),
        },
    }

    def mark(flag):
        return "-" if flag is None else ("ok" if flag else "FAIL")

    rows = [
        [
            r.i,
            r.n,
            r.ball_agreement,
            r.delta_i_n[0],
            r.delta_n[0],
            r.K_i[0],
            r.delta_i_L[0],
            "-" if r.ratio is None else f"{r.ratio.numerator}/{r.ratio.denominator}",
            mark(r.inequality_star_ok),
            mark(r.k_le_delta_L_ok),
            mark(r.ratio_le_delta_ok),
            "yes" if r.applicable else "no",
        ]
        for r in reports
    ]
    footer = (
        f"summary: {status} "
        f"({payload['summary']['applicable']}/{payload['summary']['checked']} reports applicable; "
        f"values are exact within caps {caps.length_cap}/{caps.node_cap})"
    )
    _emit(
        args,
        payload,
        ["i", "n", "agree", "d_i(n)", "d(n)", "K_i", "d_i(L)", "ratio", "star", "K<=d_i(L)", "ratio<=d(n)", "applies"],
        rows,
        footer=footer,
    )
    if failed:
        return EXIT_VERDICT_FAILED
    if inconclusive:
        return EXIT_INCONCLUSIVE
    return EXIT_OK


_COMMANDS = {
    "area": cmd_area,
    "dehn": cmd_dehn,
    "rel-ball": cmd_rel_ball,
    "dist": cmd_dist,
    "converge": cmd_converge,
    "verify-theorem": cmd_verify_theorem,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except (PresentationSyntaxError, FileNotFoundError, ValueError, CosetLimitExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (AreaNotFound, DehnComputationError) as exc:
        print(f"not found: {exc}", file=sys.stderr)
        return EXIT_NOT_FOUND
    except UnknownVerdictError as exc:
        print(f"inconclusive: {exc}", file=sys.stderr)
        return EXIT_INCONCLUSIVE


if __name__ == "__main__":
    sys.exit(main())
