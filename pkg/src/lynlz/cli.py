"""Command-line front end.

Subcommands map one-to-one onto the library: ``lyndon``, ``lz``, ``domains``,
``canonical``, ``verify``, ``family``, ``search`` and ``partition``.  Exit
codes: 0 success / all checks pass, 1 a verification check failed (witness on
stderr), 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .bounds import (
    check_theorem,
    default_jobs,
    exhaustive_search,
    expected_counts,
    expected_lz_phrases,
    extdom_partition,
    generate_family,
    iter_search,
)
from .domains import (
    Cluster,
    Domain,
    PGroup,
    TandemDomain,
    all_domains,
    boundary_budget,
    canonical_decomposition,
    compute_domain,
    extended_domain,
    find_p_groups,
    find_tandem_domains,
    verify_lemmas,
)
from .errors import IntegrityError
from .lyndon import lyndon_factorize, oracle_lyndon_dp
from .lz import lz_factorize, oracle_lz_naive
from .text import Span


def render_bytes(data: bytes) -> str:
    """Printable rendering; non-ASCII and control bytes become \\xNN escapes."""
    out = []
    for byte in data:
        if 0x20 <= byte < 0x7F and byte != 0x5C:
            out.append(chr(byte))
        else:
            out.append(f"\\x{byte:02x}")
    return "".join(out)


def _span_dict(span: Span) -> dict:
    d: dict = {"start": span.start, "end": span.end}
    if span.is_empty:
        d["empty"] = True
    return d


def _domain_dict(dom: Domain) -> dict:
    return {
        "i": dom.i,
        "d": dom.d,
        "j": dom.j,
        "size": dom.size,
        "empty": dom.is_empty,
        "span": _span_dict(dom.span),
        "associated": _span_dict(dom.associated),
        "extended": _span_dict(extended_domain(dom)),
    }


def _tandem_dict(td: TandemDomain) -> dict:
    return {
        "i": td.i,
        "d": td.d,
        "inner": {"i": td.inner.i, "d": td.inner.d},
        "outer": {"i": td.outer.i, "d": td.outer.d},
        "associated": _span_dict(td.associated),
    }


def _group_dict(g: PGroup) -> dict:
    return {
        "i": g.i,
        "p": g.p,
        "d": g.d,
        "members": [{"i": dom.i, "d": dom.d} for dom in g.members],
        "associated": _span_dict(g.associated),
    }


def _emit_json(obj: dict) -> None:
    print(json.dumps(obj, indent=2))


def _emit_tsv(rows: list[list[object]]) -> None:
    for row in rows:
        print("\t".join(str(cell) for cell in row))


def _read_input(args: argparse.Namespace) -> bytes:
    if args.text is not None:
        data = args.text.encode("latin-1")
        strip_default = False
    elif args.file is not None:
        data = Path(args.file).read_bytes()
        strip_default = False
    else:
        data = sys.stdin.buffer.read()
        strip_default = True  # shell pipelines append a newline
    strip = strip_default if args.strip_newline is None else args.strip_newline
    if strip:
        if data.endswith(b"\r\n"):
            data = data[:-2]
        elif data.endswith(b"\n"):
            data = data[:-1]
    return data


def _cmd_lyndon(args: argparse.Namespace) -> int:
    s = _read_input(args)
    lf = lyndon_factorize(s)
    if args.oracle_check:
        slow = oracle_lyndon_dp(s, max_len=len(s))
        if (lf.factors, lf.runs) != (slow.factors, slow.runs):
            raise IntegrityError(f"factorization disagrees with the oracle on {render_bytes(s)}")
    runs = [
        {
            "index": i + 1,
            "span": _span_dict(run),
            "factor": render_bytes(lf.factor_bytes(i + 1)),
            "exponent": lf.exponent(i + 1),
        }
        for i, run in enumerate(lf.runs)
    ]
    if args.format == "json":
        _emit_json({"input_len": len(s), "m": lf.m, "runs": runs})
    elif args.format == "tsv":
        _emit_tsv([[r["index"], r["span"]["start"], r["span"]["end"], r["factor"], r["exponent"]] for r in runs])
    else:
        print(f"input length {len(s)}, m = {lf.m}")
        for r in runs:
            print(f"  run {r['index']}: [{r['span']['start']}..{r['span']['end']}] = ({r['factor']})^{r['exponent']}")
    return 0


def _cmd_lz(args: argparse.Namespace) -> int:
    s = _read_input(args)
    lz = lz_factorize(s)
    if args.oracle_check:
        slow = oracle_lz_naive(s, max_len=max(len(s), 1))
        if lz.phrases != slow.phrases:
            raise IntegrityError(f"parse disagrees with the oracle on {render_bytes(s)}")
    phrases = [
        {"index": i + 1, "span": _span_dict(p), "text": render_bytes(p.slice(s))}
        for i, p in enumerate(lz.phrases)
    ]
    if args.format == "json":
        _emit_json(
            {
                "input_len": len(s),
                "z": lz.z,
                "phrases": phrases,
                "boundaries": list(lz.boundary_positions),
            }
        )
    elif args.format == "tsv":
        _emit_tsv([[p["index"], p["span"]["start"], p["span"]["end"], p["text"]] for p in phrases])
    else:
        print(f"input length {len(s)}, z = {lz.z}")
        for p in phrases:
            print(f"  phrase {p['index']}: [{p['span']['start']}..{p['span']['end']}] = {p['text']}")
    return 0


def _cmd_domains(args: argparse.Namespace) -> int:
    s = _read_input(args)
    lf = lyndon_factorize(s)
    domains = all_domains(lf)
    tandems = find_tandem_domains(lf)
    groups = find_p_groups(lf)
    if args.format == "json":
        _emit_json(
            {
                "input_len": len(s),
                "m": lf.m,
                "domains": [_domain_dict(dom) for dom in domains],
                "tandems": [_tandem_dict(td) for td in tandems],
                "groups": [_group_dict(g) for g in groups],
            }
        )
    elif args.format == "tsv":
        rows: list[list[object]] = []
        for dom in domains:
            rows.append(["domain", dom.i, dom.d, dom.j, dom.size, dom.span.start, dom.span.end])
        for td in tandems:
            rows.append(["tandem", td.i, td.d, "", "", td.associated.start, td.associated.end])
        for g in groups:
            rows.append(["group", g.i, g.d, g.p, "", g.associated.start, g.associated.end])
        _emit_tsv(rows)
    else:
        print(f"input length {len(s)}, m = {lf.m}")
        for dom in domains:
            body = "empty" if dom.is_empty else f"[{dom.span.start}..{dom.span.end}]"
            print(
                f"  domain(i={dom.i}, d={dom.d}): {body}, window "
                f"[{dom.associated.start}..{dom.associated.end}]"
            )
        for td in tandems:
            print(f"  tandem(i={td.i}, d={td.d}): window [{td.associated.start}..{td.associated.end}]")
        for g in groups:
            print(f"  group(i={g.i}, p={g.p}, d={g.d}): window [{g.associated.start}..{g.associated.end}]")
    return 0


def _cmd_canonical(args: argparse.Namespace) -> int:
    s = _read_input(args)
    lf = lyndon_factorize(s)
    root = compute_domain(lf, args.run, args.order)
    cd = canonical_decomposition(lf, root)
    budget = boundary_budget(cd)
    sequence = []
    for item in cd.sequence:
        if isinstance(item, Cluster):
            sequence.append({"kind": "cluster", "members": [_domain_dict(d) for d in item.members]})
        else:
            sequence.append({"kind": "loose", "domain": _domain_dict(item)})
    budget_dict = {
        "k": budget.k,
        "leftmost_cluster": budget.ell,
        "d": budget.d,
        "loose_orders": list(budget.loose_orders),
        "loose_sizes": list(budget.loose_sizes),
        "t": budget.t,
        "cluster_boundaries": budget.S,
        "loose_boundaries": budget.loose_total,
        "total": budget.total,
        "lower_bound": budget.lower_bound,
    }
    if args.format == "json":
        _emit_json(
            {"input_len": len(s), "root": _domain_dict(root), "sequence": sequence, "budget": budget_dict}
        )
    elif args.format == "tsv":
        rows: list[list[object]] = []
        for item in cd.sequence:
            if isinstance(item, Cluster):
                rows.append(["cluster", item.size, " ".join(f"({d.i},{d.d})" for d in item.members)])
            else:
                rows.append(["loose", item.size, f"({item.i},{item.d})"])
        _emit_tsv(rows)
    else:
        print(f"decomposition of domain(i={root.i}, d={root.d}), size {root.size}")
        for item in cd.sequence:
            if isinstance(item, Cluster):
                members = ", ".join(f"(i={d.i}, d={d.d})" for d in item.members)
                print(f"  cluster of {item.size}: {members}")
            else:
                print(f"  loose: (i={item.i}, d={item.d}), size {item.size}")
        print(
            f"budget: 1 + {budget.loose_total} + {budget.S} = {budget.total}"
            f" >= {budget.lower_bound}"
        )
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    s = _read_input(args)
    report = verify_lemmas(s)
    verdicts = {
        c.name: {"instances": c.instances, "failures": c.failures, "counterexample": c.counterexample}
        for c in report.checks
    }
    theorem = check_theorem(s) if s else None
    out = {
        "input_len": len(s),
        "m": report.m,
        "z": report.z,
        "t": theorem.t if theorem else None,
        "size_bound": {"passes": theorem.passes, "slack": theorem.slack} if theorem else None,
        "all_passed": report.passed,
        "verdicts": verdicts,
    }
    if args.format == "json":
        _emit_json(out)
    elif args.format == "tsv":
        _emit_tsv(
            [[c.name, c.instances, c.failures, c.counterexample or ""] for c in report.checks]
        )
    else:
        print(f"input length {len(s)}, m = {report.m}, z = {report.z}")
        for c in report.checks:
            status = "PASS" if c.passed else "FAIL"
            extra = f"  [{c.counterexample}]" if c.counterexample else ""
            print(f"  {status} {c.name} ({c.instances} instances){extra}")
        if report.passed:
            print("all checks passed")
        else:
            print("violation found: this indicates a defect in the library, not a property of the input")
    if not report.passed:
        return 1
    return 0


def _cmd_family(args: argparse.Namespace) -> int:
    s = generate_family(args.k)
    out: dict = {"k": args.k, "length": len(s), "string": render_bytes(s)}
    if args.k >= 2:
        counts = expected_counts(args.k)
        out["expected"] = {"m": counts.m_k, "z": counts.z_k}
    status = 0
    if args.check:
        counts = expected_counts(args.k)  # ValueError below k = 2
        lf = lyndon_factorize(s)
        lz = lz_factorize(s)
        phrases = lz.phrase_texts()
        expected_phrases = expected_lz_phrases(args.k)
        phrases_match = phrases == expected_phrases
        counts_match = lf.m == counts.m_k and lz.z == counts.z_k
        out["computed"] = {"m": lf.m, "z": lz.z}
        out["phrases"] = [render_bytes(p) for p in phrases]
        out["counts_match"] = counts_match
        out["phrases_match"] = phrases_match
        if not (counts_match and phrases_match):
            status = 1
    if args.format == "json":
        _emit_json(out)
    elif args.format == "tsv":
        row = [args.k, len(s), out["string"]]
        if "computed" in out:
            row += [out["computed"]["m"], out["computed"]["z"]]
        _emit_tsv([row])
    else:
        print(f"family k={args.k}: length {len(s)}")
        print(f"  {out['string']}")
        if "expected" in out:
            print(f"  expected m = {out['expected']['m']}, z = {out['expected']['z']}")
        if "computed" in out:
            print(f"  computed m = {out['computed']['m']}, z = {out['computed']['z']}")
            print(f"  phrases: {' '.join(out['phrases'])}")
            print("  check passed" if status == 0 else "  MISMATCH against closed forms")
    return status


def _cmd_partition(args: argparse.Namespace) -> int:
    s = _read_input(args)
    part = extdom_partition(s)
    z = lz_factorize(s).z
    m = lyndon_factorize(s).m
    bound = (m + part.t + 1) // 2
    satisfied = z >= bound
    if args.format == "json":
        _emit_json(
            {
                "input_len": len(s),
                "m": m,
                "z": z,
                "t": part.t,
                "partition": [
                    {"span": _span_dict(span), "size": size}
                    for span, size in zip(part.spans, part.sizes)
                ],
                "phrase_bound": bound,
                "bound_satisfied": satisfied,
            }
        )
    elif args.format == "tsv":
        _emit_tsv([[sp.start, sp.end, size] for sp, size in zip(part.spans, part.sizes)])
    else:
        print(f"input length {len(s)}, m = {m}, z = {z}, t = {part.t}")
        for sp, size in zip(part.spans, part.sizes):
            print(f"  part [{sp.start}..{sp.end}], domain size {size}")
        print(f"phrase bound: z = {z} >= ceil((m+t)/2) = {bound}: {'ok' if satisfied else 'VIOLATED'}")
    return 0 if satisfied else 1


def _cmd_search(args: argparse.Namespace) -> int:
    if args.format == "tsv":
        for rec in iter_search(
            args.sigma,
            args.max_len,
            dedupe=args.dedupe,
            check_lemmas=args.check_lemmas,
            limit=args.limit,
        ):
            print(
                f"{rec.sigma}\t{rec.n}\t{render_bytes(rec.string)}\t{rec.m}\t{rec.z}\t{rec.slack}"
            )
        return 0
    summary = exhaustive_search(
        args.sigma,
        args.max_len,
        dedupe=args.dedupe,
        check_lemmas=args.check_lemmas,
        jobs=args.jobs,
        limit=args.limit,
    )
    per_length = [
        {
            "n": ls.n,
            "count": ls.count,
            "max_diff": ls.max_diff,
            "max_diff_string": render_bytes(ls.max_diff_string) if ls.max_diff_string else None,
            "max_ratio": ls.max_ratio,
            "max_ratio_string": render_bytes(ls.max_ratio_string) if ls.max_ratio_string else None,
        }
        for ls in summary.per_length
    ]
    if args.format == "json":
        _emit_json(
            {
                "sigma": summary.sigma,
                "max_len": summary.max_len,
                "dedupe": summary.dedupe,
                "lemmas_checked": summary.lemmas_checked,
                "total": summary.total,
                "per_length": per_length,
            }
        )
    else:
        print(f"searched {summary.total} strings over {summary.sigma} letters, lengths 1..{summary.max_len}")
        for ls in per_length:
            print(
                f"  n={ls['n']}: {ls['count']} strings, max m-z = {ls['max_diff']}"
                f" ({ls['max_diff_string']}), max m/z = {ls['max_ratio']:.4f}"
                f" ({ls['max_ratio_string']})"
            )
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lynlz",
        description="Lyndon vs non-overlapping LZ factorizations: reports, "
        "structural verification and extremal search.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_io(p: argparse.ArgumentParser) -> None:
        src = p.add_mutually_exclusive_group()
        src.add_argument("--text", help="literal input (latin-1 bytes); default reads stdin")
        src.add_argument("--file", help="read input bytes from this file")
        p.add_argument(
            "--strip-newline",
            action=argparse.BooleanOptionalAction,
            default=None,
            help="drop one trailing line terminator (default: only for stdin)",
        )
        p.add_argument("--format", choices=("human", "json", "tsv"), default="human")

    p = sub.add_parser("lyndon", help="Lyndon factorization report")
    add_io(p)
    p.add_argument("--oracle-check", action="store_true", help="cross-check against the backtracking oracle")
    p.set_defaults(handler=_cmd_lyndon)

    p = sub.add_parser("lz", help="non-overlapping LZ factorization report")
    add_io(p)
    p.add_argument("--oracle-check", action="store_true", help="cross-check against the naive greedy oracle")
    p.set_defaults(handler=_cmd_lz)

    p = sub.add_parser("domains", help="all domains, tandem domains and groups")
    add_io(p)
    p.set_defaults(handler=_cmd_domains)

    p = sub.add_parser("canonical", help="canonical subdomain decomposition of one domain")
    add_io(p)
    p.add_argument("--run", type=int, required=True, help="run index i (1-based)")
    p.add_argument("--order", type=int, required=True, help="domain order d")
    p.set_defaults(handler=_cmd_canonical)

    p = sub.add_parser("verify", help="re-check every structural guarantee on the input")
    add_io(p)
    p.set_defaults(handler=_cmd_verify)

    p = sub.add_parser("family", help="lower-bound family string and its closed-form sizes")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--check", action="store_true", help="verify sizes and the exact phrase list")
    p.add_argument("--format", choices=("human", "json", "tsv"), default="human")
    p.set_defaults(handler=_cmd_family)

    p = sub.add_parser("search", help="enumerate all strings up to a length, track extremes")
    p.add_argument("--sigma", type=int, required=True, help="alphabet size")
    p.add_argument("--max-len", type=int, required=True)
    p.add_argument("--dedupe", action="store_true", help="skip relabel-equivalent strings")
    p.add_argument("--check-lemmas", action="store_true", help="run the full verifier per string")
    p.add_argument("--jobs", type=int, default=None, help="worker processes (default: $LYNLZ_JOBS or CPUs)")
    p.add_argument("--limit", type=int, default=10_000_000, help="refuse to enumerate more strings than this")
    p.add_argument("--format", choices=("human", "json", "tsv"), default="human")
    p.set_defaults(handler=_cmd_search)

    p = sub.add_parser("partition", help="tile the input into order-1 extended domains")
    add_io(p)
    p.set_defaults(handler=_cmd_partition)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.handler(args)
    except IntegrityError as exc:
        print(f"defect: {exc}", file=sys.stderr)
        return 1
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
