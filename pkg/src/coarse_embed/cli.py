"""Command-line front end.

Subcommands: gen (graph generators), embed (distortion pipeline), group
(affine-action pipeline), expander (regular samples + spectra), verify
(property suites). Outputs are deterministic for a fixed configuration;
exit status is 0 on success, 1 when a requested certificate fails, 2 on
input or configuration errors (with a JSON error object on stderr).
"""
import argparse
import sys

from . import expander as expander_mod
from . import suites
from .cocycle import group_schedule
from .errors import CoarseEmbedError, InputFormatError
from .groups import DEFAULT_BALL_CAP, group_from_spec
from .kernels import thread_count
from .metric import (
    complete_graph,
    cycle_graph,
    format_edge_list,
    from_edge_list,
    grid_graph,
    load_distance_csv,
    load_edge_list,
    path_graph,
)
from .reporting import canonical_json, samples_csv
from .schedule import schedule_for_space


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        sys.stderr.write(
            canonical_json({"error": {"type": "UsageError", "message": message}}) + "\n"
        )
        raise SystemExit(2)


def _write(text: str, path: str | None) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as handle:
            handle.write(text)


def _load_space(path: str, fmt: str):
    if fmt == "auto":
        fmt = "csv" if path.endswith(".csv") else "edges"
    if fmt == "edges":
        return load_edge_list(path)
    if fmt == "csv":
        return load_distance_csv(path)
    raise InputFormatError(f"unknown input format {fmt!r}")


def _cmd_gen(args) -> int:
    if args.kind == "grid":
        if args.rows < 1 or args.cols < 1:
            raise InputFormatError("gen --kind grid needs --rows and --cols >= 1")
        edges, v = grid_graph(args.rows, args.cols)
    else:
        if args.size < 1:
            raise InputFormatError(f"gen --kind {args.kind} needs --size >= 1")
        if args.kind == "path":
            edges, v = path_graph(args.size)
        elif args.kind == "cycle":
            edges, v = cycle_graph(args.size)
        elif args.kind == "complete":
            edges, v = complete_graph(args.size)
        else:
            sample = expander_mod.random_regular(args.size, args.degree, args.seed)
            edges, v = list(sample.edges), sample.vertex_count
    _write(format_edge_list(edges, v), args.output)
    if args.output and args.output != "-":
        summary = {
            "command": "gen",
            "kind": args.kind,
            "vertices": v,
            "edges": len(edges),
            "output": args.output,
        }
        sys.stdout.write(canonical_json(summary) + "\n")
    return 0


def _cmd_embed(args) -> int:
    space = _load_space(args.input, args.input_format)
    depth = args.depth if args.depth is not None else suites.default_depth(space)
    schedule = schedule_for_space(space, depth)
    checks, payload = suites.embedding_checks(space, schedule, thread_count(args.threads))
    ok = all(flag for _, flag, _ in checks)
    if args.format == "csv":
        _write(samples_csv(payload["samples"]), args.output)
    else:
        report = dict(payload)
        report["schedule"] = schedule.to_json_dict()
        report["ok"] = ok
        _write(canonical_json(report) + "\n", args.output)
    return 0 if ok else 1


def _cmd_group(args) -> int:
    group = group_from_spec(args.group)
    schedule = group_schedule(group, args.depth, args.cap)
    radius = args.radius if args.radius is not None else 2 * args.depth * args.depth + 1
    checks, payload = suites.group_checks(
        group, schedule, radius, args.samples, args.seed, args.cap
    )
    ok = all(flag for _, flag, _ in checks)
    report = dict(payload)
    report["samples"] = args.samples
    report["seed"] = args.seed
    report["schedule"] = schedule.to_json_dict()
    report["ok"] = ok
    _write(canonical_json(report) + "\n", args.output)
    return 0 if ok else 1


def _cmd_expander(args) -> int:
    sample = expander_mod.random_regular(args.n, args.d, args.seed)
    connected = expander_mod.is_connected(sample.edges, sample.vertex_count)
    report = {
        "command": "expander",
        "n": args.n,
        "d": args.d,
        "seed": args.seed,
        "edge_count": len(sample.edges),
        "connected": connected,
    }
    ok = connected
    if connected:
        lam1, lam2 = expander_mod.top_two_eigenvalues(sample.edges, args.n, args.tol)
        report["lambda1"] = lam1
        report["lambda2"] = lam2
        report["lambda2_magnitude"] = expander_mod.largest_magnitude_nontrivial(
            sample.edges, args.n, args.tol
        )
    if args.output:
        _write(format_edge_list(list(sample.edges), sample.vertex_count), args.output)
        report["edges_path"] = args.output
    if args.family_sizes:
        family = []
        for size in [int(tok) for tok in args.family_sizes.split(",")]:
            member = expander_mod.random_regular(size, args.d, args.seed)
            if not expander_mod.is_connected(member.edges, size):
                family.append({"n": size, "connected": False, "ok": False})
                ok = False
                continue
            _, lam2 = expander_mod.top_two_eigenvalues(member.edges, size, args.tol)
            space = from_edge_list(member.edges, size)
            depth = args.depth if args.depth is not None else suites.default_depth(space)
            schedule = schedule_for_space(space, depth)
            rows, _ = suites.embedding_checks(space, schedule, thread_count(args.threads))
            member_ok = all(flag for _, flag, _ in rows)
            family.append(
                {
                    "n": size,
                    "connected": True,
                    "lambda2": lam2,
                    "depth": depth,
                    "exponents": list(schedule.exponents),
                    "ok": member_ok,
                }
            )
            ok = ok and member_ok
        report["family"] = family
    report["ok"] = ok
    _write(canonical_json(report) + "\n", args.report)
    return 0 if ok else 1


def _cmd_verify(args) -> int:
    checks = []
    report = {"command": "verify", "suite": args.suite}
    if args.suite == "norms":
        checks = suites.norm_checks(args.samples, args.seed)
    elif args.suite == "group":
        if not args.group:
            raise InputFormatError("verify --suite group needs --group")
        group = group_from_spec(args.group)
        schedule = group_schedule(group, args.depth or 2, args.cap)
        radius = args.radius if args.radius is not None else 2 * len(schedule) ** 2 + 1
        checks, _ = suites.group_checks(
            group, schedule, radius, args.samples, args.seed, args.cap
        )
        report["group"] = group.label
    else:
        if not args.input:
            raise InputFormatError(f"verify --suite {args.suite} needs --input")
        space = _load_space(args.input, args.input_format)
        report["input"] = args.input
        depth = args.depth if args.depth is not None else min(10, suites.default_depth(space))
        report["depth"] = depth
        if args.suite in ("metric", "all"):
            checks += suites.metric_axiom_checks(space)
        if args.suite in ("tents", "all"):
            checks += suites.tent_checks(space, depth)
        if args.suite == "all":
            checks += suites.norm_checks(args.samples, args.seed)
        if args.suite in ("embedding", "all"):
            rows, _ = suites.embedding_checks(
                space, schedule_for_space(space, depth), thread_count(args.threads)
            )
            checks += rows
    ok = all(flag for _, flag, _ in checks)
    report["checks"] = [
        {"name": name, "ok": flag, "detail": detail} for name, flag, detail in checks
    ]
    report["ok"] = ok
    _write(canonical_json(report) + "\n", args.output)
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="coarse-embed")
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="write a graph in edge-list format")
    gen.add_argument(
        "--kind", required=True, choices=["path", "cycle", "grid", "complete", "regular"]
    )
    gen.add_argument("--size", type=int, default=0)
    gen.add_argument("--rows", type=int, default=0)
    gen.add_argument("--cols", type=int, default=0)
    gen.add_argument("--degree", type=int, default=3)
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--output", default="-")

    embed = sub.add_parser("embed", help="distortion profile and certificates")
    embed.add_argument("--input", required=True)
    embed.add_argument("--input-format", default="auto", choices=["auto", "edges", "csv"])
    embed.add_argument("--depth", type=int, default=None)
    embed.add_argument("--format", default="json", choices=["json", "csv"])
    embed.add_argument("--threads", type=int, default=None)
    embed.add_argument("--output", default="-")

    group = sub.add_parser("group", help="cocycle, affine action, properness")
    group.add_argument("--group", required=True, help="z:d | free:k | sym:k | dihedral:k")
    group.add_argument("--depth", type=int, default=2)
    group.add_argument("--radius", type=int, default=None)
    group.add_argument("--samples", type=int, default=50)
    group.add_argument("--seed", type=int, default=0)
    group.add_argument("--cap", type=int, default=DEFAULT_BALL_CAP)
    group.add_argument("--output", default="-")

    expander = sub.add_parser("expander", help="regular samples and spectral reports")
    expander.add_argument("--n", type=int, required=True)
    expander.add_argument("--d", type=int, default=3)
    expander.add_argument("--seed", type=int, default=0)
    expander.add_argument("--tol", type=float, default=1e-8)
    expander.add_argument("--family-sizes", default=None)
    expander.add_argument("--depth", type=int, default=None)
    expander.add_argument("--threads", type=int, default=None)
    expander.add_argument("--output", default=None, help="edge-list destination")
    expander.add_argument("--report", default="-", help="JSON report destination")

    verify = sub.add_parser("verify", help="run property suites")
    verify.add_argument(
        "--suite",
        required=True,
        choices=["metric", "tents", "norms", "embedding", "group", "all"],
    )
    verify.add_argument("--input", default=None)
    verify.add_argument("--input-format", default="auto", choices=["auto", "edges", "csv"])
    verify.add_argument("--group", default=None)
    verify.add_argument("--depth", type=int, default=None)
    verify.add_argument("--radius", type=int, default=None)
    verify.add_argument("--samples", type=int, default=200)
    verify.add_argument("--seed", type=int, default=0)
    verify.add_argument("--cap", type=int, default=DEFAULT_BALL_CAP)
    verify.add_argument("--threads", type=int, default=None)
    verify.add_argument("--output", default="-")
    return parser


_HANDLERS = {
    "gen": _cmd_gen,
    "embed": _cmd_embed,
    "group": _cmd_group,
    "expander": _cmd_expander,
    "verify": _cmd_verify,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return _HANDLERS[args.command](args)
    except SystemExit as exc:
        return int(exc.code or 0)
    except CoarseEmbedError as exc:
        sys.stderr.write(
            canonical_json({"error": {"type": type(exc).__name__, "message": str(exc)}}) + "\n"
        )
        return 2
    except (OSError, ValueError) as exc:
        sys.stderr.write(
            canonical_json({"error": {"type": type(exc).__name__, "message": str(exc)}}) + "\n"
        )
        return 2


if __name__ == "__main__":
    sys.exit(main())
