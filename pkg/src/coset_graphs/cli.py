"""Command-line interface.

Subcommands: enumerate, reach, contract, census, verify, diversity-table.
Exit codes: 0 success, 1 verification failure, 2 usage error, 3 resource
cap exceeded.  COSET_CACHE_DIR overrides the group-cache location.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import entropy, graphs, group as group_mod, states, verify as verify_mod
from .census import CensusOverflowError, census, census_records_csv, census_table_csv
from .graphs import OrbitOverflowError
from .group import ClosureOverflowError

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3


class UsageError(Exception):
    pass


GENERATOR_SETS: dict[str, list[str]] = {
    "hc12": ["H1", "H2", "C12", "C21"],
    "c2": ["H1", "H2", "P1", "P2", "C12", "C21"],
    "p2c12": ["P2", "C12"],
}

LOCAL_SETS: dict[str, list[str]] = {
    "hc12": ["H1", "H2", "P1 P1", "P2 P2"],
    "c2": ["H1", "H2", "P1", "P2"],
    "p2c12": ["P2", "P1 P1"],
}


def cache_dir() -> Path:
    override = os.environ.get("COSET_CACHE_DIR")
    if override:
        path = Path(override)
    else:
        path = Path.home() / ".cache" / "coset-graphs"
    path.mkdir(parents=True, exist_ok=True)
    return path


def _resolve_generators(args) -> tuple[str, list[str]]:
    if args.gen_file:
        words = [
            line.strip()
            for line in Path(args.gen_file).read_text().splitlines()
            if line.strip() and not line.startswith("#")
        ]
        return Path(args.gen_file).stem, words
    name = args.gens or "c2"
    if name not in GENERATOR_SETS:
        raise UsageError(f"unknown generator set {name!r}; known: {', '.join(GENERATOR_SETS)}")
    return name, GENERATOR_SETS[name]


def _resolve_locals(args, gens_name: str) -> list[str]:
    if getattr(args, "locals", None):
        return [w.strip() for w in args.locals.split(",") if w.strip()]
    if gens_name in LOCAL_SETS:
        return LOCAL_SETS[gens_name]
    raise UsageError(
        f"no default entropy-preserving set for {gens_name!r}; pass --locals"
    )


def _outdir(args) -> Path:
    path = Path(args.out) if args.out else Path(".")
    path.mkdir(parents=True, exist_ok=True)
    return path


def _state_tag(spec: str) -> str:
    return spec.replace(":", "_").replace("/", "_")


def cmd_enumerate(args) -> int:
    name, gens = _resolve_generators(args)
    grp = group_mod.enumerate_group(gens, args.n, max_size=args.cap)
    print(f"group {name} on {args.n} qubits: order {len(grp)}")
    closed_forms = {
        "c2": group_mod.clifford_order(2),
        "hc12": 1152,
        "p2c12": 32,
    }
    if name in closed_forms:
        expected = closed_forms[name]
        status = "ok" if expected == len(grp) else "MISMATCH"
        print(f"expected order {expected}: {status}")
        if expected != len(grp):
            return EXIT_VERIFY_FAILED
    path = cache_dir() / f"group-{name}-n{args.n}.json"
    group_mod.save_group(grp, str(path))
    print(f"cache written: {path}")
    return EXIT_OK


def _build_graph(args) -> tuple[str, str, graphs.ReachabilityGraph]:
    if not args.state:
        raise UsageError("--state is required")
    if not 0.0 < args.tol <= 1e-3:
        raise UsageError("--tol must lie in (0, 1e-3]")
    state = states.parse_state_spec(args.state)
    gens_name, gens = _resolve_generators(args)
    graph = graphs.reachability(state, gens, max_vertices=args.cap, tol=args.tol)
    return gens_name, _state_tag(args.state), graph


def _symbol_table_for(spec: str) -> dict[str, float] | None:
    if spec in ("dicke:3:1", "w:3", "fixture:w3"):
        return entropy.WSTATE_ENTROPIES
    if spec in ("dicke:4:2", "fixture:d42"):
        return entropy.DICKE42_ENTROPIES
    return None


def cmd_reach(args) -> int:
    gens_name, tag, graph = _build_graph(args)
    out = _outdir(args)
    base = f"reach-{tag}-{gens_name}"
    payload = graphs.export(graph, args.format)
    (out / f"{base}.{_ext(args.format)}").write_text(payload)
    table = entropy.entropy_table_csv(
        graphs.class_vector_counts(graph), _symbol_table_for(args.state)
    )
    (out / f"{base}-entropy.csv").write_text(table)
    print(f"vertices: {graph.vertex_count}")
    print(f"generators: {' '.join(graph.generator_labels)}")
    print(f"entropic diversity: {graphs.entropic_diversity(graph)}")
    print(f"wrote {base}.{_ext(args.format)} and {base}-entropy.csv in {out}")
    return EXIT_OK


def cmd_contract(args) -> int:
    gens_name, tag, graph = _build_graph(args)
    locals_ = _resolve_locals(args, gens_name)
    contracted = graphs.contract(graph, locals_, keep_loops=args.keep_loops)
    out = _outdir(args)
    base = f"contract-{tag}-{gens_name}"
    (out / f"{base}.{_ext(args.format)}").write_text(graphs.export(contracted, args.format))
    print(f"reachability vertices: {graph.vertex_count}")
    print(f"contracted classes: {contracted.vertex_count}")
    print(f"class sizes: {contracted.class_sizes()}")
    print(f"entropic diversity: {graphs.entropic_diversity(graph)}")
    print(f"local subgroup order: {contracted.local_order}")
    print(f"wrote {base}.{_ext(args.format)} in {out}")
    return EXIT_OK


def _ext(fmt: str) -> str:
    return {"dot": "dot", "graphml": "graphml", "json": "json", "csv": "csv", "csv-summary": "csv"}[fmt]


def cmd_census(args) -> int:
    if args.n is not None:
        ns = [args.n]
    else:
        ns = [2, 3, 4] + ([5] if args.extended else [])
    if any(n > 4 for n in ns) and not args.extended:
        raise UsageError("census for n=5 requires --extended")
    if any(n > 5 or n < 2 for n in ns):
        raise UsageError("census supports 2 <= n <= 5")
    results = []
    out = _outdir(args)
    for n in ns:
        res = census(n, cap=args.cap if args.cap != DEFAULT_CAP else None)
        results.append(res)
        print(
            f"n={n}: {res.total_states} states, {len(res.records)} orbits "
            f"({res.elapsed_seconds:.1f}s)"
        )
        print(f"  g24/g36:    {res.cell_text('g24_g36')}")
        print(f"  g144/g288:  {res.cell_text('g144_g288')}")
        print(f"  g1152:      {res.cell_text('g1152')}")
        (out / f"census-n{n}-orbits.csv").write_text(census_records_csv(res))
    (out / "census-table.csv").write_text(census_table_csv(results))
    print(f"wrote census CSVs in {out}")
    return EXIT_OK


def cmd_verify(args) -> int:
    names = args.suites or ["all"]
    if names == ["all"]:
        names = list(verify_mod.SUITES)
    ctx = verify_mod.VerifyContext(extended=args.extended)
    try:
        results = verify_mod.run_suites(names, ctx)
    except ValueError as exc:
        raise UsageError(str(exc))
    failed = 0
    for res in results:
        print(res.line())
        if not res.passed:
            failed += 1
    print(f"{len(results) - failed}/{len(results)} checks passed")
    if args.out:
        report = [
            {
                "suite": r.suite,
                "name": r.name,
                "expected": repr(r.expected),
                "actual": repr(r.actual),
                "passed": r.passed,
            }
            for r in results
        ]
        path = _outdir(args) / "verify-report.json"
        path.write_text(json.dumps(report, indent=2, sort_keys=True) + "\n")
        print(f"wrote {path}")
    return EXIT_OK if failed == 0 else EXIT_VERIFY_FAILED


def cmd_diversity_table(args) -> int:
    print(f"{'n':>3}  {'max entropy vectors':>24}")
    for n in range(1, args.max_n + 1):
        print(f"{n:>3}  {group_mod.diversity_bound(n):>24}")
    return EXIT_OK


DEFAULT_CAP = 200_000


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="coset-graphs",
        description=(
            "Clifford-orbit reachability graphs, entropy vectors, and "
            "double-coset contracted graphs"
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, state=False):
        p.add_argument("--gens", help="generator set name: hc12, c2, p2c12")
        p.add_argument("--gen-file", help="file with one generator word per line")
        p.add_argument("--out", help="output directory (default: current)")
        p.add_argument(
            "--format",
            default="json",
            choices=["dot", "graphml", "json", "csv", "csv-summary"],
        )
        p.add_argument("--cap", type=int, default=DEFAULT_CAP, help="orbit/group size cap")
        p.add_argument("--tol", type=float, default=1e-9, help="state-identity tolerance")
        p.add_argument("--jobs", type=int, default=1, help="reserved; runs serially")
        if state:
            p.add_argument(
                "--state",
                help="state spec: dicke:4:2, ghz:3, basis:000, w:3, fixture:NAME, or a JSON file",
            )

    p_enum = sub.add_parser("enumerate", help="enumerate a generated group and cache it")
    common(p_enum)
    p_enum.add_argument("--n", type=int, default=2, help="qubit count")
    p_enum.set_defaults(func=cmd_enumerate)

    p_reach = sub.add_parser("reach", help="build the reachability graph of a state")
    common(p_reach, state=True)
    p_reach.set_defaults(func=cmd_reach)

    p_con = sub.add_parser("contract", help="contract a reachability graph")
    common(p_con, state=True)
    p_con.add_argument("--locals", help="comma-separated entropy-preserving generator words")
    p_con.add_argument("--keep-loops", action="store_true")
    p_con.set_defaults(func=cmd_contract)

    p_cen = sub.add_parser("census", help="stabilizer-state orbit census")
    common(p_cen)
    p_cen.add_argument("--n", type=int, default=None, help="single qubit count (default 2..4)")
    p_cen.add_argument("--extended", action="store_true", help="allow the n=5 census")
    p_cen.set_defaults(func=cmd_census)

    p_ver = sub.add_parser("verify", help="run reproduction suites")
    common(p_ver)
    p_ver.add_argument(
        "suites",
        nargs="*",
        help=f"suites to run (default all): {', '.join(verify_mod.SUITES)}",
    )
    p_ver.add_argument("--extended", action="store_true", help="include the n=5 census row")
    p_ver.set_defaults(func=cmd_verify)

    p_div = sub.add_parser("diversity-table", help="entropy-vector upper bound table")
    common(p_div)
    p_div.add_argument("--max-n", type=int, default=5)
    p_div.set_defaults(func=cmd_diversity_table)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (OrbitOverflowError, ClosureOverflowError, CensusOverflowError) as exc:
        print(f"resource cap exceeded: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except (ValueError, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
