"""Command-line workbench.

Subcommands: abelianize, alexander, cover, fill, sakuma, branched,
rhs-sweep, verify-paper.  Reports are deterministic: identical inputs give
byte-identical bodies, every report embeds the sha256 digest of each input
file, and sweeps merge worker results in parameter order regardless of the
worker count.

Exit codes: 0 success, 1 mathematical mismatch in verify mode, 2 input
error.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from math import gcd
from pathlib import Path

from . import __version__, datasets, verify
from .covers import (
    CyclicQuotientMap,
    FillingSpec,
    branched_betti,
    fill,
    h_n_module,
    reidemeister_schreier,
    sakuma_quotient,
)
from .fox import alexander_matrix, alexander_poly, minor_polys
from .presentations import abelianize
from .words import ParseError


class InputError(Exception):
    pass


def _parse_int_values(text):
    """Accept '5', '3..9' (inclusive) or '3,5,7'."""
    values = []
    for chunk in text.split(","):
        chunk = chunk.strip()
        if ".." in chunk:
            lo, _, hi = chunk.partition("..")
            try:
                lo, hi = int(lo), int(hi)
            except ValueError:
                raise InputError(f"bad range {chunk!r}") from None
            if hi < lo:
                raise InputError(f"empty range {chunk!r}")
            values.extend(range(lo, hi + 1))
        else:
            try:
                values.append(int(chunk))
            except ValueError:
                raise InputError(f"bad integer {chunk!r}") from None
    if not values or min(values) < 1:
        raise InputError(f"values must be positive: {text!r}")
    return tuple(sorted(set(values)))


def _resolve_input(name, dir=None):
    """Resolve a user path or bundled name to a concrete file path."""
    p = Path(name)
    if p.suffix == ".json" and p.exists():
        return p
    try:
        return datasets.data_path(name, dir)
    except FileNotFoundError:
        raise InputError(f"no such input file or bundled dataset: {name!r}") from None


def _table(headers, rows):
    lines = [list(map(str, headers))] + [list(map(str, r)) for r in rows]
    widths = [max(len(line[i]) for line in lines) for i in range(len(headers))]
    out = []
    for idx, line in enumerate(lines):
        out.append("  ".join(c.ljust(w) for c, w in zip(line, widths)).rstrip())
        if idx == 0:
            out.append("  ".join("-" * w for w in widths).rstrip())
    return "\n".join(out)


def _report(command, inputs, parameters, results):
    return {
        "command": command,
        "inputs": {
            label: {"path": str(path), "sha256": datasets.file_digest(path)}
            for label, path in sorted(inputs.items())
        },
        "parameters": parameters,
        "results": results,
        "tool": {"name": "foxhom", "version": __version__},
    }


def _emit(report, fmt, table_text, output=None):
    if fmt == "json":
        body = json.dumps(report, indent=2, sort_keys=True) + "\n"
    else:
        digests = [
            f"# {label}: sha256 {entry['sha256'][:16]}..."
            for label, entry in report["inputs"].items()
        ]
        body = "\n".join(digests + [table_text]) + "\n"
    if output:
        Path(output).write_text(body)
    else:
        sys.stdout.write(body)


def _group_fields(group):
    return {"rank": group.rank, "torsion": list(group.torsion)}


def _group_line(group):
    return f"rank {group.rank}, torsion {list(group.torsion)}"


# ---- subcommands -----------------------------------------------------


def _cmd_abelianize(args):
    path = _resolve_input(args.presentation)
    p = datasets.load_presentation(str(path))
    group = abelianize(p)
    report = _report(
        "abelianize",
        {"presentation": path},
        {"presentation": p.name},
        [{"presentation": p.name, **_group_fields(group)}],
    )
    table = f"{p.name}: {_group_line(group)}"
    _emit(report, args.format, table, args.output)
    return 0


def _cmd_alexander(args):
    path = _resolve_input(args.presentation)
    map_path = _resolve_input(args.map)
    p = datasets.load_presentation(str(path))
    phi = datasets.load_map(str(map_path), source=p.generators)
    am = alexander_matrix(p, phi)
    delta = alexander_poly(p, phi)
    result = {
        "presentation": p.name,
        "matrix": am.matrix.to_json(),
        "alexander_polynomial": str(delta.normal_form()),
    }
    lines = [am.matrix.table()]
    nrows, ncols = am.shape
    if args.minors:
        if nrows != ncols + 1:
            raise InputError(
                f"--minors needs a deficiency-one presentation, got {nrows}x{ncols}"
            )
        minors = minor_polys(am)
        result["minors"] = {g: str(minors[g]) for g in p.generators}
        lines.append("")
        lines.extend(f"minor[{g}] = {minors[g]}" for g in p.generators)
    lines.append("")
    lines.append(f"alexander polynomial = {delta.normal_form()}")
    report = _report(
        "alexander",
        {"presentation": path, "map": map_path},
        {"presentation": p.name, "minors": bool(args.minors)},
        [result],
    )
    _emit(report, args.format, "\n".join(lines), args.output)
    return 0


def _load_cover_job(args):
    job_path = _resolve_input(args.job)
    job = datasets.load_job(str(job_path))
    n_values = _parse_int_values(args.n) if args.n else (job["n"],)
    return job_path, job, n_values


def _cover_groups(job, n, mode):
    p = job["presentation"]
    cover = reidemeister_schreier(p, CyclicQuotientMap(p, n, job["degrees"]))
    if mode == "h1":
        return {"h1": abelianize(cover.kernel_presentation())}
    if mode == "fill":
        if not job["fill"]:
            raise InputError("job spec has no fill slopes")
        return {"fill": fill(cover, FillingSpec(job["fill"]))}
    if mode == "sakuma":
        sak = sakuma_quotient(cover)
        hn = h_n_module(cover)
        return {"sakuma": sak, "hn": hn}
    raise InputError(f"unknown mode {mode!r}")


def _cmd_cover_family(args, mode, command):
    job_path, job, n_values = _load_cover_job(args)
    rows = []
    results = []
    for n in n_values:
        groups = _cover_groups(job, n, mode)
        entry = {"n": n}
        if mode == "sakuma":
            for key, group in groups.items():
                entry[key] = _group_fields(group)
            sak, hn = groups["sakuma"], groups["hn"]
            if sak.is_finite and hn.is_finite:
                entry["order_ratio"] = sak.order // hn.order
        else:
            entry.update(_group_fields(next(iter(groups.values()))))
        results.append(entry)
        if mode == "sakuma":
            rows.append(
                (n, _group_line(groups["sakuma"]), _group_line(groups["hn"]),
                 entry.get("order_ratio", "-"))
            )
        else:
            group = next(iter(groups.values()))
            rows.append((n, group.rank, list(group.torsion)))
    if mode == "sakuma":
        table = _table(("n", "transfer quotient", "transfer module", "order ratio"), rows)
    else:
        table = _table(("n", "rank", "torsion"), rows)
    report = _report(
        command,
        {"job": job_path},
        {"presentation": job["presentation"].name, "n": list(n_values), "mode": mode},
        results,
    )
    _emit(report, args.format, table, args.output)
    return 0


def _rhs_row(n):
    job = datasets.standard_cover_job()
    p = job["presentation"]
    cover = reidemeister_schreier(p, CyclicQuotientMap(p, n, job["degrees"]))
    filled = fill(cover, FillingSpec(job["fill"]))
    verdict = "yes" if filled.rank == 0 else "no"
    return {
        "n": n,
        "rank": filled.rank,
        "torsion": list(filled.torsion),
        "rational_homology_sphere": verdict,
        "flag": "" if n % 2 else "even-n",
    }


def _parse_sweep_levels(text):
    """Like _parse_int_values, but a..b ranges walk odd levels only."""
    values = []
    for chunk in text.split(","):
        chunk = chunk.strip()
        if ".." in chunk:
            values.extend(n for n in _parse_int_values(chunk) if n % 2)
        else:
            values.extend(_parse_int_values(chunk))
    if not values:
        raise InputError(f"no levels in {text!r}")
    return tuple(sorted(set(values)))


def _cmd_rhs_sweep(args):
    n_values = _parse_sweep_levels(args.n)
    evens = [n for n in n_values if n % 2 == 0]
    if evens and not args.force:
        raise InputError(
            f"even levels {evens} need --force; the filled-cover conclusions "
            "are asserted for odd levels only"
        )
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(_rhs_row, n_values))
    else:
        results = [_rhs_row(n) for n in n_values]
    results.sort(key=lambda r: r["n"])
    rows = [
        (r["n"], r["rank"], r["torsion"], r["rational_homology_sphere"], r["flag"])
        for r in results
    ]
    table = _table(("n", "rank", "torsion", "RHS", "flag"), rows)
    report = _report(
        "rhs-sweep",
        {"job": datasets.data_path("cover-job")},
        {"n": list(n_values), "force": bool(args.force)},
        results,
    )
    _emit(report, args.format, table, args.output)
    return 0


def _branched_cell(payload):
    delta_path, n, k = payload
    delta = datasets.load_poly(delta_path)
    count = branched_betti(delta, k, n)
    return {
        "n": n,
        "k": k,
        "betti": int(count),
        "flag": "zero-polynomial" if count.all_roots else "",
    }


def _cmd_branched(args):
    delta_path = _resolve_input(args.delta)
    delta = datasets.load_poly(str(delta_path))
    if len(delta.vars) != 2:
        raise InputError("branched sweeps need a two-variable polynomial")
    n_values = _parse_int_values(args.n)
    cells = []
    for n in n_values:
        if args.k == "all":
            ks = [k for k in range(1, n) if gcd(k, n) == 1]
        else:
            try:
                ks = [int(args.k)]
            except ValueError:
                raise InputError(f"--k must be an integer or 'all', got {args.k!r}") from None
        for k in ks:
            if not (0 < k < n) or gcd(k, n) != 1:
                raise InputError(f"k={k} is not a valid coprime residue mod n={n}")
            cells.append((str(delta_path), n, k))
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(_branched_cell, cells))
    else:
        results = [_branched_cell(c) for c in cells]
    results.sort(key=lambda r: (r["n"], r["k"]))
    rows = [(r["n"], r["k"], r["betti"], r["flag"]) for r in results]
    table = _table(("n", "k", "betti", "flag"), rows)
    report = _report(
        "branched",
        {"delta": delta_path},
        {"n": list(n_values), "k": args.k},
        results,
    )
    _emit(report, args.format, table, args.output)
    return 0


def _cmd_verify(args):
    items = args.item if args.item else None
    dir = args.data_dir
    try:
        results = verify.run_items(items, dir=dir)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    inputs = {}
    for name in ("n-final", "nb", "rst", "alexander-reference", "delta_L",
                 "map-free-abelian", "map-infinite-cyclic", "cover-job"):
        try:
            inputs[name] = datasets.data_path(name, dir)
        except FileNotFoundError:
            pass
    rows = [(item, "pass" if ok else "FAIL", detail) for item, ok, detail in results]
    table = _table(("item", "status", "detail"), rows)
    report = _report(
        "verify-paper",
        inputs,
        {"items": [item for item, _, _ in results]},
        [{"item": item, "pass": ok, "detail": detail} for item, ok, detail in results],
    )
    _emit(report, args.format, table, args.output)
    return 0 if all(ok for _, ok, _ in results) else 1


def build_parser():
    parser = argparse.ArgumentParser(
        prog="foxhom",
        description="Exact homology computations for finitely presented groups",
    )
    parser.add_argument("--version", action="version", version=f"foxhom {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--format", choices=("json", "table"), default="table")
        p.add_argument("--output", help="write the report to a file instead of stdout")

    p = sub.add_parser("abelianize", help="rank and torsion of a presentation")
    p.add_argument("presentation", help="presentation file or bundled name")
    common(p)
    p.set_defaults(func=_cmd_abelianize)

    p = sub.add_parser("alexander", help="Fox matrix, minors and their gcd")
    p.add_argument("presentation")
    p.add_argument("--map", required=True, help="abelianization map file or bundled name")
    p.add_argument("--minors", action="store_true", help="also print row-deletion minors")
    common(p)
    p.set_defaults(func=_cmd_alexander)

    for name, mode, help_text in (
        ("cover", "h1", "homology of a finite cyclic cover"),
        ("fill", "fill", "homology after filling the job's slopes"),
        ("sakuma", "sakuma", "transfer quotient and transfer module of a cover"),
    ):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("job", help="cover job file or bundled name (cover-job)")
        p.add_argument("--n", help="cover level(s): INT, a..b or comma list")
        common(p)
        p.set_defaults(func=lambda a, m=mode, c=name: _cmd_cover_family(a, m, c))

    p = sub.add_parser("rhs-sweep", help="filled-cover homology sweep on the bundled data")
    p.add_argument("--n", default="3..9", help="levels: INT, a..b or comma list")
    p.add_argument("--force", action="store_true", help="allow even levels")
    p.add_argument("--jobs", type=int, default=1)
    common(p)
    p.set_defaults(func=_cmd_rhs_sweep)

    p = sub.add_parser("branched", help="branched-cover Betti numbers from a two-variable polynomial")
    p.add_argument("delta", help="polynomial file or bundled name (delta_L)")
    p.add_argument("--n", required=True, help="levels: INT, a..b or comma list")
    p.add_argument("--k", default="all", help="residue k, or 'all' coprime residues")
    p.add_argument("--jobs", type=int, default=1)
    common(p)
    p.set_defaults(func=_cmd_branched)

    p = sub.add_parser("verify-paper", help="check bundled reference values against fresh computations")
    p.add_argument("--item", action="append", choices=verify.ITEMS, help="run only these items")
    p.add_argument("--data-dir", help="alternate data directory")
    common(p)
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (InputError, ParseError, FileNotFoundError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
