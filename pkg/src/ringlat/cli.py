"""Command-line front end: ``ringlat analyze|examples|lattice|random|verify``.

Exit codes: 0 success, 1 harness failure (a bug), 2 parse or validation
error, 3 scan or node cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import catalog
from .algebra import DEFAULT_SCAN_CAP, extension_from_json
from .canon import DEFAULT_SAMPLE_BUDGET
from .errors import NodeCapExceeded, RingLatError, ScanCapExceeded, UnknownExample
from .harness import check_instance, parse_profile, random_instance, run_harness
from .lattice import DEFAULT_NODE_CAP, enumerate_interval, to_dot, to_json
from .report import analyze, compare_expected

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_CAP = 0, 1, 2, 3


class InputError(Exception):
    pass


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False, sort_keys=False) + "\n"


def _write(text: str, out: str | None) -> None:
    if out and out != "-":
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def load_extension(path: str):
    """``(R, S, obj)`` from a JSON file (``-`` for stdin), with line-level
    diagnostics on malformed input."""
    try:
        text = sys.stdin.read() if path == "-" else Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from exc
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}:{exc.lineno}:{exc.colno}: {exc.msg}") from exc
    if not isinstance(obj, dict):
        raise InputError(f"{path}:1:1: expected a JSON object")
    try:
        R, S = extension_from_json(obj)
    except KeyError as exc:
        raise InputError(f"{path}: missing key {exc.args[0]!r}") from exc
    except (RingLatError, ValueError, TypeError, IndexError) as exc:
        raise InputError(f"{path}: {_locate(text, exc)}{type(exc).__name__}: {exc}") from exc
    return R, S, obj


def _table_entry_line(text: str, i: int, j: int) -> int | None:
    """Line number of ``table[i][j]`` in the raw JSON text."""
    pos = text.find('"table"')
    if pos < 0:
        return None
    pos = text.find("[", pos)
    depth, row, col, in_str = 0, -1, -1, False
    for k in range(pos, len(text)):
        ch = text[k]
        if in_str:
            in_str = ch != '"' or text[k - 1] == "\\"
            continue
        if ch == '"':
            in_str = True
        elif ch == "[":
            depth += 1
            if depth == 2:
                row, col = row + 1, -1
            elif depth == 3 and row == i:
                col += 1
                if col == j:
                    return text.count("\n", 0, k) + 1
        elif ch == "]":
            depth -= 1
            if depth == 0:
                return None
    return None


def _locate(text: str, exc: Exception) -> str:
    """``line N:`` prefix pointing at the table entry an axiom violation names."""
    witness = getattr(exc, "witness", None)
    if not witness:
        return ""
    i, j = witness[0], witness[1] if len(witness) > 1 else witness[0]
    line = _table_entry_line(text, i, j)
    return f"line {line}: table[{i}][{j}]: " if line else ""


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------


def cmd_analyze(args) -> int:
    R, S, obj = load_extension(args.input)
    rep = analyze(R, S, obj.get("id", Path(args.input).stem), with_lattice=not args.no_lattice,
                  cap=args.scan_cap, budget=args.sample_budget, seed=args.seed)
    out = rep.to_json(with_timings=args.timings)
    if "expected" in obj and "id" in obj:
        try:
            entry = catalog.get(obj["id"])
            out["expected"] = {k: {"expected": e, "computed": c, "match": m}
                               for k, (e, c, m) in compare_expected(entry, rep).items()}
        except UnknownExample:
            pass
    _write(_dump(out), args.output)
    return EXIT_OK


def cmd_examples(args) -> int:
    if args.list or not args.name:
        for name, fn in catalog.CATALOG.items():
            params = catalog._PARAM_ORDER.get(name, [])
            doc = " ".join(l.strip() for l in (fn.__doc__ or "").strip().split("\n\n")[0].splitlines())
            sys.stdout.write(f"{name}({', '.join(params)})  {doc}\n" if params else f"{name}  {doc}\n")
        return EXIT_OK
    entry = catalog.get(args.name)
    _write(_dump(entry.to_json()), args.output)
    return EXIT_OK


def cmd_lattice(args) -> int:
    R, S, _ = load_extension(args.input)
    if not S.field.is_finite:
        raise InputError(f"{args.input}: lattice enumeration needs a finite field")
    L = enumerate_interval(R, S, cap=args.scan_cap, node_cap=args.node_cap)
    text = _dump(to_json(L)) if args.json else to_dot(L, with_basis=args.basis)
    _write(text, args.output)
    return EXIT_OK


def cmd_random(args) -> int:
    profile = parse_profile(args.profile)
    out_dir = Path(args.out) if args.out else None
    if out_dir:
        out_dir.mkdir(parents=True, exist_ok=True)
    for i in range(args.count):
        inst = random_instance(args.seed, i, profile)
        text = _dump(inst.to_json())
        if out_dir:
            (out_dir / f"{inst.id}.json").write_text(text, encoding="utf-8")
        else:
            sys.stdout.write(json.dumps(inst.to_json(), ensure_ascii=False) + "\n")
    return EXIT_OK


def _verify_catalog(args) -> tuple[dict, int]:
    rows, failed = [], 0
    for entry in catalog.all_entries():
        budget = args.sample_budget if entry.S.field.is_finite else min(args.sample_budget, 20)
        cmp = compare_expected(entry, budget=budget, seed=args.seed)
        res = check_instance(entry.R, entry.top, entry.name) if entry.S.field.is_finite else None
        bad = [k for k, (_, _, m) in cmp.items() if not m]
        checks_failed = res.failures if res else []
        failed += bool(bad) + len(checks_failed)
        rows.append({"id": entry.name, "mismatches": {k: list(cmp[k][:2]) for k in bad},
                     "check_failures": checks_failed})
    return {"catalog": rows, "failures": failed}, failed


def cmd_verify(args) -> int:
    if args.catalog:
        summary, failed = _verify_catalog(args)
        if args.json:
            _write(_dump(summary), args.output)
        else:
            lines = [f"{r['id']:32s} {'ok' if not (r['mismatches'] or r['check_failures']) else 'FAIL'}"
                     for r in summary["catalog"]]
            _write("\n".join(lines + [f"failures: {failed}"]) + "\n", args.output)
        return EXIT_FAIL if failed else EXIT_OK
    profile = parse_profile(args.profile)
    summary = run_harness(args.seed, args.count, profile, threads=args.threads)
    if args.json:
        _write(_dump(summary.to_json()), args.output)
    else:
        _write(summary.format() + "\n", args.output)
    if summary.failed:
        Path(args.certificates).write_text(_dump(summary.counterexamples), encoding="utf-8")
        sys.stderr.write(f"{summary.failed} failed checks; certificates written to {args.certificates}\n")
        return EXIT_FAIL
    return EXIT_OK


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="ringlat", description="Pointwise minimal ring extensions and their lattices.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, seed=True):
        sp.add_argument("-o", "--output", help="write to this file instead of stdout")
        if seed:
            sp.add_argument("--seed", type=int, default=0)

    a = sub.add_parser("analyze", help="classification report for an extension JSON file")
    a.add_argument("input", help="extension JSON file, or - for stdin")
    a.add_argument("--no-lattice", action="store_true", help="skip lattice enumeration")
    a.add_argument("--sample-budget", type=int, default=DEFAULT_SAMPLE_BUDGET)
    a.add_argument("--scan-cap", type=int, default=DEFAULT_SCAN_CAP)
    a.add_argument("--timings", action="store_true", help="include wall-clock timings (not reproducible)")
    common(a)
    a.set_defaults(func=cmd_analyze)

    e = sub.add_parser("examples", help="emit a catalog instance as JSON")
    e.add_argument("name", nargs="?", help="e.g. ex2(m=2), split(4,2), ex5")
    e.add_argument("--list", action="store_true")
    common(e, seed=False)
    e.set_defaults(func=cmd_examples)

    la = sub.add_parser("lattice", help="Hasse diagram of [R, S] as DOT or JSON")
    la.add_argument("input")
    fmt = la.add_mutually_exclusive_group()
    fmt.add_argument("--dot", action="store_true", help="Graphviz output (default)")
    fmt.add_argument("--json", action="store_true")
    la.add_argument("--basis", action="store_true", help="label DOT nodes with their bases")
    la.add_argument("--scan-cap", type=int, default=DEFAULT_SCAN_CAP)
    la.add_argument("--node-cap", type=int, default=DEFAULT_NODE_CAP)
    common(la, seed=False)
    la.set_defaults(func=cmd_lattice)

    r = sub.add_parser("random", help="seeded random extensions")
    r.add_argument("--count", type=int, default=10)
    r.add_argument("--profile", default="default", help="default, small, wide or 'p=2,3;dim=5'")
    r.add_argument("--out", help="directory for one file per instance (default: JSON lines on stdout)")
    r.add_argument("--seed", type=int, default=0)
    r.set_defaults(func=cmd_random)

    v = sub.add_parser("verify", help="run the verification harness")
    v.add_argument("--count", type=int, default=100)
    v.add_argument("--profile", default="default")
    v.add_argument("--catalog", action="store_true", help="check catalog metadata instead of random instances")
    v.add_argument("--json", action="store_true")
    v.add_argument("--threads", type=int, default=None, help="worker processes (default RINGLAT_THREADS or 1)")
    v.add_argument("--sample-budget", type=int, default=DEFAULT_SAMPLE_BUDGET)
    v.add_argument("--certificates", default="ringlat-counterexamples.json")
    common(v)
    v.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (InputError, UnknownExample, ValueError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_INPUT
    except (ScanCapExceeded, NodeCapExceeded) as exc:
        sys.stderr.write(f"cap exceeded: {exc}\n")
        return EXIT_CAP


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
