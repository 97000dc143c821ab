"""Command-line interface.

Subcommands: classify (one multiplicity, optional oracle cross-check),
sweep (exhaustive CSV with oracle agreement flags), grid (two-valued
families as ascii/csv/svg), resolve (Betti table with Euler check),
deleted (the five-edge arrangement), oracle (syzygy comparison alone).
Verdicts are data: a non-free result exits 0; only malformed input or an
internal failure is a nonzero exit.
"""
from __future__ import annotations

import argparse
import concurrent.futures
import json
import os
import sys
from itertools import product
from typing import Optional

from . import classifier, oracle, resolution
from .model import (
    AnnWitness,
    ClassificationResult,
    FreeVertexWitness,
    GeneralNonFree,
    LbPositive,
    Multiplicity,
    NoFreeStructure,
    OracleGap,
)

GRID_PATTERNS: dict[str, tuple[str, ...]] = {
    "star0": ("s", "r", "r", "r", "r", "r"),
    "adjacent-pair": ("s", "s", "r", "r", "r", "r"),
    "star-triangle": ("s", "s", "s", "r", "r", "r"),
    "perfect-matching": ("r", "r", "s", "s", "s", "r"),
    "triangle-pair": ("r", "r", "s", "s", "r", "r"),
}

CSV_HEADER = ("m01,m02,m03,m12,m13,m23,verdict,witness_kind,certificate_kind,"
              "exponents,oracle_verdict,agree")


def worker_count(requested: Optional[int] = None) -> int:
    cap = os.environ.get("MULTIBRAID_THREADS")
    limit = int(cap) if cap else (os.cpu_count() or 1)
    want = requested if requested is not None else limit
    return max(1, min(want, limit))


def _parse_m(text: str) -> Multiplicity:
    try:
        m = Multiplicity.parse(text)
    except (ValueError, TypeError) as exc:
        raise SystemExit(f"error: malformed multiplicity {text!r}: {exc}")
    if min(m.values) < 1:
        raise SystemExit("error: multiplicities must be >= 1")
    return m


def _witness_text(res: ClassificationResult) -> str:
    w = res.witness
    if isinstance(w, FreeVertexWitness):
        return f"free vertex {w.vertex}"
    if isinstance(w, AnnWitness):
        dec = w.decomposition
        return (f"additive presentation k={dec.k}, n={dec.n}, "
                f"signs={dec.graph.signs}, ordering={w.ordering}")
    return ""


def _certificate_text(res: ClassificationResult) -> str:
    c = res.certificate
    if isinstance(c, GeneralNonFree):
        return f"residue/parity criterion, case {c.case}"
    if isinstance(c, LbPositive):
        return f"syzygy-gap lower bound {c.value} > 0 at degree {c.degree}"
    if isinstance(c, NoFreeStructure):
        return "no free vertex and no free additive presentation"
    if isinstance(c, OracleGap):
        return f"oracle gap {c.gap} at degree {c.degree}"
    return ""


def _witness_kind(res: ClassificationResult) -> str:
    if isinstance(res.witness, FreeVertexWitness):
        return "free_vertex"
    if isinstance(res.witness, AnnWitness):
        return "ann"
    return ""


def _certificate_kind(res: ClassificationResult) -> str:
    c = res.certificate
    if isinstance(c, GeneralNonFree):
        return "general_non_free"
    if isinstance(c, LbPositive):
        return "lb_positive"
    if isinstance(c, NoFreeStructure):
        return "no_free_structure"
    if isinstance(c, OracleGap):
        return "oracle_gap"
    return ""


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_classify(args) -> int:
    m = _parse_m(args.m)
    res = classifier.classify(m)
    oracle_res = None
    if args.oracle:
        oracle_res = oracle.oracle_classify(m, max_degree=args.max_degree)
    if args.format == "json":
        payload = res.to_json()
        if oracle_res is not None:
            payload["oracle"] = oracle_res.to_json()
            payload["agree"] = res.free == oracle_res.free
        _emit(json.dumps(payload, indent=2) + "\n", args.out)
        return 0
    lines = [f"multiplicity {m}: {res.verdict.upper()}"]
    if res.free:
        lines.append(f"  witness: {_witness_text(res)}")
        if res.exponents:
            lines.append(f"  exponents: {res.exponents}")
        else:
            lines.append("  exponents: unavailable (free vertex only)")
    else:
        lines.append(f"  certificate: {_certificate_text(res)}")
    if oracle_res is not None:
        if oracle_res.free:
            lines.append("  oracle: FREE (no syzygy gap up to the degree bound)")
        else:
            lines.append(f"  oracle: NON-FREE ({_certificate_text(oracle_res)})")
        lines.append("  agreement: " + ("yes" if res.free == oracle_res.free else "NO"))
    _emit("\n".join(lines) + "\n", args.out)
    return 0


def _sweep_row(values: tuple[int, ...], oracle_max: int, max_degree,
               prescreen: bool) -> str:
    res = classifier.classify(values)
    cells = [str(v) for v in values]
    cells.append(res.verdict)
    cells.append(_witness_kind(res))
    cells.append(_certificate_kind(res))
    cells.append(" ".join(str(e) for e in res.exponents) if res.exponents else "")
    if oracle_max and max(values) <= oracle_max:
        ores = oracle.oracle_classify(values, max_degree=max_degree,
                                      prescreen=prescreen)
        cells.append(ores.verdict)
        cells.append("true" if ores.free == res.free else "false")
    else:
        cells.extend(("", ""))
    return ",".join(cells)


def cmd_sweep(args) -> int:
    if args.max < 1:
        raise SystemExit("error: --max must be >= 1")
    grid = list(product(range(1, args.max + 1), repeat=6))
    workers = worker_count(args.threads)
    if workers > 1:
        with concurrent.futures.ThreadPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(
                lambda v: _sweep_row(v, args.oracle_max, args.max_degree,
                                     args.prescreen),
                grid, chunksize=64,
            ))
    else:
        rows = [_sweep_row(v, args.oracle_max, args.max_degree, args.prescreen)
                for v in grid]
    _emit("\n".join([CSV_HEADER] + rows) + "\n", args.out)
    return 0


def _pattern_values(pattern: tuple[str, ...], r: int, s: int) -> tuple[int, ...]:
    return tuple(r if c == "r" else s for c in pattern)


def _parse_pattern(text: str) -> tuple[str, ...]:
    if text in GRID_PATTERNS:
        return GRID_PATTERNS[text]
    parts = tuple(p.strip() for p in text.split(","))
    if len(parts) == 6 and all(p in ("r", "s") for p in parts):
        return parts
    raise SystemExit(
        f"error: unknown pattern {text!r}; use one of {sorted(GRID_PATTERNS)} "
        "or a 6-vector over r,s such as s,r,r,r,r,r"
    )


def cmd_grid(args) -> int:
    if args.rmax < 1 or args.smax < 1:
        raise SystemExit("error: --rmax and --smax must be >= 1")
    pattern = _parse_pattern(args.pattern)
    cells = {}
    for s in range(1, args.smax + 1):
        for r in range(1, args.rmax + 1):
            cells[(r, s)] = classifier.classify(_pattern_values(pattern, r, s)).free
    if args.format == "csv":
        lines = ["r,s,m01,m02,m03,m12,m13,m23,verdict"]
        for s in range(1, args.smax + 1):
            for r in range(1, args.rmax + 1):
                vals = _pattern_values(pattern, r, s)
                verdict = "free" if cells[(r, s)] else "non-free"
                lines.append(",".join([str(r), str(s)] + [str(v) for v in vals] + [verdict]))
        _emit("\n".join(lines) + "\n", args.out)
    elif args.format == "svg":
        _emit(_grid_svg(cells, args.rmax, args.smax), args.out)
    else:
        lines = [f"pattern {','.join(pattern)}: o = free, x = non-free"]
        for s in range(args.smax, 0, -1):
            row = " ".join("o" if cells[(r, s)] else "x" for r in range(1, args.rmax + 1))
            lines.append(f"s={s:>3} | {row}")
        lines.append("        " + "-" * (2 * args.rmax))
        lines.append("  r =    " + " ".join(str(r % 10) for r in range(1, args.rmax + 1)))
        _emit("\n".join(lines) + "\n", args.out)
    return 0


def _grid_svg(cells: dict, rmax: int, smax: int) -> str:
    # hollow dot = free, solid dot = non-free
    step, margin, radius = 24, 30, 7
    width = margin * 2 + step * (rmax - 1)
    height = margin * 2 + step * (smax - 1)
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
    ]
    for (r, s), free in sorted(cells.items()):
        cx = margin + step * (r - 1)
        cy = margin + step * (smax - s)
        fill = "none" if free else "black"
        parts.append(
            f'<circle cx="{cx}" cy="{cy}" r="{radius}" fill="{fill}" '
            f'stroke="black" stroke-width="1.5"/>'
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def cmd_resolve(args) -> int:
    m = _parse_m(args.m)
    try:
        table = resolution.betti_table_free(m)
    except resolution.NotFreeError:
        raise SystemExit(f"error: {m} is not free")
    except resolution.TableUnavailableError:
        raise SystemExit(
            f"error: {m} is free through a free vertex only; table unavailable"
        )
    dmax = args.check_degree if args.check_degree is not None else 2 * max(m.values) + 4
    check = resolution.euler_hf_check(m, table, dmax)
    if args.format == "json":
        payload = table.to_json()
        payload["euler_check"] = {
            "ok": check.ok,
            "max_degree": dmax,
            "failed_degree": check.failed_degree,
        }
        _emit(json.dumps(payload, indent=2) + "\n", args.out)
        return 0
    status = "PASS" if check.ok else f"FAIL at degree {check.failed_degree}"
    _emit(
        f"multiplicity {m}\n{table.to_text()}\n\n"
        f"Euler characteristic check up to degree {dmax}: {status}\n",
        args.out,
    )
    return 0


def cmd_deleted(args) -> int:
    parts = [p for p in args.m.replace(",", " ").split() if p]
    if len(parts) != 5:
        raise SystemExit("error: the deleted arrangement takes five multiplicities a,b,c,d,e")
    vals = tuple(int(p) for p in parts)
    if min(vals) < 1:
        raise SystemExit("error: multiplicities must be >= 1")
    free = classifier.classify_deleted_a3(*vals)
    _emit(f"deleted arrangement {vals}: {'FREE' if free else 'NON-FREE'}\n", args.out)
    return 0


def cmd_oracle(args) -> int:
    m = _parse_m(args.m)
    res = oracle.oracle_classify(m, max_degree=args.max_degree,
                                 prescreen=args.prescreen)
    if args.format == "json":
        _emit(json.dumps(res.to_json(), indent=2) + "\n", args.out)
        return 0
    if res.free:
        bound = args.max_degree if args.max_degree is not None else oracle.default_degree_bound(m)
        _emit(f"multiplicity {m}: FREE (syzygies locally generated through degree {bound})\n",
              args.out)
    else:
        _emit(f"multiplicity {m}: NON-FREE ({_certificate_text(res)})\n", args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="multibraid",
        description="Freeness of multiplicities on the braid arrangement on K4",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="classify one multiplicity")
    p.add_argument("--m", required=True, help="six multiplicities a,b,c,d,e,f")
    p.add_argument("--oracle", action="store_true", help="cross-check with the syzygy oracle")
    p.add_argument("--max-degree", type=int, default=None)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("sweep", help="classify all multiplicities up to a bound (CSV)")
    p.add_argument("--max", type=int, required=True)
    p.add_argument("--oracle-max", type=int, default=0,
                   help="also run the oracle on rows with entries up to this bound")
    p.add_argument("--max-degree", type=int, default=None)
    p.add_argument("--prescreen", action="store_true",
                   help="enable the certified modular fast path (same results)")
    p.add_argument("--threads", type=int, default=None)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("grid", help="two-valued (r, s) family grid")
    p.add_argument("--pattern", required=True,
                   help=f"one of {sorted(GRID_PATTERNS)} or a 6-vector over r,s")
    p.add_argument("--rmax", type=int, default=12)
    p.add_argument("--smax", type=int, default=12)
    p.add_argument("--format", choices=("ascii", "csv", "svg"), default="ascii")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_grid)

    p = sub.add_parser("resolve", help="Betti table of a free multiplicity")
    p.add_argument("--m", required=True)
    p.add_argument("--check-degree", type=int, default=None)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_resolve)

    p = sub.add_parser("deleted", help="freeness on the deleted arrangement")
    p.add_argument("--m", required=True, help="five multiplicities a,b,c,d,e")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_deleted)

    p = sub.add_parser("oracle", help="syzygy-comparison verdict alone")
    p.add_argument("--m", required=True)
    p.add_argument("--max-degree", type=int, default=None)
    p.add_argument("--prescreen", action="store_true",
                   help="enable the certified modular fast path (same results)")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_oracle)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
