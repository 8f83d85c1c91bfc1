"""Command-line entry point: `qcpn <command> [options]` or `python -m qcpn`.

Exit status: 0 when every check passes or a table was written, 1 when a
check fails, 2 on bad input, 3 when a check stays undecided (degree bound
reached).  Reports go to stdout or --out; progress goes to stderr.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass
from fractions import Fraction

from . import suites

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_UNDECIDED = 0, 1, 2, 3


@dataclass
class RunConfig:
    n: int = 3
    k: int | None = None
    lmax: int = 5
    q: str | None = None
    format: str = "json"
    degree_bound: int | None = None
    overrides: str | None = None
    out: str | None = None
    timing: bool = False

    def validate(self, numeric: bool = False):
        if self.n < 2:
            raise ValueError("--n must be at least 2")
        if self.q is not None:
            q0 = Fraction(self.q)
            if numeric and q0 in (-1, 0, 1):
                raise ValueError("--q must avoid -1, 0 and 1 for numeric verdicts")


def _dump_json(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True, default=str) + "\n"


def _rows_text(rows) -> str:
    return "".join(f"{r['status'].upper():9} {r['suite']}: {r['item']}  [{r['paper_ref']}]\n" for r in rows)


def _rows_csv(rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    cols = ["suite", "item", "paper_ref", "status", "witness", "elapsed_ms"]
    w.writerow(cols)
    for r in rows:
        w.writerow([json.dumps(r[c], sort_keys=True, default=str) if c == "witness" else r[c] for c in cols])
    return buf.getvalue()


def _emit(text: str, cfg: RunConfig):
    if cfg.out:
        with open(cfg.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _config(ns) -> RunConfig:
    return RunConfig(**{k: getattr(ns, k) for k in RunConfig.__dataclass_fields__ if hasattr(ns, k)})


# --- commands ------------------------------------------------------------------

def cmd_verify(ns) -> int:
    cfg = _config(ns)
    cfg.validate(numeric=ns.suite == "solidity")
    opts = {"k": cfg.k, "degree_bound": cfg.degree_bound}
    if ns.suite == "solidity" and cfg.q is not None:
        opts["q"] = cfg.q
    if ns.suite == "gelfand":
        opts["lmax"] = cfg.lmax
    rows = suites.run_suite(ns.suite, cfg.n, timing=cfg.timing, quiet=False, **opts)
    fmt = {"json": _dump_json, "text": _rows_text, "csv": _rows_csv}[cfg.format]
    _emit(fmt(rows), cfg)
    return suites.exit_status(rows)


def cmd_branch(ns) -> int:
    from .representations import Partition, branch, branch_table_json
    cfg = _config(ns)
    cfg.validate()
    mu = Partition(tuple(int(x) for x in ns.partition.split(",") if x.strip()))
    if cfg.format == "json":
        _emit(branch_table_json(mu, cfg.n) + "\n", cfg)
    else:
        table = json.loads(branch_table_json(mu, cfg.n))["summands"]
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n", delimiter="," if cfg.format == "csv" else "\t")
        w.writerow(["nubar", "m", "dim"])
        for s in table:
            w.writerow([s["nubar"], s["m"], s["dim"]])
        _emit(buf.getvalue(), cfg)
    return EXIT_OK


def cmd_dims(ns) -> int:
    from . import qext
    cfg = _config(ns)
    cfg.validate()
    print(f"[dims] deriving exterior relations for n={cfg.n} ...", file=sys.stderr, flush=True)
    rep = qext.dims_report(cfg.n)
    if cfg.format == "json":
        _emit(_dump_json(rep), cfg)
    else:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n", delimiter="," if cfg.format == "csv" else "\t")
        w.writerow(["k", "dim", "expected"])
        for k, v in sorted(rep["degree"].items(), key=lambda t: int(t[0])):
            w.writerow([k, v["dim"], v["expected"]])
        _emit(buf.getvalue(), cfg)
    ok = rep["confluent"] and all(v["dim"] == v["expected"] for v in rep["degree"].values())
    return EXIT_OK if ok else EXIT_FAIL


def cmd_ladder(ns) -> int:
    from .calculus import ladder
    cfg = _config(ns)
    cfg.validate()
    print(f"[ladder] n={cfg.n} ...", file=sys.stderr, flush=True)
    lad = ladder(cfg.n, degree_bound=cfg.degree_bound)
    d = lad.to_dict()
    if cfg.format == "json":
        _emit(_dump_json(d), cfg)
    else:
        _emit("".join(f"{k}: {json.dumps(v, sort_keys=True)}\n" for k, v in d.items()), cfg)
    undecided = any("undecided" in a.as_tuple() for a in lad.A_status)
    return EXIT_UNDECIDED if undecided else EXIT_OK


def cmd_spectrum(ns) -> int:
    from . import spectrum
    cfg = _config(ns)
    cfg.validate(numeric=cfg.q is not None)
    overrides = None
    if cfg.overrides:
        with open(cfg.overrides) as fh:
            overrides = json.load(fh)
    table = spectrum.assemble_spectrum(cfg.n, cfg.q, cfg.lmax, overrides)
    if ns.dirac:
        table = spectrum.dirac_spectrum(table)
    if cfg.format == "json":
        _emit(table.to_json() + "\n", cfg)
    elif cfg.format == "csv":
        _emit(table.to_csv(), cfg)
    else:
        _emit(table.to_csv().replace(",", "\t"), cfg)
    return EXIT_OK


# --- parser --------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="qcpn", description="Dolbeault-Dirac spectra on quantum projective space")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, fmt_default="json"):
        sp.add_argument("--n", type=int, default=3, help="rank: the space is CP^{n-1}")
        sp.add_argument("--format", choices=["json", "csv", "text"], default=fmt_default)
        sp.add_argument("--out", help="write the report here instead of stdout")

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("suite", choices=sorted(suites.SUITES))
    common(v)
    v.add_argument("--k", type=int)
    v.add_argument("--lmax", type=int, default=50)
    v.add_argument("--q", help="exact rational, e.g. 11/10")
    v.add_argument("--degree-bound", type=int, dest="degree_bound")
    v.add_argument("--timing", action="store_true", help="fill elapsed_ms (output no longer reproducible)")
    v.set_defaults(func=cmd_verify)

    b = sub.add_parser("branch", help="branching table of an sl_n module to the Levi factor")
    b.add_argument("--partition", required=True, help="comma-separated parts, e.g. 3,2")
    common(b)
    b.set_defaults(func=cmd_branch)

    d = sub.add_parser("dims", help="dimensions of the exterior algebra")
    common(d, "csv")
    d.set_defaults(func=cmd_dims)

    lad = sub.add_parser("ladder", help="ladder data (z, Theta, lambda, B, A status)")
    common(lad)
    lad.add_argument("--degree-bound", type=int, dest="degree_bound")
    lad.set_defaults(func=cmd_ladder)

    s = sub.add_parser("spectrum", help="Laplacian or Dirac spectrum table")
    common(s, "csv")
    s.add_argument("--lmax", type=int, default=5)
    s.add_argument("--q", help="exact rational; needs --overrides")
    s.add_argument("--overrides", help='JSON file {"A": [...], "mu": [...]} (illustrative inputs, not derived values)')
    s.add_argument("--dirac", action="store_true", help="emit the signed Dirac spectrum")
    s.set_defaults(func=cmd_spectrum)
    return p


def main(argv=None) -> int:
    ns = build_parser().parse_args(argv)
    try:
        return ns.func(ns)
    except (ValueError, OSError) as exc:
        sys.stdout.write(_dump_json({"command": ns.command, "status": "error", "error": str(exc)}))
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
