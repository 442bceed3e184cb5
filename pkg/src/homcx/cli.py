"""``homcx`` command line: decompose, homology, cocycles, verify, irig, rep.

Every command builds a :class:`Report` and prints it as JSON, CSV or text.
Reports are deterministic for a fixed configuration; wall-clock timings are
only added with ``--timing``.  Exit codes: 0 success, 1 verification
failure, 2 budget exceeded, 3 configuration error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
import time
from dataclasses import dataclass, field

import numpy as np

from . import __version__
from .cosimplicial import (
    Auto,
    CosimplicialGroup,
    Symbolic,
    check_homomorphism,
    cocycle_check,
    default_catalog,
    parse_family,
    parse_level_word,
    verify_cosimplicial_identities,
)
from .errors import BudgetExceeded, ConfigError, HomcxError, VerificationError
from .groups import FiniteGroup, catalog_group
from .homology import homology, homology_report, normalized_complex
from .homsets import DEFAULT_BUDGET
from .homspace import (
    build_space,
    check_equivariance,
    check_filtration,
    conjugation_orbits,
    filtration,
    pushout_check,
    verify_simplicial_identities,
    wedge_applies,
    wedge_check,
)
from .irig import bipermutative_check, coherence_check, random_instance, tau_formula_table
from .wordproblem import Verdict

REPORT_VERSION = 1

EXIT_OK, EXIT_VERIFY, EXIT_BUDGET, EXIT_CONFIG = 0, 1, 2, 3


@dataclass
class Report:
    command: str
    config: dict
    checks: list[dict] = field(default_factory=list)
    tables: dict[str, list[dict]] = field(default_factory=dict)
    results: dict = field(default_factory=dict)
    hashes: dict = field(default_factory=dict)
    notes: list[str] = field(default_factory=list)
    timing: dict[str, float] | None = None

    def check(self, name: str, status: str, detail=None) -> None:
        entry = {"name": name, "status": status}
        if detail is not None:
            entry["detail"] = detail
        self.checks.append(entry)

    @property
    def failed(self) -> bool:
        return any(c["status"] == "fail" for c in self.checks)

    def to_json(self) -> dict:
        out = {
            "version": REPORT_VERSION,
            "command": self.command,
            "config": self.config,
            "checks": self.checks,
            "tables": self.tables,
            "results": self.results,
            "hashes": self.hashes,
            "notes": self.notes,
        }
        if self.timing is not None:
            out["timing"] = self.timing
        return out


class _Clock:
    """Accumulates named phase durations; inert unless enabled."""

    def __init__(self, enabled: bool):
        self.enabled = enabled
        self.phases: dict[str, float] = {}

    def __call__(self, name: str):
        clock = self

        class _Phase:
            def __enter__(self):
                self.start = time.perf_counter()

            def __exit__(self, *exc):
                clock.phases[name] = clock.phases.get(name, 0.0) + time.perf_counter() - self.start

        return _Phase()


# ---------------------------------------------------------------- config helpers

def _group(args) -> FiniteGroup:
    if not args.group:
        raise ConfigError(f"{args.command} needs --group")
    return catalog_group(args.group)


def _mode(args):
    orders = getattr(args, "pointwise_orders", None)
    if orders is None:
        return None
    if orders < 1:
        raise ConfigError("--pointwise-orders must be positive")
    return Auto(default_catalog(orders), args.budget)


def _family(args) -> CosimplicialGroup:
    mode = _mode(args)
    return parse_family(args.family, mode)


def _config(args, keys) -> dict:
    return {k: getattr(args, k) for k in keys}


def _level_hashes(space) -> dict:
    return {
        "group": space.group.fingerprint,
        "presentations": [hs.presentation.fingerprint() for hs in space.levels],
    }


def _require_level(value: int, name: str, low: int = 0):
    if value < low:
        raise ConfigError(f"--{name} must be >= {low}")


# ---------------------------------------------------------------- commands

def cmd_decompose(args, clock) -> Report:
    """Strata, wedge bijections and conjugation orbits of Hom(L_*, G)."""
    _require_level(args.n, "n")
    G, L = _group(args), _family(args)
    report = Report("decompose", _config(args, ["group", "family", "n", "budget"]))
    with clock("build"):
        space = build_space(L, G, args.n, budget=args.budget, cache_dir=args.cache_dir, check=False)
    report.hashes = _level_hashes(space)
    with clock("checks"):
        report.check("simplicial identities", "pass", {"checked": verify_simplicial_identities(space)})
        check_filtration(space)
        report.check("filtration partition", "pass")
        rows = []
        for n in range(space.n_max + 1):
            tier = filtration(space, n)
            for t, (stratum, total) in enumerate(zip(tier.strata(), tier.filtration_sizes())):
                rows.append({"n": n, "t": t, "stratum": stratum, "filtration": total, "size": len(space.levels[n])})
        report.tables["strata"] = rows
        if wedge_applies(L):
            wedges = [wedge_check(space, n, t).to_json() for n in range(1, space.n_max + 1) for t in range(n + 1)]
            report.tables["wedge"] = wedges
            bad = [w for w in wedges if w["stratum"] != w["C(n,t)"] * w["identity_free"]]
            report.check("wedge bijection", "fail" if bad else "pass", {"checked": len(wedges)})
        else:
            report.check("wedge bijection", "skipped", f"not implemented for {L.descriptor}")
        maps = check_equivariance(space)
        report.check("conjugation equivariance", "pass")
        orbits = [conjugation_orbits(space, n, maps).to_json() for n in range(space.n_max + 1)]
        report.tables["orbits"] = orbits
        report.check("burnside orbit count", "pass", {"levels": len(orbits)})
    report.results = {"sizes": space.sizes(), "orbits": [o["orbits"] for o in orbits]}
    return report


def cmd_rep(args, clock) -> Report:
    """Rep(L_n, G) = Hom(L_n, G)/G with its strata."""
    _require_level(args.n, "n")
    G, L = _group(args), _family(args)
    report = Report("rep", _config(args, ["group", "family", "n", "budget"]))
    with clock("build"):
        space = build_space(L, G, args.n, budget=args.budget, cache_dir=args.cache_dir)
    report.hashes = _level_hashes(space)
    with clock("orbits"):
        maps = check_equivariance(space)
        orbits = [conjugation_orbits(space, n, maps) for n in range(space.n_max + 1)]
    report.check("conjugation equivariance", "pass")
    for o in orbits:
        if sum(o.tier_counts) != len(o):
            report.check(f"orbit strata partition level {o.level}", "fail", o.to_json())
    report.check("burnside orbit count", "pass", {"levels": len(orbits)})
    report.tables["orbits"] = [{**o.to_json(), "hom": len(space.levels[o.level])} for o in orbits]
    report.results = {"rep": [len(o) for o in orbits], "hom": space.sizes()}
    return report


def cmd_homology(args, clock) -> Report:
    """Integral homology of B(L, G) through max_dim - 1."""
    _require_level(args.max_dim, "max-dim", 1)
    G, L = _group(args), _family(args)
    report = Report("homology", _config(args, ["group", "family", "max_dim", "budget"]))
    with clock("build"):
        space = build_space(L, G, args.max_dim, budget=args.budget, cache_dir=args.cache_dir)
    report.hashes = _level_hashes(space)
    with clock("complex"):
        cc = normalized_complex(space, args.max_dim)
    report.check("boundary squares to zero", "pass")
    with clock("smith"):
        groups = homology(cc)
    report.results = homology_report(cc, groups)
    report.tables["homology"] = [{"dim": k, "group": str(g)} for k, g in enumerate(groups)]
    report.tables["chains"] = [{"dim": k, "rank": cc.rank(k)} for k in range(cc.max_dim + 1)]
    report.notes.append(f"reliable range: H_0..H_{args.max_dim - 1}; H_{args.max_dim} needs level {args.max_dim + 1} and is omitted")
    return report


def cmd_cocycles(args, clock) -> Report:
    """Cocycle checks for e and a_1^m, |m| <= exponent bound, plus explicit --word values."""
    _require_level(args.exponent_bound, "exponent-bound")
    mode = _mode(args) or Symbolic()
    L = _family(args)
    names = L.level(1).names
    report = Report("cocycles", _config(args, ["family", "exponent_bound", "word", "pointwise_orders"]))
    candidates = [parse_level_word(L, f"{names[0]}^{m}") for m in sorted(range(-args.exponent_bound, args.exponent_bound + 1), key=lambda m: (abs(m), m < 0))]
    candidates += [parse_level_word(L, w) for w in args.word or []]
    rows, found = [], []
    with clock("scan"):
        for w in candidates:
            res = cocycle_check(L, w, mode)
            text = w.format(names)
            row = {"word": text, "status": res.status, "mode": res.mode}
            if res.witness:
                row["witness"] = res.witness
            rows.append(row)
            if res:
                found.append(text)
    report.tables["cocycles"] = rows
    report.results = {"cocycles": found}
    report.hashes = {"level1": L.level(1).fingerprint(), "level2": L.level(2).fingerprint()}
    report.notes.append("Z^1 membership is tested on the listed candidates only; completeness is not verified")
    for w in args.word or []:
        row = next(r for r in rows if r["word"] == parse_level_word(L, w).format(names))
        report.check(f"cocycle {row['word']}", {"Verified": "pass", "Refuted": "fail"}.get(row["status"], "undecidable"))
    return report


def cmd_verify(args, clock) -> Report:
    """Cosimplicial identities, optional homomorphism, simplicial and pushout checks."""
    L = _family(args)
    top = args.n if L.truncation is None else min(args.n, L.truncation)
    _require_level(top, "n")
    report = Report("verify", _config(args, ["family", "n", "pointwise_orders", "group", "cocycle", "check_maps", "budget"]))
    with clock("symbolic"):
        sym = verify_cosimplicial_identities(L, top, Symbolic(), strict=False)
    report.tables["symbolic"] = [sym.to_json()]
    if sym.undecidable:
        report.notes.append(f"symbolic mode cannot decide {len(sym.undecidable)} identities: " + "; ".join(sym.undecidable))
    mode = _mode(args)
    if mode is not None:
        with clock("pointwise"):
            auto = verify_cosimplicial_identities(L, top, mode, strict=False)
        report.tables["auto"] = [auto.to_json()]
        final = auto
    else:
        final = sym
    report.check("cosimplicial identities", "pass" if final.passed else "undecidable", {"checked": final.checked, "undecidable": len(final.undecidable)})
    if args.check_maps:
        judge_mode = mode or Symbolic()
        undecided = []
        with clock("maps"):
            maps = [(f"d^{i} into level {n}", L.coface(n, i)) for n in range(1, top + 1) for i in range(n + 1)]
            maps += [(f"s^{i} onto level {n}", L.codegeneracy(n, i)) for n in range(top) for i in range(n + 1)]
            for label, f in maps:
                out = check_homomorphism(f, judge_mode)
                if out.verdict is Verdict.NOT_EQUAL:
                    report.check(f"homomorphism {label}", "fail", out.witness)
                elif out.verdict is Verdict.UNDECIDABLE:
                    undecided.append(label)
        if not any(c["name"].startswith("homomorphism") for c in report.checks):
            report.check("structure maps are homomorphisms", "undecidable" if undecided else "pass", {"undecidable": undecided})
    if args.group:
        G = _group(args)
        n_space = min(top, args.space_n)
        with clock("space"):
            space = build_space(L, G, n_space, budget=args.budget, cache_dir=args.cache_dir, check=False)
            report.check("simplicial identities", "pass", {"group": G.name, "checked": verify_simplicial_identities(space)})
            check_equivariance(space)
            report.check("conjugation equivariance", "pass", {"group": G.name})
        report.hashes = _level_hashes(space)
        if args.cocycle:
            b = parse_level_word(L, args.cocycle)
            with clock("pushout"):
                push = pushout_check(L, b, G, n_space, mode or Auto(default_catalog(), args.budget), budget=args.budget)
            report.tables["pushout"] = push.levels
            report.check("pushout square", "pass", {"cocycle": push.cocycle})
    elif args.cocycle:
        raise ConfigError("--cocycle needs --group")
    return report


def cmd_irig(args, clock) -> Report:
    """Permutation formulas and bipermutative diagrams on random integer matrices."""
    _require_level(args.max_size, "max-size", 1)
    report = Report("irig", _config(args, ["max_size", "instances", "seed"]))
    with clock("formulas"):
        table = tau_formula_table(args.max_size)
    for name, ok in sorted(table.items()):
        report.check(name, "pass" if ok else "fail")
    rng = np.random.default_rng(args.seed)
    passed = 0
    with clock("diagrams"):
        for _ in range(args.instances):
            a, b, a2, b2 = random_instance(rng, args.max_size)
            bipermutative_check(a, b, a2, b2)
            k = a.shape[0] + int(rng.integers(0, args.max_size + 1))
            tail = rng.permutation(np.arange(a.shape[0] + 1, k + 1)).tolist()
            head = tuple(int(x) for x in rng.permutation(np.arange(1, a.shape[0] + 1)))
            # σ and σ' fix the first m points as a block and differ on the padding
            sigma = head + tuple(int(x) for x in tail)
            sigma2 = head + tuple(sorted(int(x) for x in tail))
            if not coherence_check(a, k, sigma, sigma2):
                report.check("coherence", "fail", {"sigma": sigma, "sigma2": sigma2})
            passed += 1
    report.check("bipermutative diagrams", "pass", {"instances": passed})
    report.results = {"instances": passed, "formulas": table}
    return report


COMMANDS = {
    "decompose": cmd_decompose,
    "homology": cmd_homology,
    "cocycles": cmd_cocycles,
    "verify": cmd_verify,
    "irig": cmd_irig,
    "rep": cmd_rep,
}


# ---------------------------------------------------------------- rendering

def render(report: Report, fmt: str) -> str:
    data = report.to_json()
    if fmt == "json":
        return json.dumps(data, indent=2, sort_keys=True) + "\n"
    if fmt == "csv":
        return _render_csv(data)
    return _render_text(data)


def _cell(value) -> str:
    if isinstance(value, (dict, list)):
        return json.dumps(value, sort_keys=True)
    return str(value)


def _render_csv(data: dict) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    tables = {"checks": data["checks"], **data["tables"]}
    if "timing" in data:
        tables["timing"] = [{"phase": k, "seconds": v} for k, v in data["timing"].items()]
    for name, rows in tables.items():
        writer.writerow([f"# {name}"])
        columns = sorted({k for r in rows for k in r})
        writer.writerow(columns)
        for r in rows:
            writer.writerow([_cell(r.get(c, "")) for c in columns])
    return buf.getvalue()


def _render_text(data: dict) -> str:
    lines = [f"homcx {data['command']} (report version {data['version']})"]
    lines += [f"  {k}: {v}" for k, v in data["config"].items()]
    lines.append("checks:")
    for c in data["checks"]:
        detail = f"  {_cell(c['detail'])}" if "detail" in c else ""
        lines.append(f"  [{c['status']}] {c['name']}{detail}")
    for name, rows in data["tables"].items():
        lines.append(f"{name}:")
        columns = sorted({k for r in rows for k in r})
        cells = [[_cell(r.get(c, "")) for c in columns] for r in rows]
        widths = [max([len(c)] + [len(row[i]) for row in cells]) for i, c in enumerate(columns)]
        lines.append("  " + "  ".join(c.rjust(w) for c, w in zip(columns, widths)))
        lines += ["  " + "  ".join(x.rjust(w) for x, w in zip(row, widths)) for row in cells]
    if data["results"]:
        lines.append("results:")
        lines += [f"  {k}: {_cell(v)}" for k, v in data["results"].items()]
    lines += [f"note: {n}" for n in data["notes"]]
    if "timing" in data:
        lines += [f"time {k}: {v:.3f}s" for k, v in data["timing"].items()]
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------- parser

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        # usage errors are configuration errors, not argparse's default 2 (budget)
        self.print_usage(sys.stderr)
        self.exit(EXIT_CONFIG, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    shared = _Parser(add_help=False)
    shared.add_argument("--group", help="catalog descriptor (cyclic:n, sym:n, alt:n, dihedral:2n, quaternion:8) or JSON file")
    shared.add_argument("--family", default="free", help="free | freebar | gamma:q | derived:q | sigma23[:involutive] | lb:<family>:<word>")
    shared.add_argument("--n", type=int, default=3, help="top simplicial level")
    shared.add_argument("--max-dim", type=int, default=3)
    shared.add_argument("--exponent-bound", type=int, default=5)
    shared.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="bound on |G|^n per enumerated level")
    shared.add_argument("--format", choices=("json", "csv", "text"), default="text")
    shared.add_argument("--cache-dir", default=os.environ.get("HOMCX_CACHE"), help="enumeration cache (default $HOMCX_CACHE)")
    shared.add_argument("--timing", action="store_true", help="add wall-clock phase timings to the report")
    shared.add_argument("--pointwise-orders", type=int, default=None, help="decide what symbolic mode cannot over catalog groups of order <= K")

    parser = _Parser(prog="homcx", description="Exact computations with cosimplicial groups and their Hom spaces.")
    parser.add_argument("--version", action="version", version=f"homcx {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name, fn in COMMANDS.items():
        p = sub.add_parser(name, parents=[shared], help=fn.__doc__.splitlines()[0])
        if name == "cocycles":
            p.add_argument("--word", action="append", help="extra candidate cocycle in level-1 generator names (repeatable)")
        if name == "verify":
            p.add_argument("--cocycle", help="with --group: run the pushout check for this cocycle")
            p.add_argument("--check-maps", action="store_true", help="also check that cofaces and codegeneracies are homomorphisms")
            p.add_argument("--space-n", type=int, default=3, help="top level of the Hom space built with --group")
        if name == "irig":
            p.add_argument("--max-size", type=int, default=5)
            p.add_argument("--instances", type=int, default=100)
            p.add_argument("--seed", type=int, default=0)
    return parser


def run(argv=None) -> tuple[int, str]:
    """Parse, execute and render; returns (exit code, stdout text)."""
    args = build_parser().parse_args(argv)
    clock = _Clock(args.timing)
    report = COMMANDS[args.command](args, clock)
    if args.timing:
        report.timing = {k: round(v, 6) for k, v in sorted(clock.phases.items())}
    return (EXIT_VERIFY if report.failed else EXIT_OK), render(report, args.format)


def main(argv=None) -> int:
    try:
        code, text = run(argv)
    except VerificationError as exc:
        _fail(exc, "verification failure")
        return EXIT_VERIFY
    except BudgetExceeded as exc:
        _fail(exc, "budget exceeded")
        return EXIT_BUDGET
    except ConfigError as exc:
        _fail(exc, "configuration error")
        return EXIT_CONFIG
    except HomcxError as exc:
        _fail(exc, "error")
        return EXIT_VERIFY
    sys.stdout.write(text)
    return code


def _fail(exc: Exception, kind: str) -> None:
    print(f"homcx: {kind}: {exc}", file=sys.stderr)
    witness = getattr(exc, "witness", None)
    if witness:
        print(json.dumps({"witness": witness}, sort_keys=True, default=str), file=sys.stderr)


if __name__ == "__main__":
    sys.exit(main())
