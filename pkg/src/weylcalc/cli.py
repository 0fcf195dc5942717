"""Command-line entry point: ``weylcalc <command> ...``.

Commands
--------
hilbert      dimensions of a quotient algebra per degree
verify       run a named identity suite
cohomology   dimension and basis of the closed 1-forms
conjecture   degree-by-degree dimension comparison tables
cache        list, clear or summarize the on-disk degree cache

Exit codes: 0 success, 1 a verification failed, 2 usage error, 3 a size
cap was exceeded.
"""

from __future__ import annotations

import argparse
import logging
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import List, Optional, Sequence

from . import cache as _cache
from .calculus import algebra, h1
from .connections import (
    SUITES,
    UnknownIdentity,
    VerificationReport,
    check_conjecture,
    suite_instances,
    verify_identity,
    woronowicz_series,
)
from .ncalg import DEFAULT_CAP, CapExceeded, hilbert_dims
from .report import IdentityResult, Report
from .weyl import UnsupportedRootSystem, build_root_system

log = logging.getLogger("weylcalc")

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_CAP = 3

ALGEBRAS = ("quad", "quar", "woronowicz", "anticomm")
FORMATS = ("text", "json", "csv")


class UsageError(Exception):
    pass


def default_cache_dir() -> str:
    return _cache.default_dir() or os.path.join(os.path.expanduser("~"), ".cache", "weylcalc")


@dataclass
class RunConfig:
    type: Optional[str] = None
    rank: Optional[int] = None
    algebra: str = "quad"
    max_deg: int = 6
    cap: int = DEFAULT_CAP
    cache_dir: Optional[str] = None
    format: str = "text"
    jobs: int = 1

    def validate(self) -> None:
        if self.max_deg < 0:
            raise UsageError("--max-deg must be >= 0")
        if self.algebra not in ALGEBRAS:
            raise UsageError(f"unknown algebra {self.algebra!r}")
        if self.format not in FORMATS:
            raise UsageError(f"unknown format {self.format!r}")
        if self.jobs < 1:
            raise UsageError("--jobs must be >= 1")

    def root_system(self, default_type: Optional[str] = None):
        t = self.type or default_type
        if t is None:
            raise UsageError("--type is required")
        try:
            rs = build_root_system(t, self.rank)
        except UnsupportedRootSystem as exc:
            raise UsageError(str(exc)) from exc
        if self.cap < rs.ngens:
            raise UsageError(f"--cap {self.cap} is below the number of generators ({rs.ngens})")
        return rs


def _config(args: argparse.Namespace) -> RunConfig:
    cache_dir = None if getattr(args, "no_cache", False) else (args.cache_dir or default_cache_dir())
    cfg = RunConfig(
        type=getattr(args, "type", None),
        rank=getattr(args, "rank", None),
        algebra=getattr(args, "algebra", "quad"),
        max_deg=getattr(args, "max_deg", 6),
        cap=args.cap,
        cache_dir=cache_dir,
        format=args.format,
        jobs=getattr(args, "jobs", 1),
    )
    cfg.validate()
    return cfg


# -- commands -----------------------------------------------------------------


def cmd_hilbert(cfg: RunConfig) -> Report:
    rs = cfg.root_system()
    params = {"type": rs.type, "rank": rs.rank, "algebra": cfg.algebra, "max_deg": cfg.max_deg}
    degrees = list(range(cfg.max_deg + 1))
    if cfg.algebra == "woronowicz":
        helper = algebra(rs, "quar" if rs.type == "B" else "quad", cfg.cap, cfg.cache_dir)
        dims, notes = woronowicz_series(rs, cfg.max_deg, cfg.cap, helper)
        if notes:
            params["notes"] = notes
    else:
        try:
            h = algebra(rs, cfg.algebra, cfg.cap, cfg.cache_dir)
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
        dims = hilbert_dims(h, cfg.max_deg)
    return Report("hilbert", params, degrees, dims)


def _verify_one(job):
    name, params, cap, cache_dir = job
    return verify_identity(name, params, cap, cache_dir)


def cmd_verify(suite: str, cfg: RunConfig) -> Report:
    try:
        instances = suite_instances(suite, cfg.type, cfg.rank)
    except UnknownIdentity as exc:
        raise UsageError(exc.args[0]) from exc
    jobs = [(name, params, cfg.cap, cfg.cache_dir) for name, params in instances]
    if cfg.jobs > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=cfg.jobs) as pool:
            results: List[VerificationReport] = list(pool.map(_verify_one, jobs))
    else:
        results = [_verify_one(j) for j in jobs]
    for r in results:
        log.info("%s %s: %s (%.2fs)", r.name, r.params, r.status, r.seconds)
    params = {"suite": suite, "type": cfg.type, "rank": cfg.rank}
    identities = [IdentityResult(r.name, r.params, r.status, r.witness) for r in results]
    return Report("verify", params, identities=identities)


def cmd_cohomology(cfg: RunConfig) -> Report:
    rs = cfg.root_system()
    res = h1(rs, cfg.cap, cfg.cache_dir)
    labels = [r.label for r in rs.refl]
    basis = [{"element": b.pretty(labels)} for b in res.basis]
    return Report("cohomology", {"type": rs.type, "rank": rs.rank}, [1], [res.dimension], basis=basis)


def cmd_conjecture(which: str, cfg: RunConfig) -> Report:
    rs = cfg.root_system(default_type="B" if which == "2.2" else None)
    try:
        comp = check_conjecture(which, rs, cfg.max_deg, cfg.cap, cfg.cache_dir)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    params = dict(comp.params)
    params.update({"conjecture": which, "left": comp.left_label, "right": comp.right_label})
    if comp.notes:
        params["notes"] = comp.notes
    table = [
        {"degree": d, comp.left_label: a, comp.right_label: b, "agree": a == b}
        for d, a, b in zip(comp.degrees, comp.left, comp.right)
    ]
    dims = [[a, b] for a, b in zip(comp.left, comp.right)]
    return Report("conjecture", params, comp.degrees, dims, table=table)


def cmd_cache(action: str, cfg: RunConfig) -> Report:
    d = cfg.cache_dir or default_cache_dir()
    try:
        entries = _cache.list_entries(d)
        if action == "clear":
            removed = _cache.clear(d)
            return Report("cache", {"action": "clear", "dir": d, "removed": removed})
    except OSError as exc:
        raise OSError(f"{d}: {exc.strerror or exc}") from exc
    params = {"action": action, "dir": d, "entries": len(entries),
              "rows": sum(n for _, _, n in entries)}
    if action == "list":
        table = [{"file": name, "header": head, "rows": n} for name, head, n in entries]
        return Report("cache", params, table=table)
    return Report("cache", params)


# -- rendering -------------------------------------------------------------------


def render_text(rep: Report) -> str:
    if rep.command == "hilbert":
        return " ".join(str(n) for n in rep.dims) + "\n"
    if rep.command == "verify":
        lines = []
        for i in rep.identities:
            line = f"{i.status.upper():4s} {i.name} {i.params}"
            if i.witness:
                line += f"\n     witness: {i.witness}"
            lines.append(line)
        npass = sum(i.status == "pass" for i in rep.identities)
        lines.append(f"{npass}/{len(rep.identities)} passed")
        return "\n".join(lines) + "\n"
    if rep.command == "cohomology":
        lines = [f"dim H^1 = {rep.dims[0]}"]
        lines += [f"  {b['element']}" for b in rep.basis]
        return "\n".join(lines) + "\n"
    if rep.command == "conjecture":
        left, right = rep.params["left"], rep.params["right"]
        lines = [f"conjecture {rep.params['conjecture']}: {left} vs {right}",
                 f"{'degree':>6} {left:>12} {right:>12}  agree"]
        for row in rep.table:
            lines.append(f"{row['degree']:>6} {row[left]:>12} {row[right]:>12}  "
                         f"{'yes' if row['agree'] else 'NO'}")
        lines += [f"note: {n}" for n in rep.params.get("notes", [])]
        return "\n".join(lines) + "\n"
    if rep.command == "cache":
        p = rep.params
        if p["action"] == "clear":
            return f"removed {p['removed']} entries from {p['dir']}\n"
        lines = [f"{p['entries']} entries, {p['rows']} rows in {p['dir']}"]
        lines += [f"  {r['file']}  {r['header']}  rows={r['rows']}" for r in rep.table]
        return "\n".join(lines) + "\n"
    return rep.to_json()


def render(rep: Report, fmt: str) -> str:
    if fmt == "json":
        return rep.to_json()
    if fmt == "csv":
        return rep.to_csv()
    return render_text(rep)


# -- argument parsing ------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--cap", type=int, default=DEFAULT_CAP,
                        help="largest working matrix dimension (default 2**20)")
    common.add_argument("--cache-dir", default=None,
                        help=f"cache directory (default ${_cache.ENV_VAR} or ~/.cache/weylcalc)")
    common.add_argument("--no-cache", action="store_true", help="do not read or write the cache")
    common.add_argument("--format", choices=FORMATS, default="text")
    common.add_argument("--output", "-o", default=None, help="write the report here instead of stdout")
    common.add_argument("-v", "--verbose", action="store_true")

    system = argparse.ArgumentParser(add_help=False)
    system.add_argument("--type", help="root system type: A, B, D or G2")
    system.add_argument("--rank", type=int, help="rank (not needed for G2)")

    p = argparse.ArgumentParser(prog="weylcalc", description=__doc__.split("\n")[0])
    sub = p.add_subparsers(dest="command", required=True)

    hp = sub.add_parser("hilbert", parents=[common, system], help="Hilbert series of an algebra")
    hp.add_argument("--algebra", choices=ALGEBRAS, default="quad")
    hp.add_argument("--max-deg", type=int, default=6)

    vp = sub.add_parser("verify", parents=[common, system], help="run an identity suite")
    vp.add_argument("suite", help=f"one of: {', '.join(SUITES)}")
    vp.add_argument("--jobs", "-j", type=int, default=1, help="worker processes")

    sub.add_parser("cohomology", parents=[common, system], help="first cohomology H^1")

    cp = sub.add_parser("conjecture", parents=[common, system], help="dimension comparison table")
    cp.add_argument("which", choices=("2.1", "2.2", "5.1"))
    cp.add_argument("--max-deg", type=int, default=6)

    kp = sub.add_parser("cache", parents=[common], help="manage the degree cache")
    kp.add_argument("action", choices=("list", "clear", "stats"))
    return p


def run(argv: Optional[Sequence[str]] = None) -> tuple:
    """Parse and execute; returns (exit code, report or None)."""
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(message)s")
    cfg = _config(args)
    if args.command == "hilbert":
        rep = cmd_hilbert(cfg)
    elif args.command == "verify":
        rep = cmd_verify(args.suite, cfg)
    elif args.command == "cohomology":
        rep = cmd_cohomology(cfg)
    elif args.command == "conjecture":
        rep = cmd_conjecture(args.which, cfg)
    else:
        rep = cmd_cache(args.action, cfg)
    text = render(rep, cfg.format)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    code = EXIT_OK if rep.command != "verify" or rep.all_pass else EXIT_FAIL
    return code, rep


def main(argv: Optional[Sequence[str]] = None) -> int:
    try:
        code, _ = run(argv)
        return code
    except SystemExit as exc:
        return int(exc.code) if isinstance(exc.code, int) else EXIT_USAGE
    except UsageError as exc:
        print(f"weylcalc: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CapExceeded as exc:
        print(f"weylcalc: {exc}", file=sys.stderr)
        return EXIT_CAP
    except OSError as exc:
        print(f"weylcalc: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
