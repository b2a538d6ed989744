"""Command-line front end.

Exit codes: 0 success, 1 usage error, 2 verification failure, 3 cross-check
mismatch.
"""

from __future__ import annotations

import argparse
import json
import logging
import math
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Callable, Dict, Iterable, List, Optional, Sequence

from . import bounds
from .enumerator import enumerate_solutions, exists
from .model import Params, SolutionGrid, canonical_key, verify
from .numtheory import alpha_cap, is_prime
from .oracle import brute_enumerate

EXIT_OK, EXIT_USAGE, EXIT_VERIFY, EXIT_MISMATCH = 0, 1, 2, 3


class UsageError(Exception):
    pass


# -- serialization -----------------------------------------------------------

def grid_to_record(grid: SolutionGrid) -> dict:
    prm = grid.params
    return {
        "p": prm.p,
        "q": prm.q,
        "n": prm.n,
        "alpha_p": prm.alpha_p,
        "alpha_q": grid.alpha_q,
        "kind": grid.kind,
        "height": grid.height,
        "rows": [list(r) for r in grid.rows],
    }


def grid_from_record(rec: dict) -> SolutionGrid:
    try:
        prm = Params(int(rec["p"]), int(rec["q"]), int(rec["n"]), int(rec["alpha_p"]))
        rows = tuple(tuple(int(k) for k in r) for r in rec["rows"])
    except (KeyError, TypeError) as exc:
        raise UsageError(f"malformed solution record: {exc}") from exc
    return SolutionGrid(rows, prm)


def render_tableau(grid: SolutionGrid) -> str:
    """Rows top-first, entries space-separated."""
    return "\n".join(" ".join(str(k) for k in r) for r in reversed(grid.rows))


def load_grids(path: str) -> List[SolutionGrid]:
    data = json.loads(Path(path).read_text(encoding="utf-8"))
    records = data if isinstance(data, list) else [data]
    return [grid_from_record(r) for r in records]


# -- scans -------------------------------------------------------------------

@dataclass
class ScanRecord:
    q: int
    exists: bool
    count: Optional[int]
    bound_status: str
    verdicts: Dict[str, object] = field(default_factory=dict)


@dataclass
class ScanReport:
    p: int
    alpha: int
    n: int
    q_best: int
    records: List[ScanRecord] = field(default_factory=list)
    gaps: List[int] = field(default_factory=list)

    def present(self) -> List[int]:
        return [r.q for r in self.records if r.exists]


def _scan_one(args) -> ScanRecord:
    p, alpha, n, q, with_counts, q_best = args
    prm = Params(p, q, n, alpha)
    found = exists(prm)
    cnt = len(enumerate_solutions(prm)) if with_counts and found else (0 if with_counts else None)
    notes = bounds.bounds_report(p, alpha, n, q).notes
    verdicts = {k: v for k, v in notes.items() if k != "q_within_best"}
    status = "below" if q <= q_best else "above"
    return ScanRecord(q, found, cnt, status, verdicts)


def scan_q(p: int, alpha: int, n: int, primes_only: bool = False,
           with_counts: bool = False, jobs: int = 1) -> ScanReport:
    """Existence for every q coprime to p up to the best q bound; flags gaps."""
    q_best = bounds.q_bound_best(p, alpha, n)
    cands = [
        q for q in range(2, q_best + 1)
        if math.gcd(p, q) == 1 and (not primes_only or is_prime(q))
    ]
    tasks = [(p, alpha, n, q, with_counts, q_best) for q in cands]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            records = list(pool.map(_scan_one, tasks))
    else:
        records = [_scan_one(t) for t in tasks]
    rep = ScanReport(p, alpha, n, q_best, records)
    present = rep.present()
    if present:
        lo, hi = min(present), max(present)
        rep.gaps = [r.q for r in records if not r.exists and lo < r.q < hi]
    return rep


# -- cross-check -------------------------------------------------------------

@dataclass
class CrossCheckSummary:
    instances: int = 0
    solutions: int = 0
    mismatches: int = 0
    counterexample: Optional[dict] = None

    @property
    def passed(self) -> bool:
        return self.mismatches == 0


def _instances(ps, qs, ns, alphas) -> Iterable[Params]:
    for p in ps:
        for q in qs:
            if q == p or math.gcd(p, q) != 1 or not is_prime(p):
                continue
            for n in ns:
                if n < 2:
                    continue
                cap = alpha_cap(p, n)
                for a in alphas:
                    if 1 <= a <= cap:
                        yield Params(p, q, n, a)


def cross_check(
    ps: Sequence[int],
    qs: Sequence[int],
    ns: Sequence[int],
    alphas: Sequence[int],
    enumerate_fn: Callable[[Params], List[SolutionGrid]] = enumerate_solutions,
    oracle_fn: Callable[[Params], List[SolutionGrid]] = brute_enumerate,
) -> CrossCheckSummary:
    """Compare the table search with the brute-force oracle on every instance."""
    out = CrossCheckSummary()
    for prm in _instances(ps, qs, ns, alphas):
        got = {canonical_key(g) for g in enumerate_fn(prm)}
        want = {canonical_key(g) for g in oracle_fn(prm)}
        out.instances += 1
        out.solutions += len(want)
        if got != want:
            out.mismatches += 1
            if out.counterexample is None:
                out.counterexample = {
                    "params": asdict(prm),
                    "missing": [list(map(list, k)) for k in sorted(want - got)],
                    "extra": [list(map(list, k)) for k in sorted(got - want)],
                }
    return out


# -- argument handling -------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _int_list(text: str) -> List[int]:
    """``"2,3,5"`` or ``"2-8"`` or a mix like ``"2,4-6"``; empty string is empty."""
    out: List[int] = []
    for part in filter(None, (t.strip() for t in text.split(","))):
        if "-" in part:
            a, b = part.split("-", 1)
            out.extend(range(int(a), int(b) + 1))
        else:
            out.append(int(part))
    return out


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--p", type=int, help="first base (prime)")
    common.add_argument("--q", type=int, help="second base, coprime to p")
    common.add_argument("--n", type=int, help="number of unit fractions")
    common.add_argument("--alpha", type=int,
                        help="highest p-exponent allowed (default: largest with p^alpha < S_n)")
    common.add_argument("--format", choices=["tableau", "json", "count"], default="tableau")
    common.add_argument("--distinct", action="store_true", help="keep only solutions in distinct integers")
    common.add_argument("--primes-only", action="store_true", help="scan prime q only")
    common.add_argument("--jobs", type=int, default=1, help="worker processes")
    common.add_argument("--seedfile", help="JSON solution record(s) for verify")
    common.add_argument("-v", "--verbose", action="store_true")

    parser = _Parser(prog="pqegypt", description=__doc__.splitlines()[0] if __doc__ else None)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    sub.add_parser("enumerate", parents=[common], help="list every solution")
    sub.add_parser("count", parents=[common], help="number of solutions")
    sub.add_parser("exists", parents=[common], help="whether a solution exists")
    sub.add_parser("verify", parents=[common], help="check solution records from --seedfile")
    sub.add_parser("bounds", parents=[common], help="closed-form bounds for (p, alpha, n)")
    sub.add_parser("construct", parents=[common], help="explicit p = 2 solution")
    scan = sub.add_parser("scan", parents=[common], help="existence for every admissible q")
    scan.add_argument("--counts", action="store_true", help="also count solutions per q")
    cc = sub.add_parser("cross-check", help="table search vs brute force over parameter ranges")
    cc.add_argument("--ps", default="2,3", help="p values, e.g. 2,3")
    cc.add_argument("--qs", default="2-11", help="q values, e.g. 3,5,7 or 2-11")
    cc.add_argument("--ns", default="2-8", help="n values, e.g. 2-8")
    cc.add_argument("--alphas", default="1-3", help="alpha values, e.g. 1-3")
    cc.add_argument("-v", "--verbose", action="store_true")
    return parser


def _need(args, *names):
    missing = [f"--{n}" for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError(f"{args.command} needs {', '.join(missing)}")


def _params(args) -> Params:
    _need(args, "p", "q", "n")
    if not is_prime(args.q):
        print(f"pqegypt: warning: q={args.q} is not prime; the closed-form results assume prime q",
              file=sys.stderr)
    alpha = args.alpha if args.alpha is not None else alpha_cap(args.p, args.n)
    try:
        return Params(args.p, args.q, args.n, alpha)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _emit_grids(grids: List[SolutionGrid], fmt: str) -> None:
    if fmt == "count":
        print(len(grids))
    elif fmt == "json":
        print(json.dumps([grid_to_record(g) for g in grids], indent=1))
    else:
        for i, g in enumerate(grids):
            if i:
                print()
            print(f"# {g.kind} row, alpha_q={g.alpha_q}, height={g.height}")
            print(render_tableau(g))


def _run(args) -> int:
    cmd = args.command
    if cmd in ("enumerate", "count"):
        prm = _params(args)
        grids = enumerate_solutions(prm, jobs=args.jobs)
        if args.distinct:
            grids = [g for g in grids if g.is_distinct()]
        if cmd == "count":
            print(json.dumps({"count": len(grids)}) if args.format == "json" else len(grids))
        else:
            _emit_grids(grids, args.format)
        return EXIT_OK
    if cmd == "exists":
        prm = _params(args)
        found = exists(prm)
        print(json.dumps({"exists": found}) if args.format == "json" else str(found).lower())
        return EXIT_OK
    if cmd == "verify":
        _need(args, "seedfile")
        try:
            grids = load_grids(args.seedfile)
        except (OSError, ValueError) as exc:
            raise UsageError(f"cannot read {args.seedfile}: {exc}") from exc
        bad = 0
        for g in grids:
            rep = verify(g)
            bad += not rep.is_valid
            print(json.dumps({
                "rows": [list(r) for r in g.rows],
                "is_valid": rep.is_valid,
                "sum": str(rep.sum),
                "part_count": rep.part_count,
                "failures": rep.failures,
            }))
        return EXIT_VERIFY if bad else EXIT_OK
    if cmd == "bounds":
        _need(args, "p", "n")
        alpha = args.alpha if args.alpha is not None else alpha_cap(args.p, args.n)
        if alpha < 1:
            raise UsageError("alpha must be >= 1")
        rep = bounds.bounds_report(args.p, alpha, args.n, args.q)
        print(json.dumps(asdict(rep), indent=1, default=str))
        return EXIT_OK
    if cmd == "construct":
        _need(args, "q", "n", "alpha")
        if args.p not in (None, 2):
            raise UsageError("the explicit construction is for p = 2 only")
        try:
            g = bounds.construct_p2(args.alpha, args.q, args.n)
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
        _emit_grids([g], args.format)
        return EXIT_OK if verify(g).is_valid else EXIT_VERIFY
    if cmd == "scan":
        _need(args, "p", "n", "alpha")
        rep = scan_q(args.p, args.alpha, args.n, args.primes_only, args.counts, args.jobs)
        if args.format == "json":
            print(json.dumps(asdict(rep), indent=1, default=str))
        else:
            print(f"# p={rep.p} alpha={rep.alpha} n={rep.n} q <= {rep.q_best}")
            for r in rep.records:
                extra = f" count={r.count}" if r.count is not None else ""
                print(f"q={r.q} exists={str(r.exists).lower()}{extra}")
            print("gaps: " + (" ".join(map(str, rep.gaps)) or "none"))
        return EXIT_OK
    if cmd == "cross-check":
        summ = cross_check(_int_list(args.ps), _int_list(args.qs),
                           _int_list(args.ns), _int_list(args.alphas))
        print(json.dumps(asdict(summ) | {"passed": summ.passed}, indent=1))
        return EXIT_OK if summ.passed else EXIT_MISMATCH
    raise UsageError(f"unknown command {cmd}")


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s: %(message)s")
    try:
        return _run(args)
    except UsageError as exc:
        print(f"pqegypt: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())
