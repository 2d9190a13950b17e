"""Command-line interface: build pencils, verify them, inspect spectra, fuzz.

Exit codes: 0 on success, 1 when a verification fails, 2 on input errors.
Reports are line-delimited JSON records; identical inputs, seed, and flags
produce byte-identical report streams (timing is kept out of the records
for exactly that reason).
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass, field

import numpy as np

from . import equivalence, fiedler, spectral
from .errors import DimensionError, ParseError
from .rsmp import Rsmp
from .sampling import random_rsmp
from .serialization import emit_pencil, parse_rsmp
from .sigma import SigmaSeq, all_decision_strings, parse_sigma

__all__ = ["main", "RunReport"]


@dataclass
class RunReport:
    """Flat record of one verification run (timing stays out of the record)."""

    instance: dict
    sigma: str
    rows: int
    cols: int
    max_residual: float
    corollary_residual: float
    u_unimodularity: float
    v_unimodularity: float
    sizes_ok: bool
    structure_ok: bool
    verdict: str
    elapsed: float = field(default=0.0, compare=False)

    def to_record(self) -> str:
        data = {
            "instance": self.instance,
            "sigma": self.sigma,
            "rows": self.rows,
            "cols": self.cols,
            "max_residual": float(self.max_residual),
            "corollary_residual": float(self.corollary_residual),
            "u_unimodularity": float(self.u_unimodularity),
            "v_unimodularity": float(self.v_unimodularity),
            "sizes_ok": self.sizes_ok,
            "structure_ok": self.structure_ok,
            "verdict": self.verdict,
        }
        return json.dumps(data, sort_keys=False)


def _read_instance(path: str) -> Rsmp:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_rsmp(fh.read())


def _sigma_for(r: Rsmp, text: str) -> SigmaSeq:
    return parse_sigma(text, degree=r.degree)


def _check_sizes_and_structure(r: Rsmp, s: SigmaSeq) -> tuple[bool, bool]:
    if r.degree < 2:
        return True, True
    ws = fiedler.build_w_sequence(r, s)
    sizes_ok = all(
        w.shape == fiedler.expected_size(r.n, r.p, r.m, r.d_a, r.d_d, s, i)
        for i, w in enumerate(ws)
    )
    structure_ok = all(
        fiedler.check_block_structure(w, i, r, s).passed for i, w in enumerate(ws)
    )
    return sizes_ok, structure_ok


def _verify_one(r: Rsmp, s: SigmaSeq, instance: dict, trials: int, tol: float, rng) -> RunReport:
    t0 = time.perf_counter()
    pencil, u, v = equivalence.linearization_with_witnesses(r, s)
    report = equivalence.verify_theorem(r, s, pencil, u, v, points=trials, tol=tol, rng=rng)
    sizes_ok, structure_ok = _check_sizes_and_structure(r, s)
    ok = report.verdict and sizes_ok and structure_ok
    return RunReport(
        instance=instance,
        sigma=s.decisions,
        rows=pencil.shape[0],
        cols=pencil.shape[1],
        max_residual=report.max_residual,
        corollary_residual=report.corollary_residual,
        u_unimodularity=report.u_unimodularity,
        v_unimodularity=report.v_unimodularity,
        sizes_ok=sizes_ok,
        structure_ok=structure_ok,
        verdict="pass" if ok else "fail",
        elapsed=time.perf_counter() - t0,
    )


def _emit_lines(lines, out_path):
    text = "".join(line + "\n" for line in lines)
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _fmt_eigs(eigs) -> str:
    def one(z, k):
        zs = f"{z.real:.6g}" if abs(z.imag) < 1e-9 else f"{z.real:.6g}{z.imag:+.6g}i"
        return zs if k == 1 else f"{zs} (x{k})"

    return "{" + ", ".join(one(z, k) for z, k in eigs) + "}"


def cmd_pencil(args) -> int:
    r = _read_instance(args.file)
    s = _sigma_for(r, args.sigma)
    pencil = fiedler.fiedler_pencil_rect(r, s)
    text = emit_pencil(pencil)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_verify(args) -> int:
    r = _read_instance(args.file)
    instance = {"file": args.file, "n": r.n, "p": r.p, "m": r.m, "d_A": r.d_a, "d_D": r.d_d}
    if args.all:
        if r.degree > 7:
            raise ParseError("--all enumerates decision strings only up to degree 7")
        sigmas = list(all_decision_strings(r.degree))
    elif args.sigma is not None:
        sigmas = [_sigma_for(r, args.sigma)]
    else:
        raise ParseError("verify needs --sigma or --all")
    lines = []
    failures = 0
    for s in sigmas:
        rng = np.random.default_rng(args.seed)
        rep = _verify_one(r, s, instance, args.trials, args.tol, rng)
        failures += rep.verdict != "pass"
        lines.append(rep.to_record())
    _emit_lines(lines, args.out)
    print(f"{len(sigmas) - failures}/{len(sigmas)} decision strings passed", file=sys.stderr)
    return 1 if failures else 0


def cmd_eig(args) -> int:
    r = _read_instance(args.file)
    rep = spectral.discrepancy_report(r)
    print(f"system matrix eigenvalues: {_fmt_eigs(rep.s_eigenvalues)}")
    print(f"state polynomial eigenvalues (pole candidates): {_fmt_eigs(rep.pole_points)}")
    for z, status in rep.transfer_tests:
        zs = f"{z.real:.6g}" if abs(z.imag) < 1e-9 else f"{z:.6g}"
        print(f"transfer function at {zs}: {status}")
    print(f"cleared-denominator eigenvalues: {_fmt_eigs(rep.cleared_eigenvalues)}")
    extra = ", ".join(f"{z.real:.6g}" if abs(z.imag) < 1e-9 else str(z) for z in rep.cleared_minus_s)
    print(f"extra eigenvalues created by clearing: {{{extra}}}")
    return 0


def cmd_info(args) -> int:
    r = _read_instance(args.file)
    s = r.assemble_s()
    print(f"dimensions: state {r.n}x{r.n}, couplings {r.n}x{r.m} / {r.p}x{r.n}, feedthrough {r.p}x{r.m}")
    print(f"declared degrees: d_A = {r.d_a}, d_D = {r.d_d}, pencil degree {r.degree}")
    print(f"system matrix: {s.rows}x{s.cols}, degree {s.degree}")
    print(f"state polynomial regular: {r.a_regular}")
    print(f"system matrix normal rank: {spectral.normal_rank(s)}")
    if r.degree >= 2:
        sizes = set()
        for seq in all_decision_strings(r.degree):
            rows, cols = fiedler.expected_size(r.n, r.p, r.m, r.d_a, r.d_d, seq, r.degree - 2)
            sizes.add((rows, cols))
        menu = ", ".join(f"{a}x{b}" for a, b in sorted(sizes))
        print(f"pencil sizes over all decision strings: {menu}")
    return 0


def cmd_fuzz(args) -> int:
    rng_master = np.random.default_rng(args.seed)
    lines = []
    failures = 0
    total = 0
    summary: dict[tuple[int, int], list[int]] = {}
    for n in range(1, args.max_dim + 1):
        for p in range(1, args.max_dim + 1):
            for m in range(1, args.max_dim + 1):
                for d_a in range(1, args.max_deg + 1):
                    for d_d in range(1, args.max_deg + 1):
                        r = random_rsmp(rng_master, n, p, m, d_a, d_d)
                        instance = {"n": n, "p": p, "m": m, "d_A": d_a, "d_D": d_d}
                        for s in all_decision_strings(max(d_a, d_d)):
                            rng = np.random.default_rng(args.seed + 1)
                            rep = _verify_one(r, s, instance, args.trials, args.tol, rng)
                            total += 1
                            failed = rep.verdict != "pass"
                            failures += failed
                            cell = summary.setdefault((d_a, d_d), [0, 0])
                            cell[0] += not failed
                            cell[1] += 1
                            lines.append(rep.to_record())
    if args.out:
        _emit_lines(lines, args.out)
    print("degrees  passed/total")
    for (d_a, d_d), (ok, tot) in sorted(summary.items()):
        print(f"  ({d_a},{d_d})   {ok}/{tot}")
    print(f"overall: {total - failures}/{total} runs passed")
    return 1 if failures else 0


def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="rosenpencil",
        description="Fiedler pencils of Rosenbrock system matrix polynomials",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p_pencil = sub.add_parser("pencil", help="construct a pencil and write it out")
    p_pencil.add_argument("file")
    p_pencil.add_argument("--sigma", required=True, help="decision string (CCICI) or permutation (1,2,4,3,6,5)")
    p_pencil.add_argument("--out", default=None)

    p_verify = sub.add_parser("verify", help="verify pencils against the padded system matrix")
    p_verify.add_argument("file")
    p_verify.add_argument("--sigma", default=None)
    p_verify.add_argument("--all", action="store_true", help="every decision string (degree <= 7)")
    p_verify.add_argument("--trials", type=int, default=20)
    p_verify.add_argument("--tol", type=float, default=1e-8)
    p_verify.add_argument("--seed", type=int, default=0)
    p_verify.add_argument("--out", default=None)

    p_eig = sub.add_parser("eig", help="spectra through the three routes, with discrepancies")
    p_eig.add_argument("file")

    p_info = sub.add_parser("info", help="dimensions, degrees, regularity, pencil size menu")
    p_info.add_argument("file")

    p_fuzz = sub.add_parser("fuzz", help="sweep seeded random instances over the degree grid")
    p_fuzz.add_argument("--seed", type=int, default=0)
    p_fuzz.add_argument("--trials", type=int, default=20)
    p_fuzz.add_argument("--tol", type=float, default=1e-8)
    p_fuzz.add_argument("--max-dim", type=int, default=3)
    p_fuzz.add_argument("--max-deg", type=int, default=5)
    p_fuzz.add_argument("--out", default=None)
    return ap


_COMMANDS = {
    "pencil": cmd_pencil,
    "verify": cmd_verify,
    "eig": cmd_eig,
    "info": cmd_info,
    "fuzz": cmd_fuzz,
}


def main(argv=None) -> int:
    ap = _build_parser()
    try:
        args = ap.parse_args(argv)
        return _COMMANDS[args.command](args)
    except (ParseError, DimensionError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
