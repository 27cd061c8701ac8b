"""Command-line front end.

Subcommands:

* ``transform`` -- apply one transform to a text signal file,
* ``flops``     -- tabulate instrumented vs closed-form operation counts,
* ``verify``    -- run every kernel against its definitional oracle and
  check every ledger against its formula (exit 1 on first mismatch),
* ``accuracy``  -- report rms relative error growth across sizes.

Signal files hold one decimal real per line; blank lines and lines
starting with ``#`` are ignored.  Outputs are written with 17 significant
digits so files diff cleanly.  Exit codes: 0 success, 1 verification
failure, 2 usage or input errors.
"""

from __future__ import annotations

import argparse
import math
import sys
from dataclasses import dataclass

import numpy as np

from . import scale_factors as sf
from .dct2 import Normalization, dct2_classic, dct2_new, dct2_scaled
from .fft_complex import fft_conjpair, fft_scaled, fft_scaled4
from .fft_real import rfft_conjpair, rfft_scaled, rfft_scaled4
from .flops import (
    FlopLedger,
    formula_M,
    formula_MS,
    formula_classic_dct2,
    formula_new_dct2,
    formula_new_fft_complex,
    formula_splitradix_complex,
    formula_splitradix_real,
)
from .oracle import naive_dct2, naive_dct3, naive_dst2, naive_dst3, naive_dft
from .trig_family import dct3_new, dst2_new, dst3_new

REPORT_HEADER = "size,kind,algorithm,normalization,adds,mults,total,max_rel_error,rms_rel_error"

_NORMS = {
    "two-sided": Normalization.TWO_SIDED,
    "unitary": Normalization.UNITARY,
    "unitary-sqrtn": Normalization.UNITARY_SQRT_N,
}

_NAIVE = {
    "dct2": naive_dct2,
    "dct3": naive_dct3,
    "dst2": naive_dst2,
    "dst3": naive_dst3,
}


@dataclass
class RunReport:
    size: int
    kind: str
    algorithm: str
    normalization: str
    adds: int
    mults: int
    max_rel_error: float
    rms_rel_error: float

    @property
    def total(self):
        return self.adds + self.mults

    def csv(self):
        return (
            f"{self.size},{self.kind},{self.algorithm},{self.normalization},"
            f"{self.adds},{self.mults},{self.total},"
            f"{self.max_rel_error:.3e},{self.rms_rel_error:.3e}"
        )


class SignalFormatError(ValueError):
    pass


def read_signal(path):
    values = []
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            text = line.strip()
            if not text or text.startswith("#"):
                continue
            try:
                values.append(float(text))
            except ValueError:
                raise SignalFormatError(
                    f"{path}:{lineno}: not a decimal real: {text!r}"
                ) from None
    if not values:
        raise SignalFormatError(f"{path}: no samples found")
    return values


def write_signal(path, values):
    with open(path, "w", encoding="utf-8") as fh:
        for v in values:
            fh.write(f"{float(v):.17g}\n")


def _rel_errors(got, want):
    got = np.asarray(got, dtype=complex)
    want = np.asarray(want, dtype=complex)
    diff = np.abs(got - want)
    scale = np.max(np.abs(want))
    if scale == 0.0:
        worst = float(np.max(diff) if len(diff) else 0.0)
        return (0.0, 0.0) if worst == 0.0 else (math.inf, math.inf)
    denom = np.linalg.norm(want)
    return float(np.max(diff) / scale), float(np.linalg.norm(diff) / denom)


def _rng(seed, n, trial, tag):
    return np.random.default_rng([seed, n, trial, tag])


def _is_pow2(n):
    return n >= 1 and n & (n - 1) == 0


def _sizes(max_size, lowest=2):
    n = lowest
    while n <= max_size:
        yield n
        n *= 2


# ---------------------------------------------------------------- transform

def cmd_transform(kind, algo, norm_name, input_path, output_path,
                  scales_output=None, expect_n=None):
    norm = _NORMS[norm_name]
    x = read_signal(input_path)
    n = len(x)
    if expect_n is not None and n != expect_n:
        print(f"error: expected {expect_n} samples, file has {n}", file=sys.stderr)
        return 2
    if algo == "naive":
        out = _NAIVE[kind](x, norm)
        write_signal(output_path, out)
        return 0
    if not _is_pow2(n) or n < 2:
        print(
            f"error: fast algorithms need a power-of-two size >= 2, got {n}",
            file=sys.stderr,
        )
        return 2
    if algo == "classic":
        if kind != "dct2":
            print("error: algo 'classic' is only available for dct2", file=sys.stderr)
            return 2
        out = dct2_classic(x, norm)
    elif algo == "scaled":
        if kind != "dct2":
            print("error: algo 'scaled' is only available for dct2", file=sys.stderr)
            return 2
        res = dct2_scaled(x)
        if scales_output is None:
            print("error: --scales-output is required for algo 'scaled'", file=sys.stderr)
            return 2
        write_signal(scales_output, res.scales)
        out = res.values
    elif kind == "dct2":
        out = dct2_new(x, norm)
    elif kind == "dct3":
        out = dct3_new(x, norm)
    elif kind == "dst2":
        out = dst2_new(x, norm=norm)
    else:
        out = dst3_new(x, norm=norm)
    write_signal(output_path, out)
    return 0


# -------------------------------------------------------------------- flops

def cmd_flops(max_size, fmt="csv", out=None):
    out = out if out is not None else sys.stdout
    rows = []
    for n in _sizes(max_size):
        zeros = [0.0] * n
        led_c, led_n = FlopLedger(), FlopLedger()
        dct2_classic(zeros, ledger=led_c)
        dct2_new(zeros, ledger=led_n)
        fc, fn = formula_classic_dct2(n), formula_new_dct2(n)
        rows.append(
            (n, led_c.total(), led_n.total(), fc, fn,
             led_c.total() == fc and led_n.total() == fn)
        )
    header = ("n", "classic_ledger", "new_ledger", "classic_formula",
              "new_formula", "match")
    if fmt == "markdown":
        out.write("| " + " | ".join(header) + " |\n")
        out.write("|" + "|".join(["---"] * len(header)) + "|\n")
        for r in rows:
            out.write("| " + " | ".join(str(v) for v in r) + " |\n")
    else:
        out.write(",".join(header) + "\n")
        for r in rows:
            out.write(",".join(str(v) for v in r) + "\n")
    return 0 if all(r[-1] for r in rows) else 1


# ------------------------------------------------------------------- verify

def _corrupted_tables(n):
    # test hook: a fresh table set with one dct2/new stage constant bent
    tab = sf.ScaleTables(n)
    for key, (c0, ch, pairs) in list(tab._stage.items()):
        pairs = list(pairs)
        if len(pairs) > 1:
            a, b = pairs[1]
            pairs[1] = (a * 1.001, b)
            tab._stage[key] = (c0, ch, pairs)
    return tab


def _dct_ledger_formula(n, norm):
    new = formula_new_dct2(n)
    classic = formula_classic_dct2(n)
    if norm is Normalization.UNITARY_SQRT_N:
        return classic - 2, new - 2
    return classic, new


def _verify_size(n, trials, seed, tab, reports, tol):
    """Returns the first failing (tuple, reason) or None."""
    h = n // 2

    def run(kind, algo, normname, ledgers, errors, expect_total=None,
            expect_ledger=None):
        adds, mults = ledgers[0].adds, ledgers[0].mults
        for led in ledgers[1:]:
            if led.as_tuple() != (adds, mults):
                return (kind, algo, normname, "ledger varies with input values")
        max_rel = max(e[0] for e in errors)
        rms_rel = max(e[1] for e in errors)
        reports.append(
            RunReport(n, kind, algo, normname, adds, mults, max_rel, rms_rel)
        )
        if expect_total is not None and adds + mults != expect_total:
            return (kind, algo, normname,
                    f"ledger total {adds + mults} != formula {expect_total}")
        if expect_ledger is not None and (adds, mults) != expect_ledger:
            return (kind, algo, normname,
                    f"ledger {(adds, mults)} != expected {expect_ledger}")
        if max_rel >= tol:
            return (kind, algo, normname, f"max_rel_error {max_rel:.3e} >= {tol:.0e}")
        return None

    sc = [sf.scale(n, k) for k in range(n)]
    s2 = [sf.scale(2 * n, k) for k in range(n)]
    s4 = [sf.scale(4 * n, k) for k in range(n)]

    # complex kernels
    cases = []
    for trial in range(trials):
        g = _rng(seed, n, trial, 0)
        x = g.standard_normal(n) + 1j * g.standard_normal(n)
        cases.append((x, naive_dft(x)))
    for algo, fn, total in (
        ("conjpair", lambda x, led: fft_conjpair(x, led),
         formula_splitradix_complex(n)),
        ("new", lambda x, led: fft_scaled(x, 0, tab, led),
         formula_new_fft_complex(n)),
        ("new-s1", lambda x, led: [v * s for v, s in zip(fft_scaled(x, 1, tab, led), sc)],
         formula_new_fft_complex(n) - (formula_MS(n) - formula_M(n))),
        ("new-s2", lambda x, led: [v * s for v, s in zip(fft_scaled(x, 2, tab, led), s2)],
         None),
        ("new-s4", lambda x, led: [v * s for v, s in zip(fft_scaled4(x, tab, led), s4)],
         None),
    ):
        ledgers, errors = [], []
        for x, want in cases:
            led = FlopLedger()
            errors.append(_rel_errors(fn(x, led), want))
            ledgers.append(led)
        bad = run("fft", algo, "-", ledgers, errors, expect_total=total)
        if bad:
            return bad

    # real-input kernels
    rcases = []
    for trial in range(trials):
        x = _rng(seed, n, trial, 1).standard_normal(n)
        rcases.append((x, naive_dft(x)[: h + 1]))
    for algo, fn, total in (
        ("conjpair", lambda x, led: rfft_conjpair(x, led).bins,
         formula_splitradix_real(n)),
        ("new", lambda x, led: rfft_scaled(x, 0, tab, led).bins,
         formula_splitradix_real(n) - formula_M(n) // 2),
        ("new-s1", lambda x, led: [v * s for v, s in zip(rfft_scaled(x, 1, tab, led).bins, sc)],
         formula_splitradix_real(n) - formula_MS(n) // 2),
        ("new-s2", lambda x, led: [v * s for v, s in zip(rfft_scaled(x, 2, tab, led).bins, s2)],
         None),
        ("new-s4", lambda x, led: [v * s for v, s in zip(rfft_scaled4(x, tab, led).bins, s4)],
         None),
    ):
        ledgers, errors = [], []
        for x, want in rcases:
            led = FlopLedger()
            errors.append(_rel_errors(fn(x, led), want))
            ledgers.append(led)
        bad = run("rfft", algo, "-", ledgers, errors, expect_total=total)
        if bad:
            return bad

    # cosine/sine family
    stage_tab = sf.build_tables(n) if tab.size != n else tab
    dct2_led = {}
    for normname, norm in _NORMS.items():
        classic_total, new_total = _dct_ledger_formula(n, norm)
        inputs = [_rng(seed, n, trial, 2).standard_normal(n) for trial in range(trials)]
        oracles = {
            kind: [_NAIVE[kind](x, norm) for x in inputs] for kind in _NAIVE
        }
        ledgers, errors = [], []
        for x, want in zip(inputs, oracles["dct2"]):
            led = FlopLedger()
            errors.append(_rel_errors(dct2_classic(x, norm, led), want))
            ledgers.append(led)
        bad = run("dct2", "classic", normname, ledgers, errors,
                  expect_total=classic_total)
        if bad:
            return bad
        ledgers, errors = [], []
        for x, want in zip(inputs, oracles["dct2"]):
            led = FlopLedger()
            errors.append(_rel_errors(dct2_new(x, norm, stage_tab, led), want))
            ledgers.append(led)
        bad = run("dct2", "new", normname, ledgers, errors, expect_total=new_total)
        if bad:
            return bad
        dct2_led[normname] = ledgers[0].as_tuple()
        if norm is Normalization.TWO_SIDED:
            ledgers, errors = [], []
            for x, want in zip(inputs, oracles["dct2"]):
                led = FlopLedger()
                res = dct2_scaled(x, stage_tab, led)
                got = [v * s for v, s in zip(res.values, res.scales)]
                errors.append(_rel_errors(got, want))
                ledgers.append(led)
            a, m = dct2_led[normname]
            bad = run("dct2", "scaled", normname, ledgers, errors,
                      expect_ledger=(a, m - n))
            if bad:
                return bad
        for kind, fn in (
            ("dct3", lambda x, led: dct3_new(x, norm, stage_tab, led)),
            ("dst2", lambda x, led: dst2_new(x, stage_tab, led, norm=norm)),
            ("dst3", lambda x, led: dst3_new(x, stage_tab, led, norm=norm)),
        ):
            ledgers, errors = [], []
            for x, want in zip(inputs, oracles[kind]):
                led = FlopLedger()
                errors.append(_rel_errors(fn(x, led), want))
                ledgers.append(led)
            bad = run(kind, "new", normname, ledgers, errors,
                      expect_ledger=dct2_led[normname])
            if bad:
                return bad
    return None


def cmd_verify(max_size=1024, trials=5, seed=0, out=None,
               inject_fault="none", tol=1e-10):
    out = out if out is not None else sys.stdout
    reports = []
    failure = None
    for n in _sizes(max_size):
        tab = _corrupted_tables(n) if inject_fault == "dct2-new-stage" \
            else sf.build_tables(n)
        failure = _verify_size(n, trials, seed, tab, reports, tol)
        if failure:
            break
    out.write(REPORT_HEADER + "\n")
    for rep in sorted(reports, key=lambda r: (r.size, r.kind, r.algorithm,
                                              r.normalization)):
        out.write(rep.csv() + "\n")
    if failure:
        kind, algo, normname, reason = failure
        print(f"FAIL {kind}/{algo} norm={normname}: {reason}", file=sys.stderr)
        return 1
    return 0


# ----------------------------------------------------------------- accuracy

def cmd_accuracy(max_size=4096, trials=5, seed=0, out=None):
    out = out if out is not None else sys.stdout
    kernels = ("dct2_new", "dct2_classic", "fft_conjpair", "fft_new")
    sizes = [n for n in _sizes(max_size, lowest=16)]
    rms = {name: [] for name in kernels}
    for n in sizes:
        diffs = {name: [] for name in kernels}
        norms = {name: [] for name in kernels}
        for trial in range(trials):
            xr = _rng(seed, n, trial, 3).standard_normal(n)
            want = naive_dct2(xr)
            for name, fn in (("dct2_new", dct2_new), ("dct2_classic", dct2_classic)):
                got = np.asarray(fn(xr), dtype=float)
                diffs[name].append(got - want)
                norms[name].append(want)
            g = _rng(seed, n, trial, 4)
            xc = g.standard_normal(n) + 1j * g.standard_normal(n)
            wantc = naive_dft(xc)
            tab = sf.build_tables(n)
            for name, got in (
                ("fft_conjpair", fft_conjpair(xc)),
                ("fft_new", fft_scaled(xc, 0, tab)),
            ):
                diffs[name].append(np.asarray(got) - wantc)
                norms[name].append(wantc)
        for name in kernels:
            d = np.concatenate(diffs[name])
            w = np.concatenate(norms[name])
            rms[name].append(float(np.linalg.norm(d) / np.linalg.norm(w)))
    out.write("kernel,n,rms_rel_error,fit_c,bound,flagged\n")
    status = 0
    for name in kernels:
        cs = [r / math.sqrt(math.log2(n)) for r, n in zip(rms[name], sizes)]
        c = sorted(cs)[len(cs) // 2]
        for n, r in zip(sizes, rms[name]):
            bound = 2.0 * c * math.sqrt(math.log2(n))
            flagged = r > bound
            status |= int(flagged)
            out.write(f"{name},{n},{r:.3e},{c:.3e},{bound:.3e},{flagged}\n")
    return status


# --------------------------------------------------------------------- main

def _build_parser():
    p = argparse.ArgumentParser(
        prog="fastdcst",
        description="Fast DCT/DST transforms with exact flop accounting.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    t = sub.add_parser("transform", help="transform a signal file")
    t.add_argument("--kind", required=True, choices=sorted(_NAIVE))
    t.add_argument("--algo", default="new",
                   choices=["classic", "new", "scaled", "naive"])
    t.add_argument("--norm", default="two-sided", choices=sorted(_NORMS))
    t.add_argument("--input", required=True)
    t.add_argument("--output", required=True)
    t.add_argument("--scales-output", default=None,
                   help="sidecar file for the diagonal of algo=scaled")
    t.add_argument("--n", type=int, default=None,
                   help="expected sample count (error if the file differs)")

    f = sub.add_parser("flops", help="operation-count table")
    f.add_argument("--max-size", type=int, default=4096)
    f.add_argument("--format", default="csv", choices=["csv", "markdown"])

    v = sub.add_parser("verify", help="kernels vs oracles and count formulas")
    v.add_argument("--max-size", type=int, default=1024)
    v.add_argument("--trials", type=int, default=5)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--inject-fault", default="none",
                   choices=["none", "dct2-new-stage"], help=argparse.SUPPRESS)

    a = sub.add_parser("accuracy", help="rms error growth report")
    a.add_argument("--max-size", type=int, default=4096)
    a.add_argument("--trials", type=int, default=5)
    a.add_argument("--seed", type=int, default=0)
    return p


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        if args.command == "transform":
            return cmd_transform(args.kind, args.algo, args.norm, args.input,
                                 args.output, args.scales_output, args.n)
        if args.command == "flops":
            if not _is_pow2(args.max_size) or args.max_size > 1 << 20:
                print("error: --max-size must be a power of two <= 2**20",
                      file=sys.stderr)
                return 2
            return cmd_flops(args.max_size, args.format)
        if args.command == "verify":
            return cmd_verify(args.max_size, args.trials, args.seed,
                              inject_fault=args.inject_fault)
        return cmd_accuracy(args.max_size, args.trials, args.seed)
    except (SignalFormatError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry():
    raise SystemExit(main())


if __name__ == "__main__":
    raise SystemExit(main())
