"""Command line front end.

Exit status conventions: 0 for any completed run regardless of verdict
(a refuted claim is still a successful verification run), 2 for usage and
input errors, 3 for internal invariant violations. Reports go to stdout;
--out duplicates them to a file, and the delimited report paths also render
a companion PNG figure next to that file unless --no-figures is given.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .errors import InvariantViolation
from .fcsr import BinarySequence, fcsr_run, lseq_exponential
from .numtheory import Modulus
from .report import (
    correlation_csv,
    ideal_document,
    lemma5_document,
    render_json,
    sweep_csv,
    sweep_document,
    verification_document,
)
from .seqops import arithmetic_crosscorrelation, decimate, shift
from .verify import (
    find_counterexamples,
    sweep,
    verify_conjecture_decimation_form,
    verify_ideal_correlation,
    verify_lemma5,
    verify_theorem1_root_form,
)

__all__ = ["main"]

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_INVARIANT = 3


def _parse_modulus(args: argparse.Namespace) -> Modulus:
    if args.q is not None and (args.p is not None or args.e is not None):
        raise ValueError("give either --q or --p/--e, not both")
    if args.q is not None:
        return Modulus.from_q(args.q)
    if args.p is not None:
        return Modulus.from_pe(args.p, args.e if args.e is not None else 1)
    raise ValueError("a modulus is required: --q, or --p with optional --e")


def _read_bits(args: argparse.Namespace) -> BinarySequence:
    text = args.bits if args.bits is not None else sys.stdin.read()
    return BinarySequence.from01(text)


def _write_out(text: str, out: str | None) -> None:
    sys.stdout.write(text)
    if out is not None:
        Path(out).write_text(text, encoding="utf-8")


def _sequence_text(seq: BinarySequence, fmt: str) -> str:
    if fmt == "bits":
        return seq.to01() + "\n"
    lines = ["t,bit"]
    lines.extend(f"{t},{b}" for t, b in enumerate(seq.bits))
    return "\n".join(lines) + "\n"


def cmd_gen(args: argparse.Namespace) -> int:
    mod = _parse_modulus(args)
    seq = lseq_exponential(mod, args.a, args.length)
    sys.stdout.write(_sequence_text(seq, args.format))
    return EXIT_OK


def cmd_fcsr(args: argparse.Namespace) -> int:
    mod = _parse_modulus(args)
    seq = fcsr_run(mod, args.a, args.length)
    sys.stdout.write(_sequence_text(seq, args.format))
    return EXIT_OK


def cmd_decimate(args: argparse.Namespace) -> int:
    seq = _read_bits(args)
    sys.stdout.write(decimate(seq, args.d).to01() + "\n")
    return EXIT_OK


def cmd_shift(args: argparse.Namespace) -> int:
    seq = _read_bits(args)
    sys.stdout.write(shift(seq, args.tau).to01() + "\n")
    return EXIT_OK


def cmd_acorr(args: argparse.Namespace) -> int:
    mod = _parse_modulus(args)
    base = lseq_exponential(mod)
    a = decimate(base, args.c)
    b = decimate(base, args.d)
    if args.all:
        taus = list(range(a.period))
    else:
        taus = [args.tau % a.period]
    values = [arithmetic_crosscorrelation(a, b, tau).value for tau in taus]
    if args.all:
        sys.stdout.write("".join(f"{t},{v}\n" for t, v in zip(taus, values)))
    else:
        sys.stdout.write(f"{values[0]}\n")
    if args.out is not None:
        Path(args.out).write_text(correlation_csv(taus, values), encoding="utf-8")
        if not args.no_figures:
            from .figures import save_correlation_figure

            save_correlation_figure(
                taus,
                values,
                Path(args.out).with_suffix(".png"),
                title=f"q={mod.q}: decimations c={args.c}, d={args.d}",
            )
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    mod = _parse_modulus(args)
    if args.subject == "theorem1":
        doc = verification_document(verify_theorem1_root_form(mod), args.timing)
    elif args.subject == "conjecture":
        doc = verification_document(
            verify_conjecture_decimation_form(mod), args.timing
        )
    elif args.subject == "lemma5":
        doc = lemma5_document(verify_lemma5(mod))
    else:
        doc = ideal_document(mod, verify_ideal_correlation(mod))
    _write_out(render_json(doc), args.out)
    return EXIT_OK


def cmd_counterexamples(args: argparse.Namespace) -> int:
    mod = _parse_modulus(args)
    for w in find_counterexamples(mod):
        sys.stdout.write(f"{w.c},{w.d},{w.tau}\n")
    return EXIT_OK


def cmd_sweep(args: argparse.Namespace) -> int:
    e_filter = args.e
    if args.max_q is not None:
        max_q = args.max_q
    else:
        max_q = 243 if (e_filter is not None and e_filter >= 2) else 2000
    reports = sweep(max_q, e_filter, args.jobs)
    if args.format == "json":
        text = render_json(sweep_document(reports, max_q, e_filter, args.timing))
    else:
        text = sweep_csv(reports)
    _write_out(text, args.out)
    if args.out is not None and not args.no_figures:
        from .figures import save_sweep_figure

        save_sweep_figure(reports, Path(args.out).with_suffix(".png"))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lseqkit",
        description=(
            "Generate l-sequences, decimate and correlate them, and run "
            "exhaustive distinctness verifications over odd prime powers."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    modulus = argparse.ArgumentParser(add_help=False)
    modulus.add_argument("--q", type=int, default=None, help="modulus q = p**e")
    modulus.add_argument("--p", type=int, default=None, help="odd prime base")
    modulus.add_argument("--e", type=int, default=None, help="exponent (with --p)")

    for name, func, doc in (
        ("gen", cmd_gen, "emit an l-sequence via the closed exponential form"),
        ("fcsr", cmd_fcsr, "emit an l-sequence by running the carry register"),
    ):
        sp = sub.add_parser(name, parents=[modulus], help=doc)
        sp.add_argument("--a", type=int, default=1, help="unit seed (default 1)")
        sp.add_argument(
            "--len",
            dest="length",
            type=int,
            default=None,
            help="output length (default: one full period)",
        )
        sp.add_argument("--format", choices=("bits", "csv"), default="bits")
        sp.set_defaults(func=func)

    sp = sub.add_parser("decimate", help="decimate a 0/1 sequence by d")
    sp.add_argument("--d", type=int, required=True)
    sp.add_argument("--bits", default=None, help="0/1 string (default: stdin)")
    sp.set_defaults(func=cmd_decimate)

    sp = sub.add_parser("shift", help="cyclically left-shift a 0/1 sequence")
    sp.add_argument("--tau", type=int, required=True)
    sp.add_argument("--bits", default=None, help="0/1 string (default: stdin)")
    sp.set_defaults(func=cmd_shift)

    sp = sub.add_parser(
        "acorr",
        parents=[modulus],
        help="arithmetic cross-correlation of two decimations of one l-sequence",
    )
    sp.add_argument("--c", type=int, default=1, help="first decimation (default 1)")
    sp.add_argument("--d", type=int, required=True, help="second decimation")
    which = sp.add_mutually_exclusive_group(required=True)
    which.add_argument("--tau", type=int, help="single shift to evaluate")
    which.add_argument("--all", action="store_true", help="all shifts 0..T-1")
    sp.add_argument("--out", default=None, help="also write tau,value CSV here")
    sp.add_argument("--no-figures", action="store_true")
    sp.set_defaults(func=cmd_acorr)

    sp = sub.add_parser(
        "verify",
        parents=[modulus],
        help="run one exhaustive verification and print its JSON report",
    )
    sp.add_argument(
        "subject",
        choices=("theorem1", "conjecture", "lemma5", "ideal"),
        help="which claim to check",
    )
    sp.add_argument("--out", default=None, help="also write the JSON report here")
    sp.add_argument(
        "--timing",
        action="store_true",
        help="include elapsed_ms (off by default to keep reports byte-stable)",
    )
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser(
        "counterexamples",
        parents=[modulus],
        help="print cyclic collisions among decimations as c,d,tau rows",
    )
    sp.set_defaults(func=cmd_counterexamples)

    sp = sub.add_parser(
        "sweep",
        help="verify every eligible modulus up to a bound",
    )
    sp.add_argument(
        "--max-q",
        type=int,
        default=None,
        help="largest q to test (default 2000, or 243 with --e >= 2)",
    )
    sp.add_argument("--e", type=int, default=None, help="restrict to this exponent")
    sp.add_argument("--format", choices=("json", "csv"), default="json")
    sp.add_argument("--jobs", type=int, default=1, help="worker processes")
    sp.add_argument("--out", default=None, help="also write the report here")
    sp.add_argument("--no-figures", action="store_true")
    sp.add_argument("--timing", action="store_true")
    sp.set_defaults(func=cmd_sweep)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InvariantViolation as exc:
        print(f"invariant violation: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
