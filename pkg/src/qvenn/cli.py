"""
Command-line front end.

    qvenn encode   --code rep3 --alpha0 0.6 --alpha1 0.8
    qvenn pipeline --code five --alpha0 0.6 --alpha1 0.8 --error Z4
    qvenn table    --code rep3 [--format json]
    qvenn verify
    qvenn bound    5 1 1
    qvenn venn     --code five --format svg -o five.svg [--highlight "1,-1,-1,1"]
    qvenn simulate --code five --p 0.05 --trials 20000 --seed 7 [--log trials.jsonl]

Exit codes: 0 success, 1 usage error, 2 uncorrectable syndrome or decoding
failure, 3 unsupported rendering.  Data goes to stdout (or ``--output``),
diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import json
import math
import re
import sys
from typing import Sequence

from . import __version__
from .codes import CODE_IDS, encode, get_code, quantum_hamming_bound
from .decoder import (
    NotPauliEigenstate,
    StateOutsideCodeSpace,
    UncorrectableSyndrome,
    build_table,
    correct,
    extract_logical,
    syndrome,
    verify_against_printed,
)
from .pauli import parse_pauli
from .simulate import simulate
from .statevec import apply_pauli, format_complex
from .venn import TooManySets, layout, render_ascii, render_svg

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DECODE = 2
EXIT_UNSUPPORTED = 3

# whitelisted printed-table errata: code -> error labels
KNOWN_ERRATA = {"five": ("Y2",)}

_NUMBER = r"(?:\d+(?:\.\d*)?|\.\d+)(?:[eE][+-]?\d+)?"
_REAL = re.compile(rf"^[+-]?{_NUMBER}$")
_IMAG = re.compile(rf"^(?P<im>[+-]?(?:{_NUMBER})?)i$")
_FULL = re.compile(rf"^(?P<re>[+-]?{_NUMBER})(?P<im>[+-](?:{_NUMBER})?)i$")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _imag_part(text: str) -> float:
    if text in ("", "+"):
        return 1.0
    if text == "-":
        return -1.0
    return float(text)


def parse_complex(text: str) -> complex:
    """Parse ``a``, ``bi``, ``a+bi`` or ``a-bi``; a bare ``i`` means 1i."""
    text = text.strip()
    if _REAL.match(text):
        return complex(float(text), 0.0)
    m = _IMAG.match(text)
    if m:
        return complex(0.0, _imag_part(m.group("im")))
    m = _FULL.match(text)
    if m:
        return complex(float(m.group("re")), _imag_part(m.group("im")))
    raise UsageError(f"cannot parse complex number {text!r}")


def _sig(x: float) -> float:
    return float(f"{x:.9g}")


def _pair(z: complex) -> list[float]:
    return [_sig(z.real) + 0.0, _sig(z.imag) + 0.0]


def _amplitudes(args) -> tuple[complex, complex]:
    a0, a1 = parse_complex(args.alpha0), parse_complex(args.alpha1)
    norm2 = abs(a0) ** 2 + abs(a1) ** 2
    if abs(norm2 - 1) > 1e-6:
        raise UsageError(f"|alpha0|^2 + |alpha1|^2 = {norm2:.9g} is not 1")
    if abs(norm2 - 1) > 1e-9:
        print(f"warning: renormalizing amplitudes (norm^2 = {norm2:.12g})", file=sys.stderr)
    scale = math.sqrt(norm2)
    return a0 / scale, a1 / scale


def _emit(args, text: str) -> None:
    if not text.endswith("\n"):
        text += "\n"
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_encode(args) -> int:
    code = get_code(args.code)
    a0, a1 = _amplitudes(args)
    state = encode(code, a0, a1)
    if args.format == "json":
        amps = {
            format(i, f"0{code.n}b"): _pair(complex(z))
            for i, z in enumerate(state.amps)
            if abs(z) > 1e-12
        }
        _emit(args, json.dumps({"code": code.name, "amplitudes": amps}, indent=2))
    else:
        _emit(args, state.dump())
    return EXIT_OK


def cmd_pipeline(args) -> int:
    code = get_code(args.code)
    a0, a1 = _amplitudes(args)
    error = parse_pauli(args.error, code.n)
    received = apply_pauli(encode(code, a0, a1), error)
    measured = syndrome(code, received)
    corrected, applied = correct(code, received)
    b0, b1 = extract_logical(code, corrected)
    overlap = a0.conjugate() * b0 + a1.conjugate() * b1
    fidelity = min(1.0, abs(overlap))
    if abs(overlap) > 1e-12:
        # report the recovered qubit in the input's global phase
        phase = overlap.conjugate() / abs(overlap)
        b0, b1 = b0 * phase, b1 * phase
    report = {
        "code": code.name,
        "input": [_pair(a0), _pair(a1)],
        "error": error.label(),
        "syndrome": list(measured),
        "applied": applied.label(),
        "recovered": [_pair(b0), _pair(b1)],
        "fidelity": _sig(fidelity),
        "success": fidelity >= 1 - 1e-9,
    }
    if args.format == "json":
        _emit(args, json.dumps(report, indent=2))
    else:
        lines = [
            f"code:      {code.name}",
            f"error:     {error.label()}",
            f"syndrome:  {' '.join(f'{s:+d}' for s in measured)}",
            f"applied:   {applied.label()}",
            f"recovered: {format_complex(b0)}, {format_complex(b1)}",
            f"fidelity:  {report['fidelity']}",
        ]
        _emit(args, "\n".join(lines))
    return EXIT_OK


def cmd_table(args) -> int:
    table = build_table(get_code(args.code))
    _emit(args, table.to_json() if args.format == "json" else table.to_text())
    return EXIT_OK


def cmd_verify(args) -> int:
    parts = []
    status = EXIT_OK
    summary = {}
    for code_id in CODE_IDS:
        report = verify_against_printed(get_code(code_id))
        known = KNOWN_ERRATA.get(code_id, ())
        errata = [d.error for d in report.discrepancies if d.error in known]
        unexpected = [d for d in report.discrepancies if d.error not in known]
        for label, printed_text, reading in report.interpreted_rows:
            print(
                f"note: {code_id} row {label} printed {printed_text!r}, read as {list(reading)}",
                file=sys.stderr,
            )
        if unexpected:
            status = EXIT_DECODE
            parts.append(f"{code_id}: {len(unexpected)} unexpected mismatch(es) "
                         f"({', '.join(d.error for d in unexpected)})")
        elif errata:
            word = "erratum" if len(errata) == 1 else "errata"
            parts.append(f"{code_id}: {len(errata)} known {word} ({', '.join(errata)})")
        else:
            parts.append(f"{code_id}: OK")
        summary[code_id] = {
            "rows_checked": report.rows_checked,
            "discrepancies": [
                {"error": d.error, "printed": list(d.printed), "derived": list(d.derived),
                 "known": d.error in known}
                for d in report.discrepancies
            ],
        }
    if args.format == "json":
        _emit(args, json.dumps(summary, indent=2))
    else:
        _emit(args, "; ".join(parts))
    return status


def cmd_bound(args) -> int:
    try:
        check = quantum_hamming_bound(args.n, args.k, args.t)
    except ValueError as err:
        raise UsageError(str(err)) from None
    if args.format == "json":
        _emit(args, json.dumps({
            "n": args.n, "k": args.k, "t": args.t,
            "lhs": check.lhs, "rhs": check.rhs, "relation": check.relation.value,
        }, indent=2))
    else:
        _emit(args, str(check))
    return EXIT_OK


def _parse_signs(text: str, count: int) -> tuple[int, ...]:
    try:
        signs = tuple(int(v) for v in re.split(r"[,\s]+", text.strip()))
    except ValueError:
        raise UsageError(f"cannot parse syndrome {text!r}") from None
    if len(signs) != count or any(v not in (1, -1) for v in signs):
        raise UsageError(f"syndrome must be {count} values from {{1,-1}}")
    return signs


def cmd_venn(args) -> int:
    code = get_code(args.code)
    if args.format not in ("ascii", "svg"):
        raise UsageError("venn output format is ascii or svg")
    try:
        lay = layout(code, build_table(code))
    except TooManySets as err:
        print(str(err), file=sys.stderr)
        return EXIT_UNSUPPORTED
    if args.format == "svg":
        highlight = _parse_signs(args.highlight, lay.set_count) if args.highlight else None
        _emit(args, render_svg(lay, highlight))
    else:
        _emit(args, render_ascii(lay))
    return EXIT_OK


def cmd_simulate(args) -> int:
    code = get_code(args.code)
    if not 0 <= args.p <= 1:
        raise UsageError("--p must lie in [0, 1]")
    if args.trials < 1:
        raise UsageError("--trials must be at least 1")
    alpha = None
    if args.alpha0 is not None or args.alpha1 is not None:
        if args.alpha0 is None or args.alpha1 is None:
            raise UsageError("give both --alpha0 and --alpha1, or neither")
        alpha = _amplitudes(args)
    records = [] if args.log else None
    summary = simulate(code, args.p, args.trials, args.seed, alpha, records)
    if records is not None:
        with open(args.log, "w", encoding="utf-8") as fh:
            for rec in records:
                fh.write(json.dumps(rec.to_dict()) + "\n")
    data = summary.to_dict()
    if args.format == "json":
        _emit(args, json.dumps(data, indent=2))
    else:
        _emit(args, "\n".join(f"{k}: {v}" for k, v in data.items()))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    # SUPPRESS keeps a subcommand's unset flag from clobbering a global one
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default=argparse.SUPPRESS)
    common.add_argument("--output", "-o", default=argparse.SUPPRESS,
                        help="write data here instead of stdout")
    output_only = _Parser(add_help=False)
    output_only.add_argument("--output", "-o", default=argparse.SUPPRESS,
                             help="write data here instead of stdout")

    parser = _Parser(prog="qvenn", description="Stabilizer-code syndrome decoding toolkit.",
                     parents=[common])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    codes = sorted(CODE_IDS)

    p = sub.add_parser("encode", parents=[common], help="print the encoded state")
    p.add_argument("--code", required=True, choices=codes)
    p.add_argument("--alpha0", required=True)
    p.add_argument("--alpha1", required=True)
    p.set_defaults(func=cmd_encode)

    p = sub.add_parser("pipeline", parents=[common], help="encode, corrupt, correct, retrieve")
    p.add_argument("--code", required=True, choices=codes)
    p.add_argument("--alpha0", required=True)
    p.add_argument("--alpha1", required=True)
    p.add_argument("--error", required=True, help='Pauli error, e.g. "Z4" or "IXIII"')
    p.set_defaults(func=cmd_pipeline, default_format="json")

    p = sub.add_parser("table", parents=[common], help="derived syndrome table")
    p.add_argument("--code", required=True, choices=codes)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("verify", parents=[common], help="compare derived and printed tables")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bound", parents=[common], help="quantum Hamming bound")
    p.add_argument("n", type=int)
    p.add_argument("k", type=int)
    p.add_argument("t", type=int)
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("venn", parents=[output_only], help="syndrome Venn diagram")
    p.add_argument("--code", required=True, choices=codes)
    p.add_argument("--format", choices=("ascii", "svg"), default=argparse.SUPPRESS)
    p.add_argument("--highlight", default=None, help='syndrome to shade, e.g. "1,-1,-1,1"')
    p.set_defaults(func=cmd_venn, default_format="ascii")

    p = sub.add_parser("simulate", parents=[common], help="depolarizing-channel Monte Carlo")
    p.add_argument("--code", required=True, choices=codes)
    p.add_argument("--p", type=float, required=True, help="per-qubit error probability")
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--alpha0", default=None, help="fixed input (default: random per trial)")
    p.add_argument("--alpha1", default=None)
    p.add_argument("--log", default=None, help="write one JSON line per trial here")
    p.set_defaults(func=cmd_simulate, default_format="json")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if not hasattr(args, "format"):
        args.format = getattr(args, "default_format", "text")
    if not hasattr(args, "output"):
        args.output = None
    try:
        return args.func(args)
    except UsageError as err:
        print(f"qvenn: error: {err}", file=sys.stderr)
        return EXIT_USAGE
    except (UncorrectableSyndrome, NotPauliEigenstate, StateOutsideCodeSpace) as err:
        print(f"qvenn: decoding failed: {err}", file=sys.stderr)
        return EXIT_DECODE
    except ValueError as err:
        print(f"qvenn: error: {err}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
