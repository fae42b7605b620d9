"""Command-line interface.

Subcommands:
  design     pick (n, r) for a target error budget and list usable fields
  make-code  build a code and print its descriptor and parameters
  encode     frame a file into an error-protected container
  decode     recover a file from a (possibly damaged) container
  simulate   Monte-Carlo failure rate over the symbol error channel
  selftest   quick end-to-end sanity checks
"""

import argparse
import json
import sys

from . import __version__
from .backend import backend_name
from .channel import simulate
from .container import pack, unpack
from .designer import design_code, failure_bound
from .fields import field_from_spec
from .schemes import (
    RowSelection,
    code_from_descriptor,
    derive_code,
    format_code_descriptor,
    fourier_scheme,
)


def _cmd_design(args) -> int:
    design = design_code(
        args.errors,
        base_length=args.base_length,
        base_dim=args.base_dim,
        max_char=args.max_char,
        prime_count=args.prime_count,
    )
    print(f"target errors      : {design.target_errors}")
    print(f"base shape         : ({design.base_length}, {design.base_dim})")
    print(f"multiplier         : {design.multiplier}")
    print(f"code length n      : {design.n}")
    print(f"message length r   : {design.r}")
    print(f"distance d = n-r+1 : {design.distance}")
    print(f"corrects t         : {design.t}")
    print("field candidates (q ascending):")
    for c in design.candidates:
        kind = "prime" if c.is_prime_field else "extension"
        print(f"  {str(c):>14}  q = {c.q:<12} {kind}")
    if args.error_rate is not None:
        fb = failure_bound(design.n, design.r, args.error_rate)
        print(f"failure bound at symbol error rate {fb.symbol_error_rate}: {fb.bound:.3e}")
        if fb.high_error_regime:
            print("note: rate exceeds 1 - 2*eps; expect the bound to be loose")
    return 0


def _build_code(args):
    field = field_from_spec(args.field)
    scheme = fourier_scheme(field, args.length)
    selection = RowSelection(start=args.start, step=args.step, count=args.dim)
    return derive_code(scheme, selection)


def _cmd_make_code(args) -> int:
    code = _build_code(args)
    print(f"descriptor : {format_code_descriptor(code)}")
    print(f"field      : {code.field!r}")
    print(f"n, r       : {code.n}, {code.r}")
    print(f"distance   : {code.claimed_distance}")
    print(f"corrects t : {code.t}")
    print(f"mds        : {code.mds_certified}")
    return 0


def _cmd_encode(args) -> int:
    code = code_from_descriptor(args.descriptor)
    with open(args.input, "rb") as fh:
        payload = fh.read()
    blob = pack(code, payload)
    with open(args.output, "wb") as fh:
        fh.write(blob)
    overhead = len(blob) / len(payload) if payload else float("inf")
    print(f"packed {len(payload)} bytes into {len(blob)} ({overhead:.2f}x)")
    return 0


def _cmd_decode(args) -> int:
    with open(args.input, "rb") as fh:
        blob = fh.read()
    result = unpack(blob)
    with open(args.output, "wb") as fh:
        fh.write(result.payload)
    bad = [b for b in result.blocks if b.best_effort]
    corrected = [b for b in result.blocks if b.status == "corrected"]
    print(f"descriptor : {result.descriptor}")
    print(f"blocks     : {len(result.blocks)} ({len(corrected)} corrected, {len(bad)} failed)")
    if args.report:
        for b in result.blocks:
            mark = "BEST-EFFORT" if b.best_effort else f"errors={b.error_count}"
            print(f"  block {b.index:>5}: {b.status} {mark}")
    if bad:
        print(f"warning: {len(bad)} block(s) exceeded the correction capability", file=sys.stderr)
        return 3
    return 0


def _cmd_simulate(args) -> int:
    code = code_from_descriptor(args.descriptor)
    result = simulate(code, args.error_rate, trials=args.trials, seed=args.seed)
    if args.json:
        print(json.dumps(result.as_dict(), indent=2))
        return 0
    print(f"code           : n={result.n} r={result.r} t={result.t} q={result.q}")
    print(f"channel        : symbol error rate {result.symbol_error_rate}")
    print(f"trials         : {result.trials} (seed {result.seed})")
    print(f"successes      : {result.successes}")
    print(f"flagged        : {result.flagged_failures}")
    print(f"miscorrected   : {result.miscorrections}")
    print(f"failure rate   : {result.failure_rate:.6f}")
    print(f"within t       : {result.within_capability}, beyond: {result.beyond_capability}")
    if result.capability_violations:
        print(f"CAPABILITY VIOLATIONS: {result.capability_violations}", file=sys.stderr)
        return 4
    return 0


def _cmd_selftest(args) -> int:
    import numpy as np

    from . import decoder

    checks = 0

    def ok(label: str):
        nonlocal checks
        checks += 1
        print(f"  ok: {label}")

    field = field_from_spec("29")
    scheme = fourier_scheme(field, 7)
    code = derive_code(scheme, RowSelection(0, 1, 3))
    rng = np.random.default_rng(0)
    for _ in range(25):
        message = rng.integers(0, 29, size=3)
        sent = code.encode(message)
        received = sent.copy()
        pos = rng.choice(7, size=2, replace=False)
        received[pos] = (received[pos] + rng.integers(1, 29, size=2)) % 29
        out = decoder.decode(code, received)
        assert out.ok and np.array_equal(out.message, message)
    ok("double-error correction over GF(29), length 7")

    field = field_from_spec("2^8")
    scheme = fourier_scheme(field, 255)
    code = derive_code(scheme, RowSelection(0, 1, 223))
    message = rng.integers(0, 256, size=223)
    sent = code.encode(message)
    received = sent.copy()
    pos = rng.choice(255, size=16, replace=False)
    received[pos] ^= rng.integers(1, 256, size=16)
    out = decoder.decode(code, received)
    assert out.ok and np.array_equal(out.message, message)
    ok("16-error correction over GF(2^8), length 255")

    field = field_from_spec("257")
    scheme = fourier_scheme(field, 256)
    code = derive_code(scheme, RowSelection(0, 1, 224))
    payload = bytes(rng.integers(0, 256, size=1000, dtype=np.uint8))
    blob = bytearray(pack(code, payload))
    blob[-1] ^= 0xA5  # damage one byte of the last block
    result = unpack(bytes(blob))
    assert result.payload == payload and result.ok
    ok("container round trip with one damaged byte")

    print(f"selftest: {checks} checks passed (backend: {backend_name()})")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="udc",
        description="MDS error-correcting codes from unit-derived matrix schemes",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("design", help="choose code parameters for a target error budget")
    p.add_argument("errors", type=int, help="number of symbol errors to correct")
    p.add_argument("--base-length", type=int, default=8, help="base block length n0")
    p.add_argument("--base-dim", type=int, default=7, help="base message length r0")
    p.add_argument("--max-char", type=int, default=64, help="largest characteristic to scan")
    p.add_argument("--prime-count", type=int, default=8, help="prime fields to list")
    p.add_argument("--error-rate", type=float, default=None, help="also bound the failure rate")
    p.set_defaults(func=_cmd_design)

    p = sub.add_parser("make-code", help="build a code and print its descriptor")
    p.add_argument("--field", required=True, help="field spec, e.g. 257 or 2^8")
    p.add_argument("--length", type=int, required=True, help="code length n (must divide q-1)")
    p.add_argument("--dim", type=int, required=True, help="message length r")
    p.add_argument("--start", type=int, default=0, help="first selected row")
    p.add_argument("--step", type=int, default=1, help="row selection stride")
    p.set_defaults(func=_cmd_make_code)

    p = sub.add_parser("encode", help="pack a file into an error-protected container")
    p.add_argument("--descriptor", required=True, help="code descriptor from make-code")
    p.add_argument("--input", required=True)
    p.add_argument("--output", required=True)
    p.set_defaults(func=_cmd_encode)

    p = sub.add_parser("decode", help="recover a file from a container")
    p.add_argument("--input", required=True)
    p.add_argument("--output", required=True)
    p.add_argument("--report", action="store_true", help="print one line per block")
    p.set_defaults(func=_cmd_decode)

    p = sub.add_parser("simulate", help="Monte-Carlo decode failure rate")
    p.add_argument("--descriptor", required=True, help="code descriptor from make-code")
    p.add_argument("--error-rate", type=float, required=True, help="symbol error probability")
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json", action="store_true", help="emit a JSON report")
    p.set_defaults(func=_cmd_simulate)

    p = sub.add_parser("selftest", help="run quick end-to-end checks")
    p.set_defaults(func=_cmd_selftest)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
