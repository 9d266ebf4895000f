"""Command-line surface for the cipher, the analysis workbench, and the
benchmark harness.

Exit codes:
    0  success
    1  verification failure (vectors check)
    2  usage error (bad flags or argument values)
    3  malformed hex input
    4  wrong key/IV length
    5  I/O failure
    6  odd message length without --pad-zero

The LFSR feedback mask can be overridden for the whole invocation with
the environment variable SEPAR_LFSR_TAPS (hex, e.g. "D008"); the mask
must generate a maximal-length sequence.

Keystream export writes raw octets in "bin" format, most significant
bit of each octet first, which is the layout the external statistical
test suite ingests.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
from fractions import Fraction
from importlib import resources
from pathlib import Path

from . import analysis, bench
from .core import (
    DEFAULT_LFSR,
    KEY_BYTES,
    LfsrSpec,
    NONCE_BYTES,
    OddLengthError,
    SBOXES,
    Separ,
)

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_BAD_HEX = 3
EXIT_BAD_LENGTH = 4
EXIT_IO = 5
EXIT_ODD_LENGTH = 6

DEFAULT_KEY = "00" * KEY_BYTES
DEFAULT_IV = "00" * NONCE_BYTES


class HexFormatError(ValueError):
    pass


class HexLengthError(ValueError):
    pass


def parse_hex(text: str, expected_octets: int | None = None, what: str = "value") -> bytes:
    cleaned = "".join(text.split())
    if expected_octets is not None and len(cleaned) != 2 * expected_octets:
        raise HexLengthError(
            f"{what} must be {2 * expected_octets} hex digits, got {len(cleaned)}")
    try:
        return bytes.fromhex(cleaned)
    except ValueError as exc:
        raise HexFormatError(f"{what} is not valid hex: {exc}") from None


def _lfsr_from_env() -> LfsrSpec:
    raw = os.environ.get("SEPAR_LFSR_TAPS")
    if not raw:
        return DEFAULT_LFSR
    try:
        taps = int(raw, 16)
    except ValueError:
        raise HexFormatError(f"SEPAR_LFSR_TAPS is not valid hex: {raw!r}") from None
    return LfsrSpec(taps=taps, description=f"mask {taps:#06x} (environment override)")


# ---------------------------------------------------------------------------
# data I/O
# ---------------------------------------------------------------------------

def _read_input(path: str, fmt: str) -> bytes:
    if path == "-":
        raw = sys.stdin.buffer.read()
    else:
        raw = Path(path).read_bytes()
    if fmt == "bin":
        return raw
    text = raw.decode("ascii", errors="strict")
    lines = [ln for ln in text.splitlines() if not ln.lstrip().startswith("#")]
    return parse_hex("".join(lines), what="input data")


def _write_output(path: str, data: bytes, fmt: str, header: str | None = None) -> None:
    if fmt == "bin":
        payload = data
    else:
        text = ""
        if header:
            text += f"# {header}\n"
        text += data.hex().upper() + "\n"
        payload = text.encode("ascii")
    if path == "-":
        sys.stdout.buffer.write(payload)
        sys.stdout.buffer.flush()
    else:
        Path(path).write_bytes(payload)


def _write_text(path: str, text: str) -> None:
    if path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


# ---------------------------------------------------------------------------
# cipher commands
# ---------------------------------------------------------------------------

def cmd_encrypt(args: argparse.Namespace) -> int:
    key = parse_hex(args.key, KEY_BYTES, "key")
    iv = parse_hex(args.iv, NONCE_BYTES, "iv")
    data = _read_input(args.infile, args.format)
    cipher = Separ(key, _lfsr_from_env())
    padded = len(data) % 2 == 1
    if padded and not args.pad_zero:
        raise OddLengthError(
            "input length is odd; rerun with --pad-zero to zero-pad")
    ct = cipher.encrypt(iv, data, pad_zero=args.pad_zero)
    header = "zero-padded: 1 octet appended" if padded else None
    _write_output(args.outfile, ct, args.format, header)
    return EXIT_OK


def cmd_decrypt(args: argparse.Namespace) -> int:
    key = parse_hex(args.key, KEY_BYTES, "key")
    iv = parse_hex(args.iv, NONCE_BYTES, "iv")
    data = _read_input(args.infile, args.format)
    pt = Separ(key, _lfsr_from_env()).decrypt(iv, data)
    _write_output(args.outfile, pt, args.format)
    return EXIT_OK


def cmd_keystream(args: argparse.Namespace) -> int:
    key = parse_hex(args.key, KEY_BYTES, "key")
    iv = parse_hex(args.iv, NONCE_BYTES, "iv")
    ks = Separ(key, _lfsr_from_env()).keystream(iv, args.words)
    _write_output(args.outfile, ks, args.format)
    return EXIT_OK


# ---------------------------------------------------------------------------
# analysis commands
# ---------------------------------------------------------------------------

def _table_csv(table) -> str:
    return "\n".join(",".join(str(int(v)) for v in row) for row in table) + "\n"


def cmd_analyze_sbox(args: argparse.Namespace) -> int:
    if not 1 <= args.id <= 4:
        raise HexLengthError("S-box id must be in 1..4")
    box = SBOXES[args.id - 1]
    ddt = analysis.compute_ddt(box)
    lat = analysis.compute_lat(box)
    outdir = Path(args.out_dir)
    outdir.mkdir(parents=True, exist_ok=True)
    (outdir / f"sbox{args.id}_ddt.csv").write_text(_table_csv(ddt.counts))
    (outdir / f"sbox{args.id}_lat.csv").write_text(_table_csv(lat.biases))
    report = analysis.golden_check(box)
    print(f"S-box {args.id}: bijective={report.bijective} "
          f"max_diff_prob={report.max_diff_prob} "
          f"max_lin_prob={report.max_lin_prob} "
          f"degree={report.degree} golden={report.is_golden}")
    print(f"wrote {outdir}/sbox{args.id}_ddt.csv and sbox{args.id}_lat.csv")
    return EXIT_OK


def cmd_analyze_avalanche(args: argparse.Namespace) -> int:
    key = parse_hex(args.key, KEY_BYTES, "key")
    iv = parse_hex(args.iv, NONCE_BYTES, "iv")
    rng = random.Random(args.seed)
    message_octets = args.message_bits // 8
    distances = []
    for trial in range(args.trials):
        pt = rng.randbytes(message_octets)
        if args.bit is not None:
            bit = args.bit
        elif args.bits == "low-nibble":
            # bits 12..15 of the first word: the positions from which a
            # perturbation reaches every later position of the stream
            bit = 12 + rng.randrange(4)
        else:
            bit = rng.randrange(8 * message_octets)
        rep = analysis.avalanche(key, iv, pt, args.target, bit,
                                 lfsr_spec=_lfsr_from_env())
        distances.append(rep.distance)
        print(json.dumps({"trial": trial, "target": rep.flip_target,
                          "bit": rep.flip_bit, "distance": rep.distance,
                          "total_bits": rep.total_bits}))
    mean = sum(distances) / len(distances)
    print(json.dumps({"trials": args.trials, "mean_distance": mean,
                      "total_bits": 8 * message_octets}))
    return EXIT_OK


def cmd_analyze_stats(args: argparse.Namespace) -> int:
    key = parse_hex(args.key, KEY_BYTES, "key")
    rng = random.Random(args.seed)
    cipher = Separ(key, _lfsr_from_env())
    octets = args.bits // 8
    for sample in range(args.samples):
        iv = rng.randbytes(NONCE_BYTES)
        ks = cipher.keystream(iv, octets // 2)
        for rep in analysis.nist_subset(ks):
            print(json.dumps({"sample": sample, "iv": iv.hex().upper(),
                              "test": rep.name, "statistic": rep.statistic,
                              "p_value": rep.p_value, "passed": rep.passed,
                              "n_bits": rep.n_bits}))
        print(json.dumps({"sample": sample, "test": "entropy",
                          "bits_per_octet": analysis.entropy(ks)}))
    return EXIT_OK


def cmd_analyze_diff(args: argparse.Namespace) -> int:
    p_min = Fraction(args.pmin) if "/" in args.pmin else Fraction(float(args.pmin))
    chars = analysis.characteristic_search(args.rounds, p_min)
    lines = [f"{c.differences[0]:04X} -> {c.differences[-1]:04X} "
             f"p={c.probability.numerator}/{c.probability.denominator}"
             for c in chars]
    _write_text(args.outfile, "\n".join(lines) + ("\n" if lines else ""))
    if args.outfile != "-":
        print(f"{len(chars)} characteristics -> {args.outfile}")
    return EXIT_OK


def cmd_analyze_complexity(args: argparse.Namespace) -> int:
    eqs, vars_ = analysis.algebraic_complexity(
        args.sboxes_per_encblock, args.encblocks, args.keyschedule_sboxes)
    print(json.dumps({"sboxes_per_encblock": args.sboxes_per_encblock,
                      "encblocks": args.encblocks,
                      "keyschedule_sboxes": args.keyschedule_sboxes,
                      "equations": eqs, "variables": vars_}))
    return EXIT_OK


# ---------------------------------------------------------------------------
# bench and vectors
# ---------------------------------------------------------------------------

def cmd_bench(args: argparse.Namespace) -> int:
    key = parse_hex(args.key, KEY_BYTES, "key")
    iv = parse_hex(args.iv, NONCE_BYTES, "iv")
    sizes = [int(s) for s in args.sizes.split(",")]
    results = []
    for bits in sizes:
        for op in ("encrypt", "decrypt"):
            init, work = bench.run_bench(key, iv, bits, args.reps, op,
                                         seed=args.seed,
                                         lfsr_spec=_lfsr_from_env())
            if op == "encrypt":
                results.append(init)
            results.append(work)
    _write_text(args.outfile, bench.results_csv(results))
    return EXIT_OK


def parse_vector_file(text: str) -> dict[str, bytes]:
    fields: dict[str, bytes] = {}
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        name, _, value = line.partition("=")
        fields[name.strip().lower()] = parse_hex(value, what=name.strip())
    missing = {"key", "iv", "pt", "ct"} - fields.keys()
    if missing:
        raise HexFormatError(f"vector file missing fields: {sorted(missing)}")
    return fields


def default_vector_dir() -> Path:
    return Path(str(resources.files("separ").joinpath("vectors")))


def check_vector_file(path: Path) -> bool:
    v = parse_vector_file(path.read_text())
    cipher = Separ(v["key"], _lfsr_from_env())
    ct = cipher.encrypt(v["iv"], v["pt"])
    pt = cipher.decrypt(v["iv"], v["ct"])
    return ct == v["ct"] and pt == v["pt"]


def cmd_vectors_check(args: argparse.Namespace) -> int:
    directory = Path(args.dir) if args.dir else default_vector_dir()
    files = sorted(directory.glob("*.txt"))
    if not files:
        print(f"no vector files found in {directory}", file=sys.stderr)
        return EXIT_IO
    failures = 0
    for f in files:
        ok = check_vector_file(f)
        print(f"{'PASS' if ok else 'FAIL'} {f.name}")
        failures += not ok
    return EXIT_OK if failures == 0 else 1


# ---------------------------------------------------------------------------
# argument wiring
# ---------------------------------------------------------------------------

def _add_key_iv(p: argparse.ArgumentParser) -> None:
    p.add_argument("--key", default=DEFAULT_KEY,
                   help=f"{2 * KEY_BYTES}-digit hex master key")
    p.add_argument("--iv", default=DEFAULT_IV,
                   help=f"{2 * NONCE_BYTES}-digit hex initialization vector")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="separ",
        description="SEPAR cipher, analysis workbench, and benchmarks")
    sub = parser.add_subparsers(dest="command", required=True)

    for name, fn in (("encrypt", cmd_encrypt), ("decrypt", cmd_decrypt)):
        p = sub.add_parser(name, help=f"{name} a file or stream")
        _add_key_iv(p)
        p.add_argument("--in", dest="infile", default="-", help="input path or -")
        p.add_argument("--out", dest="outfile", default="-", help="output path or -")
        p.add_argument("--format", choices=("hex", "bin"), default="bin")
        if name == "encrypt":
            p.add_argument("--pad-zero", action="store_true",
                           help="zero-pad odd-length input")
        p.set_defaults(fn=fn)

    p = sub.add_parser("keystream", help="emit encrypted zero words")
    _add_key_iv(p)
    p.add_argument("--words", type=int, default=1024, help="16-bit words to emit")
    p.add_argument("--out", dest="outfile", default="-")
    p.add_argument("--format", choices=("hex", "bin"), default="bin")
    p.set_defaults(fn=cmd_keystream)

    pa = sub.add_parser("analyze", help="cryptanalysis reports")
    asub = pa.add_subparsers(dest="analysis", required=True)

    p = asub.add_parser("sbox", help="DDT/LAT tables and golden criteria")
    p.add_argument("--id", type=int, required=True, help="S-box number 1..4")
    p.add_argument("--out-dir", default=".")
    p.set_defaults(fn=cmd_analyze_sbox)

    p = asub.add_parser("avalanche", help="bit-flip diffusion measurements")
    _add_key_iv(p)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--message-bits", type=int, default=128)
    p.add_argument("--target", choices=("plaintext", "key", "iv"),
                   default="plaintext")
    p.add_argument("--bit", type=int, default=None,
                   help="fixed flip position (default: random per trial)")
    p.add_argument("--bits", choices=("low-nibble", "uniform"),
                   default="low-nibble",
                   help="random flip position distribution")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(fn=cmd_analyze_avalanche)

    p = asub.add_parser("stats", help="randomness test battery on keystream")
    p.add_argument("--key", default=DEFAULT_KEY)
    p.add_argument("--bits", type=int, default=1_000_000)
    p.add_argument("--samples", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(fn=cmd_analyze_stats)

    p = asub.add_parser("diff", help="differential characteristic search")
    p.add_argument("--rounds", type=int, required=True)
    p.add_argument("--pmin", required=True,
                   help="probability threshold, e.g. 0.25 or 1/1024")
    p.add_argument("--out", dest="outfile", default="-")
    p.set_defaults(fn=cmd_analyze_diff)

    p = asub.add_parser("complexity", help="algebraic equation/variable counts")
    p.add_argument("--sboxes-per-encblock", type=int, default=18)
    p.add_argument("--encblocks", type=int, default=16)
    p.add_argument("--keyschedule-sboxes", type=int, default=32)
    p.set_defaults(fn=cmd_analyze_complexity)

    p = sub.add_parser("bench", help="timing and throughput measurements")
    _add_key_iv(p)
    p.add_argument("--sizes", default="64,128,192", help="message sizes in bits")
    p.add_argument("--reps", type=int, default=100)
    p.add_argument("--seed", type=int, default=0x5EBA)
    p.add_argument("--out", dest="outfile", default="-")
    p.set_defaults(fn=cmd_bench)

    pv = sub.add_parser("vectors", help="golden vector management")
    vsub = pv.add_subparsers(dest="vectors_cmd", required=True)
    p = vsub.add_parser("check", help="re-encrypt stored vectors and compare")
    p.add_argument("--dir", default=None, help="vector directory override")
    p.set_defaults(fn=cmd_vectors_check)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except HexFormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_HEX
    except HexLengthError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_LENGTH
    except OddLengthError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ODD_LENGTH
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
