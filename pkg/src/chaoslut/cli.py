"""Command-line entry point: ``chaoslut <subcommand> ...``.

Exit codes: 0 success, 1 usage error, 2 I/O error, 3 validation error
(bad key or parameters), 4 cipher error (degenerate orbit).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import random
import sys
from pathlib import Path

from . import pgm
from .analysis import (
    DEFAULT_DELTA,
    attack_demo,
    sensitivity_tables,
    single_component_perturbations,
)
from .cipher import SecretKey, decrypt, encrypt, parse_key, serialize_key
from .errors import CipherError, MalformedKey, PgmError, ValidationError
from .metrics import DEFAULT_PAIRS, DEFAULT_SAMPLE_SEED, DIRECTIONS, histogram, sample_adjacent_pairs
from .report import build_report
from .rng import Lcg64

EXIT_OK, EXIT_USAGE, EXIT_IO, EXIT_VALIDATION, EXIT_CIPHER = 0, 1, 2, 3, 4


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(f"{self.prog}: {message}")


def generate_key(seed: int | None = None) -> SecretKey:
    """Random key with x-components in [0.1, 0.9] and mu-components in [3.9, 4.0].

    With ``seed`` the draws come from the documented LCG (reproducible test
    keys); without it they come from the operating system's CSPRNG.
    """
    if seed is None:
        uniform = random.SystemRandom().random
    else:
        uniform = Lcg64(seed).uniform
    x0 = 0.1 + 0.8 * uniform()
    mu0 = 3.9 + 0.1 * uniform()
    x0xor = 0.1 + 0.8 * uniform()
    mu0xor = 3.9 + 0.1 * uniform()
    return SecretKey(x0, mu0, x0xor, mu0xor)


def read_key(path) -> SecretKey:
    raw = Path(path).read_bytes()
    try:
        text = raw.decode("ascii")
    except UnicodeDecodeError:
        raise MalformedKey(f"{path}: key file is not ASCII") from None
    return parse_key(text.strip())


def write_key(key: SecretKey, path) -> None:
    Path(path).write_text(serialize_key(key) + "\n", encoding="ascii")


def _position(text: str) -> tuple[int, int]:
    try:
        r, c = (int(v) for v in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected ROW,COL, got {text!r}") from None
    return r, c


def _write_csv(path: Path, header, rows) -> None:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    path.write_text(buf.getvalue(), encoding="ascii")


def _dump_json(obj, path) -> None:
    Path(path).write_text(json.dumps(obj, indent=2, sort_keys=True) + "\n", encoding="ascii")


def cmd_keygen(args):
    write_key(generate_key(args.seed), args.out)


def cmd_encrypt(args):
    pgm.save(encrypt(pgm.load(args.inp), read_key(args.key)), args.out)


def cmd_decrypt(args):
    pgm.save(decrypt(pgm.load(args.inp), read_key(args.key)), args.out)


def cmd_analyze(args):
    report = build_report(
        pgm.load(args.plain),
        read_key(args.key),
        sample_seed=args.sample_seed,
        sample_size=args.pairs,
        change_position=args.change_pos,
    )
    Path(args.out).write_text(report.to_json(), encoding="ascii")


def cmd_sensitivity(args):
    plain = pgm.load(args.plain)
    key = read_key(args.key)
    tables = sensitivity_tables(plain, key, single_component_perturbations(args.delta))
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    doc = {"delta": args.delta, "key_fingerprint": key.fingerprint(), "tables": {}}
    for side, by_metric in tables.items():
        for metric, matrix in by_metric.items():
            name = f"{side}_{metric}"
            doc["tables"][name] = matrix.as_dict()
            (out / f"{name}.csv").write_text(matrix.to_csv(), encoding="ascii")
    _dump_json(doc, out / "sensitivity.json")


def cmd_attack_demo(args):
    key = read_key(args.key)
    result = attack_demo(pgm.load(args.known_plain), pgm.load(args.other_plain), key)
    doc = dict(result.summary(), key_fingerprint=key.fingerprint())
    _dump_json(doc, args.out)
    if args.images:
        d = Path(args.images)
        d.mkdir(parents=True, exist_ok=True)
        for name in ("known_cipher", "keystream", "recovered_known", "other_cipher", "recovered_other"):
            pgm.save(getattr(result, name), d / f"{name}.pgm")


def cmd_plotdata(args):
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    plain = pgm.load(args.inp)
    images = {"plain": plain}
    if args.key:
        images["encrypted"] = encrypt(plain, read_key(args.key))
    for label, img in images.items():
        counts = histogram(img)
        _write_csv(out / f"histogram_{label}.csv", ["value", "count"], enumerate(counts.tolist()))
        for d in DIRECTIONS:
            sample = sample_adjacent_pairs(img, d, args.pairs, args.sample_seed)
            _write_csv(out / f"scatter_{label}_{d}.csv", ["x", "y"], sample.pairs())


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="chaoslut", description="Dynamic chaotic LUT image cipher and its evaluation suite.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("keygen", help="write a random key file")
    s.add_argument("--out", required=True)
    s.add_argument("--seed", type=int, help="reproducible key from the LCG (testing only)")
    s.set_defaults(func=cmd_keygen)

    for name, fn in (("encrypt", cmd_encrypt), ("decrypt", cmd_decrypt)):
        s = sub.add_parser(name, help=f"{name} a PGM image")
        s.add_argument("--in", dest="inp", required=True)
        s.add_argument("--key", required=True)
        s.add_argument("--out", required=True)
        s.set_defaults(func=fn)

    s = sub.add_parser("analyze", help="statistical report for one plain image")
    s.add_argument("--plain", required=True)
    s.add_argument("--key", required=True)
    s.add_argument("--sample-seed", type=int, default=DEFAULT_SAMPLE_SEED)
    s.add_argument("--pairs", type=int, default=DEFAULT_PAIRS)
    s.add_argument("--change-pos", type=_position, metavar="ROW,COL")
    s.add_argument("--out", required=True)
    s.set_defaults(func=cmd_analyze)

    s = sub.add_parser("sensitivity", help="cipher- and decipher-side key sensitivity tables")
    s.add_argument("--plain", required=True)
    s.add_argument("--key", required=True)
    s.add_argument("--delta", type=float, default=DEFAULT_DELTA)
    s.add_argument("--out", required=True, help="output directory")
    s.set_defaults(func=cmd_sensitivity)

    s = sub.add_parser("attack-demo", help="known-plaintext keystream attack")
    s.add_argument("--known-plain", required=True)
    s.add_argument("--other-plain", required=True)
    s.add_argument("--key", required=True)
    s.add_argument("--out", required=True)
    s.add_argument("--images", help="directory for the intermediate PGM images")
    s.set_defaults(func=cmd_attack_demo)

    s = sub.add_parser("plotdata", help="histogram and correlation scatter CSVs")
    s.add_argument("--in", dest="inp", required=True)
    s.add_argument("--key")
    s.add_argument("--sample-seed", type=int, default=DEFAULT_SAMPLE_SEED)
    s.add_argument("--pairs", type=int, default=DEFAULT_PAIRS)
    s.add_argument("--out", required=True, help="output directory")
    s.set_defaults(func=cmd_plotdata)
    return p


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except _UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    try:
        args.func(args)
    except ValidationError as exc:
        print(f"chaoslut: invalid input: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except CipherError as exc:
        print(f"chaoslut: cipher failure: {exc}", file=sys.stderr)
        return EXIT_CIPHER
    except (OSError, PgmError) as exc:
        print(f"chaoslut: I/O error: {exc}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
