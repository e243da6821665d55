"""Command-line front end.

Exit codes: 0 success, 1 usage error, 2 I/O or file-format error,
3 invalid parameter or data.
"""

import argparse
import csv
import json
import math
import os
import sys
import time
from pathlib import Path

import numpy as np

from . import __version__
from .analysis import (
    DEFAULT_CORRELATION_SEED,
    DEFAULT_NOISE_SEED,
    DEFAULT_PAIRS,
    DIRECTIONS,
    PAPER_KEY_SPACE,
    add_gaussian_noise,
    analyze_image,
    occlude,
    psnr,
    quantize_complex,
    sensitivity_sweep,
    signed_log_grid,
)
from .cipher import PARAM_NAMES, KeyBundle, decrypt, derive_discards, encrypt
from .dlct import DIRECT_MAX_ELEMENTS, ChirpRates, dlct2_forward, dlct2_forward_direct, dlct2_inverse
from .exceptions import DLCTError, FormatError
from .imageio import (
    is_cipher_file,
    load_pgm,
    read_cipher,
    read_cipher_file,
    read_keys,
    read_pgm,
    write_cipher,
    write_keys,
    write_pgm,
)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_IO = 2
EXIT_DOMAIN = 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _check_outputs(args, inputs, outputs):
    ins = {Path(p).resolve() for p in inputs if p}
    for out in outputs:
        if out and Path(out).resolve() in ins:
            raise UsageError(f"output {out} would overwrite an input file")


def _cmd_keygen(args):
    if args.image:
        p1, p2 = derive_discards(read_pgm(args.image))
    elif args.p1 is None or args.p2 is None:
        raise UsageError("keygen needs --image or both --p1 and --p2")
    else:
        p1, p2 = args.p1, args.p2
    keys = KeyBundle.from_values(args.x0, args.mu1, p1, args.beta_x, args.beta_y,
                                 args.y0, args.mu2, p2)
    _check_outputs(args, [args.image], [args.out])
    write_keys(args.out, keys)


def _cmd_encrypt(args):
    _check_outputs(args, [args.input, args.key], [args.out])
    img = read_pgm(args.input)
    keys = read_keys(args.key)
    write_cipher(args.out, encrypt(img, keys, workers=args.threads))


def _cmd_decrypt(args):
    _check_outputs(args, [args.input, args.key], [args.out])
    c = read_cipher(args.input)
    keys = read_keys(args.key)
    write_pgm(args.out, decrypt(c, keys, workers=args.threads))


def _cmd_transform(args):
    _check_outputs(args, [args.input], [args.out])
    data = Path(args.input).read_bytes()
    matrix = read_cipher_file(data) if is_cipher_file(data) else load_pgm(data)
    rates = ChirpRates(args.beta_x, args.beta_y)
    if args.inverse:
        out = dlct2_inverse(matrix, rates, workers=args.threads)
    else:
        out = dlct2_forward(matrix, rates, workers=args.threads)
    write_cipher(args.out, out)


def _write_csv(path, header, rows):
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)


def _dump_scatter(directory, label, samples, histogram):
    directory.mkdir(parents=True, exist_ok=True)
    for direction, s in samples.items():
        _write_csv(directory / f"{direction}_{label}.csv", ("x", "y"),
                   zip(s.x.astype(int).tolist(), s.y.astype(int).tolist()))
    _write_csv(directory / f"histogram_{label}.csv", ("value", "count"), enumerate(histogram))


def _cmd_analyze(args):
    _check_outputs(args, [args.plain, args.cipher], [args.report])
    plain = read_pgm(args.plain)
    result = {
        "pairs": args.pairs,
        "seed": args.seed,
        "key_space": {"config": PAPER_KEY_SPACE.name, "note": PAPER_KEY_SPACE.note},
    }
    report, samples = analyze_image(plain, pairs=args.pairs, seed=args.seed)
    result["plain"] = report.to_dict()
    if args.scatter:
        _dump_scatter(Path(args.scatter), "plain", samples, report.histogram)
    if args.cipher:
        shown = quantize_complex(read_cipher(args.cipher))
        creport, csamples = analyze_image(shown, reference=plain if shown.shape == plain.shape else None,
                                          pairs=args.pairs, seed=args.seed)
        result["cipher"] = creport.to_dict()
        if args.scatter:
            _dump_scatter(Path(args.scatter), "cipher", csamples, creport.histogram)
    Path(args.report).write_text(json.dumps(result, indent=2) + "\n", encoding="utf-8")


def _cmd_attack(args):
    _check_outputs(args, [args.input, args.key, args.plain], [args.out, args.attacked])
    c = read_cipher(args.input)
    keys = read_keys(args.key)
    plain = read_pgm(args.plain)
    if args.kind == "occlude":
        attacked = occlude(c, args.fraction)
        label = f"occlusion={args.fraction:g}"
    else:
        attacked = add_gaussian_noise(c, args.sigma, seed=args.seed)
        label = f"sigma={args.sigma:g} seed={args.seed}"
    recovered = decrypt(attacked, keys, workers=args.threads)
    if args.attacked:
        write_cipher(args.attacked, attacked)
    if args.out:
        write_pgm(args.out, recovered)
    value = psnr(plain, recovered)
    print(f"{label} psnr_db={'inf' if math.isinf(value) else format(value, '.4f')}")


def _cmd_sweep(args):
    _check_outputs(args, [args.plain, args.key], [args.out, args.json])
    plain = read_pgm(args.plain)
    keys = read_keys(args.key)
    grid = signed_log_grid(args.log_min, args.log_max, args.points)
    if args.param in ("p1", "p2"):
        grid = sorted({float(round(d)) for d in grid})
    curve = sensitivity_sweep(plain, keys, args.param, grid, threads=args.threads)
    _write_csv(args.out, ("deviation", "mse"),
               ((repr(d), repr(m)) for d, m in zip(curve.deviations, curve.mse_values)))
    if args.json:
        Path(args.json).write_text(json.dumps(curve.to_dict(), indent=2) + "\n", encoding="utf-8")
    if curve.skipped:
        print(f"skipped {len(curve.skipped)} out-of-domain deviation(s)", file=sys.stderr)


def _best_time(fn, iters):
    best = math.inf
    for _ in range(iters):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def _cmd_bench(args):
    rng = np.random.default_rng(0)
    rates = ChirpRates(1.5, -3.5)
    n = args.size
    big = rng.random((n, n)) + 1j * rng.random((n, n))
    side = min(n, math.isqrt(DIRECT_MAX_ELEMENTS))
    small = big[:side, :side]
    img = rng.integers(0, 256, (n, n), dtype=np.uint8)
    keys = KeyBundle.from_values(0.31, 3.8, 0, 1.5, -3.5, 0.25, 3.7, 0)
    rows = [
        ("fast", n, _best_time(lambda: dlct2_forward(big, rates, workers=args.threads), args.iters)),
        ("fast", side, _best_time(lambda: dlct2_forward(small, rates, workers=args.threads), args.iters)),
        ("direct", side, _best_time(lambda: dlct2_forward_direct(small, rates), max(1, min(args.iters, 3)))),
        ("encrypt", n, _best_time(lambda: encrypt(img, keys, workers=args.threads), args.iters)),
    ]
    for name, size, seconds in rows:
        print(json.dumps({"op": name, "size": size, "seconds": seconds}))


def build_parser():
    parser = _Parser(prog="dlctcrypt", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--threads", type=int, default=os.cpu_count() or 1,
                        help="worker threads for FFTs and sweeps (default: CPU count)")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("keygen", help="write a key file")
    for flag in ("--x0", "--mu1", "--beta-x", "--beta-y", "--y0", "--mu2"):
        p.add_argument(flag, type=float, required=True)
    p.add_argument("--p1", type=int)
    p.add_argument("--p2", type=int)
    p.add_argument("--image", help="plain PGM whose pixel sum sets p1 and p2")
    p.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_keygen)

    for name, func in (("encrypt", _cmd_encrypt), ("decrypt", _cmd_decrypt)):
        p = sub.add_parser(name)
        p.add_argument("--in", dest="input", required=True)
        p.add_argument("--key", required=True)
        p.add_argument("--out", required=True)
        p.set_defaults(func=func)

    p = sub.add_parser("transform", help="standalone 2D DLCT of a PGM or cipher file")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--beta-x", type=float, required=True)
    p.add_argument("--beta-y", type=float, required=True)
    p.add_argument("--inverse", action="store_true")
    p.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_transform)

    p = sub.add_parser("analyze", help="metrics report for a plain image and its ciphertext")
    p.add_argument("--plain", required=True)
    p.add_argument("--cipher")
    p.add_argument("--report", required=True)
    p.add_argument("--scatter", help="directory for x,y scatter and histogram CSVs")
    p.add_argument("--pairs", type=int, default=DEFAULT_PAIRS)
    p.add_argument("--seed", type=int, default=DEFAULT_CORRELATION_SEED)
    p.set_defaults(func=_cmd_analyze)

    p = sub.add_parser("attack", help="occlude or add noise to a ciphertext, decrypt, print PSNR")
    kinds = p.add_subparsers(dest="kind", required=True, parser_class=_Parser)
    occ = kinds.add_parser("occlude")
    occ.add_argument("--fraction", type=float, required=True, choices=(0.25, 0.5, 0.75))
    noise = kinds.add_parser("noise")
    noise.add_argument("--sigma", type=float, required=True)
    noise.add_argument("--seed", type=int, default=DEFAULT_NOISE_SEED)
    for k in (occ, noise):
        k.add_argument("--in", dest="input", required=True)
        k.add_argument("--key", required=True)
        k.add_argument("--plain", required=True)
        k.add_argument("--out", help="write the recovered image here")
        k.add_argument("--attacked", help="write the attacked ciphertext here")
        k.set_defaults(func=_cmd_attack)

    p = sub.add_parser("sweep", help="MSE against deviation of one key parameter")
    p.add_argument("--param", required=True, choices=PARAM_NAMES)
    p.add_argument("--log-min", type=float, default=1e-8)
    p.add_argument("--log-max", type=float, default=1e-1)
    p.add_argument("--points", type=int, default=40)
    p.add_argument("--plain", required=True)
    p.add_argument("--key", required=True)
    p.add_argument("--out", required=True, help="CSV with header deviation,mse")
    p.add_argument("--json", help="also write the curve as JSON")
    p.set_defaults(func=_cmd_sweep)

    p = sub.add_parser("bench", help="time the fast and direct transforms")
    p.add_argument("--size", type=int, default=256)
    p.add_argument("--iters", type=int, default=10)
    p.set_defaults(func=_cmd_bench)
    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.threads < 1:
            raise UsageError("--threads must be at least 1")
        args.func(args)
    except UsageError as exc:
        print(f"dlctcrypt: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (OSError, FormatError) as exc:
        print(f"dlctcrypt: {exc}", file=sys.stderr)
        return EXIT_IO
    except DLCTError as exc:
        print(f"dlctcrypt: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
