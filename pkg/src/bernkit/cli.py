"""Command-line front end: exact Bernoulli computation, proof replay,
identity grid certification, algorithm benchmarking, and cache persistence.

Exit codes: 0 all checks passed, 1 a mathematical check failed (or a
malformed cache file), 2 usage or I/O error.  Rationals are always printed
as reduced strings, never as floating point.
"""

from __future__ import annotations

import argparse
import json
import os
import statistics
import sys
import time

from . import bernoulli as bernoulli_mod
from . import identities as identities_mod
from . import umbral as umbral_mod
from .bernoulli import BernoulliCache, CacheFormatError
from .numkit import Polynomial, format_rational

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2

CACHE_ENV_VAR = "BERNOULLI_CACHE"


def _nonneg(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError("expected an integer, got %r" % text)
    if value < 0:
        raise argparse.ArgumentTypeError("value must be >= 0, got %d" % value)
    return value


def _positive(text: str) -> int:
    value = _nonneg(text)
    if value < 1:
        raise argparse.ArgumentTypeError("value must be >= 1, got %d" % value)
    return value


def _resolve_cache_path(flag_value: str | None) -> str | None:
    return flag_value or os.environ.get(CACHE_ENV_VAR) or None


def _load_or_new(path: str | None) -> tuple[BernoulliCache, int]:
    """Open the cache file when given and present; track the loaded extent."""
    if path is not None and os.path.exists(path):
        cache = BernoulliCache.load(path)
    else:
        cache = BernoulliCache()
    return cache, cache.max_index


def _save_if_grown(cache: BernoulliCache, path: str | None, loaded_max: int) -> None:
    if path is not None and cache.max_index > loaded_max:
        cache.save(path)


def _poly_json(p: Polynomial) -> list[str]:
    return [format_rational(c, always_fraction=True) for c in p.coeffs]


def _print_json(payload: dict) -> None:
    print(json.dumps(payload))


def cmd_bernoulli(args: argparse.Namespace) -> int:
    path = _resolve_cache_path(args.cache)
    if args.method == "recurrence" and path is not None:
        cache, loaded_max = _load_or_new(path)
        cache.extend(args.n)
        value = cache[args.n]
        _save_if_grown(cache, path, loaded_max)
    else:
        value = bernoulli_mod.bernoulli_number(args.n, args.method)
    if args.format == "json":
        _print_json({"n": args.n, "value": format_rational(value, always_fraction=True)})
    else:
        print(format_rational(value))
    return EXIT_OK


def cmd_bpoly(args: argparse.Namespace) -> int:
    path = _resolve_cache_path(args.cache)
    cache, loaded_max = _load_or_new(path)
    poly = bernoulli_mod.bernoulli_polynomial(args.n, cache)
    _save_if_grown(cache, path, loaded_max)
    if args.format == "json":
        _print_json({"n": args.n, "coeffs": _poly_json(poly)})
    else:
        print(poly)
    return EXIT_OK


def cmd_prove(args: argparse.Namespace) -> int:
    params = umbral_mod.IdentityParams(args.m, args.n, args.q)
    path = _resolve_cache_path(args.cache)
    cache, loaded_max = _load_or_new(path)
    cache.extend(params.m + params.n + params.q)
    trace = umbral_mod.replay_proof(params, cache)
    _save_if_grown(cache, path, loaded_max)
    if args.format == "json":
        _print_json(
            {
                "m": params.m,
                "n": params.n,
                "q": params.q,
                "witness": _poly_json(trace.witness),
                "witness_residual": _poly_json(trace.witness_residual),
                "witness_derivative": _poly_json(trace.witness_derivative),
                "derivative_residual": _poly_json(trace.derivative_residual),
                "odd_in_shifted": trace.odd_in_shifted,
                "expansion_match": trace.expansion_match,
                "functional_value": format_rational(
                    trace.functional_value, always_fraction=True
                ),
                "holds": trace.holds,
            }
        )
    else:
        print("m: %d" % params.m)
        print("n: %d" % params.n)
        print("q: %d" % params.q)
        print("witness: %s" % trace.witness)
        print("witness residual: %s" % trace.witness_residual)
        print("witness derivative: %s" % trace.witness_derivative)
        print("derivative residual: %s" % trace.derivative_residual)
        print("odd in (x+1/2): %s" % str(trace.odd_in_shifted).lower())
        print("expansion match: %s" % str(trace.expansion_match).lower())
        print("functional value: %s" % format_rational(trace.functional_value))
        print("holds: %s" % str(trace.holds).lower())
    return EXIT_OK if trace.holds else EXIT_CHECK_FAILED


def cmd_verify(args: argparse.Namespace) -> int:
    path = _resolve_cache_path(args.cache)
    cache, loaded_max = _load_or_new(path)
    report = identities_mod.verify_grid(
        args.identity, args.m_max, args.n_max, args.q_max, cache
    )
    _save_if_grown(cache, path, loaded_max)
    if args.format == "json":
        _print_json(
            {
                "identity": report.identity_name,
                "checked": report.checked,
                "failures": [
                    {
                        "m": params.m,
                        "n": params.n,
                        "q": params.q,
                        "residual": format_rational(residual, always_fraction=True),
                    }
                    for params, residual in report.failures
                ],
                "all_zero": report.all_zero,
            }
        )
    else:
        print("identity: %s" % report.identity_name)
        print("grid: %s" % report.grid)
        print("checked: %d" % report.checked)
        print("all_zero: %s" % str(report.all_zero).lower())
        for params, residual in report.failures:
            print(
                "failure: m=%d n=%d q=%d residual=%s"
                % (params.m, params.n, params.q, format_rational(residual))
            )
    return EXIT_OK if report.all_zero else EXIT_CHECK_FAILED


def cmd_bench(args: argparse.Namespace) -> int:
    methods = [m.strip() for m in args.methods.split(",") if m.strip()]
    if not methods:
        raise ValueError("no methods given")
    for method in methods:
        if method not in bernoulli_mod.METHODS:
            raise ValueError(
                "unknown method %r; expected one of: %s"
                % (method, ", ".join(bernoulli_mod.METHODS))
            )
    rows = []
    sequences = {}
    for method in methods:
        times = []
        sequence = None
        for _ in range(args.repetitions):
            started = time.perf_counter()
            sequence = bernoulli_mod.bernoulli_sequence(args.n_max, method)
            times.append(time.perf_counter() - started)
        sequences[method] = sequence
        rows.append((method, statistics.median(times)))
    reference = sequences[methods[0]]
    agree = all(sequences[m] == reference for m in methods)
    if args.format == "json":
        _print_json(
            {
                "n_max": args.n_max,
                "repetitions": args.repetitions,
                "results": [
                    {"method": method, "median_seconds": seconds}
                    for method, seconds in rows
                ],
                "values_agree": agree,
            }
        )
    else:
        print("n_max: %d  repetitions: %d" % (args.n_max, args.repetitions))
        width = max(len(method) for method, _ in rows)
        for method, seconds in rows:
            print("%-*s  %.6f s" % (width, method, seconds))
        print("values agree: %s" % str(agree).lower())
    if not agree:
        print("error: methods disagree on computed values", file=sys.stderr)
        return EXIT_CHECK_FAILED
    return EXIT_OK


def _cache_info_max_index(path: str) -> int:
    with open(path, "r", encoding="ascii") as fh:
        text = fh.read()
    lines = text.splitlines()
    if not lines:
        raise CacheFormatError("cache file is empty")
    last_index = lines[-1].split("\t", 1)[0]
    try:
        return int(last_index)
    except ValueError:
        raise CacheFormatError(
            "last record has no integer index: %r" % lines[-1]
        ) from None


def cmd_cache(args: argparse.Namespace) -> int:
    path = args.path or _resolve_cache_path(args.cache)
    if path is None:
        raise ValueError(
            "no cache path given (pass a path, --cache, or set $%s)" % CACHE_ENV_VAR
        )
    if args.action == "save":
        cache = BernoulliCache().extend(args.n_max)
        cache.save(path)
        payload = {"action": "save", "path": str(path), "max_index": cache.max_index}
    elif args.action == "load":
        cache = BernoulliCache.load(path)
        payload = {"action": "load", "path": str(path), "max_index": cache.max_index}
    else:  # info: report the extent without validating the whole file
        payload = {
            "action": "info",
            "path": str(path),
            "max_index": _cache_info_max_index(path),
        }
    if args.format == "json":
        _print_json(payload)
    else:
        print("action: %s" % payload["action"])
        print("path: %s" % payload["path"])
        print("max_index: %d" % payload["max_index"])
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bernkit",
        description="Exact Bernoulli numbers, polynomials, proof replay, "
        "and identity grid certification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p: argparse.ArgumentParser) -> None:
        p.add_argument(
            "--format", choices=("text", "json"), default="text", help="output format"
        )
        p.add_argument(
            "--cache",
            metavar="PATH",
            default=None,
            help="cache file path (default: $%s)" % CACHE_ENV_VAR,
        )

    p = sub.add_parser("bernoulli", help="print the Bernoulli number B_n")
    p.add_argument("n", type=_nonneg)
    p.add_argument(
        "--method", choices=bernoulli_mod.METHODS, default="recurrence"
    )
    add_common(p)
    p.set_defaults(func=cmd_bernoulli)

    p = sub.add_parser("bpoly", help="print the Bernoulli polynomial B_n(x)")
    p.add_argument("n", type=_nonneg)
    add_common(p)
    p.set_defaults(func=cmd_bpoly)

    p = sub.add_parser(
        "prove", help="replay the umbral proof for parameters (m, n, q)"
    )
    p.add_argument("m", type=_nonneg)
    p.add_argument("n", type=_nonneg)
    p.add_argument("q", type=_nonneg)
    add_common(p)
    p.set_defaults(func=cmd_prove)

    p = sub.add_parser("verify", help="certify an identity as zero over a grid")
    p.add_argument("identity", help="one of: %s" % ", ".join(identities_mod.IDENTITY_NAMES))
    p.add_argument("--m-max", type=_nonneg, default=10, dest="m_max")
    p.add_argument("--n-max", type=_nonneg, default=10, dest="n_max")
    p.add_argument("--q-max", type=_nonneg, default=4, dest="q_max")
    add_common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser(
        "bench", help="time the Bernoulli algorithms from a cold cache"
    )
    p.add_argument("--n-max", type=_nonneg, default=64, dest="n_max")
    p.add_argument(
        "--methods",
        default=",".join(bernoulli_mod.METHODS),
        help="comma-separated method names",
    )
    p.add_argument("--repetitions", type=_positive, default=3)
    p.add_argument(
        "--format", choices=("text", "json"), default="text", help="output format"
    )
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("cache", help="save, load, or inspect a cache file")
    p.add_argument("action", choices=("save", "load", "info"))
    p.add_argument("path", nargs="?", default=None)
    p.add_argument(
        "--n-max",
        type=_nonneg,
        default=64,
        dest="n_max",
        help="highest index written by save",
    )
    add_common(p)
    p.set_defaults(func=cmd_cache)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CacheFormatError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_CHECK_FAILED
    except OSError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
