"""Command-line front end: generation, transforms, and the seeded
experiment suite.  All randomized runs require --seed and rerun
byte-identically; CSV rows carry a hash of the run configuration."""

from __future__ import annotations

import argparse
import csv
import hashlib
import io
import json
import math
import os
import random
import sys
import tempfile
from fractions import Fraction
from typing import Dict, List, Optional, Sequence

from . import booleanity, enumeration, fourier, gf2, learn, sparsify, zoo
from .seeding import trial_rng


class DomainError(Exception):
    pass


def _atomic_write(path: str, text: str) -> None:
    d = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=d, prefix=".tmp-", text=True)
    try:
        with os.fdopen(fd, "w", newline="") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _config_hash(args: Dict) -> str:
    # the hash covers the run parameters, not where the output lands or
    # process-local handler objects
    kept = {k: v for k, v in args.items() if k not in ("func", "out")}
    blob = json.dumps(kept, sort_keys=True, default=str).encode()
    return hashlib.sha256(blob).hexdigest()[:12]


def _emit_csv(path: Optional[str], header: List[str], rows: List[List], cfg: str) -> None:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header + ["config"])
    for row in rows:
        writer.writerow(list(row) + [cfg])
    if path:
        _atomic_write(path, buf.getvalue())
    else:
        sys.stdout.write(buf.getvalue())


def _parse_grid(text: str) -> List[int]:
    """`a:b:step` (inclusive of b when hit) or a comma list of ints."""
    if ":" in text:
        parts = text.split(":")
        if len(parts) == 2:
            a, b, step = int(parts[0]), int(parts[1]), 1
        elif len(parts) == 3:
            a, b, step = int(parts[0]), int(parts[1]), int(parts[2])
        else:
            raise DomainError(f"bad grid {text!r}")
        if step <= 0:
            raise DomainError("grid step must be positive")
        return list(range(a, b + 1, step))
    return [int(v) for v in text.split(",")]


def _load_table(spec: str) -> fourier.TruthTable:
    """A path to a truth-table file, or a zoo spec like `double-and:n=6`."""
    if os.path.exists(spec):
        with open(spec) as fh:
            return fourier.table_from_text(fh.read())
    if ":" in spec:
        return zoo.parse_zoo_spec(spec).build()
    raise DomainError(f"no such file and not a zoo spec: {spec!r}")


def _cmd_wht(args) -> None:
    with open(args.input) as fh:
        text = fh.read()
    if args.inverse:
        table = fourier.inverse_wht(fourier.spectrum_from_text(text))
        out_text = fourier.table_to_text(table)
    else:
        spec = fourier.wht(fourier.table_from_text(text))
        out_text = fourier.spectrum_to_text(spec)
        print(f"sparsity={fourier.sparsity(spec)}")
    if args.out:
        _atomic_write(args.out, out_text)
    else:
        sys.stdout.write(out_text)


def _cmd_gen(args) -> None:
    spec = zoo.ZooSpec(
        family=args.family,
        n=args.n,
        k=args.k,
        codim=args.codim,
        scale=Fraction(args.scale) if args.scale else None,
        seed=args.seed,
    )
    table = spec.build()
    text = fourier.table_to_text(table)
    if args.out:
        _atomic_write(args.out, text)
    else:
        sys.stdout.write(text)


def _cmd_sparsify(args) -> None:
    table = _load_table(args.input)
    spectrum = fourier.wht(table)
    eps = Fraction(args.eps)
    delta = Fraction(args.delta)
    if args.size is not None:
        size = args.size
    else:
        size = sparsify.chernoff_size(fourier.spectral_norm(spectrum), eps, delta)
    rows = []
    for trial in range(args.trials):
        rng = trial_rng(args.seed, trial)
        approx = sparsify.sample_approximant(spectrum, size, rng)
        bad = sparsify.measure_bad_fraction(table, approx, eps)
        rows.append([trial, size, f"{bad.numerator}/{bad.denominator}", float(bad)])
    cfg = _config_hash(vars(args))
    _emit_csv(args.out, ["trial", "size", "bad_fraction", "bad_fraction_float"], rows, cfg)


def _parse_class(text: str, n: int, k: int) -> enumeration.CandidateClass:
    if text == "exhaustive":
        return enumeration.CandidateClass.exhaustive(n, k)
    if text.startswith("affine:"):
        return enumeration.CandidateClass.affine_indicators(n, int(text.split(":")[1]))
    raise DomainError(f"unknown class {text!r} (use exhaustive or affine:CODIM)")


def _cmd_listdecode(args) -> None:
    n, k = args.n, args.k
    if args.center == "zero":
        center = fourier.TruthTable(n, [0] * (1 << n))
    else:
        center = _load_table(args.center)
    d_grid = _parse_grid(args.d)
    rows = []
    if args.cls == "exhaustive":
        curve = enumeration.growth_curve(n, k, center, d_grid)
        rows = [[d, count, lg] for d, count, lg in curve]
    else:
        cls = _parse_class(args.cls, n, k)
        for d in d_grid:
            count, _ = enumeration.list_decode_count(center, k, d, cls)
            rows.append([d, count, math.log2(count) if count else float("-inf")])
    cfg = _config_hash(vars(args))
    _emit_csv(args.out, ["d", "count", "log2_count"], rows, cfg)


def _cmd_learn(args) -> None:
    cls = _parse_class(args.cls, args.n, args.k)
    q_grid = _parse_grid(args.q_grid)
    rng = trial_rng(args.seed, 0)
    curve = learn.sample_complexity_curve(cls, q_grid, args.trials, rng)
    cfg = _config_hash(vars(args))
    _emit_csv(args.out, ["q", "success_rate"], [[q, rate] for q, rate in curve], cfg)


def _cmd_test(args) -> None:
    table = _load_table(args.input)
    rows = []
    for trial in range(args.trials):
        rng = trial_rng(args.seed, trial)
        if args.mode == "naive":
            verdict = booleanity.naive_tester(table, args.k, rng)
        else:
            cfg_obj = booleanity.TesterConfig(
                k=args.k,
                constant_c=Fraction(args.c),
                consistency_mode=args.consistency,
            )
            verdict = booleanity.subspace_tester(table, cfg_obj, rng)
        cert = verdict.certificate.to_string() if verdict.certificate else ""
        rows.append(
            [trial, "accept" if verdict.accept else "reject", verdict.queries_used, cert]
        )
    cfg = _config_hash(vars(args))
    _emit_csv(args.out, ["trial", "verdict", "queries_used", "certificate_point"], rows, cfg)


_EXPERIMENT_KEYS = {
    "restriction": {"kind", "input", "k", "r_grid", "trials", "seed", "out"},
    "event-e": {"kind", "n", "q", "trials", "seed", "out"},
}


def _cmd_experiment(args) -> None:
    with open(args.config) as fh:
        cfg = json.load(fh)
    kind = cfg.get("kind")
    if kind not in _EXPERIMENT_KEYS:
        raise DomainError(f"unknown experiment kind {kind!r}")
    extra = set(cfg) - _EXPERIMENT_KEYS[kind]
    if extra:
        raise DomainError(f"unknown config fields: {sorted(extra)}")
    if "seed" not in cfg:
        raise DomainError("experiment configs must carry a seed")
    cfg_hash = _config_hash(cfg)
    if kind == "restriction":
        table = _load_table(cfg["input"])
        rows = []
        for i, r in enumerate(_parse_grid(str(cfg["r_grid"]))):
            rng = trial_rng(cfg["seed"], i)
            p = booleanity.restriction_experiment(table, cfg["k"], r, cfg["trials"], rng)
            l = booleanity.density_bound_l(cfg["k"])
            rows.append([r, cfg["trials"], p, max(0.0, 1 - l / (1 << r))])
        _emit_csv(cfg.get("out"), ["r", "trials", "non_boolean_rate", "bound"], rows, cfg_hash)
    elif kind == "event-e":
        rng = trial_rng(cfg["seed"], 0)
        n, q = cfg["n"], cfg["q"]
        points = [gf2.BitVec(n, rng.randrange(1 << n)) for _ in range(q)]
        est = booleanity.event_e_estimator(n, points, cfg["trials"], trial_rng(cfg["seed"], 1))
        _emit_csv(cfg.get("out"), ["n", "q", "trials", "event_e_rate"], [[n, q, cfg["trials"], est]], cfg_hash)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="boolfourier",
        description="Fourier analysis and Booleanity experiments on the hypercube",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("wht", help="Walsh-Hadamard transform of a truth-table file")
    p.add_argument("--input", required=True)
    p.add_argument("--out")
    p.add_argument("--inverse", action="store_true")
    p.set_defaults(func=_cmd_wht)

    p = sub.add_parser("gen", help="generate a zoo function")
    p.add_argument("--family", required=True, choices=zoo.FAMILIES)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int)
    p.add_argument("--codim", type=int)
    p.add_argument("--scale")
    p.add_argument("--seed", type=int)
    p.add_argument("--out")
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("sparsify", help="sampled sparse approximation error")
    p.add_argument("--input", required=True)
    p.add_argument("--eps", required=True)
    p.add_argument("--delta", required=True)
    p.add_argument("--size", type=int)
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--out")
    p.set_defaults(func=_cmd_sparsify)

    p = sub.add_parser("listdecode", help="count sparse Boolean functions near a center")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--d", required=True, help="single d, comma list, or a:b:step")
    p.add_argument("--center", default="zero")
    p.add_argument("--class", dest="cls", default="exhaustive")
    p.add_argument("--out")
    p.set_defaults(func=_cmd_listdecode)

    p = sub.add_parser("learn", help="sample-complexity curve for elimination learning")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--class", dest="cls", default="exhaustive")
    p.add_argument("--q-grid", required=True)
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--out")
    p.set_defaults(func=_cmd_learn)

    p = sub.add_parser("test", help="run a Booleanity tester repeatedly")
    p.add_argument("--input", required=True, help="truth-table file or zoo spec")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--mode", choices=("naive", "subspace"), default="naive")
    p.add_argument("--consistency", choices=("exact", "certificate"), default="certificate")
    p.add_argument("--c", default="2")
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--out")
    p.set_defaults(func=_cmd_test)

    p = sub.add_parser("experiment", help="run an experiment from a JSON config")
    p.add_argument("--config", required=True)
    p.set_defaults(func=_cmd_experiment)

    return parser


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 2 if e.code not in (0, None) else 0
    try:
        args.func(args)
    except (DomainError, ValueError, OSError, json.JSONDecodeError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
