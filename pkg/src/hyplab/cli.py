"""Command-line front-end emitting deterministic JSON report envelopes.

Every invocation writes exactly one JSON document to the output stream
(stdout or --output); diagnostics go to the error stream.  Exit codes:

    0  run completed and every checked property holds
    1  run completed but a checked property is violated
    2  invalid input (parse error, bad shape or dimension, bad literal)
    3  numerical non-convergence (series cap or kernel iteration cap)
    4  precondition violation (zero divisor, not surjective, budget
       precondition, right-hand side out of range, failed premise)

The default seed is 42, overridable by the HYPLAB_SEED environment
variable; an explicit --seed beats both.  Identical inputs and seed give
byte-identical envelopes.
"""

from __future__ import annotations

import argparse
import os
import sys
from dataclasses import dataclass

from . import __version__
from .dmodule import DNormConfig, DSeminorm, abs_summability_check, series_sum, vec_dnorm
from .dop import min_norm_solve, op_dnorm, open_mapping_delta, surjectivity_check
from .errors import (
    DimensionMismatch,
    EmptySet,
    HyplabError,
    HypothesisFailed,
    InvalidInput,
    NoConvergence,
    NotConverged,
    NotInRange,
    NotStrictlyPositive,
    NotSurjective,
    PreconditionViolated,
    ShapeMismatch,
    UnsupportedNorm,
    ZeroDivisor,
)
from .hyperscalar import bc_inverse, knorm
from .jsonio import (
    digest,
    dumps,
    load_json,
    matrix_to_json,
    parse_hyp_literal,
    parse_matrix,
    parse_scalar,
    parse_series,
    parse_vector,
    scalar_to_json,
    vector_to_json,
)
from .theoremlab import (
    ball_scaling_check,
    continuity_bound_check,
    countable_subadd_check,
    open_mapping_verify,
    ubp_verify,
    zabreiko_decompose,
)

EXIT_PASS = 0
EXIT_CHECK_FAILED = 1
EXIT_INVALID_INPUT = 2
EXIT_NO_CONVERGENCE = 3
EXIT_PRECONDITION = 4

_INVALID = (InvalidInput, DimensionMismatch, ShapeMismatch, UnsupportedNorm)
_NOCONV = (NoConvergence, NotConverged)
_PRECOND = (
    ZeroDivisor,
    NotStrictlyPositive,
    NotSurjective,
    PreconditionViolated,
    HypothesisFailed,
    NotInRange,
    EmptySet,
)


@dataclass
class CliConfig:
    """Common options resolved for one invocation."""

    subcommand: str
    tol: float
    seed: int
    max_n: int
    output: str | None
    fmt: str


@dataclass
class ReportEnvelope:
    """Wrapper around a subcommand payload; serialization is byte-stable."""

    subcommand: str
    inputs_digest: str
    seed: int
    payload: dict
    passed: bool

    def to_json_dict(self) -> dict:
        return {
            "tool": "hyplab",
            "version": __version__,
            "subcommand": self.subcommand,
            "inputs_digest": self.inputs_digest,
            "seed": self.seed,
            "payload": self.payload,
            "pass": self.passed,
        }


def _resolve_seed(args) -> int:
    if args.seed is not None:
        return args.seed
    env = os.environ.get("HYPLAB_SEED")
    if env is not None:
        try:
            return int(env)
        except ValueError as exc:
            raise InvalidInput(f"HYPLAB_SEED must be an integer, got {env!r}") from exc
    return 42


def _emit(envelope: ReportEnvelope, output: str | None) -> None:
    text = dumps(envelope.to_json_dict()) + "\n"
    if output is None:
        sys.stdout.write(text)
    else:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hyplab",
        description="Bicomplex/hyperbolic scalar algebra, operator bounds, and theorem checks.",
    )
    parser.add_argument("--version", action="version", version=f"hyplab {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(sp, *, tol_default=1e-10):
        sp.add_argument("--tol", type=float, default=tol_default, help="numeric tolerance")
        sp.add_argument("--seed", type=int, default=None, help="sampling seed (default 42 or HYPLAB_SEED)")
        sp.add_argument("--maxN", dest="max_n", type=int, default=1000, help="term/iteration cap")
        sp.add_argument("--output", default=None, help="write the JSON envelope here instead of stdout")
        sp.add_argument(
            "--format",
            dest="fmt",
            choices=("idempotent", "cartesian"),
            default="idempotent",
            help="scalar emission form",
        )

    sp = sub.add_parser("knorm", help="hyperbolic-valued norm of a scalar")
    sp.add_argument("--scalar", required=True)
    common(sp)

    sp = sub.add_parser("inv", help="componentwise inverse of a scalar")
    sp.add_argument("--scalar", required=True)
    common(sp)

    sp = sub.add_parser("norm", help="D-norm of a vector")
    sp.add_argument("--vector", required=True)
    sp.add_argument("--norm", choices=("l2", "l1", "linf"), default="l2")
    common(sp)

    sp = sub.add_parser("opnorm", help="operator D-norm via extremal singular values")
    sp.add_argument("--matrix", required=True)
    common(sp)

    sp = sub.add_parser("solve", help="minimum-norm solve of Tx = y")
    sp.add_argument("--matrix", required=True)
    sp.add_argument("--y", required=True)
    common(sp)

    sp = sub.add_parser("omc", help="open-mapping constant 1/sigma_min per component")
    sp.add_argument("--matrix", required=True)
    common(sp)

    sp = sub.add_parser("series", help="capped series summation (array or generator spec)")
    sp.add_argument("--terms", required=True)
    sp.add_argument("--series-tol", default="1e-12", help="hyperbolic literal a1,a2")
    sp.add_argument("--abs-check", action="store_true", help="run the absolute-summability chain check")
    common(sp)

    sp = sub.add_parser("zabreiko", help="geometric-budget decomposition trace")
    sp.add_argument("--matrix", required=True)
    sp.add_argument("--x", required=True)
    sp.add_argument("--m", required=True, help="hyperbolic literal a1,a2")
    sp.add_argument("--r", type=float, required=True)
    sp.add_argument("--eps", required=True, help="hyperbolic literal a1,a2")
    common(sp)

    sp = sub.add_parser("ubp", help="uniform boundedness over an operator family")
    sp.add_argument("--family", required=True, help="JSON array of matrices")
    sp.add_argument("--samples", type=int, default=100)
    common(sp)

    sp = sub.add_parser("omt-verify", help="open-mapping solve-and-bound verification")
    sp.add_argument("--matrix", required=True)
    sp.add_argument("--trials", type=int, default=1000)
    common(sp)

    sp = sub.add_parser("lemma31", help="continuity bound check for a seminorm")
    sp.add_argument("--matrix", required=True)
    sp.add_argument("--trials", type=int, default=1000)
    common(sp)

    sp = sub.add_parser("subadd", help="countable subadditivity along a series")
    sp.add_argument("--matrix", required=True)
    sp.add_argument("--terms", required=True)
    sp.add_argument("--series-tol", default="1e-12", help="hyperbolic literal a1,a2")
    common(sp)

    sp = sub.add_parser("ballscale", help="sublevel-set ball scaling check")
    sp.add_argument("--matrix", required=True)
    sp.add_argument("--alpha", default=None, help="hyperbolic literal a1,a2 (default opnorm*r)")
    sp.add_argument("--r", type=float, default=1.0)
    sp.add_argument("--deltas", default="0.5,2,10", help="comma-separated positive reals")
    sp.add_argument("--samples", type=int, default=100)
    common(sp)

    return parser


def _config(args) -> CliConfig:
    cfg = CliConfig(
        subcommand=args.command,
        tol=args.tol,
        seed=_resolve_seed(args),
        max_n=args.max_n,
        output=args.output,
        fmt=args.fmt,
    )
    if cfg.tol <= 0:
        raise InvalidInput(f"tol must be positive, got {cfg.tol}")
    if cfg.max_n < 1:
        raise InvalidInput(f"maxN must be >= 1, got {cfg.max_n}")
    return cfg


def _dispatch(args, cfg: CliConfig):
    """Run one subcommand; returns (payload, passed, inputs_for_digest)."""
    cmd = args.command
    fmt = cfg.fmt
    seed = cfg.seed

    if cmd == "knorm":
        raw = load_json(args.scalar)
        z = parse_scalar(raw)
        payload = {"knorm": scalar_to_json(knorm(z), fmt)}
        return payload, True, {"scalar": scalar_to_json(z)}

    if cmd == "inv":
        raw = load_json(args.scalar)
        z = parse_scalar(raw)
        payload = {"inverse": scalar_to_json(bc_inverse(z), fmt)}
        return payload, True, {"scalar": scalar_to_json(z)}

    if cmd == "norm":
        v = parse_vector(load_json(args.vector))
        cfg = DNormConfig(args.norm)
        payload = {
            "dnorm": scalar_to_json(vec_dnorm(v, cfg), fmt),
            "component_norm": args.norm,
        }
        return payload, True, {"vector": vector_to_json(v), "norm": args.norm}

    if cmd == "opnorm":
        T = parse_matrix(load_json(args.matrix))
        rep = op_dnorm(T, tol=cfg.tol)
        payload = rep.to_json_dict()
        payload["M"] = scalar_to_json(rep.M, fmt)
        return payload, True, {"matrix": matrix_to_json(T), "tol": cfg.tol}

    if cmd == "solve":
        T = parse_matrix(load_json(args.matrix))
        y = parse_vector(load_json(args.y))
        rep = min_norm_solve(T, y, tol=cfg.tol)
        return rep.to_json_dict(), True, {
            "matrix": matrix_to_json(T),
            "y": vector_to_json(y),
            "tol": cfg.tol,
        }

    if cmd == "omc":
        T = parse_matrix(load_json(args.matrix))
        delta = open_mapping_delta(T, tol=cfg.tol)
        srep = surjectivity_check(T, tol=cfg.tol)
        payload = {"delta": scalar_to_json(delta, fmt), "surjectivity": srep.to_json_dict()}
        return payload, True, {"matrix": matrix_to_json(T), "tol": cfg.tol}

    if cmd == "series":
        raw = load_json(args.terms)
        tol = parse_hyp_literal(args.series_tol)
        inputs = {"terms": raw, "series_tol": [tol.a1, tol.a2], "maxN": cfg.max_n}
        if args.abs_check:
            rep = abs_summability_check(parse_series(raw), cfg.max_n, tol)
            passed = bool(rep.abs_converged and rep.cauchy_chain_ok)
            if not rep.abs_converged:
                raise NotConverged("absolute sums not settled at the cap", rep)
            return rep.to_json_dict(), passed, inputs
        rep = series_sum(parse_series(raw), tol, cfg.max_n)
        return rep.to_json_dict(), rep.converged, inputs

    if cmd == "zabreiko":
        T = parse_matrix(load_json(args.matrix))
        x = parse_vector(load_json(args.x))
        m = parse_hyp_literal(args.m)
        eps = parse_hyp_literal(args.eps)
        trace = zabreiko_decompose(DSeminorm(T), x, m, args.r, eps, cfg.max_n)
        inputs = {
            "matrix": matrix_to_json(T),
            "x": vector_to_json(x),
            "m": [m.a1, m.a2],
            "r": args.r,
            "eps": [eps.a1, eps.a2],
            "maxN": cfg.max_n,
        }
        return trace.to_json_dict(), trace.passed, inputs

    if cmd == "ubp":
        raw = load_json(args.family)
        if not isinstance(raw, list):
            raise InvalidInput("family must be a JSON array of matrices")
        family = [parse_matrix(mj) for mj in raw]
        rep = ubp_verify(family, args.samples, seed)
        inputs = {
            "family": [matrix_to_json(T) for T in family],
            "samples": args.samples,
        }
        return rep.to_json_dict(), rep.passed, inputs

    if cmd == "omt-verify":
        T = parse_matrix(load_json(args.matrix))
        rep = open_mapping_verify(T, args.trials, seed)
        return rep.to_json_dict(), rep.passed, {
            "matrix": matrix_to_json(T),
            "trials": args.trials,
        }

    if cmd == "lemma31":
        T = parse_matrix(load_json(args.matrix))
        rep = continuity_bound_check(DSeminorm(T), args.trials, seed)
        return rep.to_json_dict(), rep.passed, {
            "matrix": matrix_to_json(T),
            "trials": args.trials,
        }

    if cmd == "subadd":
        T = parse_matrix(load_json(args.matrix))
        raw = load_json(args.terms)
        tol = parse_hyp_literal(args.series_tol)
        rep = countable_subadd_check(DSeminorm(T), parse_series(raw), cfg.max_n, tol)
        inputs = {
            "matrix": matrix_to_json(T),
            "terms": raw,
            "series_tol": [tol.a1, tol.a2],
            "maxN": cfg.max_n,
        }
        return rep.to_json_dict(), rep.passed, inputs

    if cmd == "ballscale":
        T = parse_matrix(load_json(args.matrix))
        p = DSeminorm(T)
        if args.alpha is None:
            alpha = op_dnorm(T, tol=cfg.tol).M * args.r
        else:
            alpha = parse_hyp_literal(args.alpha)
        try:
            deltas = [float(d) for d in args.deltas.split(",") if d.strip()]
        except ValueError as exc:
            raise InvalidInput(f"bad --deltas literal {args.deltas!r}") from exc
        rep = ball_scaling_check(p, alpha, args.r, deltas, args.samples, seed)
        inputs = {
            "matrix": matrix_to_json(T),
            "alpha": [alpha.a1, alpha.a2],
            "r": args.r,
            "deltas": deltas,
            "samples": args.samples,
        }
        return rep.to_json_dict(), rep.passed, inputs

    raise InvalidInput(f"unknown subcommand {cmd!r}")


def _error_payload(kind: str, exc: Exception) -> dict:
    payload = {"error": {"kind": kind, "message": str(exc)}}
    report = getattr(exc, "report", None)
    if report is not None:
        payload["report"] = report.to_json_dict()
    iterations = getattr(exc, "iterations", None)
    if iterations is not None:
        payload["iterations"] = iterations
    return payload


def run(argv=None) -> int:
    """Execute one subcommand; returns the exit code."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse reports usage errors itself
        code = exc.code if isinstance(exc.code, int) else 2
        return code

    output = args.output
    try:
        cfg = _config(args)
        payload, passed, inputs = _dispatch(args, cfg)
        envelope = ReportEnvelope(
            subcommand=cfg.subcommand,
            inputs_digest=digest(inputs),
            seed=cfg.seed,
            payload=payload,
            passed=passed,
        )
        _emit(envelope, output)
        return EXIT_PASS if passed else EXIT_CHECK_FAILED
    except HyplabError as exc:
        if isinstance(exc, _INVALID):
            code = EXIT_INVALID_INPUT
        elif isinstance(exc, _NOCONV):
            code = EXIT_NO_CONVERGENCE
        elif isinstance(exc, _PRECOND):
            code = EXIT_PRECONDITION
        else:
            code = EXIT_INVALID_INPUT
        print(f"hyplab: {type(exc).__name__}: {exc}", file=sys.stderr)
        envelope = ReportEnvelope(
            subcommand=getattr(args, "command", "unknown"),
            inputs_digest="",
            seed=getattr(args, "seed", None) or 0,
            payload=_error_payload(type(exc).__name__, exc),
            passed=False,
        )
        _emit(envelope, output)
        return code


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
