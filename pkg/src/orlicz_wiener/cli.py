"""Command-line front end.

Exit codes: 0 ok, 1 verification violation, 2 usage/config error,
3 factorization obstruction (nonzero winding or vanishing symbol).
"""

from __future__ import annotations

import argparse
import json
import sys

from . import factorization
from .errors import (
    IndexObstructionError,
    OrliczWienerError,
    SpecError,
    TruncationError,
    VanishingSymbolError,
)
from .algebra import DEFAULT_SPACE_SPEC, AlgebraSpace, wnf_norm
from .fourier import LaurentPolynomial
from .harness import FAMILIES, replay, run_suite, run_weight_shift_suite
from .orlicz import validate_weight

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2
EXIT_OBSTRUCTION = 3


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="orlicz-wiener",
        description="Norms, inequality verification, and Wiener-Hopf "
                    "factorization for symbols with coefficients in "
                    "two-weighted Orlicz sequence spaces.",
    )
    p.add_argument("--cmd", required=True,
                   choices=["norm", "weights", "verify", "factorize", "selftest"])
    p.add_argument("--input", default=None,
                   help="path to a coefficient JSON file, or inline JSON")
    p.add_argument("--space", default=DEFAULT_SPACE_SPEC,
                   help="six semicolon-separated spec strings "
                        "(negative Orlicz; nonnegative Orlicz; negative "
                        "scale weight; negative sum weight; nonnegative "
                        "scale weight; nonnegative sum weight)")
    p.add_argument("--tol", type=float, default=None,
                   help="norm tolerance (default 1e-12) or factorization "
                        "residual tolerance (default 1e-8)")
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--support", type=int, default=64)
    p.add_argument("--grid", type=int, default=256)
    p.add_argument("--trunc", type=int, default=64)
    p.add_argument("--format", default="json", choices=["json", "csv", "human"])
    p.add_argument("--replay", default=None, metavar="FINGERPRINT",
                   help="re-run a single verification trial")
    return p


def _load_coefficients(raw: str | None) -> LaurentPolynomial:
    if raw is None:
        raise SpecError("this command requires --input")
    text = raw
    if not raw.lstrip().startswith("{"):
        try:
            with open(raw) as fh:
                text = fh.read()
        except OSError as exc:
            raise SpecError(f"cannot read {raw!r}: {exc}") from exc
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SpecError(f"malformed coefficient JSON: {exc}") from exc
    return LaurentPolynomial.from_json(doc)


def _emit(doc: dict, fmt: str):
    if fmt == "json":
        print(json.dumps(doc, sort_keys=True, indent=2))
    elif fmt == "csv":
        flat = {k: v for k, v in _flatten(doc) if isinstance(v, (int, float, bool, str))}
        print(",".join(flat))
        print(",".join(str(v) for v in flat.values()))
    else:
        for k, v in _flatten(doc):
            print(f"{k}: {v}")


def _flatten(doc, prefix=""):
    items = []
    for k, v in doc.items():
        key = f"{prefix}{k}"
        if isinstance(v, dict):
            items.extend(_flatten(v, key + "."))
        elif isinstance(v, list):
            items.append((key, json.dumps(v)))
        else:
            items.append((key, v))
    return items


def _cmd_norm(args) -> int:
    f = _load_coefficients(args.input)
    sp = AlgebraSpace.from_spec(args.space)
    tol = args.tol if args.tol is not None else 1e-12
    report = wnf_norm(f, sp, tol)
    _emit(report.to_json(), args.format)
    return EXIT_OK


def _cmd_weights(args) -> int:
    sp = AlgebraSpace.from_spec(args.space)
    n_max = max(args.support, 2)
    doc = {
        "negative_scale": validate_weight(sp.neg_scale, n_max).to_json(),
        "negative_sum": validate_weight(sp.neg_sum, n_max).to_json(),
        "nonnegative_scale": validate_weight(sp.pos_scale, n_max).to_json(),
        "nonnegative_sum": validate_weight(sp.pos_sum, n_max).to_json(),
    }
    _emit(doc, args.format)
    ok = all(v["ok"] for v in doc.values())
    return EXIT_OK if ok else EXIT_VIOLATION


def _cmd_verify(args) -> int:
    if args.replay is not None:
        witnesses = replay(args.replay)
        doc = {"replay": args.replay, "witnesses": [w.to_json() for w in witnesses]}
        _emit(doc, args.format)
        ok = all(w.holds for w in witnesses)
        return EXIT_OK if ok else EXIT_VIOLATION
    if args.trials < 1:
        raise SpecError("trials must be >= 1")
    doc = {}
    ok = True
    for family in FAMILIES:
        trials = args.trials if family != "coefficient_bound" else max(1, args.trials // 2)
        support = args.support if family != "coefficient_bound" else min(args.support, 32)
        rep = run_suite(family, trials, args.seed, support)
        doc[family] = rep.to_json()
        ok = ok and rep.ok
    shift = run_weight_shift_suite()
    doc["weight_shift"] = {"ok": all(r["ok"] for r in shift.values()), "families": shift}
    ok = ok and doc["weight_shift"]["ok"]
    _emit(doc, args.format)
    if not ok:
        first = next(
            (v["violations"][0] for v in doc.values()
             if isinstance(v, dict) and v.get("violations")), None)
        print(f"violation: {json.dumps(first)}", file=sys.stderr)
        return EXIT_VIOLATION
    return EXIT_OK


def _cmd_factorize(args) -> int:
    f = _load_coefficients(args.input)
    sp = AlgebraSpace.from_spec(args.space)
    tol = args.tol if args.tol is not None else factorization.DEFAULT_RESIDUAL_TOL
    try:
        res = factorization.factorize(f, args.grid, args.trunc, tol)
    except IndexObstructionError as exc:
        _emit({"error": "index-obstruction", "kappa": exc.kappa}, args.format)
        return EXIT_OBSTRUCTION
    except VanishingSymbolError as exc:
        _emit({"error": "vanishing-symbol", "message": str(exc)}, args.format)
        return EXIT_OBSTRUCTION
    except TruncationError as exc:
        _emit({"error": "truncation-insufficient", "residual": exc.residual},
              args.format)
        return EXIT_OBSTRUCTION
    doc = res.to_json()
    doc["membership"] = {k: v.to_json()
                         for k, v in factorization.membership(res, sp).items()}
    _emit(doc, args.format)
    return EXIT_OK


def _cmd_selftest(args) -> int:
    ok = True
    doc = {}
    for family in FAMILIES:
        rep = run_suite(family, min(args.trials, 50), args.seed, min(args.support, 16))
        doc[family] = rep.to_json()
        ok = ok and rep.ok
    shift = run_weight_shift_suite(1000)
    doc["weight_shift_ok"] = all(r["ok"] for r in shift.values())
    ok = ok and doc["weight_shift_ok"]
    b = LaurentPolynomial.from_dict({0: 2, 1: 1})
    res = factorization.factorize(b)
    doc["factorization_residual"] = res.residual
    ok = ok and res.residual <= 1e-10
    doc["ok"] = ok
    _emit(doc, args.format)
    return EXIT_OK if ok else EXIT_VIOLATION


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    handlers = {
        "norm": _cmd_norm,
        "weights": _cmd_weights,
        "verify": _cmd_verify,
        "factorize": _cmd_factorize,
        "selftest": _cmd_selftest,
    }
    try:
        return handlers[args.cmd](args)
    except SpecError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OrliczWienerError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
