"""Randomized verification suites with replayable per-trial fingerprints.

Each trial is a pure function of (seed, trial index, support bound), so a
fingerprint string is enough to reproduce any witness exactly.  Trials may
be fanned out across processes; reports are merged in trial order so the
output never depends on the worker count.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .errors import SpecError
from .algebra import (
    AlgebraSpace,
    InequalityWitness,
    random_element_rng,
    verify_coefficient_bound,
    verify_one_sided,
    verify_theorem,
    verify_weight_shift,
)
from .orlicz import NEGATIVE_SIDE, NONNEGATIVE_SIDE, OrliczFunction, WeightSequence

# Sampling grids for the random space draw.
ORLICZ_EXPONENTS = (1.0, 1.5, 2.0, 3.0)
WEIGHT_EXPONENTS = (0.0, 0.5, 1.0, 2.0)

FAMILIES = ("theorem", "one_sided_negative", "one_sided_nonnegative", "coefficient_bound")


def _draw_orlicz(rng: np.random.Generator) -> OrliczFunction:
    fam = rng.choice(("pow", "expm1", "powlog"))
    if fam == "expm1":
        return OrliczFunction("expm1")
    return OrliczFunction(str(fam), float(rng.choice(ORLICZ_EXPONENTS)))


def _draw_weight(rng: np.random.Generator, klass: str) -> WeightSequence:
    fam = rng.choice(("pow", "log", "const"))
    if fam == "pow":
        return WeightSequence("pow", klass, float(rng.choice(WEIGHT_EXPONENTS)))
    if fam == "log":
        return WeightSequence("log", klass)
    return WeightSequence("const", klass, 1.0)


def draw_space(rng: np.random.Generator) -> AlgebraSpace:
    """A random six-tuple over the builtin family cross product."""
    return AlgebraSpace(
        _draw_orlicz(rng),
        _draw_orlicz(rng),
        _draw_weight(rng, NEGATIVE_SIDE),
        _draw_weight(rng, NEGATIVE_SIDE),
        _draw_weight(rng, NONNEGATIVE_SIDE),
        _draw_weight(rng, NONNEGATIVE_SIDE),
    )


def fingerprint(family: str, seed: int, trial: int, support: int) -> str:
    return f"{family}:seed={seed}:trial={trial}:support={support}"


def parse_fingerprint(fp: str):
    try:
        family, s, t, sup = fp.split(":")
        seed = int(s.removeprefix("seed="))
        trial = int(t.removeprefix("trial="))
        support = int(sup.removeprefix("support="))
    except (ValueError, AttributeError) as exc:
        raise SpecError(f"bad fingerprint {fp!r}") from exc
    if family not in FAMILIES:
        raise SpecError(f"unknown suite family {family!r}")
    return family, seed, trial, support


def _trial_rng(seed: int, trial: int) -> np.random.Generator:
    return np.random.default_rng([seed, trial])


def run_trial(family: str, seed: int, trial: int, support: int) -> list[InequalityWitness]:
    """Run one trial of the given inequality family; deterministic in
    (seed, trial, support)."""
    rng = _trial_rng(seed, trial)
    sp = draw_space(rng)
    sup_f = int(rng.integers(0, support + 1))
    sup_g = int(rng.integers(0, support + 1))
    f = random_element_rng(rng, sup_f)
    g = random_element_rng(rng, sup_g)
    fp = fingerprint(family, seed, trial, support)

    if family == "theorem":
        witnesses = [verify_theorem(f, g, sp)]
    elif family == "one_sided_negative":
        witnesses = [verify_one_sided(f, g, sp, "negative")]
    elif family == "one_sided_nonnegative":
        witnesses = [verify_one_sided(f, g, sp, "nonnegative")]
    elif family == "coefficient_bound":
        deg = f.n_max + g.n_max
        witnesses = [verify_coefficient_bound(f, g, k, "negative")
                     for k in range(1, deg + 1)]
        witnesses += [verify_coefficient_bound(f, g, k, "nonnegative")
                      for k in range(0, deg + 1)]
    else:
        raise SpecError(f"unknown suite family {family!r}")
    for w in witnesses:
        w.fingerprint = fp
    return witnesses


@dataclass
class SuiteReport:
    """Merged outcome of one inequality family over many trials."""

    family: str
    trials: int
    checks: int = 0
    violations: list = field(default_factory=list)
    max_ratio: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.violations

    def absorb(self, witnesses: list[InequalityWitness]):
        for w in witnesses:
            self.checks += 1
            if w.rhs > 0:
                self.max_ratio = max(self.max_ratio, w.ratio)
            if not w.holds:
                self.violations.append(w.to_json())

    def to_json(self) -> dict:
        return {
            "family": self.family,
            "trials": self.trials,
            "checks": self.checks,
            "ok": self.ok,
            "max_ratio": self.max_ratio,
            "violations": self.violations[:10],
        }


def worker_count() -> int:
    """Worker cap from ORLICZ_WIENER_THREADS; defaults to 1 (serial)."""
    raw = os.environ.get("ORLICZ_WIENER_THREADS", "1")
    try:
        n = int(raw)
    except ValueError:
        raise SpecError(f"ORLICZ_WIENER_THREADS must be an integer, got {raw!r}")
    return max(1, n)


def _trial_batch(args) -> list:
    family, seed, lo, hi, support = args
    return [run_trial(family, seed, t, support) for t in range(lo, hi)]


def run_suite(family: str, trials: int, seed: int, support: int,
              workers: int | None = None) -> SuiteReport:
    """Run a whole family; results are absorbed in trial order regardless
    of how many workers produced them."""
    if trials < 1:
        raise SpecError("trials must be >= 1")
    if workers is None:
        workers = worker_count()
    report = SuiteReport(family, trials)
    if workers <= 1:
        for t in range(trials):
            report.absorb(run_trial(family, seed, t, support))
        return report
    chunk = max(1, trials // (workers * 4))
    batches = [(family, seed, lo, min(lo + chunk, trials), support)
               for lo in range(0, trials, chunk)]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        for batch in pool.map(_trial_batch, batches):
            for witnesses in batch:
                report.absorb(witnesses)
    return report


def run_weight_shift_suite(k_max: int = 10_000) -> dict:
    """Shift-bound scan over every builtin weight family on both sides."""
    reports = {}
    for klass in (NEGATIVE_SIDE, NONNEGATIVE_SIDE):
        for alpha in WEIGHT_EXPONENTS:
            nu = WeightSequence("pow", klass, alpha)
            reports[f"{klass}:{nu.spec()}"] = verify_weight_shift(nu, k_max).to_json()
        for nu in (WeightSequence("log", klass), WeightSequence("const", klass, 1.0)):
            reports[f"{klass}:{nu.spec()}"] = verify_weight_shift(nu, k_max).to_json()
    return reports


def replay(fp: str) -> list[InequalityWitness]:
    """Re-run the single trial identified by a fingerprint."""
    family, seed, trial, support = parse_fingerprint(fp)
    return run_trial(family, seed, trial, support)
