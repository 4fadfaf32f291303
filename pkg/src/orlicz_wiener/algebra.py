"""The combined absolute-sum / two-weighted-Orlicz norm, its algebra
constant, and brute-force checks of the inequalities behind it."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import DomainError, SpecError
from .fourier import LaurentPolynomial
from .orlicz import (
    NEGATIVE_SIDE,
    NONNEGATIVE_SIDE,
    DEFAULT_NORM_TOL,
    OrliczFunction,
    WeightSequence,
    luxemburg_norm,
    validate_weight,
)

INEQ_SLACK = 1e-9  # relative slack on norm inequalities (bisection noise)
COEFF_SLACK = 1e-12  # slack on exact coefficient-level bounds


@dataclass
class AlgebraSpace:
    """The six ingredients of the combined norm and its derived constants.

    The negative side (coefficient indices k <= -1) uses ``neg_orlicz``
    with argument weight ``neg_scale`` and summand weight ``neg_sum``,
    both indexed from 1.  The nonnegative side (k >= 0) uses
    ``pos_orlicz`` / ``pos_scale`` / ``pos_sum``, indexed from 0.
    """

    neg_orlicz: OrliczFunction
    pos_orlicz: OrliczFunction
    neg_scale: WeightSequence
    neg_sum: WeightSequence
    pos_scale: WeightSequence
    pos_sum: WeightSequence

    def __post_init__(self):
        for wt in (self.neg_scale, self.neg_sum):
            if wt.klass != NEGATIVE_SIDE:
                raise SpecError("negative-side weights must be indexed from 1")
        for wt in (self.pos_scale, self.pos_sum):
            if wt.klass != NONNEGATIVE_SIDE:
                raise SpecError("nonnegative-side weights must be indexed from 0")

    def neg_constant(self) -> float:
        """(1 + C_sum) * C_scale for the negative side."""
        return (1 + self.neg_sum.delta2_constant()) * self.neg_scale.delta2_constant()

    def pos_constant(self) -> float:
        """(1 + C_sum) * C_scale for the nonnegative side."""
        return (1 + self.pos_sum.delta2_constant()) * self.pos_scale.delta2_constant()

    def algebra_constant(self) -> float:
        """1 + 2 * neg_constant + 2 * pos_constant."""
        return 1 + 2 * self.neg_constant() + 2 * self.pos_constant()

    def spec(self) -> str:
        parts = [self.neg_orlicz.spec(), self.pos_orlicz.spec(),
                 self.neg_scale.spec(), self.neg_sum.spec(),
                 self.pos_scale.spec(), self.pos_sum.spec()]
        return ";".join(parts)

    @classmethod
    def from_spec(cls, s: str) -> "AlgebraSpace":
        parts = s.split(";")
        if len(parts) != 6:
            raise SpecError("space spec needs six semicolon-separated fields")
        return cls(
            OrliczFunction.from_spec(parts[0]),
            OrliczFunction.from_spec(parts[1]),
            WeightSequence.from_spec(parts[2], NEGATIVE_SIDE),
            WeightSequence.from_spec(parts[3], NEGATIVE_SIDE),
            WeightSequence.from_spec(parts[4], NONNEGATIVE_SIDE),
            WeightSequence.from_spec(parts[5], NONNEGATIVE_SIDE),
        )


DEFAULT_SPACE_SPEC = "pow:p=1;pow:p=1;const:1;const:1;const:1;const:1"


@dataclass
class NormReport:
    """The three norm pieces and their sum."""

    wiener: float
    negative: float
    nonnegative: float

    @property
    def total(self) -> float:
        return self.wiener + self.negative + self.nonnegative

    def to_json(self) -> dict:
        return {
            "wiener": self.wiener,
            "negative": self.negative,
            "nonnegative": self.nonnegative,
            "total": self.total,
        }


@dataclass
class InequalityWitness:
    """A single checked instance of an inequality lhs <= constant-scaled rhs."""

    lhs: float
    rhs: float
    constant: float
    holds: bool
    fingerprint: str = ""

    @property
    def ratio(self) -> float:
        """lhs/rhs, or 0 when both sides vanish."""
        if self.rhs == 0:
            return 0.0 if self.lhs == 0 else float("inf")
        return self.lhs / self.rhs

    def to_json(self) -> dict:
        return {
            "lhs": self.lhs,
            "rhs": self.rhs,
            "constant": self.constant,
            "holds": self.holds,
            "ratio": self.ratio,
            "fingerprint": self.fingerprint,
        }


def wnf_norm(f: LaurentPolynomial, sp: AlgebraSpace,
             tol: float = DEFAULT_NORM_TOL) -> NormReport:
    """Absolute-sum norm plus the two one-sided Luxemburg norms."""
    neg, nonneg = f.split()
    return NormReport(
        wiener=f.wiener_norm(),
        negative=luxemburg_norm(neg, sp.neg_orlicz, sp.neg_scale, sp.neg_sum, tol),
        nonnegative=luxemburg_norm(nonneg, sp.pos_orlicz, sp.pos_scale, sp.pos_sum, tol),
    )


def theorem_constant(sp: AlgebraSpace) -> float:
    return sp.algebra_constant()


def verify_theorem(f: LaurentPolynomial, g: LaurentPolynomial, sp: AlgebraSpace,
                   tol: float = DEFAULT_NORM_TOL) -> InequalityWitness:
    """Check |fg| <= C |f| |g| in the combined norm."""
    c = sp.algebra_constant()
    lhs = wnf_norm(f.multiply(g), sp, tol).total
    nf = wnf_norm(f, sp, tol).total
    ng = wnf_norm(g, sp, tol).total
    rhs = c * nf * ng
    return InequalityWitness(lhs, rhs, c, lhs <= rhs * (1 + INEQ_SLACK))


def verify_one_sided(f: LaurentPolynomial, g: LaurentPolynomial, sp: AlgebraSpace,
                     side: str, tol: float = DEFAULT_NORM_TOL) -> InequalityWitness:
    """Check the one-sided product bound on the chosen coefficient side."""
    nf = wnf_norm(f, sp, tol)
    ng = wnf_norm(g, sp, tol)
    prod = wnf_norm(f.multiply(g), sp, tol)
    if side == "negative":
        c = sp.neg_constant()
        lhs = prod.negative
        rhs = c * (nf.wiener * ng.negative + ng.wiener * nf.negative)
    elif side == "nonnegative":
        c = sp.pos_constant()
        lhs = prod.nonnegative
        rhs = c * (nf.wiener * ng.nonnegative + ng.wiener * nf.nonnegative)
    else:
        raise DomainError(f"side must be 'negative' or 'nonnegative', got {side!r}")
    return InequalityWitness(lhs, rhs, c, lhs <= rhs * (1 + INEQ_SLACK))


class _AbsCoeffs:
    """|f_j| with zero outside the band; takes whole index arrays."""

    def __init__(self, f: LaurentPolynomial):
        self.mags = np.abs(f.coeffs)
        self.reach = f.n_max

    def take(self, idx: np.ndarray) -> np.ndarray:
        out = np.zeros(len(idx))
        mask = np.abs(idx) <= self.reach
        out[mask] = self.mags[idx[mask] + self.reach]
        return out


def _coeff_bound_rhs(a: _AbsCoeffs, b: _AbsCoeffs, k: int, side: str) -> float:
    """The four-sum majorant of |(fg)_{-k}| (negative side, k >= 1) or
    |(fg)_k| (nonnegative side, k >= 0)."""
    half = k // 2
    reach = max(a.reach, b.reach)
    j_tail = np.arange(0, reach + 1)
    j_head = np.arange(1, half + 1)
    j_half = np.arange(0, half + 1)
    total = 0.0
    for x, y in ((a, b), (b, a)):
        if side == "negative":
            total += x.take(j_tail) @ y.take(-k - j_tail)
            total += x.take(-j_head) @ y.take(-k + j_head)
        else:
            total += x.take(-j_tail[1:]) @ y.take(k + j_tail[1:])
            total += x.take(j_half) @ y.take(k - j_half)
    return float(total)


def verify_coefficient_bound(f: LaurentPolynomial, g: LaurentPolynomial,
                             k: int, side: str) -> InequalityWitness:
    """Check the coefficient-level convolution majorant at index k."""
    if side == "negative":
        if k < 1:
            raise DomainError("negative side requires k >= 1")
        target = -k
    elif side == "nonnegative":
        if k < 0:
            raise DomainError("nonnegative side requires k >= 0")
        target = k
    else:
        raise DomainError(f"side must be 'negative' or 'nonnegative', got {side!r}")
    lhs = abs(f.multiply(g).coeff(target))
    rhs = _coeff_bound_rhs(_AbsCoeffs(f), _AbsCoeffs(g), k, side)
    return InequalityWitness(lhs, rhs, 1.0, lhs <= rhs + COEFF_SLACK * (1 + rhs))


@dataclass
class ShiftReport:
    """Outcome of the shifted-index weight comparison scan."""

    ok: bool
    k_max: int
    max_ratio: float
    violations: list = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "ok": self.ok,
            "k_max": self.k_max,
            "max_ratio": self.max_ratio,
            "violations": self.violations[:10],
        }


def verify_weight_shift(nu: WeightSequence, k_max: int) -> ShiftReport:
    """Check nu_k <= C nu_j for every j >= k - floor(k/2) up to k_max."""
    if k_max < 1:
        raise DomainError("k_max must be at least 1")
    c = nu.delta2_constant()
    n = np.arange(nu.start, k_max + 1)
    vals = nu(n)
    # suffix minimum: smin[i] = min of vals[i:]
    smin = np.minimum.accumulate(vals[::-1])[::-1]
    violations = []
    max_ratio = 0.0
    for i, k in enumerate(n):
        j0 = max(nu.start, k - k // 2)
        bound = c * smin[j0 - nu.start]
        ratio = vals[i] / bound if bound > 0 else float("inf")
        max_ratio = max(max_ratio, ratio)
        if vals[i] > bound * (1 + 1e-12):
            violations.append({"k": int(k), "value": float(vals[i]), "bound": float(bound)})
    return ShiftReport(not violations, k_max, max_ratio, violations)


def horbach_norm(f: LaurentPolynomial, p: float, r: float,
                 alpha: float, beta: float) -> float:
    """The classical two-term weighted-power norm of the coefficient sides."""
    if p < 1 or r < 1:
        raise DomainError("exponents must be >= 1")
    if alpha < 0 or beta < 0:
        raise DomainError("weight exponents must be >= 0")
    neg, nonneg = f.split()
    kn = np.arange(1, len(neg) + 1)
    kp = np.arange(0, len(nonneg))
    neg_term = np.sum(np.abs(neg) ** p * (kn + 1.0) ** (alpha * p)) ** (1 / p)
    pos_term = np.sum(np.abs(nonneg) ** r * (kp + 1.0) ** (beta * r)) ** (1 / r)
    return float(neg_term + pos_term)


def random_element(support: int, seed, scale: float = 1.0) -> LaurentPolynomial:
    """Deterministic pseudo-random coefficients: real and imaginary parts
    uniform in [-scale, scale] for every index in [-support, support]."""
    if support < 0:
        raise DomainError("support must be nonnegative")
    rng = np.random.default_rng(seed)
    return random_element_rng(rng, support, scale)


def random_element_rng(rng: np.random.Generator, support: int,
                       scale: float = 1.0) -> LaurentPolynomial:
    n = 2 * support + 1
    re = rng.uniform(-scale, scale, n)
    im = rng.uniform(-scale, scale, n)
    return LaurentPolynomial(re + 1j * im, support)


__all__ = [
    "AlgebraSpace", "NormReport", "InequalityWitness", "ShiftReport",
    "DEFAULT_SPACE_SPEC", "wnf_norm", "theorem_constant", "verify_theorem",
    "verify_one_sided", "verify_coefficient_bound", "verify_weight_shift",
    "horbach_norm", "random_element", "random_element_rng", "validate_weight",
]
