"""Orlicz functions, weight sequences, modulars, and the Luxemburg norm.

A convex function together with two weight sequences generates a weighted
modular sequence space; its norm is the infimum of scales at which the
modular drops to 1.  Everything here operates on finite-support coefficient
arrays, so every modular is a finite sum.
"""

from __future__ import annotations

import functools
import json
from dataclasses import dataclass, field

import numpy as np

from .errors import DomainError, InvalidWeightError, SpecError

NEGATIVE_SIDE = "W-"  # index set {1, 2, ...}
NONNEGATIVE_SIDE = "W+"  # index set {0, 1, ...}

_ORLICZ_FAMILIES = ("pow", "expm1", "powlog")
_WEIGHT_FAMILIES = ("pow", "log", "const", "table")

# Bisection policy for the Luxemburg norm.
DEFAULT_NORM_TOL = 1e-12
MAX_BISECTIONS = 200


@dataclass(frozen=True)
class OrliczFunction:
    """A convex nondecreasing function on [0, inf) vanishing at 0.

    Families: ``pow`` is x^p (p >= 1), ``expm1`` is e^x - 1, ``powlog``
    is x^p * ln(1 + x) (p >= 1).
    """

    family: str
    p: float = 1.0

    def __post_init__(self):
        if self.family not in _ORLICZ_FAMILIES:
            raise SpecError(f"unknown Orlicz family {self.family!r}")
        if self.family in ("pow", "powlog") and not self.p >= 1.0:
            raise SpecError(f"family {self.family!r} requires exponent p >= 1, got {self.p}")

    def __call__(self, x):
        x = np.asarray(x, dtype=float)
        if np.any(x < 0):
            raise DomainError("Orlicz functions are defined for x >= 0 only")
        with np.errstate(over="ignore"):
            if self.family == "pow":
                return x**self.p
            if self.family == "expm1":
                return np.expm1(x)
            return x**self.p * np.log1p(x)

    def spec(self) -> str:
        if self.family == "expm1":
            return "expm1"
        return f"{self.family}:p={self.p:g}"

    @classmethod
    def from_spec(cls, s: str) -> "OrliczFunction":
        s = s.strip()
        if s == "expm1":
            return cls("expm1")
        for fam in ("pow", "powlog"):
            prefix = fam + ":p="
            if s.startswith(prefix):
                try:
                    p = float(s[len(prefix):])
                except ValueError as exc:
                    raise SpecError(f"bad Orlicz spec {s!r}") from exc
                return cls(fam, p)
        raise SpecError(f"bad Orlicz spec {s!r}")


@functools.lru_cache(maxsize=1)
def _log_family_delta2() -> float:
    # sup over n of ln(e + 2n)/ln(e + n); the ratio peaks at small n and
    # decays to 1, so a long finite scan captures the supremum.
    n = np.arange(1, 1 << 20, dtype=float)
    return float(np.max(np.log(np.e + 2 * n) / np.log(np.e + n)))


@dataclass(frozen=True)
class WeightSequence:
    """A positive sequence with a declared index class and doubling constant.

    Families: ``pow`` is (n+1)^alpha (alpha >= 0), ``log`` is ln(e+n),
    ``const`` is a constant c > 0, ``table`` is a finite table continued
    by its last value, with a user-supplied doubling constant.
    """

    family: str
    klass: str
    param: float = 0.0
    table: tuple = field(default=())
    table_delta2: float = 0.0

    def __post_init__(self):
        if self.family not in _WEIGHT_FAMILIES:
            raise SpecError(f"unknown weight family {self.family!r}")
        if self.klass not in (NEGATIVE_SIDE, NONNEGATIVE_SIDE):
            raise SpecError(f"unknown weight class {self.klass!r}")
        if self.family == "pow" and not self.param >= 0:
            raise SpecError(f"power weight requires alpha >= 0, got {self.param}")
        if self.family == "const" and not self.param > 0:
            raise SpecError(f"constant weight requires c > 0, got {self.param}")
        if self.family == "table":
            if len(self.table) == 0:
                raise SpecError("table weight requires at least one value")
            if min(self.table) <= 0:
                raise InvalidWeightError("table weight values must be positive")
            if not self.table_delta2 >= 1:
                raise SpecError("table weight requires a doubling constant >= 1")

    @property
    def start(self) -> int:
        """First index of the class's index set."""
        return 1 if self.klass == NEGATIVE_SIDE else 0

    def __call__(self, n):
        n = np.asarray(n, dtype=float)
        if np.any(n < self.start):
            raise DomainError(f"index below class start {self.start}")
        if self.family == "pow":
            return (n + 1.0) ** self.param
        if self.family == "log":
            return np.log(np.e + n)
        if self.family == "const":
            return np.full_like(n, self.param)
        vals = np.asarray(self.table, dtype=float)
        idx = np.minimum((n - self.start).astype(int), len(vals) - 1)
        return vals[idx]

    def delta2_constant(self) -> float:
        """The doubling constant: analytic for builtin families, validated
        against the table range for explicit weights."""
        if self.family == "pow":
            return 2.0**self.param
        if self.family == "const":
            return 1.0
        if self.family == "log":
            return _log_family_delta2()
        n = np.arange(1, 2 * len(self.table) + 2)
        ratios = self(2 * n) / self(n)
        if np.max(ratios) > self.table_delta2 * (1 + 1e-12):
            raise InvalidWeightError(
                f"supplied doubling constant {self.table_delta2} violated: "
                f"observed ratio {np.max(ratios)}"
            )
        return self.table_delta2

    def spec(self) -> str:
        if self.family == "pow":
            return f"pow:alpha={self.param:g}"
        if self.family == "log":
            return "log"
        if self.family == "const":
            return f"const:{self.param:g}"
        return "table:<inline>"

    @classmethod
    def from_spec(cls, s: str, klass: str) -> "WeightSequence":
        s = s.strip()
        if s == "log":
            return cls("log", klass)
        if s.startswith("pow:alpha="):
            try:
                alpha = float(s[len("pow:alpha="):])
            except ValueError as exc:
                raise SpecError(f"bad weight spec {s!r}") from exc
            return cls("pow", klass, alpha)
        if s.startswith("const:"):
            try:
                c = float(s[len("const:"):])
            except ValueError as exc:
                raise SpecError(f"bad weight spec {s!r}") from exc
            return cls("const", klass, c)
        if s.startswith("table:"):
            path = s[len("table:"):]
            try:
                with open(path) as fh:
                    doc = json.load(fh)
            except (OSError, json.JSONDecodeError) as exc:
                raise SpecError(f"cannot read weight table {path!r}: {exc}") from exc
            if not isinstance(doc, dict) or set(doc) != {"values", "delta2"}:
                raise SpecError("weight table JSON must have exactly keys 'values' and 'delta2'")
            return cls("table", klass, table=tuple(doc["values"]), table_delta2=float(doc["delta2"]))
        raise SpecError(f"bad weight spec {s!r}")


@dataclass
class WeightReport:
    """Outcome of checking the class conditions over a finite index range."""

    positive: bool
    nondecreasing: bool
    doubling: bool
    empirical_sup: float
    delta2_constant: float
    n_max: int

    @property
    def ok(self) -> bool:
        return self.positive and self.nondecreasing and self.doubling

    def to_json(self) -> dict:
        return {
            "ok": self.ok,
            "positive": self.positive,
            "nondecreasing": self.nondecreasing,
            "doubling": self.doubling,
            "empirical_sup": self.empirical_sup,
            "delta2_constant": self.delta2_constant,
            "n_max": self.n_max,
        }


def validate_weight(nu: WeightSequence, n_max: int) -> WeightReport:
    """Check positivity, monotonicity, and the doubling condition for
    indices up to n_max.  Failures are reported, not raised."""
    if n_max < 2:
        raise DomainError("n_max must be at least 2")
    n = np.arange(nu.start, n_max + 1)
    vals = nu(n)
    positive = bool(np.all(vals > 0))
    nondecreasing = bool(np.all(np.diff(vals) >= 0))
    m = np.arange(1, n_max // 2 + 1)
    sup = float(np.max(nu(2 * m) / nu(m))) if len(m) else 1.0
    try:
        c = nu.delta2_constant()
    except InvalidWeightError:
        c = nu.table_delta2
    doubling = sup <= c * (1 + 1e-12)
    return WeightReport(positive, nondecreasing, doubling, sup, c, n_max)


def _index_range(phi: WeightSequence, w: WeightSequence, length: int) -> np.ndarray:
    if phi.klass != w.klass:
        raise SpecError("argument and summand weights must share one index class")
    return np.arange(phi.start, phi.start + length)


def modular(c, orlicz: OrliczFunction, phi: WeightSequence, w: WeightSequence,
            lam: float) -> float:
    """Sum of Phi(|c_n| phi_n / lam) w_n over the support of c.

    The entry c[i] sits at index start+i of the weights' index class.
    """
    if lam <= 0:
        raise DomainError("scale must be positive")
    c = np.asarray(c)
    if c.size == 0:
        return 0.0
    n = _index_range(phi, w, c.size)
    with np.errstate(over="ignore"):
        terms = orlicz(np.abs(c) * phi(n) / lam) * w(n)
    return float(np.sum(terms))


def luxemburg_norm(c, orlicz: OrliczFunction, phi: WeightSequence,
                   w: WeightSequence, tol: float = DEFAULT_NORM_TOL) -> float:
    """inf{lam > 0 : modular(c, ..., lam) <= 1} by bracketing and bisection.

    Exponentially brackets the threshold starting from the scale of the
    largest weighted entry, then bisects the monotone predicate down to
    relative width tol.  Returns the certified upper end of the bracket,
    so the modular at the returned value is <= 1.
    """
    if not 0 < tol <= 1e-3:
        raise DomainError("tol must lie in (0, 1e-3]")
    c = np.asarray(c)
    a = np.abs(c)
    if c.size == 0 or not np.any(a > 0):
        return 0.0
    n = _index_range(phi, w, c.size)
    lam = float(np.max(a * phi(n)))

    def below(x):
        return modular(c, orlicz, phi, w, x) <= 1.0

    if below(lam):
        hi = lam
        lo = lam / 2
        for _ in range(MAX_BISECTIONS):
            if not below(lo):
                break
            hi, lo = lo, lo / 2
        else:
            return 0.0  # modular stays <= 1 down to underflow scale
    else:
        lo = lam
        hi = lam * 2
        for _ in range(MAX_BISECTIONS):
            if below(hi):
                break
            lo, hi = hi, hi * 2
        else:
            raise DomainError("failed to bracket the Luxemburg norm")

    for _ in range(MAX_BISECTIONS):
        if hi - lo <= tol * hi:
            break
        mid = 0.5 * (lo + hi)
        if below(mid):
            hi = mid
        else:
            lo = mid
    return hi
