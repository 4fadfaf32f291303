"""Laurent polynomials on the unit circle: coefficients, evaluation,
convolution products, the absolute-sum norm, and coefficient splitting."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import SpecError


@dataclass
class LaurentPolynomial:
    """Finite Fourier series sum_k f_k e^{ik theta}, -n_max <= k <= n_max.

    Coefficients are stored densely; coeffs[k + n_max] is f_k.  The
    constructor trims all-zero extreme tails to a canonical support bound.
    """

    coeffs: np.ndarray
    n_max: int

    def __post_init__(self):
        c = np.asarray(self.coeffs, dtype=complex)
        if c.shape != (2 * self.n_max + 1,):
            raise SpecError(
                f"coefficient array must have length {2 * self.n_max + 1}, got {c.shape}"
            )
        nz = np.nonzero(c)[0]
        if len(nz) == 0:
            self.n_max = 0
            self.coeffs = np.zeros(1, dtype=complex)
            return
        reach = max(abs(int(nz[0]) - self.n_max), abs(int(nz[-1]) - self.n_max))
        if reach < self.n_max:
            c = c[self.n_max - reach: self.n_max + reach + 1]
            self.n_max = reach
        self.coeffs = c

    @classmethod
    def zero(cls) -> "LaurentPolynomial":
        return cls(np.zeros(1, dtype=complex), 0)

    @classmethod
    def from_dict(cls, entries: dict) -> "LaurentPolynomial":
        """Build from a mapping {k: coefficient}."""
        if not entries:
            return cls.zero()
        n = max(abs(int(k)) for k in entries)
        c = np.zeros(2 * n + 1, dtype=complex)
        for k, v in entries.items():
            c[int(k) + n] = v
        return cls(c, n)

    @classmethod
    def from_json(cls, doc) -> "LaurentPolynomial":
        """Parse {"coeffs": [{"k": int, "re": float, "im": float}, ...]}.

        Unknown keys and duplicate k are rejected.
        """
        if not isinstance(doc, dict) or set(doc) != {"coeffs"}:
            raise SpecError("coefficient JSON must have exactly the key 'coeffs'")
        entries = {}
        for item in doc["coeffs"]:
            if not isinstance(item, dict) or set(item) != {"k", "re", "im"}:
                raise SpecError("each coefficient must have exactly keys 'k', 're', 'im'")
            k = item["k"]
            if not isinstance(k, int):
                raise SpecError(f"coefficient index must be an integer, got {k!r}")
            if k in entries:
                raise SpecError(f"duplicate coefficient index {k}")
            entries[k] = complex(float(item["re"]), float(item["im"]))
        return cls.from_dict(entries)

    def to_json(self) -> dict:
        out = []
        for k in range(-self.n_max, self.n_max + 1):
            v = self.coeff(k)
            if v != 0:
                out.append({"k": k, "re": v.real, "im": v.imag})
        return {"coeffs": out}

    def coeff(self, k: int) -> complex:
        """f_k, zero outside the stored band."""
        if abs(k) > self.n_max:
            return 0j
        return complex(self.coeffs[k + self.n_max])

    def evaluate(self, theta):
        """sum_k f_k e^{ik theta} by direct summation; theta may be an array."""
        theta = np.asarray(theta, dtype=float)
        k = np.arange(-self.n_max, self.n_max + 1)
        phases = np.exp(1j * np.multiply.outer(theta, k))
        return phases @ self.coeffs

    def wiener_norm(self) -> float:
        return float(np.sum(np.abs(self.coeffs)))

    def multiply(self, other: "LaurentPolynomial") -> "LaurentPolynomial":
        """Coefficient convolution; support bound adds."""
        return LaurentPolynomial(
            np.convolve(self.coeffs, other.coeffs), self.n_max + other.n_max
        )

    __mul__ = multiply

    def split(self):
        """(negative part, nonnegative part): arrays indexed from 1 and 0.

        neg[i] is f_{-(i+1)}; nonneg[i] is f_i.
        """
        neg = self.coeffs[: self.n_max][::-1].copy()
        nonneg = self.coeffs[self.n_max:].copy()
        return neg, nonneg

    @classmethod
    def merge(cls, neg, nonneg) -> "LaurentPolynomial":
        """Inverse of split."""
        neg = np.asarray(neg, dtype=complex)
        nonneg = np.asarray(nonneg, dtype=complex)
        n = max(len(neg), len(nonneg) - 1, 0)
        c = np.zeros(2 * n + 1, dtype=complex)
        if len(neg):
            c[n - len(neg): n] = neg[::-1]
        c[n: n + len(nonneg)] = nonneg
        return cls(c, n)

    def scaled(self, s: complex) -> "LaurentPolynomial":
        return LaurentPolynomial(self.coeffs * s, self.n_max)


@dataclass
class GridSamples:
    """Values of a function at theta_j = 2 pi j / N on a power-of-two grid."""

    values: np.ndarray = field(default_factory=lambda: np.zeros(8, dtype=complex))

    def __post_init__(self):
        v = np.asarray(self.values, dtype=complex).ravel()
        n = len(v)
        if n < 2 or n & (n - 1):
            raise SpecError(f"grid size must be a power of two >= 2, got {n}")
        self.values = v

    @property
    def size(self) -> int:
        return len(self.values)

    @property
    def thetas(self) -> np.ndarray:
        return 2 * np.pi * np.arange(self.size) / self.size


def sample(f: LaurentPolynomial, n_grid: int) -> GridSamples:
    """Evaluate f on the uniform n_grid-point grid."""
    s = GridSamples(np.zeros(n_grid, dtype=complex))
    return GridSamples(f.evaluate(s.thetas))


def fourier_coefficients(s: GridSamples, band: int) -> LaurentPolynomial:
    """Discrete Fourier coefficients f_k = (1/N) sum_j v_j e^{-ik theta_j}
    for |k| <= band; exact on band-limited input when N > 2 band."""
    if band < 0:
        raise SpecError("band must be nonnegative")
    if band > s.size // 2 - 1:
        raise SpecError(f"band {band} too large for grid of size {s.size}")
    spec = np.fft.fft(s.values) / s.size
    c = np.zeros(2 * band + 1, dtype=complex)
    for k in range(-band, band + 1):
        c[k + band] = spec[k % s.size]
    return LaurentPolynomial(c, band)
