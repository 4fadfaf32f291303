"""Tests for Orlicz functions, weight sequences, and the Luxemburg norm."""

import numpy as np
import pytest

from orlicz_wiener.errors import DomainError, InvalidWeightError, SpecError
from orlicz_wiener.orlicz import (
    NEGATIVE_SIDE,
    NONNEGATIVE_SIDE,
    OrliczFunction,
    WeightSequence,
    luxemburg_norm,
    modular,
    validate_weight,
)


def weighted_lp_norm(c, p, phi, w):
    """Closed-form oracle for the power family: (sum |c_n|^p phi_n^p w_n)^{1/p}."""
    n = np.arange(phi.start, phi.start + len(c))
    return float(np.sum(np.abs(c) ** p * phi(n) ** p * w(n)) ** (1 / p))


CONST1 = WeightSequence("const", NEGATIVE_SIDE, 1.0)


class TestOrliczFunction:
    def test_power_closed_form(self):
        assert OrliczFunction("pow", 2)(3.0) == 9.0

    def test_zero_at_zero(self):
        for fn in (OrliczFunction("pow", 2), OrliczFunction("expm1"),
                   OrliczFunction("powlog", 1.5)):
            assert fn(0.0) == 0.0

    def test_expm1_at_ln2(self):
        assert OrliczFunction("expm1")(np.log(2)) == pytest.approx(1.0, rel=1e-14)

    def test_negative_argument_rejected(self):
        with pytest.raises(DomainError):
            OrliczFunction("pow", 2)(-1.0)

    def test_exponent_below_one_rejected(self):
        with pytest.raises(SpecError):
            OrliczFunction("pow", 0.5)
        with pytest.raises(SpecError):
            OrliczFunction.from_spec("pow:p=0.5")

    @pytest.mark.parametrize("spec", ["pow:p=2", "expm1", "powlog:p=1.5"])
    def test_spec_round_trip(self, spec):
        assert OrliczFunction.from_spec(spec).spec() == spec

    @pytest.mark.parametrize("fn", [
        OrliczFunction("pow", 1), OrliczFunction("pow", 2.5),
        OrliczFunction("expm1"), OrliczFunction("powlog", 1),
        OrliczFunction("powlog", 3),
    ])
    def test_monotone_convex_and_ratio_monotone(self, fn):
        x = np.linspace(0, 5, 201)
        y = fn(x)
        assert np.all(np.diff(y) >= -1e-12 * np.maximum(y[:-1], 1))
        # midpoint convexity on the uniform grid
        mid = fn((x[:-2] + x[2:]) / 2)
        assert np.all(mid <= (y[:-2] + y[2:]) / 2 + 1e-12 * (1 + y[2:]))
        # x -> fn(x)/x nondecreasing on positive points
        xp = x[1:]
        ratio = fn(xp) / xp
        assert np.all(np.diff(ratio) >= -1e-12 * (1 + ratio[:-1]))


class TestWeightSequence:
    def test_power_validation(self):
        rep = validate_weight(WeightSequence("pow", NEGATIVE_SIDE, 1.0), 100)
        assert rep.ok
        assert rep.empirical_sup <= 2

    def test_const_validation(self):
        rep = validate_weight(WeightSequence("const", NEGATIVE_SIDE, 1.0), 100)
        assert rep.ok
        assert rep.empirical_sup == 1.0
        assert rep.delta2_constant == 1.0

    def test_decreasing_table_fails_monotonicity(self):
        nu = WeightSequence("table", NEGATIVE_SIDE, table=(1.0, 0.5, 0.5),
                            table_delta2=1.0)
        rep = validate_weight(nu, 10)
        assert not rep.nondecreasing
        assert not rep.ok

    def test_delta2_power(self):
        assert WeightSequence("pow", NEGATIVE_SIDE, 0.0).delta2_constant() == 1.0
        assert WeightSequence("pow", NONNEGATIVE_SIDE, 2.0).delta2_constant() == 4.0

    def test_delta2_power_alpha2_scan_oracle(self):
        # sup over n <= 1e6 of ((2n+1)/(n+1))^2 stays below 4 and approaches it
        n = np.arange(1, 10**6, dtype=float)
        ratios = ((2 * n + 1) / (n + 1)) ** 2
        assert np.max(ratios) < 4.0
        assert np.max(ratios) > 4.0 - 1e-5

    def test_delta2_const(self):
        assert WeightSequence("const", NEGATIVE_SIDE, 5.0).delta2_constant() == 1.0

    def test_delta2_log_scan_oracle(self):
        nu = WeightSequence("log", NONNEGATIVE_SIDE)
        c = nu.delta2_constant()
        n = np.arange(1, 10**5, dtype=float)
        ratios = np.log(np.e + 2 * n) / np.log(np.e + n)
        assert c >= np.max(ratios)
        assert c == pytest.approx(np.max(ratios), rel=1e-9)
        assert c >= 1.0

    def test_table_bad_delta2_raises(self):
        nu = WeightSequence("table", NEGATIVE_SIDE, table=(1.0, 2.0, 8.0, 9.0),
                            table_delta2=1.5)
        with pytest.raises(InvalidWeightError):
            nu.delta2_constant()

    def test_index_class_start(self):
        assert WeightSequence("pow", NEGATIVE_SIDE, 1.0).start == 1
        assert WeightSequence("pow", NONNEGATIVE_SIDE, 1.0).start == 0

    def test_index_below_start_rejected(self):
        with pytest.raises(DomainError):
            WeightSequence("pow", NEGATIVE_SIDE, 1.0)(0)

    @pytest.mark.parametrize("spec", ["pow:alpha=1.5", "log", "const:2"])
    def test_spec_round_trip(self, spec):
        assert WeightSequence.from_spec(spec, NEGATIVE_SIDE).spec() == spec


class TestModular:
    def test_zero_sequence(self):
        assert modular(np.zeros(3), OrliczFunction("pow", 2), CONST1, CONST1, 1.0) == 0

    def test_single_term(self):
        val = modular(np.array([1.0]), OrliczFunction("pow", 2), CONST1, CONST1, 2.0)
        assert val == pytest.approx(0.25)

    def test_two_terms_with_scale_weight(self):
        phi = WeightSequence("pow", NEGATIVE_SIDE, 1.0)  # phi_n = n + 1
        val = modular(np.array([1.0, 1.0]), OrliczFunction("pow", 1), phi, CONST1, 1.0)
        assert val == pytest.approx(5.0)  # 2 + 3

    def test_nonpositive_scale_rejected(self):
        with pytest.raises(DomainError):
            modular(np.array([1.0]), OrliczFunction("pow", 1), CONST1, CONST1, 0.0)

    def test_class_mismatch_rejected(self):
        w_pos = WeightSequence("const", NONNEGATIVE_SIDE, 1.0)
        with pytest.raises(SpecError):
            modular(np.array([1.0]), OrliczFunction("pow", 1), CONST1, w_pos, 1.0)

    def test_nonincreasing_in_scale(self):
        rng = np.random.default_rng(5)
        c = rng.uniform(-1, 1, 8) + 1j * rng.uniform(-1, 1, 8)
        fn = OrliczFunction("powlog", 2)
        lams = np.linspace(0.2, 5, 30)
        vals = [modular(c, fn, CONST1, CONST1, lam) for lam in lams]
        assert np.all(np.diff(vals) <= 1e-12)


class TestLuxemburgNorm:
    def test_zero(self):
        assert luxemburg_norm(np.zeros(4), OrliczFunction("pow", 2), CONST1, CONST1) == 0

    def test_expm1_single(self):
        val = luxemburg_norm(np.array([1.0]), OrliczFunction("expm1"), CONST1, CONST1)
        assert val == pytest.approx(1 / np.log(2), rel=1e-10)

    @pytest.mark.parametrize("p", [1.0, 1.5, 2.0, 2.7, 3.0])
    def test_power_family_closed_form(self, p):
        rng = np.random.default_rng(int(p * 100))
        phi = WeightSequence("pow", NEGATIVE_SIDE, 0.5)
        w = WeightSequence("log", NEGATIVE_SIDE)
        for _ in range(50):
            m = rng.integers(1, 20)
            c = rng.uniform(-2, 2, m) + 1j * rng.uniform(-2, 2, m)
            got = luxemburg_norm(c, OrliczFunction("pow", p), phi, w)
            assert got == pytest.approx(weighted_lp_norm(c, p, phi, w), rel=1e-10)

    @pytest.mark.parametrize("fn", [
        OrliczFunction("pow", 1.5), OrliczFunction("expm1"),
        OrliczFunction("powlog", 2),
    ])
    def test_homogeneity(self, fn):
        rng = np.random.default_rng(11)
        for _ in range(40):
            c = rng.uniform(-1, 1, 6) + 1j * rng.uniform(-1, 1, 6)
            s = rng.uniform(0.1, 10) * np.exp(1j * rng.uniform(0, 2 * np.pi))
            lhs = luxemburg_norm(s * c, fn, CONST1, CONST1)
            rhs = abs(s) * luxemburg_norm(c, fn, CONST1, CONST1)
            assert lhs == pytest.approx(rhs, rel=1e-9)

    @pytest.mark.parametrize("fn", [
        OrliczFunction("pow", 2), OrliczFunction("expm1"),
        OrliczFunction("powlog", 1),
    ])
    def test_triangle_inequality(self, fn):
        rng = np.random.default_rng(13)
        phi = WeightSequence("pow", NEGATIVE_SIDE, 1.0)
        w = WeightSequence("const", NEGATIVE_SIDE, 1.0)
        for _ in range(40):
            c = rng.uniform(-1, 1, 8) + 1j * rng.uniform(-1, 1, 8)
            d = rng.uniform(-1, 1, 8) + 1j * rng.uniform(-1, 1, 8)
            nc = luxemburg_norm(c, fn, phi, w)
            nd = luxemburg_norm(d, fn, phi, w)
            ncd = luxemburg_norm(c + d, fn, phi, w)
            assert ncd <= nc + nd + 1e-9 * (nc + nd)

    def test_monotonicity(self):
        rng = np.random.default_rng(17)
        fn = OrliczFunction("powlog", 1.5)
        for _ in range(40):
            d = rng.uniform(0, 2, 7)
            c = d * rng.uniform(0, 1, 7)
            nc = luxemburg_norm(c, fn, CONST1, CONST1)
            nd = luxemburg_norm(d, fn, CONST1, CONST1)
            assert nc <= nd * (1 + 1e-9)

    def test_modular_norm_consistency(self):
        rng = np.random.default_rng(19)
        fn = OrliczFunction("expm1")
        tol = 1e-12
        for _ in range(30):
            c = rng.uniform(-1, 1, 5) + 1j * rng.uniform(-1, 1, 5)
            lam = luxemburg_norm(c, fn, CONST1, CONST1, tol)
            assert lam > 0
            assert modular(c, fn, CONST1, CONST1, lam * (1 + 10 * tol)) <= 1
            assert modular(c, fn, CONST1, CONST1, lam * (1 - 10 * tol)) >= 1 - 1e-9

    def test_tol_out_of_range_rejected(self):
        with pytest.raises(DomainError):
            luxemburg_norm(np.array([1.0]), OrliczFunction("pow", 1), CONST1,
                           CONST1, tol=1e-2)
