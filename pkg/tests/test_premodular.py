"""Pre-modular forms: half-lattice vanishing, symmetries, triangle
classification, cusp behaviour, zero location and the blow-up family."""

import cmath
import math

import numpy as np
import pytest

from e2crit import (
    CharPair,
    PoleAtLattice,
    TriangleTag,
    Unclassified,
    blowup_FCs,
    classify,
    cusp_value,
    eval_Zrs,
    eval_Zrs2,
    eval_fC,
    find_zero_in_F0,
    normalize_char,
)
from e2crit.moebius import DomainTag, GAMMA_1, classify_domain

PI = math.pi
RNG = np.random.default_rng(5)

TAU0_T3 = complex(0.70738896339656, 0.7068244863222716)  # zero for (1/6, 1/6)
TAU_T1 = complex(0.5, 1.2077884937747414)  # zero for (5/6, 1/3), on the line


class TestHecke:
    def test_half_lattice_vanishes(self):
        for t in (complex(0.3, 0.8), complex(0.1, 2.2), 1.7j):
            assert abs(eval_Zrs((0.5, 0.0), t)) < 5e-12
            assert abs(eval_Zrs((0.0, 0.5), t)) < 5e-12
            assert abs(eval_Zrs((0.5, 0.5), t)) < 5e-12

    def test_pole_at_lattice(self):
        with pytest.raises(PoleAtLattice):
            eval_Zrs((2.0, -1.0), 1j)
        with pytest.raises(PoleAtLattice):
            eval_Zrs2((0.0, 0.0), 1j)

    def test_sign_symmetry(self):
        t = complex(0.4, 1.1)
        r, s = 0.23, 0.31
        assert abs(eval_Zrs((1 - r, 1 - s), t) + eval_Zrs((r, s), t)) < 1e-12

    def test_modularity_weight_one(self):
        # Z_{r',s'}(gamma tau) = (c tau + d) Z_{r,s}(tau)
        from e2crit import transform_char
        from tests_helpers import random_sl2z

        for _ in range(10):
            g = random_sl2z(RNG)
            t = complex(RNG.uniform(-1, 2), RNG.uniform(0.4, 4))
            r, s = RNG.uniform(0.06, 0.44), RNG.uniform(0.06, 0.44)
            out = transform_char(g, (r, s))
            lhs = eval_Zrs((out.r, out.s), g(t)) / g.mu(t)
            assert abs(lhs - eval_Zrs((r, s), t)) < 1e-9


class TestZrs2:
    def test_half_lattice_vanishes(self):
        assert abs(eval_Zrs2((0.0, 0.5), complex(0.23, 0.9))) < 2e-11

    def test_antisymmetry(self):
        t = complex(0.4, 1.1)
        r, s = 0.23, 0.31
        z2 = eval_Zrs2((r, s), t)
        assert abs(eval_Zrs2((1 - r, 1 - s), t) + z2) < 1e-10 * (1 + abs(z2))
        assert abs(eval_Zrs2((r + 1, s), t) - z2) < 1e-10 * (1 + abs(z2))

    def test_corner_relation(self):
        # Z2_{5/6,1/3}(gamma1 tau) = (1 - tau)^3 Z2_{1/6,1/6}(tau)
        for t in (complex(0.3, 1.2), complex(0.7, 0.9)):
            lhs = eval_Zrs2((5 / 6, 1 / 3), GAMMA_1(t))
            rhs = (1 - t) ** 3 * eval_Zrs2((1 / 6, 1 / 6), t)
            assert abs(lhs - rhs) < 1e-10 * (1 + abs(rhs))

    def test_small_u_path_matches_direct(self):
        # the rearranged small-u form agrees with the direct cubic across and
        # below the switch radius (the direct path loses digits as u shrinks)
        from e2crit.domain import DEFAULT
        from e2crit.qseries import _wp_family

        t = complex(0.31, 1.07)
        for scale in (0.2, 0.1, 0.05):
            r, s = 0.7 * scale, 0.5 * scale
            v = eval_Zrs2((r, s), t)
            wp, wpp, z_hecke = _wp_family(r, s, t, DEFAULT)
            direct = z_hecke**3 - 3 * wp * z_hecke - wpp
            assert abs(v - direct) < 1e-8 * (1 + abs(v))


class TestClassify:
    @pytest.mark.parametrize("rs,tag", [
        ((1 / 3, 1 / 3), TriangleTag.T0),
        ((5 / 6, 1 / 3), TriangleTag.T1),
        ((2 / 3, 1 / 6), TriangleTag.T2),
        ((1 / 6, 1 / 6), TriangleTag.T3),
        ((0.25, 0.25), TriangleTag.BOUNDARY),
        ((0.5, 0.25), TriangleTag.BOUNDARY),
        ((0.5, 0.0), TriangleTag.HALF_LATTICE),
        ((1.0, 0.5), TriangleTag.HALF_LATTICE),
    ])
    def test_examples(self, rs, tag):
        assert classify(rs) is tag

    def test_normalization_folds_upper_strip(self):
        # property (i): classification is invariant under the folding
        assert classify((1 / 6 + 1, 1 / 6)) is TriangleTag.T3
        assert classify(CharPair(-1 / 6, -1 / 6)) is TriangleTag.T3
        r, s = normalize_char((0.3, 0.8))
        assert 0 <= r < 1 and 0 <= s <= 0.5


class TestCuspValue:
    def test_finite_limit(self):
        got = cusp_value((0.3, 0.2), "infinity")
        assert got.kind == "finite"
        assert abs(got.value - 4j * PI**3 * 0.2 * 0.8 * (-0.6)) < 1e-12

    def test_q_coefficient(self):
        got = cusp_value((0.3, 0.0), "infinity")
        assert got.kind == "coeff_q"
        assert abs(got.value - (-48 * PI**3 * math.sin(0.6 * PI))) < 1e-12

    def test_sqrt_q_coefficient(self):
        got = cusp_value((0.3, 0.5), "infinity")
        assert got.kind == "coeff_sqrt_q"
        assert abs(got.value - (-12 * PI**3 * math.sin(0.6 * PI))) < 1e-12

    def test_divergence_flags(self):
        assert cusp_value((0.3, 0.2), "zero").kind == "divergent"
        assert cusp_value((0.3, 0.3), "one").kind == "divergent"

    def test_unclassified(self):
        with pytest.raises(Unclassified):
            cusp_value((0.0, 0.2), "zero")
        with pytest.raises(Unclassified):
            cusp_value((0.3, 0.7), "one")  # r + s = 1 boundary


class TestFindZero:
    def test_triangle0_has_none(self):
        assert find_zero_in_F0((1 / 3, 1 / 3)) is None

    def test_unique_zero_T3(self):
        root = find_zero_in_F0((1 / 6, 1 / 6))
        assert classify_domain(root) is DomainTag.F0_INTERIOR
        assert abs(root.z - TAU0_T3) < 1e-8
        assert abs(eval_Zrs2((1 / 6, 1 / 6), root)) < 1e-10

    def test_gamma1_image_relation(self):
        root3 = find_zero_in_F0((1 / 6, 1 / 6))
        root1 = find_zero_in_F0((5 / 6, 1 / 3))
        assert abs(GAMMA_1(root3.z) - root1.z) < 1e-9
        assert abs(root1.z - TAU_T1) < 1e-8

    def test_rejects_boundary_characteristic(self):
        with pytest.raises(ValueError):
            find_zero_in_F0((0.25, 0.25))


class TestBlowup:
    def test_converges_to_fC(self):
        tau = complex(0.5, 1.0)
        f = eval_fC(0.5, tau)
        errs = [abs(blowup_FCs(0.5, s, tau) - f) for s in (1e-3, 1e-4, 1e-5)]
        assert errs[0] < 1e-2
        assert errs[0] > errs[1] > errs[2]
        # linear upper bound |F - f| <= K s holds (the measured decay is
        # quadratic: the parity of the characteristic kills the odd terms)
        assert all(err <= 1.0 * s for err, s in zip(errs, (1e-3, 1e-4, 1e-5)))
        assert errs[2] < 1e-6

    def test_precondition(self):
        with pytest.raises(ValueError):
            blowup_FCs(0.5, 0.2, complex(0.5, 1.0))

    def test_admissible_everywhere_in_H(self):
        # tau - C never vanishes for real C, tau in H
        v = blowup_FCs(0.5, 1e-3, complex(0.5, 0.4))
        assert v == v  # finite


class TestBoundaryNonvanishing:
    def test_Zrs2_nonzero_on_boundary(self):
        heights = np.geomspace(0.15, 6.0, 8)
        pts = [complex(0.0, h) for h in heights]
        pts += [complex(1.0, h) for h in heights]
        pts += [0.5 + 0.5 * cmath.exp(1j * th) for th in np.linspace(0.4, PI - 0.4, 8)]
        for _ in range(20):
            while True:
                r = RNG.uniform(0.0, 1.0)
                s = RNG.uniform(0.0, 0.5)
                if min(abs(2 * r - round(2 * r)), abs(2 * s - round(2 * s))) > 0.04:
                    break
            assert min(abs(eval_Zrs2((r, s), p)) for p in pts) > 1e-6
