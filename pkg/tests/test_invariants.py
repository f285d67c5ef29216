import random
import unittest
from fractions import Fraction

from hyperfib.bounds import lemma_check, p1, r_max_cap
from hyperfib.errors import (InvalidArgumentError, NonIntegralInvariantError, OutOfRegimeError, ParityMismatchError,
                             PreconditionViolatedError)
from hyperfib.invariants import (canres_invariants, chi_value, eqq1_residual, eqq2_residual, make_branch_config,
                                 plane_to_ruled, ri_equations_residual, rito_GH, rito_identity_check, thm2_b_residual,
                                 thm2_c_chi)
from hyperfib.invariants.models import BranchConfig, SingularitySpectrum, SurfaceInvariants

RANDOM_CONFIGS = 10000


def random_configs(seed: int, count: int = RANDOM_CONFIGS):
    """ branch data with k in [6, 30], l in [k/2, 3k], capped even r_i, t in [0, 12] and integral invariants """
    rng = random.Random(seed)
    produced = 0
    while produced < count:
        k = rng.randrange(6, 31, 2)
        l = rng.randint(k // 2, 3 * k)
        cap = r_max_cap(k, l, deep_regime=False)
        r_list = [rng.randrange(2, cap + 1, 2) for _ in range(rng.randint(0, 6))] if cap >= 2 else []
        config = make_branch_config(k=k, l=l, t=rng.randint(0, 12), r_list=r_list)
        try:
            inv = canres_invariants(config)
        except NonIntegralInvariantError:
            continue
        produced += 1
        yield config, inv


class TestCanonicalResolution(unittest.TestCase):
    """ Test cases for the double cover invariant oracle """

    def test_smooth_branch(self):
        """ F_0, l = 26 of the (5, -7) cell """
        inv = canres_invariants(make_branch_config(k=12, l=26))
        self.assertEqual((inv.chi, inv.k2_canres, inv.k2_min, inv.genus, inv.delta), (61, 176, 176, 5, -7))

    def test_sharp_remark_config(self):
        """ seven six-fold points on k = 12, l = 12 give chi = 5, K^2 = 8 """
        inv = canres_invariants(make_branch_config(k=12, l=12, n6=7))
        self.assertEqual((inv.chi, inv.k2_min, inv.genus, inv.delta), (5, 8, 5, -7))

    def test_three_three_point(self):
        """ one (3,3)-point on k = 16, l = 14 with one blow-down """
        spectrum = SingularitySpectrum().with_point(3, 3)
        self.assertEqual(spectrum.r_list, (2, 4))
        config = BranchConfig(k=16, l=14, spectrum=spectrum, t=1)
        inv = canres_invariants(config)
        self.assertEqual((inv.chi, inv.k2_canres, inv.k2_min, inv.delta), (42, 118, 119, -7))
        self.assertEqual(inv.t, 1)

    def test_negligible_points(self):
        """ r_i = 2 entries change nothing """
        plain = canres_invariants(make_branch_config(k=12, l=26))
        with_doubles = canres_invariants(make_branch_config(k=12, l=26, r_list=[2, 2, 2]))
        self.assertEqual(plain, with_doubles)

    def test_e_does_not_matter(self):
        """ the invariants are the same on every F_e carrying the class """
        values = {canres_invariants(make_branch_config(k=12, l=26, e=e)) for e in (0, 1, 2)}
        self.assertEqual(len(values), 1)

    def test_non_integral(self):
        """ k = 0 mod 4 with l odd is not an even class """
        self.assertEqual(chi_value(12, 13, SingularitySpectrum()), Fraction(1) + Fraction(110, 4))
        with self.assertRaises(NonIntegralInvariantError):
            canres_invariants(make_branch_config(k=12, l=13))

    def test_surface_invariants_consistency(self):
        with self.assertRaises(ValueError):
            SurfaceInvariants(chi=5, k2_canres=8, k2_min=8, genus=5, delta=0)


class TestBranchConfigFactory(unittest.TestCase):
    """ Test cases for make_branch_config and the spectrum helpers """

    def test_counts(self):
        config = make_branch_config(k=18, l=13, t=1, n4=1, n6=2, n8=1)
        self.assertEqual(config.spectrum.r_list, (4, 6, 6, 8))
        self.assertEqual((config.spectrum.n4, config.spectrum.n6, config.spectrum.n8), (1, 2, 1))
        self.assertEqual(config.spectrum.r_max, 8)
        self.assertEqual(config.genus, 8)

    def test_rejects_bad_input(self):
        with self.assertRaises(ParityMismatchError):
            make_branch_config(k=13, l=10)
        with self.assertRaises(ParityMismatchError):
            make_branch_config(k=12, l=10, r_list=[3])
        with self.assertRaises(InvalidArgumentError):
            make_branch_config(k=12, l=10, r_list=[0])
        with self.assertRaises(InvalidArgumentError):
            make_branch_config(k=4, l=10)
        with self.assertRaises(InvalidArgumentError):
            make_branch_config(k=12, l=10, t=-1)
        with self.assertRaises(InvalidArgumentError):
            make_branch_config(k=12, l=10, r_list=[4], n4=1)
        with self.assertRaises(ParityMismatchError):
            make_branch_config(k=14, l=12, e=1)
        with self.assertRaises(InvalidArgumentError):
            make_branch_config(k=12, l=-14, e=1)

    def test_with_point(self):
        spectrum = SingularitySpectrum().with_point(4).with_point(5, 5).with_point(3)
        self.assertEqual(spectrum.r_list, (2, 4, 4, 6))
        self.assertEqual(spectrum.essential, (4, 4, 6))
        with self.assertRaises(ValueError):
            spectrum.with_point(4, 4)
        with self.assertRaises(ValueError):
            spectrum.with_point(1)


class TestRitoQuantities(unittest.TestCase):
    """ Test cases for G, H and their identities """

    def test_rito_GH(self):
        gh = rito_GH(12, 61, 176, 0)
        self.assertEqual((gh.G, gh.H), (52, 0))
        gh = rito_GH(16, 42, 119, 1)
        self.assertEqual((gh.G, gh.H), (26, 20))

    def test_identity(self):
        for config in (make_branch_config(k=12, l=26), make_branch_config(k=16, l=14, t=1, r_list=[2, 4]),
                       make_branch_config(k=12, l=12, n6=7)):
            self.assertTrue(rito_identity_check(config, canres_invariants(config)))

    def test_perturbed_chi_breaks_identity(self):
        config = make_branch_config(k=12, l=26)
        inv = canres_invariants(config)
        tampered = SurfaceInvariants(chi=60, k2_canres=inv.k2_canres, k2_min=inv.k2_min, genus=inv.genus,
                                     delta=inv.k2_min - 180)
        self.assertFalse(rito_identity_check(config, tampered))
        self.assertFalse(ri_equations_residual(config, tampered).ok)

    def test_perturbed_k2_breaks_identity(self):
        config = make_branch_config(k=16, l=14, t=1, r_list=[2, 4])
        inv = canres_invariants(config)
        for step in (-1, 1):
            tampered = SurfaceInvariants(chi=inv.chi, k2_canres=inv.k2_canres + step, k2_min=inv.k2_min + step,
                                         genus=inv.genus, delta=inv.delta + step)
            self.assertFalse(rito_identity_check(config, tampered), step)
            self.assertFalse(ri_equations_residual(config, tampered).ok, step)

    def test_perturbed_l_breaks_identity(self):
        config = make_branch_config(k=16, l=14, t=1, r_list=[2, 4])
        inv = canres_invariants(config)
        for step in (-1, 1):
            shifted = make_branch_config(k=16, l=14 + step, t=1, r_list=[2, 4])
            self.assertFalse(rito_identity_check(shifted, inv), step)
            self.assertFalse(ri_equations_residual(shifted, inv).ok, step)

    def test_perturbed_t_breaks_identity(self):
        config = make_branch_config(k=16, l=14, t=1, r_list=[2, 4])
        inv = canres_invariants(config)
        for step in (-1, 1):
            shifted = make_branch_config(k=16, l=14, t=1 + step, r_list=[2, 4])
            self.assertFalse(rito_identity_check(shifted, inv), step)
            self.assertFalse(ri_equations_residual(shifted, inv).ok, step)


class TestThm2(unittest.TestCase):
    """ Test cases for the deep regime formulas """

    def test_residual_examples(self):
        for config in (make_branch_config(k=16, l=14, t=1, r_list=[2, 4]), make_branch_config(k=12, l=12, n6=7),
                       make_branch_config(k=12, l=26)):
            self.assertEqual(thm2_b_residual(config, canres_invariants(config)), 0)

    def test_residual_out_of_regime(self):
        config = make_branch_config(k=24, l=30, r_list=[10])
        with self.assertRaises(OutOfRegimeError):
            thm2_b_residual(config, canres_invariants(config))

    def test_chi_formula(self):
        self.assertEqual(thm2_c_chi(12, 26, 0, 0, 0), 61)
        self.assertEqual(thm2_c_chi(12, 12, 0, 7, 0), 5)
        self.assertEqual(thm2_c_chi(18, 13, 1, 0, 0), 44)


class TestPlaneToRuled(unittest.TestCase):
    """ Test cases for the P^2 conversion """

    def test_examples(self):
        ruled = plane_to_ruled(22, 0)
        self.assertEqual((ruled.k, ruled.l, ruled.e, ruled.genus), (22, 11, 1, 10))
        ruled = plane_to_ruled(18, 6)
        self.assertEqual((ruled.k, ruled.l), (12, 12))
        ruled = plane_to_ruled(20, 2)
        self.assertEqual((ruled.k, ruled.l, ruled.genus), (18, 11, 8))

    def test_errors(self):
        with self.assertRaises(ParityMismatchError):
            plane_to_ruled(19, 0)
        with self.assertRaises(InvalidArgumentError):
            plane_to_ruled(6, 8)
        with self.assertRaises(InvalidArgumentError):
            plane_to_ruled(6, -2)


class TestOracleIdentitySuite(unittest.TestCase):
    """ randomized branch data against every restatement of the double cover equations """

    def test_identities(self):
        failures = []
        for config, inv in random_configs(seed=1):
            if not ri_equations_residual(config, inv).ok:
                failures.append(('ri', config))
            if not rito_identity_check(config, inv):
                failures.append(('rito', config))
            if eqq1_residual(config, inv) != 0 or eqq2_residual(config, inv) != 0:
                failures.append(('eqq', config))
            if config.spectrum.r_max <= 8 and thm2_b_residual(config, inv) != 0:
                failures.append(('thm2', config))
            if config.spectrum.r_max <= 8:
                spectrum = config.spectrum
                self.assertEqual(thm2_c_chi(config.k, config.l, spectrum.n4, spectrum.n6, spectrum.n8), inv.chi)
        self.assertEqual(failures, [])

    def test_residual_combinations_with_perturbed_invariants(self):
        """ eqq1 and eqq2 stay fixed combinations of (a) and (b) when chi and K^2 are wrong """
        rng = random.Random(3)
        for config, inv in random_configs(seed=4, count=2000):
            d_chi, d_k2 = rng.randint(-5, 5), rng.randint(-5, 5)
            tampered = SurfaceInvariants(chi=inv.chi + d_chi, k2_canres=inv.k2_canres + d_k2,
                                         k2_min=inv.k2_min + d_k2, genus=inv.genus,
                                         delta=inv.delta + d_k2 - 3 * d_chi)
            res = ri_equations_residual(config, tampered)
            self.assertEqual(8 * eqq1_residual(config, tampered), res.a - 4 * res.b, config)
            self.assertEqual(8 * eqq2_residual(config, tampered), -res.a - 4 * res.b, config)
            self.assertEqual(res.ok, d_chi == 0 and d_k2 == 0, config)

    def test_lemma_soundness(self):
        """ 2l <= G + H/(k - r_m - 2) for every k > 8, and p1 <= 0 says the same """
        counterexamples = []
        for config, inv in random_configs(seed=2):
            if config.k <= 8:
                continue
            if not lemma_check(config, inv, 'a'):
                counterexamples.append(config)
            r_m = config.spectrum.r_max
            gh = rito_GH(config.k, inv.chi, inv.k2_min, config.t)
            direct = 2 * config.l <= gh.G + Fraction(gh.H, config.k - r_m - 2)
            self.assertEqual(direct, p1(config.l, r_m, gh.G, gh.H, config.k) <= 0)
        self.assertEqual(counterexamples, [])

    def test_lemma_variant_b(self):
        config = make_branch_config(k=16, l=14, t=1, r_list=[2, 4])
        self.assertTrue(lemma_check(config, canres_invariants(config), 'b'))
        config = make_branch_config(k=12, l=12, n6=7)
        with self.assertRaises(PreconditionViolatedError):
            lemma_check(config, canres_invariants(config), 'b')
        config = make_branch_config(k=8, l=12)
        with self.assertRaises(PreconditionViolatedError):
            lemma_check(config, canres_invariants(config), 'a')


if __name__ == '__main__':
    unittest.main()
