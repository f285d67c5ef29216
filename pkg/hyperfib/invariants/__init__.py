"""
Double cover invariant oracle

For a branch curve kC0 + (ek/2 + l)F on a Hirzebruch surface with canonical
resolution multiplicities r_i and t blow-downs to the minimal model, the two
double cover equations

 (a) 2kl = -48 + 12l + 12k - 8 chi + 4K^2 - 4t + sum (r_i - 2)(r_i - 4)
 (b) 2k + 2l = 8 + 4 chi + t - K^2 + sum (r_i - 2)

are a linear system in chi and K^2 - t. Solving it gives

 chi        = 1 + (k - 2)(l - 2)/4 - sum r_i (r_i - 2)/8
 K^2 - t    = (k - 4)(l - 4) - sum (r_i - 2)^2 / 2

None of the formulas depend on e.

"""

import logging
from fractions import Fraction
from typing import List, Optional, Tuple

from pydantic import ValidationError, validate_call

from hyperfib.arithmetic import as_integer
from hyperfib.arithmetic.models import ExactScalar
from hyperfib.errors import (InvalidArgumentError, InvariantMismatchError, OutOfRegimeError, ParityMismatchError)
from .models import BranchConfig, RiResiduals, RitoGH, RuledModel, SingularitySpectrum, SurfaceInvariants

logger = logging.getLogger('hyperfib.invariants')

# the N4 + N6 relation holds for multiplicities up to 8
THM2_MAX_R = 8


def make_branch_config(k: int, l: int, t: int = 0, r_list: Optional[List[int]] = None, n4: int = 0, n6: int = 0,
                       n8: int = 0, e: Optional[int] = None) -> BranchConfig:
    """ validate raw numbers and build a BranchConfig (r_list or counts, not both) """
    if r_list is not None and (n4 or n6 or n8):
        raise InvalidArgumentError(message='Give either r_list or the counts n4, n6, n8, not both.')
    if k % 2 != 0:
        raise ParityMismatchError(message=f'k must be even, got {k}')
    if k < 6:
        raise InvalidArgumentError(message=f'k must be at least 6, got {k}')
    if t < 0 or min(n4, n6, n8) < 0:
        raise InvalidArgumentError(message='t, n4, n6 and n8 must be non-negative.')
    if r_list is not None:
        for r in r_list:
            if r % 2 != 0:
                raise ParityMismatchError(message=f'r_i must be even, got {r}')
            if r < 2:
                raise InvalidArgumentError(message=f'r_i must be at least 2, got {r}')
        spectrum = SingularitySpectrum(r_list=r_list)
    else:
        spectrum = SingularitySpectrum.from_counts(n4=n4, n6=n6, n8=n8)
    if e is not None:
        if e < 0:
            raise InvalidArgumentError(message=f'e must be non-negative, got {e}')
        if e * k // 2 + l < 0:
            raise InvalidArgumentError(message='e*k/2 + l must be non-negative.')
        if (e * k // 2 + l) % 2 != 0:
            raise ParityMismatchError(message=f'class {k}C0 + {e * k // 2 + l}F is not even')
    try:
        return BranchConfig(k=k, l=l, e=e, spectrum=spectrum, t=t)
    except ValidationError as err:
        raise InvalidArgumentError(message=str(err))


def _sums(spectrum: SingularitySpectrum, k: int) -> Tuple[int, int, int, int]:
    """ sum (r-2), sum (r-2)(r-4), sum r(r-2), sum (r-2)(k-r-2) """
    s1 = s2 = s3 = s4 = 0
    for r in spectrum.essential:
        s1 += r - 2
        s2 += (r - 2) * (r - 4)
        s3 += r * (r - 2)
        s4 += (r - 2) * (k - r - 2)
    return s1, s2, s3, s4


def chi_value(k: int, l: int, spectrum: SingularitySpectrum) -> ExactScalar:
    return 1 + Fraction((k - 2) * (l - 2), 4) - Fraction(_sums(spectrum, k)[2], 8)


def k2_canres_value(k: int, l: int, spectrum: SingularitySpectrum) -> ExactScalar:
    return Fraction((k - 4) * (l - 4)) - Fraction(sum((r - 2) ** 2 for r in spectrum.essential), 2)


def canres_invariants(config: BranchConfig) -> SurfaceInvariants:
    """ chi, K^2 of the canonical resolution and of the minimal model """
    chi = as_integer(chi_value(config.k, config.l, config.spectrum), name='chi')
    k2_canres = as_integer(k2_canres_value(config.k, config.l, config.spectrum), name='K^2 (canonical resolution)')
    k2_min = k2_canres + config.t

    if chi < 1 or k2_min < 1:
        logger.debug("Config k=%s l=%s t=%s is not of general type (chi=%s, K^2=%s).",
                     config.k, config.l, config.t, chi, k2_min)

    return SurfaceInvariants(chi=chi, k2_canres=k2_canres, k2_min=k2_min, genus=config.genus,
                             delta=k2_min - 3 * chi)


def ri_equations_residual(config: BranchConfig, inv: SurfaceInvariants) -> RiResiduals:
    """ left minus right of the double cover equations (a), (b) """
    k, l, t = config.k, config.l, config.t
    s1, s2, _, _ = _sums(config.spectrum, k)
    res_a = 2 * k * l - (-48 + 12 * l + 12 * k - 8 * inv.chi + 4 * inv.k2_min - 4 * t + s2)
    res_b = 2 * k + 2 * l - (8 + 4 * inv.chi + t - inv.k2_min + s1)
    return RiResiduals(a=res_a, b=res_b)


@validate_call
def rito_GH(k: int, chi: int, k2_min: int, t: int) -> RitoGH:
    """ G and H with sum (r-2)(k-r-2) = H and 2l = G + sum (r-2) """
    x = 4 * chi + t - k2_min + 8
    H = 2 * k * k - k * x + 16 * chi + 2 * t - 2 * k2_min
    G = -2 * k + x
    return RitoGH(G=G, H=H)


def rito_identity_check(config: BranchConfig, inv: SurfaceInvariants) -> bool:
    gh = rito_GH(config.k, inv.chi, inv.k2_min, config.t)
    s1, _, _, s4 = _sums(config.spectrum, config.k)
    return s4 == gh.H and 2 * config.l == gh.G + s1


def eqq1_residual(config: BranchConfig, inv: SurfaceInvariants) -> ExactScalar:
    """ sum (r-2)(8-r)/8 - (15 + K^2 - t - 3chi - (k-10)(l-10)/4) """
    k, l = config.k, config.l
    lhs = Fraction(sum((r - 2) * (8 - r) for r in config.spectrum.essential), 8)
    rhs = 15 + inv.k2_min - config.t - 3 * inv.chi - Fraction((k - 10) * (l - 10), 4)
    return lhs - rhs


def eqq2_residual(config: BranchConfig, inv: SurfaceInvariants) -> ExactScalar:
    """ chi - (1 + (k-2)(l-2)/4 - sum r(r-2)/8) """
    return inv.chi - chi_value(config.k, config.l, config.spectrum)


def thm2_b_residual(config: BranchConfig, inv: SurfaceInvariants) -> int:
    """ (N4 + N6) - (15 + K^2_canres - 3chi - (k-10)(l-10)/4); zero when consistent """
    spectrum = config.spectrum
    if spectrum.r_max > THM2_MAX_R:
        logger.error("Spectrum has r_i = %s > %s.", spectrum.r_max, THM2_MAX_R)
        raise OutOfRegimeError(message=f'the N4 + N6 relation needs r_i <= {THM2_MAX_R}, got r_max = {spectrum.r_max}')

    k, l = config.k, config.l
    rhs = 15 + inv.k2_canres - 3 * inv.chi - Fraction((k - 10) * (l - 10), 4)
    residual = spectrum.n4 + spectrum.n6 - rhs

    # for r in {2, 4, 6, 8} the weights (r-2)(8-r)/8 are 0, 1, 1, 0
    if residual != eqq1_residual(config, inv):
        raise InvariantMismatchError(message='the N4 + N6 relation and its sum form disagree.')

    return as_integer(residual, name='N4 + N6 residual')


@validate_call
def thm2_c_chi(k: int, l: int, n4: int, n6: int, n8: int) -> ExactScalar:
    """ chi = 1 + (k-2)(l-2)/4 - N4 - 3 N6 - 6 N8 """
    return 1 + Fraction((k - 2) * (l - 2), 4) - n4 - 3 * n6 - 6 * n8


@validate_call
def plane_to_ruled(degree: int, mult: int) -> RuledModel:
    """ blow up a point of multiplicity mult on a plane branch curve of given degree """
    if mult < 0 or degree < 0:
        raise InvalidArgumentError(message='degree and multiplicity must be non-negative.')
    if mult > degree:
        raise InvalidArgumentError(message=f'multiplicity {mult} exceeds degree {degree}')
    if (degree - mult) % 2 != 0:
        logger.error("Parity mismatch: degree %s, multiplicity %s.", degree, mult)
        raise ParityMismatchError(message=f'multiplicity {mult} and degree {degree} must have the same parity')
    return RuledModel(k=degree - mult, l=(degree + mult) // 2, e=1)
