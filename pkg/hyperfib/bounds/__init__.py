"""
Genus and multiplicity bounds

The genus bound limits the minimal genus of a hyperelliptic pencil when K^2 < 4chi - 6.
It rests on twelve bounds on the fibre degree k (cases a to g'), each
derived from one case inequality in k with the smallest t the
case allows. Irrational bounds are kept as p + sqrt(q) and compared exactly.

"""

import math
import logging
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Tuple, Union

from pydantic import validate_call

from hyperfib.arithmetic import compare_forms, form_floor, largest_even_at_most, sqrt_le
from hyperfib.arithmetic.models import SqrtForm
from hyperfib.errors import PreconditionViolatedError, UnknownCaseError
from hyperfib.invariants import rito_GH
from hyperfib.invariants.models import BranchConfig, SurfaceInvariants
from .models import CaseBound, CaseLabel, KBoundReport, LemmaVariant, MainPropVerdict, PrimedGH

logger = logging.getLogger('hyperfib.bounds')

# smallest t each case is stated for
CASE_T_FLOOR: Dict[CaseLabel, int] = {
    CaseLabel.a: 2,
    CaseLabel.b: 2,
    CaseLabel.c: 1,
    CaseLabel.c2: 1,
    CaseLabel.c3: 2,
    CaseLabel.d: 0,
    CaseLabel.e1: 0,
    CaseLabel.e2: 0,
    CaseLabel.f1: 1,
    CaseLabel.f2: 2,
    CaseLabel.g1: 0,
    CaseLabel.g2: 0,
}

# the lemma and the case inequalities need k > 8
MIN_LEMMA_K = 9
# (k-12)(l-12) <= 29 - 6 N8 is only used for 32 <= chi <= 53
EQ2_CHI_RANGE = (32, 53)


def _label(case_label: Union[CaseLabel, str]) -> CaseLabel:
    try:
        return CaseLabel(case_label.value if isinstance(case_label, CaseLabel) else case_label)
    except ValueError:
        raise UnknownCaseError(message=f'Unknown case label: {case_label}')


def _check_theorem_range(chi: int, k2: int) -> None:
    if chi < 1:
        raise PreconditionViolatedError(message=f'requires chi >= 1, got chi = {chi}')
    if k2 >= 4 * chi - 6:
        logger.error("K^2 = %s is not below 4 chi - 6 = %s.", k2, 4 * chi - 6)
        raise PreconditionViolatedError(message='requires K^2 < 4*chi - 6')


def genus_sqrt_predicate(g: int, n: int) -> bool:
    """ g <= (3 + sqrt(1 + 8n))/2, for g >= 2 """
    return (2 * g - 3) ** 2 <= 1 + 8 * n


def _sqrt_genus_floor(chi: int) -> int:
    """ largest g with (2g - 3)^2 <= 1 + 8 chi """
    return (3 + math.isqrt(1 + 8 * chi)) // 2


@validate_call
def genus_bound(chi: int, k2: int) -> int:
    """ floor of the bound on the minimal genus """
    _check_theorem_range(chi, k2)
    d = 4 * chi - k2 - 6
    terms = [
        -1 + Fraction(8 * chi, d),
        1 + Fraction(8 * chi - 16, d),
        1 + Fraction(8 * chi, d + 3),
    ]
    bound = max(max(math.floor(term) for term in terms), _sqrt_genus_floor(chi))
    logger.debug("Genus bound for chi=%s, K^2=%s: %s", chi, k2, bound)
    return bound


def _rational_case(x: int, chi: int, label: CaseLabel) -> Fraction:
    """ x = 4chi + t - K^2 """
    formulas: Dict[CaseLabel, Callable[[], Fraction]] = {
        CaseLabel.a: lambda: Fraction(16 * chi - 16, x - 8),
        CaseLabel.b: lambda: Fraction(16 * chi, x - 8),
        CaseLabel.c: lambda: 4 + Fraction(16 * chi, x - 4),
        CaseLabel.c2: lambda: 4 + Fraction(16 * chi - 16, x + 2),
        CaseLabel.c3: lambda: 4 + Fraction(16 * chi - 4, x - 5),
        CaseLabel.d: lambda: 4 + Fraction(16 * chi - 32, x - 6),
        CaseLabel.e2: lambda: 4 + Fraction(16 * chi, x),
        CaseLabel.f1: lambda: 2 + Fraction(16 * chi - 16, x - 2),
        CaseLabel.f2: lambda: 2 + Fraction(16 * chi - 16, x - 8),
        CaseLabel.g2: lambda: 2 + Fraction(16 * chi - 16, x - 6),
    }
    return formulas[label]()


def case_bound(case_label: Union[CaseLabel, str], chi: int, k2: int, t: Optional[int] = None) -> CaseBound:
    """ the k bound of one case, at t (default: the smallest t of the case) """
    label = _label(case_label)
    _check_theorem_range(chi, k2)
    floor = CASE_T_FLOOR[label]
    if t is None:
        t = floor
    if t < floor:
        raise PreconditionViolatedError(message=f'case {label.value} needs t >= {floor}, got t = {t}')

    if label in (CaseLabel.e1, CaseLabel.g1):
        bound = SqrtForm(p=5, q=1 + 8 * chi)
    else:
        bound = SqrtForm(p=_rational_case(4 * chi + t - k2, chi, label))

    return CaseBound(label=label, bound=bound, assumed_t=t)


@validate_call
def k_bound_cases(chi: int, k2: int) -> KBoundReport:
    """ all twelve case bounds on k, the largest even k they allow and its genus """
    _check_theorem_range(chi, k2)
    cases = [case_bound(label, chi, k2) for label in CaseLabel]

    top = cases[0]
    for case in cases[1:]:
        if compare_forms(case.bound, top.bound) > 0:
            top = case

    max_even_k = largest_even_at_most(form_floor(top.bound))
    logger.debug("Largest k bound for chi=%s, K^2=%s from case %s: k <= %s", chi, k2, top.label, max_even_k)

    return KBoundReport(chi=chi, k2=k2, cases=cases, max_label=top.label, max_even_k=max_even_k,
                        genus_cap=(max_even_k - 2) // 2)


@validate_call
def p1(l: int, r_m: int, G: int, H: int, k: int) -> int:
    return (2 * l - G) * (k - r_m - 2) - H


@validate_call
def p2(l: int, r_m: int, G: int, H: int, k: int) -> int:
    return (2 * l - G) * ((r_m - 4) * (k - r_m) + (r_m - 2) * (k - r_m - 2)) - H * (2 * r_m - 6)


def lemma_check(config: BranchConfig, inv: SurfaceInvariants, variant: Union[LemmaVariant, str] = LemmaVariant.a,
                r_max: Optional[int] = None) -> bool:
    """
    2l <= G + H/(k - r_m - 2)                                      (variant a)
    2l <= G + H (2r_m - 6)/((r_m-4)(k-r_m) + (r_m-2)(k-r_m-2))     (variant b)
    r_max overrides the spectrum's largest r_i
    """
    variant = LemmaVariant(variant.value if isinstance(variant, LemmaVariant) else variant)
    k, l = config.k, config.l
    if k < MIN_LEMMA_K:
        raise PreconditionViolatedError(message=f'the lemma needs k > 8, got k = {k}')

    r_m = config.spectrum.r_max if r_max is None else r_max
    gh = rito_GH(k, inv.chi, inv.k2_min, config.t)

    if variant == LemmaVariant.a:
        if r_m > k // 2 + 2 or k - r_m - 2 <= 0:
            raise PreconditionViolatedError(message=f'variant a needs r_m <= k/2 + 2, got r_m = {r_m}')
        return p1(l, r_m, gh.G, gh.H, k) <= 0

    if r_m < 4:
        raise PreconditionViolatedError(message=f'variant b needs r_m >= 4, got r_m = {r_m}')
    # every point of order r_m sits on top of an r_m - 2 point of the same (r_m-1, r_m-1)-pair
    if config.spectrum.count(r_m) > config.spectrum.count(r_m - 2):
        raise PreconditionViolatedError(message='variant b needs every r_m point in a (r_m-1, r_m-1) pair')
    denominator = (r_m - 4) * (k - r_m) + (r_m - 2) * (k - r_m - 2)
    if denominator <= 0:
        raise PreconditionViolatedError(message='variant b denominator is not positive')
    return p2(l, r_m, gh.G, gh.H, k) <= 0


def mainprop_inequality(case_label: Union[CaseLabel, str], chi: int, k2: int, t: int, k: int,
                        j: Optional[int] = None, n: Optional[int] = None) -> MainPropVerdict:
    """ the inequality in k of one case """
    label = _label(case_label)
    floor = CASE_T_FLOOR[label]
    if t < floor:
        raise PreconditionViolatedError(message=f'case {label.value} needs t >= {floor}, got t = {t}')

    x = 4 * chi + t - k2
    side_condition = None

    if label == CaseLabel.a:
        holds = (x - 8) * k <= 16 * chi - 16
    elif label == CaseLabel.b:
        holds = (x - 8) * k * k - 16 * chi * k + 32 * chi <= 0
    elif label == CaseLabel.c:
        holds = ((x - 4) * k * k + (-48 * chi - 8 * t + 8 * k2 + 32) * k
                 + 160 * chi + 16 * t - 16 * k2 - 96) <= 0
    elif label == CaseLabel.c2:
        holds = (x + 2) * k <= 32 * chi + 4 * t - 4 * k2 - 8
    elif label == CaseLabel.c3:
        holds = ((x - 5) * k * k + (-48 * chi - 8 * t + 8 * k2 + 44) * k
                 + 160 * chi + 16 * t - 16 * k2 - 128) <= 0
    elif label == CaseLabel.d:
        if j is None or n is None or j < 0 or n < 0:
            raise PreconditionViolatedError(message='case d needs j >= 0 and n >= 0')
        holds = (x + 8 + 2 * j - 2 * n) * k <= 32 * chi + 4 * t - 4 * k2 - 8 * n
        side_condition = n <= j + 7
    elif label in (CaseLabel.e1, CaseLabel.g1):
        if 1 + 8 * chi < 0:
            raise PreconditionViolatedError(message='requires 1 + 8 chi >= 0')
        holds = sqrt_le(k, 5, 1 + 8 * chi)
    elif label == CaseLabel.e2:
        holds = x * k <= 32 * chi + 4 * t - 4 * k2
    elif label == CaseLabel.f1:
        holds = (x - 2) * k <= 24 * chi + 2 * t - 2 * k2 - 20
    elif label == CaseLabel.f2:
        holds = ((x - 8) * k * k + (-32 * chi - 4 * t + 4 * k2 + 48) * k
                 + 80 * chi + 4 * t - 4 * k2 - 96) <= 0
    else:
        holds = (x - 6) * k <= 24 * chi + 2 * t - 2 * k2 - 28

    return MainPropVerdict(label=label, holds=holds, side_condition=side_condition)


def primed_GH(case_label: Union[CaseLabel, str], G: int, H: int, k: int, n: int) -> PrimedGH:
    """ G', H' after removing n points of top order (cases a, c, d) """
    label = _label(case_label)
    half = k // 2
    if label == CaseLabel.a:
        # n singularities (k/2+1, k/2+1), i.e. pairs r = k/2, k/2 + 2
        return PrimedGH(G=G + n * (k - 2), H=H - n * (half * (half - 4) + (half - 2) ** 2))
    if label in (CaseLabel.c, CaseLabel.d):
        # n points with r = k/2
        return PrimedGH(G=G + n * (half - 2), H=H - n * (half - 2) ** 2)
    raise UnknownCaseError(message=f'G\', H\' are only defined for cases a, c and d, got {label.value}')


@validate_call
def r_max_cap(k: int, l: int, deep_regime: bool) -> int:
    """ largest even r_m allowed by the multiplicity caps """
    if k % 2 != 0:
        raise PreconditionViolatedError(message=f'k must be even, got {k}')
    caps: List[int] = [k // 2 + 2 if k % 4 == 0 else k // 2 + 1, l - k // 2 + 2]
    if deep_regime:
        caps.append(8)
    cap = largest_even_at_most(min(caps))
    return cap if cap >= 2 else 0


@validate_call
def eq2_check(k: int, l: int, n8: int, chi: int) -> bool:
    """ (k - 12)(l - 12) <= 29 - 6 N8 """
    low, high = EQ2_CHI_RANGE
    if not low <= chi <= high:
        raise PreconditionViolatedError(message=f'requires {low} <= chi <= {high}, got chi = {chi}')
    return (k - 12) * (l - 12) <= 29 - 6 * n8


def implied_genus_caps(chi: int, k2: int) -> Tuple[int, int]:
    """ (genus bound, genus cap from the even k of the case list) """
    return genus_bound(chi, k2), k_bound_cases(chi, k2).genus_cap
