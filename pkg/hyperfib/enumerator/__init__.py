"""
Maximal chi search

For fixed g (k = 2g + 2) and delta = K^2 - 3chi < -6, the branch data of a
surface with K^2 < 3chi - 6 satisfy

 N4 + N6 = 15 + delta - t - (k - 10)(l - 10)/4
 chi     = 1 + (k - 2)(l - 2)/4 - N4 - 3 N6 - 6 N8

plus the numerical conditions (0) to (6) and the multiplicity caps. The search
walks l, t and the full (N4, N6, N8) space in both modes; with narrowed caps the
maximum need not sit at N6 = N8 = 0.

"""

import asyncio
import logging
from typing import Iterator, List, Optional, Tuple

from hyperfib.errors import InvalidArgumentError, OutOfRegimeError, PreconditionViolatedError
from hyperfib.invariants import make_branch_config
from hyperfib.invariants.models import BranchConfig
from .models import (DEFAULT_K_MAX, DEFAULT_N4_MAX, DEFAULT_T_MAX, Candidate, CellQuery, CellResult, ChiTable,
                     Condition, SearchMode, TableCell)

logger = logging.getLogger('hyperfib.enumerator')

DELTA_MAX = -7
DELTA_MIN = -18
MIN_GENUS = 5
MIN_K = 12

REFERENCE_G_RANGE = (5, 10)
REFERENCE_DELTA_RANGE = (-16, -7)

# (l, t, N4, N6, N8, chi, K^2)
RawCandidate = Tuple[int, int, int, int, int, int, int]


def conditions_check(k: int, l: int, t: int, n4: int, n6: int, n8: int) -> List[str]:
    """ identifiers of every violated condition, empty if the tuple passes """
    if k % 2 != 0 or k < MIN_K:
        raise PreconditionViolatedError(message=f'k must be even and >= {MIN_K}, got {k}')
    if min(t, n4, n6, n8) < 0:
        raise PreconditionViolatedError(message='t, N4, N6, N8 must be non-negative')

    half = k // 2
    smooth = n4 == 0 and n6 == 0 and n8 == 0
    violated: List[Condition] = []

    # the class is even and B.C0 = l - ek/2
    if k % 4 == 0 and l % 2 != 0:
        violated.append(Condition.parity)
    if l < half:
        violated.append(Condition.l_at_least_half_k)
    if (l == half) != (t == 2 and smooth):
        violated.append(Condition.l_half_k_iff_two_blowdowns)
    if l == half + 2 and not (n6 == 0 and n8 == 0 and t >= n4 and (t == n4 or n4 > 1)):
        violated.append(Condition.l_half_k_plus_two)
    if l == k - 2 and t == 0 and half % 2 != 0:
        violated.append(Condition.l_k_minus_two_untwisted)
    if l < k - 2 and (l - half) % 2 != 0:
        violated.append(Condition.l_below_k_minus_two_parity)
    if t == 1 and smooth and l != k - 2:
        violated.append(Condition.one_blowdown_smooth)
    # r_i <= l - k/2 + 2
    if n4 > 0 and l < half + 2:
        violated.append(Condition.cap_r4)
    if n6 > 0 and l < half + 4:
        violated.append(Condition.cap_r6)
    if n8 > 0 and l < half + 6:
        violated.append(Condition.cap_r8)

    return [condition.value for condition in violated]


def feasible_models(k: int, l: int) -> List[int]:
    """ e in {0, 1, 2} with an even class kC0 + (ek/2 + l)F and B.C0 = l - ek/2 >= -e """
    if k % 2 != 0:
        raise PreconditionViolatedError(message=f'k must be even, got {k}')
    return [e for e in (0, 1, 2) if (e * k // 2 + l) % 2 == 0 and l - e * k // 2 >= -e]


def l_upper(k: int, delta: int) -> int:
    """ largest l with N4 + N6 >= 0 at t = 0 """
    return 10 + (4 * (15 + delta)) // (k - 10)


def _check_regime(query: CellQuery) -> None:
    if query.g < MIN_GENUS:
        raise OutOfRegimeError(message=f'requires g >= {MIN_GENUS}, got g = {query.g}')
    if not DELTA_MIN <= query.delta <= DELTA_MAX:
        raise OutOfRegimeError(message=f'requires {DELTA_MIN} <= delta <= {DELTA_MAX}, got delta = {query.delta}')


def _scan(k: int, delta: int, t_max: int, n4_max: int) -> Iterator[RawCandidate]:
    for l in range(k // 2, l_upper(k, delta) + 1):
        x = (k - 10) * (l - 10)
        # (k-2)(l-2) and (k-10)(l-10) differ by a multiple of 8
        if x % 4 != 0:
            continue
        base = 1 + (k - 2) * (l - 2) // 4
        for t in range(t_max + 1):
            s = 15 + delta - t - x // 4
            if s < 0:
                break
            for n6 in range(max(0, s - n4_max), s + 1):
                n4 = s - n6
                n8 = 0
                while True:
                    chi = base - n4 - 3 * n6 - 6 * n8
                    k2 = 3 * chi + delta
                    if chi < 1 or k2 < 1:
                        break
                    if not conditions_check(k, l, t, n4, n6, n8):
                        yield (l, t, n4, n6, n8, chi, k2)
                    n8 += 1


def _candidate(k: int, raw: RawCandidate) -> Candidate:
    l, t, n4, n6, n8, chi, k2 = raw
    return Candidate(k=k, l=l, t=t, n4=n4, n6=n6, n8=n8, chi=chi, k2_min=k2, k2_canres=k2 - t,
                     feasible_e=feasible_models(k, l))


def enumerate_cell(query: CellQuery) -> CellResult:
    """ maximal chi of one (g, delta) cell with its witnesses, or EMPTY """
    _check_regime(query)
    k = query.k

    if k > query.k_max:
        logger.info("Cell g=%s delta=%s: k=%s exceeds k_max=%s, empty.", query.g, query.delta, k, query.k_max)
        return CellResult(query=query)

    raws = list(_scan(k, query.delta, query.t_max, query.n4_max))

    if not raws:
        logger.info("Cell g=%s delta=%s: EMPTY", query.g, query.delta)
        return CellResult(query=query)

    candidates = sorted((_candidate(k, raw) for raw in raws), key=lambda candidate: candidate.sort_key)
    max_chi = candidates[0].chi
    witnesses = candidates if query.mode == SearchMode.all.value else [c for c in candidates if c.chi == max_chi]

    logger.info("Cell g=%s delta=%s: max chi %s (%s candidates).", query.g, query.delta, max_chi, len(candidates))
    return CellResult(query=query, max_chi=max_chi, witnesses=witnesses)


def _range(bounds: Tuple[int, int], name: str) -> List[int]:
    low, high = bounds
    if low > high:
        raise InvalidArgumentError(message=f'{name} range {low}..{high} is empty')
    return list(range(low, high + 1))


async def max_chi_table_async(g_range: Tuple[int, int] = REFERENCE_G_RANGE,
                              delta_range: Tuple[int, int] = REFERENCE_DELTA_RANGE, t_max: int = DEFAULT_T_MAX,
                              n4_max: int = DEFAULT_N4_MAX, k_max: int = DEFAULT_K_MAX, workers: int = 4) -> ChiTable:
    """ evaluate cells in at most workers threads; gather keeps the query order """
    if workers < 1:
        raise InvalidArgumentError(message=f'workers must be at least 1, got {workers}')
    g_values = _range(g_range, 'g')
    delta_values = list(reversed(_range(delta_range, 'delta')))
    queries = [CellQuery(g=g, delta=delta, t_max=t_max, n4_max=n4_max, k_max=k_max)
               for g in g_values for delta in delta_values]

    semaphore = asyncio.Semaphore(workers)

    async def run(query: CellQuery) -> CellResult:
        async with semaphore:
            return await asyncio.to_thread(enumerate_cell, query)

    results = await asyncio.gather(*(run(query) for query in queries))
    return _table(g_values, delta_values, results)


def max_chi_table(g_range: Tuple[int, int] = REFERENCE_G_RANGE, delta_range: Tuple[int, int] = REFERENCE_DELTA_RANGE,
                  t_max: int = DEFAULT_T_MAX, n4_max: int = DEFAULT_N4_MAX, k_max: int = DEFAULT_K_MAX,
                  workers: int = 1) -> ChiTable:
    """ maximal chi table over the given ranges (inclusive); workers > 1 fans the cells out """
    if workers > 1:
        return asyncio.run(max_chi_table_async(g_range, delta_range, t_max=t_max, n4_max=n4_max, k_max=k_max,
                                               workers=workers))

    g_values = _range(g_range, 'g')
    delta_values = list(reversed(_range(delta_range, 'delta')))
    results = [enumerate_cell(CellQuery(g=g, delta=delta, t_max=t_max, n4_max=n4_max, k_max=k_max))
               for g in g_values for delta in delta_values]
    return _table(g_values, delta_values, results)


def _table(g_values: List[int], delta_values: List[int], results: List[CellResult]) -> ChiTable:
    cells = [TableCell(g=result.query.g, delta=result.query.delta, max_chi=result.max_chi) for result in results]
    logger.info("Built table for g=%s..%s, delta=%s..%s (%s cells).", g_values[0], g_values[-1],
                delta_values[0], delta_values[-1], len(cells))
    return ChiTable(g_values=g_values, delta_values=delta_values, cells=cells)


def witness_config(candidate: Candidate, e: Optional[int] = None) -> BranchConfig:
    """ branch datum of a candidate, r_i in {4, 6, 8} """
    return make_branch_config(k=candidate.k, l=candidate.l, t=candidate.t, n4=candidate.n4, n6=candidate.n6,
                              n8=candidate.n8, e=e)
