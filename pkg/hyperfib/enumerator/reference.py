"""
Reference chi table fixture

Loads the published chi table with its existence entries from CSV, compares a
computed table against it and rebuilds every existence entry as a branch datum.

"""

import csv
import logging
from pathlib import Path
from typing import List, Optional, Union

from hyperfib.errors import HyperFibBaseError, ReferenceFixtureError
from hyperfib.invariants import canres_invariants, make_branch_config, plane_to_ruled, thm2_b_residual
from hyperfib.invariants.models import BranchConfig, SingularitySpectrum
from . import conditions_check
from .models import CellDifference, ChiTable, ConstructionCheck, ReferenceCell, ReferenceTable

logger = logging.getLogger('hyperfib.enumerator.reference')

DEFAULT_REFERENCE_PATH = Path(__file__).parent / 'data' / 'max_chi_reference.csv'

COLUMNS = ['g', 'delta', 'max_chi_or_empty', 'construction_surface', 'construction_l_or_degree',
           'construction_singularity']

RULED_SURFACES = {'F0': 0, 'F1': 1, 'F2': 2}
PLANE = 'P2'
# an infinitely near triple point, resolved into r = 2 and r = 4
THREE_THREE = '(3,3)'


def _optional_int(value: Optional[str], column: str, line: int) -> Optional[int]:
    if value is None or value.strip() == '':
        return None
    try:
        return int(value)
    except ValueError:
        raise ReferenceFixtureError(message=f'line {line}: {column} is not an integer: {value!r}')


def _optional_str(value: Optional[str]) -> Optional[str]:
    if value is None or value.strip() == '':
        return None
    return value.strip()


def load_reference(path: Optional[Union[str, Path]] = None) -> ReferenceTable:
    """ read the reference CSV; lines starting with '#' are provenance comments """
    path = Path(path) if path is not None else DEFAULT_REFERENCE_PATH

    try:
        with open(path, newline='', encoding='utf-8') as fixture:
            lines = [line for line in fixture if not line.lstrip().startswith('#')]
    except OSError as err:
        logger.error("Reference fixture %s could not be read.", path)
        raise ReferenceFixtureError(message=f'cannot read reference fixture {path}: {err}')

    reader = csv.DictReader(lines)
    if reader.fieldnames is None or list(reader.fieldnames) != COLUMNS:
        logger.error("Reference fixture %s has header %s.", path, reader.fieldnames)
        raise ReferenceFixtureError(message=f'reference fixture {path} must have columns {",".join(COLUMNS)}')

    cells: List[ReferenceCell] = []
    seen = set()
    for number, row in enumerate(reader, start=2):
        g = _optional_int(row['g'], 'g', number)
        delta = _optional_int(row['delta'], 'delta', number)
        if g is None or delta is None:
            raise ReferenceFixtureError(message=f'line {number}: g and delta are required')
        if (g, delta) in seen:
            raise ReferenceFixtureError(message=f'line {number}: duplicate cell ({g}, {delta})')
        seen.add((g, delta))
        cells.append(ReferenceCell(g=g, delta=delta,
                                   max_chi=_optional_int(row['max_chi_or_empty'], 'max_chi_or_empty', number),
                                   surface=_optional_str(row['construction_surface']),
                                   l_or_degree=_optional_int(row['construction_l_or_degree'],
                                                             'construction_l_or_degree', number),
                                   singularity=_optional_str(row['construction_singularity'])))

    logger.info("Loaded %s reference cells from %s.", len(cells), path)
    return ReferenceTable(source=str(path), cells=cells)


def compare_table(table: ChiTable, reference: ReferenceTable) -> List[CellDifference]:
    """ differing cells; computed cells without a reference entry are not compared """
    differences = []
    for cell in table.cells:
        expected = reference.get(cell.g, cell.delta)
        if expected is None:
            continue
        if expected.max_chi != cell.max_chi:
            logger.debug("Cell g=%s delta=%s: computed %s, reference %s.", cell.g, cell.delta, cell.max_chi,
                         expected.max_chi)
            differences.append(CellDifference(g=cell.g, delta=cell.delta, computed=cell.max_chi,
                                              reference=expected.max_chi))
    return differences


def compared_cells(table: ChiTable, reference: ReferenceTable) -> int:
    return sum(1 for cell in table.cells if reference.get(cell.g, cell.delta) is not None)


def _spectrum(singularity: Optional[str]) -> SingularitySpectrum:
    spectrum = SingularitySpectrum()
    if singularity is None:
        return spectrum
    try:
        multiplicities = [int(part) for part in singularity.strip('()').split(',')]
        return spectrum.with_point(*multiplicities)
    except (TypeError, ValueError):
        raise ReferenceFixtureError(message=f'unsupported singularity {singularity!r}')


def blowdowns(k: int, l: int, e: int, singularity: Optional[str]) -> int:
    """
    (-1)-curves of the double cover contracted to reach the minimal model: one over
    the (3,3)-point, two when l = k/2, one when C0 is a branch component (l - ek/2 = -e)
    """
    t = 0
    if singularity is not None and singularity.replace(' ', '') == THREE_THREE:
        t += 1
    if l == k // 2:
        t += 2
    if e > 0 and l - e * k // 2 == -e:
        t += 1
    return t


def construction_config(cell: ReferenceCell) -> BranchConfig:
    """
    branch datum of an existence entry

    On F_e the entry gives l directly. A plane curve of degree d is moved to F_1 by
    blowing up a point: a general point when the curve is smooth (k = d, l = d/2),
    a double point otherwise (k = d - 2). t follows from the construction alone, so
    delta is a real check of the entry.
    """
    if cell.max_chi is None or cell.surface is None or cell.l_or_degree is None:
        raise ReferenceFixtureError(message=f'cell ({cell.g}, {cell.delta}) has no existence entry')

    spectrum = _spectrum(cell.singularity)

    if cell.surface == PLANE:
        mult = 0 if cell.singularity is None else 2
        ruled = plane_to_ruled(cell.l_or_degree, mult)
        k, l, e = ruled.k, ruled.l, ruled.e
    elif cell.surface in RULED_SURFACES:
        k, l, e = 2 * cell.g + 2, cell.l_or_degree, RULED_SURFACES[cell.surface]
    else:
        raise ReferenceFixtureError(message=f'unknown surface {cell.surface!r}')

    if k != 2 * cell.g + 2:
        raise ReferenceFixtureError(message=f'cell ({cell.g}, {cell.delta}): entry gives k = {k}, '
                                            f'expected {2 * cell.g + 2}')

    return make_branch_config(k=k, l=l, t=blowdowns(k, l, e, cell.singularity), r_list=list(spectrum.r_list), e=e)


def verify_constructions(reference: ReferenceTable) -> List[ConstructionCheck]:
    """ rebuild every existence entry and check chi, delta, the conditions and the N4 + N6 relation """
    checks = []
    for cell in reference.cells:
        if cell.max_chi is None:
            continue
        try:
            config = construction_config(cell)
            inv = canres_invariants(config)
            residual = thm2_b_residual(config, inv)
        except HyperFibBaseError as err:
            logger.error("Existence entry for g=%s delta=%s failed: %s", cell.g, cell.delta, err.message)
            raise
        spectrum = config.spectrum
        violations = conditions_check(config.k, config.l, config.t, spectrum.n4, spectrum.n6, spectrum.n8)
        checks.append(ConstructionCheck(cell=cell, config=config, chi=inv.chi, delta=inv.delta,
                                        violations=violations, residual=residual))

    logger.info("Verified %s existence entries.", len(checks))
    return checks
