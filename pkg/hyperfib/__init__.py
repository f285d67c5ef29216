"""
Exact bounds for hyperelliptic fibrations on surfaces of general type
V1.0.0

Collection of the numerical tools behind the genus bound for a hyperelliptic
pencil when K^2 < 4chi - 6 and the table of maximal chi when K^2 < 3chi - 6

 - invariants: canonical resolution of a double cover of a Hirzebruch surface
 - bounds: the genus bound and the case bounds on the fibre degree k
 - enumerator: exhaustive maximal chi search and the reference table

All arithmetic is exact (integers, fractions and p + sqrt(q) forms).

"""

import logging
from pathlib import Path
from typing import List, Optional, Tuple, Union

from .bounds import case_bound, genus_bound, k_bound_cases
from .bounds.models import CaseBound, CaseLabel, KBoundReport
from .enumerator import (REFERENCE_DELTA_RANGE, REFERENCE_G_RANGE, conditions_check, enumerate_cell,
                         feasible_models, max_chi_table)
from .enumerator.models import (DEFAULT_K_MAX, DEFAULT_N4_MAX, DEFAULT_T_MAX, CellQuery, CellResult, ChiTable,
                                ConstructionCheck, ReferenceTable, SearchMode, TableComparison)
from .enumerator.reference import compare_table, compared_cells, load_reference, verify_constructions
from .errors import OutOfRegimeError, PreconditionViolatedError
from .invariants import canres_invariants, make_branch_config, plane_to_ruled, rito_GH, rito_identity_check, thm2_b_residual
from .invariants.models import BranchConfig, RuledModel, SurfaceInvariants
from .invariants.responses import CheckResponse, ConfigInfo, InvariantsInfo, RitoInfo, Thm2Info
from .logger import create_logger


class HyperFib:
    """ entry point bundling the three numerical modules with per-instance search caps """

    def __init__(self, log_level=logging.INFO, log_stream: bool = False, log_file: str = 'hyperfib.log',
                 log_file_out: bool = False, t_max: int = DEFAULT_T_MAX, n4_max: int = DEFAULT_N4_MAX,
                 k_max: int = DEFAULT_K_MAX, workers: int = 1):
        self.logger = create_logger(log_file=log_file, log_level=log_level, log_stream=log_stream,
                                    log_file_out=log_file_out)
        self.t_max = t_max
        self.n4_max = n4_max
        self.k_max = k_max
        self.workers = workers
        self.logger.debug("Created HyperFib (t_max=%s, n4_max=%s, k_max=%s).", t_max, n4_max, k_max)

    def branch_config(self, k: int, l: int, t: int = 0, r_list: Optional[List[int]] = None, n4: int = 0,
                      n6: int = 0, n8: int = 0, e: Optional[int] = None) -> BranchConfig:
        return make_branch_config(k=k, l=l, t=t, r_list=r_list, n4=n4, n6=n6, n8=n8, e=e)

    def invariants(self, config: BranchConfig) -> SurfaceInvariants:
        return canres_invariants(config)

    def check(self, config: BranchConfig) -> CheckResponse:
        """ full invariant report; inconsistencies are reported, not raised """
        inv = canres_invariants(config)
        gh = rito_GH(config.k, inv.chi, inv.k2_min, config.t)
        spectrum = config.spectrum

        try:
            residual = thm2_b_residual(config, inv)
        except OutOfRegimeError:
            residual = None

        try:
            violated = conditions_check(config.k, config.l, config.t, spectrum.n4, spectrum.n6, spectrum.n8)
        except PreconditionViolatedError:
            # conditions (0) to (6) are stated for k >= 12
            violated = None

        self.logger.info("Checked k=%s l=%s t=%s: chi=%s K^2=%s.", config.k, config.l, config.t, inv.chi, inv.k2_min)

        return CheckResponse(
            config=ConfigInfo(k=config.k, l=config.l, e=config.e, t=config.t, r_list=list(spectrum.r_list)),
            invariants=InvariantsInfo(chi=inv.chi, k2_canres=inv.k2_canres, k2_min=inv.k2_min, genus=inv.genus,
                                      delta=inv.delta),
            rito=RitoInfo(G=gh.G, H=gh.H, identity_ok=rito_identity_check(config, inv)),
            thm2=Thm2Info(residual=residual, conditions_violated=violated),
            feasible_e=feasible_models(config.k, config.l))

    def genus_bound(self, chi: int, k2: int) -> int:
        return genus_bound(chi, k2)

    def k_bounds(self, chi: int, k2: int) -> KBoundReport:
        return k_bound_cases(chi, k2)

    def case_bound(self, case_label: Union[CaseLabel, str], chi: int, k2: int, t: Optional[int] = None) -> CaseBound:
        return case_bound(case_label, chi, k2, t)

    def convert(self, degree: int, mult: int) -> RuledModel:
        return plane_to_ruled(degree, mult)

    def query(self, g: int, delta: int, mode: Union[SearchMode, str] = SearchMode.max) -> CellQuery:
        return CellQuery(g=g, delta=delta, mode=mode, t_max=self.t_max, n4_max=self.n4_max, k_max=self.k_max)

    def enumerate(self, g: int, delta: int, mode: Union[SearchMode, str] = SearchMode.max) -> CellResult:
        return enumerate_cell(self.query(g, delta, mode))

    def table(self, g_range: Tuple[int, int] = REFERENCE_G_RANGE,
              delta_range: Tuple[int, int] = REFERENCE_DELTA_RANGE) -> ChiTable:
        return max_chi_table(g_range, delta_range, t_max=self.t_max, n4_max=self.n4_max, k_max=self.k_max,
                             workers=self.workers)

    def reference(self, path: Optional[Union[str, Path]] = None) -> ReferenceTable:
        return load_reference(path)

    def compare(self, table: ChiTable, reference: Optional[ReferenceTable] = None) -> TableComparison:
        """ compare a computed table with the reference (bundled fixture unless given) """
        reference = reference if reference is not None else load_reference()
        differences = compare_table(table, reference)
        compared = compared_cells(table, reference)
        if differences:
            self.logger.warning("%s of %s cells differ from %s.", len(differences), compared, reference.source)
        return TableComparison(compared=compared, differences=differences)

    def verify_constructions(self, reference: Optional[ReferenceTable] = None) -> List[ConstructionCheck]:
        reference = reference if reference is not None else load_reference()
        return verify_constructions(reference)

    def genus_cap(self, chi: int, k2: int) -> int:
        """ genus implied by the largest case bound on k """
        return k_bound_cases(chi, k2).genus_cap
