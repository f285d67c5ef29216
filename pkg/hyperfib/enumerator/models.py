from enum import Enum
from typing import Dict, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field

from hyperfib.invariants.models import BranchConfig


DEFAULT_T_MAX = 11
DEFAULT_N4_MAX = 11
DEFAULT_K_MAX = 28


class SearchMode(Enum):
    max = "max"
    all = "all"


class Condition(Enum):
    """ numerical filters of the maximal chi search """
    parity = "0"
    l_at_least_half_k = "1"
    l_half_k_iff_two_blowdowns = "2"
    l_half_k_plus_two = "3"
    l_k_minus_two_untwisted = "4"
    l_below_k_minus_two_parity = "5"
    one_blowdown_smooth = "6"
    cap_r4 = "cap_r4"
    cap_r6 = "cap_r6"
    cap_r8 = "cap_r8"


class CellQuery(BaseModel):
    g: int
    delta: int
    mode: SearchMode = SearchMode.max
    t_max: int = Field(default=DEFAULT_T_MAX, ge=0)
    n4_max: int = Field(default=DEFAULT_N4_MAX, ge=0)
    k_max: int = Field(default=DEFAULT_K_MAX, ge=12)

    model_config = ConfigDict(frozen=True, use_enum_values=True)

    @property
    def k(self) -> int:
        return 2 * self.g + 2


class Candidate(BaseModel):
    k: int
    l: int
    t: int
    n4: int
    n6: int
    n8: int
    chi: int
    k2_min: int
    k2_canres: int
    feasible_e: List[int]

    model_config = ConfigDict(frozen=True)

    @property
    def sort_key(self) -> Tuple[int, int, int, int, int, int]:
        return (-self.chi, self.l, self.t, self.n4, self.n6, self.n8)


class CellResult(BaseModel):
    query: CellQuery
    max_chi: Optional[int] = None
    witnesses: List[Candidate] = []

    model_config = ConfigDict(frozen=True)

    @property
    def empty(self) -> bool:
        return self.max_chi is None


class TableCell(BaseModel):
    g: int
    delta: int
    max_chi: Optional[int] = None

    model_config = ConfigDict(frozen=True)


class ChiTable(BaseModel):
    """ maximal chi per (g, delta); g ascending, delta from -7 downwards """
    g_values: List[int]
    delta_values: List[int]
    cells: List[TableCell]

    model_config = ConfigDict(frozen=True)

    def as_dict(self) -> Dict[Tuple[int, int], Optional[int]]:
        return {(cell.g, cell.delta): cell.max_chi for cell in self.cells}

    def value(self, g: int, delta: int) -> Optional[int]:
        return self.as_dict()[(g, delta)]

    def row(self, g: int) -> List[Optional[int]]:
        values = self.as_dict()
        return [values[(g, delta)] for delta in self.delta_values]


class ReferenceCell(BaseModel):
    g: int
    delta: int
    max_chi: Optional[int] = None
    surface: Optional[str] = None
    l_or_degree: Optional[int] = None
    singularity: Optional[str] = None

    model_config = ConfigDict(frozen=True)


class ReferenceTable(BaseModel):
    source: str
    cells: List[ReferenceCell]

    model_config = ConfigDict(frozen=True)

    def get(self, g: int, delta: int) -> Optional[ReferenceCell]:
        for cell in self.cells:
            if cell.g == g and cell.delta == delta:
                return cell
        return None


class CellDifference(BaseModel):
    g: int
    delta: int
    computed: Optional[int] = None
    reference: Optional[int] = None

    model_config = ConfigDict(frozen=True)


class TableComparison(BaseModel):
    compared: int
    differences: List[CellDifference]

    model_config = ConfigDict(frozen=True)

    @property
    def ok(self) -> bool:
        return not self.differences


class ConstructionCheck(BaseModel):
    cell: ReferenceCell
    config: BranchConfig
    chi: int
    delta: int
    violations: List[str]
    residual: int

    model_config = ConfigDict(frozen=True)

    @property
    def ok(self) -> bool:
        return (self.chi == self.cell.max_chi and self.delta == self.cell.delta
                and not self.violations and self.residual == 0)
