from enum import Enum
from typing import List, Optional

from pydantic import BaseModel, ConfigDict

from hyperfib.arithmetic.models import SqrtForm


class CaseLabel(Enum):
    """ cases a) to g') of the bounds on k behind the genus bound """
    a = "a"
    b = "b"
    c = "c"
    c2 = "c2"
    c3 = "c3"
    d = "d"
    e1 = "e1"
    e2 = "e2"
    f1 = "f1"
    f2 = "f2"
    g1 = "g1"
    g2 = "g2"


class LemmaVariant(Enum):
    a = "a"
    b = "b"


class CaseBound(BaseModel):
    label: CaseLabel
    bound: SqrtForm
    assumed_t: int

    model_config = ConfigDict(frozen=True, use_enum_values=True)


class KBoundReport(BaseModel):
    chi: int
    k2: int
    cases: List[CaseBound]
    max_label: CaseLabel
    max_even_k: int
    genus_cap: int

    model_config = ConfigDict(frozen=True, use_enum_values=True)


class MainPropVerdict(BaseModel):
    """ outcome of one displayed inequality; side_condition is n <= j + 7 for case d """
    label: CaseLabel
    holds: bool
    side_condition: Optional[bool] = None

    model_config = ConfigDict(frozen=True, use_enum_values=True)

    def __bool__(self) -> bool:
        return self.holds and self.side_condition is not False


class PrimedGH(BaseModel):
    G: int
    H: int

    model_config = ConfigDict(frozen=True)
