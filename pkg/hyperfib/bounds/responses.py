from typing import List, Optional

from pydantic import BaseModel


class CaseBoundInfo(BaseModel):
    label: str
    bound_p: str
    bound_q: Optional[int] = None
    assumed_t: int
    approx: str

class BoundResponse(BaseModel):
    chi: int
    k2: int
    genus_bound: int
    cases: Optional[List[CaseBoundInfo]] = None
    max_label: Optional[str] = None
    max_even_k: Optional[int] = None
    genus_cap: Optional[int] = None
