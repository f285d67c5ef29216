from typing import List, Optional

from pydantic import BaseModel


class ConfigInfo(BaseModel):
    k: int
    l: int
    e: Optional[int] = None
    t: int
    r_list: List[int]

class InvariantsInfo(BaseModel):
    chi: int
    k2_canres: int
    k2_min: int
    genus: int
    delta: int

class RitoInfo(BaseModel):
    G: int
    H: int
    identity_ok: bool

class Thm2Info(BaseModel):
    residual: Optional[int] = None
    conditions_violated: Optional[List[str]] = None

class CheckResponse(BaseModel):
    config: ConfigInfo
    invariants: InvariantsInfo
    rito: RitoInfo
    thm2: Thm2Info
    feasible_e: List[int]

class ConvertResponse(BaseModel):
    degree: int
    mult: int
    k: int
    l: int
    e: int
    genus: int
