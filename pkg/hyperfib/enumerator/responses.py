from typing import List, Optional

from pydantic import BaseModel


class QueryInfo(BaseModel):
    g: int
    delta: int
    mode: str

class WitnessInfo(BaseModel):
    k: int
    l: int
    t: int
    n4: int
    n6: int
    n8: int
    chi: int
    k2_min: int
    feasible_e: List[int]

class EnumerateResponse(BaseModel):
    query: QueryInfo
    max_chi: Optional[int] = None
    witnesses: List[WitnessInfo]

class TableRow(BaseModel):
    g: int
    values: List[Optional[int]]

class DifferenceInfo(BaseModel):
    g: int
    delta: int
    computed: Optional[int] = None
    reference: Optional[int] = None

class ComparisonInfo(BaseModel):
    source: str
    compared: int
    differences: List[DifferenceInfo]

class TableResponse(BaseModel):
    g_values: List[int]
    delta_values: List[int]
    rows: List[TableRow]
    comparison: Optional[ComparisonInfo] = None
