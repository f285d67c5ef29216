from collections import Counter
from typing import Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator


class SingularitySpectrum(BaseModel):
    """ multiset of canonical resolution multiplicities r_i (even, >= 2) """
    r_list: Tuple[int, ...] = ()

    model_config = ConfigDict(frozen=True)

    @field_validator('r_list', mode='before')
    @classmethod
    def _sorted(cls, value):
        return tuple(sorted(value or ()))

    @field_validator('r_list')
    @classmethod
    def _even_and_at_least_two(cls, value: Tuple[int, ...]):
        for r in value:
            if r < 2 or r % 2 != 0:
                raise ValueError(f'r_i must be even and >= 2, got {r}')
        return value

    @classmethod
    def from_counts(cls, n4: int = 0, n6: int = 0, n8: int = 0) -> 'SingularitySpectrum':
        return cls(r_list=[4] * n4 + [6] * n6 + [8] * n8)

    def with_point(self, first: int, second: Optional[int] = None) -> 'SingularitySpectrum':
        """
        add a singular point: an ordinary point of multiplicity m gives r = 2[m/2],
        a (2r-1, 2r-1)-point gives the pair {2r-2, 2r}
        """
        if second is None:
            if first < 2:
                raise ValueError('a singular point has multiplicity >= 2')
            return SingularitySpectrum(r_list=self.r_list + (2 * (first // 2),))
        if first != second or first % 2 == 0:
            raise ValueError('infinitely near pairs are (2r-1, 2r-1)-points')
        r = (first + 1) // 2
        return SingularitySpectrum(r_list=self.r_list + (2 * r - 2, 2 * r))

    def count(self, r: int) -> int:
        return Counter(self.r_list)[r]

    @property
    def n4(self) -> int:
        return self.count(4)

    @property
    def n6(self) -> int:
        return self.count(6)

    @property
    def n8(self) -> int:
        return self.count(8)

    @property
    def r_max(self) -> int:
        return max(self.r_list, default=0)

    @property
    def essential(self) -> Tuple[int, ...]:
        """ entries with r_i > 2; negligible entries change no sum """
        return tuple(r for r in self.r_list if r > 2)


class BranchConfig(BaseModel):
    """ branch curve datum kC0 + (ek/2 + l)F on a Hirzebruch surface """
    k: int = Field(ge=6)
    l: int
    e: Optional[int] = Field(default=None, ge=0)
    spectrum: SingularitySpectrum = SingularitySpectrum()
    t: int = Field(default=0, ge=0)

    model_config = ConfigDict(frozen=True)

    @field_validator('k')
    @classmethod
    def _k_even(cls, value: int):
        if value % 2 != 0:
            raise ValueError('k must be even')
        return value

    @model_validator(mode='after')
    def _even_class(self):
        if self.e is not None:
            b = self.e * self.k // 2 + self.l
            if b < 0:
                raise ValueError('e*k/2 + l must be non-negative')
            if b % 2 != 0:
                raise ValueError('divisor class is not even')
        return self

    @property
    def genus(self) -> int:
        return (self.k - 2) // 2


class SurfaceInvariants(BaseModel):
    chi: int
    k2_canres: int
    k2_min: int
    genus: int
    delta: int

    model_config = ConfigDict(frozen=True)

    @model_validator(mode='after')
    def _consistent(self):
        if self.delta != self.k2_min - 3 * self.chi:
            raise ValueError('delta must equal k2_min - 3 chi')
        return self

    @property
    def t(self) -> int:
        return self.k2_min - self.k2_canres


class RitoGH(BaseModel):
    G: int
    H: int

    model_config = ConfigDict(frozen=True)


class RiResiduals(BaseModel):
    """ left minus right side of the two double cover equations """
    a: int
    b: int

    model_config = ConfigDict(frozen=True)

    @property
    def ok(self) -> bool:
        return self.a == 0 and self.b == 0


class RuledModel(BaseModel):
    """ plane branch curve re-read on F_1 after blowing up one point """
    k: int
    l: int
    e: int = 1

    model_config = ConfigDict(frozen=True)

    @property
    def genus(self) -> int:
        return (self.k - 2) // 2

