from fractions import Fraction
from typing import Optional, Union

from pydantic import BaseModel, ConfigDict, field_serializer, field_validator

# every formula of the package is evaluated over the rationals
ExactScalar = Fraction

Rational = Union[int, Fraction]


class SqrtForm(BaseModel):
    """ exact real number p + sqrt(q); q is None for a plain rational """
    p: Fraction
    q: Optional[int] = None

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    @field_validator('p', mode='before')
    @classmethod
    def _to_fraction(cls, value):
        if isinstance(value, str):
            return Fraction(value)
        if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
            return Fraction(value)
        raise ValueError('p must be an integer or a fraction')

    @field_validator('q')
    @classmethod
    def _non_negative_radicand(cls, value: Optional[int]):
        if value is not None and value < 0:
            raise ValueError('radicand must be non-negative')
        return value

    @field_serializer('p')
    def _serialize_p(self, value: Fraction) -> str:
        return str(value)

    @property
    def is_rational(self) -> bool:
        return self.q is None
