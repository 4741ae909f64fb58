"""
Output records emitted by the CLI.

Counts travel as decimal strings, rationals as numerator/denominator
strings and decimals always with their error radius.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Annotated, Literal, Optional, Union

from pydantic import BaseModel, Field

from wordperiods import __version__
from wordperiods.domain.errdecimal import ErrDecimal

Method = Literal["oracle", "recurrence", "moebius", "series"]


# ========== Value Schemas ==========

class RationalOut(BaseModel):
    numerator: str
    denominator: str

    @staticmethod
    def of(q: Fraction) -> RationalOut:
        return RationalOut(numerator=str(q.numerator), denominator=str(q.denominator))


class DecimalOut(BaseModel):
    """A rendered decimal and the radius that licenses it"""
    value: str
    err: str
    digits: int

    @staticmethod
    def of(x: ErrDecimal, digits: int) -> DecimalOut:
        return DecimalOut(value=x.render(digits), err=f"{x.err:.6E}", digits=digits)


class Query(BaseModel):
    """Echo of the command line that produced a record"""
    command: str
    alphabet: Optional[int] = None
    length: Optional[int] = None
    periods: Optional[list[int]] = None
    r: Optional[int] = None
    which: Optional[str] = None
    digits: Optional[int] = None


# ========== Result Schemas ==========

class FWResult(BaseModel):
    kind: Literal["fw"] = "fw"
    c: int
    word: str
    c_union_find: int
    g_count: Optional[str] = None


class CountResult(BaseModel):
    kind: Literal["count"] = "count"
    f_count: str
    g_count: str


class DistributionRow(BaseModel):
    r: int
    period: int
    count: str
    probability: RationalOut
    probability_dec: str


class DistributionResult(BaseModel):
    kind: Literal["dist"] = "dist"
    total: str
    rows: list[DistributionRow]
    expected_border: RationalOut
    agrees_with_recurrence: Optional[bool] = None


class ConstResult(BaseModel):
    kind: Literal["const"] = "const"
    value: DecimalOut


class CheckResult(BaseModel):
    kind: Literal["check"] = "check"
    samples: int
    seed: int
    mismatches: list[str] = Field(default_factory=list)


Result = Annotated[
    Union[FWResult, CountResult, DistributionResult, ConstResult, CheckResult],
    Field(discriminator="kind"),
]


class OutputRecord(BaseModel):
    query: Query
    result: Result
    method: Method
    version: str = __version__
