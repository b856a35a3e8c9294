from __future__ import annotations

from fractions import Fraction
from typing import Any, Literal

from pydantic import (
    BaseModel,
    ConfigDict,
    Field,
    field_serializer,
    field_validator,
    model_validator,
)

ProfileFamily = Literal["identity", "power", "iterated_log", "tabulated"]
Verdict = Literal["summable", "fails", "inconclusive"]


def to_fraction(value: Any) -> Any:
    """Parse ints, "p/q" strings and decimal strings as exact rationals."""
    if value is None or isinstance(value, Fraction):
        return value
    if isinstance(value, float):
        return Fraction(value).limit_denominator(10**12)
    if isinstance(value, (int, str)):
        return Fraction(value)
    return value


class ProfileSpec(BaseModel):
    """An isoperimetric profile rho in the class of nondecreasing x/rho(x)-nondecreasing maps."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    family: ProfileFamily = Field(..., description="Profile family tag")
    alpha: Fraction | None = Field(
        None, description="Exponent parameter of the power family: rho(x) = x^(1/(1+alpha))"
    )
    r: int | None = Field(None, ge=1, description="Number of iterated logarithms")
    table: tuple[tuple[Fraction, Fraction], ...] | None = Field(
        None, description="Sample points (x, rho(x)) of a tabulated profile, x increasing"
    )

    @field_validator("alpha", mode="before")
    @classmethod
    def _parse_alpha(cls, value: Any) -> Any:
        return to_fraction(value)

    @field_validator("table", mode="before")
    @classmethod
    def _parse_table(cls, value: Any) -> Any:
        if value is None:
            return None
        return tuple((to_fraction(x), to_fraction(y)) for x, y in value)

    @model_validator(mode="after")
    def _check_parameters(self) -> ProfileSpec:
        if self.family == "power" and (self.alpha is None or self.alpha <= 0):
            raise ValueError("power profiles need alpha > 0")
        if self.family == "iterated_log" and self.r is None:
            raise ValueError("iterated_log profiles need r >= 1")
        if self.family == "tabulated":
            if not self.table or len(self.table) < 2:
                raise ValueError("tabulated profiles need at least two points")
            xs = [x for x, _ in self.table]
            if xs != sorted(set(xs)) or xs[0] > 1:
                raise ValueError("table abscissae must increase strictly and start at or below 1")
        return self

    @field_serializer("alpha")
    def _dump_alpha(self, value: Fraction | None) -> str | None:
        return None if value is None else str(value)

    @field_serializer("table")
    def _dump_table(self, value: tuple[tuple[Fraction, Fraction], ...] | None) -> Any:
        return None if value is None else [[str(x), str(y)] for x, y in value]

    @property
    def label(self) -> str:
        if self.family == "power":
            return f"power(alpha={self.alpha})"
        if self.family == "iterated_log":
            return f"iterated_log(r={self.r})"
        return self.family


class ProfileSequences(BaseModel):
    """Scales k_m and diameters l_m chosen for a profile, level 0 included."""

    profile: ProfileSpec
    kappa: int = Field(..., ge=2)
    lam: int = Field(..., ge=2, description="Base of the powers l_m is drawn from")
    k: list[int] = Field(..., description="k_0 = 0 < k_1 < ...; omitted levels are infinite")
    l: list[int] = Field(..., description="l_0 = 1 <= l_1 <= ...")


class SummabilityReport(BaseModel):
    """Partial sums of a positive series with a ratio-test verdict."""

    series: str = Field(..., description="Human-readable name of the series")
    terms: list[float] = Field(default_factory=list)
    partial_sums: list[float] = Field(default_factory=list)
    last_ratio: float | None = Field(None, description="Ratio of the two last terms")
    verdict: Verdict


class ExponentFit(BaseModel):
    """Least-squares exponent of a composite profile on a log-log grid."""

    exponent: float | None = None
    epsilon: float | None = Field(None, description="1 - exponent")
    points: int = 0
    verdict: Literal["ok", "fails", "inconclusive"] = "inconclusive"


class HypothesisReport(BaseModel):
    profile: str
    kappa: int
    in_class: bool = Field(..., description="Monotonicity conditions hold on the sampled grid")
    f_bar_band: float | None = Field(
        None, description="max/min of f_bar / f on the grid; within 4 means f_bar tracks f"
    )
    z_summability: SummabilityReport
    diagonal_summability: SummabilityReport
    exponent_fit: ExponentFit | None = None
