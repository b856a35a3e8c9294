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

from .profiles import ExponentFit, ProfileSpec, SummabilityReport, to_fraction

GaugeKind = Literal["constant", "identity", "power", "log", "rho_log"]
AuditVerdict = Literal["ok", "violated"]


class GaugeSpec(BaseModel):
    """Symbolic integrability gauge phi, up to the multiplicative ``constant``.

    ``power`` is x^exponent, ``log`` is ln x and ``rho_log`` is rho(ln x) for a
    profile rho.
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    kind: GaugeKind
    exponent: Fraction | None = Field(None, description="Exponent of the power gauge")
    profile: ProfileSpec | None = Field(None, description="Profile of the rho_log gauge")
    constant: Fraction = Field(Fraction(1), description="Multiplicative constant kept symbolic")

    @field_validator("exponent", "constant", mode="before")
    @classmethod
    def _parse_fraction(cls, value: Any) -> Any:
        return to_fraction(value)

    @model_validator(mode="after")
    def _check_parameters(self) -> GaugeSpec:
        if self.kind == "power" and (self.exponent is None or self.exponent <= 0):
            raise ValueError("power gauges need an exponent > 0")
        if self.kind == "rho_log" and self.profile is None:
            raise ValueError("rho_log gauges need a profile")
        if self.constant <= 0:
            raise ValueError("gauge constants must be positive")
        return self

    @field_serializer("exponent", "constant")
    def _dump_fraction(self, value: Fraction | None) -> str | None:
        return None if value is None else str(value)

    @property
    def label(self) -> str:
        scale = "" if self.constant == 1 else f"{self.constant}*"
        if self.kind == "power":
            return f"{scale}x^{self.exponent}"
        if self.kind == "rho_log" and self.profile is not None:
            return f"{scale}{self.profile.label}(log x)"
        if self.kind == "log":
            return f"{scale}log x"
        if self.kind == "identity":
            return f"{scale}x"
        return str(self.constant)


class AuditRow(BaseModel):
    """One histogram row keyed by a gap r or a block index m."""

    key: int = Field(..., description="Gap value r or block index m")
    count: int = Field(..., ge=0, description="Exact number of elements in the row")
    fraction: Fraction = Field(..., description="count / |source set|")
    bound: int | None = Field(None, description="Gap bound attached to the row, when exact")
    weight: float = Field(..., description="phi evaluated at the row's gap or bound")
    partial_sum: float = Field(..., description="Running sum of weight * fraction")
    majorant: float | None = Field(None, description="Counting majorant for the row")
    fitted_constant: float | None = Field(None, description="count / majorant")

    model_config = ConfigDict(arbitrary_types_allowed=True)

    @field_serializer("fraction")
    def _dump_fraction(self, value: Fraction) -> str:
        return str(value)


class CouplingAudit(BaseModel):
    """Distance histogram of one generator with its integrability partial sums."""

    generator: str
    n: int
    key_name: Literal["r", "m"] = "r"
    population: int = Field(..., description="|source set|")
    interior: int = Field(..., description="Audited elements with an interior cursor")
    sampled: bool = Field(False, description="Counts come from a seeded sample")
    max_gap: int | None = None
    exceptions: int = Field(0, description="Elements breaking the gap bound")
    rows: list[AuditRow] = Field(default_factory=list)
    total: float = Field(0.0, description="Final partial sum")
    verdict: AuditVerdict = "ok"


class ZCouplingReport(BaseModel):
    """Bijectivity, carry-histogram and gap audit of one encoder."""

    n: int
    kappa: int
    q: int
    population: int = Field(..., description="|G_n|")
    mu_size: int = Field(..., description="max(mu_n) + 1")
    checked: int = Field(..., description="Elements passed through encode and decode")
    sampled: bool = False
    injective: bool
    surjective: bool | None = Field(None, description="Only decided by exhaustive runs")
    round_trip_failures: int = 0
    carry_histogram: dict[int, int] = Field(default_factory=dict)
    saturated: int = 0
    histogram_matches: bool | None = None
    stability_exceptions: int = 0
    gaps: list[CouplingAudit] = Field(default_factory=list)
    note: str = "encode values depend on the chosen window and derived numberings"

    @property
    def ok(self) -> bool:
        return (
            self.injective
            and self.surjective is not False
            and self.round_trip_failures == 0
            and self.histogram_matches is not False
            and self.stability_exceptions == 0
            and all(audit.verdict != "violated" for audit in self.gaps)
        )


class IntegrabilitySplit(BaseModel):
    """sum_m phi(bound_m) |X^s_m| / |G_n| cut at m = p_n and m = p_n + 1."""

    generator: str
    low: float = Field(..., description="m <= p_n, weighted by phi(kappa^m)")
    middle: float = Field(..., description="m = p_n + 1, weighted by phi(kappa^p_n)")
    high: float = Field(..., description="m >= p_n + 2, weighted by phi(D_n l_(m - p_n))")

    @property
    def total(self) -> float:
        return self.low + self.middle + self.high


class CouplingHypotheses(BaseModel):
    """The two growth hypotheses gating any boundedness claim on the integrability sums."""

    diagonal: SummabilityReport
    exponent: ExponentFit

    @property
    def hold(self) -> bool:
        return self.diagonal.verdict != "fails" and self.exponent.verdict == "ok"


class DDCouplingReport(BaseModel):
    """Structure, injectivity, density and distance audit of one injection G_n -> H_n."""

    n: int
    kappa: int
    source_size: int = Field(..., description="|G_n|")
    target_size: int = Field(..., description="|K_n|")
    sandwich: str = Field(..., description="(d_n, i_n, j_n)")
    target: str = Field(..., description="(D_n, I_n, J_n)")
    Q: int
    R: int
    p: int
    M: int
    q_at_least_three: bool
    d_above_width: bool
    spreading_a: int
    spreading_b: int
    spreading_within: bool = Field(..., description="1 <= a_n <= q^3")
    removed: int = Field(..., description="|K_n minus H_n|")
    removed_bound: int = Field(..., description="D_n q^(3 + kappa^n)")
    proportional: bool = Field(..., description="|G_n| <= |K_n| <= 4 q^2 |G_n|")
    e_sandwich: bool
    theta_sandwich: bool
    layout_gaps: int = Field(0, description="Skipped cursors whose predecessor is skipped")
    chi_fibers_ok: bool
    blocks_ok: bool = Field(..., description="Nested blocks with kappa^i <= |B_i| <= 2 kappa^i")
    base_products_ok: bool = Field(..., description="b_0 ... b_p = q^D_n in every frame")
    checked: int
    sampled: bool = False
    triple_map_bijective: bool | None = None
    stability_exceptions: int = 0
    injective: bool
    image_in_h: bool
    density_radius: int | None = None
    density_constant: int
    distances: list[CouplingAudit] = Field(default_factory=list)
    splits: list[IntegrabilitySplit] = Field(default_factory=list)
    hypotheses: CouplingHypotheses | None = None

    @property
    def dense(self) -> bool | None:
        if self.density_radius is None:
            return None
        return self.density_radius <= self.density_constant

    @property
    def ok(self) -> bool:
        return (
            self.injective
            and self.image_in_h
            and self.triple_map_bijective is not False
            and self.removed <= self.removed_bound
            and self.layout_gaps == 0
            and self.chi_fibers_ok
            and self.blocks_ok
            and self.base_products_ok
            and all(audit.verdict != "violated" for audit in self.distances)
        )
