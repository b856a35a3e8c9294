from __future__ import annotations

from fractions import Fraction
from pathlib import Path
from typing import Any, Literal

from pydantic import (
    BaseModel,
    ConfigDict,
    Field,
    field_serializer,
    field_validator,
    model_validator,
)

from .coupling import GaugeSpec
from .profiles import ProfileSpec, to_fraction

ProductKind = Literal["lamplighter", "s3_fiber", "a5_fiber", "table"]
TaskName = Literal[
    "profile-build",
    "group-check",
    "folner-stats",
    "zcoupling-verify",
    "zcoupling-sums",
    "ddcoupling-verify",
    "ddcoupling-audit",
    "ddcoupling-sums",
    "oracle",
]


class ProductSpec(BaseModel):
    """A diagonal product: the lamplighter, or one finite level k_1 marked by a finite group."""

    model_config = ConfigDict(frozen=True)

    kind: ProductKind = "lamplighter"
    k1: int = Field(2, ge=1, description="Scale of the single finite level")
    table: Path | None = Field(None, description="Marked group table file for kind = table")

    @model_validator(mode="after")
    def _check_table(self) -> ProductSpec:
        if self.kind == "table" and self.table is None:
            raise ValueError("table products need a table file")
        return self

    @property
    def label(self) -> str:
        if self.kind == "lamplighter":
            return "lamplighter"
        name = self.table.stem if self.kind == "table" and self.table else self.kind
        return f"{name}@k1={self.k1}"


class LabTask(BaseModel):
    """One unit of work; fields left unset fall back to the enclosing ``LabConfig``."""

    model_config = ConfigDict(frozen=True)

    name: TaskName
    n: list[int] | None = Field(None, description="Folner parameters n to run on")
    generator: str | None = Field(None, description="Generator label audited by ddcoupling-audit")
    oracle: str | None = Field(None, description="Registered oracle name for oracle tasks")
    args: dict[str, Any] = Field(default_factory=dict, description="Oracle arguments")

    @field_validator("n", mode="before")
    @classmethod
    def _listify(cls, value: Any) -> Any:
        return [value] if isinstance(value, int) else value

    @model_validator(mode="after")
    def _check_oracle(self) -> LabTask:
        if self.name == "oracle" and not self.oracle:
            raise ValueError("oracle tasks need an oracle name")
        if self.n is not None and any(n < 1 for n in self.n):
            raise ValueError("n must be at least 1")
        return self


class LabConfig(BaseModel):
    """Experiment parameters read from the ``--config`` file."""

    model_config = ConfigDict(frozen=True, extra="forbid", arbitrary_types_allowed=True)

    source_profile: ProfileSpec = Field(
        default_factory=lambda: ProfileSpec(family="power", alpha=Fraction(1)),
        description="Profile rho of the source diagonal product",
    )
    target_profile: ProfileSpec | None = Field(
        None, description="Profile rho~ of the target; enables the exponent fit"
    )
    kappa: int = Field(3, ge=3)
    lam: int = Field(2, ge=2, description="Base of the powers the diameters l_m are drawn from")
    delta: Fraction = Field(Fraction(1, 4), description="Band width of rho_bij, 0 < delta < 1/2")
    depth: int = Field(4, ge=0, description="Levels of the profile sequences")
    source: ProductSpec = Field(default_factory=ProductSpec)
    target: ProductSpec = Field(default_factory=lambda: ProductSpec(kind="s3_fiber"))
    gauge: GaugeSpec = Field(
        default_factory=lambda: GaugeSpec(kind="constant"),
        description="Integrability gauge phi applied to the audited distances",
    )
    budget: int | None = Field(None, ge=1, description="Enumeration budget; LAB_* default")
    n_values: list[int] = Field(default_factory=lambda: [1], description="Default n range")
    n_max: int = Field(6, ge=1, description="Largest n of the Folner growth table")
    r_max: int | None = Field(None, ge=0, description="Gap cutoff R of the Z-coupling sums")
    m_max: int | None = Field(None, ge=0, description="Block cutoff of the diagonal sums")
    sample: int | None = Field(None, ge=1, description="Sample size above the budget")
    seed: int | None = Field(None, description="Sampling seed; LAB_SEED default")
    tasks: list[LabTask] = Field(default_factory=list)

    @field_validator("delta", mode="before")
    @classmethod
    def _parse_delta(cls, value: Any) -> Any:
        return to_fraction(value)

    @field_validator("n_values")
    @classmethod
    def _check_n_values(cls, value: list[int]) -> list[int]:
        if not value or any(n < 1 for n in value):
            raise ValueError("n_values must be a nonempty list of integers >= 1")
        return value

    @model_validator(mode="after")
    def _check_delta(self) -> LabConfig:
        if not 0 < self.delta < Fraction(1, 2):
            raise ValueError("delta must lie strictly between 0 and 1/2")
        return self

    @field_serializer("delta")
    def _dump_delta(self, value: Fraction) -> str:
        return str(value)


class TaskOutcome(BaseModel):
    """What one task produced and whether its asserted invariants held."""

    task: str
    ok: bool
    artifacts: list[str] = Field(default_factory=list, description="Files written, relative")
    summary: dict[str, Any] = Field(default_factory=dict)


class RunSummary(BaseModel):
    outcomes: list[TaskOutcome] = Field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(outcome.ok for outcome in self.outcomes)


__all__ = [
    "LabConfig",
    "LabTask",
    "ProductKind",
    "ProductSpec",
    "RunSummary",
    "TaskName",
    "TaskOutcome",
]
