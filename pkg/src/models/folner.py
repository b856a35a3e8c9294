from __future__ import annotations

from pydantic import BaseModel, Field


class GrowthRow(BaseModel):
    """One line of the Folner growth table."""

    n: int = Field(..., ge=1)
    i: int = Field(..., ge=0)
    j: int = Field(..., ge=1)
    cardinality: int = Field(..., description="|F_{n,i,j}|, exact")
    ln_cardinality: float
    ratio: float | None = Field(None, description="|F_{n,i,j}| / |F_previous| along the chain")
    boundary_ratio: float | None = Field(None, description="|boundary| / |F|; 2/n for n >= 2")
    sofic_defect_r1: float | None = Field(
        None, description="Share of elements whose labeled 1-ball differs from the group's"
    )


class GrowthBoundsReport(BaseModel):
    """Smallest constants making the displayed growth inequalities hold on the sweep."""

    n_max: int
    kappa_exponents: int = Field(..., description="Largest e with F_{kappa^e} included")
    c1: float | None = Field(None, description="ln prod |Gamma'_m|^(n-k_m) <= C1 n l")
    c2: float | None = Field(None, description="ln |F_{n,i,j}| <= C2 n l")
    c3: float | None = Field(None, description="C3 kappa^(e-1) l <= ln |F_{kappa^e}|")
    c4: float | None = Field(None, description="ln |F_{kappa^e}| <= C4 kappa^e l")
    chain_ratios_ok: bool = Field(..., description="Every successor ratio lies in [2, 2q]")
    rows: list[GrowthRow] = Field(default_factory=list)


class IsoperimetricPoint(BaseModel):
    """A Folner set as a lower-bound witness for the isoperimetric profile."""

    n: int
    i: int = 0
    j: int = 1
    cardinality: int
    ratio: float = Field(..., description="|F| / |boundary F| = n / 2")
    ln_cardinality: float
