from __future__ import annotations

from pydantic import BaseModel, Field


class MarkedGammaCheck(BaseModel):
    """Outcome of the exhaustive verification of a marked group."""

    name: str = Field(..., description="Name of the checked group")
    order: int = Field(..., description="|Gamma|")
    prime_order: int = Field(..., description="|Gamma'|")
    q: int = Field(..., description="|A x B|")
    diameter: int = Field(..., description="Word diameter over A u B")
    generates: bool = Field(..., description="A u B generates Gamma")
    prime_is_normal_closure: bool = Field(
        ..., description="Gamma' equals the normal closure of [A, B]"
    )
    prime_is_normal: bool = Field(..., description="Gamma' is normal in Gamma")
    order_law: bool = Field(..., description="|Gamma| = |A x B| |Gamma'|")
    theta_is_homomorphism: bool = Field(..., description="theta respects the product")
    theta_kernel_is_prime: bool = Field(..., description="ker theta = Gamma'")
    diameter_matches_bfs: bool = Field(
        ..., description="Stored diameter equals the BFS eccentricity"
    )
    derived_parts_in_prime: bool = Field(..., description="Every derived part lies in Gamma'")

    @property
    def ok(self) -> bool:
        return all(
            (
                self.generates,
                self.prime_is_normal_closure,
                self.prime_is_normal,
                self.order_law,
                self.theta_is_homomorphism,
                self.theta_kernel_is_prime,
                self.diameter_matches_bfs,
                self.derived_parts_in_prime,
            )
        )


class GammaFamilyFit(BaseModel):
    """Affine envelope of ln|Gamma'| in terms of the diameter across a family."""

    points: int = Field(..., description="Number of groups with nontrivial Gamma'")
    c1: float | None = Field(None, description="Smallest ratio ln|Gamma'| / l")
    c2: float | None = Field(None, description="Offset making c1 l - c2 a lower bound")
    c3: float | None = Field(None, description="Largest ratio ln|Gamma'| / l")
    slope: float | None = Field(None, description="Least-squares slope of ln|Gamma'| against l")
    intercept: float | None = Field(None, description="Least-squares intercept")
