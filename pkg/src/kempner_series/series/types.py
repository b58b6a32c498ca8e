from enum import Enum
from fractions import Fraction

from pydantic import BaseModel, ConfigDict, Field, field_serializer


class Verdict(str, Enum):
    """Behaviour of F_A at a real exponent."""

    CONVERGES = "Converges"
    DIVERGES = "Diverges"
    POLYNOMIAL = "Polynomial"


class EnclosureVerdict(str, Enum):
    CONVERGENT_ENCLOSED = "ConvergentEnclosed"
    DIVERGENT_CERTIFIED = "DivergentCertified"
    POLYNOMIAL = "Polynomial"


class AbscissaTerm(BaseModel):
    """One alpha_k * log(g - k) summand of the abscissa."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    alpha: Fraction
    base: int = Field(ge=1)

    @field_serializer("alpha")
    def _alpha_as_ratio(self, alpha: Fraction) -> str:
        return f"{alpha.numerator}/{alpha.denominator}"


class AbscissaReport(BaseModel):
    """sigma_c = (sum of alpha_k log(g - k)) / log g, symbolic and numeric."""

    model_config = ConfigDict(frozen=True)

    g: int
    terms: tuple[AbscissaTerm, ...]
    value: float
    diverges_at_sigma_c: bool
    m_set_infinite: bool
    polynomial: bool

    @property
    def symbolic(self) -> str:
        if not self.terms:
            return "0"
        numerator = " + ".join(
            f"{t.alpha.numerator}/{t.alpha.denominator}*log({t.base})"
            for t in self.terms
        )
        return f"({numerator})/log({self.g})"


class Classification(BaseModel):
    """Theorem-backed verdict plus the float-resolution flag near sigma_c."""

    model_config = ConfigDict(frozen=True)

    sigma: float
    sigma_c: float
    verdict: Verdict
    critical: bool


class DivergenceCertificate(BaseModel):
    model_config = ConfigDict(frozen=True)

    sigma: float
    sigma_c: float
    exact_critical: bool
    ratio: float
    template_constant: float
    m_range: list[int]
    certified_sum_lower: float
    # rounded up, so dominates never overstates
    template_sum_lower: float
    dominates: bool


class SeriesEnclosure(BaseModel):
    model_config = ConfigDict(frozen=True)

    sigma: float
    sigma_c: float
    verdict: EnclosureVerdict
    m_enumerated: int
    m_counted: int
    terms_enumerated: int
    partial_sum: float
    lower_bound: float
    counted_lower_bound: float
    upper_bound: float | None
    tail_upper: float | None = None
    certificate: DivergenceCertificate | None = None
