from .abscissa import (
    CRITICAL_TOLERANCE,
    abscissa,
    classify,
    corollary_abscissa,
    critical_ratio,
    empirical_abscissa,
)
from .certificate import divergence_certificate
from .enclosure import evaluate
from .types import (
    AbscissaReport,
    AbscissaTerm,
    Classification,
    DivergenceCertificate,
    EnclosureVerdict,
    SeriesEnclosure,
    Verdict,
)

__all__ = [
    "CRITICAL_TOLERANCE",
    "AbscissaReport",
    "AbscissaTerm",
    "Classification",
    "DivergenceCertificate",
    "EnclosureVerdict",
    "SeriesEnclosure",
    "Verdict",
    "abscissa",
    "classify",
    "corollary_abscissa",
    "critical_ratio",
    "divergence_certificate",
    "empirical_abscissa",
    "evaluate",
]
