from .certify import (
    CERTIFIED,
    EVIDENCE,
    EXCLUDED,
    CertificateReport,
    CertifyOptions,
    PairEntry,
    PrimeEntry,
    certify,
    exclusion_reason,
)
from .criteria import (
    TRAD_F,
    TRAD_F2,
    TRAD_UNDETERMINED,
    FWitness,
    TraceSample,
    check_p_independence,
    depth2_generation,
    even_degree_samples,
    expansions,
    f_in_A,
    f_mod,
    f_nonvanishing_scan,
    pairwise_trace_surjectivity,
    residual_trace_surjectivity,
    residues,
    trad_field_detect,
    trad_of,
)
from .report import report_to_json, write_report
from .sweep import SweepResult, collect_frobenius

__all__ = [
    "CERTIFIED",
    "EVIDENCE",
    "EXCLUDED",
    "TRAD_F",
    "TRAD_F2",
    "TRAD_UNDETERMINED",
    "CertificateReport",
    "CertifyOptions",
    "FWitness",
    "PairEntry",
    "PrimeEntry",
    "SweepResult",
    "TraceSample",
    "certify",
    "check_p_independence",
    "collect_frobenius",
    "depth2_generation",
    "even_degree_samples",
    "exclusion_reason",
    "expansions",
    "f_in_A",
    "f_mod",
    "f_nonvanishing_scan",
    "pairwise_trace_surjectivity",
    "report_to_json",
    "residual_trace_surjectivity",
    "residues",
    "trad_field_detect",
    "trad_of",
    "write_report",
]
