"""Photon-photon correlations of disparate source pairings.

Closed-form G2 correlations, visibilities, Cauchy-Schwarz witnesses and
CHSH values for pairings of a single-photon emitter with coherent, thermal
and photon-added fields, cross-checked against a truncated Fock-space
engine.
"""

from ._core import (
    ChshReport,
    PairConfig,
    Pairing,
    SchwarzMax,
    SchwarzValue,
    SourceKind,
    SourceModel,
    TruncationError,
    WitnessReport,
    __version__,
    bell_threshold,
    choose_truncation,
    chsh,
    chsh_max,
    cs_determinant,
    g2,
    g2_numeric,
    make_pair,
    moment,
    moment_numeric,
    naive_normalized_cs,
    nbar_from_net,
    nbar_from_visibility,
    net_photon_number,
    normalized_g2,
    schwarz_max,
    schwarz_ratio,
    variance_corr,
    verify,
    visibility,
    witness_report,
)

__all__ = [
    "ChshReport",
    "PairConfig",
    "Pairing",
    "SchwarzMax",
    "SchwarzValue",
    "SourceKind",
    "SourceModel",
    "TruncationError",
    "WitnessReport",
    "__version__",
    "bell_threshold",
    "choose_truncation",
    "chsh",
    "chsh_max",
    "cs_determinant",
    "g2",
    "g2_numeric",
    "make_pair",
    "moment",
    "moment_numeric",
    "naive_normalized_cs",
    "nbar_from_net",
    "nbar_from_visibility",
    "net_photon_number",
    "normalized_g2",
    "schwarz_max",
    "schwarz_ratio",
    "variance_corr",
    "verify",
    "visibility",
    "witness_report",
]
