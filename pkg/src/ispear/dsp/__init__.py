"""Endpoint detection, Daubechies DWT and per-utterance feature extraction."""
from ispear.dsp.endpoints import EndpointConfig, Endpoints, detect_endpoints
from ispear.dsp.features import (
    FEATURE_HEADER,
    RESPONSES,
    ExtractionReport,
    FeatureRow,
    amplitude_feature,
    approx_mean_feature,
    duration_feature,
    extract_features,
    read_features_csv,
    write_features_csv,
)
from ispear.dsp.wavelets import FilterPair, daubechies_filters, dwt_level1, idwt_level1

__all__ = [
    "EndpointConfig",
    "Endpoints",
    "detect_endpoints",
    "FEATURE_HEADER",
    "RESPONSES",
    "ExtractionReport",
    "FeatureRow",
    "amplitude_feature",
    "approx_mean_feature",
    "duration_feature",
    "extract_features",
    "read_features_csv",
    "write_features_csv",
    "FilterPair",
    "daubechies_filters",
    "dwt_level1",
    "idwt_level1",
]
