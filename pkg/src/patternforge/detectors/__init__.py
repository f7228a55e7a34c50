"""Pattern detectors: brute-force oracles and the specialized paired algorithms."""

from .basic import (
    detect_c4_or_triangle,
    detect_k4_or_i4,
    detect_pair_3node,
    noninduced_c4,
    p3_structure,
)
from .c4pairs import (
    detect_c4_or_coclaw,
    detect_c4_or_diamond,
    detect_c4_or_k4,
    detect_c4_or_paw,
    detect_c4_or_triangleH,
)
from .compl import detect_h_or_complement, split_graph_certificate
from .oracle import brute_force_colorful, brute_force_detect, brute_force_detect_set
from .result import (
    Certificate,
    DetectionResult,
    absent_result,
    found_result,
    verify_certificate,
    verify_witness,
)

__all__ = [
    "Certificate",
    "DetectionResult",
    "absent_result",
    "brute_force_colorful",
    "brute_force_detect",
    "brute_force_detect_set",
    "detect_c4_or_coclaw",
    "detect_c4_or_diamond",
    "detect_c4_or_k4",
    "detect_c4_or_paw",
    "detect_c4_or_triangle",
    "detect_c4_or_triangleH",
    "detect_h_or_complement",
    "detect_k4_or_i4",
    "detect_pair_3node",
    "found_result",
    "noninduced_c4",
    "p3_structure",
    "split_graph_certificate",
    "verify_certificate",
    "verify_witness",
]
