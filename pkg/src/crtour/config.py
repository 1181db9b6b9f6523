"""Size caps and environment knobs.

CRTOUR_MAX_N overrides the enumeration cap (tournament streams, dedupe
mode).  Subset/extension scans use the fixed desk-scale cap below and
accept explicit ``cap=`` overrides per call.
"""

import os

DEFAULT_ENUM_CAP = 8
DEFAULT_SCAN_CAP = 16

# int64 bit-packing of the upper triangle needs n(n-1)/2 <= 62
PACKING_LIMIT = 11


def enum_cap() -> int:
    raw = os.environ.get("CRTOUR_MAX_N", "")
    if raw.strip():
        return int(raw)
    return DEFAULT_ENUM_CAP


def scan_cap() -> int:
    return DEFAULT_SCAN_CAP
