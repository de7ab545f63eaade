"""Exact-integer twist dynamics on the disk with three marked points.

The package recognizes conjugacy classes of twists about essential curves,
computes minimal untwisting words, converts between Dynnikov and torus
coordinates, expands even continued fractions with their transvection
factorizations, and brute-force-validates all of it against breadth-first
search on the twist Cayley graphs.
"""

from .actions import (
    BraidLetter,
    FixedPointError,
    Generator,
    Track,
    TrackFamily,
    apply_braid,
    apply_twist,
    apply_word,
    jump_path,
    track_of,
    twist_via_jumps,
)
from .coords import (
    CurveKind,
    CurveTag,
    DynnikovCoord,
    TorusCoord,
    curve_kind,
    dynnikov_to_torus,
    is_essential,
    torus_to_dynnikov,
)
from .ecf import (
    IDENTITY,
    L,
    U,
    EcfExpansion,
    Mat2,
    ecf_expand,
    ecf_length,
    factorize,
    in_gamma2,
    in_gamma2_bar,
)
from .oracle import (
    DYNNIKOV_SEEDS,
    TORUS_SEEDS,
    CayleySpec,
    CoveringReport,
    DistanceMap,
    OrbitCensus,
    Plane,
    VerificationReport,
    bfs_distances,
    check_covering,
    find_simple_cycles,
    orbit_census,
    run_verification,
    torus_orbit_label,
)
from .untwist import (
    REFERENCE_CURVES,
    CurveClass,
    UntwistResult,
    classify,
    conjugation_length,
    conjugator,
    twists_conjugate,
    untwist,
)

__version__ = "0.1.0"

__all__ = [
    "BraidLetter", "CayleySpec", "CoveringReport", "CurveClass", "CurveKind",
    "CurveTag", "DistanceMap", "DynnikovCoord", "DYNNIKOV_SEEDS", "EcfExpansion",
    "FixedPointError", "Generator", "IDENTITY", "L", "Mat2", "OrbitCensus",
    "Plane", "REFERENCE_CURVES", "Track", "TrackFamily", "TorusCoord",
    "TORUS_SEEDS", "U", "UntwistResult", "VerificationReport", "apply_braid",
    "apply_twist", "apply_word", "bfs_distances", "check_covering", "classify",
    "conjugation_length", "conjugator", "curve_kind", "dynnikov_to_torus",
    "ecf_expand", "ecf_length", "factorize", "find_simple_cycles", "in_gamma2",
    "in_gamma2_bar", "is_essential", "jump_path", "orbit_census",
    "run_verification", "torus_orbit_label", "torus_to_dynnikov", "track_of",
    "twist_via_jumps", "twists_conjugate", "untwist",
]
