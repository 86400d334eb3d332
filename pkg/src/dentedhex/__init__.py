"""Exact enumeration of lozenge tilings of dented hexagons with barriers.

Two independent engines (brute-force matching enumeration and closed-form
axis-cut summation), exact q-weighted analogs, closed-form product
formulas, and a verification harness for the shuffling identities.
"""

from .engines import (count_axis, count_brute, enumerate_tilings,
                      qcount_axis, qcount_brute, tiling_qweight)
from .exactnum import QPoly, QRatio, qratio_eq
from .formulas import (ShuffleInstance, asym_rhs, clp, clp_q, delta, delta_q,
                       gen_shuffle_rhs, lambda_of, pp, pp_q, q_shuffle_rhs,
                       schur_ones, shuffle_rhs)
from .lattice import (ClusterSpec, RegionSpec, SemihexSpec, TriangularRegion,
                      ValidatedSpec, build_region, build_semihex_region,
                      clusters_to_spec, flip_spec, make_spec,
                      reflect_positions, spec_from_json_dict, validate_spec)

__version__ = "0.1.0"

__all__ = [
    "QPoly", "QRatio", "qratio_eq",
    "RegionSpec", "ValidatedSpec", "SemihexSpec", "ClusterSpec",
    "TriangularRegion", "ShuffleInstance",
    "validate_spec", "make_spec", "spec_from_json_dict", "build_region",
    "build_semihex_region", "clusters_to_spec", "flip_spec",
    "reflect_positions",
    "count_brute", "qcount_brute", "count_axis", "qcount_axis",
    "enumerate_tilings", "tiling_qweight",
    "pp", "pp_q", "clp", "clp_q", "delta", "delta_q", "lambda_of",
    "schur_ones", "shuffle_rhs", "gen_shuffle_rhs", "q_shuffle_rhs",
    "asym_rhs",
    "__version__",
]
