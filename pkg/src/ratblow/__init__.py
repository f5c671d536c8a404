"""ratblow: exact-arithmetic rational blow-down toolkit.

Blow-up calculus on rational surfaces, Hirzebruch-Jung and Wahl chain
arithmetic, Smith normal form over the integers, and first-homology
bookkeeping for rational blow-downs, together with a verified built-in
construction of a blow-down with K^2 = 3 and H_1 = Z/2.
"""

from .blowdown import (BlowdownConfig, ChainSpec, FourManifoldInvariants,
                       blowdown_invariants, boundary_image, boundary_lens,
                       chains_disjoint, h1, h1_presentation, meridian_image,
                       validate_chain)
from .construction import (CenterAssignment, PencilIncidence, build_Y, build_Z,
                           enumerate_Z_centers, enumerate_pencils, verify_paper)
from .hj import (HJFraction, LensSpace, MeridianData, WahlParams, dual_chain,
                 hj_expand, hj_value, lens_boundary, meridian_coefficients,
                 plumbing_matrix, recognize_wahl, wahl_chain, wahl_extensions)
from .surface import (CenterSpec, CurveRecord, DivisorClass, MarkedSurface,
                      projective_plane)
from .zlinalg import (AbelianGroup, IntMatrix, SNFResult, class_of, cokernel,
                      determinant, snf)

__version__ = "0.1.0"

__all__ = [
    "AbelianGroup", "BlowdownConfig", "CenterAssignment", "CenterSpec",
    "ChainSpec", "CurveRecord", "DivisorClass", "FourManifoldInvariants",
    "HJFraction", "IntMatrix", "LensSpace", "MarkedSurface", "MeridianData",
    "PencilIncidence", "SNFResult", "WahlParams", "blowdown_invariants",
    "boundary_image", "boundary_lens", "build_Y", "build_Z", "chains_disjoint",
    "class_of", "cokernel", "determinant", "dual_chain", "enumerate_Z_centers",
    "enumerate_pencils", "h1", "h1_presentation", "hj_expand", "hj_value",
    "lens_boundary", "meridian_coefficients", "meridian_image",
    "plumbing_matrix", "projective_plane", "recognize_wahl", "snf",
    "validate_chain", "verify_paper", "wahl_chain", "wahl_extensions",
]
