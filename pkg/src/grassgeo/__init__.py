"""Numerical geometry of complex plane-Grassmannians and their bounded duals.

Chart coordinates, minor (Pluecker) coordinates, stationary angles, geodesic
exponential/logarithm maps, invariant distances, cell decompositions,
incidence varieties, and cut/conjugate-locus classification, each
cross-checked against an independent oracle.
"""

from .core import (
    DEFAULT_TOL,
    ChartPoint,
    ChartSingularity,
    DegenerateVector,
    DimensionMismatch,
    GrassmannError,
    InfiniteDiastasis,
    InternalInconsistency,
    InvalidPoint,
    NonPositiveForm,
    NullVector,
    OnPolarDivisor,
    OutsideChart,
    RankDeficient,
    Signature,
    SignatureUnsupported,
    Tolerance,
    base_frame,
    coordinate_plane,
    intersection_dim,
    numerical_rank,
    orthonormal_basis,
    perp_basis,
)
from .pluecker import (
    PlueckerCoords,
    chart_transition,
    complement_identity_residual,
    frame_pairing,
    hermitian_product,
    in_polar_divisor,
    orthogonal_complement,
    pluecker_coords,
    pluecker_relations_residual,
)
from .angles import (
    AngleSpectrum,
    angle_cosine_matrix,
    angle_product_check,
    cayley_distance,
    is_isoclinic_pair,
    principal_angles,
    stationary_angles,
)
from .geodesics import (
    GroupElement,
    ambient_exponential,
    coherent_overlap,
    diastasis,
    distance,
    embedded_vs_intrinsic,
    exp_map,
    geodesic_frame,
    geodesic_residual,
    identity_element,
    log_map,
    metric_form,
    mobius_action,
    push_displacement,
    transvection_to_zero,
)
from .schubert import (
    JumpSequence,
    SchubertSymbol,
    Stratification,
    Stratum,
    cell_dimension,
    characteristic_counts,
    echelon_form,
    enumerate_symbols,
    in_open_cell,
    intersects_coordinate_plane,
    schubert_membership,
    stratify,
)
from .loci import (
    CartanVector,
    ConjugateClass,
    ConjugateKind,
    ConjugateTime,
    classify_conjugate,
    conjugate_roundtrip_check,
    diagonal_geodesic_frame,
    flat_direction_matrix,
    in_cut_locus,
    restricted_roots_verify,
    root_system,
    tangent_conjugate_times,
)

__version__ = "0.1.0"
