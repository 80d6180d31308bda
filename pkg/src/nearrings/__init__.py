"""Finite planar nearrings: construction, analysis, enumeration, designs."""

__version__ = "0.1.0"

from .analysis import (
    GCReport,
    IdealCheck,
    LemmaReport,
    SemidirectReport,
    distributive_elements,
    generalized_centre,
    is_ideal,
    orbit_nearfield,
    semidirect_decomposition,
    verify_lemma_suite,
    zero_multipliers,
)
from .catalog import all_catalog_groups, catalog_group, cyclic_group, group_names
from .designs import basic_blocks, block_design, export_design, orbits_additively_closed
from .enumeration import (
    IsoClass,
    enumerate_planar_nearrings,
    fingerprint,
    fpf_automorphism_groups,
    nearrings_isomorphic,
    zp2_family,
)
from .errors import (
    CatalogMissError,
    IndeterminateError,
    NearringError,
    TheoremViolationError,
    ValidationError,
)
from .ferrero import (
    FerreroPair,
    MultiplierClasses,
    PlanarNearring,
    RepChoice,
    construct,
    factorize,
    is_planar,
    multiplier_classes,
    nearring_from_nearfield,
    reconstruct_provenance,
    right_identities,
)
from .fileformat import (
    NearringDocument,
    document_from_nearring,
    nearring_from_document,
    read_document,
    write_document,
)
from .groups import (
    AutomorphismGroup,
    FiniteGroup,
    Orbit,
    automorphism_group,
    centre_of,
    is_fixed_point_free,
    minus_id_plus_phi_bijective,
    orbits,
)
from .nearfields import (
    Nearfield,
    kern,
    make_dickson_nearfield_9,
    make_field,
    multiplicative_centre,
    nearfield_automorphisms,
)
from .nearvector import (
    ConjectureReport,
    NearvectorSpace,
    check_conjecture,
    derived_planar_nearring,
    identity_twist,
    make_nearvector_space,
    power_twist,
    quasi_kernel,
    regular_decomposition,
    twist_adjusted_kern,
)
