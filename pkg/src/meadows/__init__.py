"""Finite commutative rings, total generalized inverses, and their structure.

A meadow is a commutative ring in which every element x has a generalized
inverse: the unique y with x*x*y = x and y*y*x = y (zero inverts to zero).
This package constructs finite rings (Z/nZ, Galois fields, products,
explicit tables), decides meadow-hood by exhaustive search, decomposes every
finite meadow into a verified product of Galois fields via its minimal
idempotents, and classifies meadows of a given order by their signature,
the multiset of component field orders.

The hot verification scans run on a small compiled kernel when available
(``meadows.kernels.BACKEND`` says which backend is active).
"""
from meadows.counting import (
    ClassifyReport,
    CountReport,
    LawReport,
    classify_order,
    count_invertible,
    count_report,
    count_self_inverse,
    crt_isomorphism,
    is_squarefree,
    meadow_from_signature,
    zmod_meadow_law,
)
from meadows.errors import (
    AxiomViolationError,
    CarrierBoundError,
    ConsistencyError,
    DescriptorError,
    MeadowError,
    NotAFieldError,
    NotAMeadowError,
    RingSpecError,
)
from meadows.kernels import BACKEND as KERNEL_BACKEND
from meadows.meadow import (
    Meadow,
    NotAMeadow,
    check_inverse_laws,
    generalized_inverse,
    inverse_table,
    pseudo_witnesses,
    require_meadow,
    skew_inverse,
    to_meadow,
    verify_meadow,
)
from meadows.polyfield import (
    GaloisField,
    Polynomial,
    field_inverse,
    is_irreducible,
    is_prime,
    make_galois_field,
    make_poly,
    poly_add,
    poly_mul,
    poly_mulmod,
)
from meadows.rings import (
    FiniteCommRing,
    RingReport,
    RingSpec,
    check_axioms,
    dump_ring,
    load_ring,
    make_galois_ring,
    make_product,
    make_zmod,
    parse_ringspec,
    render_ringspec,
    ring_equal,
)
from meadows.structure import (
    Component,
    Decomposition,
    Signature,
    check_idempotent_laws,
    component,
    decompose,
    find_isomorphism,
    find_proper_submeadow,
    idem_leq,
    idempotents,
    identify_field,
    is_isomorphic,
    is_minimal_meadow,
    is_ring_isomorphism,
    minimal_idempotents,
    signature,
)

__version__ = "0.1.0"

__all__ = [
    "KERNEL_BACKEND",
    "__version__",
    # polyfield
    "Polynomial",
    "GaloisField",
    "make_poly",
    "poly_add",
    "poly_mul",
    "poly_mulmod",
    "is_irreducible",
    "is_prime",
    "make_galois_field",
    "field_inverse",
    # rings
    "FiniteCommRing",
    "RingSpec",
    "RingReport",
    "make_zmod",
    "make_galois_ring",
    "make_product",
    "load_ring",
    "dump_ring",
    "parse_ringspec",
    "render_ringspec",
    "ring_equal",
    "check_axioms",
    # meadow
    "Meadow",
    "NotAMeadow",
    "generalized_inverse",
    "pseudo_witnesses",
    "to_meadow",
    "require_meadow",
    "inverse_table",
    "verify_meadow",
    "check_inverse_laws",
    "skew_inverse",
    # structure
    "Component",
    "Decomposition",
    "Signature",
    "idempotents",
    "idem_leq",
    "minimal_idempotents",
    "component",
    "decompose",
    "signature",
    "identify_field",
    "is_isomorphic",
    "find_isomorphism",
    "is_minimal_meadow",
    "find_proper_submeadow",
    "is_ring_isomorphism",
    "check_idempotent_laws",
    # counting
    "CountReport",
    "ClassifyReport",
    "LawReport",
    "is_squarefree",
    "count_self_inverse",
    "count_invertible",
    "count_report",
    "classify_order",
    "meadow_from_signature",
    "zmod_meadow_law",
    "crt_isomorphism",
    # errors
    "MeadowError",
    "CarrierBoundError",
    "RingSpecError",
    "DescriptorError",
    "AxiomViolationError",
    "NotAMeadowError",
    "NotAFieldError",
    "ConsistencyError",
]
