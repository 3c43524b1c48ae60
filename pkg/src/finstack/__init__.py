"""Finite-model engine for groupoid classifying spaces and descent data."""

from .groupoid import (
    FiniteGroupoid,
    GroupoidFunctor,
    action_groupoid,
    cyclic_groupoid,
    disjoint_union,
    fiber_product_2,
    fiber_product_2_projections,
    fiber_product_strict,
    functor,
    groupoid_from_group,
    identity_functor,
    is_weak_equivalence,
    pair_groupoid,
    pi0,
    point_groupoid,
    symmetric_groupoid,
    validate_groupoid,
    vertex_group,
)
from .homology import (
    ChainComplex,
    HomologyGroup,
    chain_complex,
    homology,
    homology_range,
    induced_map_is_isomorphism,
    kernel_basis,
    smith_normal_form,
)
from .simplicial import TruncatedSimplicialSet, graph_simplicial_set, nerve, simplicial_circle
from .fundamental import GroupPresentation, Pi1Report, coset_enumeration, pi1_iso_check, pi1_presentation
from .milnor import (
    JoinComplex,
    MilnorBComplex,
    chain_complex_B,
    chain_complex_E,
    comparison_chain_map,
    milnor_B,
    milnor_E,
    milnor_pairing,
    milnor_section,
    milnor_to_nerve,
)
from .torsor import (
    Cocycle,
    CocycleMorphism,
    CoveredSpace,
    Torsor,
    check_cocycle_morphism,
    cocycle_to_torsor,
    covered_space,
    find_cocycle_morphism,
    torsor_isomorphic,
    torsor_to_cocycle,
    validate_cocycle,
    validate_torsor,
)
from .category import (
    CatFunctor,
    FiniteCategory,
    cat_functor,
    chain_category,
    comma_category,
    discrete_category,
    identity_cat_functor,
    poset_category,
    validate_category,
)
from .spans import (
    MorphismClass,
    Span,
    SpanClasses,
    compose_spans,
    identities_class,
    morphism_class,
    r_homotopic,
    r_homotopy_classes,
    span_pi0,
    theta_span,
    zigzag_check,
)
from .kan import (
    AdjunctionReport,
    FiberDiagram,
    FinSetFiber,
    GroupoidDiagram,
    IndexedCategory,
    Lift,
    LimitCandidate,
    LimitCone,
    RightKanResult,
    SpecialDiagram,
    adjunction_check,
    diagram_special,
    fib_mor,
    finset_limit,
    groupoid_diagram,
    indexed_category,
    is_global_limit,
    lift,
    make_fiber,
    right_kan,
    trivial_indexed_category,
)
from .cli import RunReport, dispatch
