"""Finite quandles and their circular and linear order spaces."""

from .corders import (
    CyclicOrder,
    LinearOrder,
    TripleFunction,
    Violation,
    circular_from_linear,
    cocycle_defect,
    cyclic_to_function,
    enumerate_triple_functions,
    function_to_cyclic,
    is_degenerate_triple,
    is_left_invariant,
    is_left_order,
    is_right_invariant,
    is_right_order,
    is_rotation_of,
    left_invariance_witness,
    permutation_preserves,
    right_invariance_witness,
    validate_triple_function,
)
from .errors import (
    DegenerateTriple,
    DiagonalPair,
    NotACircularOrdering,
    NotAGroup,
    NotAnAutomorphism,
    NotAPermutation,
    NotAQuandle,
    NotInvertible,
    ParseError,
    QuorderError,
    ResourceLimit,
    SmallCarrier,
    ValidationError,
)
from .groups import (
    FiniteGroup,
    GroupAutomorphism,
    PermutationGroup,
    closure,
    cyclic_group,
    direct_product,
    fixed_point_witness,
    group_from_table,
    is_cyclic,
    is_semiregular,
    scaling_automorphism,
    symmetric_group,
)
from .quandles import (
    FiniteQuandle,
    Translation,
    affine_quandle,
    conj_quandle,
    core_quandle,
    dihedral_quandle,
    dual_quandle,
    generalized_alexander_quandle,
    inner_group,
    is_involutory,
    is_latin,
    is_semi_latin,
    is_subquandle,
    is_trivial_quandle,
    left_translation,
    orbits,
    product_quandle,
    quandle_from_table,
    right_translation,
    stabilizer_elements,
    trivial_quandle,
)
from .search import (
    DEFAULT_CAPS,
    Certificate,
    EmbeddingReport,
    OrderSpace,
    SearchCaps,
    Verdict,
    are_isomorphic,
    canonical_form,
    census,
    cyclic_witness_for_permutations,
    decide_bicircular,
    decide_left_circular,
    decide_left_orderable,
    decide_right_circular,
    decide_right_orderable,
    embedding_image,
    enumerate_bi_orderings,
    enumerate_bicircular,
    enumerate_circular_orderings,
    enumerate_lco,
    enumerate_left_orderings,
    enumerate_rankings,
    enumerate_rco,
    enumerate_right_orderings,
    generate_all_quandles,
    recheck_certificate,
    subbasic_left,
    subbasic_linear,
    subbasic_right,
)

__version__ = "0.1.0"
