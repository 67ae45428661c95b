"""Exact verification and construction of splittings of nonassociative algebras.

Algebras are structure-constant tensors ``c[i, j, k]`` (``e_i∘e_j = Σ_k c[i,j,k] e_k``)
held as numpy object arrays of ``Fraction``.
"""

from .averaging import (
    AveragingLieAlgebra,
    adjoint_map,
    check_admissible,
    check_averaging,
    endo_double,
    induced_leibniz,
    is_admissible_averaging,
    sdpl_from_admissible,
)
from .bialgebra import (
    AvgLieBialgebra,
    MatchedPairData,
    SDPLBialgebra,
    avg_manin_to_leibniz_manin,
    build_leibniz_double,
    build_sdpl_double,
    check_avg_lie_bialgebra,
    check_leibniz_coalgebra,
    check_lie_bialgebra,
    check_manin_triple,
    check_matched_pair,
    check_sdpl_bialgebra,
    check_sdpl_coalgebra,
    dualize_comult,
    dualize_mult,
    induce_sdpl_bialgebra,
    lie_double,
    manin_chain,
)
from .core import (
    ASSOCIATIVE,
    IDENTITY,
    LEIBNIZ,
    LIE,
    Algebra,
    RelationSet,
    Rep,
    TypeMatrix,
    ViolationReport,
    check_relations,
    dual_rep,
    is_representation,
    multiply,
    rep_equivalent,
    semidirect_product,
)
from .leibniz import (
    L_MATRIX,
    TYPE_A,
    TYPE_B,
    SDPLAlgebra,
    SDPLRep,
    check_leibniz_rep,
    check_sdpl,
    check_type_a,
    sdpl_from_form,
)
from .splitting import (
    SplitAlgebra,
    check_o_operator,
    check_strong,
    check_type_m_invariance,
    check_type_m_pre,
    check_type_m_rota_baxter,
    classify_o_operator,
    form_operator,
    induce_splitting,
    mults_from_M_inverse,
    splitting_from_form,
)
