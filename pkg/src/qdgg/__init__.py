"""Exact computations on pairs of graded graphs satisfying D'U - qUD' = rI."""

from .qpoly import (
    ONE,
    Q,
    QPoly,
    QSeries,
    ZERO,
    parse_qpoly,
    q_derivative,
    q_factorial,
    q_integer,
    q_power,
)
from .graded_graph import (
    LinearCombination,
    QDGGPair,
    VertexRef,
    WeightedGradedGraph,
    brute_force_path_gf,
    check_mixed_all,
    check_path_product_identity,
    check_specialization,
    mixed_path_gf,
    pair_from_dict,
    pair_from_json,
    pair_to_dict,
    pair_to_json,
    pairing,
    path_gf,
    path_gf_table,
    path_weight,
    specialize,
    verify_qweyl,
)
from .reflection import build_by_reflection, reflect_once, seed_pair
from .fibonacci import (
    YFTableau,
    check_path_tableau_identity,
    check_reflection_agreement,
    enumerate_yf_tableaux,
    fib_graphs,
    fib_words,
    snakeshape,
)
from .permutations import check_inversion_identities, inversions, perm_graphs
from .tableaux import (
    check_insertion_path_weights,
    insert_up,
    remove_top,
    rs,
    rs_inverse,
    tab_graphs,
)
from .trees import (
    check_extension_path_identity,
    graft,
    linear_extensions,
    perm_of,
    remove_leftmost,
    sg,
    splice,
    tree_graphs,
)
from .qweyl import (
    NormalForm,
    d_power_rule,
    d_series_rule,
    evaluate_normal_form,
    evaluate_on_graph,
    normal_order,
)

__version__ = "0.1.0"
