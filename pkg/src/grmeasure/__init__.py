"""Gabriel-Roiter measures of thin quiver representations over weighted quivers."""

from .chain_core import (
    FinitePoset,
    Ordering,
    all_filtrations,
    l_star,
    lex_compare,
    max_filtrations,
    oracle_l_star,
    order_leq,
)
from .quiver_poset import (
    Arrow,
    Quiver,
    SupportClass,
    SupportQuiver,
    classify_support,
    covers_above,
    forward_closure,
    is_subobject_element,
    materialize_poset,
    minimal_elements,
    parse_quiver,
    parse_quiver_file,
    set_weight,
    support_of,
)
from .thin_rep import (
    ThinRep,
    embeds,
    gr_factor,
    gr_filtrations,
    gr_measure,
    is_indecomposable,
    iso_equal,
    length_of,
)
from .weight_synth import (
    SynthesisResult,
    Uniqueness,
    synthesize,
    synthesize_unique,
    verify_filtration,
)

__version__ = "0.1.0"

__all__ = [
    "FinitePoset",
    "Ordering",
    "all_filtrations",
    "l_star",
    "lex_compare",
    "max_filtrations",
    "oracle_l_star",
    "order_leq",
    "Arrow",
    "Quiver",
    "SupportClass",
    "SupportQuiver",
    "classify_support",
    "covers_above",
    "forward_closure",
    "is_subobject_element",
    "materialize_poset",
    "minimal_elements",
    "parse_quiver",
    "parse_quiver_file",
    "set_weight",
    "support_of",
    "ThinRep",
    "embeds",
    "gr_factor",
    "gr_filtrations",
    "gr_measure",
    "is_indecomposable",
    "iso_equal",
    "length_of",
    "SynthesisResult",
    "Uniqueness",
    "synthesize",
    "synthesize_unique",
    "verify_filtration",
]
