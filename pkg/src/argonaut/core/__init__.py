from argonaut.core.framework import (
    CONTRARY_SUFFIX,
    BipolarFramework,
    Kind,
    Rule,
    Sentence,
    mint_contraries,
)
from argonaut.core.semantics import (
    DEFAULT_ORACLE_BOUND,
    Semantics,
    attacks,
    closure,
    defends,
    derived_contraries,
    enumerate_bruteforce,
    extension_sort_key,
    is_closed,
    is_conflict_free,
    satisfies,
)
from argonaut.core.convert import ConversionResult, convert_graph, from_graph

__all__ = [
    "CONTRARY_SUFFIX",
    "BipolarFramework",
    "Kind",
    "Rule",
    "Sentence",
    "mint_contraries",
    "DEFAULT_ORACLE_BOUND",
    "Semantics",
    "attacks",
    "closure",
    "defends",
    "derived_contraries",
    "enumerate_bruteforce",
    "extension_sort_key",
    "is_closed",
    "is_conflict_free",
    "satisfies",
    "ConversionResult",
    "convert_graph",
    "from_graph",
]
