"""Exact S_n character values, tables and identification algorithms.

Partitions are passed as sequences of weakly decreasing positive ints and
returned as tuples; all values are exact Python ints.
"""

from ._core import (
    CorruptTableError,
    InvalidSymbolError,
    NotACharacterError,
    NotAClassError,
    UnidentifiableError,
    asymptotic_count,
    centralizer_order,
    character_table,
    character_value,
    class_from_xi_prefix,
    conjugate,
    degree,
    from_frobenius,
    hook_length,
    identify_character,
    identify_character_of,
    identify_character_sum,
    partition_count,
    partitions,
    play_game,
    principal_hook_data,
    product_polynomial,
    query_upper_bound,
    rim_hooks,
    set_memo_budget,
    to_frobenius,
    xi_prefix,
    xi_prefix_length,
    xi_values,
)

__all__ = [
    "CorruptTableError",
    "InvalidSymbolError",
    "NotACharacterError",
    "NotAClassError",
    "UnidentifiableError",
    "asymptotic_count",
    "centralizer_order",
    "character_table",
    "character_value",
    "class_from_xi_prefix",
    "conjugate",
    "degree",
    "from_frobenius",
    "hook_length",
    "identify_character",
    "identify_character_of",
    "identify_character_sum",
    "partition_count",
    "partitions",
    "play_game",
    "principal_hook_data",
    "product_polynomial",
    "query_upper_bound",
    "rim_hooks",
    "set_memo_budget",
    "to_frobenius",
    "xi_prefix",
    "xi_prefix_length",
    "xi_values",
]
