"""Finitely L-presented groups: nilpotent quotients, coset enumeration, low-index subgroups."""

from ._lpgroup import (
    LPresentation,
    ParseError,
    abelian_invariants,
    derived_series,
    dwyer_quotients,
    gamma,
    grigorchuk,
    low_index_subgroups,
    lower_central_sections,
    maximal_nilpotent_quotient,
    parse,
    subgroup_index,
)

__all__ = [
    "LPresentation",
    "ParseError",
    "abelian_invariants",
    "derived_series",
    "dwyer_quotients",
    "gamma",
    "grigorchuk",
    "low_index_subgroups",
    "lower_central_sections",
    "maximal_nilpotent_quotient",
    "parse",
    "subgroup_index",
]
