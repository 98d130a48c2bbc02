"""Structured argumentation with preferences.

Typical use::

    from aspic import parse_theory, build_saf, enumerate_extensions

    theory = parse_theory(text)
    saf = build_saf(theory, link="last", setcomp="eli")
    exts = enumerate_extensions(saf.to_abstract(), "preferred", "att")
"""

from .arguments import (
    Argument,
    BuildLimits,
    build_arguments,
    is_c_consistent,
    is_strict_continuation,
    max_fallible_subargs,
    premise_minimal_filter,
)
from .attacks import Attack, AttackKind, attack_kind_stats, compute_attacks
from .errors import (
    AspicError,
    AtomBudget,
    BudgetExceeded,
    ClaimsEmpty,
    MissingContradictory,
    OracleBudget,
    TheoryError,
    UnknownElement,
)
from .framework import Defeat, StructuredAF, build_saf, compute_defeats, strictly_defeats
from .language import (
    ArgumentationTheory,
    ContrarinessMap,
    Formula,
    KnowledgeBase,
    Rule,
    RuleKind,
    check_well_defined,
    closure_under_strict,
    is_directly_consistent,
    is_indirectly_consistent,
    transpose_rules,
)
from .preferences import (
    ArgOrdering,
    LinkPrinciple,
    Preorder,
    SetComparison,
    arg_leq,
    arg_strictly_preferred,
    check_reasonable_inducing,
    check_reasonable_sample,
    set_compare,
)
from .semantics import (
    AbstractAF,
    ExtensionSet,
    compare_att_def,
    enumerate_extensions,
    grounded_extension,
    is_acceptable,
    justified_conclusions,
)
from .dsl import ParseError, format_theory, parse_theory

__version__ = "0.1.0"
