from .instantiation import (
    ClassicalArgument,
    build_classical_csaf,
    classical_arguments,
    premise_minimal_equivalence_check,
)
from .logic import PropFormula, TruthTable, consistent, entails, negate, parse_formula, render
from .subtheories import StratifiedTheory, preferred_subtheories, verify_ps_correspondence
