"""Finitely presented groups: words, abelianization and certified Tietze scripts."""

from .presentation import (
    Presentation,
    Relator,
    TietzeError,
    abelianization_matrix,
    abelianize,
    solve_for,
    substitute,
    tietze_eliminate,
)
from .scripts import ScriptError, ScriptResult, certified_rewrite, is_target_form, verify_simplification
from .snf import SNFResult, determinant, matmul, smith_normal_form
from .words import (
    canonical_cyclic,
    commutator,
    cyclic_reduce,
    format_word,
    free_reduce,
    inverse,
    mul,
    parse_word,
    relator_template,
    same_relator,
    WordSyntaxError,
    tangency_word,
)

__all__ = [
    "Presentation", "Relator", "TietzeError", "abelianization_matrix", "abelianize", "solve_for",
    "substitute", "tietze_eliminate", "ScriptError", "ScriptResult", "certified_rewrite",
    "is_target_form", "verify_simplification", "SNFResult", "determinant", "matmul",
    "smith_normal_form", "canonical_cyclic", "commutator", "cyclic_reduce", "format_word",
    "free_reduce", "inverse", "mul", "parse_word", "relator_template", "same_relator",
    "tangency_word", "WordSyntaxError",
]
