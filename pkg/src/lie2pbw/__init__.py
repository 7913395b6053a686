"""Enveloping algebras of pairs of compatible Lie brackets.

Exact noncommutative polynomial arithmetic, Gröbner–Shirshov reduction and
completion, the PBW word basis of the abelian case and its growth rate.
"""
from .free_algebra import Alphabet, NcPolynomial, UnorderedGeneratorError, compare_words
from .rewriting import RelationSet, complete, normal_form, reduce, verify_gsb
from .lie2 import (LiePair, build_presentation_original, gsb_relations_g0,
                   transform_to_fF, validate_lie_pair)
from .basis import enumerate_irreducible, enumerate_pattern, is_basis_word
from .counting import count_series, growth_rate

__version__ = "0.1.0"
