"""Multi-shift de Bruijn sequences: generation, verification, counting and
the free-monoid Frobenius construction built on them."""

from .counting import Branch, CountResult, count_formula, count_recursion, enumerate_all
from .errors import (ConstructionError, DomainError, EnumerationOverflow, GuardExceeded,
                     MultishiftError, PreconditionError)
from .frobenius import (FrobeniusInstance, LongestResult, RepresentabilityAutomaton,
                        build_instance, frobenius_number, is_representable,
                        longest_nonrepresentable, theorem_language)
from .generate import (Algorithm, Preference, gen_block, gen_greedy, gen_interleave,
                       gen_multiple, gen_ordinary, generate, rotate_zero_prefix)
from .graphs import (WordGraph, arborescence_count, arc_graph, build_word_graph,
                     euler_count_best, euler_count_brute, euler_from_sequence,
                     sequence_from_euler)
from .verify import VerifyReport, check_wrap, is_multishift_db
from .words import DbParams, Word, factor, modulo_factors, rank, render, unrank

__version__ = "0.1.0"
