"""Exact arithmetic for classical and semigroup-generalized Markov numbers.

The package computes matching counts of wug-snake graphs four ways
(direct enumeration, permanents, continuant determinants, and
homogeneous determinant forms) and cross-validates them, alongside the
classical Markov/Farey/Cohn machinery, subtractive algorithms, and the
lattice-geometry layer.
"""

from .errors import MarkovNumError
from .exactcore import IntMatrix, QuadraticSurd, det_exact, permanent
from .contfrac import (
    CompanionSpec,
    ContinuedFraction,
    PLLS,
    cf_eval,
    companion,
    companion2,
    continuant_pq,
    is_reduced_2,
    plls_decompose,
    recurrence_system,
)
from .wugsnake import (
    Body,
    Head,
    WugSnake,
    body_for_matrix,
    matching_count_bruteforce,
    matching_count_det,
    matching_sequence,
    simple_head,
    snake_for,
    wug_determinant,
)
from .classicmarkov import (
    christoffel,
    cohn_matrix,
    cohn_tree,
    cohn_word,
    fricke_check,
    frobenius_index,
    markov_form,
    markov_numbers,
    markov_tree,
    mu_domino,
)
from .semigroup import (
    MDForm,
    aa_bb_family,
    algebraic_markov,
    farey_set_2,
    farey_set_3,
    geometric_markov_search,
    is_markov_reduced,
    markov_from_plls,
    md_form,
    md_form_eval,
    perron_minimum,
)
from .subtractive import MCFTrace, reconstruct, run_mcf, subtract_step
from .lattice import (
    Embedding,
    SlowSequence,
    cubes_for_vector,
    embed2,
    embed3,
    model531_count,
    representative,
    snake_operator,
    tangent,
    tangent_fraction,
    wug_sum,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
