"""Circulant, negacyclic and constant-diagonal weighing matrices.

A weighing matrix ``W(n, k)`` is an ``n x n`` matrix over {-1, 0, +1} with
``A A^T = k I``. Matrices with constant diagonals (called Hankel here,
Toeplitz elsewhere) turn out to be exactly the circulant and negacyclic
weighing matrices; this package builds, verifies, classifies and searches
them.
"""
from .classify import (Classification, ClassificationError, MagnitudeMismatch, MixedSigns,
                       NotToeplitz, NotWeighing, WrapSignProfile, classify_toeplitz_weighing,
                       wrap_sign_profile)
from .construct import ConferenceWitness, NotOddPrimePower, SearchExhausted, negacyclic_conference
from .core import (FormatError, RowSpec, TernaryMatrix, ToeplitzSpec, VerificationReport,
                   expand_circulant, expand_negacyclic, expand_toeplitz, format_matrix, gram_check,
                   is_circulant, is_constant_diagonal, is_constant_skew_diagonal, is_negacyclic,
                   negaperiodic_autocorrelation, parse_matrix, periodic_autocorrelation,
                   read_matrix, reverse_rows, shift_matrix_Y, write_matrix)
from .numbertheory import Factorization, factor, is_odd_prime_power, is_prime, is_prime_power
from .search import (CapExceeded, InfeasibleParameters, SearchOptions, SearchResult, canonicalize,
                     enumerate_toeplitz_weighing, orbit, search_circulant, search_negacyclic,
                     search_rows)
from .survey import SurveyRow, conference_survey

__version__ = "0.1.0"
