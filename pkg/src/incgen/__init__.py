"""Generating tuples of matrix incidence rings over finite posets.

Quick tour::

    >>> from incgen import standard_poset, parse_ring, count_gen
    >>> rep = count_gen(standard_poset("chain", 2), parse_ring("GF(2)"), 2)
    >>> rep.count, rep.probability
    (24, Fraction(3, 8))
"""

__version__ = "0.1.0"

from .counting import (
    CountReport,
    count_by_enumeration,
    count_gen,
    count_gen_simple,
    probability_closed_form,
    radical_data,
)
from .generation import GenReport, check_criterion_simple, check_generates, mgen
from .incidence import IncMatrix, generates_bruteforce, scalar_matrices, subring_closure
from .poset import Poset, cover_data, parse_poset, standard_poset, validate_relation
from .realcomplex import check_criterion_field, monte_carlo, sample_sphere
from .rings import LocalZ, MatrixRing, ProductRing, parse_ring

__all__ = [
    "CountReport",
    "GenReport",
    "IncMatrix",
    "LocalZ",
    "MatrixRing",
    "Poset",
    "ProductRing",
    "check_criterion_field",
    "check_criterion_simple",
    "check_generates",
    "count_by_enumeration",
    "count_gen",
    "count_gen_simple",
    "cover_data",
    "generates_bruteforce",
    "mgen",
    "monte_carlo",
    "parse_poset",
    "parse_ring",
    "probability_closed_form",
    "radical_data",
    "sample_sphere",
    "scalar_matrices",
    "standard_poset",
    "subring_closure",
    "validate_relation",
]
