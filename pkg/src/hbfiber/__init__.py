"""Hilbert-Burch data, saturated fiber multiplicities and j-multiplicities
of equigenerated height-two perfect ideals, with Groebner-basis oracles."""

from .errors import (
    HBFiberError,
    HypothesisFailure,
    InputError,
    InternalAnomaly,
    MinorMismatch,
    NotEquigenerated,
    NotHeightTwo,
    ParseError,
    TooFewSyzygies,
    UnknownVariable,
)
from .groebner import (
    GroebnerBasis,
    Ideal,
    buchberger,
    eliminate,
    hilbert_function,
    hilbert_series,
    intersect,
    quotient,
    saturate,
)
from .multiplicity import (
    MuVector,
    elementary_symmetric,
    j_multiplicity_formula,
    lemma_identity,
    m_coefficient,
    multiplicity_from_m,
    multiplicity_report,
)
from .oracles import (
    generic_fiber_degree,
    image_ideal,
    j_mult_sample,
    map_degree_report,
    saturated_fiber_sample,
)
from .parser import parse_ideal_file, parse_polynomial
from .poly import GREVLEX, LEX, CoefficientField, Monomial, MonomialOrder, Polynomial, PolynomialRing
from .resolution import g_condition, hilbert_burch, minors, syzygy_matrix

__version__ = "0.1.0"
