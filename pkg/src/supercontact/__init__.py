"""Exact Grassmann-graded Cartan calculus and super contact geometry."""

from .calculus import (
    R1N1,
    R1N2,
    Chart,
    CoordinateMap,
    VectorField,
    apply_vf,
    exterior_derivative,
    graded_commutator,
    interior_product,
    lie_derivative,
    pullback,
    susy_generators,
    susy_map,
)
from .checks import VerificationReport, VerifyConfig, verify_paper
from .components import Supermultiplet121, collect_components, delta_components, expand_superfield
from .contact import (
    OneForm,
    classify_contact_vf,
    hamiltonian_vf,
    hamiltonian_vf_closed_form,
    is_contact,
    kernel_basis,
    nondegenerate_on,
    reeb,
    standard_form,
)
from .kernel import Coefficient, Generator, Parity, SuperExpr, body, invert, left_partial, mul, parity_of, substitute, time_derivative
from .lie import N1, N2, LieAlgebraPresentation, decompose_mc, lie_bracket, maurer_cartan, presentation
from .syntax import Context, ParseError, parse_algebra, parse_chart, parse_expr, parse_map, parse_vf, print_canonical, print_vector_field

__version__ = "0.1.0"
