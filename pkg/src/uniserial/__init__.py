"""Primitive elements of finite extensions and single generators of commutative
matrix algebras acting uniserially, in exact arithmetic."""

__version__ = "0.1.0"

from .errors import *  # noqa: F401,F403
from .fields import (
    ExtensionField,
    FieldElement,
    PrimeField,
    RationalFunctionField,
    Rationals,
    element_degree,
    frobenius,
    primitive_root,
    pth_root,
)
from .poly import (
    GF,
    Poly,
    find_root,
    is_irreducible,
    is_squarefree,
    poly_gcd,
    poly_lcm,
    prime_power_shape,
    random_irreducible,
    roots_in_field,
    squarefree_part,
)
from .linalg import (
    Mat,
    companion,
    cyclic_vector,
    jordan_block,
    jordan_chevalley,
    kernel,
    min_poly_matrix,
    rank,
    solve,
    to_companion_basis,
)
from .modstruct import (
    CommAlgebra,
    algebra_closure,
    is_field,
    is_irreducible_module,
    is_uniserial,
    nilradical,
    residue_degree,
    socle,
    socle_chain,
)
from .primelt import (
    degree_profile,
    find_primitive_combination,
    find_primitive_pair,
    sweep_alpha_statistics,
)
from .cyclicgen import analyze, find_combination_generator, find_single_generator
from .constructions import build_menti, build_pedo, build_unomas
