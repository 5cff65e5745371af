"""Exact integer PL chains, duality and intersection products on stratified pseudomanifolds."""

from .chain_algebra import (GroupMap, GroupPresentation, cap_product, cohomology_of_pair,
                            cup_product, homology_of_pair, solve_sparse)
from .complex_core import (ComplexError, SimplicialComplex, Subcomplex, barycentric_subdivision,
                           build_complex, product_triangulation, shuffle_product)
from .corpus import CORPUS_NAMES, Space, generate
from .duality import dold_duality, gm_duality, gm_duality_collapsed
from .intersection import (DiagonalContext, DomainElement, IntersectionError, NotInDomainError,
                           cup_duality_check, general_position_check, gm_cycle_product,
                           ih_product, intersection_coefficient, mu, umkehr)
from .pl_chains import PLChain, subdivide_chain, subdivide_space
from .snf import BACKEND, smith_normal_form
from .stratified import (FilteredPseudomanifold, Perversity, allowability_check,
                         intersection_homology)

__version__ = "0.1.0"

__all__ = [
    "BACKEND", "CORPUS_NAMES", "ComplexError", "DiagonalContext", "DomainElement",
    "FilteredPseudomanifold", "GroupMap", "GroupPresentation", "IntersectionError",
    "NotInDomainError", "PLChain", "Perversity", "SimplicialComplex", "Space", "Subcomplex",
    "allowability_check", "barycentric_subdivision", "build_complex", "cap_product",
    "cohomology_of_pair", "cup_duality_check", "cup_product", "dold_duality", "general_position_check",
    "generate", "gm_cycle_product", "gm_duality", "gm_duality_collapsed", "homology_of_pair",
    "ih_product", "intersection_coefficient", "intersection_homology", "mu", "product_triangulation",
    "shuffle_product", "smith_normal_form", "solve_sparse", "subdivide_chain", "subdivide_space",
    "umkehr",
]
