"""Dressians of matroids computed as tropical prevarieties."""

__version__ = "0.1.0"

from .errors import DressianError, InputError
from .matroid import Matroid, catalog, connected_components, direct_sum, parallel_extension, uniform
from .plucker import generate_relations
from .polynomial import TropicalPolynomial, dedupe
from .prevariety import PrevarietyComplex, dressian, hypersurface_cones, intersect_prevariety, membership
from .reduction import ReducedSystem, lift_point, reduce, substitute
from .subdivision import cells_of_dressian_cell, initial_matroid, is_matroid_subdivision, regular_subdivision
from .tutte import hom_dim, phi_rank, rigidity_certificate, tutte_relations

__all__ = [
    "DressianError", "InputError", "Matroid", "PrevarietyComplex", "ReducedSystem", "TropicalPolynomial",
    "catalog", "cells_of_dressian_cell", "connected_components", "dedupe", "direct_sum", "dressian",
    "generate_relations", "hom_dim", "hypersurface_cones", "initial_matroid", "intersect_prevariety",
    "is_matroid_subdivision", "lift_point", "membership", "parallel_extension", "phi_rank", "reduce",
    "regular_subdivision", "rigidity_certificate", "substitute", "tutte_relations", "uniform",
]
