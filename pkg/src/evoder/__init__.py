"""Derivation spaces of evolution algebras associated to graphs.

Two independent routes are provided: the exact kernel of the derivation
equations (:func:`oracle_derivations`) and a direct construction from the
twin classes of size at least three (:func:`closed_form_derivations`).
"""

from .algebra import (DerivationBasis, StructureMatrix, algebra_from_graph, build_derivation_system,
                      derivation_dimension, evolution_product, oracle_derivations)
from .closed_form import ClosedFormBasis, block_basis, closed_form_derivations, closed_form_dimension
from .errors import (ConnectivityError, DimensionMismatch, EvoderError, InputError, InternalInconsistency,
                     InvalidClass, InvalidFamilyParams, LabelOutOfRange, LoopEdge, MalformedInput,
                     SizeTooSmall)
from .families import FamilySpec, generate_family
from .graph import (Gamma3, Graph, TwinPartition, VertexPermutation, block_relabeling, gamma3,
                    is_connected, neighbors, parse_graph, twin_partition)
from .linalg import RationalMatrix, mat_mul, null_space, rank, rref
from .properties import (PropertyReport, check_cor32, check_lemma36, check_leibniz, check_prop31,
                         check_zero_when_gamma3_empty)

__version__ = "0.1.0"
