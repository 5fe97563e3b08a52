"""Exact symmetry-adapted bases for symmetric-group configuration spaces.

The package resolves the orbit of a particle configuration under S_n into
simultaneous integer eigenspaces of the transposition class-sum operators
C(n), ..., C(2) (lifting leftover multiplicity with state-permutation
operators), and reads exact coupling coefficients off the resulting
labeled basis.  All arithmetic is exact rational; coefficients come out
as integers under a square root, never floats.
"""

from .configs import (
    MAX_DEGREE,
    OrbitBasis,
    StateAlphabet,
    act_particle,
    act_state,
    alphabet_for,
    orbit,
    parse_ordering,
)
from .linalg import (
    NotInvariantError,
    Subspace,
    candidate_eigenvalues,
    eigenspace,
    intersect,
    kernel,
    restrict,
    rref,
)
from .operators import (
    class_operator,
    commutes,
    dump_matrix,
    load_matrix_dump,
    matrix_of_elements,
    state_operator,
)
from .perm import (
    Permutation,
    compose,
    cycle_string,
    identity,
    inverse,
    parse_cycles,
    subgroup_transpositions,
    transposition,
)
from .solver import (
    CGTable,
    InternalCheckError,
    LabelChain,
    LabeledVector,
    VerifyReport,
    block_structure_check,
    default_state_ops,
    normalize,
    resolve,
    verify_table,
)
from .young import StandardTableau, content_sum, partitions, tableau_from_chain

__version__ = "0.1.0"

__all__ = [
    "MAX_DEGREE",
    "OrbitBasis",
    "StateAlphabet",
    "act_particle",
    "act_state",
    "alphabet_for",
    "orbit",
    "parse_ordering",
    "NotInvariantError",
    "Subspace",
    "candidate_eigenvalues",
    "eigenspace",
    "intersect",
    "kernel",
    "restrict",
    "rref",
    "class_operator",
    "commutes",
    "dump_matrix",
    "load_matrix_dump",
    "matrix_of_elements",
    "state_operator",
    "Permutation",
    "compose",
    "cycle_string",
    "identity",
    "inverse",
    "parse_cycles",
    "subgroup_transpositions",
    "transposition",
    "CGTable",
    "InternalCheckError",
    "LabelChain",
    "LabeledVector",
    "VerifyReport",
    "block_structure_check",
    "default_state_ops",
    "normalize",
    "resolve",
    "verify_table",
    "StandardTableau",
    "content_sum",
    "partitions",
    "tableau_from_chain",
    "__version__",
]
