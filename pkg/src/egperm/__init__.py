"""Extended graph permanent: residue sequences of block-incidence permanents.

For a connected graph G with special vertex v', let M be the reduced
signed incidence matrix (row of v' deleted), L = lcm(|V|-1, |E|),
calV = L/(|V|-1), calE = L/|E|.  The extended graph permanent is the
sequence ``Perm(1_{n calV x n calE} (x) M) mod p`` over the primes
``p = n*calV + 1``.  It is invariant under special-vertex choice,
completion/decompletion, the Schnetz twist, and planar duality.
"""

from .graphs import OrientedGraph, build_graph, decomplete, parse_graph
from .sequences import EgpSequence, canonicalize_sign, egp, sequences_equal

__all__ = [
    "OrientedGraph",
    "build_graph",
    "decomplete",
    "parse_graph",
    "EgpSequence",
    "egp",
    "canonicalize_sign",
    "sequences_equal",
]

__version__ = "0.1.0"
