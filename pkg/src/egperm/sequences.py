"""Extended graph permanent sequences: assembly, canonical sign, closed forms.

The extended graph permanent of a graph G is the sequence of residues
``Perm(1_{n calV x n calE} (x) M_G) mod p`` over the admissible primes
``p = n*calV + 1``.  At primes where ``n*calE`` is odd (*variate* primes)
the residue's sign depends on the arbitrary edge orientation; the
canonical form flips all variate residues together so that the first
nonzero variate residue r satisfies ``r <= p - r``.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from .cofactor import gperm_cofactor
from .graphs import OrientedGraph, block_spec
from .numtheory import admissible_primes, mod_tables
from .permanent import DimensionCapError, gperm_direct, gperm_reduced

__all__ = [
    "EgpValue",
    "EgpSequence",
    "egp",
    "canonicalize_sign",
    "sequences_equal",
    "sequence_from_row",
    "closed_form_tree",
    "closed_form_wheel",
    "closed_form_zigzag",
]

ALGORITHMS = ("direct", "reduced", "cofactor", "auto")


@dataclass(frozen=True)
class EgpValue:
    prime: int
    n: int
    residue: int
    variate: bool


@dataclass(frozen=True)
class EgpSequence:
    graph_id: str
    calV: int
    calE: int
    values: tuple[EgpValue, ...]
    canonicalized: bool = False

    def primes(self) -> list[int]:
        return [v.prime for v in self.values]

    def residues(self) -> list[int]:
        return [v.residue for v in self.values]


def _variate(n: int, calE: int) -> bool:
    return (n * calE) % 2 == 1


def _one_prime(g: OrientedGraph, p: int, algorithm: str) -> int:
    if algorithm == "direct":
        return gperm_direct(g, p)
    if algorithm == "reduced":
        return gperm_reduced(g, p)
    if algorithm == "cofactor":
        return gperm_cofactor(g, p)
    # auto: the direct block Ryser wins only on tiny lattices; otherwise
    # the cofactor calculus is the cheapest on every catalog graph
    spec = block_spec(g)
    n = (p - 1) // spec.calV
    if (n * spec.calE + 1) ** g.edge_count <= 65536:
        try:
            return gperm_direct(g, p)
        except DimensionCapError:
            pass
    return gperm_cofactor(g, p)


def egp(g: OrientedGraph, bound: int, algorithm: str = "auto",
        graph_id: str = "", merge_components: bool = False) -> EgpSequence:
    """Uncanonicalized EGP sequence under the graph's stored orientation.

    A connected component without the special vertex forces every
    residue to zero; with ``merge_components`` the components are instead
    glued by identifying one vertex of each with the special vertex,
    which matches the cut-vertex interpretation of disconnectedness.
    """
    if algorithm not in ALGORITHMS:
        raise ValueError(f"unknown algorithm {algorithm!r}")
    spec = block_spec(g)
    primes = admissible_primes(spec.calV, bound)
    if not primes:
        raise ValueError(f"no admissible prime <= {bound} for calV={spec.calV}")
    if not g.is_connected():
        if merge_components:
            g = _merge_components(g)
        else:
            values = tuple(
                EgpValue(p, (p - 1) // spec.calV, 0,
                         _variate((p - 1) // spec.calV, spec.calE))
                for p in primes)
            return EgpSequence(graph_id, spec.calV, spec.calE, values)
    values = []
    for p in primes:
        n = (p - 1) // spec.calV
        residue = _one_prime(g, p, algorithm)
        values.append(EgpValue(p, n, residue, _variate(n, spec.calE)))
    return EgpSequence(graph_id, spec.calV, spec.calE, tuple(values))


def _merge_components(g: OrientedGraph) -> OrientedGraph:
    """Identify one vertex per component with the special vertex."""
    comps = g.components()
    rep = {}
    for comp in comps:
        if g.special_vertex in comp:
            continue
        anchor = min(comp)
        rep[anchor] = g.special_vertex
    edges = tuple((rep.get(t, t), rep.get(h, h)) for t, h in g.edges)
    # dimensions change: the identified vertices disappear
    used = sorted({v for e in edges for v in e} | {g.special_vertex})
    remap = {v: i for i, v in enumerate(used)}
    edges = tuple((remap[t], remap[h]) for t, h in edges)
    return OrientedGraph(len(used), edges, remap[g.special_vertex])


def canonicalize_sign(s: EgpSequence) -> EgpSequence:
    """Flip all variate residues if the first nonzero one exceeds p - r."""
    flip = False
    for v in s.values:
        if v.variate and v.residue:
            flip = v.residue > v.prime - v.residue
            break
    if not flip:
        return replace(s, canonicalized=True)
    values = tuple(
        replace(v, residue=(v.prime - v.residue) % v.prime) if v.variate else v
        for v in s.values)
    return EgpSequence(s.graph_id, s.calV, s.calE, values, canonicalized=True)


def sequences_equal(a: EgpSequence, b: EgpSequence) -> bool:
    """Canonical equality at every shared prime (same prime family required)."""
    if a.calV != b.calV:
        raise ValueError("sequences live over different prime families")
    ca, cb = canonicalize_sign(a), canonicalize_sign(b)
    da = {v.prime: v.residue for v in ca.values}
    db = {v.prime: v.residue for v in cb.values}
    shared = sorted(set(da) & set(db))
    if not shared:
        raise ValueError("sequences share no primes")
    return all(da[p] == db[p] for p in shared)


def sequence_from_row(graph_id: str, calV: int, calE: int,
                      row: dict[int, int]) -> EgpSequence:
    """Wrap a stored prime -> residue row as a canonicalized sequence."""
    values = []
    for p in sorted(row):
        n = (p - 1) // calV
        values.append(EgpValue(p, n, row[p] % p, _variate(n, calE)))
    return EgpSequence(graph_id, calV, calE, tuple(values), canonicalized=True)


# ---------------------------------------------------------------------------
# Closed forms for families
# ---------------------------------------------------------------------------

def closed_form_tree(vertex_count: int, p: int) -> int:
    """(-1)^(|V|-1) mod p, for any prime p."""
    return (-1) ** (vertex_count - 1) % p


def closed_form_wheel(w: int, p: int) -> int:
    """(-1)^w sum_k (-1)^{kw} C(n,k)^w mod p, p = 2n+1 (orientation-normal form)."""
    if p % 2 == 0 or p < 3:
        raise ValueError("wheel closed form needs an odd prime")
    if w < 3:
        raise ValueError("wheel needs rim length >= 3")
    n = (p - 1) // 2
    tb = mod_tables(p)
    total = 0
    for k in range(n + 1):
        term = pow(tb.binom(n, k), w, p)
        if (k * w) % 2:
            term = p - term
        total = (total + term) % p
    if w % 2:
        total = (-total) % p
    return total


def closed_form_zigzag(m: int, p: int) -> int:
    """Zig-zag closed form at p = 2n+1:
    (-1)^(m-1) * sum over k_1+..+k_{m-1}=n of
    prod C(n,k_i) * prod_{i<=m-3} C(n - k_{i+1}, k_1+..+k_i)."""
    if p % 2 == 0 or p < 3:
        raise ValueError("zig-zag closed form needs an odd prime")
    if m < 4:
        raise ValueError("zig-zag needs >= 4 vertices")
    n = (p - 1) // 2
    tb = mod_tables(p)
    total = 0

    def rec(i: int, remaining: int, prefix_sum: int, acc: int):
        nonlocal total
        if acc == 0:
            return
        if i == m - 2:
            k_last = remaining
            total = (total + acc * tb.binom(n, k_last)) % p
            return
        for k in range(remaining + 1):
            term = acc * tb.binom(n, k) % p
            if term and 1 <= i <= m - 3:
                # the chain binomial uses k_{i+1} with the sum of k_1..k_i
                term = term * tb.binom(n - k, prefix_sum) % p
            if term:
                rec(i + 1, remaining - k, prefix_sum + k, term)

    rec(0, n, 0, 1)
    if (m - 1) % 2:
        total = (-total) % p
    return total % p
