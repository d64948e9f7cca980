"""Graph families, the edge-subset power-sum oracle, and closed-form
e-expansions.

The oracle expands the chromatic symmetric function of any small simple
graph over all edge subsets, producing exact power-sum coefficients.  The
closed forms assemble composition-indexed e-expansions for paths, cycles,
tadpoles, cycle-chords, three-path (theta) graphs and clocks; converting a
grouped closed form to the p-basis and comparing with the oracle is the
master correctness check for everything in this package.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Tuple

from .compositions import Composition, Partition, weight_positive_compositions
from .coefficients import coeff_c, coeff_c_prime, coeff_D, delta
from .errors import ResourceLimitError
from .symfunc import Basis, BasisVector

# Hard API bound on oracle size; each extra edge doubles the subset count.
MAX_ORACLE_EDGES = 30


@dataclass(frozen=True)
class Graph:
    """A simple undirected graph on vertices 0 .. vertex_count-1."""

    vertex_count: int
    edges: Tuple[Tuple[int, int], ...]

    def __init__(self, vertex_count: int, edges: Iterable[Tuple[int, int]]):
        if vertex_count < 1:
            raise ValueError(f"vertex count must be >= 1, got {vertex_count}")
        canon = []
        seen = set()
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u} is not allowed")
            if not (0 <= u < vertex_count and 0 <= v < vertex_count):
                raise ValueError(f"edge ({u}, {v}) out of range")
            pair = (u, v) if u < v else (v, u)
            if pair in seen:
                raise ValueError(f"duplicate edge {pair}")
            seen.add(pair)
            canon.append(pair)
        object.__setattr__(self, "vertex_count", vertex_count)
        object.__setattr__(self, "edges", tuple(canon))

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        pair = (u, v) if u < v else (v, u)
        return pair in self.edges

    def with_edges(self, extra: Iterable[Tuple[int, int]]) -> "Graph":
        return Graph(self.vertex_count, list(self.edges) + list(extra))

    def to_json_dict(self) -> dict:
        return {"n": self.vertex_count, "edges": [list(e) for e in self.edges]}

    @classmethod
    def from_json_dict(cls, data: dict) -> "Graph":
        return cls(int(data["n"]), [tuple(e) for e in data["edges"]])


def build_path(n: int) -> Graph:
    """Path on n vertices."""
    if n < 1:
        raise ValueError(f"path needs n >= 1 vertices, got {n}")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def build_cycle(n: int) -> Graph:
    """Cycle on n vertices."""
    if n < 3:
        raise ValueError(f"cycle needs n >= 3 vertices, got {n}")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def build_tadpole(a: int, l: int) -> Graph:
    """Cycle of length a with a pendant path of length l attached at vertex 0.

    a + l vertices and a + l edges; l = 0 degenerates to the plain cycle.
    """
    if a < 3:
        raise ValueError(f"tadpole cycle length must be >= 3, got {a}")
    if l < 0:
        raise ValueError(f"tail length must be >= 0, got {l}")
    edges = [(i, (i + 1) % a) for i in range(a)]
    prev = 0
    for i in range(l):
        edges.append((prev, a + i))
        prev = a + i
    return Graph(a + l, edges)


def _path_edges(u: int, v: int, length: int, first_interior: int) -> Tuple[list, int]:
    # edges of a u-v path with the given number of edges, allocating interior
    # vertices from first_interior upward; returns (edges, next free vertex)
    if length == 1:
        return [(u, v)], first_interior
    edges = []
    prev = u
    cursor = first_interior
    for _ in range(length - 1):
        edges.append((prev, cursor))
        prev = cursor
        cursor += 1
    edges.append((prev, v))
    return edges, cursor


def build_theta(a: int, b: int, c: int) -> Graph:
    """Two vertices joined by internally disjoint paths of lengths a, b, c.

    Requires a >= b >= c >= 1 with b >= 2 (two length-1 paths would be a
    multigraph).  Vertices: hub 0, hub 1, then the interiors of the a-, b-
    and c-paths in order; n = a + b + c - 1 vertices and n + 1 edges.
    """
    if not (a >= b >= c >= 1):
        raise ValueError(f"theta lengths must satisfy a >= b >= c >= 1, got {(a, b, c)}")
    if b < 2:
        raise ValueError(f"at most one path may have length 1, got {(a, b, c)}")
    edges: List[Tuple[int, int]] = []
    cursor = 2
    for length in (a, b, c):
        new_edges, cursor = _path_edges(0, 1, length, cursor)
        edges.extend(new_edges)
    return Graph(a + b + c - 1, edges)


def build_cycle_chord(a: int, b: int) -> Graph:
    """Two cycles sharing an edge: hubs joined by a chord and by paths of
    lengths a and b.  Same graph as a theta with one length-1 path."""
    if a < 2 or b < 2:
        raise ValueError(f"cycle-chord needs a, b >= 2, got {(a, b)}")
    edges: List[Tuple[int, int]] = [(0, 1)]
    cursor = 2
    for length in (a, b):
        new_edges, cursor = _path_edges(0, 1, length, cursor)
        edges.extend(new_edges)
    return Graph(a + b, edges)


def build_clock(a: int, b: int) -> Graph:
    """The theta graph whose shortest path has length exactly 2."""
    if not (a >= b >= 2):
        raise ValueError(f"clock needs a >= b >= 2, got {(a, b)}")
    return build_theta(a, b, 2)


def csf_pbasis(graph: Graph, max_edges: int = MAX_ORACLE_EDGES) -> BasisVector:
    """Chromatic symmetric function in the power-sum basis.

    Sums (-1)^|S| p_{lambda(S)} over all edge subsets S, where lambda(S) is
    the partition of connected-component sizes of (V, S).  Components are
    tracked by a size-ranked union-find that is unwound on backtrack, so
    each subset costs amortized near-constant work on top of the leaf
    bookkeeping.  Cost is Theta(2^|E|): guarded by ``max_edges``.
    """
    m = graph.edge_count
    if m > max_edges:
        raise ResourceLimitError(
            f"oracle budget exceeded: {m} edges > limit {max_edges}"
        )
    n = graph.vertex_count
    parent = list(range(n))
    size = [1] * n
    edges = graph.edges
    acc: Dict[tuple, int] = {}

    def find(x: int) -> int:
        while parent[x] != x:
            x = parent[x]
        return x

    def recurse(i: int, sign: int) -> None:
        if i == m:
            lam = sorted(
                (size[v] for v in range(n) if parent[v] == v), reverse=True
            )
            key = tuple(lam)
            acc[key] = acc.get(key, 0) + sign
            return
        recurse(i + 1, sign)
        u, v = edges[i]
        ru, rv = find(u), find(v)
        if ru == rv:
            recurse(i + 1, -sign)
        else:
            if size[ru] < size[rv]:
                ru, rv = rv, ru
            parent[rv] = ru
            size[ru] += size[rv]
            recurse(i + 1, -sign)
            size[ru] -= size[rv]
            parent[rv] = rv

    old_limit = sys.getrecursionlimit()
    sys.setrecursionlimit(max(old_limit, m + 64))
    try:
        recurse(0, 1)
    finally:
        sys.setrecursionlimit(old_limit)
    return BasisVector(
        Basis.P, n, {Partition(key): Fraction(c) for key, c in acc.items() if c}
    )


@dataclass
class EExpansion:
    """A composition-indexed expansion sum(coeff_I * w_I * e_I).

    ``entries`` maps each composition to its (coefficient, weight) pair;
    compositions whose product contributes nothing are omitted.
    """

    degree: int
    entries: Dict[Composition, Tuple[int, int]] = field(default_factory=dict)

    def add_term(self, I: Composition, coeff: int) -> None:
        if I.modulus != self.degree:
            raise ValueError(
                f"composition {I} has modulus {I.modulus}, expected {self.degree}"
            )
        if coeff:
            self.entries[I] = (coeff, I.weight)

    def grouped_by_rho(self) -> BasisVector:
        """Collect coeff * weight onto partitions, as an e-basis vector."""
        acc: Dict[Partition, int] = {}
        for I, (coeff, weight) in self.entries.items():
            lam = I.rho()
            acc[lam] = acc.get(lam, 0) + coeff * weight
        return BasisVector(Basis.E, self.degree, acc)


def _assemble(n: int, coeff_fn) -> EExpansion:
    expansion = EExpansion(n)
    for I in weight_positive_compositions(n):
        expansion.add_term(I, coeff_fn(I))
    return expansion


def closed_form_path(n: int) -> EExpansion:
    """Every positive-weight composition contributes with coefficient 1."""
    if n < 1:
        raise ValueError(f"path expansion needs n >= 1, got {n}")
    return _assemble(n, lambda I: 1)


def closed_form_cycle(n: int) -> EExpansion:
    """Coefficient i_1 - 1."""
    if n < 3:
        raise ValueError(f"cycle expansion needs n >= 3, got {n}")
    return _assemble(n, lambda I: I.parts[0] - 1)


def closed_form_tadpole(a: int, l: int) -> EExpansion:
    """Coefficient theta_plus(I, l + 1) for the cycle-a, tail-l tadpole.

    The formula degrades gracefully at the ends of the tail range: l = 0
    reproduces the cycle coefficients and l = n - 2 the path coefficients,
    so a = 2 is accepted here even though no simple graph exists for it.
    """
    if a < 2:
        raise ValueError(f"tadpole expansion needs cycle length >= 2, got {a}")
    if l < 0:
        raise ValueError(f"tail length must be >= 0, got {l}")
    n = a + l
    return _assemble(n, lambda I: I.theta_plus(l + 1))


def closed_form_cycle_chord(a: int, b: int, form: str = "delta") -> EExpansion:
    """Cycle-chord expansion, in either of its two equivalent displays.

    ``form="delta"`` uses the kernel delta(I, b); ``form="theta-sum"`` uses
    sum_{i=1..b} theta_plus(I, i) - sum_{i=1..b-1} theta_minus(reversed I, i).
    """
    if a < 2 or b < 2:
        raise ValueError(f"cycle-chord expansion needs a, b >= 2, got {(a, b)}")
    n = a + b
    if form == "delta":
        return _assemble(n, lambda I: delta(I, b))
    if form == "theta-sum":

        def coeff(I: Composition) -> int:
            rev = I.reversed()
            total = 0
            for i in range(1, b + 1):
                total += I.theta_plus(i)
            for i in range(1, b):
                total -= rev.theta_minus(i)
            return total

        return _assemble(n, coeff)
    raise ValueError(f"unknown cycle-chord form {form!r}")


def closed_form_theta(a: int, b: int, c: int, variant: str = "c") -> EExpansion:
    """Three-path expansion with coefficients c_I or the phi-twisted c'_I."""
    if variant == "c":
        coeff_fn = lambda I: coeff_c(I, a, b, c)
    elif variant == "c-prime":
        coeff_fn = lambda I: coeff_c_prime(I, a, b, c)
    else:
        raise ValueError(f"unknown theta variant {variant!r}")
    if not (a >= b >= c >= 1) or b < 2:
        raise ValueError(
            f"theta expansion needs a >= b >= c >= 1 with b >= 2, got {(a, b, c)}"
        )
    return _assemble(a + b + c - 1, coeff_fn)


def closed_form_clock(a: int, b: int) -> EExpansion:
    """Clock expansion with coefficients D_I."""
    if not (a >= b >= 2):
        raise ValueError(f"clock expansion needs a >= b >= 2, got {(a, b)}")
    return _assemble(a + b + 1, lambda I: coeff_D(I, a, b))


FAMILIES = ("path", "cycle", "tadpole", "cycle-chord", "theta", "clock")

# family -> required integer parameters, in CLI order
FAMILY_PARAMS = {
    "path": ("n",),
    "cycle": ("n",),
    "tadpole": ("a", "l"),
    "cycle-chord": ("a", "b"),
    "theta": ("a", "b", "c"),
    "clock": ("a", "b"),
}


def _family_args(family: str, params: dict) -> tuple:
    if family not in FAMILY_PARAMS:
        raise ValueError(f"unknown family {family!r}; expected one of {FAMILIES}")
    values = []
    for name in FAMILY_PARAMS[family]:
        if params.get(name) is None:
            raise ValueError(f"family {family!r} requires parameter --{name}")
        values.append(int(params[name]))
    return tuple(values)


def expansion_closed_form(family: str, **params) -> EExpansion:
    """Dispatch to the closed form for a family given its parameters."""
    args = _family_args(family, params)
    if family == "path":
        return closed_form_path(*args)
    if family == "cycle":
        return closed_form_cycle(*args)
    if family == "tadpole":
        return closed_form_tadpole(*args)
    if family == "cycle-chord":
        return closed_form_cycle_chord(*args, form=params.get("form", "delta"))
    if family == "theta":
        return closed_form_theta(*args, variant=params.get("variant", "c"))
    return closed_form_clock(*args)


def build_family_graph(family: str, **params) -> Graph:
    """Construct the graph for a family given its parameters."""
    args = _family_args(family, params)
    builder = {
        "path": build_path,
        "cycle": build_cycle,
        "tadpole": build_tadpole,
        "cycle-chord": build_cycle_chord,
        "theta": build_theta,
        "clock": build_clock,
    }[family]
    return builder(*args)


def family_degree(family: str, **params) -> int:
    """Degree (vertex count) of the family instance, for budget checks."""
    args = _family_args(family, params)
    if family in ("path", "cycle"):
        return args[0]
    if family in ("tadpole", "cycle-chord"):
        return args[0] + args[1]
    if family == "theta":
        return args[0] + args[1] + args[2] - 1
    return args[0] + args[1] + 1


def verify_triple_deletion(graph: Graph, triple: Tuple[int, int, int]) -> bool:
    """Check the two deletion identities over a stable triple of vertices.

    ``triple`` = (t1, t2, t3) must be pairwise non-adjacent in ``graph``.
    With e_j the edge joining the two vertices other than t_j, and G_S the
    graph plus the edges indexed by S, the identities are

        X(G_12)  = X(G_1)  + X(G_23) - X(G_3)
        X(G_123) = X(G_13) + X(G_23) - X(G_3)

    computed exactly via the oracle.  Returns True when both hold.
    """
    t1, t2, t3 = triple
    if len({t1, t2, t3}) != 3:
        raise ValueError(f"triple {triple} must contain three distinct vertices")
    for t in triple:
        if not (0 <= t < graph.vertex_count):
            raise ValueError(f"vertex {t} out of range")
    for u, v in ((t1, t2), (t1, t3), (t2, t3)):
        if graph.has_edge(u, v):
            raise ValueError(
                f"triple {triple} is not stable: edge ({u}, {v}) present"
            )
    optional = {1: (t2, t3), 2: (t1, t3), 3: (t1, t2)}

    def X(*labels: int) -> BasisVector:
        return csf_pbasis(graph.with_edges([optional[j] for j in labels]))

    first = X(1, 2).equals(X(1).add(X(2, 3)).subtract(X(3)))
    second = X(1, 2, 3).equals(X(1, 3).add(X(2, 3)).subtract(X(3)))
    return first and second


@dataclass(frozen=True)
class PositivityReport:
    """Partition-grouped view of an expansion with its negativity summary."""

    degree: int
    coefficients: Dict[Partition, Fraction]
    minimum: Optional[Fraction]
    negative_partitions: Tuple[Partition, ...]

    @property
    def is_e_positive(self) -> bool:
        return not self.negative_partitions


def e_positivity_report(expansion: EExpansion) -> PositivityReport:
    """Group an expansion by partition and report any negative coefficients."""
    grouped = expansion.grouped_by_rho()
    coeffs = dict(grouped.items_sorted())
    negatives = tuple(lam for lam, coef in coeffs.items() if coef < 0)
    minimum = min(coeffs.values()) if coeffs else None
    return PositivityReport(expansion.degree, coeffs, minimum, negatives)
