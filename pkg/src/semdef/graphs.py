"""Finite simple graphs and the families used throughout the package.

Conventions:
  * Vertices are 0-based indices 0..p-1; vertex labels (see labeling module)
    are 1-based, so formulas written for labels {1..p} apply unchanged.
  * Edges are stored as (u, v) with u < v, sorted lexicographically, so that
    equal graphs compare equal and certificates serialize reproducibly.
  * The wheel-minus-spoke family H_n is W_n = C_n + K_1 with one hub-to-rim
    edge removed: vertex 0 is the hub c, vertices 1..n are the rim x_1..x_n,
    and the missing spoke is c-x_1 by default.  The variant with the missing
    spoke at c-x_{n/2} (used by the n % 4 == 0 construction) is available via
    ``wheel_minus_spoke(n, missing_spoke=n // 2)``; the two are isomorphic.
  * Join products place the first factor at indices 0..p_g-1 and the second
    factor shifted up by p_g.
"""

from __future__ import annotations

from dataclasses import dataclass

SCHEMA = "semdef/1"


@dataclass(frozen=True)
class Graph:
    """A finite simple graph: vertex count plus a canonical sorted edge list."""

    vertex_count: int
    edges: tuple[tuple[int, int], ...]

    def __init__(self, vertex_count: int, edges=()):
        if vertex_count < 0:
            raise ValueError(f"vertex_count must be >= 0, got {vertex_count}")
        canon = []
        for e in edges:
            u, v = e
            if u == v:
                raise ValueError(f"loop at vertex {u} is not allowed")
            if u > v:
                u, v = v, u
            if not (0 <= u and v < vertex_count):
                raise ValueError(f"edge {e!r} has an endpoint outside 0..{vertex_count - 1}")
            canon.append((u, v))
        canon.sort()
        for a, b in zip(canon, canon[1:]):
            if a == b:
                raise ValueError(f"duplicate edge {a!r}")
        object.__setattr__(self, "vertex_count", vertex_count)
        object.__setattr__(self, "edges", tuple(canon))

    @property
    def p(self) -> int:
        return self.vertex_count

    @property
    def q(self) -> int:
        return len(self.edges)

    def degrees(self) -> list[int]:
        deg = [0] * self.vertex_count
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg

    def to_json_dict(self) -> dict:
        return {"schema": SCHEMA, "p": self.vertex_count, "edges": [list(e) for e in self.edges]}

    @classmethod
    def from_json_dict(cls, data: dict) -> "Graph":
        schema = data.get("schema", SCHEMA)
        if schema != SCHEMA:
            raise ValueError(f"unsupported schema {schema!r}, expected {SCHEMA!r}")
        return cls(int(data["p"]), [tuple(e) for e in data["edges"]])


# ---------------------------------------------------------------------------
# Elementary families
# ---------------------------------------------------------------------------

def empty_graph(n: int) -> Graph:
    """n isolated vertices (the empty graph on n vertices)."""
    if n < 0:
        raise ValueError(f"empty graph needs n >= 0, got {n}")
    return Graph(n)


def path(n: int) -> Graph:
    """Path P_n on n vertices (P_1 is a single vertex)."""
    if n < 1:
        raise ValueError(f"path needs n >= 1, got {n}")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    """Cycle C_n, n >= 3."""
    if n < 3:
        raise ValueError(f"cycle needs n >= 3, got {n}")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def star(n: int) -> Graph:
    """Star K_{1,n}: center 0 joined to leaves 1..n."""
    if n < 1:
        raise ValueError(f"star needs n >= 1 leaves, got {n}")
    return Graph(n + 1, [(0, i) for i in range(1, n + 1)])


def wheel(n: int) -> Graph:
    """Wheel W_n = C_n + K_1: hub 0, rim 1..n."""
    if n < 3:
        raise ValueError(f"wheel needs n >= 3, got {n}")
    spokes = [(0, i) for i in range(1, n + 1)]
    rim = [(i, i + 1) for i in range(1, n)] + [(1, n)]
    return Graph(n + 1, spokes + rim)


def wheel_minus_spoke(n: int, missing_spoke: int = 1) -> Graph:
    """Wheel W_n with the hub-to-x_{missing_spoke} edge removed.

    Hub is vertex 0, rim vertices x_1..x_n are 1..n.  All choices of
    missing_spoke give isomorphic graphs; the parameter only fixes which
    printed labeling formulas apply verbatim.
    """
    if n < 3:
        raise ValueError(f"wheel-minus-spoke needs n >= 3, got {n}")
    if not (1 <= missing_spoke <= n):
        raise ValueError(f"missing_spoke must be in 1..{n}, got {missing_spoke}")
    spokes = [(0, i) for i in range(1, n + 1) if i != missing_spoke]
    rim = [(i, i + 1) for i in range(1, n)] + [(1, n)]
    return Graph(n + 1, spokes + rim)


# ---------------------------------------------------------------------------
# Combinators
# ---------------------------------------------------------------------------

def join(g: Graph, h: Graph) -> Graph:
    """Join product g + h: disjoint union plus all edges between the factors.

    Vertices of g keep their indices; vertices of h are shifted by g.p.
    """
    shift = g.vertex_count
    edges = list(g.edges)
    edges += [(u + shift, v + shift) for u, v in h.edges]
    edges += [(u, v + shift) for u in range(g.vertex_count) for v in range(h.vertex_count)]
    return Graph(g.vertex_count + h.vertex_count, edges)


def add_isolated(g: Graph, t: int) -> Graph:
    """g with t extra isolated vertices appended."""
    if t < 0:
        raise ValueError(f"isolated vertex count must be >= 0, got {t}")
    return Graph(g.vertex_count + t, g.edges)


def degree_sequence(g: Graph) -> list[int]:
    """Degree of each vertex, indexed by vertex; sums to 2q."""
    return g.degrees()


# ---------------------------------------------------------------------------
# Family descriptors
# ---------------------------------------------------------------------------

# kind -> (needs_n, needs_m)
FAMILY_KINDS = {
    "path": (True, False),
    "cycle": (True, False),
    "star": (True, False),
    "empty": (True, False),
    "wheel": (True, False),
    "wheel-minus-spoke": (True, False),
    "path-join": (True, True),
    "star-join": (True, True),
    "cycle-join": (True, True),
    "generic-join": (False, True),
}


@dataclass(frozen=True)
class FamilyDescriptor:
    """A named graph family with its integer parameters."""

    kind: str
    n: int | None = None
    m: int | None = None

    def __post_init__(self):
        if self.kind not in FAMILY_KINDS:
            raise ValueError(f"unknown family kind {self.kind!r}; known: {sorted(FAMILY_KINDS)}")
        needs_n, needs_m = FAMILY_KINDS[self.kind]
        if needs_n and self.n is None:
            raise ValueError(f"family {self.kind!r} requires parameter n")
        if needs_m and self.m is None:
            raise ValueError(f"family {self.kind!r} requires parameter m")


def make_family(d: FamilyDescriptor) -> Graph:
    """Build the canonical graph for a family descriptor.

    Join families put the base family first (indices 0..n-1 resp. 0..n) and
    the m added independent vertices after it.
    """
    kind, n, m = d.kind, d.n, d.m
    if kind == "path":
        return path(n)
    if kind == "cycle":
        return cycle(n)
    if kind == "star":
        return star(n)
    if kind == "empty":
        return empty_graph(n)
    if kind == "wheel":
        return wheel(n)
    if kind == "wheel-minus-spoke":
        return wheel_minus_spoke(n)
    if m is not None and m < 1:
        raise ValueError(f"join families need m >= 1, got {m}")
    if kind == "path-join":
        return join(path(n), empty_graph(m))
    if kind == "star-join":
        if n < 1:
            raise ValueError(f"star-join needs n >= 1, got {n}")
        return join(star(n), empty_graph(m))
    if kind == "cycle-join":
        return join(cycle(n), empty_graph(m))
    raise ValueError(
        "generic-join has no canonical base; build it with join(base, empty_graph(m))"
    )
