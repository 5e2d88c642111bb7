"""Vertex labelings and the super edge-magic (SEM) verifier.

A graph G with p vertices and q edges is super edge-magic exactly when some
bijection f : V -> {1..p} makes the edge-sum set S = {f(x)+f(y) : xy in E}
consist of q consecutive integers; f then extends to a total labeling with
magic constant k = p + q + min(S).  We work with G U tK_1 implicitly: the
labeling of the p real vertices is injective into {1..N} with N = p + t, and
the t isolated fillers take exactly the unused labels.  Fillers are never
materialized as graph vertices; t is pure label-space slack.

Consecutiveness is tested as (q distinct sums) and (max - min == q - 1),
which is equivalent to "q consecutive integers" without sorting.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import Graph, SCHEMA

# Rejection reasons, ordered by when the verifier can detect them.
REASON_OUT_OF_RANGE = "label-out-of-range"
REASON_DUPLICATE_LABEL = "duplicate-label"
REASON_DUPLICATE_SUM = "duplicate-sum"
REASON_SUM_GAP = "sum-gap"


@dataclass(frozen=True)
class Labeling:
    """Labels of the p real vertices, drawn from {1..total_labels}.

    total_labels = p + t where t is the isolated filler count.  The carrier
    itself is unvalidated; verify_sem reports bad labels as rejections so
    that tests and the CLI can observe the failure mode.
    """

    labels: tuple[int, ...]
    total_labels: int

    def __init__(self, labels, total_labels: int | None = None):
        labels = tuple(int(x) for x in labels)
        if total_labels is None:
            total_labels = len(labels)
        if total_labels < len(labels):
            raise ValueError(
                f"total_labels={total_labels} is less than the vertex count {len(labels)}"
            )
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "total_labels", total_labels)

    @property
    def isolated(self) -> int:
        return self.total_labels - len(self.labels)


@dataclass(frozen=True)
class Rejection:
    """Why a labeling is not super edge-magic."""

    reason: str
    detail: str

    def __bool__(self) -> bool:  # rejections are falsy; certificates truthy
        return False


@dataclass(frozen=True)
class SemCertificate:
    """A verified SEM labeling of graph U (isolated)K_1.

    min_edge_sum is min(S); magic_constant is (p + isolated) + q + min(S).
    Only the verifier, the constructions, and the solver produce these.
    """

    graph: Graph
    labeling: Labeling
    isolated: int
    min_edge_sum: int
    magic_constant: int

    def __bool__(self) -> bool:
        return True

    def to_json_dict(self) -> dict:
        return {
            "schema": SCHEMA,
            "graph": self.graph.to_json_dict(),
            "labels": list(self.labeling.labels),
            "isolated": self.isolated,
            "s": self.min_edge_sum,
            "k": self.magic_constant,
        }


def certificate_from_json_dict(data: dict) -> tuple[Graph, Labeling, dict]:
    """Unpack a certificate JSON dict into (graph, labeling, claimed fields).

    The claimed fields ({"isolated", "s", "k"}) are returned unverified;
    callers re-verify and cross-check them (see cli.verify).
    """
    schema = data.get("schema", SCHEMA)
    if schema != SCHEMA:
        raise ValueError(f"unsupported schema {schema!r}, expected {SCHEMA!r}")
    graph = Graph.from_json_dict(data["graph"])
    isolated = int(data["isolated"])
    if isolated < 0:
        raise ValueError(f"isolated count must be >= 0, got {isolated}")
    labeling = Labeling(data["labels"], graph.vertex_count + isolated)
    claimed = {"isolated": isolated, "s": data.get("s"), "k": data.get("k")}
    return graph, labeling, claimed


def edge_sums(g: Graph, f: Labeling) -> list[int]:
    """f(u)+f(v) for every edge, in canonical edge order (one entry per edge)."""
    if len(f.labels) != g.vertex_count:
        raise ValueError(
            f"labeling has {len(f.labels)} labels but the graph has {g.vertex_count} vertices"
        )
    lab = f.labels
    return [lab[u] + lab[v] for u, v in g.edges]


def verify_sem(g: Graph, f: Labeling) -> SemCertificate | Rejection:
    """Check the consecutive-edge-sums characterization of SEM labelings.

    Accepts iff the labels are injective into {1..N} (N = p + t) and the q
    edge sums are pairwise distinct consecutive integers.  Returns a
    certificate on acceptance and a Rejection naming the failure otherwise.
    For q == 0 the sum condition is vacuous; min_edge_sum is 0 by convention.
    """
    n_total = f.total_labels
    for v, lab in enumerate(f.labels):
        if not (1 <= lab <= n_total):
            return Rejection(
                REASON_OUT_OF_RANGE,
                f"vertex {v} has label {lab}, outside 1..{n_total}",
            )
    if len(set(f.labels)) != len(f.labels):
        seen: dict[int, int] = {}
        for v, lab in enumerate(f.labels):
            if lab in seen:
                return Rejection(
                    REASON_DUPLICATE_LABEL,
                    f"vertices {seen[lab]} and {v} both have label {lab}",
                )
            seen[lab] = v

    sums = edge_sums(g, f)
    q = len(sums)
    if q == 0:
        s = 0
    else:
        distinct = set(sums)
        if len(distinct) != q:
            dup = next(x for x in sums if sums.count(x) > 1)
            return Rejection(REASON_DUPLICATE_SUM, f"edge sum {dup} occurs more than once")
        s, top = min(distinct), max(distinct)
        if top - s != q - 1:
            return Rejection(
                REASON_SUM_GAP,
                f"{q} distinct sums span {s}..{top}, not {q} consecutive integers",
            )
    k = n_total + q + s
    return SemCertificate(g, f, f.isolated, s, k)


def is_sem(g: Graph, f: Labeling) -> bool:
    return bool(verify_sem(g, f))


def total_edge_labels(cert: SemCertificate) -> list[int]:
    """Edge labels of the extended magic total labeling, in canonical edge order.

    The edge with sum s+j gets label N+q-j (N = p+t), so every edge satisfies
    f(x) + f(xy) + f(y) = magic_constant and the edge labels are exactly
    {N+1 .. N+q}.
    """
    n_total = cert.labeling.total_labels
    q = cert.graph.q
    sums = edge_sums(cert.graph, cert.labeling)
    return [n_total + q - (sm - cert.min_edge_sum) for sm in sums]


def weighted_sum_required(q: int, s: int) -> int:
    """Sum of q consecutive integers starting at s: q*s + q(q-1)/2.

    Equals sum(S) for any accepting labeling, and also equals the
    degree-weighted label sum, since each vertex label is counted once per
    incident edge.
    """
    if q < 0:
        raise ValueError(f"q must be >= 0, got {q}")
    return q * s + q * (q - 1) // 2


def weighted_sum_feasible(g: Graph, total_labels: int, s: int) -> bool:
    """Necessary test: can any injective labeling meet the weighted-sum target?

    sum(deg(v) * f(v)) must equal weighted_sum_required(q, s); over injections
    of {1..total_labels} that weighted sum ranges over an interval whose
    endpoints pair the largest degrees with the smallest resp. largest labels.
    Interval membership is necessary but not sufficient (a cheap pruning
    filter; completeness comes from the solver).
    """
    target = weighted_sum_required(g.q, s)
    degs = sorted(g.degrees(), reverse=True)
    p = g.vertex_count
    if total_labels < p:
        return False
    low_labels = range(1, p + 1)
    high_labels = range(total_labels, total_labels - p, -1)
    lo = sum(d * lab for d, lab in zip(degs, low_labels))
    hi = sum(d * lab for d, lab in zip(degs, high_labels))
    return lo <= target <= hi
