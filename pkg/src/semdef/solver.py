"""Exact SEM decision and deficiency by exhaustive backtracking.

find_sem(g, t) decides whether G U tK_1 has a SEM labeling by depth-first
assignment of labels {1..p+t} to vertices in descending-degree order (ties by
index): high-degree vertices constrain the edge sums fastest.  Labels are
tried in ascending order, so the first witness found is the lexicographically
least labeling along that fixed assignment order; re-running, toggling
pruning, or parallelizing never changes the returned witness.

Pruning (all sound -- disabling changes node counts, never outcomes):
  * each new edge sum must be distinct from the realized ones and keep
    max - min <= q - 1;
  * the degree-weighted label sum must stay inside the interval achievable
    by any completion, intersected with the interval forced by the possible
    starting sums (see labeling.weighted_sum_required);
  * with pruning off entirely, every full injection is enumerated and leaves
    are checked by the verifier.

Complement symmetry: if f is a witness then so is N+1-f, with the edge sums
reflected; the first assigned vertex may therefore be restricted to labels
1..ceil(N/2) without losing any witness with minimal first label, so the
returned witness is unchanged.

The search may split the first vertex's label choices across worker
processes; branch results are combined in ascending label order, so parallel
runs return exactly the serial witness.  Searches beyond the configured
label-count limit raise SearchLimitError rather than guessing.
"""

from __future__ import annotations

import multiprocessing
import time
from dataclasses import dataclass

from .bounds import counting_lower_bound
from .graphs import Graph
from .labeling import Labeling, Rejection, SemCertificate, verify_sem

DEFAULT_MAX_LABELS = 16


class SearchLimitError(RuntimeError):
    """The requested search exceeds the configured label-count limit."""


@dataclass(frozen=True)
class SearchResult:
    """Outcome of one exhaustive existence search at a fixed filler count.

    witness None means the search was exhaustive over all injective
    labelings into {1..total_labels} and found none.
    """

    witness: SemCertificate | None
    total_labels: int
    nodes: int
    seconds: float

    def __bool__(self) -> bool:
        return self.witness is not None


@dataclass(frozen=True)
class SearchOutcome:
    """Result of the deficiency minimization up to a cap.

    deficiency is the exact value when a witness exists (every smaller
    filler count was exhausted or excluded by counting); None means no
    witness exists for any t <= cap.
    """

    deficiency: int | None
    witness: SemCertificate | None
    cap: int
    nodes: int
    seconds: float

    @property
    def is_exact(self) -> bool:
        return self.deficiency is not None


def _search_order(g: Graph) -> tuple[list[int], list[list[int]], list[int]]:
    """Assignment order (descending degree, ties by index) and, per order
    position, the positions of already-assigned neighbors."""
    deg = g.degrees()
    order = sorted(range(g.vertex_count), key=lambda v: (-deg[v], v))
    pos = {v: i for i, v in enumerate(order)}
    prior: list[list[int]] = [[] for _ in range(g.vertex_count)]
    for u, v in g.edges:
        iu, iv = pos[u], pos[v]
        if iu > iv:
            iu, iv = iv, iu
        prior[iv].append(iu)
    return order, prior, [deg[v] for v in order]


def _run_search(
    g: Graph,
    n_total: int,
    prune: bool,
    symmetry: bool,
    first_labels: tuple[int, ...] | None = None,
) -> tuple[list[int] | None, int]:
    """Core DFS.  Returns (labels in vertex order, nodes) or (None, nodes).

    nodes counts label placements attempted.
    """
    p = g.vertex_count
    q = g.q
    if p == 0:
        return [], 0
    if prune and q > 0 and q > 2 * n_total - 3:
        # counting bound: no SEM graph with an edge has q > 2p - 3
        return None, 0
    order, prior, deg_in_order = _search_order(g)
    suffix_degs = [sorted(deg_in_order[i:], reverse=True) for i in range(p + 1)]
    target_base = q * (q - 1) // 2
    max_start = 2 * n_total - q  # largest possible min edge sum

    labels_at = [0] * p
    used = [False] * (n_total + 1)
    sum_seen = bytearray(2 * n_total + 1)
    nodes = 0

    if first_labels is not None:
        top = [lab for lab in first_labels if 1 <= lab <= n_total]
    elif symmetry:
        top = list(range(1, (n_total + 1) // 2 + 1))
    else:
        top = list(range(1, n_total + 1))

    def available_ascending() -> list[int]:
        return [lab for lab in range(1, n_total + 1) if not used[lab]]

    def rec(idx: int, lo: int, hi: int, wsum: int) -> list[int] | None:
        nonlocal nodes
        if idx == p:
            if prune:
                out = [0] * p
                for i, v in enumerate(order):
                    out[v] = labels_at[i]
                return out
            out = [0] * p
            for i, v in enumerate(order):
                out[v] = labels_at[i]
            if verify_sem(g, Labeling(out, n_total)):
                return out
            return None

        candidates = top if idx == 0 else range(1, n_total + 1)
        nbrs = prior[idx]
        for lab in candidates:
            if used[lab]:
                continue
            nodes += 1
            if prune:
                new_lo, new_hi = lo, hi
                ok = True
                new_sums = []
                for j in nbrs:
                    sm = lab + labels_at[j]
                    if sum_seen[sm]:
                        ok = False
                        break
                    for prev in new_sums:
                        if prev == sm:
                            ok = False
                            break
                    if not ok:
                        break
                    new_sums.append(sm)
                    if sm < new_lo:
                        new_lo = sm
                    if sm > new_hi:
                        new_hi = sm
                if not ok or (new_hi >= 0 and new_hi - new_lo > q - 1):
                    continue
                wsum2 = wsum + deg_in_order[idx] * lab
                if q > 0 and idx + 1 < p:
                    # completion interval for the degree-weighted label sum
                    rem_degs = suffix_degs[idx + 1]
                    avail = available_ascending()
                    avail.remove(lab)
                    minc = 0
                    maxc = 0
                    last = len(avail) - 1
                    for i, d in enumerate(rem_degs):
                        minc += d * avail[i]
                        maxc += d * avail[last - i]
                    s_lo = 3 if new_hi < 0 else max(3, new_hi - (q - 1))
                    s_hi = max_start if new_hi < 0 else min(new_lo, max_start)
                    if (
                        wsum2 + minc > q * s_hi + target_base
                        or wsum2 + maxc < q * s_lo + target_base
                    ):
                        continue
                labels_at[idx] = lab
                used[lab] = True
                for sm in new_sums:
                    sum_seen[sm] = 1
                hit = rec(idx + 1, new_lo, new_hi, wsum2)
                for sm in new_sums:
                    sum_seen[sm] = 0
                used[lab] = False
                if hit is not None:
                    return hit
            else:
                labels_at[idx] = lab
                used[lab] = True
                hit = rec(idx + 1, lo, hi, 0)
                used[lab] = False
                if hit is not None:
                    return hit
        return None

    big = 10 * n_total
    found = rec(0, big, -1, 0)
    return found, nodes


def _branch_worker(args) -> tuple[int, list[int] | None, int]:
    p, edges, n_total, prune, first_label = args
    g = Graph(p, edges)
    labels, nodes = _run_search(g, n_total, prune, False, first_labels=(first_label,))
    return first_label, labels, nodes


def find_sem(
    g: Graph,
    t: int,
    *,
    prune: bool = True,
    symmetry: bool = True,
    threads: int = 1,
    max_labels: int | None = DEFAULT_MAX_LABELS,
) -> SearchResult:
    """Search exhaustively for a SEM labeling of g U tK_1.

    Returns a SearchResult whose witness, when present, has been re-verified
    by the checker; witness None is a proof by exhaustion over total_labels
    = p + t labels.  Raises SearchLimitError when p + t exceeds max_labels
    (pass max_labels=None to accept the runtime risk).
    """
    if t < 0:
        raise ValueError(f"isolated filler count must be >= 0, got {t}")
    n_total = g.vertex_count + t
    if max_labels is not None and n_total > max_labels:
        raise SearchLimitError(
            f"search needs {n_total} labels, over the limit of {max_labels}; "
            "raise max_labels to run anyway"
        )
    start = time.perf_counter()
    if threads > 1 and g.vertex_count > 1:
        first = (
            range(1, (n_total + 1) // 2 + 1) if symmetry else range(1, n_total + 1)
        )
        tasks = [(g.vertex_count, g.edges, n_total, prune, lab) for lab in first]
        labels = None
        nodes = 0
        with multiprocessing.Pool(processes=threads) as pool:
            for _, got, branch_nodes in pool.imap(_branch_worker, tasks):
                nodes += branch_nodes
                if got is not None:
                    labels = got
                    pool.terminate()
                    break
    else:
        labels, nodes = _run_search(g, n_total, prune, symmetry)
    seconds = time.perf_counter() - start
    if labels is None:
        return SearchResult(None, n_total, nodes, seconds)
    cert = verify_sem(g, Labeling(labels, n_total))
    if isinstance(cert, Rejection):
        raise RuntimeError(
            f"internal error: search produced an invalid witness ({cert.reason})"
        )
    return SearchResult(cert, n_total, nodes, seconds)


def deficiency(
    g: Graph,
    cap: int,
    *,
    prune: bool = True,
    symmetry: bool = True,
    threads: int = 1,
    max_labels: int | None = DEFAULT_MAX_LABELS,
) -> SearchOutcome:
    """Exact deficiency of g, provided it is at most cap.

    Iterates the filler count from the counting lower bound (smaller values
    cannot work: q <= 2(p+t)-3 fails) up to cap; the first witness gives the
    exact value.  Exceeding the label limit raises SearchLimitError rather
    than returning a wrong or weakened answer.
    """
    if cap < 0:
        raise ValueError(f"cap must be >= 0, got {cap}")
    start = time.perf_counter()
    nodes = 0
    t0 = 0 if g.vertex_count == 0 else counting_lower_bound(g.vertex_count, g.q)
    for t in range(t0, cap + 1):
        res = find_sem(
            g, t, prune=prune, symmetry=symmetry, threads=threads, max_labels=max_labels
        )
        nodes += res.nodes
        if res.witness is not None:
            return SearchOutcome(t, res.witness, cap, nodes, time.perf_counter() - start)
    return SearchOutcome(None, None, cap, nodes, time.perf_counter() - start)
