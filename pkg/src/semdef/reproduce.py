"""Runners for the claim manifest, and the reproduction report they produce.

run() executes every selected claim in manifest order, never aborting on a
failure, and returns a ReproductionReport whose JSON form is byte-identical
across runs except for the generated_at timestamp.  Claim details therefore
carry only deterministic data (bounds, filler counts, witness labelings),
never wall times or node counts.
"""

from __future__ import annotations

import datetime as _dt
from dataclasses import dataclass

from . import constructions as cons
from .bounds import (
    DeficiencyBounds,
    check_bound_identities,
    counting_lower_bound,
    family_bounds,
)
from .graphs import FamilyDescriptor, Graph, cycle, empty_graph, join, make_family, path, star
from .labeling import Rejection, verify_sem
from .manifest import CLAIMS, Claim
from .solver import deficiency, find_sem

STATUS_PASS = "pass"
STATUS_FAIL = "fail"
STATUS_ERRATA = "errata-pass"
STATUS_OPEN = "open"

# Not a formula correction: the stated star-join constant for m >= 2 names the
# largest edge sum; the certificate's magic constant is recomputed instead.
ERRATUM_STAR_MAGIC = "star-join-magic-constant"


@dataclass(frozen=True)
class ClaimOutcome:
    claim: Claim
    status: str
    details: str
    errata: tuple[str, ...] = ()


@dataclass(frozen=True)
class ReproductionReport:
    entries: tuple[ClaimOutcome, ...]

    def summary(self) -> dict:
        counts = {STATUS_PASS: 0, STATUS_ERRATA: 0, STATUS_FAIL: 0, STATUS_OPEN: 0}
        for e in self.entries:
            counts[e.status] += 1
        counts["total"] = len(self.entries)
        return counts

    @property
    def failed(self) -> bool:
        return any(e.status == STATUS_FAIL for e in self.entries)


# ---------------------------------------------------------------------------
# Shared construction dispatch
# ---------------------------------------------------------------------------

def _family_graph(family: str, n: int, m: int | None) -> Graph:
    return make_family(FamilyDescriptor(family, n=n, m=m))


def _expected_path_join_t(n: int, m: int) -> int:
    if n in (1, 2):
        return 0
    if n == 4:
        return m - 1
    if n == 6:
        return 2 * (m - 1)
    return (n - 1) * (m - 1) - 1


def _expected_star_join_t(n: int, m: int) -> int:
    return 0 if m == 1 else n * (m - 1) - 1


def _expected_cycle_join_t(n: int, m: int) -> int:
    return m * n - (n + m) + 1


def _expected_wheel_t(n: int) -> int:
    if n <= 4:
        return 0
    if n <= 7:
        return 1
    return (n - 3) // 2 if n % 2 == 1 else n // 2


_MAGIC_FORMULAS = {
    "3m+6": lambda n, m: 3 * m + 6,
    "3n+6": lambda n, m: 3 * n + 6,
    "6m+9": lambda n, m: 6 * m + 9,
    "2mn+floor((3n+2)/2)": lambda n, m: 2 * m * n + (3 * n + 2) // 2,
}

_GENERAL_JOIN_BASES = (
    ("P2", lambda: path(2)),
    ("P3", lambda: path(3)),
    ("P4", lambda: path(4)),
    ("P5", lambda: path(5)),
    ("P6", lambda: path(6)),
    ("K1,2", lambda: star(2)),
    ("K1,3", lambda: star(3)),
    ("K1,4", lambda: star(4)),
    ("K1,5", lambda: star(5)),
    ("C3", lambda: cycle(3)),
    ("C5", lambda: cycle(5)),
    ("C7", lambda: cycle(7)),
)


def _check_result(r: cons.ConstructionResult, expect_t: int, errata: set[str]) -> None:
    if r.claimed_isolated != expect_t:
        raise AssertionError(
            f"filler count {r.claimed_isolated}, formula expects {expect_t}"
        )
    lab = r.certificate.labeling
    if max(lab.labels, default=0) != lab.total_labels and lab.labels:
        raise AssertionError("largest label differs from p + fillers")
    errata.update(r.errata_applied)


def _bounds_str(b: DeficiencyBounds) -> str:
    upper = "unknown" if b.upper is None else str(b.upper)
    return f"{b.lower} <= deficiency <= {upper}"


# ---------------------------------------------------------------------------
# Claim runners (one per manifest kind)
# ---------------------------------------------------------------------------

def _run_construct_wheel_small(params, threads):
    errata: set[str] = set()
    for n in range(3, 8):
        _check_result(cons.construct_wheel_minus_spoke_small(n), _expected_wheel_t(n), errata)
    return "5/5 small cases verified", errata


def _run_construct_wheel_general(params, threads):
    errata: set[str] = set()
    count = 0
    for n in range(8, params["n_max"] + 1):
        if n % 4 == 2:
            continue
        _check_result(cons.construct_wheel_minus_spoke_general(n), _expected_wheel_t(n), errata)
        count += 1
    return f"{count} cases verified (n % 4 == 2 skipped: open)", errata


def _run_construct_path_grid(params, threads):
    errata: set[str] = set()
    count = 0
    for n in range(1, params["n_max"] + 1):
        for m in range(2, params["m_max"] + 1):
            _check_result(cons.construct_path_join(n, m), _expected_path_join_t(n, m), errata)
            count += 1
    return f"{count} (n, m) cases verified", errata


def _run_construct_path_special(params, threads):
    errata: set[str] = set()
    count = 0
    for n in (4, 6):
        for m in range(2, params["m_max"] + 1):
            r = cons.construct_path_join(n, m)
            _check_result(r, _expected_path_join_t(n, m), errata)
            g = r.certificate.graph
            if counting_lower_bound(g.vertex_count, g.q) != r.claimed_isolated:
                raise AssertionError(f"n={n}, m={m}: filler count above the counting bound")
            count += 1
    return f"{count} special cases meet their counting bounds", errata


def _run_construct_star_grid(params, threads):
    errata: set[str] = set()
    count = 0
    for n in range(2, params["n_max"] + 1):
        for m in range(1, params["m_max"] + 1):
            _check_result(cons.construct_star_join(n, m), _expected_star_join_t(n, m), errata)
            count += 1
    return f"{count} (n, m) cases verified", errata


def _run_construct_cycle_grid(params, threads):
    errata: set[str] = set()
    count = 0
    for n in range(3, params["n_max"] + 1, 2):
        for m in range(2, params["m_max"] + 1):
            _check_result(cons.construct_cycle_join(n, m), _expected_cycle_join_t(n, m), errata)
            count += 1
    return f"{count} (n, m) cases verified", errata


def _run_construct_general_grid(params, threads):
    errata: set[str] = set()
    count = 0
    for name, build in _GENERAL_JOIN_BASES:
        g = build()
        base = find_sem(g, 0, threads=threads).witness
        if base is None:
            raise AssertionError(f"base {name} unexpectedly has no SEM labeling")
        top_sum = base.min_edge_sum + g.q - 1
        for m in range(1, params["m_max"] + 1):
            expect_t = top_sum + (m - 2) * g.vertex_count - m
            _check_result(cons.construct_general_join(base, m), expect_t, errata)
            count += 1
    return f"{count} (base, m) cases verified", errata


def _run_solver_exact(params, threads):
    g = _family_graph(params["family"], params["n"], params.get("m"))
    out = deficiency(g, params["cap"], threads=threads)
    if out.deficiency != params["expect"]:
        raise AssertionError(
            f"deficiency {out.deficiency} (cap {params['cap']}), expected {params['expect']}"
        )
    labels = out.witness.labeling.labels
    return f"deficiency {out.deficiency}; witness {labels}", set()


def _run_solver_exact_range(params, threads):
    lo, hi = params.get("n_range") or params["m_range"]
    fixed_is_n = "n" in params
    results = []
    for x in range(lo, hi + 1):
        n = params["n"] if fixed_is_n else x
        m = x if fixed_is_n else params["m"]
        g = _family_graph(params["family"], n, m)
        out = deficiency(g, params["cap"], threads=threads)
        if out.deficiency != params["expect"]:
            raise AssertionError(
                f"(n={n}, m={m}): deficiency {out.deficiency}, expected {params['expect']}"
            )
        results.append(x)
    return f"deficiency {params['expect']} for all {len(results)} cases", set()


def _run_solver_not_sem(params, threads):
    g = _family_graph(params["family"], params["n"], params.get("m"))
    res = find_sem(g, params["t"], threads=threads)
    if res.witness is not None:
        raise AssertionError(f"unexpected witness {res.witness.labeling.labels}")
    return f"exhausted all labelings into 1..{res.total_labels}: none SEM", set()


def _run_solver_not_sem_range(params, threads):
    lo, hi = params["n_range"]
    for n in range(lo, hi + 1):
        g = _family_graph(params["family"], n, params["m"])
        res = find_sem(g, params["t"], threads=threads)
        if res.witness is not None:
            raise AssertionError(f"n={n}: unexpected witness")
    return f"no SEM labeling for n in {lo}..{hi}", set()


def _run_solver_not_sem_grid(params, threads):
    n_lo, n_hi = params["n_range"]
    m_lo, m_hi = params["m_range"]
    count = 0
    for n in range(n_lo, n_hi + 1):
        for m in range(m_lo, m_hi + 1):
            g = _family_graph(params["family"], n, m)
            res = find_sem(g, params["t"], threads=threads)
            if res.witness is not None:
                raise AssertionError(f"(n={n}, m={m}): unexpected witness")
            count += 1
    return f"no SEM labeling in any of the {count} cases", set()


def _run_counting_infeasible_cycle(params, threads):
    count = 0
    for n in range(3, params["n_max"] + 1):
        for m in range(2, params["m_max"] + 1):
            p = n + m
            q = n * (m + 1)
            lower = counting_lower_bound(p, q)
            if lower < 1:
                raise AssertionError(f"(n={n}, m={m}): lower bound {lower} < 1")
            t = lower - 1
            if not q > 2 * (p + t) - 3:
                raise AssertionError(f"(n={n}, m={m}): t={t} not excluded by counting")
            count += 1
    return f"{count} cases excluded one filler below the bound", set()


def _run_bound_identities(params, threads):
    bad = check_bound_identities(params["n_max"], params["m_max"])
    if bad is not None:
        raise AssertionError(f"first mismatch at {bad}")
    return f"all identities agree up to n={params['n_max']}, m={params['m_max']}", set()


def _run_bounds_consistency(params, threads):
    checked = 0

    def check(d: FamilyDescriptor, t: int):
        nonlocal checked
        b = family_bounds(d)
        if b.upper != t:
            raise AssertionError(f"{d}: upper {b.upper} != construction fillers {t}")
        if b.upper is not None and b.lower > b.upper:
            raise AssertionError(f"{d}: lower {b.lower} > upper {b.upper}")
        checked += 1

    for n in range(3, 20):
        if 8 <= n and n % 4 == 2:
            b = family_bounds(FamilyDescriptor("wheel-minus-spoke", n=n))
            if b.upper is not None:
                raise AssertionError(f"n={n}: expected unknown upper bound")
            continue
        check(FamilyDescriptor("wheel-minus-spoke", n=n), _expected_wheel_t(n))
    for n in range(1, 11):
        for m in range(2, 7):
            check(FamilyDescriptor("path-join", n=n, m=m), _expected_path_join_t(n, m))
    for n in range(2, 11):
        for m in range(1, 7):
            check(FamilyDescriptor("star-join", n=n, m=m), _expected_star_join_t(n, m))
    for n in range(3, 14, 2):
        for m in range(2, 7):
            check(FamilyDescriptor("cycle-join", n=n, m=m), _expected_cycle_join_t(n, m))
    for n in range(4, 14, 2):
        b = family_bounds(FamilyDescriptor("cycle-join", n=n, m=2))
        if b.upper is not None:
            raise AssertionError(f"even n={n}: expected unknown upper bound")
    return f"{checked} descriptors consistent with their constructions", set()


def _run_erratum_demo(params, threads):
    tag = params["tag"]
    demo = next(d for d in cons.erratum_demos() if d.tag == tag)
    rej = verify_sem(demo.graph, demo.rejected_labeling)
    if not isinstance(rej, Rejection):
        raise AssertionError("the uncorrected labeling unexpectedly verifies")
    if rej.reason != demo.expected_reason:
        raise AssertionError(f"rejected as {rej.reason}, documented {demo.expected_reason}")
    return (
        f"uncorrected labeling rejected ({rej.reason}); corrected verifies "
        f"with {demo.corrected.claimed_isolated} fillers",
        {tag},
    )


def _construct_for_magic(family: str, n: int, m: int) -> cons.ConstructionResult:
    if family == "path-join":
        return cons.construct_path_join(n, m)
    if family == "star-join":
        return cons.construct_star_join(n, m)
    raise ValueError(f"no magic-constant runner for family {family!r}")


def _run_magic_constant(params, threads):
    formula = _MAGIC_FORMULAS[params["formula"]]
    if "n_list" in params:
        n_values = list(params["n_list"])
    elif "n_range" in params:
        n_values = list(range(params["n_range"][0], params["n_range"][1] + 1))
    else:
        n_values = [params["n"]]
    if "m_range" in params:
        m_values = list(range(params["m_range"][0], params["m_range"][1] + 1))
    else:
        m_values = [params["m"]]
    count = 0
    for n in n_values:
        for m in m_values:
            r = _construct_for_magic(params["family"], n, m)
            k = r.certificate.magic_constant
            if k != formula(n, m):
                raise AssertionError(f"(n={n}, m={m}): k={k}, formula gives {formula(n, m)}")
            count += 1
    return f"magic constant {params['formula']} confirmed in {count} cases", set()


def _run_magic_star_multi_mismatch(params, threads):
    count = 0
    for n in range(2, params["n_max"] + 1):
        for m in range(2, params["m_max"] + 1):
            r = cons.construct_star_join(n, m)
            cert = r.certificate
            stated = (n + 1) * (m + 1) + 1
            top_sum = cert.min_edge_sum + cert.graph.q - 1
            if cert.magic_constant == stated:
                raise AssertionError(f"(n={n}, m={m}): no discrepancy after all")
            if stated != top_sum:
                raise AssertionError(
                    f"(n={n}, m={m}): stated constant {stated} is not the top sum {top_sum}"
                )
            count += 1
    return (
        f"in all {count} cases the stated constant equals the largest edge sum; "
        "certificates carry the recomputed magic constant",
        {ERRATUM_STAR_MAGIC},
    )


def _run_open_problem(params, threads):
    family = params["family"]
    parts = []
    for n, m in params["cases"]:
        d = FamilyDescriptor(family, n=n, m=m)
        b = family_bounds(d)
        label = f"n={n}" if m is None else f"n={n}, m={m}"
        parts.append(f"{label}: {_bounds_str(b)}")
        if "cap" in params:
            out = deficiency(make_family(d), params["cap"], threads=threads)
            if out.deficiency is None:
                parts.append(f"exhaustive search: deficiency > {params['cap']}")
            else:
                parts.append(f"exhaustive search: deficiency = {out.deficiency}")
    return "; ".join(parts), set()


_RUNNERS = {
    "construct-wheel-small": _run_construct_wheel_small,
    "construct-wheel-general": _run_construct_wheel_general,
    "construct-path-grid": _run_construct_path_grid,
    "construct-path-special": _run_construct_path_special,
    "construct-star-grid": _run_construct_star_grid,
    "construct-cycle-grid": _run_construct_cycle_grid,
    "construct-general-grid": _run_construct_general_grid,
    "solver-exact": _run_solver_exact,
    "solver-exact-range": _run_solver_exact_range,
    "solver-not-sem": _run_solver_not_sem,
    "solver-not-sem-range": _run_solver_not_sem_range,
    "solver-not-sem-grid": _run_solver_not_sem_grid,
    "counting-infeasible-cycle": _run_counting_infeasible_cycle,
    "bound-identities": _run_bound_identities,
    "bounds-consistency": _run_bounds_consistency,
    "erratum-demo": _run_erratum_demo,
    "magic-constant": _run_magic_constant,
    "magic-star-multi-mismatch": _run_magic_star_multi_mismatch,
    "open-problem": _run_open_problem,
}


def run(selection=None, threads: int = 1) -> ReproductionReport:
    """Run the selected claims (by group or id; None = all) in manifest order."""
    wanted = set(selection) if selection else None
    entries = []
    for claim in CLAIMS:
        if wanted is not None and claim.group not in wanted and claim.id not in wanted:
            continue
        runner = _RUNNERS[claim.kind]
        try:
            details, errata = runner(claim.params, threads)
        except Exception as exc:  # record, never abort the run
            entries.append(ClaimOutcome(claim, STATUS_FAIL, f"{exc}", ()))
            continue
        if claim.group == "open-problems":
            status = STATUS_OPEN
        elif errata:
            status = STATUS_ERRATA
        else:
            status = STATUS_PASS
        entries.append(ClaimOutcome(claim, status, details, tuple(sorted(errata))))
    return ReproductionReport(tuple(entries))


def report_json_dict(report: ReproductionReport, generated_at: str | None = None) -> dict:
    if generated_at is None:
        generated_at = _dt.datetime.now(_dt.timezone.utc).isoformat()
    return {
        "schema": "semdef/1",
        "generated_at": generated_at,
        "entries": [
            {
                "id": e.claim.id,
                "group": e.claim.group,
                "statement": e.claim.statement,
                "status": e.status,
                "details": e.details,
                "errata": list(e.errata),
            }
            for e in report.entries
        ],
        "summary": report.summary(),
    }


def report_markdown(report: ReproductionReport) -> str:
    lines = [
        "# Reproduction report",
        "",
        "| claim | group | status | details |",
        "| --- | --- | --- | --- |",
    ]
    for e in report.entries:
        details = e.details.replace("|", "\\|")
        if e.errata:
            details += f" [errata: {', '.join(e.errata)}]"
        lines.append(f"| {e.claim.id} | {e.claim.group} | {e.status} | {details} |")
    s = report.summary()
    lines += [
        "",
        f"**{s['total']} claims: {s['pass']} pass, {s['errata-pass']} errata-pass, "
        f"{s['fail']} fail, {s['open']} open.**",
        "",
    ]
    return "\n".join(lines)
