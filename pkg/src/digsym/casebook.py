"""Scripted desk-scale reproductions ("cases") and their report format.

Each case returns a CaseResult whose claims are deterministic given the
bundled catalogs and bounds; reports are JSON lines with one line per
claim and no timing fields, so consecutive runs are byte-identical.
"""

from __future__ import annotations

import json
import random
import time
from dataclasses import dataclass
from typing import Optional

from . import analyze
from .arith import (
    FactoredInteger,
    factorize,
    half_exponent_divisor,
    is_prime,
    ppd,
    primitive_prime_divisors,
    zsigmondy_has_ppd,
)
from .bounds import DEFAULT_BOUNDS, SearchBounds
from .catalog import load_catalog, load_catalog_entry
from .construct import CosetDigraphSpec, build_coset_digraph, gamma_certificate
from .digraph import build_digraph, count_s_arcs, direct_product, is_directed_cycle
from .errors import BoundExceededError, UnknownCaseError
from .group import PermutationGroup, SubgroupHandle, trivial_subgroup
from .perm import Permutation
from .subgrp import _universe, subgroups_up_to_conjugacy


@dataclass(frozen=True)
class Claim:
    description: str
    expected: str
    actual: str
    status: str                   # pass | fail | not-applicable | vacuous
    witness: Optional[str] = None


@dataclass(frozen=True)
class CaseResult:
    case_id: str
    claims: tuple
    elapsed: float

    @property
    def failed(self) -> bool:
        return any(c.status == "fail" for c in self.claims)


def _claim(description, expected, actual, witness=None) -> Claim:
    status = "pass" if expected == actual else "fail"
    return Claim(description, str(expected), str(actual), status, witness)


# ---------------------------------------------------------------------------
# individual cases
# ---------------------------------------------------------------------------

def _case_sp6_2_arith(bounds: SearchBounds) -> list:
    entry = load_catalog_entry("special", "sp6_2")
    G = entry.group
    claims = [
        _claim("order of the bundled degree-63 symplectic group",
               "1451520", str(G.order)),
        _claim("factorization of the order",
               "2^9 * 3^4 * 5 * 7", str(factorize(G.order))),
        _claim("half-exponent divisor of the order",
               "10080", str(half_exponent_divisor(G.order))),
    ]
    return claims


def _case_he_divisor(bounds: SearchBounds) -> list:
    n = FactoredInteger.from_factors([(2, 9), (3, 2), (5, 2), (17, 1)])
    return [
        _claim("half-exponent divisor of 2^9 * 3^2 * 5^2 * 17",
               "8160", str(half_exponent_divisor(n))),
    ]


def _case_gamma_a5(bounds: SearchBounds) -> list:
    T = load_catalog_entry("small", "a5").group
    cert = gamma_certificate(T, bounds=bounds)
    claims = [
        _claim("enumeration length k = |T|", "60", str(cert.T_order)),
        _claim("vertex count |T|^(k-1)", str(60 ** 59), str(cert.vertex_count)),
        _claim("R meet D trivial", "True", str(cert.intersection_RD_trivial)),
        _claim("|R| * |D| = |T|^k", "True", str(cert.product_RD_is_G)),
        _claim("diagonal self-intersection order", "1",
               str(cert.diag_self_intersection_order)),
        _claim("valency |D| / |D meet D^g|", "60", str(cert.valency)),
    ]
    rng = random.Random(20240601)
    stable = True
    base = T.element_permutations(bounds)
    for _ in range(10):
        shuffled = list(base)
        rng.shuffle(shuffled)
        other = gamma_certificate(T, enumeration=shuffled, bounds=bounds)
        if other != cert:
            stable = False
            break
    claims.append(_claim("certificate invariant under 10 re-enumerations",
                         "True", str(stable)))
    return claims


def _orbital_digraphs(G: PermutationGroup) -> list:
    """Antisymmetric orbitals of a transitive group, as digraphs."""
    n = G.degree
    gens = [g.images for g in G.generators]
    seen = set()
    orbitals = []
    for u in range(n):
        for v in range(n):
            if u == v or (u, v) in seen:
                continue
            orbit = {(u, v)}
            frontier = [(u, v)]
            while frontier:
                nxt = []
                for (a, b) in frontier:
                    for g in gens:
                        pair = (g[a], g[b])
                        if pair not in orbit:
                            orbit.add(pair)
                            nxt.append(pair)
                frontier = nxt
            seen |= orbit
            if all((b, a) not in orbit for (a, b) in orbit):
                orbitals.append(build_digraph(n, orbit))
    return orbitals


def _case_lemval_census(bounds: SearchBounds) -> list:
    claims = []
    counterexamples = 0
    checked = 0
    for entry in load_catalog("primitive"):
        if entry.degree > 12:
            continue
        branches = []
        for digraph in _orbital_digraphs(entry.group):
            action = analyze.bind_action(digraph, entry.group)
            report = analyze.lemma_val_check(action, bounds)
            if not report.applicable:
                continue
            checked += 1
            if report.holds:
                branches.append(report.branch)
            else:
                counterexamples += 1
                branches.append("COUNTEREXAMPLE")
        if branches:
            claims.append(_claim(
                f"{entry.name}: orbital digraph branches",
                "no counterexample",
                "no counterexample" if "COUNTEREXAMPLE" not in branches
                else "counterexample",
                witness=",".join(branches)))
    claims.append(_claim(
        f"valency lemma over {checked} vertex-primitive orbital digraphs",
        "0 counterexamples", f"{counterexamples} counterexamples"))
    return claims


def _bundled_groups(max_order=None, kinds=("small", "primitive")) -> list:
    out = []
    for kind in kinds:
        for entry in load_catalog(kind, verify=(kind == "primitive")):
            if max_order is None or entry.group.order <= max_order:
                out.append((f"{kind}/{entry.name}", entry.group))
    return sorted(out, key=lambda kv: kv[0])


def _valid_specs(G: PermutationGroup, bounds: SearchBounds):
    """All valid coset digraph specs over G, with H up to conjugacy and
    g up to double cosets (the digraph depends only on HgH)."""
    U = _universe(G, bounds)
    specs = []
    for H in subgroups_up_to_conjugacy(G, bounds=bounds):
        if H.order == G.order:
            continue
        hset = sorted(U.index[t] for t in H.group.element_tuples(bounds))
        seen = set()
        for g_idx in range(U.size):
            if g_idx in seen:
                continue
            double = set()
            for h1 in hset:
                m = U.mul(h1, g_idx)
                for h2 in hset:
                    double.add(U.mul(m, h2))
            seen |= double
            if g_idx in set(hset):
                continue
            if U.inv[g_idx] in double:
                continue   # g^-1 in HgH: not antisymmetric
            g = Permutation._raw(U.elems[g_idx])
            specs.append(CosetDigraphSpec(G=G, H=H, g=g))
    return specs


_SWEEP_CACHE: dict = {}


def criterion_sweep(bounds: SearchBounds = DEFAULT_BOUNDS):
    """Criterion-vs-brute-force data over bundled groups of order <= 120.

    Returns (records, certified) where records are per-spec comparison
    tuples and certified collects the connected 2-arc-transitive
    instances for the factorization-lemma sweep.
    """
    key = id(DEFAULT_BOUNDS) if bounds is DEFAULT_BOUNDS else None
    if key is not None and key in _SWEEP_CACHE:
        return _SWEEP_CACHE[key]
    records = []
    certified = []
    for name, G in _bundled_groups(max_order=120):
        for spec in _valid_specs(G, bounds):
            criterion = analyze.coset_two_arc_criterion(spec, bounds)
            digraph, action_group = build_coset_digraph(spec, bounds)
            action = analyze.bind_action(digraph, action_group)
            brute = analyze.is_s_arc_transitive(action, 2, bounds)
            brute_bool = brute is True
            records.append((name, spec, criterion, brute_bool))
            if brute_bool and analyze.is_strongly_connected(digraph):
                certified.append((name, spec, digraph, action))
    result = (records, certified)
    if key is not None:
        _SWEEP_CACHE[key] = result
    return result


def _case_coset_criterion_sweep(bounds: SearchBounds) -> list:
    records, _ = criterion_sweep(bounds)
    mismatches = [(name, spec) for name, spec, crit, brute in records
                  if crit != brute]
    total = len(records)
    positive = sum(1 for _, _, crit, _ in records if crit)
    claims = [
        _claim(f"criterion equals brute force on {total} valid specs "
               f"({positive} two-arc-transitive)",
               "0 discrepancies", f"{len(mismatches)} discrepancies"),
    ]
    for name, spec in mismatches[:10]:
        claims.append(Claim(
            f"mismatch at {name}, H order {spec.H.order}, g {spec.g.cycle_string()}",
            "agreement", "mismatch", "fail", None))
    return claims


def _case_lemma22_sweep(bounds: SearchBounds) -> list:
    _, certified = criterion_sweep(bounds)
    claims = []
    failures_ab = 0
    failures_c = 0
    applicable_c = 0
    for name, spec, digraph, action in certified:
        coset_action = analyze.bind_action(digraph, action.group)
        # canonical 2-arc (Hg^-1, H, Hg)
        from .cosets import CosetAction
        act = CosetAction(spec.G, spec.H, bounds=bounds)
        u = act.label_of(spec.g.inverse())
        w = act.label_of(spec.g)
        data = analyze.two_arc_stabilizer_data(coset_action, (u, 0, w), bounds)
        report = analyze.verify_lemma_prime_factn(coset_action, data, bounds)
        if not report.applicable:
            continue
        if report.clause_a.status != "pass" or report.clause_b.status != "pass":
            failures_ab += 1
        if report.clause_c.status == "pass":
            applicable_c += 1
        elif report.clause_c.status == "fail":
            failures_c += 1
            applicable_c += 1
    claims.append(_claim(
        f"clauses (a),(b) over {len(certified)} certified instances",
        "0 failures", f"{failures_ab} failures"))
    claims.append(_claim(
        f"clause (c) over {applicable_c} instances with distinct arc stabilizers",
        "0 failures", f"{failures_c} failures"))
    return claims


def _case_rglr_tiny(bounds: SearchBounds) -> list:
    claims = []
    inconsistent = 0
    for name, G in _bundled_groups():
        if G.degree ** 2 > 100:
            continue
        try:
            report = analyze.lemma_rglr_hypothesis_check(G, bounds)
            holds = report.holds
            holds_text = str(holds)
        except BoundExceededError as exc:
            claims.append(Claim(
                f"{name}: hypothesis check", "evaluated",
                f"skipped ({exc.bound_name} bound)", "not-applicable", None))
            continue
        wreath_order = G.order ** 2 * 2
        if wreath_order > bounds.regular_search_order:
            claims.append(Claim(
                f"{name}: hypothesis {holds_text}; wreath search",
                "searched", f"skipped (order {wreath_order})",
                "not-applicable", None))
            continue
        witness = analyze.lemma_rglr_brute_force(G, 2, bounds)
        found = witness is not None
        consistent = not (holds and found)
        if not consistent:
            inconsistent += 1
        claims.append(_claim(
            f"{name}: hypothesis {holds_text}, regular subgroup in wreath "
            f"{'found' if found else 'none'}",
            "consistent", "consistent" if consistent else "inconsistent",
            witness=(witness.generators[0].cycle_string() if found else None)))
    claims.append(_claim("no instance passes the hypothesis and has a regular subgroup",
                         "0 inconsistencies", f"{inconsistent} inconsistencies"))
    return claims


def _case_zsigmondy_table(bounds: SearchBounds) -> list:
    mismatches = []
    for a in range(2, 17):
        for m in range(2, 11):
            expected = bool(primitive_prime_divisors(a, m))
            if zsigmondy_has_ppd(a, m) != expected:
                mismatches.append((a, m))
    claims = [
        _claim("theorem matches direct search for 2 <= a <= 16, 2 <= m <= 10",
               "0 mismatches", f"{len(mismatches)} mismatches"),
        _claim("ppd(2, 6)", "{7}", str(ppd(2, 6))),
    ]
    bad_congruence = []
    for a in (2, 3, 4, 5, 7, 8, 9, 11, 13, 16):
        f = factorize(a).factors[0][1]
        for m in range(2, 11):
            for r in ppd(a, m):
                if r % (f * m) != 1 or r <= f * m:
                    bad_congruence.append((a, m, r))
    claims.append(_claim(
        "every r in ppd(p^f, m) satisfies r = 1 mod fm and r > fm",
        "0 violations", f"{len(bad_congruence)} violations"))
    return claims


def _case_product_cycles(bounds: SearchBounds) -> list:
    c3 = build_digraph(3, [(0, 1), (1, 2), (2, 0)])
    c5 = build_digraph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])
    prod = direct_product(c3, c5, bounds)
    claims = [
        _claim("C3 x C5 vertex count", "15", str(prod.vertex_count)),
        _claim("C3 x C5 is a directed cycle", "True", str(is_directed_cycle(prod))),
    ]
    rng = random.Random(987654)
    bad = 0
    for _ in range(10):
        a = _random_digraph(rng)
        b = _random_digraph(rng)
        ab = direct_product(a, b, bounds)
        for s in range(5):
            if count_s_arcs(ab, s) != count_s_arcs(a, s) * count_s_arcs(b, s):
                bad += 1
    claims.append(_claim(
        "s-arc count multiplicativity for s <= 4 on 10 random pairs",
        "0 violations", f"{bad} violations"))
    return claims


def _random_digraph(rng: random.Random):
    n = rng.randint(2, 6)
    arcs = []
    used = set()
    for u in range(n):
        for v in range(u + 1, n):
            roll = rng.random()
            if roll < 0.35:
                arcs.append((u, v))
            elif roll < 0.7:
                arcs.append((v, u))
    return build_digraph(n, arcs)


_CASES = {
    "sp6_2_arith": _case_sp6_2_arith,
    "he_divisor": _case_he_divisor,
    "gamma_a5": _case_gamma_a5,
    "lemval_census": _case_lemval_census,
    "coset_criterion_sweep": _case_coset_criterion_sweep,
    "lemma22_sweep": _case_lemma22_sweep,
    "rglr_tiny": _case_rglr_tiny,
    "zsigmondy_table": _case_zsigmondy_table,
    "product_cycles": _case_product_cycles,
}

CASE_ORDER = (
    "sp6_2_arith",
    "he_divisor",
    "gamma_a5",
    "lemval_census",
    "coset_criterion_sweep",
    "lemma22_sweep",
    "rglr_tiny",
    "zsigmondy_table",
    "product_cycles",
)


def case_ids() -> tuple:
    return CASE_ORDER


def run_case(case_id: str, bounds: SearchBounds = DEFAULT_BOUNDS) -> CaseResult:
    if case_id not in _CASES:
        raise UnknownCaseError(case_id)
    start = time.perf_counter()
    claims = _CASES[case_id](bounds)
    elapsed = time.perf_counter() - start
    return CaseResult(case_id=case_id, claims=tuple(claims), elapsed=elapsed)


def run_all(bounds: SearchBounds = DEFAULT_BOUNDS) -> list:
    return [run_case(cid, bounds) for cid in CASE_ORDER]


def emit_report(results, stream) -> None:
    """JSON lines, one per claim, no timing fields."""
    for result in results:
        for claim in result.claims:
            record = {
                "case": result.case_id,
                "claim": f"{claim.description}: expected {claim.expected}, "
                         f"got {claim.actual}",
                "status": claim.status,
            }
            if claim.witness is not None:
                record["witness"] = claim.witness
            stream.write(json.dumps(record, sort_keys=True) + "\n")
