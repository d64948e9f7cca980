"""Exhaustive verification suites over composition and parameter sweeps.

Each suite re-checks one family of structural facts used by the closed-form
expansions: involution and preservation properties of phi, reversal duality
of the prefix statistics, the solver identities and coefficient bounds, the
fiber structure of the partial reversal, nonnegativity of the grouped
expansions, and the deletion identities.  Suites report a checked count and
a list of counterexample descriptions (empty means the sweep passed).

Sweeps over (a, b) parameter pairs are pure and independent, so the heavy
suites optionally fan out over a process pool; results are merged in sorted
task order, making output independent of the worker count.
"""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from .coefficients import (
    WClass,
    classify,
    coeff_c_doubleprime,
    coeff_c_prime,
    coeff_D,
    delta,
    fiber,
    phi,
    psi,
    solve_psqt,
    split_LR,
)
from .compositions import Composition, compositions_of, format_parts, weight_positive_compositions
from .graphs import (
    Graph,
    build_tadpole,
    build_theta,
    closed_form_clock,
    closed_form_cycle_chord,
    csf_pbasis,
    verify_triple_deletion,
)
from .symfunc import Basis, BasisVector, first_difference

MAX_REPORTED_VIOLATIONS = 50

SUITES = (
    "phi-involution",
    "theta-duality",
    "lemma-bounds",
    "fiber",
    "c-doubleprime",
    "positivity",
    "triple-deletion",
)


@dataclass
class SuiteResult:
    name: str
    checked: int = 0
    violations: List[str] = field(default_factory=list)
    notes: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def fail(self, message: str) -> None:
        if len(self.violations) < MAX_REPORTED_VIOLATIONS:
            self.violations.append(message)
        elif len(self.violations) == MAX_REPORTED_VIOLATIONS:
            self.violations.append("... further violations suppressed")


@dataclass
class SweepConfig:
    """Bundle of the CLI verification options."""

    suite: str
    n: Optional[int] = None
    n_max: Optional[int] = None
    a: Optional[int] = None
    b: Optional[int] = None
    a_max: Optional[int] = None
    b_max: Optional[int] = None
    count: int = 25
    seed: int = 2024
    workers: int = 1


def clock_pairs(n: int) -> List[Tuple[int, int]]:
    """All (a, b) with a >= b >= 2 and a + b + 1 = n."""
    return [(n - 1 - b, b) for b in range(2, (n - 1) // 2 + 1)]


def theta_triples(n: int, min_c: int = 1) -> List[Tuple[int, int, int]]:
    """All (a, b, c) with a >= b >= c >= min_c, b >= 2, a + b + c - 1 = n."""
    triples = []
    for c in range(min_c, n):
        for b in range(max(c, 2), n):
            a = n + 1 - b - c
            if a >= b:
                triples.append((a, b, c))
    return sorted(triples)


def _n_range(config: SweepConfig, default_max: int, lo: int = 1) -> List[int]:
    if config.n is not None:
        return [config.n]
    return list(range(lo, (config.n_max or default_max) + 1))


# ---------------------------------------------------------------------------
# phi-involution


def run_phi_involution(ns: Sequence[int]) -> SuiteResult:
    result = SuiteResult("phi-involution")
    for n in ns:
        for I in compositions_of(n):
            rho = I.rho()
            weight = I.weight
            for a in range(1, n + 1):
                J = phi(I, a)
                result.checked += 1
                if phi(J, a) != I:
                    result.fail(f"phi not an involution at I={I}, a={a}")
                if J.rho() != rho:
                    result.fail(f"phi changed the partition at I={I}, a={a}")
                if J.weight != weight or J.parts[0] != I.parts[0]:
                    result.fail(f"phi changed the weight at I={I}, a={a}")
                if classify(I, a).in_A and not classify(J, a).in_A:
                    result.fail(
                        f"phi left the exact-suffix family at I={I}, a={a}"
                    )
    return result


# ---------------------------------------------------------------------------
# theta-duality


def run_theta_duality(ns: Sequence[int]) -> SuiteResult:
    result = SuiteResult("theta-duality")
    for n in ns:
        for I in compositions_of(n):
            rev = I.reversed()
            for a in range(0, n + 1):
                result.checked += 1
                if I.theta_minus(a) != rev.theta_plus(n - a):
                    result.fail(f"undershoot/overshoot duality fails at I={I}, a={a}")
    return result


# ---------------------------------------------------------------------------
# lemma-bounds


def _check_solver_identities(result: SuiteResult, I: Composition, a: int, b: int) -> None:
    n = I.modulus
    sol = solve_psqt(I, b)
    parts = I.parts
    i1 = parts[0]
    ip_minus_s = parts[sol.p - 1] - sol.s
    result.checked += 1
    if ip_minus_s != I.reversed().theta_minus(a):
        result.fail(f"i_p - s mismatch with reversed undershoot at I={I}, a={a}")
    if sol.q < sol.p - 1:
        result.fail(f"q < p - 1 at I={I}, b={b}")
    if sol.q >= sol.p and sum(parts[sol.p - 1 : sol.q]) != i1 + sol.s - sol.t:
        result.fail(f"|i_p..i_q| != i_1 + s - t at I={I}, b={b}")
    if (sol.q == sol.p - 1) != (i1 <= ip_minus_s):
        result.fail(f"q = p - 1 branch condition fails at I={I}, b={b}")
    tail = n - I.prefix_moduli[sol.q]
    if a - i1 != tail - sol.t:
        result.fail(f"a - i_1 != |i_(q+1)..i_z| - t at I={I}, b={b}")
    if (sol.q == I.length) != (i1 > a):
        result.fail(f"q = z iff i_1 > a fails at I={I}, a={a}")


def _check_gt_bounds(
    result: SuiteResult, I: Composition, a: int, b: int, counts: Dict[str, int]
) -> None:
    n = I.modulus
    sol = solve_psqt(I, b)
    i1 = I.parts[0]
    in_A = classify(I, a).in_A
    D = coeff_D(I, a, b)
    result.checked += 1
    if D < i1 - 2:
        result.fail(f"D below i_1 - 2 on W_> at I={I}, (a,b)=({a},{b})")
    # q - p equals the largest j <= z - p whose suffix after position p + j
    # still has modulus above a - i_1
    best = max(
        (j for j in range(0, I.length - sol.p + 1)
         if n - I.prefix_moduli[sol.p + j] > a - i1),
        default=None,
    )
    if best != sol.q - sol.p:
        result.fail(f"suffix characterization of q - p fails at I={I}, a={a}")
    if sol.q == sol.p:
        counts["W> q=p"] += 1
    elif in_A:
        counts["W> q>p exact-suffix"] += 1
        if i1 < 3 or D < 2 * i1 - 3:
            result.fail(f"exact-suffix W_> bound fails at I={I}, (a,b)=({a},{b})")
    else:
        counts["W> q>p no-exact-suffix"] += 1
        if i1 < 4 or D < i1 + 2:
            result.fail(f"no-exact-suffix W_> bound fails at I={I}, (a,b)=({a},{b})")
    if sol.q - sol.p >= 1:
        preimages = fiber(I, a, b)
        for r, H in enumerate(preimages, start=1):
            if coeff_D(H, a, b) < 0:
                result.checked += 1
                if not (r == sol.q - sol.p or (in_A and r == 1)):
                    result.fail(
                        f"negative fiber coefficient at interior index r={r}, I={I}"
                    )


def _check_le_closed_form(
    result: SuiteResult, I: Composition, a: int, b: int, counts: Dict[str, int]
) -> None:
    counts["W<="] += 1
    sol = solve_psqt(I, b)
    i1 = I.parts[0]
    ip = I.parts[sol.p - 1]
    D = coeff_D(I, a, b)
    result.checked += 1
    if D != (sol.s - 1) * (ip - sol.s - i1) - 2 or D < -2:
        result.fail(f"W_<= closed form fails at I={I}, (a,b)=({a},{b})")
    if D < 0 and sol.s not in (1, 2, ip - i1):
        result.fail(f"negative W_<= coefficient with s={sol.s} at I={I}")


def run_lemma_bounds(ns: Sequence[int]) -> SuiteResult:
    result = SuiteResult("lemma-bounds")
    counts: Dict[str, int] = {
        "W> q=p": 0,
        "W> q>p exact-suffix": 0,
        "W> q>p no-exact-suffix": 0,
        "W<=": 0,
    }
    for n in ns:
        # solver identities hold for every split n = a + b + 1, not only the
        # clock-parameter range
        for b in range(1, n - 1):
            a = n - 1 - b
            for I in compositions_of(n):
                _check_solver_identities(result, I, a, b)
        for a, b in clock_pairs(n):
            for I in weight_positive_compositions(n):
                if I.parts[0] == 1:
                    result.checked += 1
                    if coeff_D(I, a, b) < 0:
                        result.fail(f"first-part-1 coefficient negative at I={I}")
            for I in compositions_of(n, 2):
                kind = classify(I, a).wclass
                if kind is WClass.W_GT:
                    _check_gt_bounds(result, I, a, b, counts)
                else:
                    _check_le_closed_form(result, I, a, b, counts)
        # lower bound of the phi-twisted coefficient by its delta term on the
        # exact-suffix family, for every three-path parameter choice
        for a, b, c in theta_triples(n, min_c=2):
            for I in weight_positive_compositions(n):
                if I.reversed().theta_plus(a) != 0:
                    continue
                result.checked += 1
                if coeff_c_prime(I, a, b, c) < delta(I, b + c - 1):
                    result.fail(
                        f"c' below its delta term at I={I}, (a,b,c)=({a},{b},{c})"
                    )
    result.notes.extend(f"{key}: {value}" for key, value in sorted(counts.items()))
    return result


# ---------------------------------------------------------------------------
# fiber

# Known fixtures at (a, b) = (6, 4): preimage lists and their D values.
_FIBER_FIXTURES = {
    (7, 2, 2): (((2, 7, 2), 2), ((2, 2, 7), -2)),
    (5, 2, 2, 2): (((2, 5, 2, 2), -2), ((2, 2, 5, 2), -2)),
}


def run_fiber(ns: Sequence[int], a: Optional[int] = None, b: Optional[int] = None) -> SuiteResult:
    result = SuiteResult("fiber")
    for n in ns:
        pairs = [(a, b)] if a is not None and b is not None else clock_pairs(n)
        for pa, pb in pairs:
            if pa + pb + 1 != n or not (pa >= pb >= 2):
                result.fail(f"invalid pair (a,b)=({pa},{pb}) for n={n}")
                continue
            greater: List[Composition] = []
            lesser: List[Composition] = []
            for I in compositions_of(n, 2):
                kind = classify(I, pa).wclass
                (greater if kind is WClass.W_GT else lesser).append(I)
            seen: Dict[Composition, Composition] = {}
            for I in greater:
                sol = solve_psqt(I, pb)
                preimages = fiber(I, pa, pb)
                for r, H in enumerate(preimages, start=1):
                    result.checked += 1
                    if psi(H, pa) != I:
                        result.fail(f"fiber element {H} does not map back to {I}")
                    if classify(H, pa).wclass is not WClass.W_LE:
                        result.fail(f"fiber element {H} of {I} is not in W_<=")
                    if H.rho() != I.rho():
                        result.fail(f"fiber element {H} changes the partition of {I}")
                    expected_suffix = Composition(I.parts[sol.p + r :])
                    if split_LR(H, pa)[1] != expected_suffix:
                        result.fail(f"fiber element {H} has the wrong suffix split")
                    if H in seen:
                        result.fail(f"{H} appears in two fibers: {seen[H]} and {I}")
                    seen[H] = I
                if (n, pa, pb) == (11, 6, 4) and I.parts in _FIBER_FIXTURES:
                    expected = _FIBER_FIXTURES[I.parts]
                    result.checked += 1
                    got = tuple(
                        (H.parts, coeff_D(H, pa, pb)) for H in preimages
                    )
                    if got != expected:
                        result.fail(
                            f"fixture fiber mismatch at I={I}: got {got}, want {expected}"
                        )
            for J in lesser:
                result.checked += 1
                image = psi(J, pa)
                if classify(image, pa).wclass is not WClass.W_GT:
                    result.fail(f"psi image {image} of {J} is not in W_>")
                if J not in seen:
                    result.fail(f"{J} missing from the fiber of its image {image}")
    return result


# ---------------------------------------------------------------------------
# c-doubleprime


def _cdp_task(task: Tuple[int, int]) -> Tuple[int, List[str]]:
    a, b = task
    n = a + b + 1
    checked = 0
    violations: List[str] = []
    grouped: Dict = {}
    for I in compositions_of(n, 2):
        if classify(I, a).wclass is not WClass.W_GT:
            continue
        value = coeff_c_doubleprime(I, a, b)
        checked += 1
        if value < 0:
            violations.append(
                f"fiber-grouped coefficient {value} < 0 at I={I}, (a,b)=({a},{b})"
            )
        lam = I.rho()
        grouped[lam] = grouped.get(lam, 0) + value
    # the first-part-1 block plus the fiber-grouped block must reassemble the
    # full clock expansion
    for I in weight_positive_compositions(n):
        if I.parts[0] == 1:
            lam = I.rho()
            grouped[lam] = grouped.get(lam, 0) + coeff_D(I, a, b) * I.weight
    checked += 1
    regrouped = BasisVector(Basis.E, n, grouped)
    direct = closed_form_clock(a, b).grouped_by_rho()
    if not regrouped.equals(direct):
        diff = first_difference(regrouped, direct)
        violations.append(
            f"fiber regrouping disagrees with the clock expansion at (a,b)=({a},{b}): {diff}"
        )
    return checked, violations


def run_c_doubleprime(
    a_max: int, b_max: int, n_cap: int, workers: int = 1
) -> SuiteResult:
    result = SuiteResult("c-doubleprime")
    tasks = sorted(
        (a, b)
        for a in range(2, a_max + 1)
        for b in range(2, min(a, b_max) + 1)
        if a + b + 1 <= n_cap
    )
    for checked, violations in _run_tasks(_cdp_task, tasks, workers):
        result.checked += checked
        for message in violations:
            result.fail(message)
    result.notes.append(f"pairs swept: {len(tasks)}")
    return result


# ---------------------------------------------------------------------------
# positivity


def _positivity_task(task: Tuple[str, int, int]):
    family, a, b = task
    checked = 0
    violations: List[str] = []
    if family == "clock":
        expansion = closed_form_clock(a, b)
    else:
        expansion = closed_form_cycle_chord(a, b)
        for I, (coeff, weight) in expansion.entries.items():
            checked += 1
            if coeff * weight < 0:
                violations.append(
                    f"negative cycle-chord term at I={I}, (a,b)=({a},{b})"
                )
    grouped = expansion.grouped_by_rho()
    minimum = min(grouped.terms.values(), default=0)
    checked += len(grouped.terms)
    if minimum < 0:
        negatives = [
            format_parts(lam) for lam, c in grouped.items_sorted() if c < 0
        ]
        violations.append(
            f"negative grouped coefficient for {family} (a,b)=({a},{b}): {negatives}"
        )
    return checked, violations, minimum


def run_positivity(n_max: int, workers: int = 1) -> SuiteResult:
    result = SuiteResult("positivity")
    tasks: List[Tuple[str, int, int]] = []
    for n in range(5, n_max + 1):
        tasks.extend(("clock", a, b) for a, b in clock_pairs(n))
    for n in range(4, n_max + 1):
        tasks.extend(
            ("cycle-chord", a, n - a) for a in range(2, n - 1) if n - a >= 2
        )
    tasks.sort()
    overall_min = None
    for checked, violations, minimum in _run_tasks(_positivity_task, tasks, workers):
        result.checked += checked
        for message in violations:
            result.fail(message)
        if overall_min is None or minimum < overall_min:
            overall_min = minimum
    result.notes.append(f"expansions swept: {len(tasks)}")
    result.notes.append(f"smallest grouped coefficient: {overall_min}")
    return result


# ---------------------------------------------------------------------------
# triple-deletion


def _random_stable_triple_instance(
    rng: random.Random, max_vertices: int
) -> Tuple[Graph, Tuple[int, int, int]]:
    # each identity costs six oracle calls at base_edges + up to 3 edges,
    # so keep instances comfortably inside the 2^m wall
    while True:
        n = rng.randint(5, max_vertices)
        pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
        count = rng.randint(n - 1, min(11, len(pairs)))
        edges = rng.sample(pairs, count)
        graph = Graph(n, edges)
        stable = [
            (x, y, z)
            for x in range(n)
            for y in range(x + 1, n)
            for z in range(y + 1, n)
            if not (
                graph.has_edge(x, y) or graph.has_edge(x, z) or graph.has_edge(y, z)
            )
        ]
        if stable:
            return graph, rng.choice(stable)


def theta_deletion_instance(a: int, b: int, c: int):
    """The canonical deletion setup on a three-path graph.

    Removes the hub-side first edges of the b- and c-paths; the stable
    triple is (first c-interior, first b-interior, hub 0).  Re-adding the
    two edges restores the original graph, and the two single-edge variants
    are a tadpole and a rebalanced three-path graph.
    """
    if c < 2:
        raise ValueError(f"deletion instance needs c >= 2, got {(a, b, c)}")
    theta = build_theta(a, b, c)
    b_first = 2 + (a - 1)
    c_first = 2 + (a - 1) + (b - 1)
    base_edges = [
        e for e in theta.edges if e not in ((0, b_first), (0, c_first))
    ]
    return Graph(theta.vertex_count, base_edges), (c_first, b_first, 0)


def run_triple_deletion(
    count: int, seed: int, max_vertices: int = 10
) -> SuiteResult:
    result = SuiteResult("triple-deletion")
    rng = random.Random(seed)
    for index in range(count):
        graph, triple = _random_stable_triple_instance(rng, max_vertices)
        result.checked += 1
        if not verify_triple_deletion(graph, triple):
            result.fail(
                f"deletion identities fail on instance {index}: "
                f"{graph.to_json_dict()} triple={triple}"
            )
    base, triple = theta_deletion_instance(3, 3, 3)
    result.checked += 1
    if not verify_triple_deletion(base, triple):
        result.fail("deletion identities fail on the three-path instance (3,3,3)")
    # the same deletion written as a four-graph identity
    lhs = csf_pbasis(build_theta(3, 3, 3))
    rhs = (
        csf_pbasis(build_theta(4, 3, 2))
        .add(csf_pbasis(build_tadpole(6, 2)))
        .subtract(csf_pbasis(build_tadpole(5, 3)))
    )
    result.checked += 1
    if not lhs.equals(rhs):
        result.fail("four-graph deletion identity fails at (3,3,3)")
    result.notes.append(f"random instances: {count}, plus the (3,3,3) instance")
    return result


# ---------------------------------------------------------------------------
# dispatch


def _run_tasks(fn, tasks, workers: int):
    if workers > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            yield from pool.map(fn, tasks)
    else:
        yield from map(fn, tasks)


def run_suite(config: SweepConfig, n_budget: int = 20) -> SuiteResult:
    """Run one named suite over the configured ranges."""
    name = config.suite
    if name == "phi-involution":
        return run_phi_involution(_n_range(config, default_max=10))
    if name == "theta-duality":
        return run_theta_duality(_n_range(config, default_max=10))
    if name == "lemma-bounds":
        return run_lemma_bounds(_n_range(config, default_max=10, lo=5))
    if name == "fiber":
        if config.a is not None and config.b is not None:
            ns = [config.a + config.b + 1]
        else:
            ns = _n_range(config, default_max=10, lo=5)
        return run_fiber(ns, config.a, config.b)
    if name == "c-doubleprime":
        a_max = config.a_max if config.a_max is not None else 8
        b_max = config.b_max if config.b_max is not None else 8
        return run_c_doubleprime(a_max, b_max, n_budget, workers=config.workers)
    if name == "positivity":
        n_max = config.n_max if config.n_max is not None else 14
        return run_positivity(n_max, workers=config.workers)
    if name == "triple-deletion":
        return run_triple_deletion(config.count, config.seed)
    raise ValueError(f"unknown suite {name!r}; expected one of {SUITES}")
