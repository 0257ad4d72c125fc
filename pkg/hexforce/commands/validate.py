"""validate: cross-checks every computation route against the others"""
import logging
from itertools import combinations
from math import comb
from typing import Callable, Optional, Sequence

import numpy as np

from hexforce.antiforcing import anti_forcing_polynomial, anti_forcing_results, is_anti_forcing_set
from hexforce.config import Settings
from hexforce.errors import CapExceededError, HexForceError
from hexforce.forcing import forcing_polynomial, forcing_results, is_forcing_set, spectrum_of
from hexforce.hexsystem import build_auxiliary_system, build_named, build_pyrene_chain, named_system, to_graph
from hexforce.matching import enumerate_perfect_matchings, face_masks, is_perfect_matching
from hexforce.models import HexSystem
from hexforce.poly.intpoly import IntPoly
from hexforce.poly.sequences import (
    PHI_ROUTES,
    SUM_ROUTES,
    af_sum,
    antiforcing_poly_closed,
    antiforcing_poly_recurrence,
    asymptotic_gap,
    forcing_poly_closed,
    forcing_poly_recurrence,
    fourth_order_residuals,
    idf,
    phi,
)
from hexforce.schemas import CheckResult, CheckStatus, Method, RunConfig, ValidationReport

logger = logging.getLogger(__name__)

HEADER = ("id", "status", "detail")

SEED_POLYNOMIALS = (
    ("forcing", "pyrene", IntPoly((0, 2, 4))),
    ("forcing", "phenanthrene", IntPoly((0, 1, 4))),
    ("forcing", "diphenyl", IntPoly((0, 0, 4))),
    ("antiforcing", "pyrene", IntPoly((0, 2, 2, 2))),
)

IDF_VALUES = {3: 1036, 4: 8068, 5: 58854, 6: 411978}
AF_VALUES = {5: 70956, 6: 496794, 7: 3380640, 8: 22531256}

ORACLE = {"forcing": Method.HEXAGON_ORACLE, "antiforcing": Method.COMPATIBLE_ORACLE}
SPREAD = {"forcing": 2, "antiforcing": 3}

ASYMPTOTIC_TOLERANCE = 1e-6
ASYMPTOTIC_GAP_AT_40 = 2e-3
ASYMPTOTIC_MIN_N = 20

Check = Callable[[], Optional[str]]


class ValidationSuite:
    """
    Runs the consistency matrix and collects one CheckResult per check.

    Every check body returns None on success or a failure message. Checks
    whose n range exceeds a cap are reported as skipped for the excess part.
    """

    def __init__(
        self,
        settings: Settings,
        max_n: Optional[int] = None,
        forcing_seed: Optional[Sequence[int]] = None,
    ):
        self.settings = settings
        self.max_n = max_n
        self.forcing_seed = IntPoly(forcing_seed) if forcing_seed else None
        self.results: list[CheckResult] = []
        self._brute: dict[tuple[str, HexSystem], list] = {}
        self._oracle: dict[tuple[str, int], IntPoly] = {}

    # --- bookkeeping -------------------------------------------------------

    def record(self, check_id: str, body: Check, detail: str = "") -> None:
        try:
            failure = body()
        except CapExceededError as e:
            logger.warning("%s skipped: %s", check_id, e)
            self.results.append(CheckResult(id=check_id, status=CheckStatus.SKIPPED, detail=str(e)))
            return
        except HexForceError as e:
            failure = f"{type(e).__name__}: {e}"
        if failure:
            logger.error("%s failed: %s", check_id, failure)
            self.results.append(CheckResult(id=check_id, status=CheckStatus.FAILED, detail=failure))
        else:
            self.results.append(CheckResult(id=check_id, status=CheckStatus.PASSED, detail=detail))

    def skip(self, check_id: str, detail: str) -> None:
        logger.warning("%s skipped: %s", check_id, detail)
        self.results.append(CheckResult(id=check_id, status=CheckStatus.SKIPPED, detail=detail))

    def ranged(self, check_id: str, cap_name: str, body: Callable[[int], Optional[str]], start: int = 1) -> None:
        """Run ``body`` for every n up to the cap; n past the cap but within --max-n is skipped"""
        cap = getattr(self.settings, cap_name)
        top = self.max_n if self.max_n is not None else cap
        last = min(top, cap)
        if last >= start:
            def every_n() -> Optional[str]:
                for n in range(start, last + 1):
                    failure = body(n)
                    if failure:
                        return f"n={n}: {failure}"
                return None
            self.record(check_id, every_n, detail=f"n={start}..{last}")
        if top > cap:
            self.skip(check_id, f"n={cap + 1}..{top} beyond {cap_name}={cap}")

    def report(self) -> ValidationReport:
        failures: list[str] = []
        for r in self.results:
            if r.status == CheckStatus.FAILED and r.id not in failures:
                failures.append(r.id)
        return ValidationReport(passed=not failures, checks=self.results, failures=failures)

    # --- cached computations ------------------------------------------------

    def brute(self, kind: str, system: HexSystem) -> list:
        key = (kind, system)
        if key not in self._brute:
            compute = forcing_results if kind == "forcing" else anti_forcing_results
            self._brute[key] = compute(system, Method.DEFINITION, self.settings)
        return self._brute[key]

    def oracle_polynomial(self, kind: str, n: int) -> IntPoly:
        key = (kind, n)
        if key not in self._oracle:
            compute = forcing_polynomial if kind == "forcing" else anti_forcing_polynomial
            self._oracle[key] = compute(build_pyrene_chain(n), ORACLE[kind], self.settings)
        return self._oracle[key]

    def recurrence(self, kind: str, n: int) -> IntPoly:
        if kind == "forcing":
            return forcing_poly_recurrence(n, self.forcing_seed)
        return antiforcing_poly_recurrence(n)

    # --- checks -------------------------------------------------------------

    def check_seed_polynomials(self) -> None:
        def body() -> Optional[str]:
            for kind, name, expected in SEED_POLYNOMIALS:
                system = named_system(name)
                target = system if system is not None else build_named(name)
                compute = forcing_polynomial if kind == "forcing" else anti_forcing_polynomial
                got = compute(target, Method.DEFINITION, self.settings)
                if got != expected:
                    return f"{kind} polynomial of {name} is {got}, expected {expected}"
            return None
        self.record("seed-polynomials-brute", body)

    def check_routes(self, kind: str) -> None:
        brute_cap = "brute_forcing_max_n" if kind == "forcing" else "brute_antiforcing_max_n"
        oracle = ORACLE[kind]
        closed = forcing_poly_closed if kind == "forcing" else antiforcing_poly_closed

        def brute_vs_oracle(n: int) -> Optional[str]:
            system = build_pyrene_chain(n)
            by_definition = [r.value for r in self.brute(kind, system)]
            compute = forcing_results if kind == "forcing" else anti_forcing_results
            by_oracle = [r.value for r in compute(system, oracle, self.settings)]
            mismatches = sum(a != b for a, b in zip(by_definition, by_oracle))
            if mismatches:
                return f"{mismatches} perfect matchings disagree"
            return None

        def oracle_vs_recurrence(n: int) -> Optional[str]:
            got, expected = self.oracle_polynomial(kind, n), self.recurrence(kind, n)
            return None if got == expected else f"oracle {got} != recurrence {expected}"

        def recurrence_vs_closed(n: int) -> Optional[str]:
            got, expected = self.recurrence(kind, n), closed(n)
            return None if got == expected else f"recurrence {got} != closed form {expected}"

        self.ranged(f"{kind}-brute-vs-oracle", brute_cap, brute_vs_oracle)
        self.ranged(f"{kind}-oracle-vs-recurrence", "oracle_max_n", oracle_vs_recurrence)
        self.ranged(f"{kind}-recurrence-vs-closed", "identity_max_n", recurrence_vs_closed, start=0)

    def check_auxiliary(self) -> None:
        check_id = "auxiliary-oracle-cross-check"
        caps = {"forcing": self.settings.brute_forcing_max_n, "antiforcing": self.settings.brute_antiforcing_max_n}
        cases = [(kind, n) for kind in ORACLE for n in (1, 2)]
        covered = [(kind, n) for kind, n in cases if n <= caps[kind]]
        excluded = [f"{kind} G_{n}" for kind, n in cases if n > caps[kind]]

        def body() -> Optional[str]:
            for kind, n in covered:
                system = build_auxiliary_system(n)
                compute = forcing_results if kind == "forcing" else anti_forcing_results
                by_definition = [r.value for r in self.brute(kind, system)]
                by_oracle = [r.value for r in compute(system, ORACLE[kind], self.settings)]
                if by_definition != by_oracle:
                    return f"G_{n}: {kind} numbers disagree"
            return None

        if covered:
            self.record(check_id, body, detail=", ".join(f"{kind} G_{n}" for kind, n in covered))
        if excluded:
            self.skip(check_id, f"{', '.join(excluded)} beyond the brute-force caps")

    def check_phi(self) -> None:
        def enumeration(n: int) -> Optional[str]:
            count = len(enumerate_perfect_matchings(to_graph(build_pyrene_chain(n))))
            values = {
                "enumeration": count,
                "recurrence": phi(n),
                "F(1)": forcing_poly_recurrence(n).eval_at(1),
                "Af(1)": antiforcing_poly_recurrence(n).eval_at(1),
            }
            return None if len(set(values.values())) == 1 else f"routes disagree: {values}"

        def routes(n: int) -> Optional[str]:
            values = {route: phi(n, route) for route in PHI_ROUTES}
            return None if len(set(values.values())) == 1 else f"routes disagree: {values}"

        self.ranged("phi-enumeration", "oracle_max_n", enumeration)
        self.ranged("phi-routes", "arithmetic_max_n", routes, start=0)

    def check_sums(self, name: str) -> None:
        compute = idf if name == "idf" else af_sum
        expected = IDF_VALUES if name == "idf" else AF_VALUES
        short = "idf" if name == "idf" else "af"

        def routes(n: int) -> Optional[str]:
            values = {route: compute(n, route) for route in SUM_ROUTES}
            return None if len(set(values.values())) == 1 else f"routes disagree: {values}"

        def known_values() -> Optional[str]:
            for n, value in expected.items():
                for route in SUM_ROUTES:
                    got = compute(n, route)
                    if got != value:
                        return f"n={n} by {route}: {got}, expected {value}"
            return None

        def fourth_order() -> Optional[str]:
            top = self.settings.arithmetic_max_n
            residuals = fourth_order_residuals([compute(n) for n in range(top + 1)])
            bad = [k + 2 for k, r in enumerate(residuals) if r]
            return f"fails at n={bad}" if bad else None

        self.ranged(f"{short}-routes", "arithmetic_max_n", routes, start=0)
        self.record(f"{short}-known-values", known_values, detail=f"n={min(expected)}..{max(expected)}")
        self.record(f"{short}-fourth-order", fourth_order, detail=f"n<={self.settings.arithmetic_max_n}")

    def check_spectra(self, kind: str) -> None:
        spread = SPREAD[kind]

        def by_oracle(n: int) -> Optional[str]:
            report = spectrum_of(self.oracle_polynomial(kind, n))
            if report.support != list(range(n, spread * n + 1)) or not report.contiguous:
                return f"support {report.support}, expected [{n}, {spread * n}]"
            return None

        def by_degree(n: int) -> Optional[str]:
            poly = self.recurrence(kind, n)
            if poly.valuation() != n or poly.degree() != spread * n:
                return f"exponents [{poly.valuation()}, {poly.degree()}], expected [{n}, {spread * n}]"
            if any(poly[k] <= 0 for k in range(n, spread * n + 1)):
                return "nonpositive coefficient inside the spectrum"
            return None

        self.ranged(f"{kind}-spectrum-oracle", "spectrum_oracle_max_n", by_oracle)
        self.ranged(f"{kind}-spectrum-degree", "identity_max_n", by_degree)

    def check_asymptotics(self, name: str) -> None:
        check_id = "asymptotic-idf" if name == "idf" else "asymptotic-af"
        top = self.settings.arithmetic_max_n
        if top < ASYMPTOTIC_MIN_N:
            self.skip(check_id, f"arithmetic_max_n={top} below {ASYMPTOTIC_MIN_N}")
            return

        def body() -> Optional[str]:
            gaps = [asymptotic_gap(name, n) for n in range(1, top + 1)]
            for earlier, later in zip(gaps, gaps[1:]):
                if abs(later.gap) >= abs(earlier.gap):
                    return f"gap does not shrink at n={later.n}"
            last = gaps[-1]
            if abs(last.corrected) >= ASYMPTOTIC_TOLERANCE:
                return f"first-order corrected gap {last.corrected:.3e} at n={top}"
            if top >= 40 and abs(last.gap) >= ASYMPTOTIC_GAP_AT_40:
                return f"gap {last.gap:.3e} at n={top}"
            return None

        self.record(check_id, body, detail=f"n={top}")

    def check_symmetric_difference(self) -> None:
        def body() -> Optional[str]:
            g = to_graph(build_pyrene_chain(2))
            for m in enumerate_perfect_matchings(g):
                for face in face_masks(g):
                    if face.is_alternating(m.mask) and not is_perfect_matching(g, m.mask ^ face.edges):
                        return f"matching {list(m.edges)} flipped on {list(face.cycle)}"
            return None
        self.record("symmetric-difference-closure", body, detail="n=2")

    def check_witnesses(self) -> None:
        rng = np.random.default_rng(self.settings.random_seed)
        sample_size = self.settings.witness_sample_size

        def smaller_subsets(pool: list[int], k: int):
            if comb(len(pool), k) <= sample_size:
                return [list(c) for c in combinations(pool, k)]
            return [sorted(int(pool[i]) for i in rng.choice(len(pool), size=k, replace=False))
                    for _ in range(sample_size)]

        def verify(kind: str, system: HexSystem) -> Optional[str]:
            g = to_graph(system)
            matchings = enumerate_perfect_matchings(g)
            is_set = is_forcing_set if kind == "forcing" else is_anti_forcing_set
            for m, result in zip(matchings, self.brute(kind, system)):
                if len(result.witness_set) != result.value or not is_set(g, m, result.witness_set):
                    return f"{kind} witness {result.witness_set} of {list(m.edges)} does not verify"
                if result.value == 0:
                    continue
                if kind == "forcing":
                    pool = list(m.edges)
                else:
                    pool = [e for e in range(g.num_edges) if e not in m]
                for subset in smaller_subsets(pool, result.value - 1):
                    if is_set(g, m, subset):
                        return f"{kind} set {subset} smaller than the minimum for {list(m.edges)}"
            return None

        def body() -> Optional[str]:
            failure = verify("forcing", build_pyrene_chain(min(2, self.settings.brute_forcing_max_n)))
            if failure:
                return failure
            return verify("antiforcing", build_pyrene_chain(min(2, self.settings.brute_antiforcing_max_n)))

        self.record("witness-reverification", body, detail=f"sample size {sample_size}")

    def run(self) -> ValidationReport:
        self.check_seed_polynomials()
        for kind in ("forcing", "antiforcing"):
            self.check_routes(kind)
        self.check_auxiliary()
        self.check_phi()
        for name in ("idf", "af_sum"):
            self.check_sums(name)
        for kind in ("forcing", "antiforcing"):
            self.check_spectra(kind)
        for name in ("idf", "af_sum"):
            self.check_asymptotics(name)
        self.check_symmetric_difference()
        self.check_witnesses()
        report = self.report()
        logger.info(
            "validation: %d checks, %d failed",
            len(report.checks), len(report.failures),
        )
        return report


def run(config: RunConfig, settings: Settings) -> ValidationReport:
    return ValidationSuite(settings, config.max_n, config.forcing_seed).run()


def csv_rows(report: ValidationReport) -> tuple[tuple[str, ...], list[list]]:
    return HEADER, [[c.id, c.status.value, c.detail] for c in report.checks]
