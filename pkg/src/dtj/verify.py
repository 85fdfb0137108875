"""Named invariant suites and the report the ``verify`` subcommand emits."""

from __future__ import annotations

import json
import os
import random
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator

from . import bailey, cjp, knots, kzseries, takata
from .qalgebra import lp_invert_q, qfactorial, RationalFn

GRID_ENV = "DTJ_GRID"
SUITES = ("lemmas", "oracles", "mirrors", "kz", "bailey")


@dataclass(frozen=True)
class Grid:
    m: int
    p: int
    N: int

    @classmethod
    def parse(cls, text: str) -> "Grid":
        parts = text.replace(" ", "").split(",")
        if len(parts) != 3 or not all(s.isdigit() for s in parts):
            raise ValueError(f"grid must look like 'mMax,pMax,NMax', got {text!r}")
        m, p, N = (int(s) for s in parts)
        if p < 1 or N < 1:
            raise ValueError("grid needs pMax >= 1 and NMax >= 1")
        return cls(m, p, N)

    def __str__(self) -> str:
        return f"{self.m},{self.p},{self.N}"


# per-suite bounds when neither --grid nor DTJ_GRID is given
DEFAULT_GRIDS = {
    "lemmas": Grid(4, 4, 1),
    "oracles": Grid(2, 2, 5),
    "mirrors": Grid(2, 2, 5),
    "kz": Grid(2, 2, 8),
    "bailey": Grid(0, 4, 8),
}


@dataclass(frozen=True)
class Check:
    name: str
    params: dict
    run: Callable[[], bool]


@dataclass
class CheckResult:
    name: str
    params: dict
    passed: bool
    elapsed_ms: float
    error: str | None = None

    def to_json(self, timing: bool = True) -> dict:
        out = {"name": self.name, "params": self.params, "passed": self.passed}
        if timing:
            out["elapsed_ms"] = round(self.elapsed_ms, 3)
        if self.error is not None:
            out["error"] = self.error
        return out


@dataclass
class VerifySuiteReport:
    suite: str
    grid: dict
    results: list[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    @property
    def status(self) -> str:
        return "pass" if self.passed else "fail"

    def failures(self) -> list[CheckResult]:
        return [r for r in self.results if not r.passed]

    def to_json(self, timing: bool = True) -> dict:
        return {
            "suite": self.suite,
            "grid": self.grid,
            "checks": [r.to_json(timing) for r in self.results],
            "total": len(self.results),
            "failed": len(self.failures()),
            "status": self.status,
        }

    def dumps(self, timing: bool = True) -> str:
        return json.dumps(self.to_json(timing), indent=2, sort_keys=True)


def _span(lo: int, hi: int) -> range:
    return range(lo, hi + 1)


# -- suites -------------------------------------------------------------------


def lemma_checks(g: Grid) -> Iterator[Check]:
    for fam in (knots.MINUSMINUS, knots.MINUSPLUS):
        for m in _span(1, g.m):
            for p in _span(1, g.p):
                params = {"family": fam, "m": m, "p": p}
                yield Check("tables_lemma=general", params, lambda m=m, p=p, fam=fam: (
                    knots.takata_tables_lemma(m, p, fam)
                    == knots.takata_tables_general(knots.two_bridge_params(m, p, fam))))
                yield Check("sum_patterns", params, lambda m=m, p=p, fam=fam: knots.sum_patterns_hold(m, p, fam))
    for p in _span(1, min(g.p, 3)):
        yield Check("a_closed_form_m2_corrected", {"p": p, "samples": 50}, lambda p=p: a_closed_form_holds(p, 50))


def a_closed_form_holds(p: int, samples: int, seed: int = 0, closed=None) -> bool:
    """Compare a simplified a(n) for b(10p+1, 8p+1) with the raw table sum on random indices."""
    closed = closed or takata.takata_a_closed_m2_corrected
    rng = random.Random(seed + p)
    tb = knots.TwoBridge(10 * p + 1, 8 * p + 1)
    for _ in range(samples):
        nbar = sorted(rng.randint(0, 12) for _ in range(5 * p))
        if takata.raw_a(tb, nbar) != closed(p, nbar):
            return False
    return True


def oracle_checks(g: Grid) -> Iterator[Check]:
    for m in _span(1, g.m):
        for p in _span(1, g.p):
            for N in _span(1, g.N):
                params = {"m": m, "p": p, "N": N}
                yield Check("thm1=takata", params, lambda m=m, p=p, N=N: cjp.jones_thm1(m, p, N) == takata.takata_colored_jones(
                    knots.two_bridge_params(m, p, knots.MINUSMINUS), N))
                yield Check("thm2=takata", params, lambda m=m, p=p, N=N: cjp.jones_thm2(m, p, N) == takata.takata_colored_jones(
                    knots.two_bridge_params(m, p, knots.MINUSPLUS), N))
                yield Check("thm3pos=walsh", params, lambda m=m, p=p, N=N: cjp.jones_thm3_pos(m, p, N) == cjp.walsh_colored_jones(m, p, N))
                yield Check("thm3neg=walsh", params, lambda m=m, p=p, N=N: cjp.jones_thm3_neg(m, p, N) == cjp.walsh_colored_jones(m, -p, N))
    for p in _span(1, g.p):
        for N in _span(1, g.N):
            yield Check("habiro=thm3neg", {"p": p, "N": N}, lambda p=p, N=N: cjp.habiro_left_torus_check(p, N) == cjp.jones_thm3_neg(1, p, N))


def mirror_checks(g: Grid) -> Iterator[Check]:
    for m in _span(0, g.m):
        for p in _span(1, g.p):
            for N in _span(1, g.N):
                params = {"m": m, "p": p, "N": N}
                if m >= 1:
                    yield Check("invert(thm3pos(m+1))=thm1", params, lambda m=m, p=p, N=N: lp_invert_q(cjp.jones_thm3_pos(m + 1, p, N)) == cjp.jones_thm1(m, p, N))
                yield Check("invert(thm3neg(m+1))=thm2", params, lambda m=m, p=p, N=N: lp_invert_q(cjp.jones_thm3_neg(m + 1, p, N)) == cjp.jones_thm2(m, p, N))
                if m == 0:
                    yield Check("invert(thm3neg(1))=torus", params, lambda p=p, N=N: lp_invert_q(cjp.jones_thm3_neg(1, p, N)) == cjp.jones_torus(p, N))


def kz_checks(g: Grid) -> Iterator[Check]:
    for m in _span(1, g.m):
        for p in _span(1, g.p):
            for N in _span(1, g.N):
                params = {"m": m, "p": p, "N": N}
                for tag in kzseries.SERIES:
                    yield Check(f"kz_relation_{tag}", params, lambda tag=tag, m=m, p=p, N=N: kzseries.check_relation(tag, m, p, N))
    for m in _span(0, g.m):
        for p in _span(1, g.p):
            for N in _span(1, g.N):
                params = {"m": m, "p": p, "N": N}
                yield Check("kz_duality_1", params, lambda m=m, p=p, N=N: kzseries.check_duality_1(m, p, N))
                if m >= 1:
                    yield Check("kz_duality_2", params, lambda m=m, p=p, N=N: kzseries.check_duality_2(m, p, N))


def _beta_matches(name: str, p: int, n_max: int) -> bool:
    """(q)_n beta_n of the p-th iterated pair against the chain sums c_{p,n} / d_{p,n}."""
    bp = bailey.iterated_pair(name, p)
    for n in range(n_max + 1):
        target = RationalFn(cjp.c_poly(p, n)) if name == "slater" else cjp.d_poly(p, n)
        if bp.beta(n) * qfactorial(n) != target:
            return False
    return True


def bailey_checks(g: Grid) -> Iterator[Check]:
    n_max = g.N
    for name in ("slater", "walsh"):
        yield Check("base_pair", {"pair": name, "n": max(n_max, 10)},
                    lambda name=name: bailey.verify_bailey_pair(bailey.base_pair(name), max(n_max, 10)))
        for p in _span(1, g.p):
            params = {"pair": name, "p": p, "n": n_max}
            yield Check("limit_steps=closed_form", params, lambda name=name, p=p: bailey.pairs_agree(
                bailey.iterate_limit(bailey.base_pair(name), p - 1), bailey.iterated_pair(name, p), n_max))
            yield Check("iterated_pair_verifies", params, lambda name=name, p=p: bailey.verify_bailey_pair(
                bailey.iterated_pair(name, p), n_max))
            yield Check("beta_times_qfactorial", params, lambda name=name, p=p: _beta_matches(name, p, n_max))


_BUILDERS: dict[str, Callable[[Grid], Iterable[Check]]] = {
    "lemmas": lemma_checks,
    "oracles": oracle_checks,
    "mirrors": mirror_checks,
    "kz": kz_checks,
    "bailey": bailey_checks,
}


def _run(check: Check) -> CheckResult:
    start = time.perf_counter()
    try:
        ok, err = bool(check.run()), None
    except Exception as exc:  # a crash is a failed check, not a crashed runner
        ok, err = False, f"{type(exc).__name__}: {exc}"
    return CheckResult(check.name, check.params, ok, (time.perf_counter() - start) * 1000.0, err)


def resolve_grid(suite: str, grid: str | None) -> Grid:
    text = grid if grid is not None else os.environ.get(GRID_ENV)
    return Grid.parse(text) if text else DEFAULT_GRIDS[suite]


def collect(suite: str, grid: str | None = None) -> tuple[list[Check], dict]:
    names = SUITES if suite == "all" else (suite,)
    if suite != "all" and suite not in _BUILDERS:
        raise ValueError(f"unknown suite {suite!r}; expected one of {('all',) + SUITES}")
    checks: list[Check] = []
    grids = {}
    for name in names:
        g = resolve_grid(name, grid)
        grids[name] = str(g)
        checks.extend(_BUILDERS[name](g))
    return checks, grids


def run_suite(suite: str, grid: str | None = None, jobs: int = 1) -> VerifySuiteReport:
    """Run every check of ``suite``; results keep the collection order whatever ``jobs`` is."""
    checks, grids = collect(suite, grid)
    report = VerifySuiteReport(suite, grids)
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            report.results = list(pool.map(_run, checks))
    else:
        report.results = [_run(c) for c in checks]
    return report
