"""Identity suites run by ``verify``.

Each suite walks a parameter range, compares two independent computations
case by case and returns a :class:`VerificationReport`.  Randomized checks
use a fixed seed so reports are reproducible.
"""
from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from .basic_function import (
    SatakeParams,
    basic_function,
    euler_factor_series,
    trace_series,
)
from .hecke import (
    HeckeElement,
    SymLaurent,
    build_one_m,
    convolve,
    from_cartan,
    satake_forward,
    satake_inverse,
    sym_multiply,
    to_cartan,
)
from .partitions import (
    count_exact_parts,
    count_partitions,
    enumerate_partitions,
    theorem1_bijection,
)
from .plethysm import (
    multiplicity_generic,
    multiplicity_k3_closed,
    multiplicity_k3_residue,
    multiplicity_k4_closed,
    multiplicity_k4_recursive,
    plethysm_character,
)
from .qcoeff import QCoeff

__all__ = [
    "VerificationReport",
    "SUITES",
    "DEFAULT_MAX_ELL",
    "DEFAULT_MAX_J",
    "TRACE_PARAMS",
    "run_suite",
    "random_hecke_element",
]

DEFAULT_MAX_ELL = 200
DEFAULT_MAX_J = {
    "lem1": 10,
    "thm3": 100,
    "cor3": 100,
    "thm4": 60,
    "cor4": 60,
    "hecke": 40,
    "basicfn": 12,
}
TRACE_PARAMS = (
    (Fraction(2), Fraction(3)),
    (Fraction(1), Fraction(1)),
    (Fraction(1, 2), Fraction(-3)),
    (Fraction(5), Fraction(1, 5)),
)
HECKE_SAMPLES = 1000
HECKE_SEED = 20170731


@dataclass
class VerificationReport:
    suite: str
    params: dict
    cases: int = 0
    failures: list = field(default_factory=list)
    elapsed_ms: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.failures

    def check(self, inputs: dict, expected, got) -> bool:
        self.cases += 1
        if expected != got:
            self.failures.append({"inputs": inputs, "expected": _jsonable(expected), "got": _jsonable(got)})
            return False
        return True

    def to_record(self) -> dict:
        return {
            "schema": "v1",
            "suite": self.suite,
            "range": self.params,
            "cases": self.cases,
            "failures": self.failures,
            "passed": self.ok,
            "elapsed_ms": round(self.elapsed_ms, 3),
        }


def _jsonable(x):
    if isinstance(x, (bool, int, str)) or x is None:
        return x
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    return str(x)


def _thm1(report, max_ell, **_):
    p = count_partitions
    for ell in range(1, max_ell + 1):
        report.check({"ell": ell, "eq": "zero"}, 0, p(4 * ell - 2, 3, 6 * ell - 3) - p(4 * ell - 2, 3, 6 * ell - 4))
        report.check({"ell": ell, "eq": "one"}, 1, p(4 * ell, 3, 6 * ell) - p(4 * ell, 3, 6 * ell - 1))


def _thm2(report, max_ell, **_):
    p = count_partitions
    for ell in range(1, max_ell + 1):
        report.check({"ell": ell, "eq": "4l-1"}, 1, p(4 * ell - 1, 3, 6 * ell - 3) - p(4 * ell - 1, 3, 6 * ell - 4))
        report.check({"ell": ell, "eq": "4l+1"}, 1, p(4 * ell + 1, 3, 6 * ell) - p(4 * ell + 1, 3, 6 * ell - 1))


def _lem1(report, max_j, **_):
    # exactly j parts, largest <= k  ==  p(k-1, j, n-j)
    for k in range(1, max_j + 1):
        for j in range(1, max_j + 1):
            for n in range(k * j + 1):
                report.check({"k": k, "j": j, "n": n}, count_partitions(k - 1, j, n - j), count_exact_parts(k, j, n))


def _lem2(report, max_ell, **_):
    p = count_partitions
    for ell in range(1, max_ell + 1):
        report.check({"ell": ell, "eq": "a"}, ell + 1, p(4 * ell, 3, 6 * ell) - p(4 * ell - 1, 3, 6 * ell - 3))
        report.check({"ell": ell, "eq": "b"}, ell + 1, p(4 * ell, 3, 6 * ell - 1) - p(4 * ell - 1, 3, 6 * ell - 4))
        report.check({"ell": ell, "eq": "c"}, ell + 1, p(4 * ell + 2, 3, 6 * ell + 3) - p(4 * ell + 1, 3, 6 * ell))
        report.check({"ell": ell, "eq": "d"}, ell + 2, p(4 * ell + 2, 3, 6 * ell + 2) - p(4 * ell + 1, 3, 6 * ell - 1))


def _grid(report, max_j, top: Callable[[int], int], expected, got):
    for j in range(max_j + 1):
        for n in range(top(j) + 1):
            report.check({"j": j, "n": n}, expected(j, n), got(j, n))


def _thm3(report, max_j, **_):
    _grid(report, max_j, lambda j: 3 * j // 2, lambda j, n: multiplicity_generic(j, 3, n), multiplicity_k3_closed)


def _cor3(report, max_j, **_):
    _grid(report, max_j, lambda j: 3 * j // 2, lambda j, n: multiplicity_generic(j, 3, n), multiplicity_k3_residue)


def _thm4(report, max_j, **_):
    _grid(report, max_j, lambda j: 2 * j, lambda j, n: multiplicity_generic(j, 4, n), multiplicity_k4_recursive)


def _cor4(report, max_j, **_):
    _grid(report, max_j, lambda j: j, lambda j, n: multiplicity_generic(j, 4, n), multiplicity_k4_closed)


def random_qcoeff(rng: random.Random, max_terms: int = 2, max_d: int = 4) -> QCoeff:
    return QCoeff({rng.randint(-max_d, max_d): rng.randint(-9, 9) for _ in range(rng.randint(1, max_terms))})


def random_hecke_element(rng: random.Random, max_key: int = 10, max_terms: int = 3) -> HeckeElement:
    """Random element with ``0 <= m <= max_key``, ``|i| <= max_key`` and small coefficients."""
    items = []
    for _ in range(rng.randint(1, max_terms)):
        key = (rng.randint(0, max_key), rng.randint(-max_key, max_key))
        items.append((key, random_qcoeff(rng)))
    return HeckeElement(items)


def _hecke(report, max_j, samples: int = HECKE_SAMPLES, seed: int = HECKE_SEED, **_):
    for m in range(max_j + 1):
        report.check({"check": "one_m", "m": m}, HeckeElement.basis(m, 0), build_one_m(m))
    rng = random.Random(seed)
    for t in range(samples):
        f, g, h = (random_hecke_element(rng) for _ in range(3))
        fg = convolve(f, g)
        tag = {"sample": t}
        report.check({**tag, "check": "homomorphism"}, satake_forward(fg),
                     sym_multiply(satake_forward(f), satake_forward(g)))
        report.check({**tag, "check": "commutative"}, fg, convolve(g, f))
        report.check({**tag, "check": "associative"}, convolve(fg, h), convolve(f, convolve(g, h)))
        report.check({**tag, "check": "satake round trip"}, f, satake_inverse(satake_forward(f)))
        p = SymLaurent(list(g.items()))
        report.check({**tag, "check": "inverse round trip"}, p, satake_forward(satake_inverse(p)))
        report.check({**tag, "check": "cartan round trip"}, f, from_cartan(to_cartan(f)))
        c = to_cartan(h)
        report.check({**tag, "check": "cartan inverse round trip"}, c, to_cartan(from_cartan(c)))


def _basicfn(report, max_j, **_):
    for k in (3, 4):
        series = basic_function(k, max_j)
        for j, term in enumerate(series.terms):
            report.check({"k": k, "j": j, "check": "character"}, plethysm_character(j, k),
                         satake_forward(term).to_character())
            bad = [key for key in to_cartan(term) if not (key[0] + key[1] == j * k and key[0] >= key[1] >= 0)]
            report.check({"k": k, "j": j, "check": "cartan support"}, [], bad)
        for alpha, beta in TRACE_PARAMS:
            params = SatakeParams(alpha, beta)
            traces = trace_series(series, params)
            eulers = euler_factor_series(k, params, max_j)
            for j, (a, b) in enumerate(zip(traces, eulers)):
                report.check({"k": k, "j": j, "alpha": str(alpha), "beta": str(beta), "check": "trace"}, b, a)


def _bijection(report, max_ell, **_):
    for ell in range(1, max_ell + 1):
        for direction, dom, cod in (
            ("P", (4 * ell - 2, 3, 6 * ell - 3), (4 * ell - 2, 3, 6 * ell - 4)),
            ("Q", (4 * ell, 3, 6 * ell), (4 * ell, 3, 6 * ell - 1)),
        ):
            domain = [lam.padded(3) for lam in enumerate_partitions(*dom)]
            if direction == "Q":
                domain.remove((4 * ell, 2 * ell, 0))
            image = sorted(theorem1_bijection(ell, direction, lam) for lam in domain)
            target = sorted(lam.padded(3) for lam in enumerate_partitions(*cod))
            report.check({"ell": ell, "direction": direction}, target, image)


SUITES: dict[str, tuple[Callable, str]] = {
    "thm1": (_thm1, "ell"),
    "thm2": (_thm2, "ell"),
    "lem1": (_lem1, "j"),
    "lem2": (_lem2, "ell"),
    "thm3": (_thm3, "j"),
    "cor3": (_cor3, "j"),
    "thm4": (_thm4, "j"),
    "cor4": (_cor4, "j"),
    "hecke": (_hecke, "j"),
    "basicfn": (_basicfn, "j"),
    "bijection": (_bijection, "ell"),
}
DEFAULT_MAX_ELL_FOR = {"bijection": 30}


def run_suite(name: str, max_ell: int | None = None, max_j: int | None = None) -> VerificationReport:
    """Run one suite (or ``"all"``) and time it."""
    if name == "all":
        start = time.perf_counter()
        total = VerificationReport("all", {"max_ell": max_ell, "max_j": max_j})
        for sub in SUITES:
            part = run_suite(sub, max_ell, max_j)
            total.cases += part.cases
            total.failures.extend({"suite": sub, **f} for f in part.failures)
        total.elapsed_ms = (time.perf_counter() - start) * 1e3
        return total
    if name not in SUITES:
        raise KeyError(name)
    fn, kind = SUITES[name]
    if kind == "ell":
        ell = max_ell if max_ell is not None else DEFAULT_MAX_ELL_FOR.get(name, DEFAULT_MAX_ELL)
        params = {"max_ell": ell}
    else:
        j = max_j if max_j is not None else DEFAULT_MAX_J[name]
        params = {"max_j": j}
    report = VerificationReport(name, params)
    start = time.perf_counter()
    fn(report, **params)
    report.elapsed_ms = (time.perf_counter() - start) * 1e3
    return report
