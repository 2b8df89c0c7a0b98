from __future__ import annotations

import random

import pytest

from ptchrom import graphs
from ptchrom.exactmath import Polynomial

q = Polynomial.q()
TC_CUBIC = q**3 - 9 * q**2 + 29 * q - 32

# kappa polynomials as printed, typed in independently of the package
PRINTED_KAPPAS = {
    ("B", None): (Polynomial([1]), Polynomial([1]), Polynomial([1])),
    ("H", None): ((q - 3) ** 3, q**3 - 9 * q**2 + 30 * q - 35, -(q - 3) * (q - 5)),
    ("L", None): ((q - 2) * (q - 3) ** 2, q**3 - 9 * q**2 + 29 * q - 32, 2 * (q - 3)),
    ("D_fixed_m2", 0): (TC_CUBIC, TC_CUBIC, TC_CUBIC),
    ("D_fixed_m2", 1): ((q - 3) * (q**3 - 9 * q**2 + 30 * q - 35),
                        q**4 - 12 * q**3 + 58 * q**2 - 133 * q + 119,
                        -(q - 3) * (2 * q**2 - 14 * q + 25)),
    ("D_fixed_m2", 2): (q**5 - 15 * q**4 + 94 * q**3 - 303 * q**2 + 498 * q - 332,
                        q**5 - 15 * q**4 + 95 * q**3 - 317 * q**2 + 553 * q - 398,
                        -(q**4 - 16 * q**3 + 91 * q**2 - 225 * q + 206)),
    ("D_fixed_m2", 3): ((q - 3) * (q**2 - 5 * q + 7) * (q**3 - 10 * q**2 + 38 * q - 49),
                        q**6 - 18 * q**5 + 141 * q**4 - 613 * q**3 + 1551 * q**2 - 2152 * q + 1271,
                        -(q - 3) ** 2 * (q**3 - 12 * q**2 + 48 * q - 67)),
}

PRINTED_F = {
    2: q * (q - 1) * (q - 2) * (q**3 - 9 * q**2 + 29 * q - 32),
    3: q * (q - 1) * (q - 2) * (q - 3) * (q**3 - 9 * q**2 + 30 * q - 35),
    4: q * (q - 1) * (q - 2) * (q - 3) * (q**4 - 12 * q**3 + 58 * q**2 - 133 * q + 119),
    5: q * (q - 1) * (q - 2) * (q - 3) * (q**5 - 15 * q**4 + 95 * q**3 - 317 * q**2 + 553 * q - 398),
    6: q * (q - 1) * (q - 2) * (q - 3) ** 2 * (q**5 - 15 * q**4 + 96 * q**3 - 327 * q**2 + 591 * q - 447),
}

# criterion number -> summary line, filled in by test_acceptance
ACCEPTANCE: dict[int, str] = {}


def petersen() -> graphs.Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return graphs.Graph(10, outer + spokes + inner)


def random_graph(n: int, p: float, seed: int) -> graphs.Graph:
    rng = random.Random(seed)
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return graphs.Graph(n, edges)


def small_corpus() -> dict[str, graphs.Graph]:
    """Named graphs with n <= 10 used as the brute-force oracle corpus."""
    out: dict[str, graphs.Graph] = {"empty3": graphs.make_empty(3)}
    for s in range(1, 6):
        out[f"K{s}"] = graphs.make_complete(s)
    for n in range(3, 9):
        out[f"C{n}"] = graphs.make_cycle(n)
    for n in (2, 5, 7):
        out[f"P{n}"] = graphs.make_path(n)
    for m in range(3, 8):
        out[f"W{m}"] = graphs.make_wheel(m)
    for m in range(3, 9):
        out[f"B{m}"] = graphs.make_bipyramid(m)
    for m in range(1, 9):
        out[f"R{m}"] = graphs.make_r(m)
    for m in range(1, 4):
        out[f"TC{m}"] = graphs.make_tc_strip(m)
    out["petersen"] = petersen()
    out["K3+C4"] = graphs.disjoint_union(graphs.make_complete(3), graphs.make_cycle(4))
    for seed in range(8):
        n = 5 + seed % 5
        out[f"rand{seed}"] = random_graph(n, 0.45, seed)
    return out


CORPUS = small_corpus()


@pytest.fixture(scope="session")
def corpus() -> dict[str, graphs.Graph]:
    return CORPUS


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for num in sorted(ACCEPTANCE):
            terminalreporter.write_line(ACCEPTANCE[num])
