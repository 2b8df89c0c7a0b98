"""Structured chromatic-polynomial forms over the basis {q-2, q-3, -1}."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product
from typing import Callable, Sequence

from ptchrom.exactmath import Polynomial, RationalFunction
from ptchrom.exactmath.poly import ExactDivisionError

q = Polynomial.q()
ONE = Polynomial.const(1)
LAM1 = q - 2
LAM2 = q - 3
LAM3 = Polynomial.const(-1)
GOLDEN_QUAD = q**2 - 3 * q + 1
LAMBDA_TC = q**3 - 9 * q**2 + 29 * q - 32
LAMBDA_I = (q - 3) * (
    q**8 - 24 * q**7 + 260 * q**6 - 1670 * q**5 + 6999 * q**4
    - 19698 * q**3 + 36408 * q**2 - 40240 * q + 20170
)
K3 = q * (q - 1) * (q - 2)


class UnknownFamily(KeyError):
    """No structured form is registered under this name."""


class DenominatorNoCancel(ArithmeticError):
    """A structured form evaluated to a non-polynomial (a transcription error)."""


@dataclass(frozen=True)
class LambdaBasis:
    terms: tuple[Polynomial, ...] = (LAM1, LAM2, LAM3)

    def __len__(self) -> int:
        return len(self.terms)


CANONICAL_BASIS = LambdaBasis()


# chromatic-number rules: predicate on the m-vector telling when chi = 4
ChiRule = Callable[[tuple[int, ...]], bool]

CHI_RULES: dict[str, ChiRule] = {
    "4": lambda m: True,
    "3": lambda m: False,
    "3me4mo": lambda m: m[0] % 2 == 1,
    "3mo4me": lambda m: m[0] % 2 == 0,
    "3ee": lambda m: any(x % 2 for x in m),
    "4m2": lambda m: m[0] >= 2,
}


@dataclass(frozen=True)
class StructuredForm:
    """``P(m) = sum_i c_i * prod_l lambdas[i_l] ** m_l`` with ``n = alpha . m + beta``."""

    name: str
    p: int
    lambdas: tuple[Polynomial, ...]
    coeffs: dict[tuple[int, ...], RationalFunction]
    m_min: tuple[int, ...]
    alpha: tuple[int, ...]
    beta: int
    chi_rule: str | None = None
    kind: str = "pgfac"
    description: str = ""
    parent: str | None = None
    _cache: dict = field(default_factory=dict, compare=False, repr=False, hash=False)

    def __post_init__(self) -> None:
        if self.p < 1:
            raise ValueError("p must be at least 1")
        if len(self.m_min) != self.p or len(self.alpha) != self.p:
            raise ValueError("m_min and alpha need one entry per parameter")
        for idx in self.coeffs:
            if len(idx) != self.p or not all(0 <= i < len(self.lambdas) for i in idx):
                raise ValueError(f"bad coefficient index {idx}")

    def __hash__(self) -> int:
        return hash((self.name, self.p, self.beta))

    def coefficient(self, idx: tuple[int, ...]) -> RationalFunction:
        return self.coeffs.get(idx, RationalFunction(Polynomial()))

    def nonzero_terms(self) -> list[tuple[int, ...]]:
        return sorted(i for i, c in self.coeffs.items() if not c.is_zero())

    def n_vertices(self, m: Sequence[int]) -> int:
        return sum(a * x for a, x in zip(self.alpha, m)) + self.beta

    def check_m(self, m: Sequence[int]) -> tuple[int, ...]:
        m = tuple(int(x) for x in m)
        if len(m) != self.p:
            raise ValueError(f"{self.name} needs {self.p} parameter(s), got {len(m)}")
        for x, lo in zip(m, self.m_min):
            if x < lo:
                raise ValueError(f"{self.name}: parameter {x} below minimum {lo}")
        return m

    def common_denominator(self) -> Polynomial:
        den = ONE
        for c in self.coeffs.values():
            den = den * c.den.exact_div(den.gcd(c.den))
        return den

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "p": self.p,
            "alpha": list(self.alpha),
            "beta": self.beta,
            "m_min": list(self.m_min),
            "lambdas": [str(l) for l in self.lambdas],
            "coefficients": {
                ",".join(str(i + 1) for i in idx): str(c) for idx, c in sorted(self.coeffs.items())
            },
            "description": self.description,
        }


def evaluate_form(f: StructuredForm, m: Sequence[int]) -> Polynomial:
    """Exact polynomial of the member with parameters ``m``.

    Coefficients are brought over a common denominator so the final division
    is a single exact step; a nonzero remainder raises DenominatorNoCancel.
    """
    m = f.check_m(m)
    key = ("eval", m)
    hit = f._cache.get(key)
    if hit is not None:
        return hit
    den = f._cache.get("den")
    if den is None:
        den = f.common_denominator()
        f._cache["den"] = den
    total = Polynomial()
    for idx, c in f.coeffs.items():
        if c.is_zero():
            continue
        scaled = c.num * den.exact_div(c.den)
        term = scaled
        for axis, i in enumerate(idx):
            term = term * _lam_pow(f, i, m[axis])
        total = total + term
    try:
        out = total.exact_div(den)
    except ExactDivisionError as exc:
        raise DenominatorNoCancel(f"{f.name}{list(m)} leaves a pole: {exc}") from exc
    f._cache[key] = out
    return out


def _lam_pow(f: StructuredForm, i: int, k: int) -> Polynomial:
    key = ("pow", i, k)
    hit = f._cache.get(key)
    if hit is None:
        hit = f.lambdas[i] ** k
        f._cache[key] = hit
    return hit


def evaluate_at(f: StructuredForm, m: Sequence[int], x):
    """Value at a number ``x`` (Fraction, QuadNum, float) without building the polynomial."""
    m = f.check_m(m)
    total = 0
    for idx, c in f.coeffs.items():
        if c.is_zero():
            continue
        term = c(x)
        for axis, i in enumerate(idx):
            term = term * f.lambdas[i](x) ** m[axis]
        total = total + term
    return total


# coefficient data ----------------------------------------------------------


def _rf(num: Polynomial, den: Polynomial | None = None) -> RationalFunction:
    return RationalFunction(num, den if den is not None else ONE)


def pgfac_coeffs(k1: Polynomial, k2: Polynomial, k3: Polynomial) -> dict[tuple[int], RationalFunction]:
    """``c_1 = q k1``, ``c_2 = q(q-1) k2``, ``c_3 = q(q^2-3q+1) k3``."""
    return {
        (0,): _rf(q * k1),
        (1,): _rf(q * (q - 1) * k2),
        (2,): _rf(q * GOLDEN_QUAD * k3),
    }


KAPPA = {
    "B": (ONE, ONE, ONE),
    "H": ((q - 3) ** 3, q**3 - 9 * q**2 + 30 * q - 35, -(q - 3) * (q - 5)),
    "L": ((q - 2) * (q - 3) ** 2, LAMBDA_TC, 2 * (q - 3)),
}


def d_tensor_bar() -> dict[tuple[int, int], RationalFunction]:
    """The nine ``c/q`` entries of the two-parameter D family, poles kept."""
    T = GOLDEN_QUAD
    return {
        (0, 0): _rf((q - 2) ** 7, q - 1),
        (1, 1): _rf((q - 1) * (q - 3) ** 5 * (q**3 - 9 * q**2 + 30 * q - 35), q - 2),
        (2, 2): _rf((q**5 - 11 * q**4 + 46 * q**3 - 88 * q**2 + 74 * q - 23) * T, (q - 1) * (q - 2)),
        (0, 1): _rf((q - 2) ** 3 * (q - 3) ** 4),
        (1, 0): _rf((q - 2) * (q - 3) ** 6),
        (0, 2): _rf((q - 2) ** 3 * T, q - 1),
        (2, 0): _rf((q - 2) * T, q - 1),
        (1, 2): _rf(-(q - 3) ** 4 * (q - 5) * T, q - 2),
        (2, 1): _rf(-(q - 3) ** 2 * (q - 5) * T, q - 2),
    }


def s_tensor_bar() -> dict[tuple[int, int], RationalFunction]:
    """The ``c/q`` entries of the symmetric S family (three vanish)."""
    T = GOLDEN_QUAD
    c12 = _rf((q - 2) ** 3 * (q - 3) ** 2)
    c23 = _rf((q - 3) ** 2 * T, q - 2)
    return {
        (1, 1): _rf((q - 1) * (q - 3) ** 6, q - 2),
        (0, 1): c12,
        (1, 0): c12,
        (1, 2): c23,
        (2, 1): c23,
        (2, 2): _rf((q - 1) * (q - 3) * T, q - 2),
    }


def _times_q(d: dict) -> dict:
    qq = _rf(q)
    return {k: v * qq for k, v in d.items()}


def reduce_axis(f: StructuredForm, fixed_axis: int, k: int, shift: int, beta: int,
                name: str, m_min: int, chi_rule: str | None) -> StructuredForm:
    """Fix one parameter of a p=2 form at ``k``; the free one becomes ``m - shift``.

    ``c_i = lambda_i^(-shift) * sum_j c_ij lambda_j^k`` summed over the fixed axis.
    """
    lam = f.lambdas
    coeffs: dict[tuple[int], RationalFunction] = {}
    for i in range(len(lam)):
        acc = RationalFunction(Polynomial())
        for j in range(len(lam)):
            idx = (i, j) if fixed_axis == 1 else (j, i)
            c = f.coeffs.get(idx)
            if c is not None and not c.is_zero():
                acc = acc + c * _rf(lam[j] ** k)
        coeffs[(i,)] = acc / _rf(lam[i] ** shift) if shift else acc
    return StructuredForm(
        name=name, p=1, lambdas=lam, coeffs=coeffs, m_min=(m_min,), alpha=(1,),
        beta=beta, chi_rule=chi_rule, kind="pgfac", parent=f.name,
    )


def diagonalize(f: StructuredForm) -> StructuredForm:
    """``m1 = m2 = m``: one parameter over the six pairwise products of the basis."""
    if f.p != 2:
        raise ValueError("diagonalize needs a two-parameter form")
    l1, l2, l3 = f.lambdas
    lambdas = (l1 * l1, l2 * l2, l3 * l3, l1 * l2, l1 * l3, l2 * l3)
    pairs = [((0, 0),), ((1, 1),), ((2, 2),), ((0, 1), (1, 0)), ((0, 2), (2, 0)), ((1, 2), (2, 1))]
    coeffs: dict[tuple[int], RationalFunction] = {}
    for j, group in enumerate(pairs):
        acc = RationalFunction(Polynomial())
        for idx in group:
            acc = acc + f.coefficient(idx)
        if not acc.is_zero():
            coeffs[(j,)] = acc
    chi = "3me4mo" if f.chi_rule == "3ee" else f.chi_rule
    return StructuredForm(
        name=f"{f.name}_diag", p=1, lambdas=lambdas, coeffs=coeffs, m_min=(max(f.m_min),),
        alpha=(sum(f.alpha),), beta=f.beta, chi_rule=chi, kind="diagonal", parent=f.name,
        description=f"{f.name} with equal parameters",
    )


def _single(name: str, lam: Polynomial, coeff: RationalFunction, alpha: int, beta: int,
            chi: str, desc: str) -> StructuredForm:
    return StructuredForm(
        name=name, p=1, lambdas=(lam,), coeffs={(0,): coeff}, m_min=(1,), alpha=(alpha,),
        beta=beta, chi_rule=chi, kind="single", description=desc,
    )


FAMILY_NAMES = (
    "B", "H", "L", "D", "S", "D_fixed_m2", "D_fixed_m1", "S_fixed", "R", "TC", "I",
    "D_diag", "S_diag",
)
REDUCED = ("D_fixed_m2", "D_fixed_m1", "S_fixed")


@lru_cache(maxsize=None)
def family_form(name: str, fixed_params: int | None = None) -> StructuredForm:
    """Registered structured form for a family id.

    Reduced families take the value of the held parameter in ``fixed_params``:
    ``D_fixed_m2(k)`` is D_{m-4,k}, ``D_fixed_m1(k)`` is D_{k,m-2} and
    ``S_fixed(k)`` is S_{m-2,k}.
    """
    if name in REDUCED:
        if fixed_params is None or fixed_params < 0:
            raise ValueError(f"{name} needs a nonnegative fixed parameter")
        k = int(fixed_params)
        chi = "3me4mo" if k % 2 == 0 else "4"
        if name == "D_fixed_m2":
            return reduce_axis(family_form("D"), 1, k, 4, 5 + k, f"D_fixed_m2({k})", 4, chi)
        if name == "D_fixed_m1":
            return reduce_axis(family_form("D"), 0, k, 2, 7 + k, f"D_fixed_m1({k})", 2, chi)
        return reduce_axis(family_form("S"), 1, k, 2, 5 + k, f"S_fixed({k})", 2, "4")
    if fixed_params is not None:
        raise ValueError(f"{name} takes no fixed parameter")
    if name in KAPPA:
        chi = {"B": "3me4mo", "H": "4", "L": "4"}[name]
        beta = 2 if name == "B" else 5
        return StructuredForm(
            name=name, p=1, lambdas=CANONICAL_BASIS.terms, coeffs=pgfac_coeffs(*KAPPA[name]),
            m_min=(3,), alpha=(1,), beta=beta, chi_rule=chi, kind="pgfac",
        )
    if name == "D":
        return StructuredForm(
            name="D", p=2, lambdas=CANONICAL_BASIS.terms, coeffs=_times_q(d_tensor_bar()),
            m_min=(0, 0), alpha=(1, 1), beta=9, chi_rule="3ee", kind="tensor",
        )
    if name == "S":
        return StructuredForm(
            name="S", p=2, lambdas=CANONICAL_BASIS.terms, coeffs=_times_q(s_tensor_bar()),
            m_min=(0, 0), alpha=(1, 1), beta=7, chi_rule="4", kind="tensor",
        )
    if name == "D_diag":
        return diagonalize(family_form("D"))
    if name == "S_diag":
        return diagonalize(family_form("S"))
    if name == "R":
        return _single("R", q - 3, _rf(K3, q - 3), 1, 2, "4m2", "join of a path with an edge")
    if name == "TC":
        return _single("TC", LAMBDA_TC, _rf(K3, LAMBDA_TC), 3, 0, "3", "iterated octahedra")
    if name == "I":
        return _single("I", LAMBDA_I, _rf(K3), 9, 3, "4", "iterated icosahedra")
    raise UnknownFamily(name)


def kappas(f: StructuredForm) -> tuple[Polynomial, Polynomial, Polynomial]:
    """Divide the forced factors out of a p=1 form over the canonical basis."""
    if f.p != 1 or tuple(f.lambdas) != CANONICAL_BASIS.terms:
        raise ValueError("kappa coefficients need a one-parameter canonical-basis form")
    c1, c2, c3 = (f.coefficient((i,)) for i in range(3))
    try:
        return (
            c1.as_polynomial().exact_div(q),
            c2.as_polynomial().exact_div(q * (q - 1)),
            c3.as_polynomial().exact_div(q * GOLDEN_QUAD),
        )
    except ExactDivisionError as exc:
        raise DenominatorNoCancel(f"{f.name}: forced factor missing ({exc})") from exc


def catalogue() -> list[dict]:
    """JSON-ready description of every registered form (reductions at k = 0..3)."""
    out = []
    for name in FAMILY_NAMES:
        if name in REDUCED:
            out.extend(family_form(name, k).to_json() for k in range(4))
        else:
            out.append(family_form(name).to_json())
    return out


def catalogue_json() -> str:
    return json.dumps(catalogue(), indent=2, ensure_ascii=False)


def multi_indices(f: StructuredForm, lo: Sequence[int], hi: Sequence[int]) -> list[tuple[int, ...]]:
    return list(product(*(range(a, b + 1) for a, b in zip(lo, hi))))
