"""Ratios to the Tutte upper bound at q = tau + 1, their limits and growth constants."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

from ptchrom.exactmath import SQRT5, TAU, TAU_MINUS_1, TAU_PLUS_1, Polynomial, QuadNum, quad_eval
from ptchrom.families.forms import StructuredForm
from ptchrom.families.genfunc import GeneratingFunction, cubic_roots, gf_to_lambda_coeffs

TAU_PLUS_1_FLOAT = float(TAU_PLUS_1)
TAU_MINUS_1_FLOAT = float(TAU_MINUS_1)
# (1 - sqrt5)/2, the ratio of successive terms in the finite-size corrections
XI = (1 - SQRT5) / 2


class BoundViolated(ArithmeticError):
    """|P(tau+1)| exceeds the Tutte bound, or vanishes: not a triangulation polynomial."""


@dataclass(frozen=True)
class RatioReport:
    n: int
    P_at_tau1: QuadNum
    U: QuadNum
    r_exact: QuadNum
    r_float: float


@dataclass(frozen=True)
class LimitReport:
    r_inf: QuadNum
    a_const: float
    lambda_dom_at_tau1: QuadNum | float
    direction: str

    @property
    def r_inf_float(self) -> float:
        return float(self.r_inf)


def tutte_bound(n: int) -> QuadNum:
    """``(tau - 1)^(n - 5)``."""
    return TAU_MINUS_1 ** (n - 5)


def tutte_ratio(p: Polynomial, n: int) -> RatioReport:
    """``|P(tau+1)| / (tau-1)^(n-5)`` computed exactly in Q(sqrt 5)."""
    val = quad_eval(p, TAU_PLUS_1)
    u = tutte_bound(n)
    r = abs(val) / u
    rf = float(r)
    if val == 0 or rf > 1 + 1e-12:
        raise BoundViolated(f"r = {rf} for n = {n} (P(tau+1) = {val})")
    return RatioReport(n=n, P_at_tau1=val, U=u, r_exact=r, r_float=rf)


def _coeff_at_tau(c) -> QuadNum:
    return c.num.eval_quad(TAU_PLUS_1) / c.den.eval_quad(TAU_PLUS_1)


def _limit_1d(coeffs: dict[int, QuadNum], rho: list[QuadNum], alpha: int, beta: int,
              direction: str) -> LimitReport:
    """Limit of ``(tau-1)^(5-beta) |sum_j c_j (rho_j/(tau-1)^alpha)^m|``."""
    t = TAU_MINUS_1**alpha
    live = {j: c for j, c in coeffs.items() if c != 0}
    if not live:
        raise BoundViolated("all coefficients vanish at tau+1")
    total = QuadNum(0)
    for j, c in live.items():
        mag = abs(rho[j])
        if mag > t:
            raise BoundViolated(f"term {j + 1} grows faster than the bound")
        if mag == t:
            if rho[j] != t:
                raise ValueError("ratio oscillates: a unit-modulus term has negative sign")
            total = total + c
    r_inf = abs(total) * TAU_MINUS_1 ** (5 - beta)
    dom = max(abs(rho[j]) for j in live)
    a = float(dom) ** (1.0 / alpha) / TAU_MINUS_1_FLOAT
    return LimitReport(r_inf=r_inf, a_const=a, lambda_dom_at_tau1=dom, direction=direction)


Direction = Literal["m", "m1", "m2", "both"]


def ratio_limit(f: StructuredForm, direction: Direction = "m", fixed: int | None = None) -> LimitReport:
    """Exact ``lim r`` as the chosen parameters go to infinity.

    For p=1 use ``direction="m"``.  For p=2, ``"m1"`` sends m1 to infinity
    with ``m2 = fixed``, ``"m2"`` the reverse, and ``"both"`` sends both.
    """
    rho = [lam.eval_quad(TAU_PLUS_1) for lam in f.lambdas]
    cvals = {idx: _coeff_at_tau(c) for idx, c in f.coeffs.items() if not c.is_zero()}
    if f.p == 1:
        if direction != "m":
            raise ValueError("one-parameter forms only have direction 'm'")
        return _limit_1d({i[0]: v for i, v in cvals.items()}, rho, f.alpha[0], f.beta, "m")
    if f.p != 2:
        raise ValueError("limits are implemented for p <= 2")
    if direction in ("m1", "m2"):
        if fixed is None or fixed < f.m_min[1 if direction == "m1" else 0]:
            raise ValueError("the held parameter needs an admissible value")
        free = 0 if direction == "m1" else 1
        held = 1 - free
        red: dict[int, QuadNum] = {}
        for idx, v in cvals.items():
            red[idx[free]] = red.get(idx[free], QuadNum(0)) + v * rho[idx[held]] ** fixed
        beta = f.beta + f.alpha[held] * fixed
        return _limit_1d(red, rho, f.alpha[free], beta, f"{direction}->inf, other={fixed}")
    if direction == "both":
        t = [TAU_MINUS_1**a for a in f.alpha]
        total = QuadNum(0)
        dom = QuadNum(0)
        for idx, v in cvals.items():
            if v == 0:
                continue
            mags = [abs(rho[i]) for i in idx]
            if any(mg > tt for mg, tt in zip(mags, t)):
                raise BoundViolated(f"term {idx} grows faster than the bound")
            if all(rho[i] == tt for i, tt in zip(idx, t)):
                total = total + v
            dom = max(dom, mags[0] * mags[1])
        r_inf = abs(total) * TAU_MINUS_1 ** (5 - f.beta)
        a = float(dom) ** (1.0 / sum(f.alpha)) / TAU_MINUS_1_FLOAT
        return LimitReport(r_inf=r_inf, a_const=a, lambda_dom_at_tau1=dom, direction="both")
    raise ValueError(f"unknown direction {direction!r}")


def a_constant(f: StructuredForm | GeneratingFunction, coeff_tol: float = 1e-10) -> float:
    """``|lambda_dom(tau+1)|^(1/alpha) / (tau - 1)`` over terms with nonzero coefficient.

    For a two-parameter form this is the rate along the diagonal.  A
    generating function is handled numerically with ``alpha = 1``.
    """
    if isinstance(f, GeneratingFunction):
        roots = cubic_roots(TAU_PLUS_1_FLOAT).roots
        coeffs = gf_to_lambda_coeffs(f, roots, TAU_PLUS_1_FLOAT)
        scale = max(abs(c) for c in coeffs)
        live = [abs(r) for r, c in zip(roots, coeffs) if abs(c) > coeff_tol * scale]
        return max(live) / TAU_MINUS_1_FLOAT
    if f.p == 1:
        return ratio_limit(f).a_const
    return ratio_limit(f, "both").a_const


# closed forms for the ratios -------------------------------------------------


def ratio_d_closed(m1: int | None, m2: int | None) -> QuadNum:
    """``r(D_{m1,m2})``; ``None`` stands for infinity."""
    out = (3 - SQRT5) / 2
    if m1 is not None and m2 is not None:
        out = out + (65 - 29 * SQRT5) / 2 * XI ** (m1 + m2)
    if m2 is not None:
        out = out + (-11 + 5 * SQRT5) / 2 * XI**m2
    if m1 is not None:
        out = out + (-29 + 13 * SQRT5) / 2 * XI**m1
    return out


def ratio_l_closed(m: int) -> QuadNum:
    """``r(L_m) = (sqrt5 - 2)(1 + 2 tau xi^m)``, from the L coefficients at tau+1."""
    return abs((SQRT5 - 2) * (1 + 2 * TAU * XI**m))


def ratio_s_closed(m1: int, m2: int) -> QuadNum:
    """``r(S_{m1,m2})``, which tends to zero only when both parameters grow."""
    return abs((9 - 4 * SQRT5) * XI ** (m1 + m2) + (SQRT5 - 2) * (XI**m1 + XI**m2))
