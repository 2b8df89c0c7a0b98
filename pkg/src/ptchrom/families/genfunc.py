"""Generating functions with a cubic denominator, and the F family built from one."""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from ptchrom.exactmath import TAU, Polynomial
from ptchrom.families.forms import q


class DegenerateLambdas(ArithmeticError):
    """Two denominator roots coincide, so the partial fractions are undefined."""


@dataclass(frozen=True)
class GeneratingFunction:
    """``(a_0 + a_1 x + a_2 x^2) / (1 + b_1 x + b_2 x^2 + b_3 x^3)``."""

    numer: tuple[Polynomial, ...]
    denom: tuple[Polynomial, ...]

    def __post_init__(self) -> None:
        if not self.denom:
            raise ValueError("denominator needs at least one coefficient beyond the constant 1")

    def expand(self, m_max: int) -> list[Polynomial]:
        return gf_expand(self, m_max)

    def at_q(self, x) -> tuple[list[complex], list[complex]]:
        """Numeric ``a`` and ``b`` coefficients at the point ``q = x``."""
        return [complex(a(x)) for a in self.numer], [complex(b(x)) for b in self.denom]


def gf_expand(gf: GeneratingFunction, m_max: int) -> list[Polynomial]:
    """Taylor coefficients ``t_0 .. t_(m_max-1)`` by exact series division.

    For the F family ``t_k = P(F_(k+1))``, so the list is ``P(F_1..F_m_max)``.
    """
    if m_max < 1:
        raise ValueError("m_max must be at least 1")
    out: list[Polynomial] = []
    for k in range(m_max):
        t = gf.numer[k] if k < len(gf.numer) else Polynomial()
        for j, b in enumerate(gf.denom, start=1):
            if k - j >= 0:
                t = t - b * out[k - j]
        out.append(t)
    return out


def gf_to_lambda_coeffs(gf: GeneratingFunction, lambdas: Sequence[complex], q_value) -> list[complex]:
    """Partial-fraction coefficients ``c_j`` at ``q = q_value``.

    ``t_m = sum_j c_j lambda_j^m`` where ``c_j = N(1/lambda_j) lambda_j^2 / prod (lambda_j - lambda_k)``
    with a quadratic numerator.
    """
    lam = [complex(x) for x in lambdas]
    a, _ = gf.at_q(q_value)
    scale = max(1.0, max(abs(x) for x in lam))
    for i in range(len(lam)):
        for j in range(i + 1, len(lam)):
            if abs(lam[i] - lam[j]) <= 1e-12 * scale:
                raise DegenerateLambdas(f"lambda_{i + 1} = lambda_{j + 1} at q = {q_value}")
    deg = len(lam) - 1
    out = []
    for j, lj in enumerate(lam):
        num = sum(ak * lj ** (deg - k) for k, ak in enumerate(a))
        den = 1
        for k, lk in enumerate(lam):
            if k != j:
                den *= lj - lk
        out.append(num / den)
    return out


F_GF = GeneratingFunction(
    numer=(
        q * (q - 1) * (q - 2) * (q - 3) ** 2,
        q * (q - 1) * (q - 2) * (2 * q - 5),
        q * (q - 1) * (q - 2) ** 2 * (q - 3) ** 2,
    ),
    denom=(-(q - 3), q - 3, -(q - 2) * (q - 3)),
)

R_F = 3 * (4 * q**3 - 24 * q**2 + 76 * q - 93)
Q_C_F = float(TAU) + 2.0


@dataclass(frozen=True)
class CubicRoots:
    """The three roots of ``xi^3 + (3-q) xi^2 + (q-3) xi - (q-2)(q-3)`` at one q."""

    q: complex
    roots: tuple[complex, complex, complex]

    @property
    def lambda_f1(self) -> complex:
        return self.roots[0]

    def vieta_residuals(self) -> tuple[float, float, float]:
        """Relative errors of e1 = q-3, e2 = q-3, e3 = (q-2)(q-3)."""
        r1, r2, r3 = self.roots
        qq = self.q
        want = (qq - 3, qq - 3, (qq - 2) * (qq - 3))
        got = (r1 + r2 + r3, r1 * r2 + r1 * r3 + r2 * r3, r1 * r2 * r3)
        return tuple(abs(g - w) / max(1.0, abs(w)) for g, w in zip(got, want))


def cubic_roots(q_value: complex, previous: CubicRoots | None = None) -> CubicRoots:
    """Roots by numpy; largest magnitude first unless ``previous`` is given.

    With ``previous`` the roots are matched to the earlier ordering by
    nearest distance, which tracks branches continuously along a path.
    """
    qq = complex(q_value)
    raw = [complex(r) for r in np.roots([1.0, 3 - qq, qq - 3, -(qq - 2) * (qq - 3)])]
    if previous is None:
        raw.sort(key=lambda z: (-abs(z), -z.real, -z.imag))
        return CubicRoots(qq, tuple(raw))
    left = list(raw)
    ordered = []
    for old in previous.roots:
        best = min(left, key=lambda z: abs(z - old))
        ordered.append(best)
        left.remove(best)
    return CubicRoots(qq, tuple(ordered))


def lambda_f1_radical(q_value: float) -> float:
    """Closed-form dominant root for real ``q > 3``, used only as a cross-check."""
    x = float(q_value)
    r = R_F(x)
    s = (4 * (x - 3) * (2 * x * x + 6 * x - 9 + 3 * cmath.sqrt(r))) ** (1 / 3)
    val = s / 6 + 2 * (x - 3) * (x - 6) / (3 * s) + (x - 3) / 3
    return val.real


def f_polynomials(m_max: int) -> list[Polynomial]:
    """``P(F_1) .. P(F_m_max)``."""
    return gf_expand(F_GF, m_max)
