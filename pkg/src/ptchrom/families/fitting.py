"""Recover kappa coefficients from sampled polynomials by Cramer's rule."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from ptchrom.exactmath import Polynomial, RationalFunction
from ptchrom.exactmath.poly import ExactDivisionError
from ptchrom.families.forms import CANONICAL_BASIS, GOLDEN_QUAD, LambdaBasis, q


class NotThisForm(ValueError):
    """The sampled polynomials are not a three-term sum over the given basis."""


@dataclass(frozen=True)
class KappaForm:
    kappa1: Polynomial
    kappa2: Polynomial
    kappa3: Polynomial

    def coefficients(self) -> tuple[Polynomial, Polynomial, Polynomial]:
        return q * self.kappa1, q * (q - 1) * self.kappa2, q * GOLDEN_QUAD * self.kappa3

    def as_tuple(self) -> tuple[Polynomial, Polynomial, Polynomial]:
        return self.kappa1, self.kappa2, self.kappa3


def _det3(m: list[list[RationalFunction]]) -> RationalFunction:
    return (
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    )


def solve_coefficients(samples: Sequence[tuple[int, Polynomial]],
                       basis: LambdaBasis = CANONICAL_BASIS) -> list[RationalFunction]:
    """Coefficients ``c_j`` with ``sum_j c_j lambda_j^m = P_m`` from three samples."""
    lam = [RationalFunction(t) for t in basis.terms]
    if len(lam) != 3:
        raise ValueError("Cramer fit is written for a three-term basis")
    rows = [[l**m for l in lam] for m, _ in samples[:3]]
    rhs = [RationalFunction(p) for _, p in samples[:3]]
    det = _det3(rows)
    if det.is_zero():
        raise NotThisForm("singular lambda-power matrix")
    out = []
    for j in range(3):
        mj = [[rhs[r] if c == j else rows[r][c] for c in range(3)] for r in range(3)]
        out.append(_det3(mj) / det)
    return out


def fit_structure(polys: Sequence[tuple[int, Polynomial]],
                  basis: LambdaBasis = CANONICAL_BASIS) -> KappaForm:
    """Fit ``P_m = q[k1 l1^m + k2 (q-1) l2^m + k3 (q^2-3q+1) l3^m]``.

    The first three consecutive samples determine the coefficients; every
    further sample must be reproduced exactly.  The coefficients must be
    polynomials carrying the forced factors.
    """
    samples = sorted((int(m), Polynomial.coerce(p)) for m, p in polys)
    if len(samples) < 3:
        raise ValueError("need at least three samples")
    ms = [m for m, _ in samples]
    if ms[1] != ms[0] + 1 or ms[2] != ms[0] + 2:
        raise ValueError("the first three samples must have consecutive m")
    if len(samples) < 4:
        raise ValueError("need at least one validation sample beyond the first three")
    coeffs = solve_coefficients(samples, basis)
    for m, p in samples[3:]:
        got = sum((c * RationalFunction(t**m) for c, t in zip(coeffs, basis.terms)),
                  RationalFunction(Polynomial()))
        if got != RationalFunction(p):
            raise NotThisForm(f"sample m={m} is not reproduced by the three-term fit")
    forced = (q, q * (q - 1), q * GOLDEN_QUAD)
    kap = []
    for c, f in zip(coeffs, forced):
        if not c.is_polynomial():
            raise NotThisForm(f"coefficient {c} is not a polynomial")
        try:
            kap.append(c.as_polynomial().exact_div(f))
        except ExactDivisionError as exc:
            raise NotThisForm(f"coefficient lacks the forced factor {f}") from exc
    return KappaForm(*kap)
