"""Real chromatic zeros near tau + 1 and the predictor for extra real zeros."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from ptchrom.exactmath import (
    ComplexRoot,
    Polynomial,
    RootInterval,
    all_complex_roots,
    sturm_isolate,
)
from ptchrom.families.fitting import KappaForm
from ptchrom.families.forms import LAMBDA_TC

from ptchrom.analysis.ratios import TAU_PLUS_1_FLOAT

ZERO_TOL = 1e-13
# rational point next to tau+1, used as the Taylor-shift centre for complex roots
SHIFT_CENTER = Fraction(2618034, 10**6)


@lru_cache(maxsize=1)
def q_w_interval() -> RootInterval:
    """Isolating interval of the single real root of lambda_TC."""
    (iv,) = sturm_isolate(LAMBDA_TC, 2, 3, tol=1e-15)
    return iv


def q_w() -> float:
    return q_w_interval().refined


@dataclass(frozen=True)
class ZeroReport:
    n: int
    q_z: float | None
    q_z_offset: float | None
    q_z_prime: float | None
    all_real_zeros: list[float]
    complex_pair: ComplexRoot | None = None
    lambda_tc_multiplicity: int = 0
    complex_roots: list[ComplexRoot] = field(default_factory=list, compare=False, repr=False)

    @property
    def conjugate_pair(self) -> bool:
        return self.q_z is None and self.complex_pair is not None


def _window_zeros(p: Polynomial) -> list[float]:
    """Distinct real zeros in ``(q_w, 3)``, with ``q = 3`` itself excluded."""
    lo = q_w_interval().hi
    out = []
    for iv in sturm_isolate(p, lo, 3, tol=ZERO_TOL):
        if iv.hi == 3 and p(3) == 0:
            continue
        out.append(iv.refined)
    return out


def zero_report(p: Polynomial, n: int, with_complex: bool = True) -> ZeroReport:
    """Zeros of ``p`` in ``[q_w, 3)`` and the one nearest ``tau + 1``.

    Factors of lambda_TC are divided out exactly first, so ``q_w`` itself is
    reported through ``lambda_tc_multiplicity``.  If a nonreal root lies
    strictly closer to ``tau + 1`` than every real zero, ``q_z`` is ``None``
    and the upper member of that pair is returned.  ``q_z_prime`` is the
    largest remaining zero in the window.
    """
    k = p.multiplicity(LAMBDA_TC)
    rem = p
    if k:
        rem = p.exact_div(LAMBDA_TC**k)
    window = _window_zeros(rem)
    reals = sorted(window + ([q_w()] if k else []))
    target = TAU_PLUS_1_FLOAT
    best_real = min(reals, key=lambda x: abs(x - target), default=None)
    pair = None
    roots: list[ComplexRoot] = []
    if with_complex and rem.degree >= 1:
        roots = all_complex_roots(rem, center=SHIFT_CENTER)
        nonreal = [r for r in roots if r.im > 1e-9]
        if nonreal:
            near = min(nonreal, key=lambda r: abs(r.value - target))
            if best_real is None or abs(near.value - target) < abs(best_real - target):
                pair = near
    q_z = None if pair is not None else best_real
    others = [x for x in window if x != q_z]
    return ZeroReport(
        n=n,
        q_z=q_z,
        q_z_offset=None if q_z is None else q_z - target,
        q_z_prime=max(others) if others else None,
        all_real_zeros=reals,
        complex_pair=pair,
        lambda_tc_multiplicity=k,
        complex_roots=roots,
    )


def second_zero_predictor(k: KappaForm | Polynomial) -> float | None:
    """Smallest real zero of kappa_3 in ``[q_w, 3)``, if any.

    Such a zero is the limit of a second real chromatic zero as m grows.
    A root exactly at 3 is outside the half-open window.
    """
    k3 = k.kappa3 if isinstance(k, KappaForm) else k
    if k3.degree < 1:
        return None
    zs = _window_zeros(k3)
    return zs[0] if zs else None
