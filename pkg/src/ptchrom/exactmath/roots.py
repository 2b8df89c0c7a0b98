"""Real root isolation (Sturm), bisection refinement and Aberth complex roots."""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from ptchrom.exactmath.poly import Polynomial, _prem, int_sign_at

DEFAULT_SEED = 20040
DEFAULT_TOL = 1e-10


class NoSignChange(ArithmeticError):
    """The polynomial does not change sign across the interval."""


class NoConvergence(ArithmeticError):
    """Aberth iteration failed to converge within the iteration budget."""


@dataclass(frozen=True)
class RootInterval:
    """Isolating interval ``(lo, hi]`` for one distinct real root."""

    lo: Fraction
    hi: Fraction
    refined: float
    multiplicity: int = 1

    def __post_init__(self) -> None:
        if not self.lo < self.hi:
            raise ValueError("RootInterval needs lo < hi")
        if self.multiplicity < 1:
            raise ValueError("multiplicity must be positive")

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo


@dataclass(frozen=True)
class ComplexRoot:
    re: float
    im: float
    residual: float

    @property
    def value(self) -> complex:
        return complex(self.re, self.im)

    def is_real(self) -> bool:
        return self.im == 0.0


# Sturm machinery -----------------------------------------------------


def sturm_sequence(p: Polynomial) -> list[list[int]]:
    """Primitive integer Sturm sequence of ``p`` (signs preserved)."""
    a = p.integer_coeffs()
    b = _positive_content([i * c for i, c in enumerate(a)][1:])
    seq = [a]
    while b:
        seq.append(b)
        r = _prem(a, b)
        a, b = b, _positive_content([-x for x in r])
    return seq


def _positive_content(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    g = math.gcd(*a) if a else 0
    return [x // g for x in a] if g > 1 else a


def sign_variations(seq: list[list[int]], x: Fraction) -> int:
    signs = [s for s in (int_sign_at(f, x) for f in seq) if s]
    return sum(1 for u, v in zip(signs, signs[1:]) if u != v)


def sturm_count(p: Polynomial, lo, hi) -> int:
    """Number of distinct real roots of ``p`` in ``(lo, hi]``."""
    seq = sturm_sequence(p)
    return sign_variations(seq, Fraction(lo)) - sign_variations(seq, Fraction(hi))


def square_free_decomposition(p: Polynomial) -> list[tuple[Polynomial, int]]:
    """Yun's algorithm: monic factors ``f_k`` with ``p = c * prod f_k**k``."""
    if p.degree <= 0:
        return []
    dp = p.derivative()
    a0 = p.gcd(dp)
    b = p.exact_div(a0)
    c = dp.exact_div(a0)
    d = c - b.derivative()
    out: list[tuple[Polynomial, int]] = []
    k = 1
    while b.degree > 0:
        a = b.gcd(d)
        if a.degree > 0:
            out.append((a.monic(), k))
        b = b.exact_div(a)
        c = d.exact_div(a)
        d = c - b.derivative()
        k += 1
    return out


def _bisect(ints: list[int], lo: Fraction, hi: Fraction, tol: Fraction) -> tuple[Fraction, Fraction]:
    """Shrink ``(lo, hi]`` around the unique simple sign change of ``ints``."""
    s_hi = int_sign_at(ints, hi)
    if s_hi == 0:
        # pin an exact root at hi by a tiny symmetric bracket
        return hi, hi
    # one simple root inside, so the sign just right of lo is -s_hi even if p(lo) = 0
    s_lo = -s_hi
    while hi - lo > tol:
        mid = (lo + hi) / 2
        s = int_sign_at(ints, mid)
        if s == 0:
            return mid, mid
        if s == s_lo:
            lo = mid
        else:
            hi = mid
    return lo, hi


def _isolate_square_free(f: Polynomial, lo: Fraction, hi: Fraction) -> list[tuple[Fraction, Fraction]]:
    seq = sturm_sequence(f)
    out: list[tuple[Fraction, Fraction]] = []
    stack = [(lo, hi, sign_variations(seq, lo), sign_variations(seq, hi))]
    while stack:
        a, b, va, vb = stack.pop()
        cnt = va - vb
        if cnt == 0:
            continue
        if cnt == 1:
            out.append((a, b))
            continue
        mid = (a + b) / 2
        vm = sign_variations(seq, mid)
        stack.append((mid, b, vm, vb))
        stack.append((a, mid, va, vm))
    out.sort()
    return out


def sturm_isolate(p: Polynomial, lo, hi, tol: float = DEFAULT_TOL) -> list[RootInterval]:
    """Disjoint isolating intervals for the distinct real roots of ``p`` in ``(lo, hi]``.

    Intervals are narrowed to width below ``tol``; exact rational roots come
    back as a tiny bracket whose right end is the root.
    """
    if p.is_zero():
        raise ValueError("cannot isolate roots of the zero polynomial")
    lo, hi = Fraction(lo), Fraction(hi)
    ftol = Fraction(tol) if tol > 0 else Fraction(1, 10**12)
    found: list[tuple[Fraction, Fraction, int, list[int]]] = []
    for f, k in square_free_decomposition(p):
        ints = f.integer_coeffs()
        for a, b in _isolate_square_free(f, lo, hi):
            a, b = _bisect(ints, a, b, ftol)
            if a == b:
                # exact root: bracket it inside (lo, hi]
                eps = min(ftol, (a - lo)) / 2 if a > lo else ftol / 2
                a = b - eps
            found.append((a, b, k, ints))
    found.sort(key=lambda t: t[0])
    # separate factors whose brackets still overlap
    changed = True
    while changed:
        changed = False
        for i in range(len(found) - 1):
            a1, b1, k1, f1 = found[i]
            a2, b2, k2, f2 = found[i + 1]
            if b1 > a2:
                w = max(b1 - a1, b2 - a2) / 4
                n1 = _bisect(f1, a1, b1, w) if int_sign_at(f1, b1) else (b1 - w, b1)
                n2 = _bisect(f2, a2, b2, w) if int_sign_at(f2, b2) else (b2 - w, b2)
                if n1[0] == n1[1]:
                    n1 = (n1[1] - w, n1[1])
                if n2[0] == n2[1]:
                    n2 = (n2[1] - w, n2[1])
                found[i] = (n1[0], n1[1], k1, f1)
                found[i + 1] = (n2[0], n2[1], k2, f2)
                found.sort(key=lambda t: t[0])
                changed = True
                break
    out = []
    for a, b, k, ints in found:
        mid = float(b) if int_sign_at(ints, b) == 0 else float((a + b) / 2)
        out.append(RootInterval(a, b, mid, k))
    return out


def refine_root(p: Polynomial, iv: RootInterval, tol: float = DEFAULT_TOL) -> float:
    """Bisect ``iv`` against ``p`` until narrower than ``tol``; return the midpoint."""
    ints = p.integer_coeffs()
    lo, hi = iv.lo, iv.hi
    s_hi = int_sign_at(ints, hi)
    if s_hi == 0:
        return float(hi)
    s_lo = int_sign_at(ints, lo)
    if s_lo == 0 or s_lo == s_hi:
        raise NoSignChange(f"no sign change of p on ({float(lo)}, {float(hi)}]")
    a, b = _bisect(ints, lo, hi, Fraction(tol))
    return float((a + b) / 2)


def real_roots(p: Polynomial, lo, hi, tol: float = DEFAULT_TOL) -> list[float]:
    """Distinct real roots in ``(lo, hi]`` as floats."""
    return [iv.refined for iv in sturm_isolate(p, lo, hi, tol)]


# complex roots -------------------------------------------------------


def _seed() -> int:
    env = os.environ.get("CHROMA_SEED")
    if env is None or env.strip() == "":
        return DEFAULT_SEED
    return int(env)


def _aberth(coeffs_hi: np.ndarray, rng: np.random.Generator, max_iter: int) -> np.ndarray:
    """Aberth-Ehrlich on a float coefficient vector (highest power first)."""
    deg = len(coeffs_hi) - 1
    c = coeffs_hi / coeffs_hi[0]
    radius = 1.0 + float(np.max(np.abs(c[1:]))) if deg else 1.0
    # start inside the Cauchy bound, spread over a circle with random phases
    r0 = min(radius, max(1.0, float(np.abs(c[-1])) ** (1.0 / deg)))
    phases = rng.uniform(0.0, 2.0 * math.pi, deg) + 2.0 * math.pi * np.arange(deg) / deg
    z = r0 * np.exp(1j * phases)
    dc = np.polyder(c)
    for _ in range(max_iter):
        pz = np.polyval(c, z)
        dz = np.polyval(dc, z)
        with np.errstate(divide="ignore", invalid="ignore"):
            w = pz / dz
            diff = z[:, None] - z[None, :]
            np.fill_diagonal(diff, 1.0)
            inv = 1.0 / diff
            np.fill_diagonal(inv, 0.0)
            s = inv.sum(axis=1)
            step = w / (1.0 - w * s)
        step = np.where(np.isfinite(step), step, 0.0)
        z = z - step
        if np.all(np.abs(step) <= 1e-15 * np.maximum(1.0, np.abs(z))):
            return z
    return z


def _exact_abs_eval(p: Polynomial, z: complex) -> tuple[float, float]:
    """``|p(z)|`` and ``sum |c_i| |z|^i`` evaluated exactly at the float point ``z``."""
    xr, xi = Fraction(z.real), Fraction(z.imag)
    ar, ai = Fraction(0), Fraction(0)
    for c in reversed(p.coeffs):
        ar, ai = ar * xr - ai * xi + c, ar * xi + ai * xr
    mag = math.hypot(float(ar), float(ai))
    az = abs(z)
    scale = sum(abs(float(c)) * az**i for i, c in enumerate(p.coeffs))
    return mag, scale


def _symmetrize(z: np.ndarray) -> list[complex]:
    """Pair roots into exact conjugates; near-real singletons become real."""
    roots = list(z)
    real: list[complex] = []
    upper = sorted((r for r in roots if r.imag > 0), key=lambda r: (r.real, r.imag))
    lower = [r for r in roots if r.imag <= 0]
    out: list[complex] = []
    for u in upper:
        if not lower:
            real.append(u)
            continue
        j = min(range(len(lower)), key=lambda k: abs(lower[k] - u.conjugate()))
        l = lower[j]
        tol = 1e-7 * max(1.0, abs(u))
        if abs(u.imag) < tol and abs(l - u.conjugate()) > abs(u.imag):
            real.append(u)
            continue
        lower.pop(j)
        avg = (u + l.conjugate()) / 2
        if abs(avg.imag) < 1e-12 * max(1.0, abs(avg)):
            real.extend([complex(u.real, 0.0), complex(l.real, 0.0)])
        else:
            out.extend([avg, avg.conjugate()])
    real.extend(lower)
    out.extend(complex(r.real, 0.0) for r in real)
    return out


def _roots_square_free(f: Polynomial, center: Fraction, rng: np.random.Generator,
                       max_iter: int) -> list[complex]:
    g = f.shift(center) if center else f
    # strip exact roots at the shift center
    zeros_at_center = 0
    while g.degree > 0 and g[0] == 0:
        g = Polynomial(g.coeffs[1:])
        zeros_at_center += 1
    out = [complex(float(center), 0.0)] * zeros_at_center
    if g.degree <= 0:
        return out
    coeffs = np.array([float(c) for c in reversed(g.coeffs)], dtype=float)
    if g.degree == 1:
        z = np.array([complex(-coeffs[1] / coeffs[0], 0.0)])
    else:
        z = _aberth(coeffs, rng, max_iter)
    z = np.array(_symmetrize(z))
    out.extend(complex(r.real + float(center), r.imag) for r in z)
    return out


def _snap_rational(f: Polynomial, z: complex) -> complex:
    """Replace a nearly real root by a nearby small-denominator rational if that is exact."""
    if abs(z.imag) > 1e-6 * max(1.0, abs(z)):
        return z
    for cand in (Fraction(round(z.real)), Fraction(z.real).limit_denominator(64)):
        if abs(float(cand) - z.real) < 1e-6 * max(1.0, abs(z)) and f(cand) == 0:
            return complex(float(cand), 0.0)
    return z


def all_complex_roots(p: Polynomial, center=None, max_iter: int = 2000,
                      seed: int | None = None) -> list[ComplexRoot]:
    """All complex roots of ``p`` with multiplicity.

    Each square-free factor is solved separately by Aberth-Ehrlich iteration
    after an optional exact Taylor shift to ``center``, which improves the
    float conditioning of roots clustered near that point.  ``residual`` is
    ``|p(z)|`` evaluated exactly at the returned float root.
    """
    if p.degree < 1:
        raise ValueError("all_complex_roots needs degree >= 1")
    rng = np.random.default_rng(_seed() if seed is None else seed)
    c = Fraction(0) if center is None else Fraction(center)
    result: list[ComplexRoot] = []
    for f, k in square_free_decomposition(p):
        zs = [_snap_rational(f, z) for z in _roots_square_free(f, c, rng, max_iter)]
        for z in zs:
            mag, scale = _exact_abs_eval(f, z)
            if mag > 1e-8 * max(scale, 1e-300):
                raise NoConvergence(f"root {z} has residual {mag:.3e} (scale {scale:.3e})")
            res, _ = _exact_abs_eval(p, z)
            result.extend([ComplexRoot(z.real, z.imag, res)] * k)
    result.sort(key=lambda r: (r.re, r.im))
    return result


def beraha(r: int) -> float:
    """Tutte-Beraha number ``4 cos^2(pi/r)``."""
    if r < 1:
        raise ValueError("beraha needs r >= 1")
    return 2.0 + 2.0 * math.cos(2.0 * math.pi / r)
