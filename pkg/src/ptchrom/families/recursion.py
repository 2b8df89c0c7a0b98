"""Linear recursions in one or more parameters generated by the lambda powers."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Sequence

from ptchrom.exactmath import Polynomial
from ptchrom.families.forms import CANONICAL_BASIS, LambdaBasis, StructuredForm, evaluate_form


@dataclass(frozen=True)
class RecursionSpec:
    """``sum_i b_i P(m - i) = 0`` over multi-indices ``i`` in ``{0..order}^p``, ``b_0 = 1``."""

    p: int
    order: int
    b: dict[tuple[int, ...], Polynomial]

    def coefficient(self, idx: tuple[int, ...]) -> Polynomial:
        return self.b.get(idx, Polynomial())


def _elementary(terms: Sequence[Polynomial]) -> list[Polynomial]:
    """Coefficients of ``prod_i (1 - lambda_i x)``, constant term first."""
    out = [Polynomial.const(1)]
    for lam in terms:
        nxt = out + [Polynomial()]
        for k in range(len(out)):
            nxt[k + 1] = nxt[k + 1] - lam * out[k]
        out = nxt
    return out


def recursion_from_basis(basis: LambdaBasis | Sequence[Polynomial] = CANONICAL_BASIS,
                         p: int = 1) -> RecursionSpec:
    """Recursion annihilating every ``prod_l lambda_{i_l}^{m_l}``.

    In several parameters the generating denominator is the product of the
    one-parameter denominators, so ``b_{i_1..i_p} = prod_l b_{i_l}`` over the
    full index box (entries with some ``i_l = 0`` included).
    """
    if p < 1:
        raise ValueError("p must be at least 1")
    terms = basis.terms if isinstance(basis, LambdaBasis) else tuple(basis)
    one = _elementary(terms)
    order = len(terms)
    b: dict[tuple[int, ...], Polynomial] = {}
    for idx in product(range(order + 1), repeat=p):
        val = Polynomial.const(1)
        for i in idx:
            val = val * one[i]
        if not val.is_zero():
            b[idx] = val
    return RecursionSpec(p=p, order=order, b=b)


def verify_recursion(f: StructuredForm, spec: RecursionSpec,
                     m_range: Sequence[tuple[int, int]]) -> bool:
    """Exact check of the recursion at every multi-index in the box ``m_range``.

    ``m_range`` holds one inclusive ``(lo, hi)`` pair per parameter; the low
    end must leave room for ``order`` steps above ``m_min``.
    """
    if spec.p != f.p or len(m_range) != f.p:
        raise ValueError("dimension mismatch between form, recursion and range")
    for (lo, _), mm in zip(m_range, f.m_min):
        if lo < mm + spec.order:
            raise ValueError(f"range start {lo} must be at least m_min + {spec.order}")
    for m in product(*(range(lo, hi + 1) for lo, hi in m_range)):
        acc = Polynomial()
        for idx, b in spec.b.items():
            acc = acc + b * evaluate_form(f, [x - i for x, i in zip(m, idx)])
        if not acc.is_zero():
            return False
    return True


def perturbed(spec: RecursionSpec, idx: tuple[int, ...], delta: Polynomial) -> RecursionSpec:
    """Copy of ``spec`` with ``delta`` added to one coefficient (for negative controls)."""
    b = dict(spec.b)
    b[idx] = b.get(idx, Polynomial()) + delta
    return RecursionSpec(p=spec.p, order=spec.order, b=b)
