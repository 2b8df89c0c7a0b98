"""Exact checks of the conditions every structured coefficient set must satisfy."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product

from ptchrom.exactmath import TAU_MINUS_1, TAU_PLUS_1, Polynomial, QuadNum, RationalFunction
from ptchrom.families.forms import (
    CHI_RULES,
    GOLDEN_QUAD,
    StructuredForm,
    evaluate_form,
    kappas,
    q,
)


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    informational: bool = False


@dataclass
class ConstraintReport:
    family: str
    checks: list[Check] = field(default_factory=list)

    def add(self, name: str, passed: bool, informational: bool = False) -> None:
        self.checks.append(Check(name, bool(passed), informational))

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks if not c.informational)

    def failures(self) -> list[str]:
        return [c.name for c in self.checks if not c.passed and not c.informational]

    def __getitem__(self, name: str) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def lines(self) -> list[str]:
        out = []
        for c in self.checks:
            tag = "PASS" if c.passed else ("info" if c.informational else "FAIL")
            out.append(f"{tag:4}  {c.name}")
        return out


def vanishes_at(rf: RationalFunction, x: Fraction | int) -> bool:
    """True iff the reduced rational function is finite and zero at ``x``."""
    x = Fraction(x)
    return rf.num(x) == 0 and rf.den(x) != 0


def divisible_by(rf: RationalFunction, factor: Polynomial) -> bool:
    """``factor`` divides the numerator and shares nothing with the denominator."""
    if rf.is_zero():
        return True
    return factor.divides(rf.num) and factor.gcd(rf.den).degree == 0


def _label(idx: tuple[int, ...]) -> str:
    return "".join(str(i + 1) for i in idx)


def _group_conditions(f: StructuredForm, x: int, report: ConstraintReport) -> None:
    """Vanishing of ``P(x)`` for every admissible m, split by lambda-value pattern.

    Terms whose lambda values at ``x`` agree axis by axis are indistinguishable
    as functions of m, so each such group must sum to zero.  A zero value only
    contributes at ``m = 0`` and is required only where ``m_min`` allows it.
    """
    vals = [lam(Fraction(x)) for lam in f.lambdas]
    groups: dict[tuple, list[tuple[int, ...]]] = {}
    for idx in product(range(len(f.lambdas)), repeat=f.p):
        pattern = tuple(vals[i] for i in idx)
        groups.setdefault(pattern, []).append(idx)
    for pattern, members in sorted(groups.items(), key=lambda kv: kv[1]):
        live = [i for i in members if not f.coefficient(i).is_zero()]
        if not live:
            continue
        zero_axes = [a for a, v in enumerate(pattern) if v == 0]
        info = any(f.m_min[a] > 0 for a in zero_axes)
        total = sum((f.coefficient(i) for i in live), RationalFunction(Polynomial()))
        name = f"q={x}: " + " + ".join(f"c{_label(i)}" for i in live) + " = 0"
        report.add(name, vanishes_at(total, x), informational=info)


def _sampled_zeros(f: StructuredForm, rule: str | None, report: ConstraintReport) -> None:
    box = list(product(*(range(lo, lo + 4) for lo in f.m_min)))
    ok = all(evaluate_form(f, m)(x) == 0 for m in box for x in (0, 1, 2))
    report.add(f"P(0)=P(1)=P(2)=0 on {len(box)} members", ok)
    if rule is None:
        return
    pred = CHI_RULES[rule]
    members = [m for m in box if pred(m)]
    if members:
        ok = all(evaluate_form(f, m)(3) == 0 for m in members)
        report.add(f"P(3)=0 on {len(members)} chi=4 members", ok)
    others = [m for m in box if not pred(m)]
    if others:
        ok = all(evaluate_form(f, m)(3) != 0 for m in others)
        report.add(f"P(3)!=0 on {len(others)} chi=3 members", ok)


def _tau_axis_conditions(f: StructuredForm, report: ConstraintReport) -> None:
    """Terms growing faster than (tau-1)^alpha along some axis vanish at tau+1."""
    mags = [abs(lam.eval_quad(TAU_PLUS_1)) for lam in f.lambdas]
    for idx in sorted(f.coeffs):
        c = f.coeffs[idx]
        if c.is_zero():
            continue
        if any(mags[i] > TAU_MINUS_1 ** f.alpha[a] for a, i in enumerate(idx)):
            report.add(f"q=tau+1: (q^2-3q+1) | c{_label(idx)}", divisible_by(c, GOLDEN_QUAD))


def _pgfac_checks(f: StructuredForm, rule: str | None, report: ConstraintReport) -> None:
    c = [f.coefficient((j,)) for j in range(3)]
    for j in range(3):
        report.add(f"c{j + 1} is a polynomial", c[j].is_polynomial())
        report.add(f"q | c{j + 1}", divisible_by(c[j], q))
    report.add("(q-1) | c2", divisible_by(c[1], q - 1))
    report.add("(q^2-3q+1) | c3", divisible_by(c[2], GOLDEN_QUAD))
    report.add("q=1: c1 + c3 = 0", vanishes_at(c[0] + c[2], 1))
    report.add("q=1: c2 = 0", vanishes_at(c[1], 1))
    report.add("q=2: c2 + c3 = 0", vanishes_at(c[1] + c[2], 2))
    report.add("q=2: c1 = 0 (needed only if m=0 were admissible)", vanishes_at(c[0], 2),
               informational=True)
    if not all(x.is_polynomial() for x in c):
        return
    k1, k2, k3 = kappas(f)
    report.add("q=1: kappa1 = kappa3", k1(1) == k3(1))
    report.add("q=2: kappa2 = kappa3", k2(2) == k3(2))
    if rule == "4":
        report.add("q=3: kappa1 = kappa3 = 0", k1(3) == 0 and k3(3) == 0)
    elif rule == "3me4mo":
        report.add("q=3: kappa1 = kappa3", k1(3) == k3(3))
    elif rule == "3mo4me":
        report.add("q=3: kappa1 = -kappa3", k1(3) == -k3(3))


def _tensor_checks(f: StructuredForm, rule: str | None, report: ConstraintReport) -> None:
    for idx in sorted(f.coeffs):
        report.add(f"q | c{_label(idx)}", divisible_by(f.coeffs[idx], q))
    _group_conditions(f, 1, report)
    _group_conditions(f, 2, report)
    _tau_axis_conditions(f, report)
    report.add("(q-2) | c11", divisible_by(f.coefficient((0, 0)), q - 2))
    report.add("(q-1) | c22", divisible_by(f.coefficient((1, 1)), q - 1))
    c11 = f.coefficient((0, 0))
    if c11.is_zero():
        report.add("q=tau+1: (tau-1)^(5-beta) |c11| < 1", True)
    else:
        val = c11.num.eval_quad(TAU_PLUS_1) / c11.den.eval_quad(TAU_PLUS_1)
        bound = abs(val) * TAU_MINUS_1 ** (5 - f.beta)
        report.add("q=tau+1: (tau-1)^(5-beta) |c11| < 1", bound < QuadNum(1))
    if rule is not None and f.p == 2:
        # at q=3 the basis is (1, 0, -1); with m1, m2 >= 1 only indices 1, 3 survive
        pred = CHI_RULES[rule]
        for par in product((0, 1), repeat=2):
            if not pred((par[0] + 2, par[1] + 2)):
                continue
            total = RationalFunction(Polynomial())
            for i, j in product((0, 2), repeat=2):
                s = (-1) ** ((par[0] if i == 2 else 0) + (par[1] if j == 2 else 0))
                total = total + f.coefficient((i, j)) * s
            name = "q=3: c11 {} c13 {} c31 {} c33 = 0".format(
                *("-" if (-1) ** e < 0 else "+" for e in (par[1], par[0], par[0] + par[1])))
            report.add(name, vanishes_at(total, 3))


def _diagonal_checks(f: StructuredForm, rule: str | None, report: ConstraintReport) -> None:
    c = [f.coefficient((j,)) for j in range(6)]
    report.add("q=1: c1 + c3 + c5 = 0", vanishes_at(c[0] + c[2] + c[4], 1))
    report.add("q=1: c2 = 0", vanishes_at(c[1], 1))
    report.add("q=1: c4 + c6 = 0", vanishes_at(c[3] + c[5], 1))
    report.add("q=2: c1 = 0", vanishes_at(c[0], 2))
    report.add("q=2: c2 + c3 + c6 = 0", vanishes_at(c[1] + c[2] + c[5], 2))
    report.add("q=2: c4 + c5 = 0", vanishes_at(c[3] + c[4], 2))
    for j in (2, 4, 5):
        report.add(f"q=tau+1: (q^2-3q+1) | c{j + 1}", divisible_by(c[j], GOLDEN_QUAD))
    report.add("(q-2) | c1", divisible_by(c[0], q - 2))
    report.add("(q-1) | c2", divisible_by(c[1], q - 1))
    if rule in ("3me4mo", "4"):
        report.add("q=3, m odd: c1 + c3 - c5 = 0", vanishes_at(c[0] + c[2] - c[4], 3))
    if rule == "4":
        report.add("q=3, m even: c1 + c3 + c5 = 0", vanishes_at(c[0] + c[2] + c[4], 3))


def verify_structure_constraints(f: StructuredForm, chi_rule: str | None = "default") -> ConstraintReport:
    """Run every applicable exact check; ``chi_rule`` defaults to the form's own rule."""
    rule = f.chi_rule if chi_rule == "default" else chi_rule
    if rule is not None and rule not in CHI_RULES:
        raise ValueError(f"unknown chi rule {rule!r}")
    report = ConstraintReport(f.name)
    if f.kind == "pgfac":
        _pgfac_checks(f, rule, report)
        _tau_axis_conditions(f, report)
    elif f.kind == "tensor":
        _tensor_checks(f, rule, report)
    elif f.kind == "diagonal":
        _diagonal_checks(f, rule, report)
    _sampled_zeros(f, rule, report)
    return report
