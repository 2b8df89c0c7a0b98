"""Ground-state degeneracy per vertex, W = lim P^(1/n), for real q."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Literal

from ptchrom.families.forms import LAMBDA_I, LAMBDA_TC
from ptchrom.families.genfunc import Q_C_F, cubic_roots

PGFAC_FAMILIES = ("B", "H", "L", "D", "D_fixed_m2", "D_fixed_m1", "D_diag")
Convention = Literal["default", "qn"]


class OutsideDomain(ValueError):
    """q is below the threshold of the requested convention."""


@dataclass(frozen=True)
class EntropyReport:
    family: str
    q: float
    W: float
    S0_positive: bool
    q_c: float | None
    convention: str


# (default minimum, qn minimum (exclusive), q_c)
_DOMAINS: dict[str, tuple[float, float, float | None]] = {
    "R": (4.0, 3.0, None),
    "TC": (3.0, 3.0, None),
    "I": (4.0, 3.0, None),
    "S": (4.0, 3.0, None),
    "S_fixed": (4.0, 3.0, None),
    "S_diag": (4.0, 3.0, None),
    "F": (4.0, Q_C_F, Q_C_F),
}


def _value(family: str, q: float) -> float:
    if family in PGFAC_FAMILIES:
        return q - 2
    if family == "R":
        return q - 3
    if family == "TC":
        return float(LAMBDA_TC(q)) ** (1 / 3)
    if family == "I":
        return float(LAMBDA_I(q)) ** (1 / 9)
    if family in ("S", "S_fixed", "S_diag"):
        return math.sqrt((q - 2) * (q - 3))
    if family == "F":
        return cubic_roots(q).lambda_f1.real
    raise KeyError(family)


def w_function(family: str, q: float, convention: Convention = "default") -> EntropyReport:
    """W at real ``q``.

    The default convention needs ``q >= 4`` (``q >= 3`` for TC), where the
    limits in n and q commute.  ``convention="qn"`` allows the window above
    the family's q_c and is labelled as such.
    """
    q = float(q)
    if family in PGFAC_FAMILIES:
        default_min, qn_min, q_c = 4.0, 3.0, 3.0
    elif family in _DOMAINS:
        default_min, qn_min, q_c = _DOMAINS[family]
    else:
        raise KeyError(f"no W function for family {family!r}")
    if convention == "default":
        if q < default_min:
            raise OutsideDomain(f"{family}: q = {q} < {default_min}; pass convention='qn' for 3 < q < 4")
    elif convention == "qn":
        if q <= qn_min:
            raise OutsideDomain(f"{family}: q = {q} must exceed {qn_min} for W_qn")
    else:
        raise ValueError(f"unknown convention {convention!r}")
    w = _value(family, q)
    label = "W" if convention == "default" else "W_qn"
    return EntropyReport(family=family, q=q, W=w, S0_positive=w > 1, q_c=q_c, convention=label)
