"""Regenerate the zero, ratio and summary tables and diff them against golden CSVs."""

from __future__ import annotations

import csv
import io
import re
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Callable

from ptchrom.analysis import (
    a_constant,
    ratio_limit,
    tutte_ratio,
    zero_report,
)
from ptchrom.exactmath import QuadNum
from ptchrom.families import (
    F_GF,
    StructuredForm,
    evaluate_form,
    f_polynomials,
    family_form,
)

TABLE_IDS = ("L_zeros", "D0_zeros", "D2_zeros", "D3_zeros", "D_ratios", "D_limit_ratios", "summary")
ZERO_TOL = 5e-6
CC_PAIR = "c.c. pair"
NO_ZERO = "nz"


@dataclass(frozen=True)
class TableSpec:
    table_id: str
    rows: tuple[int, int] | None = None

    def __post_init__(self) -> None:
        if self.table_id not in TABLE_IDS:
            raise ValueError(f"unknown table {self.table_id!r}; choose from {', '.join(TABLE_IDS)}")


@dataclass(frozen=True)
class Table:
    header: list[str]
    rows: list[list[str]]

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(self.header)
        w.writerows(self.rows)
        return buf.getvalue()

    def to_records(self) -> list[dict[str, str]]:
        return [dict(zip(self.header, r)) for r in self.rows]


def _g(x: float, sig: int = 7) -> str:
    return f"{x:.{sig}g}"


# zero tables -----------------------------------------------------------------

_ZERO_TABLES: dict[str, tuple[Callable[[], StructuredForm], int, range, bool]] = {
    # id: (form, n - m, default n range, two-zero layout)
    "L_zeros": (lambda: family_form("L"), 5, range(9, 21), False),
    "D0_zeros": (lambda: family_form("D_fixed_m2", 0), 5, range(10, 26), False),
    "D2_zeros": (lambda: family_form("D_fixed_m2", 2), 7, range(11, 25), True),
    "D3_zeros": (lambda: family_form("D_fixed_m2", 3), 8, range(12, 27), True),
}


def zero_table(table_id: str, n_range: tuple[int, int] | None = None) -> Table:
    make, shift, default, two = _ZERO_TABLES[table_id]
    f = make()
    ns = range(n_range[0], n_range[1] + 1) if n_range else default
    rows = []
    for n in ns:
        rep = zero_report(evaluate_form(f, [n - shift]), n)
        qz = CC_PAIR if rep.q_z is None else _g(rep.q_z)
        if two:
            qp = NO_ZERO if rep.q_z_prime is None else _g(rep.q_z_prime)
            rows.append([str(n), qz, qp])
        else:
            off = "" if rep.q_z_offset is None else _g(rep.q_z_offset, 4)
            rows.append([str(n), qz, off])
    header = ["n", "q_z", "q_z_prime" if two else "offset"]
    return Table(header, rows)


# ratio tables ------------------------------------------------------------------


def d_ratio_value(m1: int | None, m2: int | None) -> QuadNum:
    """``r(D_{m1,m2})`` from the polynomial, or from the limit when an index is None."""
    d = family_form("D")
    if m1 is None and m2 is None:
        return ratio_limit(d, "both").r_inf
    if m1 is None:
        return ratio_limit(d, "m1", m2).r_inf
    if m2 is None:
        return ratio_limit(d, "m2", m1).r_inf
    return tutte_ratio(evaluate_form(d, [m1, m2]), d.n_vertices([m1, m2])).r_exact


def d_ratio_table(size: int = 7) -> Table:
    idx: list[int | None] = list(range(size)) + [None]
    label = lambda i: "inf" if i is None else str(i)  # noqa: E731
    rows = []
    for m1 in idx:
        rows.append([label(m1)] + [f"{float(d_ratio_value(m1, m2)):.6f}" for m2 in idx])
    return Table(["m1"] + [label(i) for i in idx], rows)


def d_limit_table(k_max: int = 10) -> Table:
    d = family_form("D")
    rows = []
    for k in range(k_max + 1):
        val = ratio_limit(d, "m1", k).r_inf
        name = f"r(D_inf,{k})"
        if k >= 2:
            other = ratio_limit(d, "m2", k - 2).r_inf
            if other != val:
                raise ArithmeticError(f"r(D_inf,{k}) != r(D_{k - 2},inf)")
            name += f" = r(D_{k - 2},inf)"
        rows.append([name, str(val), f"{float(val):.6f}"])
    both = ratio_limit(d, "both").r_inf
    rows.append(["r(D_inf,inf)", str(both), f"{float(both):.6f}"])
    return Table(["quantity", "exact", "numeric"], rows)


# summary -------------------------------------------------------------------------


def _n_formula(alpha: int, beta: int) -> str:
    head = "m" if alpha == 1 else f"{alpha}m"
    return head if beta == 0 else f"{head}+{beta}"


_CHI_TEXT = {"4": "4", "3": "3", "3me4mo": "3me,4mo", "3mo4me": "3mo,4me", "4m2": "4 if m>=2"}


def _chi_from_polys(polys: list, m_start: int) -> str:
    """Describe chi = 3 or 4 over the sampled members from exact P(3)."""
    zero = [p(3) == 0 for p in polys]
    if all(zero):
        return "4"
    if not any(zero):
        return "3"
    first = next(i for i in range(len(zero)) if zero[i] and all(zero[i:]))
    return f"4 if m>={first + m_start}"


def summary_table() -> Table:
    rows: list[list[str]] = []

    def add(label: str, f: StructuredForm, direction: str = "m") -> None:
        if f.p == 1:
            lim = ratio_limit(f)
            a = lim.a_const
        else:
            lim = ratio_limit(f, "both")
            a = a_constant(f)
        n = _n_formula(sum(f.alpha), f.beta)
        rows.append([label, n, _CHI_TEXT.get(f.chi_rule or "", "?"), str(len(f.nonzero_terms())),
                     str(lim.r_inf), _g(a, 4)])

    add("R_m", family_form("R"))
    add("TC_m", family_form("TC"))
    add("I_m", family_form("I"))
    fp = f_polynomials(12)
    rows.append(["F_m", "m+4", _chi_from_polys(fp, 1), "3", "0", _g(a_constant(F_GF), 4)])
    for label, name, k in (
        ("B_m", "B", None), ("H_m", "H", None), ("L_m", "L", None),
        ("D_{m-4,0}", "D_fixed_m2", 0), ("D_{m-4,1}", "D_fixed_m2", 1),
        ("D_{0,m-2}", "D_fixed_m1", 0), ("D_{1,m-2}", "D_fixed_m1", 1),
    ):
        add(label, family_form(name, k))
    add("D_{m,m}", family_form("D_diag"))
    add("S_{m,m}", family_form("S_diag"))
    return Table(["family", "n", "chi", "j_max", "r_inf", "a"], rows)


def build_table(spec: TableSpec) -> Table:
    if spec.table_id in _ZERO_TABLES:
        return zero_table(spec.table_id, spec.rows)
    if spec.table_id == "D_ratios":
        return d_ratio_table()
    if spec.table_id == "D_limit_ratios":
        return d_limit_table()
    return summary_table()


# golden comparison ----------------------------------------------------------------

_NUM = re.compile(r"^[+-]?(\d+\.?\d*|\.\d+)([eE][+-]?\d+)?$")


def _half_ulp(text: str) -> float:
    """Half a unit in the last printed digit of a decimal string."""
    mant, _, exp = text.lower().partition("e")
    decimals = len(mant.split(".")[1]) if "." in mant else 0
    return 0.5 * 10.0 ** (-decimals + (int(exp) if exp else 0))


def _close(got: str, want: str, floor: float) -> bool:
    if _NUM.match(want) and _NUM.match(got or "x"):
        return abs(float(got) - float(want)) <= max(floor, _half_ulp(want)) * (1 + 1e-9)
    if "√5" in want or "√5" in got:
        try:
            return QuadNum.parse(got) == QuadNum.parse(want)
        except ValueError:
            return False
    return got.strip() == want.strip()


# per-table tolerance floors: zero locations to 5e-6; "k decimals" means |d| < 1.5e-k
_FLOORS = {
    "L_zeros": ZERO_TOL,
    "D0_zeros": ZERO_TOL,
    "D2_zeros": ZERO_TOL,
    "D3_zeros": ZERO_TOL,
    "D_ratios": 1.5e-4,
    "D_limit_ratios": 1.5e-6,
}


def golden_path(table_id: str, directory: str | Path | None = None) -> Path:
    if directory is not None:
        return Path(directory) / f"{table_id}.csv"
    return Path(str(resources.files("ptchrom") / "data" / "golden" / f"{table_id}.csv"))


def read_golden(table_id: str, directory: str | Path | None = None) -> Table:
    with open(golden_path(table_id, directory), newline="", encoding="utf-8") as fh:
        data = list(csv.reader(fh))
    return Table(data[0], data[1:])


@dataclass(frozen=True)
class Mismatch:
    row: str
    column: str
    got: str
    want: str


def diff_tables(table_id: str, got: Table, want: Table) -> list[Mismatch]:
    """Cell-by-cell comparison keyed on the first column."""
    floor = _FLOORS.get(table_id, 0.0)
    index = {r[0]: r for r in got.rows}
    out = []
    for row in want.rows:
        key = row[0]
        mine = index.get(key)
        if mine is None:
            out.append(Mismatch(key, "*", "<missing>", ",".join(row)))
            continue
        for col, w, g in zip(want.header[1:], row[1:], mine[1:]):
            if not _close(g, w, floor):
                out.append(Mismatch(key, col, g, w))
    return out
