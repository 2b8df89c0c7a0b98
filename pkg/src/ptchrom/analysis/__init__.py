"""Tutte-bound ratios, zero reports, the limiting-locus classifier and W functions."""

from ptchrom.analysis.entropy import EntropyReport, OutsideDomain, w_function
from ptchrom.analysis.locus import (
    LocusPoint,
    RegionTag,
    classify_region,
    dominant_gap,
    locus_boundary_sample,
    render_svg,
)
from ptchrom.analysis.ratios import (
    BoundViolated,
    LimitReport,
    RatioReport,
    a_constant,
    ratio_d_closed,
    ratio_l_closed,
    ratio_limit,
    ratio_s_closed,
    tutte_bound,
    tutte_ratio,
)
from ptchrom.analysis.zeros import ZeroReport, q_w, q_w_interval, second_zero_predictor, zero_report

__all__ = [
    "BoundViolated",
    "EntropyReport",
    "LimitReport",
    "LocusPoint",
    "OutsideDomain",
    "RatioReport",
    "RegionTag",
    "ZeroReport",
    "a_constant",
    "classify_region",
    "dominant_gap",
    "locus_boundary_sample",
    "q_w",
    "q_w_interval",
    "ratio_d_closed",
    "ratio_l_closed",
    "ratio_limit",
    "ratio_s_closed",
    "render_svg",
    "second_zero_predictor",
    "tutte_bound",
    "tutte_ratio",
    "w_function",
    "zero_report",
]
