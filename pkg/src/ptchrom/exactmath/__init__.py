"""Exact rationals, Q(sqrt 5), polynomials and root finding."""

from ptchrom.exactmath.poly import Q, ExactDivisionError, Polynomial, RationalFunction
from ptchrom.exactmath.quadfield import (
    SQRT5,
    TAU,
    TAU_MINUS_1,
    TAU_MINUS_2,
    TAU_PLUS_1,
    QuadNum,
)
from ptchrom.exactmath.roots import (
    ComplexRoot,
    NoConvergence,
    NoSignChange,
    RootInterval,
    all_complex_roots,
    beraha,
    real_roots,
    refine_root,
    square_free_decomposition,
    sturm_count,
    sturm_isolate,
)


def quad_eval(p: Polynomial, x: QuadNum) -> QuadNum:
    """Exact value of ``p`` at ``x`` in Q(sqrt 5)."""
    return p.eval_quad(QuadNum.coerce(x))


__all__ = [
    "Q",
    "SQRT5",
    "TAU",
    "TAU_MINUS_1",
    "TAU_MINUS_2",
    "TAU_PLUS_1",
    "ComplexRoot",
    "ExactDivisionError",
    "NoConvergence",
    "NoSignChange",
    "Polynomial",
    "QuadNum",
    "RationalFunction",
    "RootInterval",
    "all_complex_roots",
    "beraha",
    "quad_eval",
    "real_roots",
    "refine_root",
    "square_free_decomposition",
    "sturm_count",
    "sturm_isolate",
]
