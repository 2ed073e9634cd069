"""Exact inverse Satake transforms for spherical varieties.

Everything computes over the rationals (with a square root of q), so
every table, polynomial, and verification in this package is bit
exact.  See the README for the layout and the demos directory for
worked sessions.
"""

from .cone_series import (
    ConeSeries,
    ConeSpec,
    cone_witness,
    expand_product,
    geometric_inverse,
    lattice_points,
    make_spec,
    restrict_antidominant,
    series_equal,
    series_mul,
)
from .datumfile import parse_datum, render_datum
from .errors import (
    BadParameters,
    DatumInvariantError,
    DirectionNotInCone,
    FormatError,
    GroupTooLarge,
    IncompatibleSpec,
    MathError,
    NotAntidominant,
    NotPolynomial,
    NotStrictlyConvex,
    OutOfBound,
    RhoInConeSpan,
    SatakeError,
    UnknownPreset,
)
from .li_oracle import (
    LiDatum,
    LiReport,
    li_coefficient,
    li_datum,
    li_equivalence_check,
    li_partition,
)
from .qlaurent import (
    ONE,
    ZERO,
    QLaurent,
    parse_qlaurent,
    qadd,
    qinvert_q,
    qmonomial,
    qmul,
    qneg,
)
from .rep_chars import lowest_weight_rep, weyl_denominator, weyl_dimension
from .root_weyl import (
    ReflectionDatum,
    RootDatum,
    WeylGroup,
    adjoint_a1_datum,
    antidominant_weights,
    b2_datum,
    dominant_image,
    enumerate_weyl,
    gl_datum,
    half_sum_positive_coroots,
    is_antidominant,
    sl2_datum,
    stock_datum,
    weyl_of,
)
from .spherical import (
    HeckeValueTable,
    SphericalDatum,
    SymmetricPolynomial,
    basic_asymptotics,
    extended_cone_spec,
    group_preset,
    inverse_satake_lfun,
    l_series,
    macdonald_p,
    pairing,
    preset,
    sp2n_gl2n_preset,
    whittaker_preset,
)

__version__ = "0.1.0"

__all__ = [
    "BadParameters",
    "ConeSeries",
    "ConeSpec",
    "DatumInvariantError",
    "DirectionNotInCone",
    "FormatError",
    "GroupTooLarge",
    "HeckeValueTable",
    "IncompatibleSpec",
    "LiDatum",
    "LiReport",
    "MathError",
    "NotAntidominant",
    "NotPolynomial",
    "NotStrictlyConvex",
    "ONE",
    "OutOfBound",
    "QLaurent",
    "ReflectionDatum",
    "RhoInConeSpan",
    "RootDatum",
    "SatakeError",
    "SphericalDatum",
    "SymmetricPolynomial",
    "UnknownPreset",
    "WeylGroup",
    "ZERO",
    "adjoint_a1_datum",
    "antidominant_weights",
    "b2_datum",
    "basic_asymptotics",
    "cone_witness",
    "dominant_image",
    "enumerate_weyl",
    "expand_product",
    "extended_cone_spec",
    "geometric_inverse",
    "gl_datum",
    "group_preset",
    "half_sum_positive_coroots",
    "inverse_satake_lfun",
    "is_antidominant",
    "l_series",
    "lattice_points",
    "li_coefficient",
    "li_datum",
    "li_equivalence_check",
    "li_partition",
    "lowest_weight_rep",
    "macdonald_p",
    "make_spec",
    "pairing",
    "parse_datum",
    "parse_qlaurent",
    "preset",
    "qadd",
    "qinvert_q",
    "qmonomial",
    "qmul",
    "qneg",
    "render_datum",
    "restrict_antidominant",
    "series_equal",
    "series_mul",
    "sl2_datum",
    "sp2n_gl2n_preset",
    "stock_datum",
    "weyl_denominator",
    "weyl_dimension",
    "weyl_of",
    "whittaker_preset",
]
