"""Spherical data and the transforms attached to them.

A SphericalDatum packages the dual root data on the coweight lattice,
the colored denominator directions (theta, sigma, r) contributing
factors (1 - sigma q^-r e^theta), the parabolic half-sum functional
used to normalize Hecke values, and the generators of the cone that
supports all expansions.

On top of the datum this module provides:

* `macdonald_p`: the symmetrized family P_lambda, computed by clearing
  all Weyl summands to the common denominator prod over the full root
  set of (1 - e^gamma) and dividing exactly; a nonzero remainder is an
  error, never silently truncated.
* `basic_asymptotics`: the cone expansion of
  prod(1 - e^gamma) / prod(1 - sigma q^-r e^theta).
* `l_series` and `inverse_satake_lfun`: the L-function generating
  series of a representation with antidominant lowest weight rho, its
  product with the basic asymptotics, and the resulting table of
  normalized Hecke values q^<rho_px, lambda> times the coefficient.
* `pairing`: the constant-term inner product under which the family
  P_lambda is orthogonal, computed through the one-sided kernel of
  `_pairing_kernel` so that every query is a finite exact sum.

Everything is exact and deterministic; no floats anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .cone_series import (
    ConeSeries,
    ConeSpec,
    expand_product,
    restrict_antidominant,
    series_mul,
)
from .errors import (
    BadParameters,
    DatumInvariantError,
    NotPolynomial,
    NotStrictlyConvex,
    RhoInConeSpan,
    UnknownPreset,
)
from .linalg import find_witness, in_rational_span
from .qlaurent import ONE, QLaurent, qmonomial
from .rep_chars import WeightMultiset, lowest_weight_rep
from .root_weyl import (
    ReflectionDatum,
    RootDatum,
    Vec,
    WeylGroup,
    intify,
    mat_apply,
    pair,
    stock_datum,
    vadd,
    vneg,
    vsub,
    weyl_of,
)

__all__ = [
    "SphericalDatum",
    "SymmetricPolynomial",
    "HeckeValueTable",
    "preset",
    "group_preset",
    "whittaker_preset",
    "sp2n_gl2n_preset",
    "macdonald_p",
    "basic_asymptotics",
    "l_series",
    "inverse_satake_lfun",
    "pairing",
]

GroupRing = dict[Vec, QLaurent]

ThetaTriple = tuple[Vec, int, Fraction]


@dataclass(frozen=True)
class SphericalDatum:
    """Dual root data, denominator colors, normalizer, and support cone."""

    rank: int
    positive: tuple[ReflectionDatum, ...]
    theta_plus: tuple[ThetaTriple, ...]
    rho_px: tuple[Fraction, ...]
    cone_cx: tuple[Vec, ...]

    def __post_init__(self):
        object.__setattr__(self, "positive", tuple(self.positive))
        object.__setattr__(
            self,
            "theta_plus",
            tuple((intify(t), int(s), Fraction(r)) for t, s, r in self.theta_plus),
        )
        object.__setattr__(self, "rho_px", tuple(Fraction(x) for x in self.rho_px))
        object.__setattr__(self, "cone_cx", tuple(intify(g) for g in self.cone_cx))
        if len(self.rho_px) != self.rank:
            raise DatumInvariantError("rho_px rank mismatch")
        for d in self.positive:
            if len(d.coroot) != self.rank:
                raise DatumInvariantError("coroot rank mismatch")
        for t, s, r in self.theta_plus:
            if s not in (1, -1):
                raise DatumInvariantError(f"sigma must be +1 or -1, got {s}")
            if r.denominator not in (1, 2):
                raise DatumInvariantError(f"r must be a half-integer, got {r}")
        spec = self.cone_spec()  # also validates strict convexity
        for t, _, _ in self.theta_plus:
            if not spec.contains(t):
                raise DatumInvariantError(f"theta direction {t} outside cone_cx")
        for d in self.positive:
            if not spec.contains(d.coroot):
                raise DatumInvariantError(f"positive coroot {d.coroot} outside cone_cx")

    def dual_datum(self) -> RootDatum:
        return RootDatum(self.rank, self.positive)

    def weyl(self) -> WeylGroup:
        return weyl_of(self.dual_datum())

    def positive_roots(self):
        return tuple(d.root for d in self.positive)

    def positive_coroots(self):
        return tuple(d.coroot for d in self.positive)

    def cone_spec(self) -> ConeSpec:
        got = _SPEC_CACHE.get(self)
        if got is None:
            try:
                witness = find_witness(self.cone_cx, self.rank)
            except NotStrictlyConvex as exc:
                raise DatumInvariantError(f"cone_cx is not strictly convex: {exc}") from exc
            got = ConeSpec(self.cone_cx, witness, (0,) * self.rank)
            _SPEC_CACHE[self] = got
        return got


_SPEC_CACHE: dict[SphericalDatum, ConeSpec] = {}


# -- presets ----------------------------------------------------------


def _as_root_datum(parameter) -> RootDatum:
    if isinstance(parameter, RootDatum):
        return parameter
    if isinstance(parameter, str):
        try:
            return stock_datum(parameter)
        except KeyError:
            raise BadParameters(f"unknown root datum {parameter!r}") from None
    raise BadParameters(f"expected a root datum or its name, got {parameter!r}")


def _simple_coroots(datum: RootDatum) -> tuple[Vec, ...]:
    return tuple(d.coroot for d in datum.simples())


def group_preset(parameter) -> SphericalDatum:
    """The group case: every positive coroot colored (+1, 1)."""
    h = _as_root_datum(parameter)
    theta = tuple((d.coroot, 1, Fraction(1)) for d in h.positive)
    return SphericalDatum(h.rank, h.positive, theta, h.rho_roots(), _simple_coroots(h))


def whittaker_preset(parameter) -> SphericalDatum:
    """The Whittaker case: no denominator colors at all."""
    h = _as_root_datum(parameter)
    return SphericalDatum(h.rank, h.positive, (), h.rho_roots(), _simple_coroots(h))


def sp2n_gl2n_preset(n: int) -> SphericalDatum:
    """The symplectic period inside the general linear group of rank 2n.

    The distinguished torus has rank n; summing coordinate pairs maps
    the rank-2n coweight lattice onto it, the coroots attached to the
    distinguished (spherical) directions land on the rank-n type A
    coroots, and every one of them is colored (+1, 2).  The normalizer
    functional is the half-sum of the roots in the unipotent radical of
    the parabolic with two-by-two blocks, which takes the value
    n + 1 - 2b on the b-th coordinate, so it descends to the rank-n
    lattice.
    """
    if not isinstance(n, int) or n < 1:
        raise BadParameters(f"sp2n_gl2n needs a positive integer, got {n!r}")
    base = stock_datum(f"gl{n}")
    theta = tuple((d.coroot, 1, Fraction(2)) for d in base.positive)
    rho_px = tuple(Fraction(n + 1 - 2 * b) for b in range(1, n + 1))
    return SphericalDatum(base.rank, base.positive, theta, rho_px, _simple_coroots(base))


PRESETS = {
    "group": group_preset,
    "whittaker": whittaker_preset,
    "sp2n_gl2n": sp2n_gl2n_preset,
}


def preset(name: str, parameter) -> SphericalDatum:
    """Build a named preset; parameter is a root datum name or an integer."""
    try:
        builder = PRESETS[name]
    except KeyError:
        raise UnknownPreset(f"no preset named {name!r}") from None
    return builder(parameter)


# -- group-ring helpers (plain dicts, exact coefficients) --------------


def gr_add_term(acc: GroupRing, key: Vec, coeff: QLaurent) -> None:
    prev = acc.get(key)
    s = coeff if prev is None else prev + coeff
    if s.is_zero():
        acc.pop(key, None)
    else:
        acc[key] = s


def gr_mul(a: GroupRing, b: GroupRing) -> GroupRing:
    out: GroupRing = {}
    for ka, ca in a.items():
        for kb, cb in b.items():
            gr_add_term(out, vadd(ka, kb), ca * cb)
    return out


def gr_mul_binomial(a: GroupRing, coeff: QLaurent, direction: Vec) -> GroupRing:
    """Multiply by (1 - coeff * e^direction)."""
    out: GroupRing = dict(a)
    for k, c in a.items():
        gr_add_term(out, vadd(k, direction), -(c * coeff))
    return out


# -- the symmetrized family -------------------------------------------


@dataclass
class SymmetricPolynomial:
    """A finitely supported Weyl-invariant element of the group ring."""

    terms: GroupRing

    def support(self) -> list[Vec]:
        return sorted(self.terms)

    def coefficient(self, key) -> QLaurent:
        return self.terms.get(intify(key), QLaurent())

    def is_invariant(self, datum: SphericalDatum) -> bool:
        for mat, _ in datum.weyl():
            for k, c in self.terms.items():
                if self.terms.get(intify(mat_apply(mat, k)), QLaurent()) != c:
                    return False
        return True

    def serialize(self) -> str:
        lines = []
        for k in sorted(self.terms):
            coords = ",".join(str(x) for x in k)
            lines.append(f"{coords}\t{self.terms[k].render()}")
        return "\n".join(lines)

    def __eq__(self, other):
        if isinstance(other, SymmetricPolynomial):
            return self.terms == other.terms
        if isinstance(other, dict):
            return self.terms == other
        return NotImplemented


def macdonald_p(datum: SphericalDatum, lam) -> SymmetricPolynomial:
    """The symmetrized polynomial P_lambda of the datum.

    Each Weyl summand w(prod(1 - sigma q^-r e^theta) e^lambda) is
    multiplied by the complementary factors (1 - e^gamma) over the full
    root set minus the w-image of the positive coroots; the sum is then
    divided exactly by prod over the full root set of (1 - e^gamma).
    Exact division either terminates with remainder zero or proves the
    sum non-polynomial, in which case NotPolynomial is raised.
    """
    lam = intify(lam)
    weyl = datum.weyl()
    pos = datum.positive_coroots()
    full = set(pos) | {vneg(g) for g in pos}
    witness = datum.cone_spec().witness

    denominator: GroupRing = {(0,) * datum.rank: ONE}
    for g in sorted(full):
        denominator = gr_mul_binomial(denominator, ONE, g)

    total: GroupRing = {}
    for mat, _ in weyl:
        summand: GroupRing = {intify(mat_apply(mat, lam)): ONE}
        for t, s, r in datum.theta_plus:
            summand = gr_mul_binomial(summand, s * qmonomial(-r), intify(mat_apply(mat, t)))
        w_pos = {intify(mat_apply(mat, g)) for g in pos}
        for g in sorted(full - w_pos):
            summand = gr_mul_binomial(summand, ONE, g)
        for k, c in summand.items():
            gr_add_term(total, k, c)

    quotient = _exact_divide(total, denominator, pos, witness)
    return SymmetricPolynomial(quotient)


def _exact_divide(numer: GroupRing, denom: GroupRing, pos: tuple[Vec, ...], witness) -> GroupRing:
    """Divide in the group ring along the witness-then-lex term order."""
    if not numer:
        return {}
    varsigma = (0,) * len(witness)
    for g in pos:
        varsigma = vadd(varsigma, g)
    sig_deg = int(pair(witness, varsigma))
    lead_coeff = Fraction(-1) ** len(pos)

    def order(k: Vec):
        return (int(pair(witness, k)), k)

    floor = min(int(pair(witness, k)) for k in numer) + 2 * sig_deg
    work = dict(numer)
    quotient: GroupRing = {}
    while work:
        lead = max(work, key=order)
        if int(pair(witness, lead)) < floor:
            raise NotPolynomial(
                "symmetrized sum is not divisible by the full denominator"
            )
        c = work[lead] * lead_coeff  # dividing by the unit leading coefficient
        qkey = vsub(lead, varsigma)
        quotient[qkey] = c
        for dk, dc in denom.items():
            gr_add_term(work, vadd(qkey, dk), -(c * dc))
    return quotient


# -- cone expansions ---------------------------------------------------


def basic_asymptotics(datum: SphericalDatum, bound: int) -> ConeSeries:
    """Expansion of prod(1 - e^gamma) / prod(1 - sigma q^-r e^theta)."""
    spec = datum.cone_spec()
    numer = [(ONE, g) for g in datum.positive_coroots()]
    denom = [(s * qmonomial(-r), t) for t, s, r in datum.theta_plus]
    return expand_product(numer, denom, spec, bound)


def extended_cone_spec(datum: SphericalDatum, rho) -> ConeSpec:
    """The cone generated by cone_cx and the ray through rho.

    Requires rho outside the rational span of cone_cx, which keeps the
    extension strictly convex and the witness degree of rho positive.
    """
    rho = intify(rho)
    if in_rational_span(datum.cone_cx, rho):
        raise RhoInConeSpan(f"{rho} lies in the rational span of cone_cx")
    gens = tuple(datum.cone_cx) + (rho,)
    key = (datum, rho)
    got = _EXT_SPEC_CACHE.get(key)
    if got is None:
        got = ConeSpec(gens, find_witness(gens, datum.rank), (0,) * datum.rank)
        _EXT_SPEC_CACHE[key] = got
    return got


_EXT_SPEC_CACHE: dict[tuple[SphericalDatum, Vec], ConeSpec] = {}


def l_series(datum: SphericalDatum, rep_weights: WeightMultiset, rho, bound: int) -> ConeSeries:
    """Expansion of prod over weights nu of 1/(1 - e^nu)^mult.

    The weights must be those of the representation with lowest weight
    rho; rho must lie outside the rational span of cone_cx.
    """
    spec = extended_cone_spec(datum, rho)
    denom = []
    for nu in sorted(rep_weights):
        denom.extend([(ONE, nu)] * rep_weights[nu])
    return expand_product([], denom, spec, bound)


@dataclass
class HeckeValueTable:
    """Rows (lambda, series coefficient, normalized Hecke value)."""

    rows: tuple[tuple[Vec, QLaurent, QLaurent], ...]
    bound: int

    def row_map(self) -> dict[Vec, tuple[QLaurent, QLaurent]]:
        return {k: (c, h) for k, c, h in self.rows}

    def to_tsv(self) -> str:
        lines = []
        for k, c, h in self.rows:
            coords = ",".join(str(x) for x in k)
            lines.append(f"{coords}\t{c.render()}\t{h.render()}")
        return "\n".join(lines)

    def to_records(self) -> str:
        lines = []
        for k, c, h in self.rows:
            coords = ",".join(str(x) for x in k)
            lines.append(f"lambda={coords} series={c.render()} hecke={h.render()}")
        return "\n".join(lines)


def inverse_satake_lfun(datum: SphericalDatum, rho, bound: int) -> HeckeValueTable:
    """Hecke values of the inverse transform of an L-factor.

    Multiplies the L-series of the representation with lowest weight
    rho by the basic asymptotics, restricts to antidominant support,
    and normalizes each coefficient by q^<rho_px, lambda>.
    """
    rho = intify(rho)
    spec = extended_cone_spec(datum, rho)
    weights = lowest_weight_rep(datum.dual_datum(), rho)
    lser = l_series(datum, weights, rho, bound)
    numer = [(ONE, g) for g in datum.positive_coroots()]
    denom = [(s * qmonomial(-r), t) for t, s, r in datum.theta_plus]
    basic = expand_product(numer, denom, spec, bound)
    product = series_mul(lser, basic)
    restricted = restrict_antidominant(product, datum.positive_roots())
    rows = []
    for k in restricted.support():
        c = restricted.coefficient(k)
        h = qmonomial(pair(datum.rho_px, k)) * c
        rows.append((k, c, h))
    return HeckeValueTable(tuple(rows), bound)


# -- the orthogonality pairing -----------------------------------------


_KERNEL_CACHE: dict[SphericalDatum, tuple[int, dict]] = {}


def _pairing_kernel(datum: SphericalDatum, depth: int) -> dict:
    """One-sided expansion of the pairing weight.

    The full weight is the product over both signs of every root and
    color factor; it is Weyl invariant, so after symmetrizing, the
    constant term of anything invariant against it equals the order of
    the Weyl group times the constant term against the one-sided kernel

        prod_{gamma > 0} (1 - e^{-gamma})
            / prod_{theta} (1 - sigma q^{-r} e^{-theta}),

    up to the overall scalar P_0 which cancels in every ratio and every
    vanishing statement.  On this side each geometric ratio
    sigma q^{-r} e^{-theta} is a genuine series expansion, and strict
    convexity means each lattice point receives finitely many
    contributions, so coefficients are exact Laurent polynomials.
    """
    cached = _KERNEL_CACHE.get(datum)
    if cached is not None and cached[0] >= depth:
        return cached[1]
    depth = depth + 8  # headroom so nearby queries reuse the cache
    witness = datum.cone_spec().witness
    zero = (0,) * datum.rank
    terms: dict = {zero: ONE}
    for g in sorted(datum.positive_coroots()):
        new = dict(terms)
        for k, c in terms.items():
            shifted = vsub(k, g)
            if -pair(witness, shifted) > depth:
                continue
            prev = new.get(shifted)
            val = (prev - c) if prev is not None else -c
            if val.is_zero():
                new.pop(shifted, None)
            else:
                new[shifted] = val
        terms = new
    for t, s, r in datum.theta_plus:
        ratio = s * qmonomial(-r)
        step = int(pair(witness, t))
        new: dict = {}
        for k, c in terms.items():
            used = -int(pair(witness, k))
            shifted = k
            while used <= depth:
                prev = new.get(shifted)
                val = (prev + c) if prev is not None else c
                if val.is_zero():
                    new.pop(shifted, None)
                else:
                    new[shifted] = val
                shifted = vsub(shifted, t)
                used += step
                c = c * ratio
        terms = new
    _KERNEL_CACHE[datum] = (depth, terms)
    return terms


def _poly_terms(p, rank: int) -> GroupRing:
    if isinstance(p, SymmetricPolynomial):
        raw = p.terms
    elif isinstance(p, (QLaurent, int, Fraction)):
        coeff = p if isinstance(p, QLaurent) else QLaurent({0: p})
        raw = {(0,) * rank: coeff}
    else:
        raw = dict(p)
    out: GroupRing = {}
    for k, c in raw.items():
        k = intify(k)
        if len(k) != rank:
            raise BadParameters(f"support key {k} has wrong rank")
        if not isinstance(c, QLaurent):
            c = QLaurent({0: c})
        if not c.is_zero():
            out[k] = c
    return out


def pairing(p, q, datum: SphericalDatum) -> QLaurent:
    """Constant-term pairing [p, q] of two finitely supported elements.

    Computes the constant term of p * conj(q) * weight, where conj
    negates exponents and the weight carries both signs of every root
    and color factor.  Both arguments are taken Weyl invariant, which
    lets the weight collapse to the one-sided kernel of
    `_pairing_kernel`; the expansion depth follows from the supports
    and the witness, so the value is exact and does not change under
    any further depth increase.  Normalization: the collapse leaves the
    factor |W_X| in place, and the overall scalar P_0 is dropped; the
    orthogonality statements and coefficient ratios that the pairing
    exists to certify are insensitive to both choices.
    """
    rank = datum.rank
    tp = _poly_terms(p, rank)
    tq = _poly_terms(q, rank)
    if not tp or not tq:
        return QLaurent()

    witness = datum.cone_spec().witness
    depth = 0
    for k1 in tp:
        for k2 in tq:
            depth = max(depth, int(pair(witness, vsub(k1, k2))))
    kernel = _pairing_kernel(datum, depth)
    total = QLaurent()
    for k1, c1 in tp.items():
        for k2, c2 in tq.items():
            kv = kernel.get(vsub(k2, k1))
            if kv is not None:
                total = total + c1 * c2 * kv
    return len(datum.weyl().elements) * total
