"""Plain-text serialization of spherical data.

The format is line oriented.  Blank lines and lines starting with '#'
are ignored.  The remaining lines are, in any order:

    rank N
    reflection a1,...,an | b1,...,bn     one per positive root/coroot pair
    theta c1,...,cn | +1 | r             colored coroot, sign, exponent
    rho_px f1,...,fn                     the twist functional, exactly once
    cone g1,...,gn                       one per cone generator

Entries are integers or fractions like 3/2.  `render_datum` emits the
fields in the order above, one vector per line, so writing and reading
a datum round-trips exactly.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import FormatError
from .root_weyl import ReflectionDatum
from .spherical import SphericalDatum

__all__ = ["render_datum", "parse_datum"]


def _vec_text(v) -> str:
    return ",".join(str(x) for x in v)


def render_datum(datum: SphericalDatum) -> str:
    lines = [f"rank {datum.rank}"]
    for d in datum.positive:
        lines.append(f"reflection {_vec_text(d.root)} | {_vec_text(d.coroot)}")
    for theta, sigma, r in datum.theta_plus:
        sign = "+1" if sigma == 1 else "-1"
        lines.append(f"theta {_vec_text(theta)} | {sign} | {r}")
    lines.append(f"rho_px {_vec_text(datum.rho_px)}")
    for g in datum.cone_cx:
        lines.append(f"cone {_vec_text(g)}")
    return "\n".join(lines) + "\n"


def _parse_fraction(text: str, lineno: int) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise FormatError(f"line {lineno}: bad number {text.strip()!r}") from None


def _parse_vector(text: str, lineno: int) -> tuple[Fraction, ...]:
    parts = text.split(",")
    if not any(p.strip() for p in parts):
        raise FormatError(f"line {lineno}: empty vector")
    return tuple(_parse_fraction(p, lineno) for p in parts)


def parse_datum(text: str) -> SphericalDatum:
    rank = None
    positive = []
    theta_plus = []
    rho_px = None
    cone = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        keyword, _, rest = line.partition(" ")
        rest = rest.strip()
        if keyword == "rank":
            if rank is not None:
                raise FormatError(f"line {lineno}: rank given twice")
            try:
                rank = int(rest)
            except ValueError:
                raise FormatError(f"line {lineno}: bad rank {rest!r}") from None
            if rank < 1:
                raise FormatError(f"line {lineno}: rank must be positive")
        elif keyword == "reflection":
            fields = [f.strip() for f in rest.split("|")]
            if len(fields) != 2:
                raise FormatError(
                    f"line {lineno}: reflection needs root | coroot"
                )
            root = _parse_vector(fields[0], lineno)
            coroot = _parse_vector(fields[1], lineno)
            try:
                positive.append(ReflectionDatum(root, coroot))
            except ValueError as exc:
                raise FormatError(f"line {lineno}: {exc}") from None
        elif keyword == "theta":
            fields = [f.strip() for f in rest.split("|")]
            if len(fields) != 3:
                raise FormatError(
                    f"line {lineno}: theta needs coroot | sign | exponent"
                )
            vec = _parse_vector(fields[0], lineno)
            if fields[1] not in ("+1", "-1", "1"):
                raise FormatError(f"line {lineno}: sign must be +1 or -1")
            sigma = 1 if fields[1] in ("+1", "1") else -1
            theta_plus.append((vec, sigma, _parse_fraction(fields[2], lineno)))
        elif keyword == "rho_px":
            if rho_px is not None:
                raise FormatError(f"line {lineno}: rho_px given twice")
            rho_px = _parse_vector(rest, lineno)
        elif keyword == "cone":
            cone.append(_parse_vector(rest, lineno))
        else:
            raise FormatError(f"line {lineno}: unknown keyword {keyword!r}")
    if rank is None:
        raise FormatError("missing rank line")
    if rho_px is None:
        raise FormatError("missing rho_px line")
    vectors = [d.root for d in positive] + [d.coroot for d in positive]
    vectors += [t[0] for t in theta_plus] + [rho_px] + cone
    for vec in vectors:
        if len(vec) != rank:
            raise FormatError(f"vector {_vec_text(vec)} does not have rank {rank}")
    try:
        return SphericalDatum(
            rank=rank,
            positive=tuple(positive),
            theta_plus=tuple(theta_plus),
            rho_px=rho_px,
            cone_cx=tuple(cone),
        )
    except FormatError:
        raise
    except ValueError as exc:
        raise FormatError(str(exc)) from None
