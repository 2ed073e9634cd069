"""Error types raised across the package.

Two families matter to callers: configuration problems (bad input text,
unknown presets, violated datum invariants) and mathematical failures
(non-convex cones, non-polynomial symmetrizations, weights outside the
supported region).  The command line maps the first family to exit code
2 and the second to exit code 3.
"""

from __future__ import annotations


class SatakeError(Exception):
    """Base class for every error raised by this package."""


class FormatError(SatakeError):
    """Configuration-surface error: malformed text, bad parameters."""


class BadParameters(FormatError):
    """A preset or operation received parameters outside its domain."""


class UnknownPreset(FormatError):
    """Preset name not one of group, whittaker, sp2n_gl2n."""


class DatumInvariantError(FormatError):
    """A spherical datum violates one of its structural invariants."""


class MathError(SatakeError):
    """Mathematical-layer failure during an exact computation."""


class GroupTooLarge(MathError):
    """Weyl enumeration exceeded the element cap."""


class NotStrictlyConvex(MathError):
    """The requested cone contains a line, so no witness exists."""


class IncompatibleSpec(MathError):
    """Two series over incompatible cone specifications were combined."""


class DirectionNotInCone(MathError):
    """A series direction does not point into the ambient cone."""


class OutOfBound(MathError):
    """A coefficient beyond the truncation bound was requested."""


class NotPolynomial(MathError):
    """Symmetrization left a nonzero remainder after exact division."""


class RhoInConeSpan(MathError):
    """The lowest weight lies in the rational span of the cone."""


class NotAntidominant(MathError):
    """A weight required to be antidominant is not."""
