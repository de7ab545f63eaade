"""Coordinate systems for multicurves on the disk with three marked points.

Two exact integer charts describe the same curves:

* Dynnikov coordinates ``(a, b)``: isotopy classes of multicurves on the
  3-marked disk correspond bijectively to pairs in ``Z^2 - {(0, 0)}``.
* Torus coordinates ``(p, q)``: the homology class of the lift of a curve to
  the once-holed torus that double covers the disk, branched at the marked
  points.  The lift is only defined up to a global sign, so torus pairs are
  meaningful modulo ``v ~ -v``; ``TorusCoord.canonical`` picks the
  representative with ``p > 0``, or ``p == 0 and q > 0``.

``torus_to_dynnikov`` is the change of charts,

    (p, q)  |->  ((|p - q| - |p + q|) / 2,  |p| - |q|).

It is even (``v`` and ``-v`` collapse) and piecewise linear: on each of the
eight sectors cut out by the axes and the diagonals ``p = ±q`` it agrees with
a fixed determinant-one integer matrix, so it identifies ``Z^2/(±1)`` with
``Z^2`` like a piecewise-linear squaring map.  ``dynnikov_to_torus`` inverts
it up to the global sign.

Multicurves on this disk are ``m`` parallel copies of one essential curve.
The multiplicity ``m`` is the gcd of the torus lift; it is *not* a gcd of
``(a, b)``, because the chart change is nonlinear and primitivity only makes
sense in homology.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import NamedTuple


class DynnikovCoord(NamedTuple):
    """A point of the Dynnikov plane ``Z^2 - {(0, 0)}`` labelling a multicurve."""

    a: int
    b: int


class TorusCoord(NamedTuple):
    """A homology pair ``(p, q)`` on the covering torus, meaningful up to sign."""

    p: int
    q: int

    def canonical(self) -> "TorusCoord":
        """The representative of ``{v, -v}`` with ``p > 0``, or ``p == 0 < q``."""
        if self.p < 0 or (self.p == 0 and self.q < 0):
            return TorusCoord(-self.p, -self.q)
        return self


class CurveTag(Enum):
    ESSENTIAL = "essential"
    MULTICURVE = "multicurve"


@dataclass(frozen=True)
class CurveKind:
    """Essential-versus-multicurve classification of a Dynnikov pair.

    ``multiplicity`` is 1 exactly for essential curves; ``primitive_part`` is
    the Dynnikov pair of the single essential component.
    """

    tag: CurveTag
    multiplicity: int
    primitive_part: DynnikovCoord


def _require_nonzero(x: int, y: int, what: str) -> None:
    if x == 0 and y == 0:
        raise ValueError(f"{what} (0, 0) does not describe a curve")


def torus_to_dynnikov(t) -> DynnikovCoord:
    """Dynnikov coordinates of the curve with torus coordinates ``(p, q)``.

    Even in the sign of the input: ``(p, q)`` and ``(-p, -q)`` give the same
    answer.  Rejects ``(0, 0)``.
    """
    p, q = t
    _require_nonzero(p, q, "torus pair")
    return DynnikovCoord((abs(p - q) - abs(p + q)) // 2, abs(p) - abs(q))


def dynnikov_to_torus(d) -> TorusCoord:
    """Canonical torus lift ``±(p, q)`` of the Dynnikov pair ``(a, b)``.

    Inverse of :func:`torus_to_dynnikov` up to the global sign: the branch
    ``(|a| + b, -a)`` applies for ``b >= 0`` and ``(a, b - |a|)`` for
    ``b <= 0`` (at ``b == 0`` they agree up to sign).  Rejects ``(0, 0)``.
    """
    a, b = d
    _require_nonzero(a, b, "Dynnikov pair")
    if b >= 0:
        t = TorusCoord(abs(a) + b, -a)
    else:
        t = TorusCoord(a, b - abs(a))
    return t.canonical()


def curve_kind(d) -> CurveKind:
    """Classify a Dynnikov pair as an essential curve or a multicurve."""
    p, q = dynnikov_to_torus(d)
    g = math.gcd(p, q)
    if g == 1:
        return CurveKind(CurveTag.ESSENTIAL, 1, DynnikovCoord(*d))
    return CurveKind(CurveTag.MULTICURVE, g, torus_to_dynnikov((p // g, q // g)))


def is_essential(d) -> bool:
    """True when the pair encodes a single essential curve (primitive lift)."""
    p, q = dynnikov_to_torus(d)
    return math.gcd(p, q) == 1
