"""Braid and twist actions on the Dynnikov plane, tracks, and jump dynamics.

The half-twist generators act on Dynnikov pairs by max-plus update rules
(:func:`apply_braid`); the two basic full twists around the left and right
pair of marked points are their squares and act by four-region piecewise
linear maps (:func:`apply_twist`).  Each branch is a determinant-one integer
matrix, and the right-twist regions are centrally symmetric to the
left-twist ones.  Inverse twists are implemented by inverting each affine
branch on its image region, *not* by squaring the inverse update rules, so
the two code paths stay independently derived and cross-check each other.

Orbits of either twist run along "tracks": broken lines in the plane that
are images of horizontal (left twist) or vertical (right twist) lines under
the torus-to-Dynnikov chart change.  The track through ``(n, 0)`` has index
``n``; one application of the twist advances a point ``2n`` lattice jumps
clockwise along its track, the inverse twist moves counterclockwise.
:func:`twist_via_jumps` performs the action that way, jump by jump, which is
an independent route to the same maps.

Words of twist generators are stored in application order: the first letter
of a word acts first.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Sequence

from .coords import DynnikovCoord, _require_nonzero, dynnikov_to_torus, torus_to_dynnikov


class Generator(Enum):
    """The four twist generators; values are their serialized names."""

    TC = "tc"
    TC_INV = "tc-"
    TD = "td"
    TD_INV = "td-"

    @property
    def inverse(self) -> "Generator":
        return _GEN_INVERSE[self]


_GEN_INVERSE = {
    Generator.TC: Generator.TC_INV,
    Generator.TC_INV: Generator.TC,
    Generator.TD: Generator.TD_INV,
    Generator.TD_INV: Generator.TD,
}


class BraidLetter(Enum):
    """Half-twist letters; the left and right twists are S1*S1 and S2*S2."""

    S1 = "s1"
    S1_INV = "s1-"
    S2 = "s2"
    S2_INV = "s2-"

    @property
    def inverse(self) -> "BraidLetter":
        return _LETTER_INVERSE[self]


_LETTER_INVERSE = {
    BraidLetter.S1: BraidLetter.S1_INV,
    BraidLetter.S1_INV: BraidLetter.S1,
    BraidLetter.S2: BraidLetter.S2_INV,
    BraidLetter.S2_INV: BraidLetter.S2,
}


class TrackFamily(Enum):
    C = "c"
    D = "d"


class FixedPointError(ValueError):
    """Raised when a track is requested through a fixed point of the twist."""


@dataclass(frozen=True)
class Track:
    """A window of one orbit track, points listed in clockwise order."""

    family: TrackFamily
    index: int
    points: tuple[DynnikovCoord, ...]


# Max-plus update rules for the four half-twist letters.

def _s1(a: int, b: int) -> tuple[int, int]:
    return a + b - max(0, a, b), max(b, 0) - a


def _s1_inv(a: int, b: int) -> tuple[int, int]:
    t = a + max(0, b)
    return max(0, t) - b, t


def _s2(a: int, b: int) -> tuple[int, int]:
    t = a + max(0, b)
    return max(t, b), b - t


def _s2_inv(a: int, b: int) -> tuple[int, int]:
    return a - max(a + b, 0, b), a + b - max(0, b)


# Closed forms for the full twists: four linear branches each.  Region labels
# follow the order left-twist A..D; the right twist uses the centrally
# symmetric regions.  Branches agree on shared boundaries.

def _tc(a: int, b: int) -> tuple[int, int]:
    if a >= 0 and b <= a:
        return b - a, -b                  # A: fourth-quadrant wedge
    if 0 <= a <= b <= 2 * a:
        return b - a, b - 2 * a           # B
    if b >= 2 * a and b >= 0:
        return a, b - 2 * a               # C
    return a + b, -2 * a - b              # D: a <= 0, b <= 0


def _td(a: int, b: int) -> tuple[int, int]:
    if a <= 0 and b >= a:
        return b - a, -b                  # -A
    if 2 * a <= b <= a:
        return b - a, b - 2 * a           # -B (a <= 0 here)
    if b <= 2 * a and b <= 0:
        return a, b - 2 * a               # -C
    return a + b, -2 * a - b              # -D: a >= 0, b >= 0


def _tc_inv(a: int, b: int) -> tuple[int, int]:
    # Branch inverses of _tc on the image regions A'..D'.
    if a <= 0 and a + b <= 0:
        return -a - b, -b                 # A'
    if a >= 0 and b <= 0:
        return a - b, 2 * a - b           # B'
    if b >= 0 and 2 * a + b >= 0:
        return a, b + 2 * a               # C'
    return -a - b, 2 * a + b              # D': a + b >= 0 >= 2a + b


def _td_inv(a: int, b: int) -> tuple[int, int]:
    if a >= 0 and a + b >= 0:
        return -a - b, -b                 # -A'
    if a <= 0 and b >= 0:
        return a - b, 2 * a - b           # -B'
    if b <= 0 and 2 * a + b <= 0:
        return a, b + 2 * a               # -C'
    return -a - b, 2 * a + b              # -D'


def apply_braid(letter: BraidLetter, d) -> DynnikovCoord:
    """Image of a Dynnikov pair under one half-twist letter."""
    a, b = d
    _require_nonzero(a, b, "Dynnikov pair")
    if letter is BraidLetter.S1:
        x = _s1(a, b)
    elif letter is BraidLetter.S1_INV:
        x = _s1_inv(a, b)
    elif letter is BraidLetter.S2:
        x = _s2(a, b)
    elif letter is BraidLetter.S2_INV:
        x = _s2_inv(a, b)
    else:
        raise TypeError(f"not a braid letter: {letter!r}")
    return DynnikovCoord(*x)


def apply_twist(gen: Generator, d) -> DynnikovCoord:
    """Image of a Dynnikov pair under one twist generator (closed form)."""
    a, b = d
    _require_nonzero(a, b, "Dynnikov pair")
    if gen is Generator.TC:
        x = _tc(a, b)
    elif gen is Generator.TC_INV:
        x = _tc_inv(a, b)
    elif gen is Generator.TD:
        x = _td(a, b)
    elif gen is Generator.TD_INV:
        x = _td_inv(a, b)
    else:
        raise TypeError(f"not a twist generator: {gen!r}")
    return DynnikovCoord(*x)


def apply_word(word: Sequence[Generator] | Iterable[Generator], d) -> DynnikovCoord:
    """Apply a twist word in application order (first letter acts first)."""
    a, b = d
    _require_nonzero(a, b, "Dynnikov pair")
    out = DynnikovCoord(a, b)
    for gen in word:
        out = apply_twist(gen, out)
    return out


def _track_line(d, family: TrackFamily) -> tuple[int, int, int]:
    """The lifted line carrying the track through ``d``.

    Returns ``(n, p, q)`` where ``n`` is the track index and ``(p, q)`` the
    canonical lift of ``d``; the carrying line is ``q = const`` for family C
    and ``p = const`` for family D.  ``n == 0`` marks the fixed ray.
    """
    p, q = dynnikov_to_torus(d)
    n = abs(q) if family is TrackFamily.C else abs(p)
    return n, p, q


def track_of(d, family: TrackFamily, window: int) -> Track:
    """Enumerate the track through ``d`` clockwise within ``|a|,|b| <= window``.

    Fixed points of the family's twist lie on a degenerate ray rather than a
    track and raise :class:`FixedPointError`.  ``window`` must cover the track
    index so that the corner point ``(n, 0)`` is included.
    """
    n, _, _ = _track_line(d, family)
    if n == 0:
        raise FixedPointError(f"{tuple(d)} is fixed by the family-{family.value} twist")
    if window < n:
        raise ValueError(f"window {window} cannot show track of index {n}")
    if family is TrackFamily.C:
        # Clockwise along the image of the line q = n: parameter ascending.
        params = range(-n - window, n + window + 1)
        pts = [torus_to_dynnikov((t, n)) for t in params]
    else:
        # Clockwise along the image of the line p = n: parameter descending.
        params = range(n + window, -n - window - 1, -1)
        pts = [torus_to_dynnikov((n, t)) for t in params]
    pts = [pt for pt in pts if abs(pt.a) <= window and abs(pt.b) <= window]
    return Track(family, n, tuple(pts))


def jump_path(gen: Generator, d) -> tuple[DynnikovCoord, ...]:
    """All ``2n + 1`` track points visited while applying ``gen`` by jumps.

    The walk moves clockwise for the two positive twists and counterclockwise
    for their inverses.  At a fixed point of the generator the path is the
    single input point.
    """
    a, b = d
    _require_nonzero(a, b, "Dynnikov pair")
    family = TrackFamily.C if gen in (Generator.TC, Generator.TC_INV) else TrackFamily.D
    n, p, q = _track_line((a, b), family)
    if n == 0:
        return (DynnikovCoord(a, b),)
    forward = gen in (Generator.TC, Generator.TD)
    if family is TrackFamily.C:
        # Clockwise means the parameter p increases on the line q = n > 0.
        step = (1 if q > 0 else -1) * (1 if forward else -1)
        return tuple(torus_to_dynnikov((p + k * step, q)) for k in range(2 * n + 1))
    # Clockwise means the parameter q decreases on the line p = n > 0.
    step = (-1 if p > 0 else 1) * (1 if forward else -1)
    return tuple(torus_to_dynnikov((p, q + k * step)) for k in range(2 * n + 1))


def twist_via_jumps(gen: Generator, d) -> DynnikovCoord:
    """Apply a twist generator by walking ``2n`` jumps along its track.

    Agrees with :func:`apply_twist` everywhere; fixed points return unchanged
    (their track degenerates to a point of the fixed ray).
    """
    return jump_path(gen, d)[-1]
