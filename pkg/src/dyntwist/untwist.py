"""Minimal untwisting of essential curves and twist conjugacy classification.

Every essential curve can be carried onto one of three reference curves

    class C at (0, 1),   class D at (0, -1),   class E at (-1, 0)

by a sequence of the four twist generators, and two twists about essential
curves are conjugate in the pure mapping class group exactly when the curves
land on the same reference curve.  The class is readable off the parity of
the Dynnikov pair: E when ``b`` is even, otherwise C or D according to the
sign of ``(-1)^a * b``.

The untwisting walk picks its generator from the quadrant of the current
pair: ``tc`` in the open first quadrant, ``tc⁻`` in the second, ``td`` in the
third, ``td⁻`` in the fourth.  Primitivity means a vanishing coordinate only
happens at ``(0, ±1)``, ``(±1, 0)``; the first three are terminal, and from
``(1, 0)`` one extra move (``tc`` or ``td⁻``, both land on ``(-1, 0)``)
finishes the job — the walk repeats whichever of the two it used on the
previous step, and a walk *starting* at ``(1, 0)`` uses ``td⁻``.

The number of steps the walk takes is minimal: it equals the graph distance
to the reference set in the Cayley graph of the twist action, and also the
lattice step count of the even-quotient expansion of the torus lift
(:func:`conjugation_length`).  Words are stored in application order; read
as a group element the composition runs right to left.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .actions import Generator, apply_twist
from .coords import DynnikovCoord
from .ecf import ecf_length


class CurveClass(Enum):
    """The three twist conjugacy classes, named after the reference curves."""

    C = "c"
    D = "d"
    E = "e"

    @property
    def coords(self) -> DynnikovCoord:
        return _CLASS_COORDS[self]


_CLASS_COORDS = {
    CurveClass.C: DynnikovCoord(0, 1),
    CurveClass.D: DynnikovCoord(0, -1),
    CurveClass.E: DynnikovCoord(-1, 0),
}

#: Dynnikov pairs of the three reference curves (the untwisting targets).
REFERENCE_CURVES = (DynnikovCoord(0, 1), DynnikovCoord(0, -1), DynnikovCoord(-1, 0))


@dataclass(frozen=True)
class UntwistResult:
    """Untwisting certificate: the word, where it starts, and where it lands.

    ``word`` is in application order and is freely reduced.  ``path`` replays
    the word to give the full trajectory, one entry per step, from the input
    pair down to the terminal reference curve.
    """

    word: tuple[Generator, ...]
    start: DynnikovCoord
    terminal: DynnikovCoord

    @property
    def path(self) -> tuple[DynnikovCoord, ...]:
        points = [self.start]
        for gen in self.word:
            points.append(apply_twist(gen, points[-1]))
        return tuple(points)


def _require_essential(a: int, b: int) -> None:
    if a == 0 and b == 0:
        raise ValueError("Dynnikov pair (0, 0) does not describe a curve")
    if b >= 0:
        p, q = abs(a) + b, -a
    else:
        p, q = a, b - abs(a)
    g = math.gcd(p, q)
    if g != 1:
        raise ValueError(f"({a}, {b}) is a multicurve of multiplicity {g}, not essential")


def untwist(d) -> UntwistResult:
    """Walk an essential curve down to a reference curve, minimally.

    The twist branches are written out inline (mirroring the branch maps in
    :mod:`dyntwist.actions`, against which they are exhaustively tested):
    the walk runs over the whole search ball during verification, so each
    step stays plain integer arithmetic.
    """
    a, b = d
    _require_essential(a, b)
    a0, b0 = a, b
    tc, tci, td, tdi = Generator.TC, Generator.TC_INV, Generator.TD, Generator.TD_INV
    word: list[Generator] = []
    prev: Generator | None = None
    while True:
        if a == 0:
            break                               # (0, ±1): reference curve
        if b == 0:
            if a < 0:
                break                           # (-1, 0): reference curve
            # (1, 0): one extra move.  Only tc or td⁻ can have produced
            # (1, 0); repeat it, or use td⁻ from a standing start.  Both
            # send (1, 0) to (-1, 0).
            if prev is None:
                gen = tdi
            else:
                assert prev is tc or prev is tdi
                gen = prev
            a, b = -1, 0
        elif a > 0:
            if b > 0:
                gen = tc
                if b <= a:
                    a, b = b - a, -b
                elif b <= 2 * a:
                    a, b = b - a, b - 2 * a
                else:
                    b = b - 2 * a
            else:
                gen = tdi
                if a + b >= 0:
                    a, b = -a - b, -b
                elif 2 * a + b <= 0:
                    b = b + 2 * a
                else:
                    a, b = -a - b, 2 * a + b
        else:
            if b > 0:
                gen = tci
                if a + b <= 0:
                    a, b = -a - b, -b
                elif 2 * a + b >= 0:
                    b = b + 2 * a
                else:
                    a, b = -a - b, 2 * a + b
            else:
                gen = td
                if b >= a:
                    a, b = b - a, -b
                elif b >= 2 * a:
                    a, b = b - a, b - 2 * a
                else:
                    b = b - 2 * a
        word.append(gen)
        prev = gen
    return UntwistResult(tuple(word), DynnikovCoord(a0, b0), DynnikovCoord(a, b))


def classify(d) -> CurveClass:
    """Conjugacy class of the twist about an essential curve."""
    a, b = d
    _require_essential(a, b)
    if b % 2 == 0:
        return CurveClass.E
    positive = (b > 0) if a % 2 == 0 else (b < 0)   # sign of (-1)^a * b
    return CurveClass.C if positive else CurveClass.D


def conjugation_length(d) -> int:
    """Minimal number of twist generators carrying ``d`` to a reference curve.

    Computed through the even-quotient expansion of the torus lift, without
    running the walk; equals ``len(untwist(d).word)``.
    """
    a, b = d
    _require_essential(a, b)
    if b >= 0:
        p, q = abs(a) + b, -a
    else:
        p, q = a, b - abs(a)
    return ecf_length(p, q)


def conjugator(d) -> tuple[tuple[Generator, ...], CurveClass]:
    """The untwisting word read as a conjugating mapping class, plus target.

    Applying the word to ``d`` gives the target's coordinates, which
    certifies conjugacy: a mapping class carrying one curve onto another
    conjugates the twist about the first into the twist about the second.
    The word is in application order; as a composition it reads right to
    left (first-applied letter rightmost).
    """
    result = untwist(d)
    target = classify(d)
    return result.word, target


def twists_conjugate(d1, d2) -> bool:
    """Whether the twists about two essential curves are conjugate."""
    return classify(d1) is classify(d2)
