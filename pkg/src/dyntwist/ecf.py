"""Even continued fractions, transvection factorizations, and level-2 tests.

The expansion of a coprime pair works by a modified Euclid division: at each
step the quotient is the unique *even* integer ``q`` with ``|x - q*y| < |y|``.
Evenness makes remainders keep the parities of the inputs, so the walk ends in
one of three terminal shapes with a sign ``e = ±1``:

* numerator even:   terminal ``(0, e)`` with ``e`` congruent to the
  denominator mod 4, after an odd number of divisions;
* denominator even: terminal ``(e, 0)`` with ``e`` congruent to the
  numerator mod 4, after an even number of divisions;
* both odd: there is no exact even division by ``±1``, so the last step
  forces remainder ``e`` and the expansion carries a final quotient ``1``
  (recorded as ``trailing_one``), terminal ``(e, e)``.

Quotients are nonzero after index 0, and within trailing-one expansions the
last even quotient is never ``-2`` — except for the one ambiguous input
ratio ``-1``, whose canonical expansion is ``[-2]`` with the trailing one.
Under these constraints the expansion of a coprime pair is unique.

Each division is a power of a transvection: ``x = q*y + r`` on the first
coordinate is ``U^q`` applied to the remainder vector, on the second
coordinate ``L^q``, with ``U = [[1,1],[0,1]]`` and ``L = [[1,0],[1,1]]``.  So
the expansion is exactly a factorization

    (m, n) = U^{q0} L^{q1} U^{q2} ... (terminal vector),

and half the total size of the quotients counts the ``U^{±2}``/``L^{±2}``
lattice steps from ``(m, n)`` down to the terminal vector.

``in_gamma2``/``in_gamma2_bar`` test membership in the level-2 congruence
subgroup (odd diagonal, even off-diagonal) and its index-2 subgroup with
diagonal 1 mod 4; the latter is freely generated by ``U^2`` and ``L^2`` and
is the matrix incarnation of the pure mapping class group of the disk.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .coords import TorusCoord


@dataclass(frozen=True)
class Mat2:
    """A 2x2 integer matrix; group elements here have determinant ±1."""

    m11: int
    m12: int
    m21: int
    m22: int

    def det(self) -> int:
        return self.m11 * self.m22 - self.m12 * self.m21

    def __mul__(self, other: "Mat2") -> "Mat2":
        return Mat2(
            self.m11 * other.m11 + self.m12 * other.m21,
            self.m11 * other.m12 + self.m12 * other.m22,
            self.m21 * other.m11 + self.m22 * other.m21,
            self.m21 * other.m12 + self.m22 * other.m22,
        )

    def inverse(self) -> "Mat2":
        d = self.det()
        if d == 1:
            return Mat2(self.m22, -self.m12, -self.m21, self.m11)
        if d == -1:
            return Mat2(-self.m22, self.m12, self.m21, -self.m11)
        raise ValueError(f"matrix with determinant {d} has no integer inverse")

    def __pow__(self, k: int) -> "Mat2":
        base = self if k >= 0 else self.inverse()
        k = abs(k)
        out = IDENTITY
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def apply(self, v) -> TorusCoord:
        x, y = v
        return TorusCoord(self.m11 * x + self.m12 * y, self.m21 * x + self.m22 * y)


IDENTITY = Mat2(1, 0, 0, 1)
U = Mat2(1, 1, 0, 1)
L = Mat2(1, 0, 1, 1)


def in_gamma2(m: Mat2) -> bool:
    """Level-2 congruence test: odd diagonal, even off-diagonal."""
    if m.det() != 1:
        raise ValueError("congruence tests expect a determinant-1 matrix")
    return m.m11 % 2 == 1 and m.m22 % 2 == 1 and m.m12 % 2 == 0 and m.m21 % 2 == 0


def in_gamma2_bar(m: Mat2) -> bool:
    """Membership in the index-2 subgroup with diagonal entries 1 mod 4."""
    return in_gamma2(m) and m.m11 % 4 == 1 and m.m22 % 4 == 1


@dataclass(frozen=True)
class EcfExpansion:
    """Canonical even-quotient expansion of a coprime pair."""

    quotients: tuple[int, ...]
    trailing_one: bool
    terminal: TorusCoord
    epsilon: int

    @property
    def length(self) -> int:
        """Half the total size of the quotients: the lattice step count."""
        return sum(abs(q) for q in self.quotients) // 2


def _require_coprime(m: int, n: int) -> None:
    if m == 0 and n == 0:
        raise ValueError("cannot expand the zero pair")
    if math.gcd(m, n) != 1:
        raise ValueError(f"({m}, {n}) is not coprime (gcd {math.gcd(m, n)})")


def ecf_expand(m: int, n: int) -> EcfExpansion:
    """Expand the coprime pair ``(m, n)`` with all-even partial quotients.

    The pairs ``(±1, 0)`` are already terminal and expand to no quotients.
    For both-odd inputs the expansion carries a trailing quotient ``1`` that
    corresponds to no division (and to no matrix factor).
    """
    _require_coprime(m, n)
    quotients: list[int] = []
    x, y = m, n
    while True:
        if y == 0:
            # x is ±1 by coprimality; divisions alternate sides, so the
            # terminal vector sits on the side the next division would reduce.
            term = TorusCoord(x, 0) if len(quotients) % 2 == 0 else TorusCoord(0, x)
            return EcfExpansion(tuple(quotients), False, term, x)
        if x % 2 and y in (1, -1):
            # Both-odd endgame: an exact division by ±1 would need an odd
            # quotient, so force remainder y instead and stop at (y, y).
            quotients.append((x - y) // y)
            return EcfExpansion(tuple(quotients), True, TorusCoord(y, y), y)
        q, r = divmod(x, y)
        if q % 2:
            q += 1
            r -= y
        quotients.append(q)
        x, y = y, r


def ecf_length(m: int, n: int) -> int:
    """Half the sum of the absolute even quotients of the canonical expansion.

    Runs the division loop directly without building the expansion record
    (this is the inner loop of whole-ball verification); always equals
    ``ecf_expand(m, n).length``.
    """
    _require_coprime(m, n)
    total = 0
    x, y = m, n
    while y:
        if x % 2 and (y == 1 or y == -1):
            total += abs((x - y) // y)
            break
        q, r = divmod(x, y)
        if q % 2:
            q += 1
            r -= y
        total += abs(q)
        x, y = y, r
    return total // 2


def factorize(m: int, n: int) -> tuple[list[Mat2], TorusCoord]:
    """Transvection-power factorization ``(m, n) = U^{q0} L^{q1} ... terminal``.

    Factors alternate powers of ``U`` and ``L`` starting with ``U`` (a zero
    leading quotient gives an identity leading factor).  The product of the
    factors applied to the terminal vector returns ``(m, n)`` exactly.
    """
    exp = ecf_expand(m, n)
    bases = (U, L)
    return [bases[i % 2] ** q for i, q in enumerate(exp.quotients)], exp.terminal
