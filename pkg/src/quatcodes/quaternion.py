"""Exact arithmetic on Lipschitz integer quaternions.

A Lipschitz quaternion is a0 + a1*i + a2*j + a3*k with integer components,
multiplied under the Hamilton relations

    i*i = j*j = k*k = -1,   i*j = -j*i = k,   j*k = -k*j = i,   k*i = -i*k = j.

Components are Python ints, so every operation is exact at any magnitude;
overflow cannot occur.  Multiplication is non-commutative and the factor
order is always significant.
"""

from __future__ import annotations

from typing import Iterator, Tuple

Components = Tuple[int, int, int, int]


def hamilton(a: Components, b: Components) -> Components:
    """Hamilton product of two component tuples, left factor first."""
    a0, a1, a2, a3 = a
    b0, b1, b2, b3 = b
    return (
        a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
        a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
        a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1,
        a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0,
    )


class Quaternion:
    """An immutable Lipschitz integer quaternion.

    Supports +, -, unary -, * (Hamilton product; also scaling by int),
    conjugation and the norm.  Values are hashable and safe to share
    across threads.
    """

    __slots__ = ("a0", "a1", "a2", "a3")

    def __init__(self, a0: int = 0, a1: int = 0, a2: int = 0, a3: int = 0):
        self.a0 = a0
        self.a1 = a1
        self.a2 = a2
        self.a3 = a3

    @classmethod
    def from_components(cls, comps: Components) -> "Quaternion":
        q = cls.__new__(cls)
        q.a0, q.a1, q.a2, q.a3 = comps
        return q

    @property
    def components(self) -> Components:
        return (self.a0, self.a1, self.a2, self.a3)

    @property
    def complete_part(self) -> int:
        return self.a0

    @property
    def vector_part(self) -> Tuple[int, int, int]:
        return (self.a1, self.a2, self.a3)

    def conjugate(self) -> "Quaternion":
        """Complete part kept, vector part negated."""
        return Quaternion.from_components((self.a0, -self.a1, -self.a2, -self.a3))

    def norm(self) -> int:
        """a0^2 + a1^2 + a2^2 + a3^2; equals q * conjugate(q)."""
        return self.a0 * self.a0 + self.a1 * self.a1 + self.a2 * self.a2 + self.a3 * self.a3

    def abs_sum(self) -> int:
        """|a0| + |a1| + |a2| + |a3| of this particular representative."""
        return abs(self.a0) + abs(self.a1) + abs(self.a2) + abs(self.a3)

    def is_zero(self) -> bool:
        return self.a0 == 0 and self.a1 == 0 and self.a2 == 0 and self.a3 == 0

    def scale(self, s: int) -> "Quaternion":
        return Quaternion.from_components((self.a0 * s, self.a1 * s, self.a2 * s, self.a3 * s))

    def __add__(self, other: "Quaternion | int") -> "Quaternion":
        if isinstance(other, int):
            other = Quaternion(other)
        if not isinstance(other, Quaternion):
            return NotImplemented
        return Quaternion.from_components(
            (self.a0 + other.a0, self.a1 + other.a1, self.a2 + other.a2, self.a3 + other.a3)
        )

    __radd__ = __add__

    def __sub__(self, other: "Quaternion | int") -> "Quaternion":
        if isinstance(other, int):
            other = Quaternion(other)
        if not isinstance(other, Quaternion):
            return NotImplemented
        return Quaternion.from_components(
            (self.a0 - other.a0, self.a1 - other.a1, self.a2 - other.a2, self.a3 - other.a3)
        )

    def __rsub__(self, other: int) -> "Quaternion":
        return Quaternion(other).__sub__(self)

    def __neg__(self) -> "Quaternion":
        return Quaternion.from_components((-self.a0, -self.a1, -self.a2, -self.a3))

    def __mul__(self, other: "Quaternion | int") -> "Quaternion":
        if isinstance(other, int):
            return self.scale(other)
        if not isinstance(other, Quaternion):
            return NotImplemented
        return Quaternion.from_components(hamilton(self.components, other.components))

    def __rmul__(self, other: int) -> "Quaternion":
        # Integer scaling commutes, so left scaling reuses scale().
        if isinstance(other, int):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, exponent: int) -> "Quaternion":
        if exponent < 0:
            raise ValueError("negative powers are not defined for integer quaternions")
        acc = ONE
        for _ in range(exponent):
            acc = acc * self
        return acc

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = Quaternion(other)
        if not isinstance(other, Quaternion):
            return NotImplemented
        return self.components == other.components

    def __hash__(self) -> int:
        return hash(self.components)

    def __iter__(self) -> Iterator[int]:
        return iter(self.components)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __repr__(self) -> str:
        return f"Quaternion({self.a0}, {self.a1}, {self.a2}, {self.a3})"


ZERO = Quaternion(0, 0, 0, 0)
ONE = Quaternion(1, 0, 0, 0)
I = Quaternion(0, 1, 0, 0)
J = Quaternion(0, 0, 1, 0)
K = Quaternion(0, 0, 0, 1)


def units() -> Tuple[Quaternion, ...]:
    """The eight quaternion units +-1, +-i, +-j, +-k, sorted by components."""
    return _UNITS


_UNITS: Tuple[Quaternion, ...] = tuple(
    sorted((ONE, -ONE, I, -I, J, -J, K, -K), key=lambda u: u.components)
)
