"""The finite residue system of Lipschitz quaternions modulo a quaternion prime.

Congruence is one-sided: q1 and q2 are congruent mod pi when q1 - q2 = b*pi
for some Lipschitz quaternion b (b on the left of pi).  The quotient has
exactly p^2 classes, where p = N(pi) is an odd rational prime.

Each class is held by its canonical representative

    rep = q - round(q * conj(pi) / p) * pi

with round(x) = floor(x + 1/2) applied per component.  This rounding rule is
invariant under adding b*pi to q, so reduction is constant on classes and
idempotent.  Round-half-to-even would break that invariance and must not be
substituted.

Because the multiples {b*pi} form a left ideal only, multiplication of
classes is not representative-independent in general; all arithmetic here is
defined on the canonical representatives, which makes every computation
deterministic.  Class-level well-definedness of products is deliberately not
claimed.  One consequence worth knowing: x*(y*z) always equals the class of
the exact triple product of the canonical representatives, while (x*y)*z may
not, so chained products are not associative in general.
"""

from __future__ import annotations

from functools import cached_property
from math import isqrt
from typing import Optional, Tuple

from .quaternion import Components, Quaternion, hamilton, units


def _is_odd_prime(n: int) -> bool:
    if n < 3 or n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def _reduce(q: Components, pi: Components, conj_pi: Components, p: int) -> Components:
    """Canonical representative of q's class: q - round(q*conj(pi)/p)*pi."""
    t = hamilton(q, conj_pi)
    two_p = 2 * p
    b = (
        (2 * t[0] + p) // two_p,
        (2 * t[1] + p) // two_p,
        (2 * t[2] + p) // two_p,
        (2 * t[3] + p) // two_p,
    )
    if b == (0, 0, 0, 0):
        return q
    bp = hamilton(b, pi)
    return (q[0] - bp[0], q[1] - bp[1], q[2] - bp[2], q[3] - bp[3])


class Modulus:
    """A validated quaternion prime modulus with its cached derived data.

    Immutable once constructed (cached properties fill in lazily and
    idempotently, so concurrent use is safe).
    """

    def __init__(self, pi: Quaternion):
        if pi.is_zero():
            raise ValueError("modulus must be nonzero")
        p = pi.norm()
        if not _is_odd_prime(p):
            raise ValueError(
                f"norm of {pi!r} is {p}, not an odd rational prime; "
                "not a quaternion prime modulus for this artifact"
            )
        self.pi = pi
        self.p = p
        self.conj_pi = pi.conjugate()
        self._pi_c = pi.components
        self._conj_c = self.conj_pi.components
        # Lazily filled caches; both are keyed by canonical components and
        # idempotent to recompute, so concurrent fills are harmless.
        self._inverse_cache: dict = {}
        self._weight_table: Optional[dict] = None

    def reduce(self, q: Quaternion) -> "Residue":
        """The residue class of q, held by its canonical representative."""
        rep = _reduce(q.components, self._pi_c, self._conj_c, self.p)
        return Residue._wrap(rep, self)

    def residue(self, a0: int = 0, a1: int = 0, a2: int = 0, a3: int = 0) -> "Residue":
        return self.reduce(Quaternion(a0, a1, a2, a3))

    def congruent(self, q1: Quaternion, q2: Quaternion) -> bool:
        """True iff q1 - q2 is a left multiple of pi."""
        t = hamilton((q1 - q2).components, self._conj_c)
        p = self.p
        return t[0] % p == 0 and t[1] % p == 0 and t[2] % p == 0 and t[3] % p == 0

    @cached_property
    def zero(self) -> "Residue":
        return Residue._wrap((0, 0, 0, 0), self)

    @cached_property
    def one(self) -> "Residue":
        return Residue._wrap((1, 0, 0, 0), self)

    @cached_property
    def unit_residues(self) -> Tuple["Residue", ...]:
        return tuple(self.reduce(u) for u in units())

    @cached_property
    def residues(self) -> Tuple["Residue", ...]:
        """All p^2 residue classes, sorted by canonical representative.

        Obtained by reducing the full box [0, p)^4, which covers every class
        because p itself is congruent to zero.
        """
        p = self.p
        pi_c, conj_c = self._pi_c, self._conj_c
        seen = set()
        for a0 in range(p):
            for a1 in range(p):
                for a2 in range(p):
                    for a3 in range(p):
                        seen.add(_reduce((a0, a1, a2, a3), pi_c, conj_c, p))
        return tuple(Residue._wrap(c, self) for c in sorted(seen))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Modulus):
            return NotImplemented
        return self._pi_c == other._pi_c

    def __hash__(self) -> int:
        return hash(self._pi_c)

    def __repr__(self) -> str:
        return f"Modulus({self.pi!r}, p={self.p})"


def make_modulus(pi: Quaternion) -> Modulus:
    return Modulus(pi)


def find_prime_over(p: int) -> Quaternion:
    """The lexicographically least quaternion of norm p.

    Searches components in [-ceil(sqrt(p)), ceil(sqrt(p))]; every odd prime
    is a sum of four squares, so the search always succeeds.
    """
    if not _is_odd_prime(p):
        raise ValueError(f"{p} is not an odd rational prime")
    bound = isqrt(p)
    if bound * bound < p:
        bound += 1
    lo, hi = -bound, bound + 1
    for a0 in range(lo, hi):
        r0 = p - a0 * a0
        if r0 < 0:
            continue
        for a1 in range(lo, hi):
            r1 = r0 - a1 * a1
            if r1 < 0:
                continue
            for a2 in range(lo, hi):
                r2 = r1 - a2 * a2
                if r2 < 0:
                    continue
                a3sq = r2
                a3 = -isqrt(a3sq)
                if a3 * a3 == a3sq and lo <= a3 < hi:
                    return Quaternion(a0, a1, a2, a3)
    raise AssertionError("four-square representation must exist for an odd prime")


def congruent(q1: Quaternion, q2: Quaternion, modulus: Modulus) -> bool:
    return modulus.congruent(q1, q2)


def canonical_reduce(q: Quaternion, modulus: Modulus) -> "Residue":
    return modulus.reduce(q)


def enumerate_residues(modulus: Modulus) -> Tuple["Residue", ...]:
    return modulus.residues


class Residue:
    """A congruence class, stored as its canonical representative.

    Arithmetic reduces after every step.  Multiplication keeps the factor
    order; the product class is a deterministic function of the canonical
    representatives (see the module docstring for the one-sidedness caveat).
    """

    __slots__ = ("rep", "modulus", "key")

    def __init__(self, rep: Quaternion, modulus: Modulus):
        self.modulus = modulus
        self.key = _reduce(rep.components, modulus._pi_c, modulus._conj_c, modulus.p)
        self.rep = Quaternion.from_components(self.key)

    @classmethod
    def _wrap(cls, canonical: Components, modulus: Modulus) -> "Residue":
        # Fast path for components that are already canonical.
        r = cls.__new__(cls)
        r.modulus = modulus
        r.key = canonical
        r.rep = Quaternion.from_components(canonical)
        return r

    def _require_same(self, other: "Residue") -> None:
        if self.modulus is not other.modulus and self.modulus != other.modulus:
            raise ValueError("residues belong to different moduli")

    def is_zero(self) -> bool:
        return self.key == (0, 0, 0, 0)

    def __add__(self, other: "Residue") -> "Residue":
        if not isinstance(other, Residue):
            return NotImplemented
        self._require_same(other)
        m = self.modulus
        a, b = self.key, other.key
        s = (a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3])
        return Residue._wrap(_reduce(s, m._pi_c, m._conj_c, m.p), m)

    def __sub__(self, other: "Residue") -> "Residue":
        if not isinstance(other, Residue):
            return NotImplemented
        self._require_same(other)
        m = self.modulus
        a, b = self.key, other.key
        s = (a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3])
        return Residue._wrap(_reduce(s, m._pi_c, m._conj_c, m.p), m)

    def __neg__(self) -> "Residue":
        m = self.modulus
        a = self.key
        return Residue._wrap(_reduce((-a[0], -a[1], -a[2], -a[3]), m._pi_c, m._conj_c, m.p), m)

    def __mul__(self, other: "Residue | int") -> "Residue":
        m = self.modulus
        if isinstance(other, int):
            a = self.key
            s = (a[0] * other, a[1] * other, a[2] * other, a[3] * other)
            return Residue._wrap(_reduce(s, m._pi_c, m._conj_c, m.p), m)
        if not isinstance(other, Residue):
            return NotImplemented
        self._require_same(other)
        return Residue._wrap(
            _reduce(hamilton(self.key, other.key), m._pi_c, m._conj_c, m.p), m
        )

    def __rmul__(self, other: int) -> "Residue":
        if isinstance(other, int):
            return self.__mul__(other)
        return NotImplemented

    def __pow__(self, exponent: int) -> "Residue":
        """Iterated left-to-right product; x**0 is 1."""
        if exponent < 0:
            raise ValueError("negative exponents are not supported; use inverse()")
        acc = self.modulus.one
        for _ in range(exponent):
            acc = acc * self
        return acc

    def order(self) -> Optional[int]:
        """Least m >= 1 with self**m == 1, searching m <= p^2; None if no power reaches 1."""
        if self.is_zero():
            raise ValueError("order of the zero residue is undefined")
        one = self.modulus.one
        acc = self
        for m in range(1, self.modulus.p ** 2 + 1):
            if acc == one:
                return m
            acc = acc * self
        return None

    def inverse(self) -> Optional["Residue"]:
        """A residue y with self*y == y*self == 1, or None when none exists.

        Tries the conjugate route first (y ~ N(rep)^-1 * conj(rep)); that
        candidate is not always two-sided under canonical-representative
        multiplication, so it is verified and a full search over the residue
        system is used as fallback.
        """
        if self.is_zero():
            raise ValueError("the zero residue has no inverse")
        m = self.modulus
        if self.key in m._inverse_cache:
            return m._inverse_cache[self.key]
        one = m.one
        result = None
        n = self.rep.norm() % m.p
        if n != 0:
            cand = m.reduce(self.rep.conjugate().scale(pow(n, -1, m.p)))
            if self * cand == one and cand * self == one:
                result = cand
        if result is None:
            for y in m.residues:
                if self * y == one and y * self == one:
                    result = y
                    break
        m._inverse_cache[self.key] = result
        return result

    def left_associates(self) -> Tuple["Residue", ...]:
        """The classes of u * rep over the eight units u, deduplicated."""
        m = self.modulus
        seen = {}
        for u in units():
            r = Residue._wrap(
                _reduce(hamilton(u.components, self.key), m._pi_c, m._conj_c, m.p), m
            )
            seen.setdefault(r.key, r)
        return tuple(seen[k] for k in sorted(seen))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Residue):
            return NotImplemented
        return self.key == other.key and self.modulus == other.modulus

    def __hash__(self) -> int:
        return hash(self.key)

    def __repr__(self) -> str:
        return f"Residue({self.rep!r} mod {self.modulus.pi!r})"
