"""Exact arithmetic in the cyclotomic field Q(zeta_m).

An element is a residue in Q[x]/(Phi_m(x)) with Phi_m the m-th cyclotomic
polynomial, so two elements are equal iff their coefficient vectors are.
Coefficients are exact rationals; internally each element keeps integer
numerators over one common positive denominator so that the ring
operations run on plain integers.  There is no floating point anywhere.

Elements of different orders never mix: Q(zeta_4) and Q(zeta_8) are
treated as unrelated rings even though one embeds in the other.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd


class OrderMismatchError(ValueError):
    """Raised when combining cyclotomic elements of different orders."""


class NotRationalError(ValueError):
    """Raised by rational_part on an element outside Q."""


def _poly_divide_exact(num: list[int], den: tuple[int, ...]) -> list[int]:
    """Exact division of integer polynomials (den monic), ascending coeffs."""
    num = list(num)
    dd = len(den) - 1
    out = [0] * (len(num) - dd)
    for i in range(len(out) - 1, -1, -1):
        q = num[i + dd]
        out[i] = q
        if q:
            for j, c in enumerate(den):
                num[i + j] -= q * c
    if any(num[:dd]):
        raise ArithmeticError("polynomial division was not exact")
    return out


@lru_cache(maxsize=None)
def cyclotomic_polynomial(m: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_m, ascending degree (monic).

    Computed by the recursion Phi_m(x) = (x^m - 1) / prod_{d|m, d<m} Phi_d(x).
    """
    if m < 1:
        raise ValueError(f"order must be a positive integer, got {m}")
    if m == 1:
        return (-1, 1)
    num = [-1] + [0] * (m - 1) + [1]
    for d in range(1, m):
        if m % d == 0:
            num = _poly_divide_exact(num, cyclotomic_polynomial(d))
    return tuple(num)


@lru_cache(maxsize=None)
def _power_residues(m: int) -> tuple[tuple[int, ...], ...]:
    """x^k mod Phi_m for k = 0..m-1, as integer coefficient tuples."""
    phi = cyclotomic_polynomial(m)
    deg = len(phi) - 1
    rows = []
    cur = [0] * deg
    cur[0] = 1
    for _ in range(m):
        rows.append(tuple(cur))
        top = cur[-1]
        cur = [0] + cur[:-1]
        if top:
            for j in range(deg):
                cur[j] -= top * phi[j]
    return tuple(rows)


def _reduce_mod_phi(m: int, coeffs: list[int]) -> list[int]:
    """Reduce an integer polynomial modulo Phi_m (in place semantics)."""
    phi = cyclotomic_polynomial(m)
    deg = len(phi) - 1
    for i in range(len(coeffs) - 1, deg - 1, -1):
        c = coeffs[i]
        if c:
            coeffs[i] = 0
            for j in range(deg + 1):
                coeffs[i - deg + j] -= c * phi[j]
    out = coeffs[:deg]
    out += [0] * (deg - len(out))
    return out


class Cyclo:
    """An element of Q(zeta_m), reduced modulo Phi_m."""

    __slots__ = ("order", "_num", "_den")

    def __init__(self, order: int, num: tuple[int, ...], den: int):
        # internal constructor; use the factory class methods below
        self.order = order
        self._num = num
        self._den = den

    @classmethod
    def _make(cls, order: int, num: list[int], den: int) -> "Cyclo":
        if den < 0:
            num = [-c for c in num]
            den = -den
        g = den
        for c in num:
            g = gcd(g, c)
            if g == 1:
                break
        if g > 1:
            num = [c // g for c in num]
            den //= g
        return cls(order, tuple(num), den)

    @classmethod
    def zero(cls, m: int) -> "Cyclo":
        deg = len(cyclotomic_polynomial(m)) - 1
        return cls(m, (0,) * deg, 1)

    @classmethod
    def one(cls, m: int) -> "Cyclo":
        return cls.from_rational(m, 1)

    @classmethod
    def from_rational(cls, m: int, value) -> "Cyclo":
        value = Fraction(value)
        deg = len(cyclotomic_polynomial(m)) - 1
        num = [0] * deg
        num[0] = value.numerator
        return cls._make(m, num, value.denominator)

    @classmethod
    def from_zeta_ints(cls, m: int, vec) -> "Cyclo":
        """Sum_k vec[k] * zeta_m^k for an integer vector indexed mod m."""
        deg = len(cyclotomic_polynomial(m)) - 1
        res = _power_residues(m)
        num = [0] * deg
        for k, c in enumerate(vec):
            if c:
                row = res[k % m]
                for j in range(deg):
                    num[j] += c * row[j]
        return cls._make(m, num, 1)

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(c, self._den) for c in self._num)

    def _check(self, other: "Cyclo") -> None:
        if self.order != other.order:
            raise OrderMismatchError(
                f"cannot combine Q(zeta_{self.order}) with Q(zeta_{other.order})"
            )

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Cyclo.from_rational(self.order, other)
        if not isinstance(other, Cyclo):
            return NotImplemented
        self._check(other)
        da, db = self._den, other._den
        num = [a * db + b * da for a, b in zip(self._num, other._num)]
        return Cyclo._make(self.order, num, da * db)

    __radd__ = __add__

    def __neg__(self):
        return Cyclo(self.order, tuple(-c for c in self._num), self._den)

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Cyclo.from_rational(self.order, other)
        if not isinstance(other, Cyclo):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            f = Fraction(other)
            num = [c * f.numerator for c in self._num]
            return Cyclo._make(self.order, num, self._den * f.denominator)
        if not isinstance(other, Cyclo):
            return NotImplemented
        self._check(other)
        a, b = self._num, other._num
        conv = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    if cb:
                        conv[i + j] += ca * cb
        num = _reduce_mod_phi(self.order, conv)
        return Cyclo._make(self.order, num, self._den * other._den)

    __rmul__ = __mul__

    def conj(self) -> "Cyclo":
        """Complex conjugation, the ring map zeta -> zeta^(m-1)."""
        m = self.order
        res = _power_residues(m)
        deg = len(self._num)
        num = [0] * deg
        for i, c in enumerate(self._num):
            if c:
                row = res[(m - i) % m]
                for j in range(deg):
                    num[j] += c * row[j]
        return Cyclo._make(m, num, self._den)

    def is_zero(self) -> bool:
        return not any(self._num)

    def is_rational(self) -> bool:
        return not any(self._num[1:])

    def rational_part(self) -> Fraction:
        """The value as a rational number; error if not rational."""
        if not self.is_rational():
            raise NotRationalError(f"{self} is not rational")
        return Fraction(self._num[0], self._den)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.rational_part() == Fraction(other)
        if not isinstance(other, Cyclo):
            return NotImplemented
        return (
            self.order == other.order
            and self._num == other._num
            and self._den == other._den
        )

    def __hash__(self):
        return hash((self.order, self._num, self._den))

    def __str__(self):
        if self.is_zero():
            return "0"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                z = "z" if i == 1 else f"z^{i}"
                if c == 1:
                    terms.append(z)
                elif c == -1:
                    terms.append(f"-{z}")
                else:
                    terms.append(f"{c}*{z}")
        out = terms[0]
        for t in terms[1:]:
            out += f" - {t[1:]}" if t.startswith("-") else f" + {t}"
        return out

    def __repr__(self):
        return f"Cyclo({self.order}, {str(self)})"


def root_power(m: int, k: int) -> Cyclo:
    """zeta_m^k as an element of Q(zeta_m)."""
    if m < 1:
        raise ValueError(f"order must be a positive integer, got {m}")
    num = list(_power_residues(m)[k % m])
    return Cyclo._make(m, num, 1)
