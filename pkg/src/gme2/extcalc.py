"""Graded Ext-dimension engines for equivariant sheaves on the plane.

Everything is reduced to character arithmetic: for skyscrapers twisted
by irreducibles, the Koszul resolution of the origin gives

    Ext^0 = [U = W],  Ext^1 = mult of W in U (x) rho(x),
    Ext^2 = [W = U (x) chi(Axy)].

Ext from the finite-length modules F(x^a) is computed constructively
from generators, socle and the Euler pairing over the graded pieces, and
cross-checked against the closed case table.  Curve-supported objects
enter only through their generator labels and the two-term Koszul
complexes of their defining equations.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

from .labels import Chi, IrrepLabel, Rho, label_str
from .modfilt import decompose, f_module, generators, socle
from .reps import RepMultiset, RepTable


class ExtBoundError(AssertionError):
    """An Ext dimension exceeded the bound 2; aborts the check run."""


@dataclass(frozen=True)
class ExtProfile:
    """Dimensions of Ext^0, Ext^1, Ext^2 in the equivariant category."""

    d0: int
    d1: int
    d2: int

    def __post_init__(self):
        for v in (self.d0, self.d1, self.d2):
            if v < 0 or v > 2:
                raise ExtBoundError(f"Ext dimension {v} outside 0..2: {self}")

    def __add__(self, other: "ExtProfile") -> "ExtProfile":
        return ExtProfile(self.d0 + other.d0, self.d1 + other.d1, self.d2 + other.d2)

    def scaled(self, k: int) -> "ExtProfile":
        return ExtProfile(k * self.d0, k * self.d1, k * self.d2)

    @property
    def euler(self) -> int:
        return self.d0 - self.d1 + self.d2

    def is_zero(self) -> bool:
        return self == ExtProfile(0, 0, 0)


ZERO = ExtProfile(0, 0, 0)


def ext_sky_sky(u: IrrepLabel, w: IrrepLabel, table: RepTable) -> ExtProfile:
    """Ext between origin skyscrapers twisted by irreducibles u, w."""
    d0 = int(u == w)
    d1 = table.tensor_with_defining(u)[w]
    d2 = int(table.twist_by_Axy(u) == w)
    return ExtProfile(d0, d1, d2)


def euler_pairing(pieces: RepMultiset, w: IrrepLabel, table: RepTable) -> int:
    """Euler bicharacteristic of a filtered object against a skyscraper."""
    return sum(
        mult * ext_sky_sky(u, w, table).euler for u, mult in pieces.items()
    )


def _f_range(table: RepTable) -> int:
    p = table.params
    return p.n if p.e_even else p.n_plus


def _bottom_label(a: int, table: RepTable) -> tuple[IrrepLabel, ...]:
    return (Chi("1", 0),) if a == 0 else table.normalize_rho(a, 0)


def fext_case_table(a: int, w: IrrepLabel, table: RepTable) -> ExtProfile:
    """The closed-form Ext(F(x^a), O_0 (x) w) case table.

    d0 sits at the generator label of F(x^a), d1 at the constituents of
    rho(x^(a+1)), d2 at chi(A (xy)^(a+1)).  For a >= 1 there is one more
    Ext^1 class, against chi(A (xy)^a): the top graded piece
    rho(x^a y^(a-1)) surjects onto the determinant character.
    """
    params = table.params
    d0 = int((w,) == _bottom_label(a, table))
    d1 = int(w in table.normalize_rho(a + 1, 0))
    if a >= 1 and w == Chi("A", a % params.d):
        d1 += 1
    d2 = int(w == Chi("A", (a + 1) % params.d))
    return ExtProfile(d0, d1, d2)


def ext_F_sky(a: int, w: IrrepLabel, table: RepTable) -> ExtProfile:
    """Ext(F(x^a), O_0 (x) w), computed from generators/socle/Euler.

    The result is asserted to agree with the closed case table.
    """
    hi = _f_range(table)
    if not 0 <= a <= hi - 1:
        raise ValueError(f"F exponent {a} outside range 0..{hi - 1}")
    cache = getattr(table, "_fext_cache", None)
    if cache is None:
        cache = {}
        table._fext_cache = cache
    got = cache.get((a, w))
    if got is not None:
        return got

    mod = f_module(a, table.params)
    d0 = generators(mod, table)[w]
    (soc,) = socle(mod, table).keys()
    d2 = int(table.twist_by_Axy(soc) == w)
    d1 = d0 + d2 - euler_pairing(decompose(mod, table), w, table)
    if d1 < 0:
        raise AssertionError(f"negative Ext^1 for F({a}) against {label_str(w)}")
    profile = ExtProfile(d0, d1, d2)
    expected = fext_case_table(a, w, table)
    if profile != expected:
        raise AssertionError(
            f"F({a}) vs {label_str(w)}: engine {profile} != case table {expected}"
        )
    cache[(a, w)] = profile
    return profile


def ext_F_F(a: int, b: int, table: RepTable) -> ExtProfile:
    """Ext(F(x^a), F(x^b)) by summing over the graded pieces of F(x^b)."""
    out = ZERO
    for u, mult in decompose(f_module(b, table.params), table).items():
        out = out + ext_F_sky(a, u, table).scaled(mult)
    return out


# ----- curve-supported generators ----------------------------------------


@dataclass(frozen=True)
class Zgamma:
    """O_{Z_gamma}(A^? (xy)^c), on the coordinate cross xy = 0."""

    c: int
    a_twist: bool


@dataclass(frozen=True)
class Ztau:
    """O_{Z_tau}(twist), on the line arrangement x^n = y^n (even e)."""

    twist: Chi


@dataclass(frozen=True)
class Zzetatau:
    """O_{Z_zeta-tau}(twist), on x^n = -y^n (even e)."""

    twist: Chi


@dataclass(frozen=True)
class StructureSheaf:
    """O_V(twist), the twisted structure sheaf of the whole plane."""

    twist: Chi


CurveGenerator = Union[Zgamma, Ztau, Zzetatau, StructureSheaf]


def ext_curvegen_sky(gen: CurveGenerator, w: IrrepLabel, table: RepTable) -> ExtProfile:
    """Ext from a curve generator to O_0 (x) w, via the two-term complex
    coming from the Koszul resolution of the defining equation."""
    d = table.params.d
    if isinstance(gen, StructureSheaf):
        return ExtProfile(int(w == gen.twist), 0, 0)
    if isinstance(gen, Zgamma):
        pre = "A" if gen.a_twist else "1"
        d0 = int(w == Chi(pre, gen.c % d))
        d1 = int(w == Chi(pre, (gen.c - 1) % d))
        return ExtProfile(d0, d1, 0)
    if not table.params.e_even:
        raise ValueError("Z_tau-type generators require even e")
    shift = Chi("N-", 0) if isinstance(gen, Ztau) else Chi("N+", 0)
    d0 = int(w == gen.twist)
    (d1_target,) = table.tensor(gen.twist, shift).keys()
    return ExtProfile(d0, int(w == d1_target), 0)
