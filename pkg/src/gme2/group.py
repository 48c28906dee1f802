"""The imprimitive rank-two complex reflection groups G(m, e, 2).

Elements are stored as exponent residues (a, b, swap) standing for the
matrix D(a, b) = diag(z^a, z^b) times an optional coordinate swap, where
z is a fixed primitive m-th root of unity.  Membership requires
a + b = 0 mod e.  All group arithmetic is exact residue arithmetic; the
matrix realisation over Q(zeta_m) exists only as an export for oracle
cross-checks.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache

from .cyclotomic import Cyclo, root_power


class ConsistencyError(AssertionError):
    """An internal closed-form cross-check failed (library bug)."""


@dataclass(frozen=True)
class GroupParams:
    """Parameters (m, e) with e | m; d = m/e; the group order is 2md."""

    m: int
    e: int

    def __post_init__(self):
        if self.m < 2:
            raise ValueError(f"m must be >= 2, got {self.m}")
        if self.e < 1:
            raise ValueError(f"e must be >= 1, got {self.e}")
        if self.m % self.e != 0:
            raise ValueError(f"e must divide m, got m={self.m}, e={self.e}")

    @property
    def d(self) -> int:
        return self.m // self.e

    @property
    def order(self) -> int:
        return 2 * self.m * self.d

    @property
    def e_even(self) -> bool:
        return self.e % 2 == 0

    @property
    def n(self) -> int:
        """m/2, defined for even e."""
        if not self.e_even:
            raise ValueError("n = m/2 is only used when e is even")
        return self.m // 2

    @property
    def n_plus(self) -> int:
        """(m + d)/2, defined for odd e."""
        if self.e_even:
            raise ValueError("n_plus is only used when e is odd")
        return (self.m + self.d) // 2

    @property
    def n_minus(self) -> int:
        """(m - d)/2, defined for odd e."""
        if self.e_even:
            raise ValueError("n_minus is only used when e is odd")
        return (self.m - self.d) // 2


@dataclass(frozen=True)
class GroupElement:
    """D(a, b) (swap=False) or D(a, b) followed by the coordinate swap."""

    params: GroupParams
    a: int
    b: int
    swap: bool = False

    def __post_init__(self):
        m = self.params.m
        object.__setattr__(self, "a", self.a % m)
        object.__setattr__(self, "b", self.b % m)
        if (self.a + self.b) % self.params.e != 0:
            raise ValueError(
                f"not a group element: a+b = {self.a}+{self.b} != 0 mod e={self.params.e}"
            )

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        if self.params != other.params:
            raise ValueError("elements of different groups")
        if self.swap:
            return GroupElement(
                self.params, self.a + other.b, self.b + other.a, not other.swap
            )
        return GroupElement(
            self.params, self.a + other.a, self.b + other.b, other.swap
        )

    def inverse(self) -> "GroupElement":
        if self.swap:
            return GroupElement(self.params, -self.b, -self.a, True)
        return GroupElement(self.params, -self.a, -self.b, False)

    def conjugate(self, by: "GroupElement") -> "GroupElement":
        """g^h = h^-1 * g * h."""
        return by.inverse() * self * by

    def is_identity(self) -> bool:
        return self.a == 0 and self.b == 0 and not self.swap

    def element_order(self) -> int:
        g = self
        k = 1
        while not g.is_identity():
            g = g * self
            k += 1
        return k

    def matrix(self) -> tuple[tuple[Cyclo, Cyclo], tuple[Cyclo, Cyclo]]:
        """The 2x2 matrix over Q(zeta_m); oracle export only."""
        m = self.params.m
        zero = Cyclo.zero(m)
        za, zb = root_power(m, self.a), root_power(m, self.b)
        if self.swap:
            return ((zero, za), (zb, zero))
        return ((za, zero), (zero, zb))

    def key(self) -> tuple[int, int, int]:
        return (int(self.swap), self.a, self.b)

    def __repr__(self):
        tail = ".t" if self.swap else ""
        return f"D({self.a},{self.b}){tail}"


def identity(params: GroupParams) -> GroupElement:
    return GroupElement(params, 0, 0, False)


def tau(params: GroupParams) -> GroupElement:
    return GroupElement(params, 0, 0, True)


def zeta_tilde(params: GroupParams) -> GroupElement:
    return GroupElement(params, 1, -1, False)


def gamma_y(params: GroupParams) -> GroupElement:
    return GroupElement(params, 0, params.e, False)


def gamma_x(params: GroupParams) -> GroupElement:
    return GroupElement(params, params.e, 0, False)


@lru_cache(maxsize=None)
def enumerate_elements(params: GroupParams) -> tuple[GroupElement, ...]:
    """All 2md elements, in deterministic (swap, a, b) order."""
    out = []
    for swap in (False, True):
        for a in range(params.m):
            b0 = (-a) % params.e
            for j in range(params.d):
                out.append(GroupElement(params, a, b0 + j * params.e, swap))
    return tuple(out)


def fixed_locus(g: GroupElement) -> str:
    """Tag of the eigenvalue-1 eigenspace: 'plane', 'origin', or a line.

    Lines are 'Van(x)', 'Van(y)' or 'Van(x-z^{i}y)' with z the fixed
    primitive m-th root of unity.
    """
    if not g.swap:
        if g.a == 0 and g.b == 0:
            return "plane"
        if g.a == 0:
            return "Van(y)"
        if g.b == 0:
            return "Van(x)"
        return "origin"
    if (g.a + g.b) % g.params.m == 0:
        return f"Van(x-z^{g.a}y)"
    return "origin"


def is_reflection(g: GroupElement) -> bool:
    return fixed_locus(g) not in ("plane", "origin")


@dataclass(frozen=True)
class ConjClass:
    """One conjugacy class with its normalized representative."""

    representative: GroupElement
    members: frozenset[GroupElement]
    centraliser_order: int
    fixed_locus: str
    raw_representative: GroupElement

    @property
    def size(self) -> int:
        return len(self.members)


def _canonical_representative(orbit: frozenset[GroupElement]) -> GroupElement:
    """Normal form: D(0,*) or D(1,*) for swap classes, lex-min otherwise."""
    swap = next(iter(orbit)).swap
    if swap:
        for a0 in (0, 1):
            cands = [g for g in orbit if g.a == a0]
            if cands:
                return min(cands, key=GroupElement.key)
    return min(orbit, key=GroupElement.key)


@lru_cache(maxsize=None)
def conjugacy_classes(params: GroupParams) -> tuple[ConjClass, ...]:
    """Conjugacy classes by brute-force orbit closure under conjugation.

    The class count is cross-checked against the closed forms
    (m-1)d/2 + 2d for odd e and (m-2)d/2 + 4d for even e.
    """
    elements = enumerate_elements(params)
    gens = [zeta_tilde(params), gamma_y(params), tau(params)]
    seen: set[GroupElement] = set()
    classes = []
    for g in elements:
        if g in seen:
            continue
        orbit = {g}
        frontier = [g]
        while frontier:
            h = frontier.pop()
            for s in gens:
                c = h.conjugate(by=s)
                if c not in orbit:
                    orbit.add(c)
                    frontier.append(c)
        seen |= orbit
        members = frozenset(orbit)
        rep = _canonical_representative(members)
        classes.append(
            ConjClass(
                representative=rep,
                members=members,
                centraliser_order=params.order // len(members),
                fixed_locus=fixed_locus(rep),
                raw_representative=min(members, key=GroupElement.key),
            )
        )
    classes.sort(key=lambda c: c.representative.key())

    d = params.d
    expected = ((params.m - 2) * d) // 2 + 4 * d if params.e_even else (
        (params.m - 1) * d
    ) // 2 + 2 * d
    if len(classes) != expected:
        raise ConsistencyError(
            f"class count {len(classes)} != closed form {expected} for {params}"
        )
    if sum(c.size for c in classes) != params.order:
        raise ConsistencyError(f"class equation violated for {params}")
    return tuple(classes)


def reflection_class_representatives(params: GroupParams) -> tuple[GroupElement, ...]:
    """gamma_y, ..., gamma_y^(d-1), tau, and for even e also zeta~*tau."""
    reps = [
        GroupElement(params, 0, c * params.e, False) for c in range(1, params.d)
    ]
    reps.append(tau(params))
    if params.e_even:
        reps.append(GroupElement(params, 1, -1, True))
    return tuple(reps)


def center(params: GroupParams) -> tuple[GroupElement, ...]:
    elements = enumerate_elements(params)
    gens = [zeta_tilde(params), gamma_y(params), tau(params)]
    return tuple(
        g for g in elements if all(g * s == s * g for s in gens)
    )


def classes_to_json(classes: tuple[ConjClass, ...]) -> str:
    rows = [
        {
            "representative": [c.representative.a, c.representative.b, c.representative.swap],
            "size": c.size,
            "centraliser_order": c.centraliser_order,
            "fixed_locus": c.fixed_locus,
        }
        for c in classes
    ]
    return json.dumps(rows, indent=2, sort_keys=True)


def classes_from_json(text: str, params: GroupParams) -> tuple[ConjClass, ...]:
    """Rebuild class data from the JSON export (members are recomputed)."""
    rows = json.loads(text)
    by_rep = {c.representative: c for c in conjugacy_classes(params)}
    out = []
    for row in rows:
        a, b, swap = row["representative"]
        rep = GroupElement(params, a, b, bool(swap))
        cls = by_rep[rep]
        if cls.size != row["size"] or cls.centraliser_order != row["centraliser_order"]:
            raise ValueError("class table does not match the group")
        out.append(cls)
    return tuple(out)
