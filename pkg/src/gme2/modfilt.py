"""Finite-dimensional G-stable monomial modules supported at the origin.

A module is a set of atoms (p, q, a_flag): the monomial x^p y^q, tensored
by the sign character chi(A) when the flag is set.  The atom set must be
closed under the swap (p, q) <-> (q, p), which makes the span G-stable.
Quotients of monomial ideals carry a well-defined partial action of x and
y on atoms (multiply or die), which socle/generators/filtration need; the
named module fiber0 is not of that kind and only supports decompose.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .group import GroupParams
from .labels import Chi, IrrepLabel, label_str, sort_key
from .reps import RepMultiset, RepTable, multiset

Atom = tuple[int, int, bool]


@dataclass(frozen=True)
class MonomialModule:
    params: GroupParams
    atoms: frozenset[Atom]
    provenance: str
    action_closed: bool

    @property
    def dim(self) -> int:
        return len(self.atoms)


def _in_ideal(p: int, q: int, gens) -> bool:
    return any(p >= g0 and q >= g1 for g0, g1 in gens)


def ideal_quotient_basis(
    numerator, denominator, params: GroupParams, provenance: str = "ideal-quotient"
) -> MonomialModule:
    """Staircase basis of (numerator ideal)/(denominator ideal).

    Generators are (x-exponent, y-exponent) pairs.  The denominator must
    contain pure powers of x and of y (finite quotient) and be contained
    in the numerator ideal.
    """
    num = [tuple(g) for g in numerator]
    den = [tuple(g) for g in denominator]
    xbounds = [g0 for g0, g1 in den if g1 == 0]
    ybounds = [g1 for g0, g1 in den if g0 == 0]
    if not xbounds or not ybounds:
        raise ValueError("quotient is infinite-dimensional: denominator lacks pure powers")
    for g in den:
        if not _in_ideal(g[0], g[1], num):
            raise ValueError(f"denominator generator {g} is not in the numerator ideal")
    atoms = frozenset(
        (p, q, False)
        for p in range(min(xbounds))
        for q in range(min(ybounds))
        if _in_ideal(p, q, num) and not _in_ideal(p, q, den)
    )
    mod = MonomialModule(params, atoms, provenance, action_closed=True)
    _assert_tau_closed(mod)
    return mod


def _assert_tau_closed(mod: MonomialModule) -> None:
    for p, q, f in mod.atoms:
        if (q, p, f) not in mod.atoms:
            raise ValueError(f"atom set is not swap-closed at ({p},{q})")


def custom_module(params: GroupParams, atoms, provenance: str = "custom") -> MonomialModule:
    mod = MonomialModule(params, frozenset(atoms), provenance, action_closed=False)
    _assert_tau_closed(mod)
    return mod


def f_module(a: int, params: GroupParams) -> MonomialModule:
    """F(x^a) = (x^a, y^a)/(x^(a+1), y^(a+1)), dimension 2a + 1."""
    hi = params.n if params.e_even else params.n_plus
    if not 0 <= a <= hi - 1:
        raise ValueError(f"F exponent {a} outside range 0..{hi - 1}")
    mod = ideal_quotient_basis(
        [(a, 0), (0, a)], [(a + 1, 0), (0, a + 1)], params, provenance=f"F({a})"
    )
    if mod.dim != 2 * a + 1:
        raise AssertionError("F module has wrong dimension")
    return mod


def xi_module(params: GroupParams) -> MonomialModule:
    """The fat point cut out by ((xy)^d, x^(n+), y^(n+)); odd e only."""
    if params.e_even:
        raise ValueError("xi is only defined for odd e")
    np = params.n_plus
    mod = ideal_quotient_basis(
        [(0, 0)], [(params.d, params.d), (np, 0), (0, np)], params, provenance="xi"
    )
    if mod.dim != params.m * params.d:
        raise AssertionError("xi module has wrong dimension")
    return mod


def fiber0_module(params: GroupParams) -> MonomialModule:
    """The fiber of the quotient map over the image of the origin.

    Basis: monomials x^a y^b with min(a,b) < d, max(a,b) < m, together
    with the A-twisted atoms A x^a y^b for a, b < d.  Total dimension 2md.
    """
    m, d = params.m, params.d
    atoms = {
        (p, q, False)
        for p in range(m)
        for q in range(m)
        if min(p, q) < d
    }
    atoms |= {(p, q, True) for p in range(d) for q in range(d)}
    mod = MonomialModule(params, frozenset(atoms), "fiber0", action_closed=False)
    if mod.dim != 2 * m * d:
        raise AssertionError("fiber module has wrong dimension")
    return mod


def _orbit_pieces(mod: MonomialModule, table: RepTable):
    """(degree, labels) per tau-orbit of atoms, in deterministic order."""
    d = table.params.d
    seen: set[Atom] = set()
    out = []
    for atom in sorted(mod.atoms):
        if atom in seen:
            continue
        p, q, flag = atom
        partner = (q, p, flag)
        seen.add(atom)
        seen.add(partner)
        if p == q:
            label = Chi("A" if flag else "1", p % d)
            out.append((p + q, (label,)))
        else:
            # rho tensor chi(A) is rho again; a split pair is swapped by A
            out.append((p + q, table.normalize_rho(p, q)))
    return out


def decompose(mod: MonomialModule, table: RepTable) -> RepMultiset:
    """Decomposition of the span into irreducibles, via tau-orbits."""
    out: RepMultiset = multiset()
    for _, labels in _orbit_pieces(mod, table):
        out.update(labels)
    return out


def _require_action(mod: MonomialModule) -> None:
    if not mod.action_closed:
        raise ValueError(
            f"module {mod.provenance!r} has no well-defined monomial action"
        )


def socle(mod: MonomialModule, table: RepTable) -> RepMultiset:
    """Decomposition of the atoms annihilated by both x and y."""
    _require_action(mod)
    atoms = {
        (p, q, f)
        for p, q, f in mod.atoms
        if (p + 1, q, f) not in mod.atoms and (p, q + 1, f) not in mod.atoms
    }
    return decompose(
        MonomialModule(mod.params, frozenset(atoms), "socle", False), table
    )


def generators(mod: MonomialModule, table: RepTable) -> RepMultiset:
    """Decomposition of the atoms outside (x, y) * module."""
    _require_action(mod)
    atoms = {
        (p, q, f)
        for p, q, f in mod.atoms
        if (p - 1, q, f) not in mod.atoms and (p, q - 1, f) not in mod.atoms
    }
    return decompose(
        MonomialModule(mod.params, frozenset(atoms), "generators", False), table
    )


def filtration(mod: MonomialModule, table: RepTable) -> tuple[IrrepLabel, ...]:
    """Graded pieces as an ordered list refining decompose.

    Pieces are ordered by descending total degree of the supporting
    atoms, ties broken by canonical label order; this is one valid
    refinement order, fixed for determinism.
    """
    _require_action(mod)
    pieces: list[tuple[int, IrrepLabel]] = []
    for deg, labels in _orbit_pieces(mod, table):
        pieces.extend((deg, lab) for lab in labels)
    pieces.sort(key=lambda t: (-t[0], sort_key(t[1])))
    return tuple(lab for _, lab in pieces)


def module_to_json(mod: MonomialModule, table: RepTable) -> str:
    dec = decompose(mod, table)
    return json.dumps(
        {
            "basis": [[p, q, f] for p, q, f in sorted(mod.atoms)],
            "decomposition": [
                {"label": label_str(lab), "mult": dec[lab]}
                for lab in sorted(dec, key=sort_key)
            ],
        },
        indent=2,
        sort_keys=True,
    )
