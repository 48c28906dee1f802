"""Irreducible representations and character theory of G(m, e, 2).

The internal canonical form of a two-dimensional representation is the
tau-orbit of the character of the diagonal subgroup H: a monomial x^p y^q
restricts to the H-character (s, t) = (p - q mod m, q mod d), and tau
conjugation acts by (s, t) -> (-s, t + s mod d).  An orbit of size two is
an irreducible rho; a fixed orbit splits into two one-dimensional
characters.  The monomial labels of :mod:`gme2.labels` are a bijective
presentation layer over these orbits.

Character values here are always sums of at most two roots of unity with
signs, so the table stores them as sparse {exponent: coefficient} dicts;
inner products accumulate exactly in the basis 1, zeta, ..., zeta^(m-1)
and are reduced modulo the cyclotomic polynomial at the end.
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from functools import lru_cache

from .cyclotomic import Cyclo, root_power
from .group import ConjClass, GroupElement, GroupParams, conjugacy_classes
from .labels import Chi, IrrepLabel, Rho, dim, sort_key

# multiplication table of the semi-invariant prefixes 1, A, N+, N-
_PREFIX_MUL = {
    ("1", "1"): "1", ("1", "A"): "A", ("1", "N+"): "N+", ("1", "N-"): "N-",
    ("A", "1"): "A", ("A", "A"): "1", ("A", "N+"): "N-", ("A", "N-"): "N+",
    ("N+", "1"): "N+", ("N+", "A"): "N-", ("N+", "N+"): "1", ("N+", "N-"): "A",
    ("N-", "1"): "N-", ("N-", "A"): "N+", ("N-", "N+"): "A", ("N-", "N-"): "1",
}

RepMultiset = Counter  # IrrepLabel -> nonnegative multiplicity


def multiset(*labels: IrrepLabel) -> RepMultiset:
    return Counter(labels)


def total_dim(ms: RepMultiset) -> int:
    return sum(dim(label) * mult for label, mult in ms.items())


class RepTable:
    """All representation data of one group G(m, e, 2), built once."""

    def __init__(self, params: GroupParams):
        self.params = params
        self.classes: tuple[ConjClass, ...] = conjugacy_classes(params)
        self.irreps: tuple[IrrepLabel, ...] = self._list_irreps()
        self._rho_by_orbit = {
            self._orbit_key(r.p, r.q): r
            for r in self.irreps
            if isinstance(r, Rho)
        }
        self._class_values: dict[IrrepLabel, tuple[dict[int, int], ...]] = {}

    # ----- labels -------------------------------------------------------

    def _list_irreps(self) -> tuple[IrrepLabel, ...]:
        p = self.params
        prefixes = ("1", "A", "N+", "N-") if p.e_even else ("1", "A")
        chis = [Chi(pre, c) for pre in prefixes for c in range(p.d)]
        if p.e_even:
            rhos = [
                Rho(a + b, b)
                for a in range(1, p.n)
                for b in range(p.d)
            ]
        else:
            rhos = [
                Rho(a, b)
                for b in range(p.d)
                for a in range(b + 1, p.n_plus)
            ]
        return tuple(sorted(chis + rhos, key=sort_key))

    def _orbit_key(self, p: int, q: int):
        m, d = self.params.m, self.params.d
        s, t = (p - q) % m, q % d
        pair = ((-s) % m, (t + s) % d)
        return tuple(sorted(((s, t), pair)))

    def normalize_rho(self, p: int, q: int) -> tuple[IrrepLabel, ...]:
        """Canonical content of Ind_H^G chi_H(x^p y^q).

        Returns a single canonical Rho when the tau-orbit of the
        H-character has size two, and the two one-dimensional
        constituents when it is fixed (the split case).
        """
        m, d = self.params.m, self.params.d
        key = self._orbit_key(p, q)
        found = self._rho_by_orbit.get(key)
        if found is not None:
            return (found,)
        s, t = (p - q) % m, q % d
        if s == 0:
            return (Chi("1", t), Chi("A", t))
        if self.params.e_even and s == self.params.n:
            return (Chi("N+", t), Chi("N-", t))
        raise AssertionError(f"orbit of ({p},{q}) missing from the label table")

    def chi_monomial(self, chi: Chi) -> tuple[int, int]:
        """Exponents (p, q) of a monomial restricting to chi on H."""
        if chi.prefix in ("1", "A"):
            return (chi.c, chi.c)
        return (self.params.n + chi.c, chi.c)

    # ----- tensor products ----------------------------------------------

    def tensor(self, u: IrrepLabel, w: IrrepLabel) -> RepMultiset:
        """Decomposition of the tensor product into irreducibles."""
        if isinstance(u, Chi) and isinstance(w, Chi):
            pre = _PREFIX_MUL[(u.prefix, w.prefix)]
            if pre in ("N+", "N-") and not self.params.e_even:
                raise AssertionError("N-type character outside even e")
            return Counter({Chi(pre, (u.c + w.c) % self.params.d): 1})
        if isinstance(u, Chi):
            u, w = w, u
        if isinstance(w, Chi):
            mp, mq = self.chi_monomial(w)
            return Counter(self.normalize_rho(u.p + mp, u.q + mq))
        out: RepMultiset = Counter()
        out.update(self.normalize_rho(u.p + w.p, u.q + w.q))
        out.update(self.normalize_rho(u.p + w.q, u.q + w.p))
        return out

    def tensor_with_defining(self, u: IrrepLabel) -> RepMultiset:
        """u tensor rho(x), the defining two-dimensional representation."""
        if isinstance(u, Chi):
            mp, mq = self.chi_monomial(u)
            return Counter(self.normalize_rho(mp + 1, mq))
        out: RepMultiset = Counter()
        out.update(self.normalize_rho(u.p + 1, u.q))
        out.update(self.normalize_rho(u.p, u.q + 1))
        return out

    def twist_by_A(self, u: IrrepLabel) -> IrrepLabel:
        if isinstance(u, Chi):
            return Chi(_PREFIX_MUL[(u.prefix, "A")], u.c)
        return u

    def twist_by_Axy(self, u: IrrepLabel) -> IrrepLabel:
        """u tensor chi(A xy); one label since the twist never splits a rho."""
        if isinstance(u, Chi):
            return Chi(_PREFIX_MUL[(u.prefix, "A")], (u.c + 1) % self.params.d)
        (label,) = self.normalize_rho(u.p + 1, u.q + 1)
        return label

    def regular_rep(self) -> RepMultiset:
        return Counter({w: dim(w) for w in self.irreps})

    # ----- characters ----------------------------------------------------

    def _sparse_value(self, w: IrrepLabel, g: GroupElement) -> dict[int, int]:
        """Character value as {k: coeff} meaning sum coeff * zeta^k."""
        m = self.params.m
        if isinstance(w, Rho):
            if g.swap:
                return {}
            k1 = (w.p * g.a + w.q * g.b) % m
            k2 = (w.p * g.b + w.q * g.a) % m
            out = {k1: 1}
            out[k2] = out.get(k2, 0) + 1
            return out
        k = ((g.a + g.b) * w.c) % m
        if w.prefix == "1":
            return {k: 1}
        if w.prefix == "A":
            return {k: -1} if g.swap else {k: 1}
        n = self.params.n
        if g.swap:
            sign = 1 if w.prefix == "N+" else -1
            return {(k + n * g.b) % m: sign}
        return {(k + n * g.a) % m: 1}

    def character_value(self, w: IrrepLabel, g: GroupElement) -> Cyclo:
        m = self.params.m
        out = Cyclo.zero(m)
        for k, c in self._sparse_value(w, g).items():
            out = out + root_power(m, k) * c
        return out

    def class_values(self, w: IrrepLabel) -> tuple[dict[int, int], ...]:
        cached = self._class_values.get(w)
        if cached is None:
            cached = tuple(
                self._sparse_value(w, cls.representative) for cls in self.classes
            )
            self._class_values[w] = cached
        return cached

    def defining_class_values(self) -> tuple[dict[int, int], ...]:
        """Character of the defining 2-dim representation, per class."""
        m = self.params.m
        out = []
        for cls in self.classes:
            g = cls.representative
            if g.swap:
                out.append({})
            else:
                v = {g.a % m: 1}
                v[g.b % m] = v.get(g.b % m, 0) + 1
                out.append(v)
        return tuple(out)

    def _inner(self, values_u, values_w) -> Fraction:
        """(1/|G|) sum over classes of size * u * conj(w), exactly."""
        m = self.params.m
        acc = [0] * m
        for cls, vu, vw in zip(self.classes, values_u, values_w):
            size = cls.size
            for i, ci in vu.items():
                for j, cj in vw.items():
                    acc[(i - j) % m] += size * ci * cj
        val = Cyclo.from_zeta_ints(m, acc)
        return val.rational_part() / self.params.order

    def inner_product(self, u: IrrepLabel, w: IrrepLabel) -> Fraction:
        """Character inner product <chi_u, chi_w>; exact and rational."""
        return self._inner(self.class_values(u), self.class_values(w))

    def inner_product_with_factor(
        self, u: IrrepLabel, factor: tuple[dict[int, int], ...], w: IrrepLabel
    ) -> int:
        """<chi_u * factor, chi_w> for a pointwise class-function factor."""
        vu = self.class_values(u)
        prod = []
        for a, f in zip(vu, factor):
            v: dict[int, int] = {}
            for i, ci in a.items():
                for j, cj in f.items():
                    k = (i + j) % self.params.m
                    v[k] = v.get(k, 0) + ci * cj
            prod.append(v)
        val = self._inner(prod, self.class_values(w))
        if val.denominator != 1:
            raise AssertionError(f"non-integral multiplicity {val}")
        return int(val)

    def invariant_dim(self, w: IrrepLabel, g: GroupElement) -> int:
        """dim of the g-fixed subspace, by averaging over <g>."""
        m = self.params.m
        acc = [0] * m
        h = g
        order = g.element_order()
        for _ in range(order):
            for k, c in self._sparse_value(w, h).items():
                acc[k] += c
            h = h * g
        val = Cyclo.from_zeta_ints(m, acc).rational_part() / order
        if val.denominator != 1 or val < 0:
            raise AssertionError(f"invariant dimension {val} is not in N")
        return int(val)

    # ----- exports -------------------------------------------------------

    def char_table_rows(self):
        """(label, [Cyclo per class]) rows in canonical order."""
        for w in self.irreps:
            yield w, [
                self.character_value(w, cls.representative) for cls in self.classes
            ]


@lru_cache(maxsize=None)
def get_table(params: GroupParams) -> RepTable:
    return RepTable(params)
