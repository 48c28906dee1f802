"""Canonical labels for irreducible representations of G(m, e, 2).

One-dimensional representations are chi(f) for a semi-invariant
f = A^eps * N^sign * (xy)^c, two-dimensional ones are rho(x^p y^q) with
(p, q) in the canonical range for the parity of e.  Labels are plain
data; all representation arithmetic lives in :mod:`gme2.reps`.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Union


class LabelParseError(ValueError):
    """Raised on a malformed irrep label string."""


# prefixes of the one-dimensional labels, in canonical sort order
CHI_PREFIXES = ("1", "A", "N+", "N-")


@dataclass(frozen=True)
class Chi:
    """chi(prefix * (xy)^c): prefix is '1', 'A', 'N+' or 'N-'."""

    prefix: str
    c: int

    def __post_init__(self):
        if self.prefix not in CHI_PREFIXES:
            raise ValueError(f"bad chi prefix {self.prefix!r}")
        if self.c < 0:
            raise ValueError(f"chi twist must be >= 0, got {self.c}")


@dataclass(frozen=True)
class Rho:
    """rho(x^p y^q), canonical two-dimensional label."""

    p: int
    q: int

    def __post_init__(self):
        if self.q < 0 or self.p <= self.q:
            raise ValueError(f"rho label needs p > q >= 0, got ({self.p},{self.q})")


IrrepLabel = Union[Chi, Rho]


def dim(label: IrrepLabel) -> int:
    return 1 if isinstance(label, Chi) else 2


def sort_key(label: IrrepLabel) -> tuple[int, int, int]:
    if isinstance(label, Chi):
        return (0, CHI_PREFIXES.index(label.prefix), label.c)
    return (1, label.p, label.q)


def _xy_part(c: int) -> str:
    if c == 0:
        return ""
    if c == 1:
        return "xy"
    return f"(xy)^{c}"


def poly_str(label: IrrepLabel) -> str:
    """The polynomial name, e.g. '1', 'A(xy)^2', 'N+xy', 'x^3y^2'."""
    if isinstance(label, Chi):
        head = "" if label.prefix == "1" else label.prefix
        body = head + _xy_part(label.c)
        return body if body else "1"
    x = "x" if label.p == 1 else f"x^{label.p}"
    if label.q == 0:
        return x
    y = "y" if label.q == 1 else f"y^{label.q}"
    return x + y


def label_str(label: IrrepLabel) -> str:
    """Printed form: chi(1), chi(A(xy)^2), rho(x^2 y), ..."""
    if isinstance(label, Chi):
        return f"chi({poly_str(label)})"
    x = "x" if label.p == 1 else f"x^{label.p}"
    if label.q == 0:
        return f"rho({x})"
    y = "y" if label.q == 1 else f"y^{label.q}"
    return f"rho({x} {y})"


_CHI_RE = re.compile(
    r"""^chi\(
        (?P<pre>1|A|N\+|N-)?
        (?P<xy>xy|\(xy\)(\^(?P<c>\d+))?)?
    \)$""",
    re.VERBOSE,
)
_RHO_RE = re.compile(
    r"""^rho\(
        x(\^(?P<p>\d+))?
        (?P<ypart>y(\^(?P<q>\d+))?)?
    \)$""",
    re.VERBOSE,
)


def parse_label(text: str) -> IrrepLabel:
    """Parse a label string; whitespace-insensitive inverse of label_str."""
    s = re.sub(r"\s+", "", text)
    m = _CHI_RE.match(s)
    if m:
        pre = m.group("pre") or "1"
        if m.group("xy") is None:
            c = 0
            if pre == "1" and s != "chi(1)":
                raise LabelParseError(f"cannot parse label {text!r}")
        elif m.group("xy") == "xy" or m.group("c") is None:
            c = 1
        else:
            c = int(m.group("c"))
        return Chi(pre, c)
    m = _RHO_RE.match(s)
    if m:
        p = int(m.group("p") or 1)
        q = (int(m.group("q") or 1)) if m.group("ypart") else 0
        try:
            return Rho(p, q)
        except ValueError as exc:
            raise LabelParseError(str(exc)) from None
    raise LabelParseError(f"cannot parse label {text!r}")
