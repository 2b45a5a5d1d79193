"""Deformed-oscillator structure functions and finite unitary representations."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from ..exactmath import as_fraction, fraction_to_str


@dataclass(frozen=True)
class LinearForm:
    """a*x + b*p + c in the box label x and the representation parameter p."""

    a: Fraction
    b: Fraction
    c: Fraction

    def __call__(self, x, p) -> Fraction:
        return self.a * x + self.b * p + self.c

    def restrict(self, slope: Fraction, intercept: Fraction) -> "LinearForm":
        """The form after substituting x = slope*p + intercept."""
        return LinearForm(Fraction(0), self.a * slope + self.b, self.a * intercept + self.c)

    def identically_zero(self) -> bool:
        return self.a == 0 and self.b == 0 and self.c == 0

    def format(self) -> str:
        parts = []
        for coef, name in ((self.a, "x"), (self.b, "p")):
            if coef:
                parts.append(name if coef == 1 else ("-" + name if coef == -1 else f"{coef}*{name}"))
        if self.c or not parts:
            parts.append(str(self.c))
        return " + ".join(parts).replace("+ -", "- ")


def lf(a, b, c) -> LinearForm:
    return LinearForm(as_fraction(a), as_fraction(b), as_fraction(c))


@dataclass(frozen=True)
class StructureFunctionFamily:
    """Phi(x; p) = scale * prod(factors), E(p) = hbar*omega*(p + energy_offset).

    ``scale`` is the coefficient in units of hbar^4 omega^2; ``quoted_p`` lists the
    representation labels the family is quoted with (None meaning every p).
    """

    name: str
    factors: tuple[LinearForm, ...]
    energy_offset: Fraction
    scale: Fraction = Fraction(4)
    quoted_p: tuple[int, ...] | None = None

    def phi(self, x, p) -> Fraction:
        out = self.scale
        for f in self.factors:
            out *= f(as_fraction(x), as_fraction(p))
        return out

    def energy(self, p, hbar=1, omega=1) -> Fraction:
        return as_fraction(hbar) * as_fraction(omega) * (as_fraction(p) + self.energy_offset)

    def dimension(self, p: int) -> int:
        return p + 1

    def _vanishes_on(self, slope: Fraction, intercept: Fraction) -> bool:
        # x = slope*p + intercept; the product vanishes for all p iff one factor does
        return any(f.restrict(slope, intercept).identically_zero() for f in self.factors)

    def boundary_zeros(self) -> tuple[bool, bool]:
        """(Phi(0; p) == 0, Phi(p+1; p) == 0) as identities in p."""
        return self._vanishes_on(Fraction(0), Fraction(0)), self._vanishes_on(Fraction(1), Fraction(1))

    def format(self) -> str:
        return f"{self.scale}*hbar^4*omega^2*" + "*".join(f"({f.format()})" for f in self.factors)


def q18_families() -> dict[str, StructureFunctionFamily]:
    """The three families for the rational P4 instance with (alpha, beta) = (5, -8)."""
    box = (lf(1, 0, 0), lf(-1, 1, 1))  # x (p + 1 - x)
    return {
        "a": StructureFunctionFamily("a", box + (lf(1, 0, 3), lf(1, 0, 2)), Fraction(8, 3)),
        "b": StructureFunctionFamily("b", box + (lf(1, 0, -3), lf(1, 0, -1)), Fraction(-1, 3), quoted_p=(0,)),
        "c": StructureFunctionFamily("c", box + (lf(1, 0, 1), lf(1, 0, -2)), Fraction(2, 3), quoted_p=(0, 1)),
    }


@dataclass(frozen=True)
class UnirrepRow:
    family: str
    p: int
    energy: Fraction  # in units of hbar*omega
    dimension: int
    positive: bool  # Phi(x) > 0 for x = 1..p
    quoted: bool
    admissible: bool
    min_phi: Fraction | None

    def to_json(self) -> dict:
        return {
            "family": self.family,
            "p": self.p,
            "energy": fraction_to_str(self.energy),
            "dimension": self.dimension,
            "positive": self.positive,
            "quoted": self.quoted,
            "admissible": self.admissible,
            "min_phi": None if self.min_phi is None else fraction_to_str(self.min_phi),
        }


def enumerate_unirreps(fam: StructureFunctionFamily, p_max: int, positivity: str = "strict"
                       ) -> list[UnirrepRow]:
    """Check lowest/highest-weight zeros and interior positivity for p = 0..p_max.

    ``positivity='strict'`` admits p iff Phi(x) > 0 on x = 1..p; ``'report_only'``
    admits the quoted labels and still reports the positivity test.
    """
    if positivity not in ("strict", "report_only"):
        raise ValueError("positivity must be 'strict' or 'report_only'")
    if p_max < 0:
        raise ValueError("p_max must be >= 0")
    zero_lo, zero_hi = fam.boundary_zeros()
    rows = []
    for p in range(p_max + 1):
        values = [fam.phi(x, p) for x in range(1, p + 1)]
        positive = zero_lo and zero_hi and all(v > 0 for v in values)
        listed = fam.quoted_p is None or p in fam.quoted_p
        admissible = positive if positivity == "strict" else listed
        rows.append(UnirrepRow(fam.name, p, fam.energy(p), fam.dimension(p), positive, listed,
                               admissible, min(values) if values else None))
    return rows


def admissible_labels(fam: StructureFunctionFamily, p_max: int, positivity: str = "strict") -> list[int]:
    return [r.p for r in enumerate_unirreps(fam, p_max, positivity) if r.admissible]


def families_from_spec(entries: Sequence[dict]) -> list[StructureFunctionFamily]:
    """Build families from JSON-like dicts: {name, roots: [r1, r2], energy_offset, quoted_p}."""
    out = []
    box = (lf(1, 0, 0), lf(-1, 1, 1))
    for e in entries:
        extra = tuple(lf(1, 0, -as_fraction(r)) for r in e["roots"])
        quoted = e.get("quoted_p")
        out.append(StructureFunctionFamily(e["name"], box + extra, as_fraction(e["energy_offset"]),
                                           as_fraction(e.get("scale", 4)),
                                           None if quoted is None else tuple(quoted)))
    return out
