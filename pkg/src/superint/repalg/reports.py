"""Level/degeneracy tables shared by the algebraic, ladder, combinatorial and numerical routes."""
from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable

from ..exactmath import as_fraction, fraction_to_str

PROVENANCES = ("algebraic", "ladder", "combinatorial", "numerical")


@dataclass(frozen=True)
class SpectrumRow:
    N: int
    energy: Fraction | float
    degeneracy: int
    provenance: str

    def __post_init__(self):
        if self.degeneracy <= 0:
            raise ValueError(f"degeneracy must be positive, got {self.degeneracy} at N={self.N}")
        if self.provenance not in PROVENANCES:
            raise ValueError(f"unknown provenance {self.provenance!r}")


def _energy_str(e) -> str:
    return fraction_to_str(e) if isinstance(e, Fraction) else repr(float(e))


def _energy_parse(s: str):
    return float(s) if any(c in s for c in ".eE") or s in ("nan", "inf", "-inf") else as_fraction(s)


@dataclass
class SpectrumReport:
    """Rows sorted by energy.  ``convention`` names the energy unit, e.g. ``hbar*omega``."""

    rows: list[SpectrumRow]
    convention: str
    label: str = ""
    notes: list[str] = field(default_factory=list)

    def __post_init__(self):
        self.rows = sorted(self.rows, key=lambda r: (float(r.energy), r.N))

    def degeneracies(self) -> dict[int, int]:
        return {r.N: r.degeneracy for r in self.rows}

    def by_N(self, N: int) -> SpectrumRow | None:
        return next((r for r in self.rows if r.N == N), None)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["N", "energy", "degeneracy", "provenance"])
        for r in self.rows:
            w.writerow([r.N, _energy_str(r.energy), r.degeneracy, r.provenance])
        return buf.getvalue()

    def to_json(self) -> dict:
        return {
            "type": "SpectrumReport",
            "label": self.label,
            "convention": self.convention,
            "notes": list(self.notes),
            "rows": [{"N": r.N, "energy": _energy_str(r.energy), "degeneracy": r.degeneracy,
                      "provenance": r.provenance} for r in self.rows],
        }

    @classmethod
    def from_json(cls, data: dict) -> "SpectrumReport":
        rows = [SpectrumRow(int(r["N"]), _energy_parse(str(r["energy"])), int(r["degeneracy"]),
                            r["provenance"]) for r in data["rows"]]
        return cls(rows, data["convention"], data.get("label", ""), list(data.get("notes", [])))


def reindex(report: SpectrumReport, shift: int, energy_of_N: Callable[[int], Fraction],
            convention: str, label: str = "") -> SpectrumReport:
    """Relabel N -> N + shift and recompute energies in another convention."""
    rows = [SpectrumRow(r.N + shift, energy_of_N(r.N + shift), r.degeneracy, r.provenance)
            for r in report.rows]
    return SpectrumReport(rows, convention, label or f"{report.label}(N{shift:+d})", list(report.notes))


@dataclass(frozen=True)
class DiffRow:
    energy: Fraction | float
    N_left: int | None
    N_right: int | None
    deg_left: int
    deg_right: int

    @property
    def delta(self) -> int:
        return self.deg_right - self.deg_left


@dataclass
class DiffReport:
    rows: list[DiffRow]
    convention: str

    def differences(self) -> list[DiffRow]:
        return [r for r in self.rows if r.delta != 0 or r.N_left != r.N_right]

    def deltas(self) -> dict[int, int]:
        return {(r.N_left if r.N_left is not None else r.N_right): r.delta for r in self.rows}

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["N", "energy", "left", "right", "delta"])
        for r in self.rows:
            N = r.N_left if r.N_left is not None else r.N_right
            w.writerow([N, _energy_str(r.energy), r.deg_left, r.deg_right, r.delta])
        return buf.getvalue()

    def to_json(self) -> dict:
        return {
            "convention": self.convention,
            "rows": [{"N_left": r.N_left, "N_right": r.N_right, "energy": _energy_str(r.energy),
                      "left": r.deg_left, "right": r.deg_right, "delta": r.delta} for r in self.rows],
            "differences": len(self.differences()),
        }


def compare_reports(a: SpectrumReport, b: SpectrumReport, tol: float = 1e-6) -> DiffReport:
    """Match levels by energy (exactly for rationals, within ``tol`` otherwise); delta = b - a."""
    if a.convention != b.convention:
        raise ValueError(f"energy conventions differ: {a.convention!r} vs {b.convention!r}")

    def same(e1, e2) -> bool:
        if isinstance(e1, Fraction) and isinstance(e2, Fraction):
            return e1 == e2
        return abs(float(e1) - float(e2)) <= tol

    rows: list[DiffRow] = []
    unmatched = list(b.rows)
    for ra in a.rows:
        match = next((rb for rb in unmatched if same(ra.energy, rb.energy)), None)
        if match is None:
            rows.append(DiffRow(ra.energy, ra.N, None, ra.degeneracy, 0))
        else:
            unmatched.remove(match)
            rows.append(DiffRow(ra.energy, ra.N, match.N, ra.degeneracy, match.degeneracy))
    rows.extend(DiffRow(rb.energy, None, rb.N, 0, rb.degeneracy) for rb in unmatched)
    rows.sort(key=lambda r: float(r.energy))
    return DiffReport(rows, a.convention)


def restrict(report: SpectrumReport, Ns: Iterable[int]) -> SpectrumReport:
    keep = set(Ns)
    return SpectrumReport([r for r in report.rows if r.N in keep], report.convention, report.label,
                          list(report.notes))
