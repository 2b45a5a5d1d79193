"""Spectra and degeneracies of the 2D models: algebraic, ladder, combinatorial and numerical routes."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from ..exactmath import Polynomial, fraction_to_str
from ..potentials import ExtensionSpec, is_regular
from .reports import SpectrumReport, SpectrumRow, reindex
from .unirreps import enumerate_unirreps, q18_families

Q18_UNIT = "hbar*omega"
KSTEP_UNIT = "FullD2"
Q18_OFFSET = Fraction(-1, 3)  # E_N = hbar*omega*(N - 1/3)


def _spec(spec) -> ExtensionSpec:
    return spec if isinstance(spec, ExtensionSpec) else ExtensionSpec(tuple(spec))


def q18_level(N: int) -> Fraction:
    return N + Q18_OFFSET


def _level_index(energy: Fraction) -> int:
    n = energy - Q18_OFFSET
    if n.denominator != 1:
        raise ValueError(f"energy {energy} is not on the ladder N - 1/3")
    return int(n)


def algebraic_spectrum(n_max: int = 20, reading: str = "quoted", p_max: int | None = None) -> SpectrumReport:
    """Levels and degeneracies from the three structure-function families.

    reading='quoted': the singlet at N=0 from family (b), the doublet of family (c)
    spread over N=1 and N=2, and p+1 states at N=p+3 from family (a).
    reading='dimension': every strictly admissible unirrep puts all of its p+1
    states at its own energy.
    """
    fams = q18_families()
    p_max = n_max if p_max is None else p_max
    counts: dict[int, int] = {}

    def add(N: int, d: int):
        if 0 <= N <= n_max and d > 0:
            counts[N] = counts.get(N, 0) + d

    notes: list[str] = []
    if reading == "quoted":
        for name in ("b", "c"):
            for row in enumerate_unirreps(fams[name], p_max, "report_only"):
                if row.admissible:
                    add(_level_index(row.energy), 1)
                    if not row.positive:
                        notes.append(f"family {name} p={row.p}: structure function not positive "
                                     f"(min {fraction_to_str(row.min_phi)})")
        for row in enumerate_unirreps(fams["a"], p_max, "strict"):
            if row.admissible:
                add(_level_index(row.energy), row.dimension)
    elif reading == "dimension":
        for fam in fams.values():
            for row in enumerate_unirreps(fam, p_max, "strict"):
                if row.admissible:
                    add(_level_index(row.energy), row.dimension)
        missing = [N for N in range(n_max + 1) if N not in counts]
        if missing:
            notes.append(f"no admissible unirrep at N = {missing}")
    else:
        raise ValueError("reading must be 'quoted' or 'dimension'")
    rows = [SpectrumRow(N, q18_level(N), d, "algebraic") for N, d in sorted(counts.items())]
    return SpectrumReport(rows, Q18_UNIT, f"algebraic[{reading}]", notes)


def ladder_degeneracy(N: int, mk: int = 2) -> int:
    """chi-type states give one level per N >= 0; psi_{n,k} pairs start at N = mk + 1."""
    if N < 0:
        return 0
    return 1 + max(0, N - mk)


def ladder_spectrum(mk: int = 2, n_max: int = 20) -> SpectrumReport:
    """Count the states psi_n(x) H_k(y) and chi(x) H_m(y) level by level."""
    rows = []
    for N in range(n_max + 1):
        chi_states = 1  # chi(x) H_N(y)
        psi_states = sum(1 for n in range(N + 1) for k in range(N + 1) if n + k == N - mk - 1)
        rows.append(SpectrumRow(N, q18_level(N), chi_states + psi_states, "ladder"))
    return SpectrumReport(rows, Q18_UNIT, f"ladder[mk={mk}]")


def q_ko(spec) -> Polynomial:
    """prod_i (H + 2 m_i + 1) * prod_j (H - 2j - 1) over the state-deleting indices j."""
    spec = _spec(spec)
    out = Polynomial.constant(1)
    for m in spec.ms:
        out = out * Polynomial([2 * m + 1, 1])
    for j in spec.deleted_indices():
        out = out * Polynomial([-2 * j - 1, 1])
    return out


def _nu_x_values(spec: ExtensionSpec, upto: int) -> list[int]:
    return sorted({-m - 1 for m in spec.ms} | set(range(upto + 1)))


def degeneracy_bruteforce(spec, N_min: int | None = None, N_max: int = 40) -> SpectrumReport:
    """Enumerate (nu_x, nu_y) pairs and bin them by N = nu_x + nu_y + 1 (E = 2N)."""
    spec = _spec(spec)
    if not is_regular(spec):
        raise ValueError(f"singular extension {spec.ms}")
    lo = -spec.mk if N_min is None else N_min
    counts: dict[int, int] = {}
    for nx in _nu_x_values(spec, N_max):
        for ny in range(N_max - nx):
            N = nx + ny + 1
            if lo <= N <= N_max:
                counts[N] = counts.get(N, 0) + 1
    rows = [SpectrumRow(N, Fraction(2 * N), d, "combinatorial") for N, d in sorted(counts.items())]
    return SpectrumReport(rows, KSTEP_UNIT, f"bruteforce{list(spec.ms)}")


def degeneracy_formula(spec, N: int) -> int:
    spec = _spec(spec)
    if not is_regular(spec):
        raise ValueError(f"singular extension {spec.ms}")
    k, ms = spec.k, spec.ms
    if k == 0:
        if N < 1:
            raise ValueError(f"N = {N} is below ground level 1")
        return N
    if N < -ms[-1]:
        raise ValueError(f"N = {N} is below ground level {-ms[-1]}")
    if N >= 1:
        return N + k
    if N >= -ms[0]:
        return k
    for j in range(2, k + 1):
        if -ms[j - 1] <= N <= -ms[j - 2] - 1:
            return k - j + 1
    raise AssertionError("unreachable")


def formula_report(spec, N_min: int | None = None, N_max: int = 40) -> SpectrumReport:
    spec = _spec(spec)
    lo = -spec.mk if N_min is None else N_min
    rows = [SpectrumRow(N, Fraction(2 * N), degeneracy_formula(spec, N), "combinatorial")
            for N in range(lo, N_max + 1)]
    return SpectrumReport(rows, KSTEP_UNIT, f"formula{list(spec.ms)}")


@dataclass(frozen=True)
class Multiplet:
    lam: int
    mu: int
    s: Fraction
    copies: int

    @property
    def states(self) -> int:
        return self.copies * int(2 * self.s + 1)


@dataclass(frozen=True)
class MultipletRow:
    N: int
    lam: int
    mu: int
    multiplets: tuple[Multiplet, ...]

    @property
    def count(self) -> int:
        return sum(m.copies for m in self.multiplets)

    @property
    def degeneracy(self) -> int:
        return sum(m.states for m in self.multiplets)

    def to_json(self) -> dict:
        return {
            "N": self.N, "lambda": self.lam, "mu": self.mu, "multiplets": self.count,
            "degeneracy": self.degeneracy,
            "content": [{"s": fraction_to_str(m.s), "copies": m.copies} for m in self.multiplets],
        }


def encode_level(m1: int, N: int) -> tuple[int, int]:
    """N = lambda (m1 + 1) + mu, with lambda = -1 for the levels below zero."""
    if N < -m1:
        raise ValueError(f"N = {N} is below ground level {-m1}")
    if N < 0:
        return -1, N + m1 + 1
    return divmod(N, m1 + 1)


def multiplets_at(m1: int, N: int) -> MultipletRow:
    lam, mu = encode_level(m1, N)
    half = Fraction(1, 2)
    if lam == -1 or (lam == 0 and mu == 0):
        content = [(Fraction(0), 1)]
    elif lam == 0:
        content = [(half, 1), (Fraction(0), mu - 1)]
    elif mu == 0:
        content = [(lam * half, 1), ((lam - 1) * half, m1)]
    else:
        content = [((lam + 1) * half, 1), (lam * half, mu - 1), ((lam - 1) * half, m1 - mu + 1)]
    return MultipletRow(N, lam, mu, tuple(Multiplet(lam, mu, s, c) for s, c in content if c > 0))


def multiplet_table(m1: int, N_min: int | None = None, N_max: int = 20) -> list[MultipletRow]:
    if m1 < 0 or m1 % 2:
        raise ValueError(f"one-step extension needs an even m1, got {m1}")
    lo = -m1 if N_min is None else N_min
    return [multiplets_at(m1, N) for N in range(lo, N_max + 1)]


def kstep_to_q18(report: SpectrumReport, shift: int = 2) -> SpectrumReport:
    """Relabel a k-step (m1 = 2) report on the Q18 ladder N -> N + shift, E_N = N - 1/3."""
    return reindex(report, shift, q18_level, Q18_UNIT)


def numerical_report(x_levels: Sequence[float], y_levels: Sequence[float], n_levels: int,
                     e0: float, spacing: float, tol: float = 1e-6, label: str = "numerical",
                     convention: str = Q18_UNIT) -> SpectrumReport:
    """Bin sums of 1D eigenvalues into levels N with E ~ e0 + N*spacing.

    Only sums below the first level that the truncated 1D lists could miss are
    counted, and at most ``n_levels`` levels are returned.
    """
    sums = sorted(ex + ey for ex in x_levels for ey in y_levels)
    ceiling = min(max(x_levels) + min(y_levels), min(x_levels) + max(y_levels))
    counts: dict[int, int] = {}
    for e in sums:
        if e > ceiling + tol:
            continue
        n = (e - e0) / spacing
        N = round(n)
        if abs(n - N) * spacing > tol:
            raise ValueError(f"numerical level {e} is off the grid e0 + N*{spacing}")
        counts[N] = counts.get(N, 0) + 1
    rows = [SpectrumRow(N, e0 + N * spacing, d, "numerical") for N, d in sorted(counts.items())][:n_levels]
    return SpectrumReport(rows, convention, label)
