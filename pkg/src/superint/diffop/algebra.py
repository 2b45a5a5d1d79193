"""Commutator coefficients, algebraic-pair classification and PHA checks."""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from math import comb
from typing import Sequence

from ..exactmath import GaussianRational, Polynomial, WeightedFunction, as_fraction, as_weighted
from .operator import DifferentialOperator, commutator, scalar_ratio


@dataclass(frozen=True)
class ComplexCoefficient:
    """re(x) + i*im(x) with exact weighted-function parts."""

    re: WeightedFunction = field(default_factory=WeightedFunction)
    im: WeightedFunction = field(default_factory=WeightedFunction)

    def __add__(self, other: "ComplexCoefficient") -> "ComplexCoefficient":
        return ComplexCoefficient(self.re + other.re, self.im + other.im)

    def __neg__(self) -> "ComplexCoefficient":
        return ComplexCoefficient(-self.re, -self.im)

    def __sub__(self, other: "ComplexCoefficient") -> "ComplexCoefficient":
        return self + (-other)

    def scaled(self, z: GaussianRational) -> "ComplexCoefficient":
        return ComplexCoefficient(
            self.re * z.re - self.im * z.im,
            self.re * z.im + self.im * z.re,
        )

    @classmethod
    def real(cls, f) -> "ComplexCoefficient":
        return cls(as_weighted(f), WeightedFunction(0))

    def is_zero(self) -> bool:
        return self.re.is_zero() and self.im.is_zero()


def _minus_i_hbar(hbar: Fraction) -> GaussianRational:
    return GaussianRational(0, -hbar)


def schrodinger_commutator_coefficients(V, f: Sequence, hbar=1) -> list[ComplexCoefficient]:
    """Coefficients Z_0..Z_{M+1} of [H, K] on powers of D, in closed form.

    H = p^2/2 + V and K = sum_j f_j p^j with p = -i hbar D.  The formulas are
    evaluated directly from derivatives of V and f_j, without building H or K.
    """
    hbar = as_fraction(hbar)
    V = as_weighted(V)
    f = [as_weighted(g) for g in f]
    M = len(f) - 1
    if M < 0:
        raise ValueError("K needs at least one coefficient")
    if f[M].is_zero():
        if all(g.is_zero() for g in f):
            return [ComplexCoefficient() for _ in range(M + 2)]
        raise ValueError("K has lower order than declared")
    mih = _minus_i_hbar(hbar)
    half_h2 = GaussianRational(-hbar * hbar / 2)
    V_derivs = [V]
    for _ in range(M):
        V_derivs.append(V_derivs[-1].derivative())

    def R(g) -> ComplexCoefficient:
        return ComplexCoefficient.real(g)

    Z: list[ComplexCoefficient] = [ComplexCoefficient() for _ in range(M + 2)]
    Z[M + 1] = R(f[M].derivative()).scaled(mih ** (M + 2))

    def kinetic_part(l: int) -> ComplexCoefficient:
        # -(hbar^2/2) (-i hbar)^(l-1) (2 f_{l-1}' - i hbar f_l'')
        inner = R(f[l - 1].derivative() * 2) + R(f[l].derivative(2)).scaled(mih)
        return inner.scaled(half_h2 * mih ** (l - 1))

    if M >= 1:
        Z[M] = kinetic_part(M)
    for l in range(1, M):
        acc = kinetic_part(l)
        for j in range(l + 1, M + 1):
            acc = acc - R(f[j] * V_derivs[j - l] * comb(j, l)).scaled(mih**j)
        Z[l] = acc
    z0 = R(f[0].derivative(2)).scaled(half_h2)
    for j in range(1, M + 1):
        z0 = z0 - R(f[j] * V_derivs[j]).scaled(mih**j)
    Z[0] = z0
    return Z


def momentum_expansion(f: Sequence, hbar=1) -> tuple[DifferentialOperator, DifferentialOperator]:
    """Real and imaginary parts of K = sum_j f_j (-i hbar D)^j as real operators."""
    hbar = as_fraction(hbar)
    mih = _minus_i_hbar(hbar)
    re: dict[int, WeightedFunction] = {}
    im: dict[int, WeightedFunction] = {}
    for j, fj in enumerate(f):
        ph = mih**j
        fj = as_weighted(fj)
        if ph.re:
            re[j] = fj * ph.re
        if ph.im:
            im[j] = fj * ph.im
    return DifferentialOperator(re, hbar), DifferentialOperator(im, hbar)


def schrodinger_operator(V, hbar=1, kinetic=None) -> DifferentialOperator:
    """-(hbar^2/2) D^2 + V, or kinetic*D^2 + V when ``kinetic`` is given."""
    hbar = as_fraction(hbar)
    k = -hbar * hbar / 2 if kinetic is None else as_fraction(kinetic)
    return DifferentialOperator({2: k, 0: V}, hbar)


def generic_commutator_coefficients(V, f: Sequence, hbar=1) -> list[ComplexCoefficient]:
    """Same quantity as :func:`schrodinger_commutator_coefficients`, via Leibniz composition."""
    H = schrodinger_operator(V, hbar)
    k_re, k_im = momentum_expansion(f, hbar)
    c_re, c_im = commutator(H, k_re), commutator(H, k_im)
    top = len(f)
    return [ComplexCoefficient(c_re.coeff(l), c_im.coeff(l)) for l in range(top + 1)]


class PairKind(str, Enum):
    ABELIAN = "Abelian"
    HEISENBERG = "Heisenberg"
    CONFORMAL = "Conformal"
    LADDER = "Ladder"
    NONE = "None"


@dataclass(frozen=True)
class PairType:
    kind: PairKind
    alpha1: Fraction | None = None

    def __post_init__(self):
        if self.kind in (PairKind.HEISENBERG, PairKind.CONFORMAL, PairKind.LADDER):
            if self.alpha1 is None or self.alpha1 == 0:
                raise ValueError(f"{self.kind.value} pair needs a nonzero alpha1")


def _check_schrodinger(H: DifferentialOperator) -> None:
    if set(H.terms) - {0, 2} or 2 not in H.terms:
        raise ValueError("H is not of Schrodinger form k*D^2 + V")
    lead = H.terms[2]
    if lead.weight != 0 or not lead.base.is_constant() or lead.base.constant_value() >= 0:
        raise ValueError("H is not of Schrodinger form: D^2 coefficient must be a negative constant")


def classify_pair(H: DifferentialOperator, K: DifferentialOperator) -> PairType:
    """Type of the commutator [H, K]: 0, alpha, alpha*H, -alpha*K, or none of these."""
    _check_schrodinger(H)
    C = commutator(H, K)
    if C.is_zero():
        return PairType(PairKind.ABELIAN)
    if C.order() == 0:
        c = C.coeff(0)
        if c.weight == 0 and c.base.is_constant():
            return PairType(PairKind.HEISENBERG, c.base.constant_value())
    q = scalar_ratio(C, H)
    if q:
        return PairType(PairKind.CONFORMAL, q)
    q = scalar_ratio(C, K)
    if q:
        return PairType(PairKind.LADDER, -q)
    return PairType(PairKind.NONE)


def reduce_in_powers(op: DifferentialOperator, H: DifferentialOperator) -> Polynomial | None:
    """Write ``op`` as sum_j a_j H^j with rational a_j, or return None.

    Greedy top-order elimination: the D^(2j) coefficient of op fixes a_j.
    """
    _check_schrodinger(H)
    h2 = H.terms[2].base.constant_value()
    coeffs: dict[int, Fraction] = {}
    powers = {0: DifferentialOperator.identity(H.hbar)}
    rest = op
    while not rest.is_zero():
        l = rest.order()
        if l % 2:
            return None
        lead = rest.leading()
        if lead.weight != 0 or not lead.base.is_constant():
            return None
        j = l // 2
        a = lead.base.constant_value() / h2**j
        if j not in powers:
            for k in range(max(powers) + 1, j + 1):
                powers[k] = powers[k - 1] @ H
        coeffs[j] = a
        rest = rest - powers[j] * a
    if not coeffs:
        return Polynomial()
    return Polynomial([coeffs.get(j, 0) for j in range(max(coeffs) + 1)])


@dataclass
class PHAReport:
    spacing: Fraction
    raising_ok: bool
    lowering_ok: bool
    polynomial_ok: bool
    commutator_polynomial: Polynomial | None

    @property
    def ok(self) -> bool:
        return self.raising_ok and self.lowering_ok and self.polynomial_ok

    @property
    def degree(self) -> int | None:
        p = self.commutator_polynomial
        return None if p is None else p.degree

    def to_json(self) -> dict:
        p = self.commutator_polynomial
        return {
            "spacing": str(self.spacing),
            "raising": self.raising_ok,
            "lowering": self.lowering_ok,
            "polynomial_in_H": self.polynomial_ok,
            "commutator_polynomial": None if p is None else p.to_json(),
            "degree": self.degree,
            "ok": self.ok,
        }


def verify_pha(H: DifferentialOperator, c: DifferentialOperator, c_dag: DifferentialOperator,
               mk: int, spacing=None) -> PHAReport:
    """Check [H,c+] = s c+, [H,c] = -s c and [c,c+] = P(H) with s = 2 mk + 2 by default."""
    s = Fraction(2 * mk + 2) if spacing is None else as_fraction(spacing)
    raising = commutator(H, c_dag) == c_dag * s
    lowering = commutator(H, c) == c * (-s)
    poly = reduce_in_powers(commutator(c, c_dag), H)
    return PHAReport(s, raising, lowering, poly is not None, poly)
