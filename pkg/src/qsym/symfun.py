"""Schur-side evaluators on finite alphabets.

An Alphabet is a multiset of monomials in a fixed ambient ring; the three
specialization maps of interest are just alphabet choices:

  type_a(m)       x1, ..., xm
  symplectic(k)   x1, x1^-1, ..., xk, xk^-1
  mixed(k, m)     x1, x1^-1, ..., xk, xk^-1, x_{k+1}, ..., x_{k+m}

Complete homogeneous polynomials h_r come from the geometric series expansion
of prod 1/(1 - x z); everything else is a determinant in the h_r (or e_r).
The symplectic determinant's global 1/2 is realized structurally: its first
column is twice h, so that column is written halved and no division ever
happens.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import PreconditionError
from .linalg import RingMatrix, determinant
from .ring import LaurentPoly, Monomial, series_from_linear_factors
from .shapes import Partition
from .tableaux import VariableSpec, enum_spt, spt_weight


def _unit_mono(nvars: int, i: int, power: int = 1) -> Monomial:
    exps = [0] * nvars
    exps[i] = power
    return tuple(exps)


@dataclass(frozen=True)
class Alphabet:
    """Multiset of monomials sharing one ambient variable count."""

    nvars: int
    monomials: tuple[Monomial, ...]

    def __post_init__(self):
        for m in self.monomials:
            if len(m) != self.nvars:
                raise ValueError(f"monomial {m} does not fit nvars={self.nvars}")

    @classmethod
    def type_a(cls, m: int, nvars: int | None = None, offset: int = 0) -> "Alphabet":
        nv = m if nvars is None else nvars
        return cls(nv, tuple(_unit_mono(nv, offset + i) for i in range(m)))

    @classmethod
    def symplectic(cls, k: int, nvars: int | None = None, offset: int = 0) -> "Alphabet":
        nv = k if nvars is None else nvars
        monos = []
        for i in range(k):
            monos.append(_unit_mono(nv, offset + i))
            monos.append(_unit_mono(nv, offset + i, -1))
        return cls(nv, tuple(monos))

    @classmethod
    def mixed(cls, spec: VariableSpec) -> "Alphabet":
        n = spec.n
        monos = list(cls.symplectic(spec.k, nvars=n).monomials)
        monos += [_unit_mono(n, j) for j in range(spec.k, n)]
        return cls(n, tuple(monos))


_H_CACHE: dict[Alphabet, list[LaurentPoly]] = {}


def complete_h(r: int, a: Alphabet) -> LaurentPoly:
    """h_r on the alphabet; zero for r < 0, one for r = 0."""
    if r < 0:
        return LaurentPoly.zero(a.nvars)
    cached = _H_CACHE.get(a)
    if cached is None or len(cached) <= r:
        series = series_from_linear_factors([], list(a.monomials), max(r, 8), a.nvars)
        cached = list(series.coeffs)
        _H_CACHE[a] = cached
    return cached[r]


def elementary_e(r: int, a: Alphabet) -> LaurentPoly:
    """e_r on the alphabet, the coefficient of z^r in the finite product prod(1 + x z)."""
    if r < 0 or r > len(a.monomials):
        return LaurentPoly.zero(a.nvars)
    return series_from_linear_factors(list(a.monomials), [], r, a.nvars).coefficient(r)


def schur_skew(lam: Partition, mu: Partition, a: Alphabet) -> LaurentPoly:
    """Skew Schur polynomial via the h-determinant; zero when mu is not inside lam."""
    if not lam.contains(mu):
        return LaurentPoly.zero(a.nvars)
    size = lam.length
    rows = [
        [complete_h(lam.part(i) - mu.part(j) - i + j, a) for j in range(1, size + 1)]
        for i in range(1, size + 1)
    ]
    return determinant(RingMatrix.from_rows(rows), a.nvars)


def schur_skew_e(lam: Partition, mu: Partition, a: Alphabet) -> LaurentPoly:
    """Same polynomial via the dual e-determinant on the transposed shapes."""
    if not lam.contains(mu):
        return LaurentPoly.zero(a.nvars)
    lt, mt = lam.transpose(), mu.transpose()
    size = lt.length
    rows = [
        [elementary_e(lt.part(i) - mt.part(j) - i + j, a) for j in range(1, size + 1)]
        for i in range(1, size + 1)
    ]
    return determinant(RingMatrix.from_rows(rows), a.nvars)


def symp_schur_on(lam: Partition, a: Alphabet) -> LaurentPoly:
    """Symplectic Schur determinant on an arbitrary alphabet.

    Entry (i, j) is h_{lam_i - i + j} + h_{lam_i - i - j + 2} for j >= 2; the
    j = 1 entry of that matrix is 2 h_{lam_i - i + 1}, so the first column is
    stored halved and the result stays in the integer ring.
    """
    size = lam.length
    rows = []
    for i in range(1, size + 1):
        d = lam.part(i) - i
        row = [complete_h(d + 1, a)]
        row += [
            complete_h(d + j, a) + complete_h(d - j + 2, a) for j in range(2, size + 1)
        ]
        rows.append(row)
    return determinant(RingMatrix.from_rows(rows), a.nvars)


def symp_schur(lam: Partition, k: int) -> LaurentPoly:
    """Symplectic Schur polynomial on k variable pairs; needs at most k rows."""
    if lam.length > k:
        raise PreconditionError(f"{lam.length} rows on {k} symplectic pairs")
    return symp_schur_on(lam, Alphabet.symplectic(k))


def inter_schur(lam: Partition, spec: VariableSpec, method: str = "definition") -> LaurentPoly:
    """Intermediate symplectic Schur polynomial.

    method="definition" sums symplectic-Schur times skew-Schur over inner
    shapes; method="tableau" sums weights over the unprimed tableau family.
    Inner shapes with more than k rows carry no symplectic character and are
    skipped.
    """
    n = spec.n
    if lam.length > n:
        raise PreconditionError(f"{lam.length} rows on {n} variables")
    if method == "tableau":
        acc: dict[Monomial, int] = {}
        for t in enum_spt(spec, lam):
            w = spt_weight(t, spec)
            acc[w] = acc.get(w, 0) + 1
        return LaurentPoly(n, acc)
    if method != "definition":
        raise ValueError(f"unknown method {method!r}")
    symp_alpha = Alphabet.symplectic(spec.k, nvars=n)
    a_alpha = Alphabet.type_a(spec.m, nvars=n, offset=spec.k)
    total = LaurentPoly.zero(n)
    for mu in lam.subpartitions():
        if mu.length > spec.k:
            continue
        c_part = symp_schur_on(mu, symp_alpha)
        if c_part.is_zero():
            continue
        a_part = schur_skew(lam, mu, a_alpha)
        if a_part.is_zero():
            continue
        total = total + c_part * a_part
    return total


def check_union_identity(lam: Partition, spec: VariableSpec) -> bool:
    """Compare the definition sum against the symplectic determinant on the
    combined alphabet x1, x1^-1, ..., xk, xk^-1, x_{k+1}, ..., x_n.

    Valid for shapes with at most k + 1 rows.
    """
    if lam.length > spec.k + 1:
        raise PreconditionError(f"{lam.length} rows exceeds k + 1 = {spec.k + 1}")
    lhs = inter_schur(lam, spec, "definition")
    rhs = symp_schur_on(lam, Alphabet.mixed(spec))
    return lhs == rhs
