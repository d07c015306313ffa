"""Q-polynomial evaluators: one-row series, two-row recursions, skew
Pfaffians for the plain and symplectic families, and the intermediate family
by four independent routes (inner-sum definition, tableau sum, branching
chains, Pfaffian).

All evaluators are pure; a QContext carries the memo tables that the
Pfaffian expansions hammer (one-row values, two-row values, sub-sums).  The
module-level default context is shared; callers that want isolation pass
their own.

Conventions used throughout: a negative subscript means the zero polynomial;
for matrix entries, the two-row value at (r, r) is zero, at (r, 0) it is the
one-row value, and swapping the rows negates it.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .errors import PreconditionError
from .linalg import RingMatrix, determinant, pfaffian
from .ring import LaurentPoly
from .shapes import EMPTY, StrictPartition, enum_strict_between, pad_for_pfaffian
from .symfun import Alphabet
from .tableaux import VariableSpec, enum_qt, qt_weight
from .ring import series_from_linear_factors


@dataclass
class QContext:
    """Shared memo tables; cached values always equal fresh recomputation.

    Concurrent tasks should each own a context; the cached polynomials
    themselves are immutable and safe to share."""

    cache: dict = field(default_factory=dict)
    row_series: dict[VariableSpec, list[LaurentPoly]] = field(default_factory=dict)


_DEFAULT_CONTEXT = QContext()


def default_context() -> QContext:
    return _DEFAULT_CONTEXT


def _ctx(ctx: QContext | None) -> QContext:
    return ctx if ctx is not None else _DEFAULT_CONTEXT


def q_row(l: int, spec: VariableSpec, ctx: QContext | None = None) -> LaurentPoly:
    """One-row value: coefficient of z^l in the product of (1+xz)/(1-xz) over
    the alphabet x1, x1^-1, ..., xk, xk^-1, x_{k+1}, ..., x_n."""
    n = spec.n
    if l < 0:
        return LaurentPoly.zero(n)
    ctx = _ctx(ctx)
    series = ctx.row_series.get(spec)
    if series is None or len(series) <= l:
        monos = list(Alphabet.mixed(spec).monomials)
        expanded = series_from_linear_factors(monos, monos, max(l, 8), n)
        series = list(expanded.coeffs)
        ctx.row_series[spec] = series
    return series[l]


def qA_two_row(r: int, s: int, n: int, ctx: QContext | None = None) -> LaurentPoly:
    """Two-row value, plain family: q_r q_s + 2 sum_t (-1)^t q_{r+t} q_{s-t}."""
    if not r > s > 0:
        raise PreconditionError(f"two-row recursion needs r > s > 0, got ({r}, {s})")
    ctx = _ctx(ctx)
    key = ("A2", r, s, n)
    got = ctx.cache.get(key)
    if got is not None:
        return got
    spec = VariableSpec(0, n)

    def q(i: int) -> LaurentPoly:
        return q_row(i, spec, ctx)

    total = q(r) * q(s)
    for t in range(1, s + 1):
        term = q(r + t) * q(s - t)
        total = total + term.scale(2 if t % 2 == 0 else -2)
    ctx.cache[key] = total
    return total


def qC_two_row(r: int, s: int, k: int, ctx: QContext | None = None) -> LaurentPoly:
    """Two-row value, symplectic family; the summand gains the echo terms
    q_{r+t} + 2 q_{r+t-2} + ... + 2 q_{r-t+2} + q_{r-t}."""
    if not r > s > 0:
        raise PreconditionError(f"two-row recursion needs r > s > 0, got ({r}, {s})")
    ctx = _ctx(ctx)
    key = ("C2", r, s, k)
    got = ctx.cache.get(key)
    if got is not None:
        return got
    spec = VariableSpec(k, 0)

    def q(i: int) -> LaurentPoly:
        return q_row(i, spec, ctx)

    total = q(r) * q(s)
    for t in range(1, s + 1):
        inner = q(r + t) + q(r - t)
        for i in range(1, t):
            inner = inner + q(r + t - 2 * i).scale(2)
        term = inner * q(s - t)
        total = total + term.scale(2 if t % 2 == 0 else -2)
    ctx.cache[key] = total
    return total


def _pair_value(family: str, r: int, s: int, spec: VariableSpec, ctx: QContext) -> LaurentPoly:
    """Two-row matrix entry with the boundary conventions."""
    if r == s:
        return LaurentPoly.zero(spec.n)
    if r < s:
        return -_pair_value(family, s, r, spec, ctx)
    if s == 0:
        return q_row(r, spec, ctx)
    if family == "A":
        return qA_two_row(r, s, spec.n, ctx)
    if family == "C":
        return qC_two_row(r, s, spec.k, ctx)
    if family == "I":
        # pure specs have closed two-row recursions; mixed ones fall back to
        # the inner-sum definition
        if spec.m == 0:
            return qC_two_row(r, s, spec.k, ctx)
        if spec.k == 0:
            return qA_two_row(r, s, spec.m, ctx)
        return qI_def(StrictPartition((r, s)), EMPTY, spec, ctx)
    raise ValueError(f"unknown family {family!r}")


def build_jp_matrix(
    family: str,
    lam: StrictPartition,
    mu: StrictPartition,
    spec: VariableSpec,
    ctx: QContext | None = None,
) -> RingMatrix:
    """Padded block matrix [[M, N], [-N^T, 0]] with two-row M and one-row N
    entries.  N pairs row i with the (m+1-j)-th inner part, i.e. the inner
    parts are consumed in reverse order across the columns."""
    ctx = _ctx(ctx)
    lam_parts, mu_parts = pad_for_pfaffian(lam, mu)
    l, m = len(lam_parts), len(mu_parts)
    size = l + m
    n = spec.n
    zero = LaurentPoly.zero(n)
    rows = [[zero] * size for _ in range(size)]
    for i in range(l):
        for j in range(i + 1, l):
            v = _pair_value(family, lam_parts[i], lam_parts[j], spec, ctx)
            rows[i][j] = v
            rows[j][i] = -v
    for i in range(l):
        for j in range(m):
            v = q_row(lam_parts[i] - mu_parts[m - 1 - j], spec, ctx)
            rows[i][l + j] = v
            rows[l + j][i] = -v
    return RingMatrix.from_rows(rows)


def q_skew_jp(
    family: str,
    lam: StrictPartition,
    mu: StrictPartition,
    spec: VariableSpec,
    ctx: QContext | None = None,
) -> LaurentPoly:
    """Skew Q-polynomial by the Pfaffian formula, families "A" and "C".

    Family A needs a spec with k = 0, family C one with m = 0; the result
    vanishes when mu is not contained in lam.
    """
    if family == "A" and spec.k != 0:
        raise PreconditionError("family A runs on a (0, n) spec")
    if family == "C" and spec.m != 0:
        raise PreconditionError("family C runs on a (k, 0) spec")
    if family not in ("A", "C"):
        raise ValueError(f"unknown family {family!r}")
    ctx = _ctx(ctx)
    key = ("jp", family, lam.parts, mu.parts, spec)
    got = ctx.cache.get(key)
    if got is not None:
        return got
    out = pfaffian(build_jp_matrix(family, lam, mu, spec, ctx), spec.n)
    ctx.cache[key] = out
    return out


def qI_def(
    lam: StrictPartition,
    mu: StrictPartition,
    spec: VariableSpec,
    ctx: QContext | None = None,
) -> LaurentPoly:
    """Intermediate value by the defining inner sum: over strict shapes nu
    between mu and lam, a symplectic skew factor for nu over mu on x_1..x_k
    times a plain skew factor for lam over nu on x_{k+1}..x_n.

    The symplectic factor sits on the inner skew: in the tableau picture the
    symplectic letters are the small ones and occupy the region next to mu.
    Putting it on the outer skew instead agrees on many small shapes but
    diverges from the tableau and branching routes (first at a two-row shape
    with two symplectic pairs and one plain variable)."""
    n = spec.n
    if lam.length > n:
        raise PreconditionError(f"{lam.length} rows on {n} variables")
    ctx = _ctx(ctx)
    key = ("Idef", lam.parts, mu.parts, spec)
    got = ctx.cache.get(key)
    if got is not None:
        return got
    c_spec = VariableSpec(spec.k, 0)
    a_spec = VariableSpec(0, spec.m)
    total = LaurentPoly.zero(n)
    for nu in enum_strict_between(mu, lam):
        c_part = q_skew_jp("C", nu, mu, c_spec, ctx)
        if c_part.is_zero():
            continue
        a_part = q_skew_jp("A", lam, nu, a_spec, ctx)
        if a_part.is_zero():
            continue
        total = total + c_part.embed(n, 0) * a_part.embed(n, spec.k)
    ctx.cache[key] = total
    return total


def qI_tableau(
    lam: StrictPartition,
    mu: StrictPartition,
    spec: VariableSpec,
    ctx: QContext | None = None,
) -> LaurentPoly:
    """Intermediate value as the weight sum over primed shifted tableaux."""
    n = spec.n
    if lam.length > n:
        raise PreconditionError(f"{lam.length} rows on {n} variables")
    ctx = _ctx(ctx)
    key = ("Itab", lam.parts, mu.parts, spec)
    got = ctx.cache.get(key)
    if got is not None:
        return got
    acc: dict[tuple[int, ...], int] = {}
    for t in enum_qt(spec, lam, mu):
        w = qt_weight(t, spec)
        acc[w] = acc.get(w, 0) + 1
    total = LaurentPoly(n, acc)
    ctx.cache[key] = total
    return total


def q_single_var(
    family: str,
    lam: StrictPartition,
    mu: StrictPartition,
    ctx: QContext | None = None,
) -> LaurentPoly:
    """Skew value in a single variable (pair): zero when the shape grows by
    more than one row, otherwise a determinant of one-row values."""
    if family not in ("A", "C"):
        raise ValueError(f"unknown family {family!r}")
    if lam.length - mu.length > 1 or mu.length > lam.length:
        return LaurentPoly.zero(1)
    ctx = _ctx(ctx)
    spec = VariableSpec(1, 0) if family == "C" else VariableSpec(0, 1)
    size = lam.length
    rows = [
        [q_row(lam.part(i) - mu.part(j), spec, ctx) for j in range(1, size + 1)]
        for i in range(1, size + 1)
    ]
    return determinant(RingMatrix.from_rows(rows), 1)


def qI_branch(
    lam: StrictPartition,
    mu: StrictPartition,
    spec: VariableSpec,
    ctx: QContext | None = None,
) -> LaurentPoly:
    """Intermediate value by branching: chains mu = s0 <= s1 <= ... <= sn = lam
    with a single-variable factor per step, symplectic steps first."""
    n = spec.n
    if lam.length > n:
        raise PreconditionError(f"{lam.length} rows on {n} variables")
    ctx = _ctx(ctx)

    def suffix(i: int, cur: StrictPartition) -> LaurentPoly:
        if i > n:
            return LaurentPoly.one(n) if cur == lam else LaurentPoly.zero(n)
        key = ("Ibr", i, cur.parts, lam.parts, spec)
        got = ctx.cache.get(key)
        if got is not None:
            return got
        family = "C" if i <= spec.k else "A"
        total = LaurentPoly.zero(n)
        for nxt in enum_strict_between(cur, lam):
            step = q_single_var(family, nxt, cur, ctx)
            if step.is_zero():
                continue
            rest = suffix(i + 1, nxt)
            if rest.is_zero():
                continue
            total = total + step.embed(n, i - 1) * rest
        ctx.cache[key] = total
        return total

    if not lam.contains(mu):
        return LaurentPoly.zero(n)
    return suffix(1, mu)


def qI_jp(
    lam: StrictPartition,
    mu: StrictPartition,
    spec: VariableSpec,
    ctx: QContext | None = None,
) -> LaurentPoly:
    """Intermediate value by the Pfaffian formula.

    The two-row matrix entries are themselves intermediate values (computed
    by the inner-sum definition for mixed specs; no closed two-row form is
    available there), the one-row entries come from the generating series.
    Shapes with fewer than two rows fall back to the one-row series directly.
    Pure specs take any number of rows, where this is just the plain or
    symplectic skew Pfaffian.
    """
    n = spec.n
    if lam.length > n and spec.k > 0 and spec.m > 0:
        raise PreconditionError(f"{lam.length} rows on {n} variables")
    ctx = _ctx(ctx)
    l = lam.length
    if l == 0:
        return LaurentPoly.one(n) if mu.length == 0 else LaurentPoly.zero(n)
    if l == 1:
        if mu.length > 1:
            return LaurentPoly.zero(n)
        return q_row(lam.part(1) - mu.part(1), spec, ctx)
    key = ("Ijp", lam.parts, mu.parts, spec)
    got = ctx.cache.get(key)
    if got is not None:
        return got
    out = pfaffian(build_jp_matrix("I", lam, mu, spec, ctx), spec.n)
    ctx.cache[key] = out
    return out


ROUTES = {
    "definition": qI_def,
    "tableau": qI_tableau,
    "branch": qI_branch,
    "pfaffian": qI_jp,
}


def qI_routes(
    lam: StrictPartition,
    mu: StrictPartition,
    spec: VariableSpec,
    methods: Iterable[str] | None = None,
    ctx: QContext | None = None,
) -> dict[str, LaurentPoly]:
    """Evaluate the requested routes (default: all four) on one input."""
    ctx = _ctx(ctx)
    wanted = list(methods) if methods is not None else list(ROUTES)
    return {name: ROUTES[name](lam, mu, spec, ctx) for name in wanted}
