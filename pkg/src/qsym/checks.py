"""Cross-verification sweeps shared by the CLI `verify` command and the test
suite.  Each suite returns a list of (name, passed, detail) results; budgets
cap the shape weight and the variable count."""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import permutations

from .linalg import RingMatrix, determinant, pfaffian
from .ring import LaurentPoly, parse_poly, series_from_linear_factors
from .shapes import EMPTY, Partition, StrictPartition, enum_strict_between
from .symfun import (
    Alphabet,
    check_union_identity,
    inter_schur,
    schur_skew,
    schur_skew_e,
    symp_schur,
)
from .qfun import (
    QContext,
    build_jp_matrix,
    qI_def,
    qI_jp,
    qI_routes,
    qI_tableau,
    q_row,
    q_skew_jp,
)
from .tableaux import VariableSpec, enum_qt, enum_spt, qt_weight
from .lgv import enum_path_families, family_weight


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str = ""

    def line(self) -> str:
        return f"{'PASS' if self.passed else 'FAIL'} {self.name}" + (
            f": {self.detail}" if self.detail else ""
        )


def strict_partitions(max_part: int, max_len: int) -> list[StrictPartition]:
    """All strict partitions with largest part and length bounded, empty included."""
    out: list[StrictPartition] = []

    def rec(prev: int, acc: tuple[int, ...]):
        out.append(StrictPartition(acc))
        if len(acc) == max_len:
            return
        for p in range(prev - 1, 0, -1):
            rec(p, acc + (p,))

    rec(max_part + 1, ())
    return out


def partitions_up_to_weight(max_weight: int, max_len: int = 4) -> list[Partition]:
    out = [Partition()]

    def rec(prev: int, acc: tuple[int, ...], left: int):
        for p in range(min(prev, left), 0, -1):
            nxt = acc + (p,)
            out.append(Partition(nxt))
            if len(nxt) < max_len:
                rec(p, nxt, left - p)

    rec(max_weight, (), max_weight)
    return out


def specs_up_to(max_vars: int) -> list[VariableSpec]:
    return [
        VariableSpec(k, total - k)
        for total in range(max_vars + 1)
        for k in range(total + 1)
    ]


def qi_cases(max_part: int = 4, max_len: int = 3, max_vars: int = 3):
    """All (lam, mu, spec) with strict mu inside lam and enough variables."""
    for lam in strict_partitions(max_part, max_len):
        for mu in enum_strict_between(EMPTY, lam):
            for spec in specs_up_to(max_vars):
                if lam.length <= spec.n:
                    yield lam, mu, spec


# -- ring -------------------------------------------------------------------


def _random_poly(rng: random.Random, n: int, terms: int = 4) -> LaurentPoly:
    out = {}
    for _ in range(rng.randint(0, terms)):
        exps = tuple(rng.randint(-3, 3) for _ in range(n))
        out[exps] = rng.randint(-9, 9)
    return LaurentPoly(n, out)


def ring_checks(seed: int = 0, rounds: int = 60) -> list[CheckResult]:
    rng = random.Random(seed)
    ok_axioms = ok_roundtrip = ok_series = True
    detail = ""
    for _ in range(rounds):
        n = rng.randint(0, 3)
        a, b, c = (_random_poly(rng, n) for _ in range(3))
        if a * b != b * a or (a * b) * c != a * (b * c) or a * (b + c) != a * b + a * c:
            ok_axioms = False
        if parse_poly(str(a), n) != a or LaurentPoly.from_json(a.to_json()) != a:
            ok_roundtrip = False
            detail = str(a)
        if str(parse_poly(str(a), n)) != str(a):
            ok_roundtrip = False
    for _ in range(max(1, rounds // 3)):
        n = rng.randint(1, 3)
        nums = [tuple(rng.randint(-2, 2) for _ in range(n)) for _ in range(rng.randint(0, 3))]
        dens = [tuple(rng.randint(-2, 2) for _ in range(n)) for _ in range(rng.randint(0, 3))]
        deg = rng.randint(0, 5)
        series = series_from_linear_factors(nums, dens, deg, n)
        back = series
        for v in dens:
            back = back.mul_linear(v, -1)
        if back != series_from_linear_factors(nums, [], deg, n):
            ok_series = False
    return [
        CheckResult("ring.axioms", ok_axioms, f"{rounds} random triples"),
        CheckResult("ring.roundtrip", ok_roundtrip, detail),
        CheckResult("ring.series-inverse", ok_series),
    ]


# -- tableaux ----------------------------------------------------------------


def tableaux_checks(max_weight: int = 6, max_vars: int = 3) -> list[CheckResult]:
    results = []
    dup_free = True
    for lam, mu, spec in qi_cases(max_part=4, max_len=3, max_vars=max_vars):
        if lam.weight > max_weight:
            continue
        tabs = list(enum_qt(spec, lam, mu))
        if len(set(tabs)) != len(tabs):
            dup_free = False
    results.append(CheckResult("tableaux.duplicate-free", dup_free))

    def qt_count(spec, lam, mu=EMPTY):
        return sum(1 for _ in enum_qt(spec, lam, mu))

    split_ok = True
    for lam in strict_partitions(4, 3):
        if lam.weight > max_weight:
            continue
        for mu in enum_strict_between(EMPTY, lam):
            for spec in specs_up_to(max_vars):
                lhs = qt_count(spec, lam, mu)
                rhs = 0
                for nu in enum_strict_between(mu, lam):
                    c = qt_count(VariableSpec(spec.k, 0), nu, mu)
                    if c:
                        rhs += c * qt_count(VariableSpec(0, spec.m), lam, nu)
                if lhs != rhs:
                    split_ok = False
    results.append(CheckResult("tableaux.split-counts", split_ok))

    def spt_count(spec, outer, inner=Partition()):
        return sum(1 for _ in enum_spt(spec, outer, inner))

    spt_ok = True
    for lam in partitions_up_to_weight(min(max_weight, 5), max_len=3):
        for spec in specs_up_to(max_vars):
            if lam.length > spec.n:
                continue
            lhs = spt_count(spec, lam)
            rhs = 0
            for mu in lam.subpartitions():
                c = spt_count(VariableSpec(spec.k, 0), mu)
                if c:
                    rhs += c * spt_count(VariableSpec(0, spec.m), lam, mu)
            if lhs != rhs:
                spt_ok = False
    results.append(CheckResult("tableaux.split-counts-unprimed", spt_ok))
    return results


# -- schur side ---------------------------------------------------------------


def schur_checks(max_weight: int = 5, max_vars: int = 4) -> list[CheckResult]:
    results = []
    agree = True
    union_ok = True
    symmetric = True
    for lam in partitions_up_to_weight(max_weight):
        for spec in specs_up_to(max_vars):
            if lam.length > spec.n:
                continue
            d = inter_schur(lam, spec, "definition")
            if d != inter_schur(lam, spec, "tableau"):
                agree = False
            if lam.length <= spec.k + 1 and not check_union_identity(lam, spec):
                union_ok = False
            if lam.weight <= 4 and not is_spec_symmetric(d, spec):
                symmetric = False
    results.append(CheckResult("schur.definition-vs-tableau", agree))
    results.append(CheckResult("schur.union-alphabet", union_ok))
    results.append(CheckResult("schur.weyl-symmetry", symmetric))

    jt_ok = True
    alphabets = (
        Alphabet.type_a(2),
        Alphabet.symplectic(1),
        Alphabet.mixed(VariableSpec(1, 1)),
    )
    for lam in partitions_up_to_weight(6):
        for mu in list(lam.subpartitions())[:3]:
            for a in alphabets:
                if schur_skew(lam, mu, a) != schur_skew_e(lam, mu, a):
                    jt_ok = False
    results.append(CheckResult("schur.jacobi-trudi-h-vs-e", jt_ok))

    inv_ok = True
    k = 2
    for lam in partitions_up_to_weight(4, max_len=2):
        p = symp_schur(lam, k)
        for i in range(k):
            images = [LaurentPoly.variable(k, j) for j in range(k)]
            images[i] = LaurentPoly.variable(k, i, -1)
            if p.substitute(images) != p:
                inv_ok = False
        for sigma in permutations(range(k)):
            images = [LaurentPoly.variable(k, sigma[j]) for j in range(k)]
            if p.substitute(images) != p:
                inv_ok = False
    results.append(CheckResult("schur.symplectic-invariance", inv_ok))
    return results


# -- q side -------------------------------------------------------------------


def is_spec_symmetric(p: LaurentPoly, spec: VariableSpec) -> bool:
    """Invariant under each x_i -> 1/x_i (i <= k) and adjacent swaps beyond k."""
    n = spec.n
    base = [LaurentPoly.variable(n, j) for j in range(n)]
    for i in range(spec.k):
        images = list(base)
        images[i] = LaurentPoly.variable(n, i, -1)
        if p.substitute(images) != p:
            return False
    for a in range(spec.k, n - 1):
        images = list(base)
        images[a], images[a + 1] = base[a + 1], base[a]
        if p.substitute(images) != p:
            return False
    return True


def qfun_checks(
    max_part: int = 4, max_len: int = 3, max_vars: int = 3, seed: int = 0
) -> list[CheckResult]:
    results = []
    ctx = QContext()
    agree = True
    jp_agree = True
    symmetric = True
    pf_sq = True
    bad = ""
    for lam, mu, spec in qi_cases(max_part, max_len, max_vars):
        routes = qI_routes(lam, mu, spec, ["definition", "tableau", "branch"], ctx)
        vals = list(routes.values())
        if not (vals[0] == vals[1] == vals[2]):
            agree = False
            bad = f"lam={lam} mu={mu} spec=({spec.k},{spec.m})"
        if lam.length >= 2:
            if qI_jp(lam, mu, spec, ctx) != vals[0]:
                jp_agree = False
                bad = f"jp lam={lam} mu={mu} spec=({spec.k},{spec.m})"
            mat = build_jp_matrix("I", lam, mu, spec, ctx)
            if pfaffian(mat, spec.n) * pfaffian(mat, spec.n) != determinant(mat, spec.n):
                pf_sq = False
        if not is_spec_symmetric(vals[0], spec):
            symmetric = False
    results.append(CheckResult("qfun.def-tableau-branch", agree, bad))
    results.append(CheckResult("qfun.pfaffian-route", jp_agree, bad))
    results.append(CheckResult("qfun.pfaffian-square", pf_sq))
    results.append(CheckResult("qfun.weyl-symmetry", symmetric))

    degen = True
    for lam in strict_partitions(max_part, max_len):
        for mu in enum_strict_between(EMPTY, lam):
            for total in range(max(1, lam.length), max_vars + 1):
                a_spec = VariableSpec(0, total)
                c_spec = VariableSpec(total, 0)
                if qI_def(lam, mu, a_spec, ctx) != q_skew_jp("A", lam, mu, a_spec, ctx):
                    degen = False
                if qI_def(lam, mu, c_spec, ctx) != q_skew_jp("C", lam, mu, c_spec, ctx):
                    degen = False
    results.append(CheckResult("qfun.degenerations", degen))

    series_ok = True
    for spec in specs_up_to(max_vars):
        for l in range(0, 7):
            lam = StrictPartition((l,)) if l else EMPTY
            if lam.length > spec.n:
                continue
            if qI_tableau(lam, EMPTY, spec, ctx) != q_row(l, spec, ctx):
                series_ok = False
    results.append(CheckResult("qfun.one-row-series", series_ok))

    rng = random.Random(seed)
    vanish = True
    count = 0
    lams = [p for p in strict_partitions(max_part, max_len) if p.parts]
    attempts = 0
    while count < 50 and lams and max_vars >= 1 and attempts < 5000:
        attempts += 1
        lam = rng.choice(lams)
        mu = rng.choice(lams)
        if lam.contains(mu) or lam.length > max_vars:
            continue
        total = rng.randint(max(1, lam.length), max_vars)
        k = rng.randint(0, total)
        spec = VariableSpec(k, total - k)
        if qI_tableau(lam, mu, spec, ctx).is_zero() and qI_def(lam, mu, spec, ctx).is_zero():
            count += 1
        else:
            vanish = False
            break
    results.append(CheckResult("qfun.vanishing", vanish, f"{count} non-nested pairs"))
    return results


# -- lattice paths -------------------------------------------------------------


def lgv_checks(max_part: int = 4, max_len: int = 3, max_vars: int = 3) -> list[CheckResult]:
    sums_ok = True
    bijection_ok = True
    bad = ""
    for lam, mu, spec in qi_cases(max_part, max_len, max_vars):
        fam_weights = []
        mapped = set()
        count = 0
        for fam in enum_path_families(lam, mu, spec):
            count += 1
            fam_weights.append(family_weight(fam, spec))
            mapped.add(fam.to_tableau(lam, mu))
        tabs = set(enum_qt(spec, lam, mu))
        tab_weights = [qt_weight(t, spec) for t in tabs]

        def accumulate(weights):
            acc: dict[tuple[int, ...], int] = {}
            for w in weights:
                acc[w] = acc.get(w, 0) + 1
            return LaurentPoly(spec.n, acc)

        if accumulate(fam_weights) != accumulate(tab_weights):
            sums_ok = False
            bad = f"lam={lam} mu={mu} spec=({spec.k},{spec.m})"
        if len(mapped) != count or mapped != tabs or sorted(fam_weights) != sorted(tab_weights):
            bijection_ok = False
            bad = bad or f"bij lam={lam} mu={mu} spec=({spec.k},{spec.m})"
    return [
        CheckResult("lgv.weight-sums", sums_ok, bad),
        CheckResult("lgv.path-tableau-bijection", bijection_ok, bad),
    ]


def pfaffian_random_checks(seed: int = 0, rounds: int = 200) -> list[CheckResult]:
    rng = random.Random(seed)
    ok = True
    for _ in range(rounds):
        size = 2 * rng.randint(1, 3)
        n = rng.randint(1, 2)
        zero = LaurentPoly.zero(n)
        rows = [[zero] * size for _ in range(size)]
        for i in range(size):
            for j in range(i + 1, size):
                v = _random_poly(rng, n, terms=2)
                rows[i][j] = v
                rows[j][i] = -v
        mat = RingMatrix.from_rows(rows)
        if pfaffian(mat, n) * pfaffian(mat, n) != determinant(mat, n):
            ok = False
    return [CheckResult("linalg.pfaffian-square-random", ok, f"{rounds} matrices")]


SUITES = {
    "ring": lambda max_weight, max_vars, seed: ring_checks(seed=seed),
    "tableaux": lambda max_weight, max_vars, seed: tableaux_checks(max_weight, max_vars),
    "schur": lambda max_weight, max_vars, seed: schur_checks(max_weight, max_vars),
    "qfun": lambda max_weight, max_vars, seed: qfun_checks(
        max_part=min(max_weight, 4), max_len=3, max_vars=max_vars, seed=seed
    ),
    "lgv": lambda max_weight, max_vars, seed: lgv_checks(
        max_part=min(max_weight, 4), max_len=3, max_vars=max_vars
    ),
}


def run_suite(name: str, max_weight: int, max_vars: int, seed: int = 0) -> list[CheckResult]:
    if name == "all":
        out = []
        for key in SUITES:
            out.extend(SUITES[key](max_weight, max_vars, seed))
        out.extend(pfaffian_random_checks(seed=seed, rounds=50))
        return out
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}")
    return SUITES[name](max_weight, max_vars, seed)
