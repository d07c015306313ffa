import pytest

from qsym import (
    Alphabet,
    LaurentPoly,
    Partition,
    PreconditionError,
    VariableSpec,
    check_union_identity,
    complete_h,
    elementary_e,
    inter_schur,
    schur_skew,
    schur_skew_e,
    symp_schur,
)


def v(n, i, p=1):
    return LaurentPoly.variable(n, i, p)


def pp(*parts):
    return Partition(tuple(parts))


def test_complete_h_conventions():
    a = Alphabet.symplectic(1)
    assert complete_h(-1, a) == LaurentPoly.zero(1)
    assert complete_h(0, a) == LaurentPoly.one(1)
    assert complete_h(1, a) == v(1, 0) + v(1, 0, -1)


def test_complete_h_two_plain_vars():
    a = Alphabet.type_a(2)
    x1, x2 = v(2, 0), v(2, 1)
    assert complete_h(2, a) == x1 * x1 + x1 * x2 + x2 * x2


def test_elementary_e():
    a = Alphabet.type_a(3)
    x1, x2, x3 = (v(3, i) for i in range(3))
    assert elementary_e(2, a) == x1 * x2 + x1 * x3 + x2 * x3
    assert elementary_e(4, a) == LaurentPoly.zero(3)
    assert elementary_e(0, a) == LaurentPoly.one(3)


def test_schur_basic():
    a = Alphabet.type_a(2)
    x1, x2 = v(2, 0), v(2, 1)
    assert schur_skew(pp(1), pp(), a) == x1 + x2
    assert schur_skew(pp(2, 1), pp(), a) == x1 * x1 * x2 + x1 * x2 * x2
    assert schur_skew(pp(1), pp(2), a) == LaurentPoly.zero(2)


def test_schur_h_vs_e_forms():
    a = Alphabet.type_a(3)
    for lam in (pp(2, 1), pp(3, 2, 1), pp(2, 2)):
        for mu in (pp(), pp(1), pp(1, 1)):
            assert schur_skew(lam, mu, a) == schur_skew_e(lam, mu, a)


def test_symp_schur_values():
    assert symp_schur(pp(1), 1) == v(1, 0) + v(1, 0, -1)
    u = v(2, 0) + v(2, 0, -1)
    w = v(2, 1) + v(2, 1, -1)
    assert symp_schur(pp(1, 1), 2) == u * w + LaurentPoly.one(2)
    assert symp_schur(pp(), 3) == LaurentPoly.one(3)


def test_symp_schur_row_limit():
    with pytest.raises(PreconditionError):
        symp_schur(pp(1, 1), 1)


def test_inter_schur_one_cell():
    got = inter_schur(pp(1), VariableSpec(1, 1))
    assert got == v(2, 0) + v(2, 0, -1) + v(2, 1)


def test_inter_schur_degenerations():
    for lam in (pp(1), pp(2), pp(2, 1), pp(2, 2)):
        spec = VariableSpec(0, 2)
        assert inter_schur(lam, spec) == schur_skew(lam, pp(), Alphabet.type_a(2))
        if lam.length <= 2:
            assert inter_schur(lam, VariableSpec(2, 0)) == symp_schur(lam, 2)


def test_inter_schur_methods_agree():
    for lam in (pp(1), pp(2, 1), pp(3, 1), pp(2, 2), pp(1, 1, 1)):
        for spec in (VariableSpec(1, 1), VariableSpec(1, 2), VariableSpec(2, 1)):
            if lam.length > spec.n:
                continue
            assert inter_schur(lam, spec, "definition") == inter_schur(lam, spec, "tableau")


def test_inter_schur_row_limit():
    with pytest.raises(PreconditionError):
        inter_schur(pp(1, 1, 1), VariableSpec(1, 1))


def test_union_identity():
    assert check_union_identity(pp(1), VariableSpec(1, 1))
    assert check_union_identity(pp(2), VariableSpec(1, 2))
    assert check_union_identity(pp(), VariableSpec(2, 1))
    assert check_union_identity(pp(2, 1), VariableSpec(1, 1))
    with pytest.raises(PreconditionError):
        check_union_identity(pp(1, 1, 1), VariableSpec(1, 2))
