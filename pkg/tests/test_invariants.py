import pytest

from fdalg.algebras import Algebra, direct_sum, matrix_algebra
from fdalg.corpus import (
    cyclic_group_algebra,
    kronecker,
    lower_triangular,
    s3_group_algebra,
    truncated_polynomial,
    two_loop_q_algebra,
)
from fdalg.errors import CharZero, NotBasic
from fdalg.fields import GF, QQ
from fdalg.invariants import (
    acyc_cyc_space,
    codim_k_n,
    codim_series,
    commutator_subspace,
    is_local,
    k_n_space,
    k_of,
    p_power_space,
    peirce_codim_bound,
    rad_in_commutators,
    symmetrizing_form_search,
    verify_symmetrizing_form,
)
from fdalg.structure import loewy_length, primitive_idempotents

F2, F3, F5 = GF(2), GF(3), GF(5)


def test_commutator_ground_field():
    a = Algebra(QQ, [[[1]]], [1])
    assert commutator_subspace(a).dim == 0
    assert k_of(a) == 1


def test_commutator_two_loop():
    for q, field in ((2, F5), (3, F5), (2, QQ)):
        a = two_loop_q_algebra(field, q)
        k = commutator_subspace(a)
        assert k.dim == 1 and k_of(a) == 3


def test_commutator_matrix_trace_zero():
    for field in (QQ, F3, F5):
        a = matrix_algebra(field, 2)
        assert k_of(a) == 1
        # commutators span the trace-zero subspace: e11 - e22 included
        assert commutator_subspace(a).contains((1, 0, 0, field.neg(field.one())))
    # char 2: still codimension one
    assert k_of(matrix_algebra(F2, 2)) == 1


def test_codim_series_examples():
    assert codim_series(truncated_polynomial(QQ, 3)).values == [1, 2, 3]
    assert codim_series(two_loop_q_algebra(F5, 2)).values == [1, 3, 3]
    assert codim_series(kronecker(F2, 2)).values == [2, 2]


def test_series_monotone_and_k():
    for a in (lower_triangular(QQ, 4), s3_group_algebra(F3),
              two_loop_q_algebra(F5, 2), cyclic_group_algebra(F2, 4)):
        s = codim_series(a)
        assert all(x <= y for x, y in zip(s.values, s.values[1:]))
        assert s.values[-1] == s.k == k_of(a)


def test_p_power_space_examples():
    t = truncated_polynomial(F2, 2)
    sp = p_power_space(t)
    assert sp.basis_vectors() == [(0, 1)] and sp.codim() == 1
    ss = direct_sum(Algebra(F3, [[[1]]], [1]), Algebra(F3, [[[1]]], [1]))
    assert p_power_space(ss).dim == 0 and p_power_space(ss).codim() == 2
    s3 = s3_group_algebra(F3)
    assert p_power_space(s3).codim() == 2  # simple-module count
    assert p_power_space(s3) == k_n_space(s3, 1)


def test_p_power_space_char0_raises():
    with pytest.raises(CharZero):
        p_power_space(truncated_polynomial(QQ, 2))


def test_acyc_cyc_local_reduces_to_radical_power():
    a = two_loop_q_algebra(F5, 2)
    idems = primitive_idempotents(a)
    from fdalg.structure import radical_power

    for n in (1, 2, 3):
        assert acyc_cyc_space(a, idems, n) == radical_power(a, n)


def test_acyc_cyc_triangular():
    t2 = lower_triangular(QQ, 2)
    idems = primitive_idempotents(t2)
    assert acyc_cyc_space(t2, idems, 1).codim() == 2


def test_acyc_cyc_kronecker():
    a = kronecker(F3, 2)
    idems = primitive_idempotents(a)
    assert acyc_cyc_space(a, idems, 2).codim() == 2


def test_acyc_cyc_requires_basic():
    m2 = matrix_algebra(F5, 2)
    idems = primitive_idempotents(m2)
    with pytest.raises(NotBasic):
        acyc_cyc_space(m2, idems, 1)


def test_peirce_bound_truncated_equality():
    for n in (3, 5):
        t = truncated_polynomial(F5, n)
        for m in range(1, n + 1):
            assert peirce_codim_bound(t, m) == m == codim_k_n(t, m)


def test_peirce_bound_two_loop():
    a = two_loop_q_algebra(F5, 2)
    assert [peirce_codim_bound(a, n) for n in (1, 2, 3)] == [1, 3, 4]
    assert [codim_k_n(a, n) for n in (1, 2, 3)] == [1, 3, 3]


def test_bound_equals_offdiagonal_span_codim_on_basic():
    # on basic algebras the diagonal Peirce bound is the codimension of the
    # off-diagonal plus diagonal-radical span, and equality at level n happens
    # exactly when the commutators sit inside that span
    cases = [
        lower_triangular(QQ, 2),
        lower_triangular(F3, 3),
        kronecker(F2, 2),
        two_loop_q_algebra(F5, 2),
        truncated_polynomial(F3, 4),
    ]
    for a in cases:
        idems = primitive_idempotents(a)
        kspace = commutator_subspace(a)
        for n in range(1, loewy_length(a) + 1):
            sp = acyc_cyc_space(a, idems, n)
            assert peirce_codim_bound(a, n) == sp.codim()
            inside = all(sp.contains(v) for v in kspace.basis_vectors())
            assert inside == (codim_k_n(a, n) == sp.codim())


def test_rad_in_commutators_examples():
    assert rad_in_commutators(lower_triangular(QQ, 3)) is True
    assert rad_in_commutators(truncated_polynomial(QQ, 2)) is False
    assert rad_in_commutators(matrix_algebra(F3, 2)) is True


def test_is_local():
    assert is_local(two_loop_q_algebra(F5, 2)) is True
    assert is_local(lower_triangular(QQ, 2)) is False
    assert is_local(cyclic_group_algebra(F2, 4)) is True
    assert is_local(cyclic_group_algebra(QQ, 3)) is None  # undecided over Q


def test_symmetrizing_form_truncated():
    for field in (F5, QQ):
        t = truncated_polynomial(field, 4)
        verdict = symmetrizing_form_search(t)
        assert verdict.kind == "yes"
        assert verify_symmetrizing_form(t, verdict.functional)
        # the classical certificate: coefficient of x^{n-1}
        assert verify_symmetrizing_form(t, [0, 0, 0, 1])


def test_symmetrizing_form_t2_exhaustive_no():
    assert symmetrizing_form_search(lower_triangular(F2, 2)).kind == "no"


def test_symmetrizing_form_group_algebra():
    for a in (cyclic_group_algebra(F3, 3), s3_group_algebra(F2)):
        verdict = symmetrizing_form_search(a)
        assert verdict.kind == "yes"
        assert verify_symmetrizing_form(a, verdict.functional)
        # coefficient-of-identity functional works for any group algebra
        ident = [1] + [0] * (a.dim - 1)
        assert verify_symmetrizing_form(a, ident)


def test_symmetrizing_form_unknown_over_q():
    assert symmetrizing_form_search(lower_triangular(QQ, 2)).kind == "unknown"
