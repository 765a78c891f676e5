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
from fdalg.errors import NotSplit, SplitUndecided
from fdalg.fields import GF, QQ
from fdalg.structure import (
    cartan_matrix,
    ell,
    ext1_diagonal,
    loewy_length,
    minimal_polynomial,
    primitive_idempotents,
    radical,
    radical_power,
    semisimple_decomposition,
    semisimple_quotient,
    structure_report,
    wedderburn_split,
)

F2, F3, F5 = GF(2), GF(3), GF(5)


def test_radical_semisimple_is_zero():
    assert radical(matrix_algebra(QQ, 2)).dim == 0
    assert radical(matrix_algebra(F2, 2)).dim == 0
    assert radical(matrix_algebra(F2, 3)).dim == 0


def test_radical_triangular_char0():
    t3 = lower_triangular(QQ, 3)
    r = radical(t3)
    assert r.dim == 3  # strict lower triangle
    # basis elements e_ij with i > j are in the radical
    for v in r.basis_vectors():
        assert t3.unit[0] is not None  # structural smoke
    assert loewy_length(t3) == 3


def test_radical_z2_char2():
    a = cyclic_group_algebra(F2, 2)
    assert radical(a).basis_vectors() == [(1, 1)]
    assert loewy_length(a) == 2


def test_radical_powers_truncated():
    t = truncated_polynomial(QQ, 4)
    for n in range(1, 5):
        assert radical_power(t, n).dim == 4 - n
    assert loewy_length(t) == 4


def test_radical_powers_two_loop():
    a = two_loop_q_algebra(F5, 2)
    assert radical(a).dim == 3
    assert radical_power(a, 2).dim == 1
    assert radical_power(a, 3).dim == 0
    assert loewy_length(a) == 3


def test_loewy_length_semisimple():
    assert loewy_length(s3_group_algebra(F5)) == 1


def test_minimal_polynomial_basics():
    m2 = matrix_algebra(F5, 2)
    assert minimal_polynomial(m2, m2._unit_vec(0)) == [0, 4, 1]  # x^2 - x
    assert minimal_polynomial(m2, m2._unit_vec(1)) == [0, 0, 1]  # nilpotent: x^2
    assert minimal_polynomial(m2, m2.unit) == [4, 1]             # x - 1


def test_wedderburn_f3_s3():
    a = s3_group_algebra(F3)
    centrals, split = wedderburn_split(a)
    assert split and len(centrals) == 2
    s = semisimple_quotient(a).algebra
    for e in centrals:
        assert e * e == e
        # central in A/J
        for i in range(s.dim):
            b = s.basis_element(i)
            assert e * b == b * e


def test_wedderburn_nonsplit_f2_z3():
    a = cyclic_group_algebra(F2, 3)
    centrals, split = wedderburn_split(a)
    assert not split
    assert len(centrals) == 2
    dec = semisimple_decomposition(a)
    assert sorted(dec.component_dims) == [1, 2]


def test_wedderburn_matrix():
    a = matrix_algebra(F5, 2)
    centrals, split = wedderburn_split(a)
    assert split and len(centrals) == 1
    dec = semisimple_decomposition(a)
    assert dec.component_dims == [4] and len(dec.components[0]) == 2


def test_split_undecided_over_q():
    a = cyclic_group_algebra(QQ, 3)  # Q x Q(omega)
    with pytest.raises(SplitUndecided):
        primitive_idempotents(a)


def test_primitive_idempotents_local():
    a = two_loop_q_algebra(F5, 2)
    idems = primitive_idempotents(a)
    assert len(idems) == 1
    assert idems.idempotents[0] == a.unit_element()


def test_primitive_idempotents_triangular():
    t3 = lower_triangular(QQ, 3)
    idems = primitive_idempotents(t3)
    assert len(idems) == 3
    assert len(idems.iso_classes) == 3
    total = t3.zero_element()
    for i, e in enumerate(idems.idempotents):
        assert e * e == e
        for j, f in enumerate(idems.idempotents):
            if i != j:
                assert (e * f).is_zero() and (f * e).is_zero()
        total = total + e
    assert total == t3.unit_element()


def test_primitive_idempotents_matrix_one_class():
    m2 = matrix_algebra(F5, 2)
    idems = primitive_idempotents(m2)
    assert len(idems) == 2
    assert len(idems.iso_classes) == 1


def test_not_split_raises():
    with pytest.raises(NotSplit):
        primitive_idempotents(cyclic_group_algebra(F2, 3))


def test_cartan_truncated():
    for n in (2, 3, 5):
        t = truncated_polynomial(F3, n)
        assert cartan_matrix(t) == [[n]]
        assert ell(t) == 1
        assert ext1_diagonal(t) == [1]


def test_cartan_kronecker():
    for n in (1, 2, 4):
        a = kronecker(F2, n)
        c = cartan_matrix(a)
        assert sorted(sum(c, [])) == sorted([1, n, 0, 1])
        assert c[0][0] == 1 and c[1][1] == 1
        assert ext1_diagonal(a) == [0, 0]
        assert ell(a) == 2


def test_cartan_two_loop():
    a = two_loop_q_algebra(F5, 2)
    assert cartan_matrix(a) == [[4]]
    assert ell(a) == 1
    assert ext1_diagonal(a) == [2]


def test_idempotent_lifting_nontrivial_radical():
    # T_3 over F_2 forces lifting through a nontrivial radical in char 2
    t3 = lower_triangular(F2, 3)
    idems = primitive_idempotents(t3)
    assert len(idems) == 3
    s = semisimple_quotient(t3)
    for e in idems.idempotents:
        assert e * e == e
        assert not e.is_zero()


def test_structure_report_fields():
    rep = structure_report(two_loop_q_algebra(F5, 3))
    assert rep.split is True
    assert rep.ell == 1 and rep.loewy_length == 3 and rep.radical_dim == 3
    rep2 = structure_report(cyclic_group_algebra(F2, 5))
    assert rep2.split is False and rep2.cartan is None
    rep3 = structure_report(cyclic_group_algebra(QQ, 3))
    assert rep3.split is None and rep3.ell is None


def test_trace_of_cartan_is_peirce_diagonal_sum():
    from fdalg.structure import peirce_component

    for a in (lower_triangular(QQ, 3), kronecker(F3, 2), two_loop_q_algebra(F5, 2)):
        idems = primitive_idempotents(a)
        reps = [idems.idempotents[r] for r in idems.basic_representatives]
        c = cartan_matrix(a)
        assert sum(c[i][i] for i in range(len(reps))) == sum(
            peirce_component(a, e, e).dim for e in reps)


def test_semisimple_multiplicity_reconstruction():
    # sum over classes of (multiplicity x simple dim) recovers dim A/J when split
    for a in (matrix_algebra(F3, 2), s3_group_algebra(F5), lower_triangular(F5, 3),
              direct_sum(matrix_algebra(F2, 2), matrix_algebra(F2, 2))):
        dec = semisimple_decomposition(a)
        assert dec.split
        total = sum(len(comp) ** 2 for comp in dec.components)
        assert total == semisimple_quotient(a).algebra.dim
