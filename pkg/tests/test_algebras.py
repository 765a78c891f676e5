import random

import pytest

from fdalg.algebras import (
    Algebra,
    Element,
    corner,
    direct_sum,
    group_algebra_from_cayley,
    matrix_algebra,
)
from fdalg.corpus import lower_triangular, truncated_polynomial, S3_TABLE
from fdalg.errors import NotAGroup, NotIdempotent, ParentMismatch
from fdalg.fields import GF, QQ
from fdalg.invariants import k_of

F2, F3, F5 = GF(2), GF(3), GF(5)


def test_ground_field_is_valid():
    a = Algebra(QQ, [[[1]]], [1])
    assert a.validate().ok
    assert a.k_star() == 1


def test_perturbed_tensor_reports_failures():
    t = truncated_polynomial(F5, 2)
    mul = [[list(row) for row in plane] for plane in t.mul]
    mul[0][1][0] = 3  # breaks 1·x
    bad = Algebra(F5, mul, t.unit)
    rep = bad.validate()
    assert not rep.ok
    assert rep.associativity_failures or rep.unit_failures


def test_group_algebra_from_cayley_valid():
    g = group_algebra_from_cayley(F3, S3_TABLE)
    assert g.validate().ok
    assert g.provenance.group_order == 6
    assert len(g.provenance.conjugacy_classes) == 3


def test_cayley_rejects_broken_tables():
    with pytest.raises(NotAGroup):
        group_algebra_from_cayley(F2, [[0, 1], [1, 1]])  # not identity column
    with pytest.raises(NotAGroup):
        group_algebra_from_cayley(F2, [[0, 1, 2], [1, 0, 0], [2, 0, 0]])


def test_trivial_group_is_ground_field():
    g = group_algebra_from_cayley(F5, [[0]])
    assert g.dim == 1 and g.validate().ok


def test_unit_multiplication():
    t = truncated_polynomial(QQ, 4)
    x = t.basis_element(1)
    assert t.unit_element() * x == x
    assert x * t.unit_element() == x


def test_truncation_kills_high_powers():
    t = truncated_polynomial(QQ, 3)
    x, x2 = t.basis_element(1), t.basis_element(2)
    assert (x * x2).is_zero()


def test_matrix_units():
    m2 = matrix_algebra(F5, 2)
    e11, e12, e21 = m2.basis_element(0), m2.basis_element(1), m2.basis_element(2)
    assert e12 * e21 == e11
    assert (e12 * e12).is_zero()


def test_parent_mismatch_raises():
    a = truncated_polynomial(QQ, 2)
    b = truncated_polynomial(QQ, 2)
    with pytest.raises(ParentMismatch):
        a.basis_element(0) * b.basis_element(0)


def test_center_examples():
    # commutative: the whole algebra
    t = truncated_polynomial(F5, 4)
    assert t.k_star() == 4
    # k*(T_n) = 1 and k*(M_2) = 1
    for n in (2, 3, 4, 5):
        assert lower_triangular(QQ, n).k_star() == 1
    assert matrix_algebra(F3, 2).k_star() == 1


def test_corner_of_unit_is_whole_algebra():
    a = lower_triangular(QQ, 2)
    c = corner(a, a.unit_element())
    assert c.dim == a.dim


def test_corner_of_matrix_unit():
    m2 = matrix_algebra(QQ, 2)
    c = corner(m2, m2.basis_element(0))
    assert c.dim == 1 and c.validate().ok


def test_corner_requires_idempotent():
    m2 = matrix_algebra(QQ, 2)
    with pytest.raises(NotIdempotent):
        corner(m2, m2.basis_element(1))


def test_direct_sum_dims_and_k():
    ds = direct_sum(Algebra(F5, [[[1]]], [1]), matrix_algebra(F5, 2))
    assert ds.dim == 5 and ds.validate().ok
    assert k_of(ds) == 2  # scalars plus trace functional of the matrix block


def test_regular_representation_homomorphism():
    a = matrix_algebra(F3, 2)
    rng = random.Random(0)
    for _ in range(10):
        x = a.element([rng.randrange(3) for _ in range(4)])
        y = a.element([rng.randrange(3) for _ in range(4)])
        lx, ly = a.left_regular(x), a.left_regular(y)
        assert a.left_regular(x * y) == lx.matmul(ly)
        rx, ry = a.right_regular(x), a.right_regular(y)
        assert a.right_regular(x * y) == ry.matmul(rx)


def test_associativity_random_sampling():
    a = group_algebra_from_cayley(F2, S3_TABLE)
    rng = random.Random(1)
    for _ in range(20):
        x = a.element([rng.randrange(2) for _ in range(6)])
        y = a.element([rng.randrange(2) for _ in range(6)])
        z = a.element([rng.randrange(2) for _ in range(6)])
        assert (x * y) * z == x * (y * z)


def test_z2_group_algebra_is_dual_numbers():
    # g - 1 maps to X: an explicit isomorphism onto F_2[X]/(X^2)
    g2 = group_algebra_from_cayley(F2, [[0, 1], [1, 0]])
    one, g = g2.basis_element(0), g2.basis_element(1)
    x = g - one
    assert (x * x).is_zero()
    # {1, g-1} is a basis, so the span of powers of x plus 1 is everything
    from fdalg.linalg import span

    assert span(F2, 2, [one.coords, x.coords]).dim == 2


def test_group_commutator_codim_is_class_count():
    for field in (F2, F3, F5, QQ):
        g = group_algebra_from_cayley(field, S3_TABLE)
        assert k_of(g) == 3
    table = [[(i + j) % 4 for j in range(4)] for i in range(4)]
    for field in (F2, F3, QQ):
        assert k_of(group_algebra_from_cayley(field, table)) == 4
