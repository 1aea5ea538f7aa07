import math

import pytest

from eulerchow.monoid import (TRIVIAL, GradedMonoid, MonoidMismatchError,
                              MonoidMorphism, compose, product)


def test_free_defaults_to_weight_one():
    m = GradedMonoid.free(["a", "b"])
    assert m.rank == 2
    assert m.weights == (1, 1)
    assert m.labels == ("a", "b")


def test_duplicate_labels_rejected():
    with pytest.raises(ValueError):
        GradedMonoid.free(["a", "a"])


def test_nonpositive_weight_rejected():
    with pytest.raises(ValueError):
        GradedMonoid.free(["a"], [0])


def test_grade_uses_weights():
    m = GradedMonoid.free(["a", "b"], [1, 3])
    assert m.grade((2, 0)) == 2
    assert m.grade((1, 2)) == 7
    assert m.grade(m.zero()) == 0


def test_validate_rejects_wrong_rank_and_negatives():
    m = GradedMonoid.free(["a", "b"])
    with pytest.raises(MonoidMismatchError):
        m.validate((1,))
    with pytest.raises(ValueError):
        m.validate((1, -1))


def test_enumerate_counts_unit_weights():
    # lattice points with e1+e2 <= d: binomial(d+2, 2)
    m = GradedMonoid.free(["a", "b"])
    for d in range(6):
        assert len(m.enumerate_up_to(d)) == math.comb(d + 2, 2)


def test_enumerate_respects_weights():
    m = GradedMonoid.free(["a", "b"], [1, 2])
    got = m.enumerate_up_to(2)
    assert set(got) == {(0, 0), (1, 0), (2, 0), (0, 1)}


def test_enumerate_is_graded_lex_sorted():
    m = GradedMonoid.free(["a", "b"])
    got = m.enumerate_up_to(2)
    assert got == [(0, 0), (0, 1), (1, 0), (0, 2), (1, 1), (2, 0)]
    assert got == sorted(got, key=m.key)


def test_trivial_monoid():
    assert TRIVIAL.rank == 0
    assert TRIVIAL.enumerate_up_to(5) == [()]
    assert TRIVIAL.grade(()) == 0


def test_json_round_trip():
    m = GradedMonoid.free(["a", "b"], [1, 2])
    assert GradedMonoid.from_json(m.to_json()) == m


def test_morphism_apply_is_additive():
    m = GradedMonoid.free(["a", "b"])
    n = GradedMonoid.free(["x"])
    phi = MonoidMorphism(m, n, ((2,), (3,)))
    assert phi.apply((1, 1)) == (5,)
    assert phi.apply(m.zero()) == n.zero()
    x, y = (2, 0), (0, 3)
    assert phi.apply(m.add(x, y)) == n.add(phi.apply(x), phi.apply(y))


def test_morphism_finite_fibers():
    m = GradedMonoid.free(["a", "b"])
    n = GradedMonoid.free(["x"])
    assert MonoidMorphism(m, n, ((1,), (2,))).has_finite_fibers()
    assert not MonoidMorphism(m, n, ((1,), (0,))).has_finite_fibers()


def test_min_expansion_ratio():
    m = GradedMonoid.free(["a", "b"], [1, 2])
    n = GradedMonoid.free(["x", "y"], [1, 1])
    phi = MonoidMorphism(m, n, ((1, 0), (1, 1)))
    # image grades 1 and 2 against source weights 1 and 2
    assert phi.min_expansion_ratio() == 1
    assert MonoidMorphism(TRIVIAL, n, ()).min_expansion_ratio() is None


def test_compose():
    a = GradedMonoid.free(["a"])
    b = GradedMonoid.free(["x", "y"])
    c = GradedMonoid.free(["u"])
    phi = MonoidMorphism(a, b, ((1, 1),))
    psi = MonoidMorphism(b, c, ((1,), (2,)))
    chain = compose(psi, phi)
    assert chain.apply((2,)) == psi.apply(phi.apply((2,)))
    with pytest.raises(MonoidMismatchError):
        compose(phi, psi)


def test_identity_morphism():
    m = GradedMonoid.free(["a", "b"])
    ident = MonoidMorphism.identity(m)
    assert ident.apply((3, 4)) == (3, 4)


def test_product_injections_and_projections():
    m = GradedMonoid.free(["a"], [2])
    n = GradedMonoid.free(["b", "c"])
    prod, (inj_m, inj_n), (proj_m, proj_n) = product(m, n)
    assert prod.labels == ("a", "b", "c")
    assert prod.weights == (2, 1, 1)
    assert inj_m.apply((1,)) == (1, 0, 0)
    assert inj_n.apply((0, 1)) == (0, 0, 1)
    assert proj_m.apply((1, 2, 3)) == (1,)
    assert proj_n.apply((1, 2, 3)) == (2, 3)


def test_product_namespaces_colliding_labels():
    m = GradedMonoid.free(["a"])
    n = GradedMonoid.free(["a"])
    prod, _, _ = product(m, n)
    assert prod.labels == ("0.a", "1.a")
