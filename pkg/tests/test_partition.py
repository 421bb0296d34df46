"""Partition combinatorics: statistics, boxes, orders, enumeration."""

import pytest
from hypothesis import given, strategies as st

from symq.partition import Partition, dominance_leq, parse_partition, partitions
from symq.qcoeff import QPoly, q_factorial


def pt(*parts):
    return Partition(tuple(parts))


PARTITION_COUNTS = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]

partition_samples = st.integers(0, 8).flatmap(
    lambda n: st.sampled_from(partitions(n))
)


def test_validation():
    with pytest.raises(ValueError):
        pt(1, 2)
    with pytest.raises(ValueError):
        pt(2, 0)
    with pytest.raises(ValueError):
        pt(-1)
    assert pt().size == 0


def test_enumeration_counts_and_order():
    for n, count in enumerate(PARTITION_COUNTS):
        ps = partitions(n)
        assert len(ps) == count
        assert ps == tuple(sorted(ps, key=lambda p: p.sort_key()))
        if n > 0:
            assert ps[0] == pt(n)
            assert ps[-1] == pt(*([1] * n))


def test_total_order_and_sorting():
    assert pt(3) < pt(2, 1) < pt(1, 1, 1)
    assert pt(2) < pt(3)  # smaller size first
    assert sorted([pt(1, 1), pt(2), pt(1)]) == [pt(1), pt(2), pt(1, 1)]


def test_conjugate():
    assert pt(4, 2, 1).conjugate() == pt(3, 2, 1, 1)
    assert pt(1, 1, 1).conjugate() == pt(3)
    assert pt().conjugate() == pt()


@given(partition_samples)
def test_conjugate_involution(lam):
    assert lam.conjugate().conjugate() == lam
    assert lam.conjugate().size == lam.size


def test_statistics():
    assert pt(2, 1).n_stat() == 1
    assert pt(1, 1, 1, 1).n_stat() == 6
    assert pt(3, 2).n_stat() == 2
    assert pt(3, 1, 1).z_stat() == 6
    assert pt(2, 2).z_stat() == 8
    assert pt().z_stat() == 1


@given(partition_samples)
def test_n_stat_via_conjugate(lam):
    # sum over columns of binomial(column, 2)
    total = sum(c * (c - 1) // 2 for c in lam.conjugate().parts)
    assert lam.n_stat() == total


@given(partition_samples)
def test_class_sizes_partition_the_group(lam):
    n = lam.size
    total = sum(mu.class_size() for mu in partitions(n))
    fact = 1
    for i in range(2, n + 1):
        fact *= i
    assert total == fact
    assert lam.class_size() * lam.z_stat() == fact


def test_b_poly():
    one_minus = lambda k: QPoly.one() - QPoly.monomial(k)
    assert pt(1, 1).b_poly() == one_minus(1) * one_minus(2)
    assert pt(2, 1).b_poly() == one_minus(1) * one_minus(1)
    assert pt(3).b_poly() == one_minus(1)
    assert pt().b_poly() == QPoly.one()


@given(partition_samples)
def test_b_poly_of_column(lam):
    # for a single column, b is the q-factorial up to sign-free factors
    n = lam.size
    col = Partition(tuple([1] * n))
    expect = QPoly.one()
    for k in range(1, n + 1):
        expect = expect * (QPoly.one() - QPoly.monomial(k))
    assert col.b_poly() == expect


def test_boxes():
    assert pt(3, 2).add_box(1) == pt(4, 2)
    assert pt(3, 2).add_box(3) == pt(3, 2, 1)
    assert pt(3, 3).add_box(2) == pt(4, 3)  # rearranged to stay nonincreasing
    assert pt(3, 2).remove_box(2) == pt(3, 1)
    assert pt(3, 1).remove_box(2) == pt(3)
    # removal from a non-corner row rearranges into a valid shape
    assert pt(2, 2).remove_box(1) == pt(2, 1)
    assert pt(3, 2).removable_rows() == (1, 2)
    assert pt(2, 2).removable_rows() == (2,)
    with pytest.raises(ValueError):
        pt(2).remove_box(2)
    with pytest.raises(ValueError):
        pt(2).remove_box(0)


@given(partition_samples)
def test_add_then_remove_box(lam):
    for j in range(1, len(lam.parts) + 2):
        try:
            grown = lam.add_box(j)
        except ValueError:
            continue
        assert grown.size == lam.size + 1
        assert grown.contains(lam)


def test_contains():
    assert pt(3, 2).contains(pt(2, 2))
    assert pt(3, 2).contains(pt())
    assert not pt(3, 2).contains(pt(1, 1, 1))
    assert not pt(2).contains(pt(3))


def test_dominance():
    assert dominance_leq(pt(1, 1, 1), pt(3))
    assert dominance_leq(pt(2, 1), pt(3))
    assert dominance_leq(pt(2, 2), pt(3, 1))
    assert not dominance_leq(pt(3), pt(2, 1))
    # different sizes are simply incomparable
    assert not dominance_leq(pt(2), pt(3))


@given(partition_samples, partition_samples)
def test_canonical_order_refines_dominance(lam, mu):
    if lam.size != mu.size:
        return
    if dominance_leq(lam, mu) and lam != mu:
        assert mu.sort_key() < lam.sort_key()


def test_parse_and_str():
    assert parse_partition("3,1,1") == pt(3, 1, 1)
    assert parse_partition("") == pt()
    assert str(pt(3, 1, 1)) == "3,1,1"
    assert str(pt()) == ""
    with pytest.raises(ValueError):
        parse_partition("1,2")
    with pytest.raises(ValueError):
        parse_partition("a")
    with pytest.raises(ValueError):
        parse_partition("0")


@given(partition_samples)
def test_json_round_trip(lam):
    assert Partition.from_json(lam.to_json()) == lam


def test_coinvariant_degree_count():
    # the sizes in q_factorial match the coinvariant grading later modules use
    assert q_factorial(4).evaluate(1) == 24
