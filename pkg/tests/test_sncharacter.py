"""Symmetric group characters, induction, Molien multiplicities."""

from fractions import Fraction

import pytest

from symq.partition import Partition, partitions
from symq.qcoeff import QPoly, QRat
from symq.sncharacter import (
    GradedCharacter,
    char_table,
    chi,
    decompose,
    frobenius0,
    induce_product,
    inner,
    irreducible,
    molien_mult,
    restrict_class_function,
    restrict_graded,
)


def pt(*parts):
    return Partition(tuple(parts))


# column order is canonical: (n) first, (1^n) last
S3_TABLE = {
    pt(3): {pt(3): 1, pt(2, 1): 1, pt(1, 1, 1): 1},
    pt(2, 1): {pt(3): -1, pt(2, 1): 0, pt(1, 1, 1): 2},
    pt(1, 1, 1): {pt(3): 1, pt(2, 1): -1, pt(1, 1, 1): 1},
}


def test_s3_character_table():
    for lam, row in S3_TABLE.items():
        for mu, value in row.items():
            assert chi(lam, mu) == value


def test_s4_hook_and_square_rows():
    # classes in canonical order: (4), (3,1), (2,2), (2,1,1), (1,1,1,1)
    expect = {
        pt(2, 2): {pt(4): 0, pt(3, 1): -1, pt(2, 2): 2, pt(2, 1, 1): 0, pt(1, 1, 1, 1): 2},
        pt(2, 1, 1): {pt(4): 1, pt(3, 1): 0, pt(2, 2): -1, pt(2, 1, 1): -1, pt(1, 1, 1, 1): 3},
    }
    for lam, row in expect.items():
        for mu, value in row.items():
            assert chi(lam, mu) == value


def test_trivial_and_sign():
    for n in range(1, 7):
        for mu in partitions(n):
            assert chi(pt(n), mu) == 1
            assert chi(pt(*([1] * n)), mu) == (-1) ** (n - len(mu.parts))


def test_size_mismatch_rejected():
    with pytest.raises(ValueError):
        chi(pt(2), pt(1, 1, 1))


def test_dimensions_square_sum():
    for n in range(1, 8):
        table = char_table(n)
        fact = 1
        for i in range(2, n + 1):
            fact *= i
        assert sum(table.dim(lam) ** 2 for lam in table.labels) == fact


def test_row_orthogonality():
    for n in range(1, 7):
        for lam in partitions(n):
            for mu in partitions(n):
                got = inner(irreducible(lam), irreducible(mu))
                assert got == (QRat.one() if lam == mu else QRat.zero())


def test_column_orthogonality():
    for n in range(1, 7):
        table = char_table(n)
        for mu in partitions(n):
            for nu in partitions(n):
                acc = sum(table.chi(lam, mu) * table.chi(lam, nu) for lam in table.labels)
                assert acc == (mu.z_stat() if mu == nu else 0)


def test_class_function_arithmetic():
    f = irreducible(pt(2, 1))
    g = irreducible(pt(3))
    s = f + g
    assert s(pt(1, 1, 1)) == QRat.from_int(3)
    doubled = f * QRat.from_int(2)
    assert doubled(pt(1, 1, 1)) == QRat.from_int(4)
    with pytest.raises(ValueError):
        f(pt(1, 1))


def test_restrict_branching():
    # standard of S_3 restricts to trivial + sign of S_2
    vals = restrict_class_function(irreducible(pt(2, 1)))
    assert vals(pt(2)) == QRat.zero()
    assert vals(pt(1, 1)) == QRat.from_int(2)
    gc = GradedCharacter(3, {pt(2, 1): QRat.one()})
    down = restrict_graded(gc)
    assert down.get(pt(2)) == QRat.one()
    assert down.get(pt(1, 1)) == QRat.one()


def test_restrict_graded_multiplicity_free_rows():
    for n in range(2, 6):
        for lam in partitions(n):
            down = restrict_graded(GradedCharacter(n, {lam: QRat.one()}))
            shapes = {lam.remove_box(j) for j in lam.removable_rows()}
            assert {mu for mu, c in down.mult.items() if not c.is_zero()} == shapes
            for mu in shapes:
                assert down.get(mu) == QRat.one()


def test_induce_product_dimensions():
    for k in range(1, 4):
        for m in range(1, 4):
            for lam in partitions(k):
                for mu in partitions(m):
                    ind = induce_product(irreducible(lam), irreducible(mu))
                    n = k + m
                    dim = ind(pt(*([1] * n)))
                    binom = 1
                    for i in range(1, k + 1):
                        binom = binom * (n - i + 1) // i
                    d1 = chi(lam, pt(*([1] * k)))
                    d2 = chi(mu, pt(*([1] * m)))
                    assert dim == QRat.from_int(binom * d1 * d2)


def test_pieri_decomposition_of_induction():
    f, g = irreducible(pt(2)), irreducible(pt(1))
    ind = induce_product(f, g)
    assert decompose(ind).mult == {pt(3): QRat.one(), pt(2, 1): QRat.one()}


def test_frobenius0_of_irreducible_is_schur():
    for n in range(1, 5):
        for lam in partitions(n):
            f = frobenius0(irreducible(lam))
            assert f.basis == "s"
            assert f.terms == {lam: QRat.one()}


def test_molien_trivial_of_s2():
    # graded multiplicity of the trivial rep in C[x, y]: 1/((1-q)(1-q^2))
    expect = QRat(QPoly.one(),
                  (QPoly.one() - QPoly.q()) * (QPoly.one() - QPoly.monomial(2)))
    assert molien_mult(pt(2), pt(2)) == expect


def test_molien_sign_of_s2():
    # sign appears first in degree 1 via x - y
    expect = QRat(QPoly.q(),
                  (QPoly.one() - QPoly.q()) * (QPoly.one() - QPoly.monomial(2)))
    assert molien_mult(pt(2), pt(1, 1)) == expect


def test_molien_symmetry():
    for n in range(1, 5):
        for lam in partitions(n):
            for mu in partitions(n):
                assert molien_mult(lam, mu) == molien_mult(mu, lam)


def test_molien_hilbert_series():
    # dim-weighted multiplicities in the untwisted polynomial ring add up to
    # the number of monomials in each degree
    from math import comb

    n, k = 3, 7
    one_col = pt(*([1] * n))
    hilb = [Fraction(0)] * k
    for lam in partitions(n):
        dim_lam = chi(lam, one_col)
        pre = molien_mult(pt(n), lam).series_prefix(k)
        for d in range(k):
            hilb[d] += dim_lam * pre.coeff(d)
    for d in range(k):
        assert hilb[d] == comb(d + n - 1, n - 1)
