"""Algebra construction: bound quivers, tables, opposites, radicals."""

import pytest

from reflexa.algebra import (
    FiniteDimAlgebra,
    Quiver,
    bound_quiver_algebra,
    from_table,
)
from reflexa.errors import (
    BadIdempotentsError,
    InfiniteDimensionalError,
    NonAssociativeError,
    NotBasicError,
)
from reflexa.fields import FieldSpec
from reflexa.linalg import Matrix

F2 = FieldSpec.prime(2)
F3 = FieldSpec.prime(3)
QQ = FieldSpec.rational()


def kA2(field=F2):
    return bound_quiver_algebra(field, Quiver.make(2, [("a", 0, 1)]), [], name="kA2")


def kx2(field=F2):
    return bound_quiver_algebra(
        field, Quiver.make(1, [("x", 0, 0)]), [["x", "x"]], name="k[x]/(x^2)"
    )


def kx2_table(field=F2):
    # basis {1, x}, x^2 = 0, single idempotent 1
    one, zero = field.one(), field.zero()
    return from_table(
        field,
        ["1", "x"],
        [
            [(one, zero), (zero, one)],
            [(zero, one), (zero, zero)],
        ],
        (one, zero),
        [(one, zero)],
        name="k[x]/(x^2) table",
    )


class TestBoundQuiver:
    def test_a2_basis(self):
        a = kA2()
        assert a.dim == 3
        assert set(a.basis_labels) == {"e0", "e1", "a"}

    def test_loop_with_square_zero(self):
        a = kx2()
        assert a.dim == 2
        assert set(a.basis_labels) == {"e0", "x"}

    def test_free_loop_is_infinite(self):
        with pytest.raises(InfiniteDimensionalError):
            bound_quiver_algebra(F2, Quiver.make(1, [("x", 0, 0)]), [])

    def test_cycle_killed_by_longer_relation(self):
        # loop with x^3 = 0 has basis {e0, x, x^2}
        a = bound_quiver_algebra(F2, Quiver.make(1, [("x", 0, 0)]), [["x", "x", "x"]])
        assert a.dim == 3

    def test_two_loop_infinite_despite_squares(self):
        q = Quiver.make(1, [("x", 0, 0), ("y", 0, 0)])
        with pytest.raises(InfiniteDimensionalError):
            bound_quiver_algebra(F2, q, [["x", "x"], ["y", "y"]])

    def test_relation_length_one_rejected(self):
        with pytest.raises(ValueError):
            bound_quiver_algebra(F2, Quiver.make(1, [("x", 0, 0)]), [["x"]])

    def test_noncomposable_relation_rejected(self):
        q = Quiver.make(3, [("a", 0, 1), ("b", 2, 0)])
        with pytest.raises(ValueError):
            bound_quiver_algebra(F2, q, [["a", "b"]])

    def test_corner_dims_count_paths(self):
        # dim e_j A e_i = number of basis paths from i to j
        a = kA2()
        for i in range(2):
            for j in range(2):
                corner = a._corner_rows(j, i)
                expected = sum(
                    1
                    for (src, tgt, _) in a.presentation.paths
                    if src == i and tgt == j
                )
                assert corner.rows == expected

    def test_commutative_square_with_zero_relation(self):
        q = Quiver.make(4, [("a", 0, 1), ("b", 0, 2), ("c", 1, 3), ("d", 2, 3)])
        a = bound_quiver_algebra(F2, q, [["a", "c"]])
        # 4 trivial + 4 arrows + bd; the composite a*c dies
        assert a.dim == 9


class TestFromTable:
    def test_field_as_algebra(self):
        one = QQ.one()
        a = from_table(QQ, ["1"], [[(one,)]], (one,), [(one,)])
        assert a.dim == 1

    def test_kx2_table_valid(self):
        a = kx2_table(QQ)
        assert a.dim == 2

    def test_claimed_idempotent_x_rejected(self):
        one, zero = F2.one(), F2.zero()
        with pytest.raises(BadIdempotentsError):
            from_table(
                F2,
                ["1", "x"],
                [
                    [(one, zero), (zero, one)],
                    [(zero, one), (one, zero)],  # x*x = 1
                ],
                (one, zero),
                [(zero, one)],  # claims x idempotent, but x^2 = 1 != x
            )

    def test_nonassociative_rejected(self):
        one, zero = F3.one(), F3.zero()
        # u*u = v, u*v = 1, v*u = 0: then (u*u)*u = 0 but u*(u*u) = 1
        e1 = (one, zero, zero)
        eu = (zero, one, zero)
        ev = (zero, zero, one)
        z3 = (zero, zero, zero)
        with pytest.raises(NonAssociativeError):
            from_table(
                F3,
                ["1", "u", "v"],
                [
                    [e1, eu, ev],
                    [eu, ev, e1],
                    [ev, z3, z3],
                ],
                e1,
                [e1],
            )


class TestOpposite:
    def test_commutative_fixed_point(self):
        a = kx2_table(QQ)
        assert a.opposite().mult_table == a.mult_table

    def test_arrow_reversal(self):
        a = kA2()
        opp = a.opposite()
        (arr,) = opp.presentation.quiver.arrows
        assert (arr.source, arr.target) == (1, 0)

    def test_involution(self):
        for alg in (kA2(), kx2(), kx2_table(F3)):
            opp2 = alg.opposite().opposite()
            assert opp2.mult_table == alg.mult_table
            assert opp2.basis_labels == alg.basis_labels
            if alg.presentation is not None:
                assert opp2.presentation == alg.presentation


class TestRadical:
    def test_quiver_radical_is_arrow_span(self):
        a = kA2()
        rad = a.radical_rows()
        assert rad.rows == 1

    def test_table_radical_matches_quiver(self):
        aq = kx2(F2)
        at = kx2_table(F2)
        assert aq.radical_rows().rows == 1
        assert at.radical_rows().rows == 1

    def test_non_basic_table_rejected(self):
        # F2 x F2 presented with the single idempotent 1: semisimple but
        # the corner is 2-dimensional, so the presentation is not basic
        one, zero = F2.one(), F2.zero()
        a = from_table(
            F2,
            ["u", "v"],
            [
                [(one, zero), (zero, zero)],
                [(zero, zero), (zero, one)],
            ],
            (one, one),
            [(one, one)],
        )
        with pytest.raises(NotBasicError):
            a.radical_rows()
        assert not a.is_basic()

    def test_rational_table_radical(self):
        at = kx2_table(QQ)
        rad = at.radical_rows()
        assert rad.rows == 1
        assert rad.entries[0] == (QQ.zero(), QQ.one())


class TestGenerators:
    def test_expressions_reconstruct_basis(self):
        for alg in (kA2(), kx2(), kx2_table(F3)):
            gens = alg.generators()
            exprs = alg.expressions()
            for bi in range(alg.dim):
                idem_coeffs, word_terms = exprs[bi]
                vec = [alg.field.zero()] * alg.dim
                for v, c in enumerate(idem_coeffs):
                    if c:
                        vec = [
                            alg.field.add(x, alg.field.mul(c, e))
                            for x, e in zip(vec, alg.idempotents[v])
                        ]
                for word, c in word_terms:
                    elem = gens[word[0]].element
                    for gi in word[1:]:
                        elem = alg.elem_mul(gens[gi].element, elem)
                    vec = [
                        alg.field.add(x, alg.field.mul(c, w)) for x, w in zip(vec, elem)
                    ]
                assert tuple(vec) == alg.basis_vec(bi)

    def test_generator_blocks(self):
        a = kA2()
        (g,) = a.generators()
        assert (g.source, g.target) == (0, 1)
