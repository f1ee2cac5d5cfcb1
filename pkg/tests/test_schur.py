import random
from fractions import Fraction

import pytest

from hooklab.algebra import MPoly, random_fraction, x, y
from hooklab.errors import CutoffTooSmall, UnfailingArray
from hooklab.excitations import enumerate_excitations, excitation_weight
from hooklab.partitions import partitions_in_box, subpartitions, young_diagram
from hooklab.schur import (
    Flagging,
    TwistedArray,
    check_h_recursions,
    check_twisted_cancellation,
    enumerate_twisted_arrays,
    flip,
    h_poly,
    h_window,
    is_legitimate,
    jt_general_det,
    jt_general_sum,
    jt_matrix_spec,
    konvalinka_check,
    konvalinka_variant_check,
    s_poly_via_det,
    s_poly_via_excitations,
    s_poly_via_fssyt,
    sigma_row_lengths,
    u_from_xy,
)
from hooklab.algebra import det
from hooklab.partitions import part


class TestHPoly:
    def test_trivial_values(self):
        assert h_poly(0, 3, -2) == 1
        assert h_poly(-1, 3, 0) == 0
        assert h_poly(2, 0, 1) == 0
        assert h_poly(0, 0, 5) == 1

    def test_closed_form_h1(self):
        for b in range(0, 5):
            for c in range(-3, 4):
                expected = sum((x(i) for i in range(1, b + 1)), MPoly.zero()) + sum(
                    (y(j) for j in range(c + 1, c + b + 1)), MPoly.zero()
                )
                assert h_poly(1, b, c) == expected

    def test_monomial_degrees(self):
        for (a, b, c) in [(2, 2, 0), (3, 2, -1), (4, 3, -2)]:
            p = h_poly(a, b, c)
            assert all(sum(e for _, e in m) == a for m in p.terms())

    def test_recursion_base_case(self):
        # a=0, b=1, c=0: 1 = (x_1 + y_0) * 0 + 1
        assert h_poly(0, 1, 0) == (x(1) + y(0)) * h_poly(-1, 1, 0) + h_poly(0, 0, 0)

    def test_shift_c_small(self):
        # (a,b,c) = (1,1,0): h(1,1,0) - h(1,1,-1) = y_1
        assert h_poly(1, 1, 0) - h_poly(1, 1, -1) == y(1)

    def test_grid(self):
        reports = check_h_recursions(4, 3, (-3, 3))
        assert all(r.status == "pass" for r in reports)


class TestSchurRoutes:
    def test_expanded_example(self):
        # lam=(3,3,1) with the two-box inner shape: the 12-term expansion
        lam, mu = (3, 3, 1), (2,)
        expected = (
            (x(1) + y(1)) * (x(1) + y(2))
            + (x(1) + y(1)) * (x(2) + y(3))
            + (x(2) + y(2)) * (x(2) + y(3))
        )
        assert len(expected.terms()) == 12
        assert s_poly_via_excitations(lam, mu) == expected
        assert s_poly_via_fssyt(lam, mu) == expected
        assert s_poly_via_det(lam, mu, 1) == expected
        assert s_poly_via_det(lam, mu, 3) == expected

    def test_single_box_inner(self):
        lam = (3, 3, 1)
        expected = (x(1) + y(1)) + (x(2) + y(2))
        assert s_poly_via_excitations(lam, (1,)) == expected

    def test_equal_shapes(self):
        lam = (2, 2)
        assert s_poly_via_excitations(lam, lam) == excitation_weight(young_diagram(lam))

    def test_not_contained_is_zero(self):
        assert s_poly_via_excitations((2, 1), (3,)).is_zero

    def test_det_route_trivial(self):
        assert s_poly_via_det((3, 1), (), 1) == 1
        assert s_poly_via_det((3, 1), (), 0) == 1

    def test_det_route_two_excitations(self):
        assert s_poly_via_det((3, 2), (1,), 2) == (x(1) + y(1)) + (x(2) + y(2))

    def test_cutoff_too_small(self):
        with pytest.raises(CutoffTooSmall):
            s_poly_via_det((3, 2), (1, 1), 1)

    def test_triple_agreement_3x3(self):
        for lam in partitions_in_box(3, 3):
            for mu in subpartitions(lam):
                a = s_poly_via_excitations(lam, mu)
                assert a == s_poly_via_fssyt(lam, mu)
                assert a == s_poly_via_det(lam, mu)


class TestGeneralJT:
    def test_recovers_tableau_weights(self):
        mu = (2, 1)
        b = Flagging(prefix=(2, 3), tail="constant")
        assert jt_general_sum(mu, b, u_from_xy, 2) == jt_general_det(mu, b, u_from_xy, 2)

    def test_empty_shape(self):
        b = Flagging(prefix=(3,), tail="constant")
        assert jt_general_sum((), b, u_from_xy, 0) == 1
        assert jt_general_det((), b, u_from_xy, 0) == 1

    def test_random_rational_u(self):
        rng = random.Random(17)
        mu = (2, 1)
        b = Flagging(prefix=(1, 2), tail="constant")
        u = {}
        for i in range(1, 4):
            for d in range(-4, 4):
                u[(i, d)] = MPoly.const(random_fraction(rng))
        assert jt_general_sum(mu, b, u, 2) == jt_general_det(mu, b, u, 2)

    def test_h_window_matches_h_poly(self):
        # with u = x_i + y_{i+d} the windowed sums are the h-polynomials
        for b in range(0, 4):
            for q in range(-1, 4):
                for d in range(-2, 3):
                    assert h_window(u_from_xy, b, q, d) == h_poly(q, b, 1 - d)


class TestTwistedArrays:
    def test_legitimacy_example(self):
        mu = (4, 2, 1)
        assert not is_legitimate((3, 2, 1), mu)
        assert not is_legitimate((3, 1, 2), mu)
        for sigma in [(1, 2, 3), (2, 1, 3), (1, 3, 2), (2, 3, 1)]:
            assert is_legitimate(sigma, mu)

    def test_row_lengths(self):
        mu = (4, 2, 1)
        assert sigma_row_lengths((2, 1, 3), mu) == (1, 5, 1)
        assert sigma_row_lengths((2, 3, 1), mu) == (1, 0, 6)

    def test_trivial_enumerations(self):
        b = Flagging(prefix=(1,), tail="constant")
        assert len(enumerate_twisted_arrays((), b, 0)) == 1
        assert len(enumerate_twisted_arrays((1,), b, 1)) == 1

    def test_weight_monomial(self):
        # a/bcdef/g with diagonals 0 / -1..3 / -2
        arr = TwistedArray(sigma=(2, 1, 3), rows=((1,), (1, 2, 2, 3, 4), (2,)))
        assert arr.weight_monomial() == tuple(
            sorted([(1, 0), (1, -1), (2, 0), (2, 1), (3, 2), (4, 3), (2, -2)])
        )

    def test_all_arrays_are_valid(self):
        mu = (2, 1)
        b = Flagging(prefix=(2, 2, 2), tail="constant")
        arrays = enumerate_twisted_arrays(mu, b, 3)
        assert all(a.validate(mu, b) for a in arrays)


class TestFlip:
    SIGMA = (1, 2, 5, 4, 3)  # swaps 3 and 5 in S_5; mu = (4,4,3,3,3)

    def test_failure_classification_worked_example(self):
        arr = TwistedArray(
            sigma=self.SIGMA,
            rows=((1, 2, 3, 5), (2, 2, 4, 4), (5,), (6, 8, 9), (7, 9, 9, 9, 9)),
        )
        assert sorted(arr.failures()) == [
            (2, 2), (2, 4), (4, 2), (4, 3), (5, 3), (5, 4), (5, 5)
        ]
        assert arr.bottommost_leftmost_failure() == (4, 2)

    def test_flip_a(self):
        arr = TwistedArray(
            sigma=self.SIGMA,
            rows=((1, 2, 2, 3), (1, 2, 4, 4), (5,), (6, 8, 9), (6, 9, 9, 9, 9)),
        )
        assert arr.bottommost_leftmost_failure() == (5, 1)
        out = flip(arr)
        assert out.sigma == (1, 2, 5, 3, 4)
        assert out.rows == ((1, 2, 2, 3), (1, 2, 4, 4), (5,), (9, 9, 9, 9), (6, 6, 8, 9))
        assert out.bottommost_leftmost_failure() == (5, 1)

    def test_flip_b_empty_top_floor(self):
        arr = TwistedArray(
            sigma=self.SIGMA,
            rows=((1, 2, 2, 3), (2, 2, 4, 4), (5,), (6, 8, 9), (7, 9, 9, 9, 9)),
        )
        assert arr.bottommost_leftmost_failure() == (4, 2)
        out = flip(arr)
        assert out.sigma == (1, 2, 4, 5, 3)
        assert out.rows == ((1, 2, 2, 3), (2, 2, 4, 4), (5, 9), (6, 8), (7, 9, 9, 9, 9))

    def test_flip_c_empty_bottom_floor(self):
        arr = TwistedArray(
            sigma=self.SIGMA,
            rows=((1, 2, 2, 4), (2, 3, 3, 3), (2,), (3, 4, 7), (4, 6, 6, 6, 7)),
        )
        assert arr.bottommost_leftmost_failure() == (3, 1)
        out = flip(arr)
        assert out.sigma == (1, 5, 2, 4, 3)
        assert out.rows == ((1, 2, 2, 4), (), (2, 2, 3, 3, 3), (3, 4, 7), (4, 6, 6, 6, 7))

    def test_flip_properties_exhaustive(self):
        mu = (2, 1)
        b = Flagging(prefix=(2, 2, 2), tail="constant")
        seen_failing = 0
        for arr in enumerate_twisted_arrays(mu, b, 3):
            c = arr.bottommost_leftmost_failure()
            if c is None:
                continue
            seen_failing += 1
            out = flip(arr)
            assert out.validate(mu, b)
            assert flip(out) == arr
            assert out.sign() == -arr.sign()
            assert out.weight_monomial() == arr.weight_monomial()
            assert out.bottommost_leftmost_failure() == c
        assert seen_failing > 0

    def test_flip_unfailing_raises(self):
        arr = TwistedArray(sigma=(1, 2), rows=((1, 1), (2,)))
        assert arr.bottommost_leftmost_failure() is None
        with pytest.raises(UnfailingArray):
            flip(arr)

    def test_cancellation_small(self):
        for mu in [(2, 1), (2, 2), (3, 1)]:
            b = Flagging(prefix=(2, 3), tail="constant")
            report = check_twisted_cancellation(mu, b, 2)
            assert report.status == "pass", report.witness


class TestJTMatrixSpec:
    def test_shapes_and_dets(self):
        lam, mu = (3, 2), (1,)
        n = 3
        spec = jt_matrix_spec(lam, mu, n)
        assert set(spec.u) == {(i, j) for i in range(1, n + 1) for j in range(1, n + 2)}
        m = [[spec.u[(i, j)] for j in range(1, n + 1)] for i in range(1, n + 1)]
        assert det(m) == s_poly_via_excitations(lam, mu)
        # dropping the last row and column preserves the determinant
        m2 = [row[: n - 1] for row in m[: n - 1]]
        assert det(m2) == s_poly_via_excitations(lam, mu)

    def test_cover_sum_via_shifted_det(self):
        # sum of covers = det with last column shifted minus (sum p) * s
        from hooklab.partitions import cover_extensions

        lam, mu = (3, 2), (1,)
        n = 3
        spec = jt_matrix_spec(lam, mu, n)
        shifted = [
            [spec.u[(i, j + (1 if j == n else 0))] for j in range(1, n + 1)]
            for i in range(1, n + 1)
        ]
        s_mu = s_poly_via_excitations(lam, mu)
        rhs = det(shifted) - sum(spec.p, MPoly.zero()) * s_mu
        lhs = MPoly.zero()
        for nu in cover_extensions(mu, lam):
            lhs = lhs + s_poly_via_excitations(lam, nu)
        assert lhs == rhs


class TestKonvalinka:
    def test_single_box(self):
        report = konvalinka_check((1,), ())
        assert report.status == "pass"
        # the coefficient here is x_1 + y_1 and s_(1)[(1)] = x_1 + y_1
        assert s_poly_via_excitations((1,), (1,)) == x(1) + y(1)

    def test_box_3x3(self):
        for lam in partitions_in_box(3, 3):
            for mu in subpartitions(lam):
                assert konvalinka_check(lam, mu).status == "pass"

    def test_degenerate_equal_shapes(self):
        # both sides vanish: every l_k lies in Delta(mu) when mu = lam
        report = konvalinka_check((2, 1), (2, 1))
        assert report.status == "pass"

    def test_variant_matches(self):
        for lam, mu in [((1,), ()), ((3, 2), (1,)), ((4, 4, 3), (3, 1))]:
            assert konvalinka_variant_check(lam, mu).status == "pass"

    def test_variant_explicit_cutoff(self):
        assert konvalinka_variant_check((3, 2), (1,), 3).status == "pass"
        assert konvalinka_variant_check((4, 4, 3), (3, 1), 4).status == "pass"
