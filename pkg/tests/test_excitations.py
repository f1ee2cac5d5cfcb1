import pytest

from hooklab.algebra import MPoly, x, y
from hooklab.errors import MoveBlocked, NonpositiveBox, NotAnExcitation, NotSemistandard
from hooklab.excitations import (
    enumerate_excitations,
    excitation_of_tableau,
    excitation_weight,
    excited_move,
    tableau_of_excitation,
    weight_factors,
)
from hooklab.partitions import partitions_in_box, subpartitions, young_diagram
from hooklab.tableaux import Tableau, enumerate_fssyt, enumerate_ssyt, induced_flagging

PAPER_SEVEN = [
    {(1, 1), (1, 2), (1, 3), (2, 1)},
    {(1, 1), (1, 2), (1, 3), (3, 2)},
    {(1, 1), (1, 2), (2, 4), (2, 1)},
    {(1, 1), (1, 2), (2, 4), (3, 2)},
    {(1, 1), (2, 3), (2, 4), (2, 1)},
    {(1, 1), (2, 3), (2, 4), (3, 2)},
    {(2, 2), (2, 3), (2, 4), (3, 2)},
]


class TestExcitedMove:
    def test_paper_move(self):
        d = frozenset({(1, 1), (1, 3), (2, 1)})
        assert excited_move(d, (1, 3)) == frozenset({(1, 1), (2, 4), (2, 1)})

    def test_paper_blocked(self):
        d = frozenset({(1, 1), (1, 3), (2, 1)})
        with pytest.raises(MoveBlocked):
            excited_move(d, (1, 1))

    def test_absent_box(self):
        with pytest.raises(MoveBlocked):
            excited_move(frozenset({(1, 1)}), (2, 2))

    def test_single_box(self):
        assert excited_move(frozenset({(1, 1)}), (1, 1)) == frozenset({(2, 2)})


class TestExcitationSet:
    def test_paper_census(self):
        got = enumerate_excitations((4, 4, 3), (3, 1))
        assert len(got) == 7
        assert sorted(got) == sorted(frozenset(e) for e in PAPER_SEVEN)

    def test_small(self):
        assert sorted(enumerate_excitations((3, 2), (1,))) == [
            frozenset({(1, 1)}),
            frozenset({(2, 2)}),
        ]

    def test_three_diagrams(self):
        got = enumerate_excitations((3, 3, 1), (2,))
        assert sorted(got) == [
            frozenset({(1, 1), (1, 2)}),
            frozenset({(1, 1), (2, 3)}),
            frozenset({(2, 2), (2, 3)}),
        ]

    def test_straight(self):
        assert enumerate_excitations((3, 2, 1), ()) == [frozenset()]

    def test_equal(self):
        lam = (3, 2)
        assert enumerate_excitations(lam, lam) == [young_diagram(lam)]

    def test_not_contained(self):
        assert enumerate_excitations((2, 1), (3,)) == []

    def test_size_and_diagonal_conservation(self):
        lam, mu = (4, 4, 3), (3, 1)
        mu_diag = sorted(j - i for (i, j) in young_diagram(mu))
        for e in enumerate_excitations(lam, mu):
            assert len(e) == 4
            assert sorted(j - i for (i, j) in e) == mu_diag


class TestTableauCorrespondence:
    def test_paper_forward(self):
        t = Tableau.from_rows([[1, 1, 2, 3], [2, 3], [4]])
        assert excitation_of_tableau(t) == frozenset(
            {(1, 1), (1, 2), (2, 4), (3, 6), (2, 1), (3, 3), (4, 2)}
        )

    def test_minimal_is_identity(self):
        mu = (3, 2)
        t = Tableau({(i, j): i for (i, j) in young_diagram(mu)})
        assert excitation_of_tableau(t) == young_diagram(mu)
        assert tableau_of_excitation(young_diagram(mu), mu) == t

    def test_single_box_inverse(self):
        t = tableau_of_excitation(frozenset({(2, 2)}), (1,))
        assert t == Tableau({(1, 1): 2})

    def test_paper_pairing(self):
        # the five flagged tableaux for (4,4,3)/(3,2,1) and their diagrams
        pairs = [
            ([[1, 1, 1], [2, 2], [3]], {(1, 1), (1, 2), (1, 3), (2, 1), (2, 2), (3, 1)}),
            ([[1, 1, 1], [2, 3], [3]], {(1, 1), (1, 2), (1, 3), (2, 1), (3, 3), (3, 1)}),
            ([[1, 1, 2], [2, 2], [3]], {(1, 1), (1, 2), (2, 4), (2, 1), (2, 2), (3, 1)}),
            ([[1, 1, 2], [2, 3], [3]], {(1, 1), (1, 2), (2, 4), (2, 1), (3, 3), (3, 1)}),
            ([[1, 2, 2], [2, 3], [3]], {(1, 1), (2, 3), (2, 4), (2, 1), (3, 3), (3, 1)}),
        ]
        for rows, diagram in pairs:
            t = Tableau.from_rows(rows)
            assert excitation_of_tableau(t) == frozenset(diagram)
            assert tableau_of_excitation(frozenset(diagram), (3, 2, 1)) == t

    def test_roundtrip_on_census(self):
        lam, mu = (4, 4, 3), (3, 1)
        for e in enumerate_excitations(lam, mu):
            t = tableau_of_excitation(e, mu)
            assert excitation_of_tableau(t) == e

    def test_not_semistandard(self):
        with pytest.raises(NotSemistandard):
            excitation_of_tableau(Tableau({(1, 1): 2, (2, 1): 2}))
        with pytest.raises(NotSemistandard):
            excitation_of_tableau(Tableau({(1, 2): 1}))  # not a straight shape

    def test_not_an_excitation(self):
        with pytest.raises(NotAnExcitation):
            tableau_of_excitation(frozenset({(1, 2)}), (1,))  # wrong diagonal
        # correct diagonals but rows force a column violation
        with pytest.raises(NotAnExcitation):
            tableau_of_excitation(frozenset({(2, 2), (1, 2)}), (2, 1))


class TestWeights:
    def test_empty_product(self):
        assert excitation_weight(frozenset()) == MPoly.const(1)

    def test_paper_summands(self):
        assert excitation_weight(frozenset({(1, 1), (1, 2)})) == (x(1) + y(1)) * (
            x(1) + y(2)
        )
        assert excitation_weight(frozenset({(2, 2), (2, 3)})) == (x(2) + y(2)) * (
            x(2) + y(3)
        )

    def test_nonpositive_box(self):
        with pytest.raises(NonpositiveBox):
            excitation_weight(frozenset({(0, 1)}))

    def test_hand_expansion(self):
        got = excitation_weight(frozenset({(1, 1), (1, 2)}))
        expected = x(1) * x(1) + x(1) * y(2) + x(1) * y(1) + y(1) * y(2)
        assert got == expected


class TestBijectionSuite:
    def test_cardinalities_3x3(self):
        for lam in partitions_in_box(3, 3):
            for mu in subpartitions(lam):
                excitations = enumerate_excitations(lam, mu)
                flagged = enumerate_fssyt(mu, induced_flagging(lam, mu))
                assert len(excitations) == len(flagged)
                assert {excitation_of_tableau(t) for t in flagged} == set(excitations)

    def test_flag_criterion(self):
        # D(T) lands inside Y(lam) exactly for the induced-flagged tableaux
        lam, mu = (4, 4, 3), (3, 2, 1)
        b = induced_flagging(lam, mu)
        ylam = young_diagram(lam)
        flagged = set(enumerate_fssyt(mu, b))
        for t in enumerate_ssyt(mu, len(lam)):
            inside = excitation_of_tableau(t) <= ylam
            assert inside == (t in flagged)

    def test_weight_transport(self):
        lam, mu = (4, 4, 3), (3, 2, 1)
        for t in enumerate_fssyt(mu, induced_flagging(lam, mu)):
            d = excitation_of_tableau(t)
            direct = MPoly.const(1)
            for (i, j), v in t.items():
                direct = direct * (x(v) + y(v + j - i))
            assert excitation_weight(d) == direct
            assert weight_factors(d) == tuple(
                sorted((v, v + j - i) for (i, j), v in t.items())
            )
