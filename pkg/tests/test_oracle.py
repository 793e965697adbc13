"""Brute-force placement oracles and the census diff harness."""

import random
from fractions import Fraction

import pytest

from nrgit import (
    Divisor,
    EnvParams,
    EnvPoint,
    GroupKind,
    LinParam,
    Status,
    census_size_formula,
    classify_borel,
    classify_sl2,
    classify_unipotent,
    diff_report,
    embed_divisor,
    enumerate_env_points,
    enumerate_profiles,
    group_status,
    moves_for,
    partition_count,
    torus_case_status,
    unipotent_case_status,
    worst_case_status,
)

from helpers import lin_for, tau_grid


class TestCensus:
    def test_partition_counts(self):
        got = [partition_count(k) for k in range(13)]
        assert got == [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77]

    def test_size_formula(self):
        assert census_size_formula(1) == 3
        assert census_size_formula(2) == 7
        assert census_size_formula(4) == 26
        assert census_size_formula(8) == 187

    def test_degree_two_census_explicitly(self):
        want = {
            Divisor(2, 0, 0, (1, 1)),
            Divisor(2, 0, 0, (2,)),
            Divisor(2, 1, 0, (1,)),
            Divisor(2, 0, 1, (1,)),
            Divisor(2, 1, 1, ()),
            Divisor(2, 2, 0, ()),
            Divisor(2, 0, 2, ()),
        }
        assert set(enumerate_profiles(2)) == want

    def test_census_complete_and_distinct(self):
        for n in range(1, 13):
            census = enumerate_profiles(n)
            assert len(census) == census_size_formula(n)
            assert len(set(census)) == len(census)
            assert all(d.n == n for d in census)

    def test_swap_of_special_slots_is_an_involution(self):
        for n in range(1, 9):
            census = set(enumerate_profiles(n))
            for d in census:
                assert Divisor(n, d.mult_zero, d.mult_inf, d.generic) in census

    def test_guard(self):
        with pytest.raises(ValueError, match="guard"):
            enumerate_profiles(13)
        assert len(enumerate_profiles(13, max_n=13)) == census_size_formula(13)


class TestMoveSets:
    def test_torus_only_is_identity(self):
        p = embed_divisor(Divisor(3, 1, 0, (2,)))
        ms = moves_for(GroupKind.TORUS_ONLY, p)
        assert ms.moves == (p,)

    def test_borel_moves_require_embedded_shape(self):
        with pytest.raises(ValueError):
            moves_for(GroupKind.BOREL, EnvPoint({0}, Divisor(3, 1, 0, (2,))))

    def test_borel_moves_fix_infinity_mass(self):
        d = Divisor(4, 1, 0, (2, 1))
        for q in moves_for(GroupKind.BOREL, embed_divisor(d)).moves:
            assert q.divisor.mult_inf == 1
            assert q.v_support == {0, 1}
            assert q.marked_mult == 1

    def test_full_group_moves_cover_both_markings(self):
        d = Divisor(4, 1, 0, (2, 1))
        sups = {frozenset(q.v_support) for q in
                moves_for(GroupKind.FULL_ENVELOPE_GROUP, embed_divisor(d)).moves}
        assert frozenset({0, 1}) in sups
        assert frozenset({0, 2}) in sups

    def test_second_layer_composition_adds_nothing(self):
        # worst status over moves == worst over moves-of-moves: the move set
        # is closed enough that one layer already realises the group orbit
        rng = random.Random(20240814)
        params = EnvParams(5, LinParam(1, 2))
        pts = [embed_divisor(d) for d in enumerate_profiles(5)]
        for d0 in rng.sample(pts, 12):
            for kind in (GroupKind.FULL_ENVELOPE_GROUP, GroupKind.UNIPOTENT_ENVELOPE):
                first = moves_for(kind, d0).moves
                if kind is GroupKind.UNIPOTENT_ENVELOPE:
                    score = lambda q: unipotent_case_status(q, 5)
                else:
                    score = lambda q: torus_case_status(q, params)
                one = min(score(q) for q in first)
                two = min(
                    score(q2) for q in first for q2 in moves_for(kind, q).moves
                )
                assert one is two


class TestWorstCaseStatus:
    def test_borel_oracle_matches_closed_form(self):
        for n in range(1, 7):
            census = enumerate_profiles(n)
            for tau in tau_grid(n):
                lin = lin_for(tau)
                for d in census:
                    assert worst_case_status(d, lin, GroupKind.BOREL) is classify_borel(d, lin)

    def test_full_group_oracle_matches_closed_form(self):
        for n in range(1, 6):
            for tau in (Fraction(0), Fraction(1, 2), Fraction(n), Fraction(n + 1)):
                lin = lin_for(tau)
                params = EnvParams(n, lin)
                for d in enumerate_profiles(n):
                    assert (
                        worst_case_status(d, lin, GroupKind.FULL_ENVELOPE_GROUP)
                        is group_status(embed_divisor(d), params)
                    )

    def test_unipotent_oracle_matches_closed_form(self):
        for n in range(1, 7):
            for d in enumerate_profiles(n):
                assert worst_case_status(d, None, GroupKind.UNIPOTENT_ENVELOPE) is classify_unipotent(d)

    def test_sl2_closed_form_against_placement_scan(self):
        # SL(2) baseline has no completion factor: scan placements directly
        from nrgit.oracle import _sl2_placement_status

        for n in range(1, 9):
            for d in enumerate_profiles(n):
                assert _sl2_placement_status(d) is classify_sl2(d)

    def test_lin_required_for_torus_scores(self):
        with pytest.raises(ValueError, match="linearisation"):
            worst_case_status(Divisor(3, 1, 0, (2,)), None, GroupKind.BOREL)


class TestDiffReport:
    def test_clean_on_small_grid(self):
        for n in (1, 2, 3):
            for m in (1, 2, 3):
                for r in range(-n * m - 1, n * m + 2):
                    rep = diff_report(n, LinParam(m, r))
                    assert rep.ok, rep.rows[:3]
                    assert rep.checked >= len(enumerate_profiles(n))

    def test_clean_at_representative_slopes_degree_four(self):
        for tau in (Fraction(-1), Fraction(0), Fraction(1), Fraction(3, 2),
                    Fraction(2), Fraction(7, 2), Fraction(4), Fraction(5)):
            assert diff_report(4, lin_for(tau)).ok

    def test_clean_sample_degree_five(self):
        for tau in (Fraction(0), Fraction(1), Fraction(5, 2)):
            assert diff_report(5, lin_for(tau)).ok

    def test_clean_degree_eight_spot(self):
        assert diff_report(8, LinParam(1, 2)).ok
        assert diff_report(8, LinParam(2, 5)).ok

    def test_broken_classifier_is_caught_and_named(self):
        def off_by_one(d, lin):
            s = classify_borel(d, lin)
            return Status(min(2, s + 1)) if s < 2 else Status.UNSTABLE

        rep = diff_report(3, LinParam(1, 1), classify_borel_fn=off_by_one)
        assert not rep.ok
        assert any("borel" in row.check for row in rep.rows)
        subjects = {row.subject for row in rep.rows}
        assert any(str(d) in subjects for d in enumerate_profiles(3))
