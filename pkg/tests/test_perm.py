"""Inversion sets and the permutation lattice."""

import itertools

import pytest

from helpers import all_inversion_sets, brute_covers_up, brute_join, brute_meet
from permutamari.perm import (
    InversionSet,
    Permutation,
    bottom,
    covers_up,
    enumerate_inversion_sets,
    inversions,
    join,
    meet,
    rank,
    realize,
    top,
    validate_inversion_set,
)


def inv(*word):
    return inversions(Permutation(word))


class TestInversions:
    def test_identity_has_none(self):
        assert inv(1, 2, 3).pairs == frozenset()

    def test_reversal_has_all(self):
        assert inv(3, 2, 1).pairs == {(3, 2), (3, 1), (2, 1)}

    def test_direct_scan(self):
        assert inv(2, 3, 1, 4).pairs == {(2, 1), (3, 1)}

    def test_results_are_valid(self):
        for n in range(1, 6):
            for p in itertools.permutations(range(1, n + 1)):
                a = inversions(p)
                assert validate_inversion_set(a.pairs, n)


class TestValidate:
    def test_i2_failure(self):
        verdict = validate_inversion_set({(3, 1)}, 3)
        assert not verdict
        assert verdict.axiom == "I2"
        assert verdict.witness == (3, 1, 2)

    def test_i1_failure(self):
        verdict = validate_inversion_set({(2, 1), (3, 2)}, 3)
        assert not verdict
        assert verdict.axiom == "I1"
        assert verdict.witness == ((3, 2), (2, 1))
        assert "(3,1)" in verdict.message

    def test_full_set_valid(self):
        assert validate_inversion_set({(3, 2), (3, 1), (2, 1)}, 3)

    def test_malformed_pair_rejected(self):
        with pytest.raises(ValueError, match="out of range"):
            validate_inversion_set({(1, 3)}, 3)
        with pytest.raises(ValueError, match="out of range"):
            validate_inversion_set({(4, 1)}, 3)

    def test_valid_iff_realizable(self):
        # over every subset of the full pair set for n <= 4
        for n in range(1, 5):
            realizable = {a.bits for a in all_inversion_sets(n)}
            all_pairs = [(a, b) for a in range(2, n + 1) for b in range(1, a)]
            for r in range(len(all_pairs) + 1):
                for subset in itertools.combinations(all_pairs, r):
                    verdict = validate_inversion_set(subset, n)
                    realized = InversionSet(n, 0) if not subset else None
                    bits = sum(1 << ((a - 1) * (a - 2) // 2 + b - 1) for a, b in subset)
                    assert bool(verdict) == (bits in realizable)

    def test_all_of_s5_validates(self):
        for a in enumerate_inversion_sets(5):
            assert validate_inversion_set(a.pairs, 5)


class TestRealize:
    def test_empty(self):
        assert realize(set(), 3) == Permutation((1, 2, 3))

    def test_full(self):
        assert realize({(3, 2), (3, 1), (2, 1)}, 3) == Permutation((3, 2, 1))

    def test_insertion_example(self):
        assert realize({(2, 1), (3, 1)}, 4) == Permutation((2, 3, 1, 4))

    def test_rejects_with_diagnostic(self):
        with pytest.raises(ValueError, match=r"\(I2\).*a=3, b=1, c=2"):
            realize({(3, 1)}, 3)
        with pytest.raises(ValueError, match=r"\(I1\)"):
            realize({(2, 1), (3, 2)}, 3)

    def test_roundtrip_small(self):
        for n in range(1, 6):
            for p in itertools.permutations(range(1, n + 1)):
                p = Permutation(p)
                assert realize(inversions(p)) == p


class TestJoin:
    def test_example(self):
        a = InversionSet.from_pairs(3, {(2, 1)})
        b = InversionSet.from_pairs(3, {(3, 2)})
        assert join(a, b).pairs == {(2, 1), (3, 2), (3, 1)}

    def test_identity_and_idempotence(self):
        for a in enumerate_inversion_sets(4):
            assert join(a, bottom(4)) == a
            assert join(a, a) == a

    def test_is_least_upper_bound(self):
        for n in range(1, 5):
            universe = all_inversion_sets(n)
            for a, b in itertools.product(universe, repeat=2):
                assert join(a, b) == brute_join(a, b, universe)

    def test_mismatched_n(self):
        with pytest.raises(ValueError, match="mismatch"):
            join(bottom(3), bottom(4))


class TestMeet:
    def test_intersection_is_not_meet(self):
        a = InversionSet.from_pairs(3, {(3, 1), (3, 2)})
        b = InversionSet.from_pairs(3, {(3, 1), (2, 1)})
        assert meet(a, b) == bottom(3)
        assert not validate_inversion_set({(3, 1)}, 3)

    def test_with_top(self):
        for a in enumerate_inversion_sets(4):
            assert meet(a, top(4)) == a

    def test_comparable_pair(self):
        a = InversionSet.from_pairs(3, {(2, 1)})
        b = top(3)
        assert meet(a, b) == a

    def test_is_greatest_lower_bound(self):
        for n in range(1, 5):
            universe = all_inversion_sets(n)
            for a, b in itertools.product(universe, repeat=2):
                assert meet(a, b) == brute_meet(a, b, universe)

    def test_complement_is_reversal(self):
        for p in itertools.permutations(range(1, 6)):
            assert inversions(p).complement() == inversions(tuple(reversed(p)))


class TestCovers:
    def test_bottom_atoms(self):
        assert [c.pairs for c in covers_up(bottom(3))] == [
            frozenset({(2, 1)}),
            frozenset({(3, 2)}),
        ]

    def test_top_has_none(self):
        assert covers_up(top(3)) == []

    def test_single_inversion(self):
        (c,) = covers_up(InversionSet.from_pairs(3, {(2, 1)}))
        assert c.pairs == {(2, 1), (3, 1)}

    def test_matches_brute_force(self):
        for n in range(1, 5):
            universe = all_inversion_sets(n)
            for a in universe:
                got = sorted(covers_up(a), key=lambda c: c.bits)
                assert got == brute_covers_up(a, universe)

    def test_adds_one_pair_and_counts_ascents(self):
        for a in enumerate_inversion_sets(5):
            word = realize(a).entries
            ascents = sum(1 for i in range(4) if word[i] < word[i + 1])
            cs = covers_up(a)
            assert len(cs) == ascents
            for c in cs:
                assert rank(c) == rank(a) + 1
                assert rank(join(a, c)) == rank(a) + 1


class TestRank:
    def test_examples(self):
        assert rank(bottom(5)) == 0
        assert rank(top(4)) == 6
        assert rank(InversionSet.from_pairs(4, {(2, 1), (3, 1)})) == 2


class TestLatticeAxioms:
    def test_s3_triples(self):
        universe = all_inversion_sets(3)
        for a, b, c in itertools.product(universe, repeat=3):
            assert join(a, join(b, c)) == join(join(a, b), c)
            assert meet(a, meet(b, c)) == meet(meet(a, b), c)
        for a, b in itertools.product(universe, repeat=2):
            assert join(a, b) == join(b, a)
            assert meet(a, b) == meet(b, a)
            assert join(a, meet(a, b)) == a
            assert meet(a, join(a, b)) == a


class TestJson:
    def test_permutation_roundtrip(self):
        p = Permutation((2, 3, 1, 4))
        assert Permutation.from_json(p.to_json()) == p

    def test_invset_roundtrip_and_order(self):
        a = inv(3, 1, 4, 2)
        data = a.to_json()
        assert data["pairs"] == sorted(([x, y] for x, y in a.pairs), reverse=True)
        assert InversionSet.from_json(data) == a

    def test_from_json_validates(self):
        with pytest.raises(ValueError, match=r"\(I2\)"):
            InversionSet.from_json({"n": 3, "pairs": [[3, 1]]})
