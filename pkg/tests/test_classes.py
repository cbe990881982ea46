import random
from fractions import Fraction

import pytest

from intervalgames import (
    BudgetExceededError,
    ClassicalGame,
    ClassicalProperty,
    IntervalClass,
    IntervalGame,
    SELECTION_CONVEX_VARIANTS,
    SelectionClass,
    check_classical,
    check_interval_class,
    check_selection_class,
    check_selection_convex_variant,
    embed_classical,
    family,
    grand_coalition,
    selection_class_oracle,
    truncate_grand,
)
from helpers import (
    endpoint_selections,
    majority_game,
    rand_additive_classical,
    rand_classical,
    rand_convex_classical,
    rand_interval_game,
    random_selection,
)

MATCHING = {
    SelectionClass.MONOTONIC: ClassicalProperty.MONOTONIC,
    SelectionClass.SUPERADDITIVE: ClassicalProperty.SUPERADDITIVE,
    SelectionClass.CONVEX: ClassicalProperty.CONVEX,
}


def convex_by_marginals(v: ClassicalGame) -> bool:
    """Independent convexity route: single-player marginal contributions
    never shrink as the base coalition grows."""
    full = grand_coalition(v.n)
    for i in range(v.n):
        bit = 1 << i
        rest = full & ~bit
        t = rest
        while True:
            s = t
            while True:
                if v.values[s | bit] - v.values[s] > v.values[t | bit] - v.values[t]:
                    return False
                if s == 0:
                    break
                s = (s - 1) & t
            if t == 0:
                break
            t = (t - 1) & rest
    return True


def nested_pairs_only(v: ClassicalGame) -> bool:
    """The supermodular inequality restricted to comparable pairs."""
    full = grand_coalition(v.n)
    for s in range(full + 1):
        t = (s - 1) & s
        while True:
            if v.values[t] + v.values[s] > v.values[t | s] + v.values[t & s]:
                return False
            if t == 0:
                break
            t = (t - 1) & s
    return True


class TestClassicalProperties:
    def test_nonnegative_additive_game(self):
        v = ClassicalGame.from_map(2, {(1,): 1, (2,): 2, (1, 2): 3})
        for prop in ClassicalProperty:
            assert check_classical(v, prop)

    def test_additive_with_negative_part_is_not_monotonic(self):
        v = ClassicalGame.from_map(2, {(1,): -1, (2,): 2, (1, 2): 1})
        assert check_classical(v, ClassicalProperty.ADDITIVE)
        assert check_classical(v, ClassicalProperty.SUPERADDITIVE)
        assert check_classical(v, ClassicalProperty.CONVEX)
        assert not check_classical(v, ClassicalProperty.MONOTONIC)

    def test_majority_game(self):
        v = majority_game()
        assert check_classical(v, ClassicalProperty.MONOTONIC)
        assert check_classical(v, ClassicalProperty.SUPERADDITIVE)
        assert not check_classical(v, ClassicalProperty.ADDITIVE)
        assert not check_classical(v, ClassicalProperty.CONVEX)

    def test_unanimity_game_is_convex(self):
        v = ClassicalGame.from_function(3, lambda m: Fraction(m & 0b011 == 0b011))
        assert check_classical(v, ClassicalProperty.CONVEX)
        assert not check_classical(v, ClassicalProperty.ADDITIVE)

    def test_monotonic_requires_nonnegativity(self):
        v = ClassicalGame.from_map(1, {(1,): -1})
        assert not check_classical(v, ClassicalProperty.MONOTONIC)

    def test_convex_agrees_with_marginal_route(self):
        rng = random.Random(11)
        seen = {True: 0, False: 0}
        for _ in range(60):
            n = rng.randint(1, 4)
            v = rand_convex_classical(rng, n) if rng.random() < 0.4 else rand_classical(rng, n)
            verdict = check_classical(v, ClassicalProperty.CONVEX)
            assert verdict == convex_by_marginals(v)
            seen[verdict] += 1
        assert seen[True] and seen[False]

    def test_comparable_pairs_constrain_nothing(self):
        # the supermodular inequality is an identity on nested pairs, so a
        # check restricted to them accepts every game; only incomparable
        # pairs separate convex from non-convex
        rng = random.Random(12)
        for _ in range(30):
            v = rand_classical(rng, rng.randint(2, 4))
            assert nested_pairs_only(v)
        assert not check_classical(majority_game(), ClassicalProperty.CONVEX)

    def test_generators_hit_their_classes(self):
        rng = random.Random(13)
        for _ in range(20):
            assert check_classical(
                rand_convex_classical(rng, rng.randint(2, 4)), ClassicalProperty.CONVEX
            )
            assert check_classical(
                rand_additive_classical(rng, rng.randint(1, 4)), ClassicalProperty.ADDITIVE
            )


class TestIntervalClasses:
    def test_worked_example_classes(self):
        w = IntervalGame.from_map(2, {(1,): (1, 3), (2,): (1, 3), (1, 2): (1, 4)})
        assert check_interval_class(w, IntervalClass.SIZE_MONOTONIC)
        assert not check_interval_class(w, IntervalClass.SUPERADDITIVE)
        assert not check_interval_class(w, IntervalClass.SUPERMODULAR)
        assert not check_interval_class(w, IntervalClass.CONVEX)

    def test_convex_embedding_is_in_all_convex_classes(self):
        rng = random.Random(14)
        w = embed_classical(rand_convex_classical(rng, 3))
        assert check_interval_class(w, IntervalClass.SUPERMODULAR)
        assert check_interval_class(w, IntervalClass.CONVEX)
        assert check_interval_class(w, IntervalClass.SIZE_MONOTONIC)

    def test_embedding_collapse(self):
        pairs = {
            IntervalClass.SUPERADDITIVE: ClassicalProperty.SUPERADDITIVE,
            IntervalClass.SUPERMODULAR: ClassicalProperty.CONVEX,
            IntervalClass.CONVEX: ClassicalProperty.CONVEX,
        }
        rng = random.Random(15)
        for _ in range(25):
            v = rand_classical(rng, rng.randint(1, 3))
            w = embed_classical(v)
            for icls, prop in pairs.items():
                assert check_interval_class(w, icls) == check_classical(v, prop)
            # zero length game is monotonic no matter what v does
            assert check_interval_class(w, IntervalClass.SIZE_MONOTONIC)


class TestSelectionClasses:
    def test_characterization_matches_oracle(self):
        rng = random.Random(16)
        games = [rand_interval_game(rng, rng.randint(2, 3), max_width=2) for _ in range(30)]
        # member-rich side: families and embeddings of well-behaved games
        games += [family(k, 3) for k in ("sel-superadditive", "sel-convex")]
        games += [embed_classical(rand_convex_classical(rng, 3)) for _ in range(3)]
        seen = {True: 0, False: 0}
        for w in games:
            for cls in SelectionClass:
                got = check_selection_class(w, cls)
                assert got == selection_class_oracle(w, cls)
                seen[got] += 1
        assert seen[True] and seen[False]

    def test_members_have_the_property_in_every_sampled_selection(self):
        rng = random.Random(17)
        games = [family(k, 3) for k in ("sel-superadditive", "sel-convex")]
        games += [rand_interval_game(rng, 3) for _ in range(10)]
        for w in games:
            for cls in SelectionClass:
                if not check_selection_class(w, cls):
                    continue
                for _ in range(5):
                    v = random_selection(rng, w)
                    assert check_classical(v, MATCHING[cls])

    def test_non_members_have_a_violating_endpoint_selection(self):
        w = IntervalGame.from_map(2, {(1,): (0, 5), (2,): (0, 5), (1, 2): (4, 6)})
        assert not check_selection_class(w, SelectionClass.SUPERADDITIVE)
        assert any(
            not check_classical(v, ClassicalProperty.SUPERADDITIVE)
            for v in endpoint_selections(w)
        )

    def test_selection_convex_implies_selection_superadditive(self):
        rng = random.Random(18)
        hits = 0
        for _ in range(40):
            w = rand_interval_game(rng, rng.randint(2, 3), max_width=1)
            if check_selection_class(w, SelectionClass.CONVEX):
                hits += 1
                assert check_selection_class(w, SelectionClass.SUPERADDITIVE)
        for n in (2, 3, 4):
            assert check_selection_class(family("sel-convex", n), SelectionClass.SUPERADDITIVE)

    def test_embedding_collapse(self):
        rng = random.Random(19)
        for _ in range(25):
            v = rand_classical(rng, rng.randint(1, 3))
            w = embed_classical(v)
            for cls, prop in MATCHING.items():
                assert check_selection_class(w, cls) == check_classical(v, prop)

    def test_oracle_budget(self):
        w = rand_interval_game(random.Random(20), 5)
        with pytest.raises(BudgetExceededError):
            selection_class_oracle(w, SelectionClass.MONOTONIC)

    def test_unknown_variant_rejected(self):
        w = family("sel-convex", 2)
        with pytest.raises(ValueError):
            check_selection_convex_variant(w, "nope")


class TestConvexityVariants:
    def test_variants_agree_on_random_games(self):
        rng = random.Random(21)
        seen = {True: 0, False: 0}
        for _ in range(60):
            w = rand_interval_game(rng, rng.randint(2, 4), max_width=1)
            verdicts = {
                v: check_selection_convex_variant(w, v) for v in SELECTION_CONVEX_VARIANTS
            }
            assert len(set(verdicts.values())) == 1
            seen[verdicts["pairs"]] += 1
        assert seen[True] and seen[False]

    def test_variants_agree_on_families(self):
        for kind in ("sel-superadditive", "interval-superadditive", "sel-convex"):
            for n in (2, 3, 4):
                w = family(kind, n)
                verdicts = {
                    check_selection_convex_variant(w, v) for v in SELECTION_CONVEX_VARIANTS
                }
                assert len(verdicts) == 1


class TestSeparations:
    """The named families sit strictly on one side of each class pair."""

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_sel_superadditive_family(self, n):
        w = family("sel-superadditive", n)
        assert check_selection_class(w, SelectionClass.SUPERADDITIVE)
        assert not check_interval_class(w, IntervalClass.SUPERADDITIVE)
        # the separating slack is exactly zero on disjoint pairs
        full = grand_coalition(n)
        lo = {m: w.worth(m).lower for m in range(full + 1)}
        up = {m: w.worth(m).upper for m in range(full + 1)}
        for s in range(1, full + 1):
            for t in range(1, full + 1):
                if s & t == 0:
                    assert up[s] + up[t] == lo[s | t]

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_interval_superadditive_family(self, n):
        w = family("interval-superadditive", n)
        assert check_interval_class(w, IntervalClass.SUPERADDITIVE)
        assert not check_selection_class(w, SelectionClass.SUPERADDITIVE)

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_sel_convex_family(self, n):
        w = family("sel-convex", n)
        assert check_selection_class(w, SelectionClass.CONVEX)
        # both borders are convex games...
        assert check_interval_class(w, IntervalClass.SUPERMODULAR)
        # ...but the all-ones length game is not, so the convex interval
        # class (which also constrains the length game) excludes the family
        assert not check_interval_class(w, IntervalClass.CONVEX)
        assert not check_classical(
            ClassicalGame.from_function(n, lambda m: Fraction(1)), ClassicalProperty.CONVEX
        )

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_truncated_sel_convex_family(self, n):
        w = truncate_grand(family("sel-convex", n))
        assert check_selection_class(w, SelectionClass.CONVEX)
        assert not check_interval_class(w, IntervalClass.CONVEX)
        # its upper border game stays convex after the truncation
        assert check_interval_class(w, IntervalClass.SUPERMODULAR)
