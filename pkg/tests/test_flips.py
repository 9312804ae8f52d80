import itertools
from fractions import Fraction

import pytest

from vgit.bb import flow_limits
from vgit.cstar import EmptyComplement, OpenInterval, Wall, semistable_supports
from vgit.flips import FlipChain, count_stability_notions, flip_chain
from vgit.quotients import SingleFixed, TwoBlockProduct
from vgit.weights import SupportPattern, WeightDecomposition


def _sets(step):
    return {s.indices for s in step.semistable}


def test_chain_two_blocks():
    D = WeightDecomposition(((0, 1), (1, 1)))
    chain = flip_chain(D)
    assert isinstance(chain, FlipChain)
    assert chain.decomposition is D
    assert len(chain.steps) == 3
    assert chain.empty_chamber_index == 4

    wall0, gap, wall1 = chain.steps
    assert wall0.chamber == Wall(1, 0)
    assert _sets(wall0) == {(1,), (1, 2)}
    assert wall0.quotient.kind == SingleFixed(1)
    assert gap.chamber == OpenInterval(0, 1)
    assert _sets(gap) == {(1, 2)}
    assert gap.quotient.kind == TwoBlockProduct((1, 1))
    assert wall1.chamber == Wall(2, 1)
    assert _sets(wall1) == {(2,), (1, 2)}
    assert wall1.quotient.kind == SingleFixed(2)

    first, second = chain.crossings
    assert (first.block, first.weight) == (1, 0)
    assert first.entering == ((1, 2),)
    assert first.leaving == ()
    assert (second.block, second.weight) == (2, 1)
    assert second.entering == ()
    assert second.leaving == ((1, 2),)


def test_chain_single_block():
    chain = flip_chain(WeightDecomposition(((0, 3),)))
    assert len(chain.steps) == 1
    assert chain.steps[0].chamber == Wall(1, 0)
    assert chain.empty_chamber_index == 2
    assert len(chain.crossings) == 1
    assert chain.crossings[0].entering == ()
    assert chain.crossings[0].leaving == ()


def test_chain_three_blocks():
    D = WeightDecomposition(((0, 1), (1, 1), (2, 1)))
    chain = flip_chain(D)
    assert len(chain.steps) == 5
    assert [type(s.chamber).__name__ for s in chain.steps] == [
        "Wall",
        "OpenInterval",
        "Wall",
        "OpenInterval",
        "Wall",
    ]
    middle = chain.crossings[1]
    assert (middle.block, middle.weight) == (2, 1)
    assert middle.entering == ((2, 3),)
    assert middle.leaving == ((1, 2),)


def _decomps(values, max_m):
    out = []
    for m in range(1, max_m + 1):
        for ws in itertools.combinations(sorted(values), m):
            out.append(WeightDecomposition(tuple((w, 1) for w in ws)))
    return out


def test_crossings_match_open_chamber_deltas():
    for D in _decomps(range(-2, 3), 4):
        chain = flip_chain(D)
        m = D.m
        open_sets = [frozenset()] + [
            semistable_supports(D, 2 * i) for i in range(1, m)
        ] + [frozenset()]
        for i, crossing in enumerate(chain.crossings, start=1):
            before, after = open_sets[i - 1], open_sets[i]
            entered = {flow_limits(D, s) for s in after - before}
            left = {flow_limits(D, s) for s in before - after}
            assert set(crossing.entering) == entered
            assert set(crossing.leaving) == left
            assert all(lo == i for lo, _ in crossing.entering)
            assert all(hi == i for _, hi in crossing.leaving)


def test_wall_set_is_neighbors_union_plus_fixed():
    for D in _decomps(range(-2, 3), 5):
        m = D.m
        for i in range(1, m + 1):
            wall_set = semistable_supports(D, 2 * i - 1)
            below = semistable_supports(D, 2 * i - 2) if i > 1 else frozenset()
            above = semistable_supports(D, 2 * i) if i < m else frozenset()
            assert wall_set == below | above | {SupportPattern.of(i)}


def test_chain_length_and_step_indices():
    for D in _decomps(range(-3, 4), 4):
        chain = flip_chain(D)
        assert len(chain.steps) == 2 * D.m - 1
        assert [s.index for s in chain.steps] == list(range(1, 2 * D.m))
        assert chain.empty_chamber_index == 2 * D.m
        assert len(chain.crossings) == D.m


def test_count_stability_notions_examples():
    assert count_stability_notions([0, 1]) == 4
    assert count_stability_notions([6, 0, 9]) == 6
    assert count_stability_notions([5]) == 2
    assert count_stability_notions([Fraction(1, 2), Fraction(2, 4), 3]) == 4
    with pytest.raises(ValueError):
        count_stability_notions([])


def test_count_stability_notions_invariance():
    base = [0, 1, 1, Fraction(5, 2), -3]
    n = count_stability_notions(base)
    assert n == 2 * 4
    for scale in (2, Fraction(1, 3), 7):
        assert count_stability_notions([scale * v for v in base]) == n
    for shift in (1, Fraction(-9, 4)):
        assert count_stability_notions([v + shift for v in base]) == n
