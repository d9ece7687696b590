import random

import pytest

from aggression.game import GameResult, PlayerId
from aggression.graphs import Graph, cycle, matching, path
from aggression.response import (
    InstanceError,
    ORInstance,
    SKIP,
    brute_force_decide,
    decide_optimal_response,
    simulate_response,
)


def test_instance_validation():
    g = matching(1)
    with pytest.raises(InstanceError):
        ORInstance(g, {0: 1}, {0: 1}, ())  # overlap
    with pytest.raises(InstanceError):
        ORInstance(g, {0: 0}, {}, ())  # zero troops
    with pytest.raises(InstanceError):
        ORInstance(g, {0: 1}, {}, (7,))  # sigma out of range
    with pytest.raises(InstanceError):
        ORInstance(g, {5: 1}, {}, ())  # vertex out of range


def test_empty_scripts_score_the_placement():
    g = matching(2)
    inst = ORInstance(g, {0: 2, 2: 1}, {1: 2}, ())
    out = simulate_response(inst, ())
    assert out.territories == (2, 1)
    assert out.result is GameResult.LATA_WIN


def test_invalid_entries_are_noops():
    g = path(3)
    inst = ORInstance(g, {0: 2}, {1: 2}, (0,))  # Raj's attack on 0: 2 > 2 fails
    out = simulate_response(inst, (SKIP,))
    assert out.territories == (1, 1)
    assert out.result is GameResult.DRAW  # equal troops too


def test_lata_moves_first_each_round():
    # Lata's k-th entry executes before Raj's k-th: she can remove the very
    # threat that made his planned attack valid.
    g = path(3)  # 0 - 1 - 2
    inst = ORInstance(g, {1: 3}, {0: 2, 2: 2}, (1,))
    # Raj plans to attack vertex 1 (strength 4 > 3).  Lata first kills 0,
    # dropping his strength to 2, which invalidates the plan.
    out = simulate_response(inst, (0,))
    assert out.territories == (1, 1)
    assert out.surviving_troops == (3, 2)
    assert out.result is GameResult.LATA_WIN
    # Without her intervention the attack lands.
    out2 = simulate_response(inst, ())
    assert out2.territories == (0, 2)
    assert out2.result is GameResult.RAJ_WIN


def test_tau_longer_than_sigma():
    g = matching(2)
    inst = ORInstance(g, {0: 3, 2: 3}, {1: 1, 3: 2}, ())
    out = simulate_response(inst, (1, 3))
    assert out.territories == (2, 0)


def test_malformed_tau_rejected():
    inst = ORInstance(matching(1), {0: 1}, {}, ())
    with pytest.raises(InstanceError):
        simulate_response(inst, (9,))


def test_decide_static_instance():
    # sigma empty, no Lata attack available: decision is static scoring.
    g = matching(1)
    win = ORInstance(g, {0: 2}, {}, ())
    assert decide_optimal_response(win).decision is True
    lose = ORInstance(g, {}, {1: 2}, ())
    assert decide_optimal_response(lose).decision is False


def test_decide_witness_replays_to_win():
    g = path(3)
    inst = ORInstance(g, {1: 3}, {0: 2, 2: 2}, (1,))
    ans = decide_optimal_response(inst)
    assert ans.decision is True
    out = simulate_response(inst, ans.witness_tau)
    assert out.result is GameResult.LATA_WIN


def test_decide_agrees_with_brute_force_on_small_instances():
    rng = random.Random(7)
    graphs = [matching(2), path(4), cycle(4), path(5)]
    for trial in range(40):
        g = graphs[trial % len(graphs)]
        owner = [rng.choice([None, PlayerId.LATA, PlayerId.RAJ])
                 for _ in range(g.vertex_count)]
        f1 = {v: rng.randint(1, 3) for v, o in enumerate(owner) if o is PlayerId.LATA}
        f2 = {v: rng.randint(1, 3) for v, o in enumerate(owner) if o is PlayerId.RAJ}
        sigma = tuple(rng.randrange(g.vertex_count)
                      for _ in range(rng.randint(0, 3)))
        inst = ORInstance(g, f1, f2, sigma)
        assert decide_optimal_response(inst).decision == brute_force_decide(inst), \
            (g, f1, f2, sigma)


def test_permuting_sigma_changes_replay_as_dictated():
    g = path(4)
    inst_a = ORInstance(g, {0: 2, 2: 2}, {1: 1, 3: 1}, (1, 3))
    inst_b = ORInstance(g, {0: 2, 2: 2}, {1: 1, 3: 1}, (3, 1))
    assert simulate_response(inst_a, ()).territories == simulate_response(inst_b, ()).territories
