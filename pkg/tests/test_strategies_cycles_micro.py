from aggression.game import MICRO, Move, Phase, PlayerId, apply_move, new_game
from aggression.graphs import cycle, matching, path
from aggression.strategies import Guarantee, Mode, applicability, get_strategy, next_move, relabel


def start(strategy_id, graph, budgets, mode=Mode.VERBATIM):
    strat = get_strategy(strategy_id)
    state = new_game(graph, budgets[0], budgets[1], strat.game_config())
    return state, strat.initial_memory(state, mode=mode)


def feed(strategy_id, state, memory, move):
    memory = relabel(memory, move, state)
    return apply_move(state, move), memory


def test_cycle_applicability():
    assert applicability("lata_c5", cycle(5), (4, 4)) is Guarantee.AT_LEAST_DRAW
    assert applicability("lata_c5", cycle(6), (4, 4)) is None
    assert applicability("raj_c5", cycle(5), (3, 3)) is Guarantee.AT_LEAST_DRAW
    assert applicability("lata_triangle", cycle(3), (2, 2)) is Guarantee.AT_LEAST_DRAW
    assert applicability("raj_c4", cycle(4), (3, 3)) is Guarantee.AT_LEAST_DRAW
    assert applicability("lata_c4", matching(2), (3, 3)) is None


def test_lata_c5_opening_and_orientation():
    sid = "lata_c5"
    state, mem = start(sid, cycle(5), (6, 6))
    move, mem = next_move(sid, state, mem)
    assert move == Move.place(0, 3)  # floor(T/2) on her v1
    state = apply_move(state, move)
    # Raj answers on vertex 4 = her v2 under the reflected orientation.
    state, mem = feed(sid, state, mem, Move.place(4, 2))
    move, mem = next_move(sid, state, mem)
    assert move == Move.place(3, 3)  # ceil(T/2) on v3 = anchor - 2


def test_lata_c5_all_in_neighbor_branch():
    sid = "lata_c5"
    state, mem = start(sid, cycle(5), (6, 6))
    move, mem = next_move(sid, state, mem)
    state = apply_move(state, move)
    state, mem = feed(sid, state, mem, Move.place(1, 6))  # a = T on v2
    move, mem = next_move(sid, state, mem)
    assert move == Move.place(4, 1)  # one troop on v5 ...
    state = apply_move(state, move)
    state, mem = feed(sid, state, mem, Move.pass_placement())
    move, mem = next_move(sid, state, mem)
    assert move == Move.place(3, 2)  # ... and the rest on v4


def test_raj_c5_all_in_win_line():
    sid = "raj_c5"
    state, mem = start(sid, cycle(5), (4, 4))
    state, mem = feed(sid, state, mem, Move.place(2, 4))  # she goes all-in
    move, mem = next_move(sid, state, mem)
    assert move == Move.place((2 + 2) % 5, 1)  # one troop on v3
    state = apply_move(state, move)
    state, mem = feed(sid, state, mem, Move.pass_placement())
    move, mem = next_move(sid, state, mem)
    assert move == Move.place(0, 3)  # v4 = anchor+3 takes the rest


def test_raj_c5_main_line():
    sid = "raj_c5"
    state, mem = start(sid, cycle(5), (6, 6))
    state, mem = feed(sid, state, mem, Move.place(0, 2))  # x < T
    move, mem = next_move(sid, state, mem)
    assert move == Move.place(4, 3)  # floor(T/2) on v5
    state = apply_move(state, move)
    state, mem = feed(sid, state, mem, Move.place(1, 4))  # all her rest on v2
    move, mem = next_move(sid, state, mem)
    assert move == Move.place(2, 3)  # ceil(T/2) on v3


def test_micro_path_mirror_placements():
    sid = "micro_first_path_mirror"
    state, mem = start(sid, path(5), (3, 3))
    move, mem = next_move(sid, state, mem)
    assert move == Move.place(2, 1)  # odd path: open at the centre
    state = apply_move(state, move)
    state, mem = feed(sid, state, mem, Move.place(0, 1))
    move, mem = next_move(sid, state, mem)
    assert move == Move.place(4, 1)  # reflection of 0
    state = apply_move(state, move)
    state, mem = feed(sid, state, mem, Move.place(3, 1))
    move, mem = next_move(sid, state, mem)
    assert move == Move.place(1, 1)  # reflection of 3
    state = apply_move(state, move)
    # Board full; he passes first and leads the attack phase.
    state, mem = feed(sid, state, mem, Move.pass_placement())
    assert state.phase is Phase.PLACEMENT
    move, mem = next_move(sid, state, mem)
    assert move == Move.pass_placement()
    state = apply_move(state, move)
    assert state.phase is Phase.ATTACK
    assert state.to_move is PlayerId.RAJ


def test_micro_even_path_opening_is_arbitrary():
    sid = "micro_first_path_mirror"
    state, mem = start(sid, path(4), (2, 2))
    move, _ = next_move(sid, state, mem)
    assert move == Move.place(0, 1)


def test_micro_oddcycle_mirror_binds_center():
    sid = "micro_second_oddcycle_mirror"
    state, mem = start(sid, cycle(5), (2, 2))
    state, mem = feed(sid, state, mem, Move.place(3, 1))
    move, mem = next_move(sid, state, mem)
    assert move == Move.place(0, 1)  # she took the centre: lowest free vertex
    state = apply_move(state, move)
    state, mem = feed(sid, state, mem, Move.place(2, 1))
    move, mem = next_move(sid, state, mem)
    # mirror of 2 across centre 3 is (2*3 - 2) % 5 = 4
    assert move == Move.place(4, 1)


def test_micro_config_is_single_troop():
    strat = get_strategy("micro_first_path_mirror")
    assert strat.game_config().placement_cap == 1
