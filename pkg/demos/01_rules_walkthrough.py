"""A guided tour of the rules engine on a three-vertex path.

Placement alternates from the first player until both pass; the first
passer leads the attack phase; a vertex falls when strictly more enemy
troops sit next to it; scoring is territories, then surviving troops.
"""

from aggression import (
    Move,
    Phase,
    PlayerId,
    apply_move,
    legal_moves,
    new_game,
    outcome,
    path,
    vulnerable_vertices,
)

state = new_game(path(3), budget_lata=4, budget_raj=3)
print("Board: 0 - 1 - 2, Lata has 4 troops, Raj has 3.\n")

state = apply_move(state, Move.place(1, 4))
state = apply_move(state, Move.place(0, 3))
print("After the placements:", dict(enumerate(zip(state.owner, state.troops))))

print("Lata's legal moves now:", [str(m) for m in legal_moves(state)])
state = apply_move(state, Move.pass_placement())
print("Raj still could place, but has no troops left -> he passes too.")
state = apply_move(state, Move.pass_placement())

print(f"\nPhase: {state.phase.value}; {state.to_move} leads (first passer).")
print("Vulnerable to Lata:", sorted(vulnerable_vertices(state, PlayerId.RAJ)))
print("Vulnerable to Raj: ", sorted(vulnerable_vertices(state, PlayerId.LATA)))

state = apply_move(state, Move.attack(0))
print("\nLata's 4 troops overpower the 3 on vertex 0: it is emptied, neutral.")
state = apply_move(state, Move.pass_attack())
state = apply_move(state, Move.pass_attack())

final = outcome(state)
print(f"\nResult: {final.result.value}, territories {final.territories}, "
      f"surviving troops {final.surviving_troops}, strong win: {final.strong_win}")
