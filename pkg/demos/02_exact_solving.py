"""Exact values of small boards, and the surviving-troop tiebreak at work.

The solver returns the full lexicographic (territory, troop) difference
under perfect play, so "draws" that silently lose the troop count are
visible.  Two famous-looking positions below are NOT draws: on two edges
with two troops each, and on the 5-cycle with two troops each, the second
player banks a one-troop capture surplus that can never be punished.
"""

from aggression import cycle, matching, new_game, path
from aggression.solver import Solver, SymmetryGroup, solve

print("family        T  value (territory diff, troop diff)")
for label, graph, symmetry in [
    ("matching(1)", matching(1), SymmetryGroup.MATCHING_EDGES),
    ("matching(2)", matching(2), SymmetryGroup.MATCHING_EDGES),
    ("path(4)    ", path(4), SymmetryGroup.IDENTITY),
    ("cycle(4)   ", cycle(4), SymmetryGroup.CYCLE_DIHEDRAL),
    ("cycle(5)   ", cycle(5), SymmetryGroup.CYCLE_DIHEDRAL),
]:
    for troops in (1, 2, 3):
        solver = Solver(symmetry=symmetry)
        value = solver.value(new_game(graph, troops, troops))
        note = ""
        if value < (0, 0):
            note = "  <- second player wins (troop tiebreak)"
        elif value > (0, 0):
            note = "  <- first player wins"
        print(f"{label}  {troops}  {value}{note}")

print("\nA full solve also yields the optimal move and the principal line:")
result = solve(new_game(matching(2), 2, 2), SymmetryGroup.MATCHING_EDGES)
print(f"matching(2) T=2: value={result.value.as_tuple()}, best={result.best_move}")
print("principal line:", " ".join(str(m) for m in result.principal_line))
print("\n(1 on an edge, captured by 2; the lone reply cannot equalize troops.)")
