"""Short cycles and the one-troop variant.

Cycles up to five draw for most budgets -- except C5 with two troops each,
where the capture surplus decides.  In the single-troop variant the
capture mechanism disappears; the path mirror is flawless as written,
while the odd-cycle mirror turns out to be false at length seven.
"""

from aggression import MICRO, cycle, new_game, path
from aggression.solver import Solver, SymmetryGroup
from aggression.strategies import Mode
from aggression.verifier import verify_guarantee

print("== exact cycle values ==")
for n in (3, 4, 5):
    for troops in (1, 2, 3):
        solver = Solver(symmetry=SymmetryGroup.CYCLE_DIHEDRAL)
        value = solver.value(new_game(cycle(n), troops, troops))
        print(f"C{n} T={troops}: {value}")

print("\n== the C5 scripts, repaired where the troop tiebreak bites ==")
for troops in (3, 4):
    for sid in ("lata_c5", "raj_c5"):
        report = verify_guarantee(sid, cycle(5), (troops, troops), mode=Mode.REPAIRED)
        print(f"{sid} T={troops}: holds={report.holds}, repairs={len(report.repairs)}")

print("\n== micro: the path mirror needs no repairs at all ==")
for n in (3, 5, 7):
    troops = (n + 1) // 2
    report = verify_guarantee("micro_first_path_mirror", path(n), (troops, troops),
                              mode=Mode.VERBATIM)
    print(f"path({n}) T={troops}: holds={report.holds}, clean={report.complete}")

print("\n== micro odd cycles: fine at five, false at seven ==")
for n in (5, 7):
    troops = n // 2
    solver = Solver(symmetry=SymmetryGroup.CYCLE_DIHEDRAL)
    value = solver.value(new_game(cycle(n), troops, troops, MICRO))
    print(f"C{n} micro T={troops}: exact value {value}"
          + ("  <- the first player simply wins" if value > (0, 0) else ""))

print("\n== the unstated length-five-path claim, solver-derived ==")
for troops in (1, 2, 3):
    solver = Solver()
    value = solver.value(new_game(path(5), troops, troops, MICRO))
    print(f"path(5) micro T={troops}: {value}")
print("(the first player indeed wins the length-five path once T=3 fills it)")
