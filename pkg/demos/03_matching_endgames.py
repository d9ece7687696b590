"""Adjudicating the matching strategies against all opponent play.

Verbatim mode runs the scripts exactly as given and reports the branches
they leave unspecified; repaired mode value-guards every scripted move
with the exact solver and substitutes where a guarantee would otherwise
be lost.
"""

from aggression import matching
from aggression.strategies import Mode
from aggression.verifier import verify_guarantee

print("== The mirror draw (holds verbatim) ==")
report = verify_guarantee("raj_mirror_matching", matching(3), (4, 4),
                          mode=Mode.VERBATIM)
print(f"matching(3) T=4: holds={report.holds}, "
      f"{report.lines_explored} adversary lines, clean script: {report.complete}\n")

print("== Three edges, nine troops (the case table wins) ==")
report = verify_guarantee("raj_three_edges", matching(3), (9, 9),
                          mode=Mode.VERBATIM)
print(f"verbatim: holds={report.holds} on every scripted line; "
      f"{len(report.unspecified)} under-spending branches are unscripted")
report = verify_guarantee("raj_three_edges", matching(3), (9, 9), mode=Mode.REPAIRED)
print(f"repaired: holds={report.holds} with {len(report.repairs)} solver "
      "substitutions covering those branches\n")

print("== The strong-win variant has a real gap ==")
report = verify_guarantee("raj_four_edges_strong", matching(4), (9, 10),
                          mode=Mode.VERBATIM)
print(f"verbatim: holds={report.holds}")
if report.counterexample:
    print("refuting line:", " ".join(str(m) for m in report.counterexample))
    print("(the first player underspends, then banks the fourth edge whole;")
    print(" the literal script only wins by one territory, not two)")
report = verify_guarantee("raj_four_edges_strong", matching(4), (9, 10),
                          mode=Mode.REPAIRED)
print(f"repaired: holds={report.holds} -> the strong win itself is true\n")

print("== The m >= 2T draw claim is false outright ==")
report = verify_guarantee("lata_sparse_matching", matching(4), (2, 2),
                          mode=Mode.VERBATIM)
print(f"matching(4) T=2: holds={report.holds}")
print("refuting line:", " ".join(str(m) for m in report.counterexample))
print("(a single 2-troop capture leaves the second player one surviving troop")
print(" ahead forever; the exact value of the whole position is (0, -1))")
