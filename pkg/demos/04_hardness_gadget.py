"""The Multi-Colored Clique gadget, executed.

A colored graph with three classes of six becomes an attack-phase puzzle:
guards hold m+1 troops over each class, edge-vertices and an isolated block
hold singles, and the planned attack sequence sweeps guards then edges.
The first player wins the reduced game exactly when she can answer with a
transversal clique.
"""

from aggression.reduction import ColoredGraph, brute_force_mcc, expected_budgets, reduce_mcc
from aggression.response import decide_optimal_response, simulate_response

classes = (tuple(range(0, 6)), tuple(range(6, 12)), tuple(range(12, 18)))
edges = ((0, 6), (0, 12), (6, 12),      # a planted triangle on (0, 6, 12)
         (1, 7), (2, 8), (1, 13), (3, 9), (4, 14), (9, 15))
colored = ColoredGraph(classes, edges)

out = reduce_mcc(colored)
k, n, m = out.params
print(f"k={k}, n={n}, m={m}")
print(f"H has {out.instance.graph.vertex_count} vertices "
      f"(18 class images + {m} edge vertices + {k} guards + 13 isolated)")
print(f"budgets: T_L={out.budgets[0]}, T_R={out.budgets[1]} "
      f"(closed form: {expected_budgets(k, n, m)})")
print(f"sigma: {len(out.instance.sigma)} planned attacks (guards first)\n")

oracle = brute_force_mcc(colored)
print(f"brute-force clique oracle: {oracle}")

answer = decide_optimal_response(out.instance)
print(f"optimal response decision: {answer.decision}")
print(f"witness tau: {answer.witness_tau}\n")

tau = tuple(out.name_map[f"u_{i + 1}_{colored.classes[i].index(v) + 1}"]
            for i, v in enumerate(oracle))
replay = simulate_response(out.instance, tau)
print("replaying the clique transversal as tau:")
print(f"  territories {replay.territories} -> {replay.result.value}")

no_reply = simulate_response(out.instance, ())
print("replaying an empty tau (she never attacks):")
print(f"  territories {no_reply.territories} -> {no_reply.result.value}")

free = ColoredGraph(classes, ((0, 12), (1, 13), (6, 12), (7, 13)))
print(f"\na clique-free input: oracle={brute_force_mcc(free)}, "
      f"decision={decide_optimal_response(reduce_mcc(free).instance).decision}")
