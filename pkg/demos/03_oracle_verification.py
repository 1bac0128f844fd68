"""Cross-check the planner against exhaustive enumeration.

The brute-force checker walks every choice of one PoI per category in
lexicographic order and evaluates the group cost with cheapest-mode legs.
On every seeded instance the DP total must match it to the cent.
"""

from gtpmm import SharingMode, brute_force_optimal, plan, valid_path_count
from gtpmm.synth import random_instance, random_network

for seed in range(10):
    net = random_network(seed, n_pois=30, n_modes=3)
    inst = random_instance(seed, net, k=3, pois_per_category=4, n_agents=3)
    for sharing in SharingMode:
        journey = plan(net, inst, sharing)
        best_tuple, best_cost = brute_force_optimal(net, inst, sharing)
        status = "ok" if journey.total_cost == best_cost else "MISMATCH"
        print(
            f"seed {seed} {sharing.value:>10}: {valid_path_count(inst):3d} tuples, "
            f"planner {journey.total_cost} == oracle {best_cost} cents [{status}]"
        )
        assert journey.total_cost == best_cost
