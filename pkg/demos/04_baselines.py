"""The three reference heuristics next to the exact planner.

RPRM picks random PoIs and random modes, RPCM random PoIs with cheapest
modes, NNCM a greedy nearest-neighbor chain. The exact planner's cost is a
floor for all of them, on every instance and every seed.
"""

from gtpmm import nncm, plan, rpcm, rprm
from gtpmm.fixtures import WALKTHROUGH_UNIT, walkthrough_instance, walkthrough_network

net = walkthrough_network()
inst = walkthrough_instance()

optimal = plan(net, inst)
print(f"exact planner: {optimal.total_cost / WALKTHROUGH_UNIT:g} units via "
      f"{[net.pois[p].external_id for p in optimal.common_pois]}")

greedy = nncm(net, inst)
print(f"nncm (deterministic): {greedy.total_cost / WALKTHROUGH_UNIT:g} units")

print("seed  rprm  rpcm")
for seed in range(8):
    random_modes = rprm(net, inst, seed)
    cheapest_modes = rpcm(net, inst, seed)
    assert cheapest_modes.common_pois == random_modes.common_pois  # same PoI draws
    assert optimal.total_cost <= cheapest_modes.total_cost <= random_modes.total_cost
    print(f"{seed:4d}  {random_modes.total_cost / WALKTHROUGH_UNIT:4g}  {cheapest_modes.total_cost / WALKTHROUGH_UNIT:4g}")

mean = sum(rprm(net, inst, s).total_cost for s in range(500)) / 500
print(f"rprm mean over 500 seeds: {mean / WALKTHROUGH_UNIT:.1f} units (optimum {optimal.total_cost / WALKTHROUGH_UNIT:g})")
