"""Tour of the multimodal network layer on the ten-PoI walkthrough graph.

The walkthrough network has two sources (v01, v02), three intermediate
categories ({v03,v04}, {v05,v06}, {v07,v08}), and two destinations
(v09, v10). Every link carries two parallel mode edges, and fares are
rigged so one cost unit is exactly 100 cents.
"""

from gtpmm import cheapest_parallel_edge, connected_components, shortest_path
from gtpmm.fixtures import WALKTHROUGH_UNIT, walkthrough_network, walkthrough_poi

net = walkthrough_network()
print(f"{net.poi_count} PoIs, {net.edge_count} mode edges, modes: {net.fare_table.names}")

# Parallel edges between two PoIs collapse to the cheapest mode.
v1, v3 = walkthrough_poi("v1"), walkthrough_poi("v3")
eid, cents = cheapest_parallel_edge(net, v1, v3)
print(f"v1 -> v3 cheapest: {net.fare_table.name(net.edges[eid].mode)} at {cents / WALKTHROUGH_UNIT:g} units")

# Shortest paths choose the cheapest mode per hop.
route = shortest_path(net, walkthrough_poi("v3"), walkthrough_poi("v7"))
stops = " -> ".join(net.pois[p].external_id for p in route.poi_sequence)
modes = [net.fare_table.name(m) for _, m in route.legs]
print(f"v3 -> v7: {stops} via {modes}, {route.cost / WALKTHROUGH_UNIT:g} units")

# Costs are symmetric on the undirected graph.
back = shortest_path(net, walkthrough_poi("v7"), walkthrough_poi("v3"))
print(f"v7 -> v3 costs the same: {back.cost == route.cost}")

print(f"components: {len(connected_components(net))}")
