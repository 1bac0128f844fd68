"""Determinism, validity, and dominance behavior of the reference heuristics."""

from __future__ import annotations


from gtpmm import (
    BaselineKind,
    QueryInstance,
    SharingMode,
    group_cost,
    nncm,
    plan,
    recompute_total,
    rpcm,
    rprm,
    run_baseline,
)
from gtpmm.fixtures import WALKTHROUGH_UNIT, walkthrough_poi
from gtpmm.synth import random_instance, random_network

PER_PERSON = SharingMode.PER_PERSON_INTERMEDIATE


def test_rprm_is_seed_deterministic(walkthrough_net, walkthrough_inst):
    reference = rprm(walkthrough_net, walkthrough_inst, seed=42)
    assert all(rprm(walkthrough_net, walkthrough_inst, seed=42) == reference for _ in range(100))


def test_rpcm_and_nncm_are_deterministic(walkthrough_net, walkthrough_inst):
    assert rpcm(walkthrough_net, walkthrough_inst, seed=7) == rpcm(walkthrough_net, walkthrough_inst, seed=7)
    assert nncm(walkthrough_net, walkthrough_inst) == nncm(walkthrough_net, walkthrough_inst)


def test_different_seeds_reach_different_plans(walkthrough_net, walkthrough_inst):
    plans = {rprm(walkthrough_net, walkthrough_inst, seed=s).total_cost for s in range(30)}
    assert len(plans) > 1


def test_singleton_categories_force_the_poi_choice(walkthrough_net):
    v = walkthrough_poi
    inst = QueryInstance(
        [(v("v1"), v("v10")), (v("v2"), v("v9"))],
        [[v("v3")], [v("v5")], [v("v7")]],
    )
    for seed in range(10):
        assert rpcm(walkthrough_net, inst, seed).common_pois == (v("v3"), v("v5"), v("v7"))
        assert rprm(walkthrough_net, inst, seed).common_pois == (v("v3"), v("v5"), v("v7"))
    # with no PoI freedom, cheapest-medium equals the exact planner
    assert rpcm(walkthrough_net, inst, 0).total_cost == plan(walkthrough_net, inst, PER_PERSON).total_cost


def test_rprm_mean_over_seeds_dominated_by_planner(walkthrough_net, walkthrough_inst):
    optimal = plan(walkthrough_net, walkthrough_inst, PER_PERSON).total_cost
    costs = [rprm(walkthrough_net, walkthrough_inst, seed).total_cost for seed in range(1000)]
    assert min(costs) >= optimal
    assert sum(costs) / len(costs) >= optimal


def test_rpcm_never_beats_rprm_under_the_same_seed(walkthrough_net, walkthrough_inst):
    for seed in range(50):
        random_modes = rprm(walkthrough_net, walkthrough_inst, seed)
        cheapest_modes = rpcm(walkthrough_net, walkthrough_inst, seed)
        assert cheapest_modes.common_pois == random_modes.common_pois
        assert cheapest_modes.total_cost <= random_modes.total_cost


def test_rpcm_cost_equals_group_cost_of_its_pois(walkthrough_net, walkthrough_inst):
    for seed in range(10):
        journey = rpcm(walkthrough_net, walkthrough_inst, seed)
        assert journey.total_cost == group_cost(walkthrough_net, walkthrough_inst, journey.common_pois, PER_PERSON)


def test_nncm_walkthrough_chain(walkthrough_net, walkthrough_inst):
    journey = nncm(walkthrough_net, walkthrough_inst)
    v = walkthrough_poi
    # both first-category PoIs are 13 units from the group; the tie picks v3
    assert journey.common_pois[0] == v("v3")
    assert journey.common_pois == (v("v3"), v("v5"), v("v7"))
    assert journey.total_cost == 36 * WALKTHROUGH_UNIT


def test_nncm_single_category_single_agent(walkthrough_net):
    v = walkthrough_poi
    inst = QueryInstance([(v("v1"), v("v1"))], [[v("v3"), v("v4")]])
    journey = nncm(walkthrough_net, inst)
    assert journey.common_pois == (v("v4"),)  # v4 is 3 units away, v3 is 5


def test_baseline_plans_have_valid_shape(walkthrough_net):
    for seed in range(10):
        net = random_network(seed, n_pois=20, n_modes=2)
        inst = random_instance(seed, net, k=3, pois_per_category=3, n_agents=2)
        for kind in BaselineKind:
            journey = run_baseline(kind, net, inst, seed=seed)
            assert len(journey.common_pois) == inst.k
            for c, poi in enumerate(journey.common_pois):
                assert poi in inst.categories[c]
            assert journey.n_agents == inst.n_agents
            assert recompute_total(journey) == journey.total_cost
            # every agent's journey is source leg + common legs + destination leg
            for index, (source, dest) in enumerate(inst.agents):
                assert journey.source_legs[index].poi_sequence[0] == source
                assert journey.source_legs[index].poi_sequence[-1] == journey.common_pois[0]
                assert journey.dest_legs[index].poi_sequence[0] == journey.common_pois[-1]
                assert journey.dest_legs[index].poi_sequence[-1] == dest


def test_planner_dominates_every_baseline():
    for seed in range(25):
        net = random_network(seed, n_pois=25, n_modes=3)
        inst = random_instance(seed, net, k=3, pois_per_category=4, n_agents=3)
        optimal = plan(net, inst, PER_PERSON).total_cost
        assert nncm(net, inst).total_cost >= optimal
        for baseline_seed in range(5):
            assert rprm(net, inst, baseline_seed).total_cost >= optimal
            assert rpcm(net, inst, baseline_seed).total_cost >= optimal
