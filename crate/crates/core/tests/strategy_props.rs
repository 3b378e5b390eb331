mod common;

use std::sync::Arc;

use common::connected;
use hypercops::construct::{
    cartesian_product, connected_graphs, nonisomorphic_trees, prism, random_connected_hypergraph,
    random_hypertree, HostTree, Multipartite, PartitionSpec, PrismSpec,
};
use hypercops::solver::{
    cop_number, extract_pursuer, extract_strategy, play_match, solve, MatchTrace, OptimalCop,
    RandomCop, RandomRobber, Side, Variant,
};
use hypercops::strategies::{
    hypertree_cop_strategy, mm_product_cop_strategy, multipartite_cop_strategy,
    multipartite_robber_evader, prism_cop_strategy, prism_robber_evader, product_robber_evader,
    territory,
};
use hypercops::{Hypergraph, Vertex};
use proptest::prelude::*;

fn positions(h: &Hypergraph, trace: &MatchTrace) -> Vec<(Vec<Vertex>, Option<Vertex>)> {
    trace
        .rounds
        .iter()
        .map(|r| {
            (
                r.cops.iter().map(|c| h.vertex(c).unwrap()).collect(),
                r.robber.as_ref().map(|v| h.vertex(v).unwrap()),
            )
        })
        .collect()
}

fn trees(max: usize) -> Vec<HostTree> {
    (2..=max)
        .flat_map(|n| nonisomorphic_trees(n).unwrap())
        .collect()
}

fn pursuer(h: &Hypergraph, k: usize, variant: Variant) -> OptimalCop {
    extract_pursuer(Arc::new(solve(h, k, variant).unwrap()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn random_play_is_always_legal(h in connected(7), k in 1..=2usize, seeds in any::<(u64, u64)>()) {
        for variant in [Variant::Standard, Variant::ActiveRobber] {
            if variant == Variant::ActiveRobber && h.vertex_count() == 1 {
                continue;
            }
            let trace = play_match(&h, k, &mut RandomCop::new(seeds.0), &mut RandomRobber::new(seeds.1), 50, variant)
                .unwrap();
            prop_assert!(trace.rounds_played <= 50);
            prop_assert_eq!(trace.rounds.len(), trace.rounds_played);
        }
    }

    #[test]
    fn hypertree_cop_shrinks_the_territory(
        (n, max_edge, edges, seed) in (1..=12usize, 2..=5usize, 0..=8usize, any::<u64>()),
        robber_seed in any::<u64>(),
    ) {
        let (t, host) = random_hypertree(n, max_edge, edges, seed).unwrap();
        let mut cop = hypertree_cop_strategy(&t, &host).unwrap();
        let trace = play_match(&t, 1, &mut cop, &mut RandomRobber::new(robber_seed), n, Variant::Standard).unwrap();
        prop_assert!(trace.captured);
        let mut robber = t.vertex(&trace.robber_placement).unwrap();
        let mut last = usize::MAX;
        for (cops, next) in positions(&t, &trace) {
            let now = territory(&host, cops[0], robber);
            prop_assert!(now < last);
            last = now;
            if let Some(r) = next {
                robber = r;
            }
        }
    }

    #[test]
    fn prism_cop_captures_with_the_base_cop_number(
        (n, rank, e, seed) in (2..=5usize, 2..=4usize, 1..=4usize, any::<u64>()),
        copies in 2..=3usize,
        r in 3..=4usize,
        robber_seed in any::<u64>(),
    ) {
        let base = random_connected_hypergraph(n, rank, e, seed).unwrap();
        let (_, antirank) = base.rank_antirank().unwrap();
        prop_assume!(2 * antirank >= r && base.edge_count() > 0);
        let p = prism(&PrismSpec::new(base.clone(), copies, r)).unwrap();
        let c = cop_number(&base, None, Variant::Standard).unwrap().unwrap();
        let inner = extract_strategy(Arc::new(solve(&base, c, Variant::Standard).unwrap()), Side::Cop)
            .unwrap()
            .into_cop()
            .unwrap();
        let mut cop = prism_cop_strategy(&base, copies, r, inner).unwrap();
        let bound = p.vertex_count() * p.vertex_count();
        let trace = play_match(&p, c, &mut cop, &mut RandomRobber::new(robber_seed), bound, Variant::Standard).unwrap();
        prop_assert!(trace.captured);
        let optimal = extract_strategy(Arc::new(solve(&p, c, Variant::Standard).unwrap()), Side::Robber)
            .unwrap()
            .into_robber()
            .unwrap();
        let mut optimal = optimal;
        let trace = play_match(&p, c, &mut cop, optimal.as_mut(), bound, Variant::Standard).unwrap();
        prop_assert!(trace.captured);
    }
}

#[test]
fn mm_cop_catches_every_active_robber_on_small_tree_products() {
    let pool = trees(6);
    assert_eq!(pool.len(), 13);
    for t1 in &pool {
        for t2 in &pool {
            let mut cop = mm_product_cop_strategy(t1, t2, Variant::ActiveRobber).unwrap();
            let g = cop.graph().clone();
            let table = Arc::new(solve(&g, 1, Variant::ActiveRobber).unwrap());
            let bound = table.state_count();
            let mut robbers: Vec<Box<dyn hypercops::solver::RobberStrategy>> =
                vec![extract_strategy(table.clone(), Side::Robber)
                    .unwrap()
                    .into_robber()
                    .unwrap()];
            robbers.extend((0..5).map(|s| {
                Box::new(RandomRobber::new(s)) as Box<dyn hypercops::solver::RobberStrategy>
            }));
            for robber in &mut robbers {
                let trace = play_match(
                    &g,
                    1,
                    &mut cop,
                    robber.as_mut(),
                    bound,
                    Variant::ActiveRobber,
                )
                .unwrap();
                assert!(
                    trace.captured,
                    "{} x {}",
                    t1.vertex_count(),
                    t2.vertex_count()
                );
                let mut robber_at = g.vertex(&trace.robber_placement).unwrap();
                let mut last = usize::MAX;
                for (cops, next) in positions(&g, &trace) {
                    let (d1, d2) = cop.distances(cops[0], robber_at);
                    assert_eq!((d1 + d2) % 2, 0);
                    assert!(d1 + d2 <= last);
                    last = d1 + d2;
                    if let Some(r) = next {
                        robber_at = r;
                    }
                }
                let (cops, robber_label) = trace.final_positions();
                let end =
                    cop.distances(g.vertex(&cops[0]).unwrap(), g.vertex(robber_label).unwrap());
                assert_eq!(end, (0, 0));
            }
        }
    }
}

#[test]
fn product_evader_survives_against_the_pursuer() {
    let pool: Vec<Hypergraph> = trees(4)
        .into_iter()
        .map(|t| t.graph().as_hypergraph().clone())
        .collect();
    for g in &pool {
        for h in &pool {
            let p = cartesian_product(&[g.clone(), h.clone()]).unwrap();
            let variant = Variant::Standard;
            let rounds = 10 * solve(&p, 1, variant).unwrap().state_count();
            let mut robber = product_robber_evader(g, h).unwrap();
            let mut cop = pursuer(&p, 1, variant);
            let trace = play_match(&p, 1, &mut cop, &mut robber, rounds, variant).unwrap();
            assert!(!trace.captured);
            for seed in 0..5 {
                let trace = play_match(
                    &p,
                    1,
                    &mut RandomCop::new(seed),
                    &mut robber,
                    rounds,
                    variant,
                )
                .unwrap();
                assert!(!trace.captured);
            }
        }
    }
}

#[test]
fn multipartite_strategies_on_small_families() {
    let mut families = Vec::new();
    for parts in [
        vec![1, 1, 2],
        vec![1, 2, 2],
        vec![1, 1, 1, 3],
        vec![2, 2],
        vec![2, 3],
        vec![2, 2, 2],
        vec![2, 2, 3],
    ] {
        for r in 2..=parts.len() {
            families.push(Multipartite::K(PartitionSpec::k_family(r, &parts)));
        }
    }
    for (r, s, parts) in [
        (4, 2, vec![1, 1, 2]),
        (4, 2, vec![1, 2, 2]),
        (4, 3, vec![1, 2, 3]),
        (5, 2, vec![1, 2, 2]),
    ] {
        families.push(Multipartite::L(PartitionSpec::l_family(r, s, &parts)));
    }
    for family in &families {
        let h = family.build().unwrap();
        let mut cop = multipartite_cop_strategy(family).unwrap();
        let k = cop.opening().len();
        assert_eq!(
            cop_number(&h, None, Variant::Standard).unwrap(),
            Some(k),
            "{family:?}"
        );
        for seed in 0..5 {
            let trace = play_match(
                &h,
                k,
                &mut cop,
                &mut RandomRobber::new(seed),
                1,
                Variant::Standard,
            )
            .unwrap();
            assert!(trace.captured);
        }
        if matches!(family, Multipartite::K(_)) && family.spec().parts[0] >= 2 {
            let mut robber = multipartite_robber_evader(family).unwrap();
            let rounds = 10 * solve(&h, 1, Variant::Standard).unwrap().state_count();
            let mut pursuer = pursuer(&h, 1, Variant::Standard);
            let trace =
                play_match(&h, 1, &mut pursuer, &mut robber, rounds, Variant::Standard).unwrap();
            assert!(!trace.captured);
        }
    }
}

#[test]
fn prism_evader_survives_on_small_graph_bases() {
    let mut bases = connected_graphs(4).unwrap();
    bases.extend(connected_graphs(5).unwrap().into_iter().step_by(7));
    let mut tried = 0;
    for base in bases {
        let c = cop_number(&base, None, Variant::Standard).unwrap().unwrap();
        if c < 2 {
            continue;
        }
        for copies in 2..=3 {
            tried += 1;
            let p = prism(&PrismSpec::new(base.clone(), copies, 3)).unwrap();
            let inner = extract_strategy(
                Arc::new(solve(&base, c - 1, Variant::Standard).unwrap()),
                Side::Robber,
            )
            .unwrap()
            .into_robber()
            .unwrap();
            let mut robber = prism_robber_evader(&base, copies, 3, inner).unwrap();
            let table = solve(&p, c - 1, Variant::Standard).unwrap();
            let rounds = 10 * table.state_count();
            let mut cop = extract_pursuer(Arc::new(table));
            let trace =
                play_match(&p, c - 1, &mut cop, &mut robber, rounds, Variant::Standard).unwrap();
            assert!(!trace.captured);
        }
    }
    assert!(tried > 0);
}
