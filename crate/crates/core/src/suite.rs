//! Verification suites: the library's claims checked on concrete families and
//! seeded random instance pools, collected into a report.

use std::fmt::{self, Write as _};
use std::str::FromStr;
use std::sync::Arc;
use std::time::{Duration, Instant};

use itertools::Itertools;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::bounds::check_cover_inequality;
use crate::construct::{
    basic, cartesian_product, connected_graphs, nonisomorphic_trees, prism, random_connected_graph,
    random_connected_hypergraph, random_hypertree, single_edge, BasicKind, HostTree, Multipartite,
    PartitionSpec, PrismSpec,
};
use crate::dismantle::{dismantling_order, find_corner};
use crate::error::{Error, Result};
use crate::hypergraph::{Hypergraph, Vertex};
use crate::solver::{
    cop_number, extract_pursuer, extract_strategy, play_match, solve, CopStrategy, RobberStrategy,
    Side, Variant,
};
use crate::strategies::{
    hypertree_cop_strategy, mm_product_cop_strategy, multipartite_cop_strategy,
    multipartite_robber_evader, prism_cop_strategy, prism_robber_evader, product_robber_evader,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum SuiteId {
    All,
    Characterisation,
    Hypertree,
    Multipartite,
    Products,
    Prism,
}

impl SuiteId {
    pub const GROUPS: [SuiteId; 5] = [
        SuiteId::Characterisation,
        SuiteId::Hypertree,
        SuiteId::Multipartite,
        SuiteId::Products,
        SuiteId::Prism,
    ];

    fn includes(self, group: SuiteId) -> bool {
        self == SuiteId::All || self == group
    }
}

impl fmt::Display for SuiteId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SuiteId::All => "ALL",
            SuiteId::Characterisation => "CHARACTERISATION",
            SuiteId::Hypertree => "HYPERTREE",
            SuiteId::Multipartite => "MULTIPARTITE",
            SuiteId::Products => "PRODUCTS",
            SuiteId::Prism => "PRISM",
        })
    }
}

impl FromStr for SuiteId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_uppercase().as_str() {
            "ALL" => Ok(SuiteId::All),
            "CHARACTERISATION" | "CHARACTERIZATION" => Ok(SuiteId::Characterisation),
            "HYPERTREE" => Ok(SuiteId::Hypertree),
            "MULTIPARTITE" => Ok(SuiteId::Multipartite),
            "PRODUCTS" => Ok(SuiteId::Products),
            "PRISM" => Ok(SuiteId::Prism),
            _ => Err(Error::param(format!("unknown suite `{s}`"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub name: String,
    pub anchor: String,
    pub expected: String,
    pub computed: String,
    pub status: Status,
    pub elapsed_ms: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub suite: SuiteId,
    pub seed: u64,
    pub budget_seconds: Option<f64>,
    pub checks: Vec<CheckRecord>,
    pub summary: Summary,
}

impl VerificationReport {
    /// True when every check ran and passed.
    pub fn success(&self) -> bool {
        self.summary.failed == 0 && self.summary.skipped == 0
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialises")
    }

    pub fn to_markdown(&self) -> String {
        let mut out = String::new();
        let s = &self.summary;
        writeln!(out, "# Verification report: {}\n", self.suite).unwrap();
        writeln!(
            out,
            "Seed {}. {} checks: {} passed, {} failed, {} skipped.\n",
            self.seed, s.total, s.passed, s.failed, s.skipped
        )
        .unwrap();
        writeln!(
            out,
            "| Check | Anchor | Expected | Computed | Status | ms |"
        )
        .unwrap();
        writeln!(out, "|---|---|---|---|---|---|").unwrap();
        let cell = |s: &str| s.replace('|', "\\|");
        for c in &self.checks {
            let status = match c.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
                Status::Skipped => "SKIPPED",
            };
            writeln!(
                out,
                "| {} | {} | {} | {} | {} | {:.0} |",
                cell(&c.name),
                cell(&c.anchor),
                cell(&c.expected),
                cell(&c.computed),
                status,
                c.elapsed_ms
            )
            .unwrap();
        }
        out
    }

    /// The report with timings zeroed, for comparing runs.
    pub fn without_timings(&self) -> Self {
        let mut r = self.clone();
        for c in &mut r.checks {
            c.elapsed_ms = 0.0;
        }
        r
    }
}

/// A hypergraph family member named by its construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Family {
    Basic(BasicKind, usize),
    Edge(usize),
    Multipartite(Multipartite),
    Product(Vec<Family>),
    Prism(Box<Family>, usize, usize),
}

impl Family {
    pub fn build(&self) -> Result<Hypergraph> {
        match self {
            Family::Basic(kind, n) => basic(*kind, *n),
            Family::Edge(n) => single_edge(*n),
            Family::Multipartite(m) => m.build(),
            Family::Product(fs) => {
                cartesian_product(&fs.iter().map(Family::build).collect::<Result<Vec<_>>>()?)
            }
            Family::Prism(base, n, r) => prism(&PrismSpec::new(base.build()?, *n, *r)),
        }
    }
}

/// An expected cop number for one family member.
#[derive(Debug, Clone)]
pub struct CopNumberCase {
    pub suite: SuiteId,
    pub name: &'static str,
    pub anchor: &'static str,
    pub family: Family,
    pub expected: usize,
}

fn path(n: usize) -> Family {
    Family::Basic(BasicKind::Path, n)
}

fn complete(n: usize) -> Family {
    Family::Basic(BasicKind::Complete, n)
}

fn k_family(r: usize, parts: &[usize]) -> Family {
    Family::Multipartite(Multipartite::K(PartitionSpec::k_family(r, parts)))
}

fn product(fs: &[Family]) -> Family {
    Family::Product(fs.to_vec())
}

/// Every exact cop-number claim the suites check.
pub fn cop_number_cases() -> Vec<CopNumberCase> {
    use SuiteId::*;
    let c4 = Family::Basic(BasicKind::Cycle, 4);
    let case = |suite, name, anchor, family, expected| CopNumberCase {
        suite,
        name,
        anchor,
        family,
        expected,
    };
    vec![
        case(
            Multipartite,
            "c(K3_{1,2,2}) = 1",
            "complete multipartite with a singleton class",
            k_family(3, &[1, 2, 2]),
            1,
        ),
        case(
            Multipartite,
            "c(K2_{2,2}) = 2",
            "complete multipartite without a singleton class",
            k_family(2, &[2, 2]),
            2,
        ),
        case(
            Multipartite,
            "c(K3_{2,2,2}) = 2",
            "complete multipartite without a singleton class",
            k_family(3, &[2, 2, 2]),
            2,
        ),
        case(
            Multipartite,
            "c(L4,2_{1,1,2}) = 1",
            "multipartite hypergraphs meeting s classes",
            Family::Multipartite(crate::construct::Multipartite::L(PartitionSpec::l_family(
                4,
                2,
                &[1, 1, 2],
            ))),
            1,
        ),
        case(
            Products,
            "c(P2 x P2) = 2",
            "products of d trees need ceil((d+1)/2) cops",
            product(&[path(2), path(2)]),
            2,
        ),
        case(
            Products,
            "c(P3 x P3) = 2",
            "products of d trees need ceil((d+1)/2) cops",
            product(&[path(3), path(3)]),
            2,
        ),
        case(
            Products,
            "c(P2 x P2 x P2) = 2",
            "products of d trees need ceil((d+1)/2) cops",
            product(&[path(2), path(2), path(2)]),
            2,
        ),
        case(
            Products,
            "c(E3 x E3) = 2",
            "products of d hypertrees with anti-rank >= 3 need d cops",
            product(&[Family::Edge(3), Family::Edge(3)]),
            2,
        ),
        case(
            Products,
            "c(K2 x K3) = 2",
            "cube times complete hypergraphs need ceil(p/2)+q cops",
            product(&[complete(2), complete(3)]),
            2,
        ),
        case(
            Products,
            "c(K3 x K3) = 2",
            "cube times complete hypergraphs need ceil(p/2)+q cops",
            product(&[complete(3), complete(3)]),
            2,
        ),
        case(
            Products,
            "c(Q2 x K3) = 2",
            "cube times complete hypergraphs need ceil(p/2)+q cops",
            product(&[Family::Basic(BasicKind::Hypercube, 2), complete(3)]),
            2,
        ),
        case(
            Prism,
            "c(P(E3, 2, 3)) = 1",
            "prisms keep the base cop number",
            Family::Prism(Box::new(Family::Edge(3)), 2, 3),
            1,
        ),
        case(
            Prism,
            "c(P(C4, 2, 3)) = 2",
            "prisms keep the base cop number",
            Family::Prism(Box::new(c4.clone()), 2, 3),
            2,
        ),
        case(
            Prism,
            "c(P(E3, 2, 2)) = 2",
            "r = 2 prisms are products with a path",
            Family::Prism(Box::new(Family::Edge(3)), 2, 2),
            2,
        ),
        case(
            Prism,
            "c(C4 x P2) = 2",
            "cycle times path needs two cops",
            product(&[c4, path(2)]),
            2,
        ),
    ]
}

/// Seeded pool of random connected hypergraphs: up to 8 vertices, rank at most 4.
pub fn hypergraph_pool(seed: u64, count: usize) -> Vec<Hypergraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(1..=8);
            let edges = rng.gen_range(1..=n + 2);
            random_connected_hypergraph(n, 4, edges, rng.gen()).expect("valid parameters")
        })
        .collect()
}

/// Seeded pool of random hypertrees with their hosts: up to 10 vertices.
pub fn hypertree_pool(seed: u64, count: usize) -> Vec<(Hypergraph, HostTree)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed_7ee5);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(1..=10);
            let max_edge = rng.gen_range(2..=4);
            let edges = rng.gen_range(1..=n);
            random_hypertree(n, max_edge, edges, rng.gen()).expect("valid parameters")
        })
        .collect()
}

/// All connected labelled graphs on up to `enumerate_up_to` vertices, then
/// `samples` seeded uniform connected graphs on each order up to `max_order`.
pub fn graph_pool(
    seed: u64,
    enumerate_up_to: usize,
    max_order: usize,
    samples: usize,
) -> Vec<Hypergraph> {
    let mut out = Vec::new();
    for n in 1..=enumerate_up_to {
        out.extend(connected_graphs(n).expect("small order"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x6a09_e667);
    for n in enumerate_up_to + 1..=max_order {
        out.extend(
            (0..samples).map(|_| random_connected_graph(n, rng.gen()).expect("positive order")),
        );
    }
    out
}

/// Graph-theoretic vertex deletion, written out directly.
pub fn graph_minus(g: &Hypergraph, x: Vertex) -> Result<Hypergraph> {
    let keep: Vec<Vertex> = g.vertices().filter(|&v| v != x).collect();
    let labels = keep.iter().map(|&v| g.label(v).to_string()).collect();
    let shift = |v: Vertex| if v > x { v - 1 } else { v };
    let edges = g
        .edges()
        .iter()
        .filter(|e| !e.contains(&x))
        .map(|e| e.iter().map(|&v| shift(v)).collect())
        .collect();
    Hypergraph::new(labels, edges)
}

fn is_cop_win(h: &Hypergraph) -> Result<bool> {
    crate::solver::is_k_cop_win(h, 1, Variant::Standard)
}

struct Ctx {
    seed: u64,
    deadline: Option<Instant>,
}

impl Ctx {
    fn out_of_time(&self) -> bool {
        self.deadline.is_some_and(|d| Instant::now() >= d)
    }
}

enum Outcome {
    Done {
        expected: String,
        computed: String,
        pass: bool,
    },
    Exhausted(String),
}

fn outcome(
    expected: impl fmt::Display,
    computed: impl fmt::Display,
    pass: bool,
) -> Result<Outcome> {
    Ok(Outcome::Done {
        expected: expected.to_string(),
        computed: computed.to_string(),
        pass,
    })
}

/// Runs `test` on every item, stopping early when the budget runs out.
/// Reports failures by item index.
fn sweep<T>(
    ctx: &Ctx,
    items: &[T],
    expected: &str,
    mut test: impl FnMut(&T) -> Result<bool>,
) -> Result<Outcome> {
    let mut bad = Vec::new();
    for (i, item) in items.iter().enumerate() {
        if ctx.out_of_time() {
            return Ok(Outcome::Exhausted(format!(
                "budget exhausted after {i}/{} instances",
                items.len()
            )));
        }
        if !test(item)? {
            bad.push(i);
        }
    }
    let computed = if bad.is_empty() {
        format!("0 violations in {} instances", items.len())
    } else {
        format!(
            "{} violations in {} instances (first at #{})",
            bad.len(),
            items.len(),
            bad[0]
        )
    };
    outcome(expected, computed, bad.is_empty())
}

type CheckFn = Box<dyn Fn(&Ctx) -> Result<Outcome>>;

struct Check {
    group: SuiteId,
    name: String,
    anchor: String,
    run: CheckFn,
}

fn check(
    group: SuiteId,
    name: impl Into<String>,
    anchor: impl Into<String>,
    run: impl Fn(&Ctx) -> Result<Outcome> + 'static,
) -> Check {
    Check {
        group,
        name: name.into(),
        anchor: anchor.into(),
        run: Box::new(run),
    }
}

fn pursuer(h: &Hypergraph, k: usize, variant: Variant) -> Result<Box<dyn CopStrategy + Send>> {
    Ok(Box::new(extract_pursuer(Arc::new(solve(h, k, variant)?))))
}

fn optimal_robber(
    h: &Hypergraph,
    k: usize,
    variant: Variant,
) -> Result<Box<dyn RobberStrategy + Send>> {
    Ok(
        extract_strategy(Arc::new(solve(h, k, variant)?), Side::Robber)?
            .into_robber()
            .expect("robber side"),
    )
}

fn survives(h: &Hypergraph, robber: &mut dyn RobberStrategy, rounds: usize) -> Result<bool> {
    let mut cop = pursuer(h, 1, Variant::Standard)?;
    Ok(!play_match(h, 1, cop.as_mut(), robber, rounds, Variant::Standard)?.captured)
}

fn characterisation_checks(checks: &mut Vec<Check>) {
    use SuiteId::Characterisation as G;
    checks.push(check(
        G,
        "graphs: cop-win iff dismantlable",
        "cop-win iff dismantlable",
        |ctx| {
            let pool = graph_pool(ctx.seed, 6, 7, 1000);
            sweep(ctx, &pool, "0 violations", |g| {
                Ok(dismantling_order(g)?.is_some() == is_cop_win(g)?)
            })
        },
    ));
    checks.push(check(
        G,
        "hypergraphs: four-way cop-win equivalence",
        "cop-win iff dismantlable, also on the 2-section",
        |ctx| {
            let pool = hypergraph_pool(ctx.seed, 300);
            sweep(ctx, &pool, "0 violations", |h| {
                let g = h.two_section().into_inner();
                let answers = [
                    is_cop_win(h)?,
                    dismantling_order(h)?.is_some(),
                    is_cop_win(&g)?,
                    dismantling_order(&g)?.is_some(),
                ];
                Ok(answers.iter().all_equal())
            })
        },
    ));
    checks.push(check(
        G,
        "hypergraphs: c(H) = c([H]_2) up to 3",
        "cop number equals that of the 2-section",
        |ctx| {
            let pool = hypergraph_pool(ctx.seed, 300);
            sweep(ctx, &pool, "0 violations", |h| {
                let g = h.two_section().into_inner();
                Ok(cop_number(h, Some(3), Variant::Standard)?
                    == cop_number(&g, Some(3), Variant::Standard)?)
            })
        },
    ));
    checks.push(check(
        G,
        "corner deletion preserves connectivity",
        "deleting a corner keeps the hypergraph connected",
        |ctx| {
            let pool = hypergraph_pool(ctx.seed, 300);
            sweep(ctx, &pool, "0 violations", |h| {
                if h.vertex_count() < 2 {
                    return Ok(true);
                }
                for x in h.vertices() {
                    if h.is_corner(x)?.is_some() && !h.dot_delete(x)?.is_connected() {
                        return Ok(false);
                    }
                }
                Ok(true)
            })
        },
    ));
    checks.push(check(
        G,
        "corners agree with the 2-section",
        "x is a corner of H iff of [H]_2",
        |ctx| {
            let pool = hypergraph_pool(ctx.seed, 300);
            sweep(ctx, &pool, "0 violations", |h| {
                let g = h.two_section();
                for x in h.vertices() {
                    if h.is_corner(x)?.is_some() != g.is_corner(x)?.is_some() {
                        return Ok(false);
                    }
                }
                Ok(true)
            })
        },
    ));
    checks.push(check(
        G,
        "deletion commutes with the 2-section",
        "[H - x]_2 = [H]_2 - x",
        |ctx| {
            let pool = hypergraph_pool(ctx.seed, 300);
            sweep(ctx, &pool, "0 violations", |h| {
                if h.vertex_count() < 2 {
                    return Ok(true);
                }
                for x in h.vertices() {
                    let lhs = h.dot_delete(x)?.two_section().into_inner();
                    let rhs = graph_minus(&h.two_section(), x)?;
                    if lhs != rhs {
                        return Ok(false);
                    }
                }
                Ok(true)
            })
        },
    ));
    checks.push(check(
        G,
        "cop-win hypergraphs have a corner; corner deletion keeps cop-win status",
        "corner facts for cop-win hypergraphs",
        |ctx| {
            let pool = hypergraph_pool(ctx.seed, 300);
            sweep(ctx, &pool, "0 violations", |h| {
                if h.vertex_count() < 2 {
                    return Ok(true);
                }
                let win = is_cop_win(h)?;
                if win && find_corner(h)?.is_none() {
                    return Ok(false);
                }
                for x in h.vertices() {
                    if h.is_corner(x)?.is_some() && is_cop_win(&h.dot_delete(x)?)? != win {
                        return Ok(false);
                    }
                }
                Ok(true)
            })
        },
    ));
}

fn hypertree_checks(checks: &mut Vec<Check>) {
    use SuiteId::Hypertree as G;
    checks.push(check(
        G,
        "random hypertrees have cop number 1",
        "hypertrees are cop-win",
        |ctx| {
            let pool = hypertree_pool(ctx.seed, 200);
            sweep(ctx, &pool, "0 violations", |(t, _)| {
                Ok(cop_number(t, Some(1), Variant::Standard)? == Some(1))
            })
        },
    ));
    checks.push(check(
        G,
        "host-path cop captures the optimal robber within |V| rounds",
        "one cop walking the host tree wins",
        |ctx| {
            let pool = hypertree_pool(ctx.seed, 200);
            sweep(ctx, &pool, "0 violations", |(t, host)| {
                let mut cop = hypertree_cop_strategy(t, host)?;
                let mut robber = optimal_robber(t, 1, Variant::Standard)?;
                let n = t.vertex_count();
                Ok(play_match(t, 1, &mut cop, robber.as_mut(), n, Variant::Standard)?.captured)
            })
        },
    ));
    checks.push(check(
        G,
        "edges are closed under host paths; host edges are covered",
        "host-tree structure of hypertrees",
        |ctx| {
            let pool = hypertree_pool(ctx.seed, 200);
            sweep(ctx, &pool, "0 violations", |(t, host)| {
                let closed = t.edges().iter().all(|e| {
                    e.iter()
                        .tuple_combinations()
                        .all(|(&u, &v)| host.path(u, v).iter().all(|w| e.contains(w)))
                });
                let covered = host
                    .graph()
                    .edges()
                    .iter()
                    .all(|he| t.edges().iter().any(|e| he.iter().all(|v| e.contains(v))));
                Ok(closed && covered)
            })
        },
    ));
}

fn multipartite_checks(checks: &mut Vec<Check>) {
    use SuiteId::Multipartite as G;
    let families = [
        Multipartite::K(PartitionSpec::k_family(3, &[1, 2, 2])),
        Multipartite::K(PartitionSpec::k_family(2, &[2, 2])),
        Multipartite::K(PartitionSpec::k_family(3, &[2, 2, 2])),
        Multipartite::L(PartitionSpec::l_family(4, 2, &[1, 1, 2])),
    ];
    checks.push(check(
        G,
        "dominating cops capture the optimal robber in one move",
        "placements whose neighbourhoods cover V",
        move |ctx| {
            sweep(ctx, &families, "0 violations", |family| {
                let h = family.build()?;
                let mut cop = multipartite_cop_strategy(family)?;
                let k = cop.opening().len();
                let mut robber = optimal_robber(&h, k, Variant::Standard)?;
                let trace = play_match(&h, k, &mut cop, robber.as_mut(), 10, Variant::Standard)?;
                Ok(trace.captured && trace.rounds_played <= 1)
            })
        },
    ));
    for parts in [vec![2, 2], vec![2, 2, 2]] {
        let family = Multipartite::K(PartitionSpec::k_family(parts.len(), &parts));
        let name = format!(
            "class-hiding robber survives 100 rounds on K{}_{{{}}}",
            parts.len(),
            parts.iter().join(",")
        );
        checks.push(check(
            G,
            name,
            "robber stays in the cop's class",
            move |_| {
                let h = family.build()?;
                let mut robber = multipartite_robber_evader(&family)?;
                let ok = survives(&h, &mut robber, 100)?;
                outcome(
                    "not captured",
                    if ok { "not captured" } else { "captured" },
                    ok,
                )
            },
        ));
    }
}

fn product_checks(checks: &mut Vec<Check>) {
    use SuiteId::Products as G;
    let pairs = [
        ("E3 x E3", Family::Edge(3), Family::Edge(3)),
        ("K2 x K3", complete(2), complete(3)),
        ("K3 x K3", complete(3), complete(3)),
        (
            "Q2 x K3",
            Family::Basic(BasicKind::Hypercube, 2),
            complete(3),
        ),
    ];
    for (name, g, h) in pairs {
        checks.push(check(
            G,
            format!("coordinate-dodging robber survives 100 rounds on {name}"),
            "products need at least two cops",
            move |_| {
                let (g, h) = (g.build()?, h.build()?);
                let p = cartesian_product(&[g.clone(), h.clone()])?;
                let mut robber = product_robber_evader(&g, &h)?;
                let ok = survives(&p, &mut robber, 100)?;
                outcome(
                    "not captured",
                    if ok { "not captured" } else { "captured" },
                    ok,
                )
            },
        ));
    }
    checks.push(check(
        G,
        "counting inequality for p <= 4, q <= 3",
        "the product lower-bound counting inequality",
        |ctx| {
            let mut cases = Vec::new();
            for p in 0..=4usize {
                for q in 1..=3usize {
                    if (p, q) == (0, 1) {
                        continue;
                    }
                    for trees in (0..p).map(|_| 2..=4usize).multi_cartesian_product() {
                        for hgs in (0..q).map(|_| 3..=4usize).multi_cartesian_product() {
                            cases.push((trees.clone(), hgs));
                        }
                    }
                }
            }
            sweep(ctx, &cases, "0 violations", |(t, h)| {
                check_cover_inequality(t, h)
            })
        },
    ));
    checks.push(check(
        G,
        "one cop catches a forced-move robber on tree x tree",
        "one cop wins on a product of two trees if the robber must move",
        |ctx| {
            let trees: Vec<HostTree> = (2..=5)
                .flat_map(|n| nonisomorphic_trees(n).expect("small order"))
                .collect();
            let pairs: Vec<(HostTree, HostTree)> = trees
                .iter()
                .cartesian_product(&trees)
                .map(|(a, b)| (a.clone(), b.clone()))
                .collect();
            sweep(ctx, &pairs, "0 violations", |(t1, t2)| {
                let mut cop = mm_product_cop_strategy(t1, t2, Variant::ActiveRobber)?;
                let g = cop.graph().clone();
                let table = Arc::new(solve(&g, 1, Variant::ActiveRobber)?);
                let rounds = table.state_count();
                let mut robber = extract_strategy(table, Side::Robber)?
                    .into_robber()
                    .expect("robber side");
                Ok(play_match(
                    &g,
                    1,
                    &mut cop,
                    robber.as_mut(),
                    rounds,
                    Variant::ActiveRobber,
                )?
                .captured)
            })
        },
    ));
    checks.push(check(
        G,
        "2-section of a product is the product of 2-sections",
        "2-sections commute with products",
        |ctx| {
            let mut rng = ChaCha8Rng::seed_from_u64(ctx.seed ^ 0x3c6e_f372);
            let pairs: Vec<(Hypergraph, Hypergraph)> = (0..50)
                .map(|_| {
                    let mut draw = || {
                        let n = rng.gen_range(1..=5);
                        let edges = rng.gen_range(1..=n + 1);
                        random_connected_hypergraph(n, 4, edges, rng.gen())
                            .expect("valid parameters")
                    };
                    (draw(), draw())
                })
                .collect();
            sweep(ctx, &pairs, "0 violations", |(g, h)| {
                let lhs = cartesian_product(&[g.clone(), h.clone()])?
                    .two_section()
                    .into_inner();
                let rhs = cartesian_product(&[
                    g.two_section().into_inner(),
                    h.two_section().into_inner(),
                ])?;
                Ok(lhs == rhs)
            })
        },
    ));
    checks.push(check(
        G,
        "max(c(G), c(H), 2) <= c(G x H) <= c(G) + c(H)",
        "cop number bounds for products",
        |ctx| {
            let mut rng = ChaCha8Rng::seed_from_u64(ctx.seed ^ 0xa54f_f53a);
            let pairs: Vec<(Hypergraph, Hypergraph)> = (0..20)
                .map(|_| {
                    let mut draw = || {
                        let n = rng.gen_range(2..=4);
                        let edges = rng.gen_range(1..=n + 1);
                        random_connected_hypergraph(n, 3, edges, rng.gen())
                            .expect("valid parameters")
                    };
                    (draw(), draw())
                })
                .collect();
            sweep(ctx, &pairs, "0 violations", |(g, h)| {
                let cg = cop_number(g, None, Variant::Standard)?.expect("bounded by |V|");
                let ch = cop_number(h, None, Variant::Standard)?.expect("bounded by |V|");
                let p = cartesian_product(&[g.clone(), h.clone()])?;
                Ok(match cop_number(&p, Some(cg + ch), Variant::Standard)? {
                    Some(c) => c >= cg.max(ch).max(2),
                    None => false,
                })
            })
        },
    ));
}

fn prism_checks(checks: &mut Vec<Check>) {
    use SuiteId::Prism as G;
    checks.push(check(
        G,
        "prism cop captures on P(E3, 2, 3)",
        "the clone-chasing cop climbs the copies",
        |_| {
            let base = single_edge(3)?;
            let p = prism(&PrismSpec::new(base.clone(), 2, 3))?;
            let mut cop = prism_cop_strategy(&base, 2, 3, pursuer(&base, 1, Variant::Standard)?)?;
            let table = Arc::new(solve(&p, 1, Variant::Standard)?);
            let rounds = table.state_count();
            let mut robber = extract_strategy(table, Side::Robber)?
                .into_robber()
                .expect("robber side");
            let captured =
                play_match(&p, 1, &mut cop, robber.as_mut(), rounds, Variant::Standard)?.captured;
            outcome(
                "captured",
                if captured { "captured" } else { "not captured" },
                captured,
            )
        },
    ));
    checks.push(check(
        G,
        "copy-1 robber survives 100 rounds against 1 cop on P(C4, 2, 3)",
        "the robber hides in copy 1",
        |_| {
            let base = basic(BasicKind::Cycle, 4)?;
            let p = prism(&PrismSpec::new(base.clone(), 2, 3))?;
            let mut robber =
                prism_robber_evader(&base, 2, 3, optimal_robber(&base, 1, Variant::Standard)?)?;
            let ok = survives(&p, &mut robber, 100)?;
            outcome(
                "not captured",
                if ok { "not captured" } else { "captured" },
                ok,
            )
        },
    ));
    checks.push(check(
        G,
        "r = 2 prisms equal base x path up to labels",
        "r = 2 prisms are products with a path",
        |ctx| {
            let bases = [
                single_edge(3)?,
                basic(BasicKind::Cycle, 4)?,
                basic(BasicKind::Path, 3)?,
            ];
            sweep(ctx, &bases, "0 violations", |base| {
                let p = prism(&PrismSpec::new(base.clone(), 3, 2))?;
                let q = cartesian_product(&[basic(BasicKind::Path, 3)?, base.clone()])?;
                let labels = q
                    .labels()
                    .iter()
                    .map(|l| {
                        let inner = &l[1..l.len() - 1];
                        let (copy, v) = inner.split_once(',').expect("pair label");
                        format!("{v}@{copy}")
                    })
                    .collect();
                Ok(p == q.relabel(labels)?)
            })
        },
    ));
}

fn cop_number_checks(checks: &mut Vec<Check>) {
    for case in cop_number_cases() {
        let CopNumberCase {
            suite,
            name,
            anchor,
            family,
            expected,
        } = case;
        checks.push(check(suite, name, anchor, move |_| {
            let h = family.build()?;
            let c = cop_number(&h, Some(expected + 1), Variant::Standard)?;
            let computed = c.map_or_else(|| format!("> {}", expected + 1), |c| c.to_string());
            outcome(expected, computed, c == Some(expected))
        }));
    }
}

fn all_checks() -> Vec<Check> {
    let mut checks = Vec::new();
    characterisation_checks(&mut checks);
    hypertree_checks(&mut checks);
    cop_number_checks(&mut checks);
    multipartite_checks(&mut checks);
    product_checks(&mut checks);
    prism_checks(&mut checks);
    // Stable within each group; groups in declaration order.
    checks.sort_by_key(|c| SuiteId::GROUPS.iter().position(|&g| g == c.group));
    checks
}

/// Runs the checks of `id`. Checks that start after the budget is spent, or
/// run out of it mid-sweep, are marked skipped.
pub fn run_suite(id: SuiteId, budget: Option<Duration>, seed: u64) -> VerificationReport {
    let ctx = Ctx {
        seed,
        deadline: budget.map(|b| Instant::now() + b),
    };
    let mut records = Vec::new();
    for c in all_checks().into_iter().filter(|c| id.includes(c.group)) {
        let start = Instant::now();
        let (expected, computed, status) = if ctx.out_of_time() {
            (
                String::new(),
                "budget exhausted before start".to_string(),
                Status::Skipped,
            )
        } else {
            match (c.run)(&ctx) {
                Ok(Outcome::Done {
                    expected,
                    computed,
                    pass,
                }) => (
                    expected,
                    computed,
                    if pass { Status::Pass } else { Status::Fail },
                ),
                Ok(Outcome::Exhausted(msg)) => (String::new(), msg, Status::Skipped),
                Err(e) => (String::new(), format!("error: {e}"), Status::Fail),
            }
        };
        records.push(CheckRecord {
            name: c.name,
            anchor: c.anchor,
            expected,
            computed,
            status,
            elapsed_ms: start.elapsed().as_secs_f64() * 1000.0,
        });
    }
    let count = |s| records.iter().filter(|r| r.status == s).count();
    let summary = Summary {
        total: records.len(),
        passed: count(Status::Pass),
        failed: count(Status::Fail),
        skipped: count(Status::Skipped),
    };
    VerificationReport {
        suite: id,
        seed,
        budget_seconds: budget.map(|b| b.as_secs_f64()),
        checks: records,
        summary,
    }
}
