//! Scripted strategies for specific hypergraph families.
//!
//! Each constructor validates its family parameters, and every strategy
//! checks at placement that it is playing on the hypergraph it was built for.

use crate::construct::{
    cartesian_product, prism, HostTree, Multipartite, PrismSpec, ProductLayout,
};
use crate::error::{Error, Result};
use crate::hypergraph::{Hypergraph, Vertex};
use crate::solver::{cop_number, Board, CopStrategy, RobberStrategy, Variant};

fn precondition(msg: impl Into<String>) -> Error {
    Error::Precondition(msg.into())
}

fn check_board(board: &Board, expected: &Hypergraph, who: &str) -> Result<()> {
    if board.graph != expected {
        return Err(precondition(format!(
            "{who} strategy is played on a different hypergraph"
        )));
    }
    Ok(())
}

fn single_cop(k: usize, who: &str) -> Result<()> {
    if k != 1 {
        return Err(precondition(format!(
            "{who} strategy plays exactly one cop, got {k}"
        )));
    }
    Ok(())
}

/// Number of vertices in the component of `host - cop` that contains `robber`;
/// zero when they coincide.
pub fn territory(host: &HostTree, cop: Vertex, robber: Vertex) -> usize {
    if cop == robber {
        return 0;
    }
    let mut seen = vec![false; host.vertex_count()];
    seen[cop] = true;
    seen[robber] = true;
    let mut stack = vec![robber];
    let mut size = 0;
    while let Some(x) = stack.pop() {
        size += 1;
        for y in host.neighbors(x) {
            if !std::mem::replace(&mut seen[y], true) {
                stack.push(y);
            }
        }
    }
    size
}

/// One cop on a hypertree, walking the host path towards the robber.
pub struct HypertreeCop {
    graph: Hypergraph,
    host: HostTree,
}

pub fn hypertree_cop_strategy(t: &Hypergraph, host: &HostTree) -> Result<HypertreeCop> {
    host.certifies(t)?;
    Ok(HypertreeCop {
        graph: t.clone(),
        host: host.clone(),
    })
}

impl HypertreeCop {
    pub fn host(&self) -> &HostTree {
        &self.host
    }

    /// Least vertex of host degree at least 2, or the least vertex on tiny trees.
    pub fn opening(&self) -> Vertex {
        if self.host.vertex_count() <= 2 {
            return 0;
        }
        self.graph
            .vertices()
            .find(|&v| self.host.degree(v) >= 2)
            .expect("trees on 3+ vertices have internal vertices")
    }

    /// Farthest vertex on the host path to the robber that is one move away.
    pub fn advance(&self, cop: Vertex, robber: Vertex) -> Vertex {
        let path = self.host.path(cop, robber);
        *path
            .iter()
            .rev()
            .find(|&&p| self.graph.adjacent_or_equal(cop, p))
            .expect("path starts at the cop")
    }
}

impl CopStrategy for HypertreeCop {
    fn name(&self) -> &str {
        "hypertree"
    }

    fn place(&mut self, board: &Board, k: usize) -> Result<Vec<Vertex>> {
        check_board(board, &self.graph, "hypertree")?;
        single_cop(k, "hypertree")?;
        Ok(vec![self.opening()])
    }

    fn respond(&mut self, _board: &Board, cops: &[Vertex], robber: Vertex) -> Result<Vec<Vertex>> {
        Ok(vec![self.advance(cops[0], robber)])
    }
}

/// One cop on a product of two trees against a robber who must move.
pub struct MmProductCop {
    graph: Hypergraph,
    layout: ProductLayout,
    trees: [HostTree; 2],
    distances: [Vec<Vec<usize>>; 2],
}

pub fn mm_product_cop_strategy(
    t1: &HostTree,
    t2: &HostTree,
    variant: Variant,
) -> Result<MmProductCop> {
    if variant != Variant::ActiveRobber {
        return Err(precondition(
            "the product-of-trees cop only wins against a robber who must move",
        ));
    }
    if t1.vertex_count() < 2 || t2.vertex_count() < 2 {
        return Err(Error::param("both trees need at least two vertices"));
    }
    let graph = cartesian_product(&[
        t1.graph().as_hypergraph().clone(),
        t2.graph().as_hypergraph().clone(),
    ])?;
    let all_pairs = |t: &HostTree| {
        t.graph()
            .vertices()
            .map(|v| t.graph().distances_from(v))
            .collect()
    };
    Ok(MmProductCop {
        graph,
        layout: ProductLayout::new(vec![t1.vertex_count(), t2.vertex_count()]),
        distances: [all_pairs(t1), all_pairs(t2)],
        trees: [t1.clone(), t2.clone()],
    })
}

impl MmProductCop {
    pub fn graph(&self) -> &Hypergraph {
        &self.graph
    }

    /// Factor-wise tree distances from the cop to the robber.
    pub fn distances(&self, cop: Vertex, robber: Vertex) -> (usize, usize) {
        let (c, r) = (self.layout.decode(cop), self.layout.decode(robber));
        (self.distances[0][c[0]][r[0]], self.distances[1][c[1]][r[1]])
    }
}

impl CopStrategy for MmProductCop {
    fn name(&self) -> &str {
        "mm"
    }

    fn place(&mut self, board: &Board, k: usize) -> Result<Vec<Vertex>> {
        check_board(board, &self.graph, "mm")?;
        if board.variant != Variant::ActiveRobber {
            return Err(precondition(
                "the product-of-trees cop only wins against a robber who must move",
            ));
        }
        single_cop(k, "mm")?;
        Ok(vec![0])
    }

    fn respond(&mut self, _board: &Board, cops: &[Vertex], robber: Vertex) -> Result<Vec<Vertex>> {
        let (d1, d2) = self.distances(cops[0], robber);
        if (d1 + d2) % 2 == 0 {
            return Ok(cops.to_vec());
        }
        let mut c = self.layout.decode(cops[0]);
        let r = self.layout.decode(robber);
        let axis = if d1 >= d2 { 0 } else { 1 };
        c[axis] = self.trees[axis].path(c[axis], r[axis])[1];
        Ok(vec![self.layout.encode(&c)])
    }
}

/// Cops on a prism: an inner strategy on the base hunts the robber's copy-1
/// clone, then the cop that caught it climbs the copies after the robber.
pub struct PrismCop {
    spec: PrismSpec,
    graph: Hypergraph,
    inner: Box<dyn CopStrategy + Send>,
    tracker: Option<usize>,
}

fn check_prism_params(h: &Hypergraph, n: usize, r: usize) -> Result<PrismSpec> {
    if r < 3 {
        return Err(Error::param("prism strategies need r >= 3"));
    }
    let (_, antirank) = h.rank_antirank()?;
    if 2 * antirank < r {
        return Err(Error::param(format!(
            "base anti-rank {antirank} is below r/2 = {r}/2"
        )));
    }
    let spec = PrismSpec::new(h.clone(), n, r);
    spec.validate()?;
    Ok(spec)
}

pub fn prism_cop_strategy(
    h: &Hypergraph,
    n: usize,
    r: usize,
    inner: Box<dyn CopStrategy + Send>,
) -> Result<PrismCop> {
    let spec = check_prism_params(h, n, r)?;
    let graph = prism(&spec)?;
    Ok(PrismCop {
        spec,
        graph,
        inner,
        tracker: None,
    })
}

impl PrismCop {
    /// Index of the cop tracking the robber up the copies, once chosen.
    pub fn tracker(&self) -> Option<usize> {
        self.tracker
    }
}

impl CopStrategy for PrismCop {
    fn name(&self) -> &str {
        "prism"
    }

    fn place(&mut self, board: &Board, k: usize) -> Result<Vec<Vertex>> {
        check_board(board, &self.graph, "prism")?;
        self.tracker = None;
        let base = Board {
            graph: &self.spec.base,
            variant: board.variant,
        };
        let placed = self.inner.place(&base, k)?;
        Ok(placed
            .into_iter()
            .map(|v| self.spec.clone_of(v, 1))
            .collect())
    }

    fn respond(&mut self, board: &Board, cops: &[Vertex], robber: Vertex) -> Result<Vec<Vertex>> {
        let (w, j) = self.spec.origin(robber);
        if self.tracker.is_none() {
            self.tracker = cops.iter().position(|&c| self.spec.origin(c) == (w, 1));
        }
        let Some(t) = self.tracker else {
            let base = Board {
                graph: &self.spec.base,
                variant: board.variant,
            };
            let projected: Vec<Vertex> = cops.iter().map(|&c| self.spec.origin(c).0).collect();
            let moved = self.inner.respond(&base, &projected, w)?;
            return Ok(moved
                .into_iter()
                .map(|v| self.spec.clone_of(v, 1))
                .collect());
        };
        let (x, i) = self.spec.origin(cops[t]);
        if !self.spec.base.adjacent_or_equal(x, w) || j < i {
            return Err(precondition(format!(
                "tracking cop at copy {i} lost the robber at copy {j}"
            )));
        }
        let target = if j <= i + 1 {
            robber
        } else {
            self.spec.clone_of(w, i + 1)
        };
        let mut next = cops.to_vec();
        next[t] = target;
        Ok(next)
    }
}

/// Robber on a prism who stays in copy 1 and evades the cops' projections.
pub struct PrismRobber {
    spec: PrismSpec,
    graph: Hypergraph,
    inner: Box<dyn RobberStrategy + Send>,
    cop_number: usize,
}

pub fn prism_robber_evader(
    h: &Hypergraph,
    n: usize,
    r: usize,
    inner: Box<dyn RobberStrategy + Send>,
) -> Result<PrismRobber> {
    let spec = check_prism_params(h, n, r)?;
    let c =
        cop_number(h, None, Variant::Standard)?.expect("every connected hypergraph is |V|-cop-win");
    if c < 2 {
        return Err(precondition("base hypergraph is cop-win; no evader exists"));
    }
    let graph = prism(&spec)?;
    Ok(PrismRobber {
        spec,
        graph,
        inner,
        cop_number: c,
    })
}

impl PrismRobber {
    fn project(&self, cops: &[Vertex]) -> Vec<Vertex> {
        cops.iter().map(|&c| self.spec.origin(c).0).collect()
    }
}

impl RobberStrategy for PrismRobber {
    fn name(&self) -> &str {
        "evader-prism"
    }

    fn place(&mut self, board: &Board, cops: &[Vertex]) -> Result<Vertex> {
        check_board(board, &self.graph, "evader-prism")?;
        if cops.len() >= self.cop_number {
            return Err(precondition(format!(
                "{} cops can win on a base with cop number {}",
                cops.len(),
                self.cop_number
            )));
        }
        let base = Board {
            graph: &self.spec.base,
            variant: board.variant,
        };
        let w = self.inner.place(&base, &self.project(cops))?;
        Ok(self.spec.clone_of(w, 1))
    }

    fn respond(&mut self, board: &Board, cops: &[Vertex], robber: Vertex) -> Result<Vertex> {
        let base = Board {
            graph: &self.spec.base,
            variant: board.variant,
        };
        let w = self
            .inner
            .respond(&base, &self.project(cops), self.spec.origin(robber).0)?;
        Ok(self.spec.clone_of(w, 1))
    }
}

/// Cops whose closed neighbourhoods cover a multipartite hypergraph.
pub struct MultipartiteCop {
    graph: Hypergraph,
    opening: Vec<Vertex>,
}

pub fn multipartite_cop_strategy(family: &Multipartite) -> Result<MultipartiteCop> {
    let graph = family.build()?;
    let parts = &family.spec().parts;
    let opening = match family {
        Multipartite::K(_) if parts[0] == 1 => vec![0],
        Multipartite::K(_) => vec![0, parts[0]],
        Multipartite::L(_) => vec![parts[..parts.len() - 1].iter().sum()],
    };
    Ok(MultipartiteCop { graph, opening })
}

impl MultipartiteCop {
    pub fn opening(&self) -> &[Vertex] {
        &self.opening
    }
}

impl CopStrategy for MultipartiteCop {
    fn name(&self) -> &str {
        "multipartite"
    }

    fn place(&mut self, board: &Board, k: usize) -> Result<Vec<Vertex>> {
        check_board(board, &self.graph, "multipartite")?;
        if k != self.opening.len() {
            return Err(precondition(format!(
                "multipartite strategy plays {} cops, got {k}",
                self.opening.len()
            )));
        }
        Ok(self.opening.clone())
    }

    fn respond(&mut self, _board: &Board, cops: &[Vertex], robber: Vertex) -> Result<Vec<Vertex>> {
        let mut next = cops.to_vec();
        match cops
            .iter()
            .position(|&c| self.graph.adjacent_or_equal(c, robber))
        {
            Some(i) => next[i] = robber,
            None => {
                return Err(precondition(
                    "no cop reaches the robber; opening does not dominate",
                ))
            }
        }
        Ok(next)
    }
}

/// Robber on a complete multipartite hypergraph who hides in the cop's class.
pub struct MultipartiteRobber {
    graph: Hypergraph,
    class: Vec<usize>,
}

pub fn multipartite_robber_evader(family: &Multipartite) -> Result<MultipartiteRobber> {
    let Multipartite::K(spec) = family else {
        return Err(precondition(
            "the class-hiding robber needs a complete multipartite family",
        ));
    };
    if spec.parts[0] < 2 {
        return Err(precondition("every class needs at least two vertices"));
    }
    Ok(MultipartiteRobber {
        graph: family.build()?,
        class: spec.classes(),
    })
}

impl MultipartiteRobber {
    fn hide(&self, board: &Board, cops: &[Vertex], from: Option<Vertex>) -> Result<Vertex> {
        let [cop] = cops else {
            return Err(precondition(format!(
                "the class-hiding robber faces exactly one cop, got {}",
                cops.len()
            )));
        };
        let safe = |v: Vertex| v != *cop && self.class[v] == self.class[*cop];
        let found = match from {
            None => self.graph.vertices().find(|&v| safe(v)),
            Some(r) => board
                .variant
                .robber_moves(board.graph, r)
                .find(|&v| safe(v)),
        };
        found.ok_or_else(|| precondition("no vertex of the cop's class is reachable"))
    }
}

impl RobberStrategy for MultipartiteRobber {
    fn name(&self) -> &str {
        "evader-multipartite"
    }

    fn place(&mut self, board: &Board, cops: &[Vertex]) -> Result<Vertex> {
        check_board(board, &self.graph, "evader-multipartite")?;
        self.hide(board, cops, None)
    }

    fn respond(&mut self, board: &Board, cops: &[Vertex], robber: Vertex) -> Result<Vertex> {
        let [cop] = cops else {
            return self.hide(board, cops, None);
        };
        if board.variant == Variant::Standard
            && robber != *cop
            && self.class[robber] == self.class[*cop]
        {
            return Ok(robber);
        }
        self.hide(board, cops, Some(robber))
    }
}

/// Robber on a two-factor product who differs from the cop in both coordinates.
pub struct ProductRobber {
    graph: Hypergraph,
    layout: ProductLayout,
}

pub fn product_robber_evader(g: &Hypergraph, h: &Hypergraph) -> Result<ProductRobber> {
    if g.vertex_count() < 2 || h.vertex_count() < 2 {
        return Err(Error::param("both factors need at least two vertices"));
    }
    Ok(ProductRobber {
        graph: cartesian_product(&[g.clone(), h.clone()])?,
        layout: ProductLayout::new(vec![g.vertex_count(), h.vertex_count()]),
    })
}

impl ProductRobber {
    fn safe(&self, cop: Vertex, v: Vertex) -> bool {
        let (c, r) = (self.layout.decode(cop), self.layout.decode(v));
        c[0] != r[0] && c[1] != r[1]
    }

    fn the_cop(cops: &[Vertex]) -> Result<Vertex> {
        match cops {
            [cop] => Ok(*cop),
            _ => Err(precondition(format!(
                "the product evader faces exactly one cop, got {}",
                cops.len()
            ))),
        }
    }
}

impl RobberStrategy for ProductRobber {
    fn name(&self) -> &str {
        "evader-product"
    }

    fn place(&mut self, board: &Board, cops: &[Vertex]) -> Result<Vertex> {
        check_board(board, &self.graph, "evader-product")?;
        let cop = Self::the_cop(cops)?;
        Ok(self
            .graph
            .vertices()
            .find(|&v| self.safe(cop, v))
            .expect("factors have two vertices each"))
    }

    fn respond(&mut self, board: &Board, cops: &[Vertex], robber: Vertex) -> Result<Vertex> {
        let cop = Self::the_cop(cops)?;
        if board.variant == Variant::Standard && self.safe(cop, robber) {
            return Ok(robber);
        }
        board
            .variant
            .robber_moves(board.graph, robber)
            .find(|&v| self.safe(cop, v))
            .ok_or_else(|| precondition("no move keeps both coordinates away from the cop"))
    }
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::construct::{basic, hypertree_from_host, single_edge, BasicKind, PartitionSpec};
    use crate::solver::{
        extract_pursuer, extract_strategy, play_match, solve, RandomCop, RandomRobber, Side,
    };

    fn optimal_robber(
        h: &Hypergraph,
        k: usize,
        variant: Variant,
    ) -> Box<dyn RobberStrategy + Send> {
        let table = Arc::new(solve(h, k, variant).unwrap());
        extract_strategy(table, Side::Robber)
            .unwrap()
            .into_robber()
            .unwrap()
    }

    fn pursuer(h: &Hypergraph, k: usize, variant: Variant) -> Box<dyn CopStrategy + Send> {
        Box::new(extract_pursuer(Arc::new(solve(h, k, variant).unwrap())))
    }

    fn path_host(n: usize) -> HostTree {
        HostTree::from_edges(n, &(1..n).map(|i| (i - 1, i)).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn hypertree_single_edge() {
        let host = path_host(3);
        let t = hypertree_from_host(&host, vec![vec![0, 1, 2]]).unwrap();
        let mut cop = hypertree_cop_strategy(&t, &host).unwrap();
        assert_eq!(cop.opening(), 1);
        let mut robber = optimal_robber(&t, 1, Variant::Standard);
        let trace = play_match(&t, 1, &mut cop, robber.as_mut(), 10, Variant::Standard).unwrap();
        assert!(trace.captured && trace.rounds_played <= 1);
    }

    #[test]
    fn hypertree_two_edges_against_optimal() {
        let host = path_host(5);
        let t = hypertree_from_host(&host, vec![vec![0, 1, 2], vec![2, 3, 4]]).unwrap();
        let mut cop = hypertree_cop_strategy(&t, &host).unwrap();
        let mut robber = optimal_robber(&t, 1, Variant::Standard);
        let trace = play_match(&t, 1, &mut cop, robber.as_mut(), 5, Variant::Standard).unwrap();
        assert!(trace.captured && trace.rounds_played <= 5);
    }

    #[test]
    fn hypertree_single_vertex() {
        let host = HostTree::from_edges(1, &[]).unwrap();
        let t = hypertree_from_host(&host, vec![]).unwrap();
        let mut cop = hypertree_cop_strategy(&t, &host).unwrap();
        let trace = play_match(
            &t,
            1,
            &mut cop,
            &mut RandomRobber::new(0),
            3,
            Variant::Standard,
        )
        .unwrap();
        assert!(trace.captured);
        assert_eq!(trace.rounds_played, 0);
    }

    #[test]
    fn hypertree_rejects_bad_host() {
        let host = path_host(3);
        let t = Hypergraph::with_numbered_vertices(3, vec![vec![0, 2], vec![1, 2]]).unwrap();
        assert!(hypertree_cop_strategy(&t, &host).is_err());
    }

    #[test]
    fn territory_shrinks_on_random_hypertrees() {
        for seed in 0..40 {
            let (t, host) = crate::construct::random_hypertree(9, 4, 4, seed).unwrap();
            let mut cop = hypertree_cop_strategy(&t, &host).unwrap();
            let mut robber = RandomRobber::new(seed);
            let trace = play_match(
                &t,
                1,
                &mut cop,
                &mut robber,
                t.vertex_count(),
                Variant::Standard,
            )
            .unwrap();
            assert!(trace.captured, "seed {seed}");
            // Replay: after every cop move the robber's component strictly shrinks.
            let mut c = t.vertex(&trace.cop_placement[0]).unwrap();
            let mut r = t.vertex(&trace.robber_placement).unwrap();
            let mut last = territory(&host, c, r);
            for round in &trace.rounds {
                c = t.vertex(&round.cops[0]).unwrap();
                let now = territory(&host, c, r);
                assert!(now < last, "seed {seed}");
                if let Some(next) = &round.robber {
                    r = t.vertex(next).unwrap();
                }
                last = if t.adjacent_or_equal(c, r) {
                    now
                } else {
                    territory(&host, c, r)
                };
            }
        }
    }

    #[test]
    fn mm_captures_active_robber() {
        for n in [2, 3] {
            let p = path_host(n);
            let mut cop = mm_product_cop_strategy(&p, &p, Variant::ActiveRobber).unwrap();
            let g = cop.graph().clone();
            let mut robber = optimal_robber(&g, 1, Variant::ActiveRobber);
            let trace = play_match(
                &g,
                1,
                &mut cop,
                robber.as_mut(),
                2 * g.vertex_count() * g.vertex_count(),
                Variant::ActiveRobber,
            )
            .unwrap();
            assert!(trace.captured, "P{n} x P{n}");
        }
    }

    #[test]
    fn mm_rejects_standard_variant() {
        let p = path_host(2);
        assert!(matches!(
            mm_product_cop_strategy(&p, &p, Variant::Standard),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn prism_single_edge_one_cop() {
        let base = single_edge(3).unwrap();
        let p = prism(&PrismSpec::new(base.clone(), 2, 3)).unwrap();
        let mut cop =
            prism_cop_strategy(&base, 2, 3, pursuer(&base, 1, Variant::Standard)).unwrap();
        let mut robber = optimal_robber(&p, 1, Variant::Standard);
        let trace = play_match(&p, 1, &mut cop, robber.as_mut(), 20, Variant::Standard).unwrap();
        assert!(trace.captured);
    }

    #[test]
    fn prism_c4_two_cops() {
        let base = basic(BasicKind::Cycle, 4).unwrap();
        let p = prism(&PrismSpec::new(base.clone(), 2, 3)).unwrap();
        let mut cop =
            prism_cop_strategy(&base, 2, 3, pursuer(&base, 2, Variant::Standard)).unwrap();
        let mut robber = optimal_robber(&p, 2, Variant::Standard);
        let trace = play_match(&p, 2, &mut cop, robber.as_mut(), 30, Variant::Standard).unwrap();
        assert!(trace.captured);
        for seed in 0..20 {
            let mut cop =
                prism_cop_strategy(&base, 2, 3, pursuer(&base, 2, Variant::Standard)).unwrap();
            let trace = play_match(
                &p,
                2,
                &mut cop,
                &mut RandomRobber::new(seed),
                30,
                Variant::Standard,
            )
            .unwrap();
            assert!(trace.captured, "seed {seed}");
        }
    }

    struct StayAt(Vertex);

    impl RobberStrategy for StayAt {
        fn name(&self) -> &str {
            "stay"
        }
        fn place(&mut self, _: &Board, _: &[Vertex]) -> Result<Vertex> {
            Ok(self.0)
        }
        fn respond(&mut self, _: &Board, _: &[Vertex], r: Vertex) -> Result<Vertex> {
            Ok(r)
        }
    }

    #[test]
    fn prism_robber_in_copy_one_needs_no_climb() {
        let base = single_edge(3).unwrap();
        let p = prism(&PrismSpec::new(base.clone(), 3, 3)).unwrap();
        let mut cop =
            prism_cop_strategy(&base, 3, 3, pursuer(&base, 1, Variant::Standard)).unwrap();
        let low = p.vertex("3@1").unwrap();
        let trace = play_match(&p, 1, &mut cop, &mut StayAt(low), 5, Variant::Standard).unwrap();
        assert!(trace.captured && trace.rounds_played == 1);
        let high = p.vertex("3@3").unwrap();
        let trace = play_match(&p, 1, &mut cop, &mut StayAt(high), 10, Variant::Standard).unwrap();
        assert!(trace.captured);
        assert_eq!(cop.tracker(), Some(0));
    }

    #[test]
    fn prism_params_rejected() {
        let base = single_edge(3).unwrap();
        assert!(prism_cop_strategy(&base, 2, 2, pursuer(&base, 1, Variant::Standard)).is_err());
        assert!(prism_cop_strategy(&base, 1, 3, pursuer(&base, 1, Variant::Standard)).is_err());
        assert!(prism_cop_strategy(&base, 2, 7, pursuer(&base, 1, Variant::Standard)).is_err());
    }

    #[test]
    fn prism_evader_survives_one_cop() {
        let base = basic(BasicKind::Cycle, 4).unwrap();
        for n in [2, 3] {
            let p = prism(&PrismSpec::new(base.clone(), n, 3)).unwrap();
            let mut robber =
                prism_robber_evader(&base, n, 3, optimal_robber(&base, 1, Variant::Standard))
                    .unwrap();
            let mut cop = extract_pursuer(Arc::new(solve(&p, 1, Variant::Standard).unwrap()));
            let trace = play_match(&p, 1, &mut cop, &mut robber, 100, Variant::Standard).unwrap();
            assert!(!trace.captured, "n={n}");
        }
    }

    #[test]
    fn prism_evader_refuses_enough_cops() {
        let base = basic(BasicKind::Cycle, 4).unwrap();
        let p = prism(&PrismSpec::new(base.clone(), 2, 3)).unwrap();
        let mut robber =
            prism_robber_evader(&base, 2, 3, optimal_robber(&base, 2, Variant::Standard)).unwrap();
        let err = play_match(
            &p,
            2,
            &mut RandomCop::new(1),
            &mut robber,
            10,
            Variant::Standard,
        )
        .unwrap_err();
        assert!(matches!(
            err,
            Error::Strategy {
                side: Side::Robber,
                round: 0,
                ..
            }
        ));
        let single = single_edge(3).unwrap();
        assert!(
            prism_robber_evader(&single, 2, 3, optimal_robber(&single, 1, Variant::Standard))
                .is_err()
        );
    }

    #[test]
    fn multipartite_cops_capture_in_one_move() {
        let families = [
            Multipartite::K(PartitionSpec::k_family(3, &[1, 2, 2])),
            Multipartite::K(PartitionSpec::k_family(2, &[2, 2])),
            Multipartite::L(PartitionSpec::l_family(4, 2, &[1, 1, 2])),
            Multipartite::K(PartitionSpec::k_family(3, &[2, 2, 2])),
            Multipartite::L(PartitionSpec::l_family(5, 3, &[1, 2, 3])),
        ];
        for family in families {
            let h = family.build().unwrap();
            let mut cop = multipartite_cop_strategy(&family).unwrap();
            let k = cop.opening().len();
            for r in h.vertices() {
                let trace =
                    play_match(&h, k, &mut cop, &mut StayAt(r), 5, Variant::Standard).unwrap();
                assert!(
                    trace.captured && trace.rounds_played <= 1,
                    "{family:?} robber {r}"
                );
            }
            let mut robber = optimal_robber(&h, k, Variant::Standard);
            let trace = play_match(&h, k, &mut cop, robber.as_mut(), 5, Variant::Standard).unwrap();
            assert!(trace.captured && trace.rounds_played <= 1, "{family:?}");
        }
    }

    #[test]
    fn multipartite_evader_survives() {
        for parts in [vec![2, 2], vec![2, 2, 2]] {
            let family = Multipartite::K(PartitionSpec::k_family(parts.len(), &parts));
            let h = family.build().unwrap();
            let mut robber = multipartite_robber_evader(&family).unwrap();
            let mut cop = extract_pursuer(Arc::new(solve(&h, 1, Variant::Standard).unwrap()));
            let trace = play_match(&h, 1, &mut cop, &mut robber, 100, Variant::Standard).unwrap();
            assert!(!trace.captured, "{parts:?}");
            for seed in 0..10 {
                let trace = play_match(
                    &h,
                    1,
                    &mut RandomCop::new(seed),
                    &mut robber,
                    100,
                    Variant::Standard,
                )
                .unwrap();
                assert!(!trace.captured);
            }
        }
    }

    #[test]
    fn multipartite_evader_preconditions() {
        let k122 = Multipartite::K(PartitionSpec::k_family(3, &[1, 2, 2]));
        assert!(multipartite_robber_evader(&k122).is_err());
        let family = Multipartite::K(PartitionSpec::k_family(3, &[2, 2, 2]));
        let h = family.build().unwrap();
        let mut robber = multipartite_robber_evader(&family).unwrap();
        assert!(play_match(
            &h,
            2,
            &mut RandomCop::new(0),
            &mut robber,
            10,
            Variant::Standard
        )
        .is_err());
    }

    #[test]
    fn product_evader_survives() {
        let k2 = basic(BasicKind::Complete, 2).unwrap();
        let e3 = single_edge(3).unwrap();
        let host = path_host(5);
        let tree = hypertree_from_host(&host, vec![vec![0, 1, 2], vec![2, 3, 4]]).unwrap();
        for (g, h) in [(k2.clone(), k2), (e3.clone(), e3), (tree.clone(), tree)] {
            let p = cartesian_product(&[g.clone(), h.clone()]).unwrap();
            let mut robber = product_robber_evader(&g, &h).unwrap();
            let mut cop = extract_pursuer(Arc::new(solve(&p, 1, Variant::Standard).unwrap()));
            let trace = play_match(&p, 1, &mut cop, &mut robber, 100, Variant::Standard).unwrap();
            assert!(!trace.captured);
            for seed in 0..10 {
                let trace = play_match(
                    &p,
                    1,
                    &mut RandomCop::new(seed),
                    &mut robber,
                    100,
                    Variant::Standard,
                )
                .unwrap();
                assert!(!trace.captured);
            }
        }
    }

    #[test]
    fn product_evader_refuses_two_cops() {
        let k2 = basic(BasicKind::Complete, 2).unwrap();
        let p = cartesian_product(&[k2.clone(), k2.clone()]).unwrap();
        let mut robber = product_robber_evader(&k2, &k2).unwrap();
        assert!(play_match(
            &p,
            2,
            &mut RandomCop::new(0),
            &mut robber,
            10,
            Variant::Standard
        )
        .is_err());
    }

    #[test]
    fn strategies_reject_foreign_boards() {
        let host = path_host(3);
        let t = hypertree_from_host(&host, vec![vec![0, 1, 2]]).unwrap();
        let mut cop = hypertree_cop_strategy(&t, &host).unwrap();
        let other = basic(BasicKind::Cycle, 4).unwrap();
        assert!(play_match(
            &other,
            1,
            &mut cop,
            &mut RandomRobber::new(0),
            3,
            Variant::Standard
        )
        .is_err());
    }
}
