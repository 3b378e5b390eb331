//! Exact k-cop game solving by backward induction.
//!
//! Cop positions are stored as sorted tuples (cops are interchangeable), and
//! ranked with the combinatorial number system so the whole state space is a
//! dense array. The win table is the least fixed point of the attractor
//! iteration seeded from capture states, computed layer by layer so that each
//! won state records how many cop moves optimal play needs to capture.

mod play;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hypergraph::{Hypergraph, Vertex};

pub use play::{
    extract_pursuer, extract_strategy, play_match, Board, CopStrategy, MatchTrace, OptimalCop,
    OptimalRobber, PassCop, PassRobber, RandomCop, RandomRobber, RobberStrategy, Round, Strategy,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Cop,
    Robber,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Cop => "cop",
            Side::Robber => "robber",
        })
    }
}

/// Robber movement rules.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Variant {
    /// The robber may stay put or move within his closed neighbourhood.
    #[default]
    Standard,
    /// The robber must move to a different vertex on every turn.
    ActiveRobber,
}

impl Variant {
    /// Vertices the robber may move to from `r`.
    pub fn robber_moves<'a>(
        self,
        h: &'a Hypergraph,
        r: Vertex,
    ) -> impl Iterator<Item = Vertex> + 'a {
        let active = self == Variant::ActiveRobber;
        h.closed(r)
            .iter()
            .copied()
            .filter(move |&y| !active || y != r)
    }
}

impl std::str::FromStr for Variant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "standard" => Ok(Variant::Standard),
            "active" | "active_robber" | "active-robber" => Ok(Variant::ActiveRobber),
            other => Err(Error::param(format!("unknown variant `{other}`"))),
        }
    }
}

/// A position in the game with cops in canonical (sorted) order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GameState {
    pub cops: Vec<Vertex>,
    pub robber: Vertex,
    pub to_move: Side,
}

impl GameState {
    pub fn new(mut cops: Vec<Vertex>, robber: Vertex, to_move: Side) -> Self {
        cops.sort_unstable();
        Self {
            cops,
            robber,
            to_move,
        }
    }

    pub fn is_capture(&self) -> bool {
        self.cops.contains(&self.robber)
    }
}

/// Ranks sorted k-tuples over `0..n` (multisets) densely.
#[derive(Debug, Clone)]
pub(crate) struct MultisetIndex {
    n: usize,
    k: usize,
    binom: Vec<Vec<usize>>,
    count: usize,
}

impl MultisetIndex {
    pub(crate) fn new(n: usize, k: usize) -> Result<Self> {
        let top = n + k;
        let mut binom = vec![vec![0usize; k + 2]; top + 1];
        for row in binom.iter_mut() {
            row[0] = 1;
        }
        for m in 1..=top {
            for j in 1..=k + 1 {
                binom[m][j] = binom[m - 1][j - 1]
                    .checked_add(binom[m - 1][j])
                    .ok_or_else(|| Error::param("state space too large"))?;
            }
        }
        let count = binom[n + k - 1][k];
        Ok(Self { n, k, binom, count })
    }

    pub(crate) fn count(&self) -> usize {
        self.count
    }

    /// Colex rank of a sorted tuple.
    pub(crate) fn rank(&self, sorted: &[Vertex]) -> usize {
        debug_assert_eq!(sorted.len(), self.k);
        sorted
            .iter()
            .enumerate()
            .map(|(i, &a)| self.binom[a + i][i + 1])
            .sum()
    }

    /// All sorted tuples, in increasing rank order.
    pub(crate) fn all(&self) -> Vec<Vec<Vertex>> {
        let mut out = vec![Vec::new(); self.count];
        let mut cur = vec![0; self.k];
        loop {
            out[self.rank(&cur)] = cur.clone();
            // Advance to the next non-decreasing tuple, last coordinate fastest.
            let mut i = self.k;
            loop {
                if i == 0 {
                    return out;
                }
                i -= 1;
                if cur[i] + 1 < self.n {
                    let v = cur[i] + 1;
                    for c in &mut cur[i..] {
                        *c = v;
                    }
                    break;
                }
            }
        }
    }
}

const UNWON: u32 = u32::MAX;

/// Result of solving the k-cop game on a hypergraph.
#[derive(Debug, Clone)]
pub struct WinTable {
    graph: Hypergraph,
    k: usize,
    variant: Variant,
    index: MultisetIndex,
    placements: Vec<Vec<Vertex>>,
    /// Indexed by `state_index`; `UNWON` marks robber-wins.
    steps: Vec<u32>,
}

fn side_bit(side: Side) -> usize {
    match side {
        Side::Cop => 0,
        Side::Robber => 1,
    }
}

/// Calls `f` with every sorted tuple reachable from `cops` in one cop move.
/// Duplicates are possible when cops share neighbourhoods.
fn for_each_cop_move(h: &Hypergraph, cops: &[Vertex], mut f: impl FnMut(&[Vertex], &[Vertex])) {
    let k = cops.len();
    let mut choice = vec![0usize; k];
    let mut tuple: Vec<Vertex> = cops.iter().map(|&c| h.closed(c)[0]).collect();
    let mut sorted = tuple.clone();
    loop {
        sorted.copy_from_slice(&tuple);
        sorted.sort_unstable();
        f(&tuple, &sorted);
        let mut i = k;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            let nbrs = h.closed(cops[i]);
            if choice[i] + 1 < nbrs.len() {
                choice[i] += 1;
                tuple[i] = nbrs[choice[i]];
                break;
            }
            choice[i] = 0;
            tuple[i] = nbrs[0];
        }
    }
}

impl WinTable {
    pub fn graph(&self) -> &Hypergraph {
        &self.graph
    }

    pub fn cops(&self) -> usize {
        self.k
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    /// Number of states (both sides to move).
    pub fn state_count(&self) -> usize {
        self.steps.len()
    }

    fn state_index(&self, rank: usize, robber: Vertex, side: Side) -> usize {
        (rank * self.graph.vertex_count() + robber) * 2 + side_bit(side)
    }

    fn index_of(&self, state: &GameState) -> Result<usize> {
        let n = self.graph.vertex_count();
        if state.cops.len() != self.k {
            return Err(Error::param(format!(
                "expected {} cops, got {}",
                self.k,
                state.cops.len()
            )));
        }
        if state.robber >= n || state.cops.iter().any(|&c| c >= n) {
            return Err(Error::param(
                "state mentions a vertex outside the hypergraph",
            ));
        }
        let mut sorted = state.cops.clone();
        sorted.sort_unstable();
        Ok(self.state_index(self.index.rank(&sorted), state.robber, state.to_move))
    }

    pub fn won(&self, state: &GameState) -> Result<bool> {
        Ok(self.steps[self.index_of(state)?] != UNWON)
    }

    /// Cop moves needed to capture under optimal play, or `None` if the robber escapes.
    pub fn steps_to_capture(&self, state: &GameState) -> Result<Option<u32>> {
        let s = self.steps[self.index_of(state)?];
        Ok((s != UNWON).then_some(s))
    }

    pub(crate) fn steps_sorted(
        &self,
        sorted_cops: &[Vertex],
        robber: Vertex,
        side: Side,
    ) -> Option<u32> {
        let s = self.steps[self.state_index(self.index.rank(sorted_cops), robber, side)];
        (s != UNWON).then_some(s)
    }

    /// All cop placements (sorted) in rank order.
    pub fn placements(&self) -> &[Vec<Vertex>] {
        &self.placements
    }

    /// Worst-case capture time from a placement over all robber replies, if it wins.
    pub fn placement_value(&self, sorted_cops: &[Vertex]) -> Option<u32> {
        self.graph
            .vertices()
            .map(|r| self.steps_sorted(sorted_cops, r, Side::Cop))
            .try_fold(0u32, |acc, s| s.map(|s| acc.max(s)))
    }

    /// Placements from which the cops win against every robber placement.
    pub fn winning_placements(&self) -> impl Iterator<Item = &[Vertex]> {
        self.placements
            .iter()
            .map(Vec::as_slice)
            .filter(|p| self.placement_value(p).is_some())
    }

    pub fn is_k_cop_win(&self) -> bool {
        self.winning_placements().next().is_some()
    }

    /// Diagnostic dump: one line per won state.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("cops,robber,to_move,steps_to_capture\n");
        for p in &self.placements {
            let cops: Vec<&str> = p.iter().map(|&c| self.graph.label(c)).collect();
            for r in self.graph.vertices() {
                for side in [Side::Cop, Side::Robber] {
                    if let Some(s) = self.steps_sorted(p, r, side) {
                        out.push_str(&format!(
                            "\"{}\",{},{},{}\n",
                            cops.join(" "),
                            self.graph.label(r),
                            side,
                            s
                        ));
                    }
                }
            }
        }
        out
    }
}

/// Solves the k-cop game on `h` under `variant`.
pub fn solve(h: &Hypergraph, k: usize, variant: Variant) -> Result<WinTable> {
    if k == 0 {
        return Err(Error::param("need at least one cop"));
    }
    h.require_connected()?;
    let n = h.vertex_count();
    let index = MultisetIndex::new(n, k)?;
    let placements = index.all();
    let m = index.count();
    let total = m
        .checked_mul(n)
        .and_then(|x| x.checked_mul(2))
        .filter(|&t| t <= u32::MAX as usize)
        .ok_or_else(|| {
            Error::param(format!(
                "state space too large for {k} cops on {n} vertices"
            ))
        })?;
    let mut table = WinTable {
        graph: h.clone(),
        k,
        variant,
        index,
        placements,
        steps: vec![UNWON; total],
    };

    let robber_options: Vec<u32> = h
        .vertices()
        .map(|r| variant.robber_moves(h, r).count() as u32)
        .collect();
    let mut remaining = vec![0u32; total];
    let mut layer: Vec<usize> = Vec::new();

    for rank in 0..m {
        let cops = &table.placements[rank];
        for (r, &options) in robber_options.iter().enumerate() {
            let ci = table.state_index(rank, r, Side::Cop);
            let ri = table.state_index(rank, r, Side::Robber);
            if cops.contains(&r) {
                table.steps[ci] = 0;
                table.steps[ri] = 0;
                layer.push(ci);
                layer.push(ri);
            } else if options == 0 {
                // Robber stuck with no legal move.
                table.steps[ri] = 0;
                layer.push(ri);
            } else {
                remaining[ri] = robber_options[r];
            }
        }
    }

    let mut depth = 0u32;
    while !layer.is_empty() {
        let mut next = Vec::new();
        let mut i = 0;
        while i < layer.len() {
            let s = layer[i];
            i += 1;
            let robber = (s / 2) % n;
            let rank = s / 2 / n;
            if s % 2 == 1 {
                // Robber to move and won: every cop position one move away wins.
                let cops = table.placements[rank].clone();
                for_each_cop_move(h, &cops, |_, prev| {
                    let pi = table.state_index(table.index.rank(prev), robber, Side::Cop);
                    if table.steps[pi] == UNWON {
                        table.steps[pi] = depth + 1;
                        next.push(pi);
                    }
                });
            } else {
                // Cop to move and won: robber states that could have moved here lose an escape.
                for prev in variant.robber_moves(h, robber) {
                    let pi = table.state_index(rank, prev, Side::Robber);
                    if table.steps[pi] != UNWON {
                        continue;
                    }
                    remaining[pi] -= 1;
                    if remaining[pi] == 0 {
                        table.steps[pi] = depth;
                        layer.push(pi);
                    }
                }
            }
        }
        layer = next;
        depth += 1;
    }
    Ok(table)
}

/// True when some placement of `k` cops wins against every robber placement.
pub fn is_k_cop_win(h: &Hypergraph, k: usize, variant: Variant) -> Result<bool> {
    Ok(solve(h, k, variant)?.is_k_cop_win())
}

/// Least `k <= max_k` for which `h` is k-cop-win. `max_k` defaults to `|V(h)|`.
pub fn cop_number(h: &Hypergraph, max_k: Option<usize>, variant: Variant) -> Result<Option<usize>> {
    let max_k = max_k.unwrap_or(h.vertex_count());
    if max_k == 0 {
        return Err(Error::param("max_k must be at least 1"));
    }
    h.require_connected()?;
    for k in 1..=max_k {
        if is_k_cop_win(h, k, variant)? {
            return Ok(Some(k));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hg(n: usize, edges: &[&[usize]]) -> Hypergraph {
        Hypergraph::with_numbered_vertices(
            n,
            edges
                .iter()
                .map(|e| e.iter().map(|v| v - 1).collect())
                .collect(),
        )
        .unwrap()
    }

    fn c4() -> Hypergraph {
        hg(4, &[&[1, 2], &[2, 3], &[3, 4], &[4, 1]])
    }

    fn k3() -> Hypergraph {
        hg(3, &[&[1, 2], &[2, 3], &[1, 3]])
    }

    #[test]
    fn multiset_ranking_is_dense_and_ordered() {
        for (n, k) in [(1, 1), (4, 1), (4, 2), (5, 3), (3, 4)] {
            let idx = MultisetIndex::new(n, k).unwrap();
            let all = idx.all();
            assert_eq!(all.len(), idx.count());
            for (r, t) in all.iter().enumerate() {
                assert_eq!(idx.rank(t), r);
                assert!(t.windows(2).all(|w| w[0] <= w[1]));
            }
        }
        assert_eq!(MultisetIndex::new(4, 2).unwrap().count(), 10);
    }

    #[test]
    fn k3_one_cop_wins_everywhere() {
        let t = solve(&k3(), 1, Variant::Standard).unwrap();
        for c in 0..3 {
            for r in 0..3 {
                let s = t
                    .steps_to_capture(&GameState::new(vec![c], r, Side::Cop))
                    .unwrap();
                assert!(s.unwrap() <= 1);
            }
        }
    }

    #[test]
    fn c4_one_cop_loses() {
        let h = c4();
        let t = solve(&h, 1, Variant::Standard).unwrap();
        for c in 0..4 {
            for r in 0..4 {
                // Only a robber already within reach of the cop is lost.
                let won = t.won(&GameState::new(vec![c], r, Side::Cop)).unwrap();
                assert_eq!(won, h.adjacent_or_equal(c, r));
                let won = t.won(&GameState::new(vec![c], r, Side::Robber)).unwrap();
                assert_eq!(won, c == r);
            }
        }
        assert!(!t.is_k_cop_win());
    }

    #[test]
    fn c4_two_opposite_cops_capture_next_move() {
        let t = solve(&c4(), 2, Variant::Standard).unwrap();
        let s = GameState::new(vec![0, 2], 1, Side::Cop);
        assert_eq!(t.steps_to_capture(&s).unwrap(), Some(1));
        let r = GameState::new(vec![0, 2], 1, Side::Robber);
        assert_eq!(t.steps_to_capture(&r).unwrap(), Some(1));
    }

    #[test]
    fn small_cop_numbers() {
        assert!(is_k_cop_win(&k3(), 1, Variant::Standard).unwrap());
        assert!(!is_k_cop_win(&c4(), 1, Variant::Standard).unwrap());
        assert!(is_k_cop_win(&c4(), 2, Variant::Standard).unwrap());
        assert!(is_k_cop_win(&hg(5, &[&[1, 2, 3], &[3, 4, 5]]), 1, Variant::Standard).unwrap());
    }

    #[test]
    fn single_vertex_is_cop_win() {
        let h = hg(1, &[]);
        assert_eq!(cop_number(&h, None, Variant::Standard).unwrap(), Some(1));
        assert_eq!(
            cop_number(&h, None, Variant::ActiveRobber).unwrap(),
            Some(1)
        );
    }

    #[test]
    fn active_robber_on_c4_is_caught_by_one_cop() {
        // A forced-move robber on C4 is caught: parity of the distance flips each turn.
        assert!(is_k_cop_win(&c4(), 1, Variant::ActiveRobber).unwrap());
    }

    #[test]
    fn errors() {
        assert!(solve(&c4(), 0, Variant::Standard).is_err());
        assert!(matches!(
            solve(&hg(4, &[&[1, 2], &[3, 4]]), 1, Variant::Standard),
            Err(Error::Disconnected)
        ));
        assert!(cop_number(&c4(), Some(0), Variant::Standard).is_err());
        let t = solve(&c4(), 1, Variant::Standard).unwrap();
        assert!(t.won(&GameState::new(vec![0, 1], 2, Side::Cop)).is_err());
    }

    #[test]
    fn capture_states_have_zero_steps_only() {
        let t = solve(&c4(), 2, Variant::Standard).unwrap();
        for p in t.placements() {
            for r in 0..4 {
                for side in [Side::Cop, Side::Robber] {
                    let s = GameState::new(p.clone(), r, side);
                    let steps = t.steps_to_capture(&s).unwrap();
                    if s.is_capture() {
                        assert_eq!(steps, Some(0));
                    } else if side == Side::Cop {
                        assert_ne!(steps, Some(0));
                    }
                }
            }
        }
    }

    #[test]
    fn csv_dump_lists_won_states() {
        let t = solve(&k3(), 1, Variant::Standard).unwrap();
        let csv = t.to_csv();
        assert!(csv.starts_with("cops,robber,to_move,steps_to_capture\n"));
        assert_eq!(csv.lines().count(), 1 + 18);
    }
}
