use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::{for_each_cop_move, Side, Variant, WinTable};
use crate::error::{Error, Result};
use crate::hypergraph::{Hypergraph, Vertex};

/// The hypergraph a match is played on, with the robber's movement rule.
#[derive(Debug, Clone, Copy)]
pub struct Board<'a> {
    pub graph: &'a Hypergraph,
    pub variant: Variant,
}

/// A cop-side player. Positions are reported in a fixed cop order, and a
/// response lists the new position of every cop in that same order.
pub trait CopStrategy {
    fn name(&self) -> &str;

    fn place(&mut self, board: &Board, k: usize) -> Result<Vec<Vertex>>;

    fn respond(&mut self, board: &Board, cops: &[Vertex], robber: Vertex) -> Result<Vec<Vertex>>;
}

/// A robber-side player.
pub trait RobberStrategy {
    fn name(&self) -> &str;

    fn place(&mut self, board: &Board, cops: &[Vertex]) -> Result<Vertex>;

    fn respond(&mut self, board: &Board, cops: &[Vertex], robber: Vertex) -> Result<Vertex>;
}

/// Either side's strategy, as produced by [`extract_strategy`].
pub enum Strategy {
    Cop(Box<dyn CopStrategy + Send>),
    Robber(Box<dyn RobberStrategy + Send>),
}

impl Strategy {
    pub fn side(&self) -> Side {
        match self {
            Strategy::Cop(_) => Side::Cop,
            Strategy::Robber(_) => Side::Robber,
        }
    }

    pub fn into_cop(self) -> Option<Box<dyn CopStrategy + Send>> {
        match self {
            Strategy::Cop(c) => Some(c),
            Strategy::Robber(_) => None,
        }
    }

    pub fn into_robber(self) -> Option<Box<dyn RobberStrategy + Send>> {
        match self {
            Strategy::Robber(r) => Some(r),
            Strategy::Cop(_) => None,
        }
    }
}

/// One round after placement: the cops' move, then the robber's reply unless
/// the cops captured.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Round {
    pub cops: Vec<String>,
    pub robber: Option<String>,
}

/// Record of a played match. `rounds_played` counts cop moves after placement.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatchTrace {
    pub cop_placement: Vec<String>,
    pub robber_placement: String,
    pub rounds: Vec<Round>,
    pub captured: bool,
    pub rounds_played: usize,
}

impl MatchTrace {
    /// Final cop and robber labels.
    pub fn final_positions(&self) -> (&[String], &str) {
        let mut cops = self.cop_placement.as_slice();
        let mut robber = self.robber_placement.as_str();
        for round in &self.rounds {
            cops = &round.cops;
            if let Some(r) = &round.robber {
                robber = r;
            }
        }
        (cops, robber)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("trace serialises")
    }
}

fn labels(h: &Hypergraph, vs: &[Vertex]) -> Vec<String> {
    vs.iter().map(|&v| h.label(v).to_string()).collect()
}

fn wrap(side: Side, round: usize) -> impl Fn(Error) -> Error {
    move |e| match e {
        Error::IllegalMove { .. } | Error::Strategy { .. } => e,
        other => Error::Strategy {
            side,
            round,
            message: other.to_string(),
        },
    }
}

/// Plays a match, checking every move for legality.
///
/// Capture is checked after every half-move, placements included. The match
/// ends at capture or after `max_rounds` cop moves.
pub fn play_match(
    h: &Hypergraph,
    k: usize,
    cop: &mut dyn CopStrategy,
    robber: &mut dyn RobberStrategy,
    max_rounds: usize,
    variant: Variant,
) -> Result<MatchTrace> {
    if k == 0 {
        return Err(Error::param("need at least one cop"));
    }
    let board = Board { graph: h, variant };
    let n = h.vertex_count();
    let illegal = |side, round, detail: String| Error::IllegalMove {
        side,
        round,
        detail,
    };

    let mut cops = cop.place(&board, k).map_err(wrap(Side::Cop, 0))?;
    if cops.len() != k {
        return Err(illegal(
            Side::Cop,
            0,
            format!("placed {} cops, expected {k}", cops.len()),
        ));
    }
    if let Some(&bad) = cops.iter().find(|&&c| c >= n) {
        return Err(illegal(
            Side::Cop,
            0,
            format!("placement outside the hypergraph: {bad}"),
        ));
    }
    let mut r = robber.place(&board, &cops).map_err(wrap(Side::Robber, 0))?;
    if r >= n {
        return Err(illegal(
            Side::Robber,
            0,
            format!("placement outside the hypergraph: {r}"),
        ));
    }
    let mut trace = MatchTrace {
        cop_placement: labels(h, &cops),
        robber_placement: h.label(r).to_string(),
        rounds: Vec::new(),
        captured: cops.contains(&r),
        rounds_played: 0,
    };

    let mut round = 0;
    while !trace.captured && round < max_rounds {
        round += 1;
        let next = cop
            .respond(&board, &cops, r)
            .map_err(wrap(Side::Cop, round))?;
        if next.len() != k {
            return Err(illegal(
                Side::Cop,
                round,
                format!("moved {} cops, expected {k}", next.len()),
            ));
        }
        for (i, (&from, &to)) in cops.iter().zip(&next).enumerate() {
            if to >= n || !h.adjacent_or_equal(from, to) {
                let dest = if to < n {
                    h.label(to).to_string()
                } else {
                    to.to_string()
                };
                return Err(illegal(
                    Side::Cop,
                    round,
                    format!(
                        "cop {} cannot move from {} to {}",
                        i + 1,
                        h.label(from),
                        dest
                    ),
                ));
            }
        }
        cops = next;
        if cops.contains(&r) {
            trace.rounds.push(Round {
                cops: labels(h, &cops),
                robber: None,
            });
            trace.captured = true;
            break;
        }
        let to = robber
            .respond(&board, &cops, r)
            .map_err(wrap(Side::Robber, round))?;
        let legal =
            to < n && h.adjacent_or_equal(r, to) && !(variant == Variant::ActiveRobber && to == r);
        if !legal {
            let dest = if to < n {
                h.label(to).to_string()
            } else {
                to.to_string()
            };
            return Err(illegal(
                Side::Robber,
                round,
                format!("robber cannot move from {} to {}", h.label(r), dest),
            ));
        }
        r = to;
        trace.rounds.push(Round {
            cops: labels(h, &cops),
            robber: Some(h.label(r).to_string()),
        });
        trace.captured = cops.contains(&r);
    }
    trace.rounds_played = round;
    Ok(trace)
}

fn check_table(board: &Board, table: &WinTable, k: usize, side: Side) -> Result<()> {
    if board.graph != table.graph() || board.variant != table.variant() {
        return Err(Error::Precondition(format!(
            "{side} strategy was solved for a different game"
        )));
    }
    if k != table.cops() {
        return Err(Error::Precondition(format!(
            "{side} strategy was solved for {} cops, match has {k}",
            table.cops()
        )));
    }
    Ok(())
}

/// Capture time, then distance tie-breaks, then the sorted position.
type MoveKey = (u32, usize, usize, Vec<Vertex>);

/// Cop strategy read off a win table.
///
/// From a won state it moves to a successor minimising the capture time,
/// breaking ties by the lexicographically least sorted position. From a lost
/// state (only reachable in lenient mode) it closes in on the robber by
/// 2-section distance.
pub struct OptimalCop {
    table: Arc<WinTable>,
    distances: Vec<Vec<usize>>,
}

impl OptimalCop {
    fn new(table: Arc<WinTable>) -> Self {
        let h = table.graph();
        let distances = h.vertices().map(|v| h.distances_from(v)).collect();
        Self { table, distances }
    }

    pub fn table(&self) -> &WinTable {
        &self.table
    }
}

impl CopStrategy for OptimalCop {
    fn name(&self) -> &str {
        "optimal"
    }

    fn place(&mut self, board: &Board, k: usize) -> Result<Vec<Vertex>> {
        check_table(board, &self.table, k, Side::Cop)?;
        let t = &self.table;
        let best_winning = t
            .placements()
            .iter()
            .filter_map(|p| t.placement_value(p).map(|v| (v, p)))
            .min_by_key(|(v, _)| *v);
        if let Some((_, p)) = best_winning {
            return Ok(p.clone());
        }
        // No winning placement: cover as many robber placements as possible.
        let best = t
            .placements()
            .iter()
            .max_by_key(|p| {
                let covered = t
                    .graph()
                    .vertices()
                    .filter(|&r| t.steps_sorted(p, r, Side::Cop).is_some())
                    .count();
                (covered, std::cmp::Reverse((*p).clone()))
            })
            .expect("at least one placement");
        Ok(best.clone())
    }

    fn respond(&mut self, board: &Board, cops: &[Vertex], robber: Vertex) -> Result<Vec<Vertex>> {
        check_table(board, &self.table, cops.len(), Side::Cop)?;
        let t = &self.table;
        let h = t.graph();
        let mut best: Option<(MoveKey, Vec<Vertex>)> = None;
        for_each_cop_move(h, cops, |tuple, sorted| {
            let steps = t
                .steps_sorted(sorted, robber, Side::Robber)
                .unwrap_or(u32::MAX);
            let nearest = sorted
                .iter()
                .map(|&c| self.distances[c][robber])
                .min()
                .unwrap_or(usize::MAX);
            let total: usize = sorted.iter().map(|&c| self.distances[c][robber]).sum();
            let key = if steps == u32::MAX {
                (steps, nearest, total, sorted.to_vec())
            } else {
                (steps, 0, 0, sorted.to_vec())
            };
            if best.as_ref().is_none_or(|(b, _)| key < *b) {
                best = Some((key, tuple.to_vec()));
            }
        });
        Ok(best.expect("staying put is always a move").1)
    }
}

/// Robber strategy read off a win table.
///
/// From a lost-for-the-cops state he moves to the least vertex that keeps it
/// lost; otherwise he maximises the capture time, breaking ties by least vertex.
pub struct OptimalRobber {
    table: Arc<WinTable>,
}

impl OptimalRobber {
    fn best_among(&self, cops: &[Vertex], options: impl Iterator<Item = Vertex>) -> Option<Vertex> {
        let mut sorted = cops.to_vec();
        sorted.sort_unstable();
        let mut best: Option<(u32, Vertex)> = None;
        for r in options {
            let v = self
                .table
                .steps_sorted(&sorted, r, Side::Cop)
                .unwrap_or(u32::MAX);
            if best.is_none_or(|(bv, _)| v > bv) {
                best = Some((v, r));
            }
        }
        best.map(|(_, r)| r)
    }
}

impl RobberStrategy for OptimalRobber {
    fn name(&self) -> &str {
        "optimal"
    }

    fn place(&mut self, board: &Board, cops: &[Vertex]) -> Result<Vertex> {
        check_table(board, &self.table, cops.len(), Side::Robber)?;
        Ok(self
            .best_among(cops, board.graph.vertices())
            .expect("non-empty hypergraph"))
    }

    fn respond(&mut self, board: &Board, cops: &[Vertex], robber: Vertex) -> Result<Vertex> {
        check_table(board, &self.table, cops.len(), Side::Robber)?;
        self.best_among(cops, board.variant.robber_moves(board.graph, robber))
            .ok_or_else(|| Error::param("robber has no legal move"))
    }
}

/// Extracts an optimal strategy for `side` from a solved table.
///
/// Requesting the cop side when the table is not k-cop-win is an error; see
/// [`extract_pursuer`] for a strategy that also plays lost positions.
pub fn extract_strategy(table: Arc<WinTable>, side: Side) -> Result<Strategy> {
    match side {
        Side::Cop => {
            if !table.is_k_cop_win() {
                return Err(Error::Precondition(format!(
                    "hypergraph is not {}-cop-win; no winning cop strategy exists",
                    table.cops()
                )));
            }
            Ok(Strategy::Cop(Box::new(OptimalCop::new(table))))
        }
        Side::Robber => Ok(Strategy::Robber(Box::new(OptimalRobber { table }))),
    }
}

/// Cop strategy that plays optimally from won states and chases greedily from
/// lost ones. Used to test evaders against the strongest available pursuer.
pub fn extract_pursuer(table: Arc<WinTable>) -> OptimalCop {
    OptimalCop::new(table)
}

/// Each cop independently moves to a uniformly random vertex of its closed
/// neighbourhood.
pub struct RandomCop {
    rng: ChaCha8Rng,
}

impl RandomCop {
    pub fn new(seed: u64) -> Self {
        Self {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }
}

impl CopStrategy for RandomCop {
    fn name(&self) -> &str {
        "random"
    }

    fn place(&mut self, board: &Board, k: usize) -> Result<Vec<Vertex>> {
        let vs: Vec<Vertex> = board.graph.vertices().collect();
        Ok((0..k)
            .map(|_| *vs.choose(&mut self.rng).expect("non-empty"))
            .collect())
    }

    fn respond(&mut self, board: &Board, cops: &[Vertex], _robber: Vertex) -> Result<Vec<Vertex>> {
        Ok(cops
            .iter()
            .map(|&c| {
                *board
                    .graph
                    .closed(c)
                    .choose(&mut self.rng)
                    .expect("contains c")
            })
            .collect())
    }
}

pub struct RandomRobber {
    rng: ChaCha8Rng,
}

impl RandomRobber {
    pub fn new(seed: u64) -> Self {
        Self {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }
}

impl RobberStrategy for RandomRobber {
    fn name(&self) -> &str {
        "random"
    }

    fn place(&mut self, board: &Board, _cops: &[Vertex]) -> Result<Vertex> {
        let vs: Vec<Vertex> = board.graph.vertices().collect();
        Ok(*vs.choose(&mut self.rng).expect("non-empty"))
    }

    fn respond(&mut self, board: &Board, _cops: &[Vertex], robber: Vertex) -> Result<Vertex> {
        let moves: Vec<Vertex> = board.variant.robber_moves(board.graph, robber).collect();
        moves
            .choose(&mut self.rng)
            .copied()
            .ok_or_else(|| Error::param("robber has no legal move"))
    }
}

/// All cops start on the least vertex and never move.
pub struct PassCop;

impl CopStrategy for PassCop {
    fn name(&self) -> &str {
        "pass"
    }

    fn place(&mut self, _board: &Board, k: usize) -> Result<Vec<Vertex>> {
        Ok(vec![0; k])
    }

    fn respond(&mut self, _board: &Board, cops: &[Vertex], _robber: Vertex) -> Result<Vec<Vertex>> {
        Ok(cops.to_vec())
    }
}

/// Starts on the greatest vertex and never moves. Illegal against an active-robber rule.
pub struct PassRobber;

impl RobberStrategy for PassRobber {
    fn name(&self) -> &str {
        "pass"
    }

    fn place(&mut self, board: &Board, _cops: &[Vertex]) -> Result<Vertex> {
        Ok(board.graph.vertex_count() - 1)
    }

    fn respond(&mut self, _board: &Board, _cops: &[Vertex], robber: Vertex) -> Result<Vertex> {
        Ok(robber)
    }
}
