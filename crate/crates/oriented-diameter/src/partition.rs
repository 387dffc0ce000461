//! First construction stage: classify the neighbors of a base vertex `u` and
//! pre-orient some of its undirected edges.
//!
//! For each neighbor `v`, `ell(v)` is the length of a shortest orientable
//! cycle through the edge `uv`, and `s` is the sum of `ell` over all
//! neighbors. The stage sweeps the undirected neighbors in ascending order
//! and tries to orient each edge `uv` first as `v -> u`, then as `u -> v`,
//! committing the first choice that leaves `s` unchanged; neighbors where
//! both choices raise `s` (or destroy some cycle) stay conflicted. Committed
//! orientations are kept for all later tentative evaluations, so the result
//! `g1` accumulates them in sweep order and every `ell` value survives into
//! `g1` unchanged.

use std::collections::{BTreeMap, BTreeSet};

use crate::graph::{EdgeKind, MixedGraph, VertexId};
use crate::reach::{Bfs, Dir};
use crate::{Error, Result};

/// Shortest orientable cycle lengths through the edges at `u`, and their sum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleTable {
    pub ell: BTreeMap<VertexId, usize>,
    pub s: usize,
}

/// Length of a shortest orientable cycle through the edge between `u` and
/// `v`: one plus the shortest return distance with that edge removed, taking
/// the better sense for an undirected edge.
pub fn shortest_cycle_through(g: &MixedGraph, u: VertexId, v: VertexId) -> Result<usize> {
    let idx = g.find_edge(u, v).ok_or(Error::NoEdge(u, v))?;
    let back = |from: VertexId, to: VertexId| -> Option<usize> {
        Bfs::run(g, from, Dir::Fwd, Some(idx)).dist[to].map(|d| d as usize + 1)
    };
    let best = match g.edge(idx).kind {
        EdgeKind::Directed { tail, head } if tail == u => back(head, u),
        EdgeKind::Directed { tail, head } => back(head, tail),
        EdgeKind::Undirected => match (back(v, u), back(u, v)) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        },
    };
    best.ok_or(Error::NoCycle(u, v))
}

/// `ell` for every neighbor of `u`, plus the sum `s`.
pub fn neighbor_cycle_table(g: &MixedGraph, u: VertexId) -> Result<CycleTable> {
    if u >= g.n() {
        return Err(Error::BadVertex { id: u, n: g.n() });
    }
    let mut ell = BTreeMap::new();
    for &(nb, _) in g.incident(u) {
        ell.insert(nb, shortest_cycle_through(g, u, nb)?);
    }
    let s = ell.values().sum();
    Ok(CycleTable { ell, s })
}

/// Result of the sweep at `u`: the partially oriented graph `g1` and the
/// neighbor classes. `x1`/`y1` are the original in-/out-neighbors, `x2`/`y2`
/// the undirected neighbors committed towards/away from `u`, and `z` the
/// conflicted rest. `table` is the cycle table of the input graph, which
/// `g1` preserves.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition {
    pub u: VertexId,
    pub g1: MixedGraph,
    pub x1: BTreeSet<VertexId>,
    pub y1: BTreeSet<VertexId>,
    pub x2: BTreeSet<VertexId>,
    pub y2: BTreeSet<VertexId>,
    pub z: BTreeSet<VertexId>,
    pub table: CycleTable,
}

impl Partition {
    /// All neighbors oriented towards `u` in `g1`.
    pub fn x_set(&self) -> BTreeSet<VertexId> {
        self.x1.union(&self.x2).copied().collect()
    }

    /// All neighbors oriented away from `u` in `g1`.
    pub fn y_set(&self) -> BTreeSet<VertexId> {
        self.y1.union(&self.y2).copied().collect()
    }

    /// Every neighbor of `u`.
    pub fn neighbors(&self) -> BTreeSet<VertexId> {
        let mut all = self.x_set();
        all.extend(self.y_set());
        all.extend(self.z.iter().copied());
        all
    }
}

/// Run the sweep at `u`. Errors with `NoCycle` only when the input graph
/// itself has an edge at `u` on no orientable cycle (i.e. a bridge); a
/// tentative orientation that destroys a cycle merely counts as raising `s`.
pub fn partition_neighbors(g: &MixedGraph, u: VertexId) -> Result<Partition> {
    let table = neighbor_cycle_table(g, u)?;
    let (y1, x1, und) = g.neighbor_sets(u)?;
    let mut cur = g.clone();
    let mut x2 = BTreeSet::new();
    let mut y2 = BTreeSet::new();
    let mut z = BTreeSet::new();
    for &v in &und {
        let idx = cur.find_edge(u, v).expect("undirected neighbor edge");
        let mut committed = false;
        for (tail, head) in [(v, u), (u, v)] {
            let tentative = cur.with_oriented_edge(idx, tail, head)?;
            match neighbor_cycle_table(&tentative, u) {
                Ok(t) if t.s == table.s => {
                    cur = tentative;
                    if tail == v {
                        x2.insert(v);
                    } else {
                        y2.insert(v);
                    }
                    committed = true;
                    break;
                }
                Ok(_) | Err(Error::NoCycle(_, _)) => {}
                Err(e) => return Err(e),
            }
        }
        if !committed {
            z.insert(v);
        }
    }
    let check = neighbor_cycle_table(&cur, u)?;
    if check != table {
        return Err(Error::ConstructionMismatch(format!(
            "cycle table changed during the sweep at {u}: s {} -> {}",
            table.s, check.s
        )));
    }
    Ok(Partition {
        u,
        g1: cur,
        x1,
        y1,
        x2,
        y2,
        z,
        table,
    })
}
