//! Second construction stage: an oriented hub subgraph around the base
//! vertex.
//!
//! Starting from the partially oriented graph `g1` of the partition stage,
//! this builds a family of directed cycles through `u` that together cover
//! every neighbor of `u`, and records short directed paths between `u` and
//! each neighbor class inside that subgraph:
//!
//! * one cycle `C_x` per in-neighbor `x`, from a forward search tree
//!   (`P_ux` plus the closing arc `x -> u`); their union is the core `H_X`;
//! * per out-neighbor `y`, a return path `Q_yu` and usually a cycle `C1_y`
//!   (plus sometimes a second cycle `C2_y`), built from the reverse search
//!   tree path `P_yu`, rerouted into the core the first time it touches it;
//! * per conflicted neighbor `z`, paths `Q_uz` and `Q_zu` read off the
//!   cycles that cover `z`.
//!
//! Every edge that enters the subgraph gets a single direction; a conflict
//! is a hard error, as is a conflicted neighbor covered by no cycle. The
//! oriented subgraph is checked to be strongly connected before returning.
//! Path records carry their neighbor-hit counts, the quantity the diameter
//! certificates are built from.

use std::collections::{BTreeMap, BTreeSet};

use crate::graph::{EdgeKind, MixedGraph, Orientation, VertexId};
use crate::partition::Partition;
use crate::reach::{Bfs, Dir};
use crate::{Error, Result};

/// The five path classes recorded by the construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum PathKind {
    /// Forward tree path from `u` to an in-neighbor `x`.
    Pux,
    /// Reverse tree path from an out-neighbor `y` to `u`.
    Pyu,
    /// Return path from `y` to `u` inside the hub.
    Qyu,
    /// Hub path from `u` to a conflicted neighbor `z`.
    Quz,
    /// Hub path from a conflicted neighbor `z` back to `u`.
    Qzu,
}

impl PathKind {
    /// Short label used in sweep statistics.
    pub fn stat_key(self) -> &'static str {
        match self {
            PathKind::Pux => "pux",
            PathKind::Pyu => "pyu",
            PathKind::Qyu => "qyu",
            PathKind::Quz => "quz",
            PathKind::Qzu => "qzu",
        }
    }
}

/// One recorded path: vertices in traversal order and the number of distinct
/// vertices on it that are neighbors of `u`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathRecord {
    pub kind: PathKind,
    /// The endpoint that is not `u`.
    pub endpoint: VertexId,
    pub vertices: Vec<VertexId>,
    pub neighbor_hits: usize,
}

fn record(
    kind: PathKind,
    endpoint: VertexId,
    vertices: Vec<VertexId>,
    neighbors: &BTreeSet<VertexId>,
) -> PathRecord {
    let distinct: BTreeSet<VertexId> = vertices.iter().copied().collect();
    let neighbor_hits = distinct.intersection(neighbors).count();
    PathRecord {
        kind,
        endpoint,
        vertices,
        neighbor_hits,
    }
}

/// The oriented hub around `u` with all recorded cycles and paths.
#[derive(Debug, Clone)]
pub struct HuBundle {
    pub u: VertexId,
    /// Vertices of the core: all `C_x` cycles, or `{u}` when there are no
    /// in-neighbors.
    pub hx_vertices: BTreeSet<VertexId>,
    /// `x -> [u, ..., x]`; the cycle closes with the arc `x -> u`.
    pub cx: BTreeMap<VertexId, Vec<VertexId>>,
    /// `y -> [y, ..., u]`; the cycle `C1_y` closes with the arc `u -> y`.
    pub c1: BTreeMap<VertexId, Vec<VertexId>>,
    /// `y -> [u, ..., last]`; the cycle `C2_y` closes with `last -> u`.
    pub c2: BTreeMap<VertexId, Vec<VertexId>>,
    /// `y -> (first, last)` touch points of `P_yu` on the core, excluding
    /// the terminal `u`; present only when `P_yu` touches the core at all.
    pub markers: BTreeMap<VertexId, (VertexId, VertexId)>,
    pub pux: BTreeMap<VertexId, PathRecord>,
    pub pyu: BTreeMap<VertexId, PathRecord>,
    pub qyu: BTreeMap<VertexId, PathRecord>,
    pub quz: BTreeMap<VertexId, PathRecord>,
    pub qzu: BTreeMap<VertexId, PathRecord>,
    /// Direction of every hub edge, original arcs included.
    pub hu: Orientation,
    pub hu_vertices: BTreeSet<VertexId>,
}

impl HuBundle {
    /// All recorded paths, grouped per class in ascending endpoint order.
    pub fn all_paths(&self) -> impl Iterator<Item = &PathRecord> {
        self.pux
            .values()
            .chain(self.pyu.values())
            .chain(self.qyu.values())
            .chain(self.quz.values())
            .chain(self.qzu.values())
    }
}

/// Record `tail -> head` in the hub orientation after checking that `g1`
/// actually has that edge and does not direct it the other way.
fn add_arc_checked(
    g1: &MixedGraph,
    hu: &mut Orientation,
    tail: VertexId,
    head: VertexId,
) -> Result<()> {
    let idx = g1.find_edge(tail, head).ok_or(Error::NoEdge(tail, head))?;
    if let EdgeKind::Directed { tail: t, head: h } = g1.edge(idx).kind {
        if (t, h) != (tail, head) {
            return Err(Error::IncompatibleOrientation(tail, head));
        }
    }
    hu.orient(tail, head)
}

fn add_chain(g1: &MixedGraph, hu: &mut Orientation, vertices: &[VertexId]) -> Result<()> {
    for w in vertices.windows(2) {
        add_arc_checked(g1, hu, w[0], w[1])?;
    }
    Ok(())
}

/// True when the arc `tail -> head` exists in the final orientation: either
/// the hub directed the edge that way, or it was an arc of `g1` already.
fn arc_available(g1: &MixedGraph, hu: &Orientation, tail: VertexId, head: VertexId) -> bool {
    if hu.get(tail, head) == Some((tail, head)) {
        return true;
    }
    match g1.find_edge(tail, head).map(|i| g1.edge(i).kind) {
        Some(EdgeKind::Directed { tail: t, head: h }) => (t, h) == (tail, head),
        _ => false,
    }
}

fn position(path: &[VertexId], v: VertexId) -> Option<usize> {
    path.iter().position(|&w| w == v)
}

/// Build the oriented hub for a partitioned base vertex.
pub fn build_hu(part: &Partition) -> Result<HuBundle> {
    let u = part.u;
    let g1 = &part.g1;
    let neighbors = part.neighbors();
    let xset = part.x_set();
    let yset = part.y_set();

    let out_tree = Bfs::run(g1, u, Dir::Fwd, None);
    let rev_tree = Bfs::run(g1, u, Dir::Rev, None);

    let mut hu = Orientation::new();
    let mut cx = BTreeMap::new();
    let mut pux = BTreeMap::new();
    for &x in &xset {
        let path = out_tree.path(x).ok_or(Error::Unreachable { from: u, to: x })?;
        add_chain(g1, &mut hu, &path)?;
        add_arc_checked(g1, &mut hu, x, u)?;
        pux.insert(x, record(PathKind::Pux, x, path.clone(), &neighbors));
        cx.insert(x, path);
    }
    let mut hx_vertices: BTreeSet<VertexId> = cx.values().flatten().copied().collect();
    hx_vertices.insert(u);

    let mut pyu = BTreeMap::new();
    for &y in &yset {
        let path = rev_tree.path(y).ok_or(Error::Unreachable { from: y, to: u })?;
        pyu.insert(y, record(PathKind::Pyu, y, path, &neighbors));
    }

    // In-neighbors already contained in each core cycle, for the eligibility
    // rule of the first branch below.
    let cx_xmembers: BTreeMap<VertexId, BTreeSet<VertexId>> = cx
        .iter()
        .map(|(&x, path)| (x, path.iter().filter(|v| xset.contains(v)).copied().collect()))
        .collect();

    let mut qyu = BTreeMap::new();
    let mut c1 = BTreeMap::new();
    let mut c2 = BTreeMap::new();
    let mut markers = BTreeMap::new();

    // Reroute the prefix of `p` up to its first core vertex `uy` into the
    // core: continue along the `P_ux` whose remaining piece is shortest
    // (ties to the smallest `x`), then take the closing arc to `u`.
    let reroute = |p_prefix: &[VertexId], uy: VertexId| -> Vec<VertexId> {
        let mut best: Option<(usize, VertexId, usize)> = None;
        for (&x, path) in &cx {
            if let Some(pos) = position(path, uy) {
                let tail = path.len() - 1 - pos;
                if best.map_or(true, |(bt, _, _)| tail < bt) {
                    best = Some((tail, x, pos));
                }
            }
        }
        let (_, x, pos) = best.expect("core vertex lies on some core path");
        let mut q = p_prefix.to_vec();
        q.extend_from_slice(&cx[&x][pos + 1..]);
        q.push(u);
        q
    };

    for &y in &yset {
        if hx_vertices.contains(&y) {
            let mut chosen = None;
            for (&x, path) in &cx {
                if cx_xmembers[&x].len() == 1 && position(path, y).is_some() {
                    chosen = Some(x);
                    break;
                }
            }
            let x = chosen.ok_or_else(|| {
                let covering: Vec<VertexId> = cx
                    .iter()
                    .filter(|(_, path)| position(path, y).is_some())
                    .map(|(&x, _)| x)
                    .collect();
                Error::NoEligibleX {
                    y,
                    dump: format!(
                        "core cycles through {y} belong to {covering:?}, \
                         none covering a single in-neighbor; x1={:?} x2={:?} z={:?}",
                        part.x1, part.x2, part.z
                    ),
                }
            })?;
            let path = &cx[&x];
            let pos = position(path, y).expect("chosen cycle covers y");
            let mut q = path[pos..].to_vec();
            q.push(u);
            qyu.insert(y, record(PathKind::Qyu, y, q, &neighbors));
            continue;
        }

        let p = pyu[&y].vertices.clone();
        let touches: Vec<usize> = (0..p.len() - 1)
            .filter(|&i| hx_vertices.contains(&p[i]))
            .collect();
        let q = if touches.is_empty() {
            add_chain(g1, &mut hu, &p)?;
            add_arc_checked(g1, &mut hu, u, y)?;
            c1.insert(y, p.clone());
            p
        } else {
            let uy = p[touches[0]];
            let vy = p[*touches.last().expect("nonempty")];
            markers.insert(y, (uy, vy));
            if uy == vy && !part.z.contains(&uy) {
                add_chain(g1, &mut hu, &p)?;
                add_arc_checked(g1, &mut hu, u, y)?;
                c1.insert(y, p.clone());
                p
            } else {
                // Either a conflicted touch point or two distinct ones:
                // reroute at the first touch.
                let q = reroute(&p[..=touches[0]], uy);
                add_chain(g1, &mut hu, &q)?;
                add_arc_checked(g1, &mut hu, u, y)?;
                c1.insert(y, q.clone());
                if uy != vy {
                    let xp = cx
                        .iter()
                        .find(|(_, path)| position(path, vy).is_some())
                        .map(|(&x, _)| x)
                        .expect("core vertex lies on some core path");
                    let posv = position(&cx[&xp], vy).expect("found above");
                    let pv = position(&p, vy).expect("touch point lies on p");
                    let mut cycle = cx[&xp][..=posv].to_vec();
                    cycle.extend_from_slice(&p[pv + 1..p.len() - 1]);
                    add_chain(g1, &mut hu, &p[pv..])?;
                    c2.insert(y, cycle);
                }
                q
            }
        };
        qyu.insert(y, record(PathKind::Qyu, y, q, &neighbors));
    }

    let mut quz = BTreeMap::new();
    let mut qzu = BTreeMap::new();
    for &z in &part.z {
        if hx_vertices.contains(&z) {
            let (_, path) = cx
                .iter()
                .find(|(_, path)| position(path, z).is_some())
                .expect("core vertex lies on some core path");
            if !arc_available(g1, &hu, u, z) {
                return Err(Error::ConstructionMismatch(format!(
                    "core covers {z} but not via the arc {u} -> {z}"
                )));
            }
            quz.insert(z, record(PathKind::Quz, z, vec![u, z], &neighbors));
            let pos = position(path, z).expect("found above");
            let xq = path[pos..]
                .iter()
                .position(|v| xset.contains(v))
                .expect("core path ends in an in-neighbor");
            let mut back = path[pos..=pos + xq].to_vec();
            back.push(u);
            qzu.insert(z, record(PathKind::Qzu, z, back, &neighbors));
            continue;
        }
        if let Some((&y, _)) = c1.iter().find(|(_, cyc)| position(cyc, z).is_some()) {
            let p = &pyu[&y].vertices;
            let zpos = position(p, z).ok_or_else(|| {
                Error::ConstructionMismatch(format!(
                    "cycle through {y} covers {z} away from its own tree path"
                ))
            })?;
            let ypos = p[..p.len() - 1]
                .iter()
                .rposition(|v| yset.contains(v))
                .expect("the path starts at an out-neighbor");
            if ypos >= zpos || !arc_available(g1, &hu, u, p[ypos]) {
                return Err(Error::ConstructionMismatch(format!(
                    "no usable entry into the cycle through {y} ahead of {z}"
                )));
            }
            let mut fwd = vec![u];
            fwd.extend_from_slice(&p[ypos..=zpos]);
            quz.insert(z, record(PathKind::Quz, z, fwd, &neighbors));
            if hu.get(z, u) != Some((z, u)) {
                return Err(Error::ConstructionMismatch(format!(
                    "cycle through {y} covers {z} without the arc {z} -> {u}"
                )));
            }
            qzu.insert(z, record(PathKind::Qzu, z, vec![z, u], &neighbors));
            continue;
        }
        if let Some((&y, cycle)) = c2.iter().find(|(_, cyc)| position(cyc, z).is_some()) {
            let p = &pyu[&y].vertices;
            let (_, vy) = markers[&y];
            let pv = position(p, vy).expect("marker lies on p");
            let tail = &p[pv..p.len() - 1];
            let zrel = position(tail, z).ok_or_else(|| {
                Error::ConstructionMismatch(format!(
                    "second cycle through {y} covers {z} away from its tree tail"
                ))
            })?;
            let fwd = match tail.iter().rposition(|v| yset.contains(v)) {
                Some(yrel) => {
                    if yrel >= zrel || !arc_available(g1, &hu, u, tail[yrel]) {
                        return Err(Error::ConstructionMismatch(format!(
                            "no usable entry into the second cycle through {y} ahead of {z}"
                        )));
                    }
                    let mut fwd = vec![u];
                    fwd.extend_from_slice(&tail[yrel..=zrel]);
                    fwd
                }
                None => {
                    let zc = position(cycle, z).expect("found above");
                    cycle[..=zc].to_vec()
                }
            };
            quz.insert(z, record(PathKind::Quz, z, fwd, &neighbors));
            if hu.get(z, u) != Some((z, u)) {
                return Err(Error::ConstructionMismatch(format!(
                    "second cycle through {y} covers {z} without the arc {z} -> {u}"
                )));
            }
            qzu.insert(z, record(PathKind::Qzu, z, vec![z, u], &neighbors));
            continue;
        }
        return Err(Error::ZNotCovered(z));
    }

    let mut hu_vertices: BTreeSet<VertexId> = BTreeSet::from([u]);
    for (t, h) in hu.iter() {
        hu_vertices.insert(t);
        hu_vertices.insert(h);
    }
    check_strong(&hu, &hu_vertices, u)?;

    Ok(HuBundle {
        u,
        hx_vertices,
        cx,
        c1,
        c2,
        markers,
        pux,
        pyu,
        qyu,
        quz,
        qzu,
        hu,
        hu_vertices,
    })
}

/// Verify that the oriented hub is strongly connected on its vertex set.
pub(crate) fn check_strong(
    hu: &Orientation,
    vertices: &BTreeSet<VertexId>,
    u: VertexId,
) -> Result<()> {
    let mut fwd: BTreeMap<VertexId, Vec<VertexId>> = BTreeMap::new();
    let mut rev: BTreeMap<VertexId, Vec<VertexId>> = BTreeMap::new();
    for (t, h) in hu.iter() {
        fwd.entry(t).or_default().push(h);
        rev.entry(h).or_default().push(t);
    }
    for adj in [&fwd, &rev] {
        let mut seen = BTreeSet::from([u]);
        let mut stack = vec![u];
        while let Some(v) = stack.pop() {
            for &w in adj.get(&v).map(Vec::as_slice).unwrap_or(&[]) {
                if seen.insert(w) {
                    stack.push(w);
                }
            }
        }
        if &seen != vertices {
            return Err(Error::ConstructionMismatch(format!(
                "hub around {u} is not strongly connected: reaches {} of {} vertices",
                seen.len(),
                vertices.len()
            )));
        }
    }
    Ok(())
}
