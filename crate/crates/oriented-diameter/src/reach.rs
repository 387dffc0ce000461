//! Reachability over mixed graphs: orientable paths, connectivity, bridges,
//! and diameter.
//!
//! An orientable path may traverse undirected edges in either sense but must
//! respect every arc. All searches are breadth-first and scan neighbors in
//! ascending vertex order, so shortest paths and search trees are
//! deterministic and two tree paths that meet share their remaining segment.

use std::collections::VecDeque;

use crate::graph::{MixedGraph, VertexId};
use crate::{Error, Result};

/// Search direction: `Fwd` follows arcs tail to head, `Rev` head to tail.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Dir {
    Fwd,
    Rev,
}

/// A breadth-first search tree rooted at `src`.
#[derive(Debug, Clone)]
pub(crate) struct Bfs {
    src: VertexId,
    dir: Dir,
    pub dist: Vec<Option<u32>>,
    parent: Vec<Option<VertexId>>,
}

impl Bfs {
    /// Run a search from `src`, optionally ignoring one edge by index.
    pub fn run(g: &MixedGraph, src: VertexId, dir: Dir, skip_edge: Option<usize>) -> Bfs {
        let n = g.n();
        let mut dist = vec![None; n];
        let mut parent = vec![None; n];
        let mut queue = VecDeque::new();
        dist[src] = Some(0);
        queue.push_back(src);
        while let Some(v) = queue.pop_front() {
            let d = dist[v].expect("queued vertices have distances");
            for &(nb, idx) in g.incident(v) {
                if Some(idx) == skip_edge || dist[nb].is_some() {
                    continue;
                }
                let rec = g.edge(idx);
                let passable = match dir {
                    Dir::Fwd => rec.traversable_from(v),
                    Dir::Rev => rec.traversable_from(nb),
                };
                if passable {
                    dist[nb] = Some(d + 1);
                    parent[nb] = Some(v);
                    queue.push_back(nb);
                }
            }
        }
        Bfs {
            src,
            dir,
            dist,
            parent,
        }
    }

    /// Shortest path between `src` and `dst` as a vertex list. For `Fwd`
    /// trees the list runs `src..dst`; for `Rev` trees it runs `dst..src`,
    /// which is the traversal order of the underlying arcs.
    pub fn path(&self, dst: VertexId) -> Option<Vec<VertexId>> {
        self.dist[dst]?;
        let mut chain = vec![dst];
        let mut v = dst;
        while v != self.src {
            v = self.parent[v].expect("non-root reached vertices have parents");
            chain.push(v);
        }
        if self.dir == Dir::Fwd {
            chain.reverse();
        }
        Some(chain)
    }
}

/// Length of a shortest orientable path from `x` to `y`, or `None` when no
/// such path exists.
pub fn mixed_distance(g: &MixedGraph, x: VertexId, y: VertexId) -> Result<Option<usize>> {
    for v in [x, y] {
        if v >= g.n() {
            return Err(Error::BadVertex { id: v, n: g.n() });
        }
    }
    Ok(Bfs::run(g, x, Dir::Fwd, None).dist[y].map(|d| d as usize))
}

/// True when every ordered vertex pair is joined by an orientable path.
/// Graphs with at most one vertex are connected.
pub fn is_connected(g: &MixedGraph) -> bool {
    if g.n() <= 1 {
        return true;
    }
    let fwd = Bfs::run(g, 0, Dir::Fwd, None);
    if fwd.dist.iter().any(Option::is_none) {
        return false;
    }
    let rev = Bfs::run(g, 0, Dir::Rev, None);
    rev.dist.iter().all(Option::is_some)
}

/// Indices of the undirected bridges of a connected mixed graph: edges
/// `{a, b}` whose removal leaves an orientable path in neither direction,
/// equivalently edges lying on no orientable cycle. Arcs are never bridges.
pub fn bridges(g: &MixedGraph) -> Result<Vec<usize>> {
    if !is_connected(g) {
        return Err(Error::NotConnected);
    }
    let mut out = Vec::new();
    for idx in g.undirected_edge_indices() {
        let rec = g.edge(idx);
        let ab = Bfs::run(g, rec.a, Dir::Fwd, Some(idx)).dist[rec.b];
        if ab.is_some() {
            continue;
        }
        let ba = Bfs::run(g, rec.b, Dir::Fwd, Some(idx)).dist[rec.a];
        if ba.is_none() {
            out.push(idx);
        }
    }
    Ok(out)
}

/// Largest orientable-path distance over ordered vertex pairs, or `None`
/// when some pair is unreachable or the graph is empty.
pub fn diameter(g: &MixedGraph) -> Option<usize> {
    if g.n() == 0 {
        return None;
    }
    let mut best = 0usize;
    for src in 0..g.n() {
        let bfs = Bfs::run(g, src, Dir::Fwd, None);
        for d in &bfs.dist {
            best = best.max((*d)? as usize);
        }
    }
    Some(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::MixedGraph;
    use crate::testgraphs::{complete, dir_cycle, kite, mixed_triangle, path3, und_cycle};

    #[test]
    fn distances_respect_arcs() {
        let c3 = dir_cycle(3);
        assert_eq!(mixed_distance(&c3, 0, 2).unwrap(), Some(2));
        assert_eq!(mixed_distance(&c3, 2, 0).unwrap(), Some(1));
        let k = kite();
        assert_eq!(mixed_distance(&k, 0, 1).unwrap(), Some(1));
        assert_eq!(mixed_distance(&k, 1, 0).unwrap(), Some(2));
        assert_eq!(
            mixed_distance(&k, 0, 9),
            Err(Error::BadVertex { id: 9, n: 4 })
        );
    }

    #[test]
    fn one_way_reachability_is_not_connectivity() {
        let mut arc = MixedGraph::new(2);
        arc.add_arc(0, 1).unwrap();
        assert!(!is_connected(&arc));
        assert!(is_connected(&path3()));
        assert!(is_connected(&MixedGraph::new(0)));
        assert!(is_connected(&MixedGraph::new(1)));
    }

    #[test]
    fn tree_edges_are_bridges() {
        assert_eq!(bridges(&path3()).unwrap(), vec![0, 1]);
        assert_eq!(bridges(&und_cycle(4)).unwrap(), vec![]);
    }

    #[test]
    fn edge_on_an_orientable_cycle_is_no_bridge() {
        assert_eq!(bridges(&mixed_triangle()).unwrap(), vec![]);
    }

    #[test]
    fn bridges_require_connectivity() {
        let two = MixedGraph::new(2);
        assert_eq!(bridges(&two), Err(Error::NotConnected));
    }

    #[test]
    fn diameters_of_known_graphs() {
        assert_eq!(diameter(&dir_cycle(5)), Some(4));
        assert_eq!(diameter(&und_cycle(4)), Some(2));
        assert_eq!(diameter(&complete(4)), Some(1));
        assert_eq!(diameter(&MixedGraph::new(1)), Some(0));
        assert_eq!(diameter(&MixedGraph::new(2)), None);
        let mut arc = MixedGraph::new(2);
        arc.add_arc(0, 1).unwrap();
        assert_eq!(diameter(&arc), None);
    }
}
