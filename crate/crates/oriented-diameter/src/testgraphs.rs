//! Small fixture graphs shared by the unit tests.

use crate::graph::MixedGraph;

/// 4 vertices u=0, p=1, v=2, q=3: arcs u->p, q->u, undirected uv, pv, vq.
/// The running worked example for the partition and hub stages.
pub(crate) fn kite() -> MixedGraph {
    let mut g = MixedGraph::new(4);
    g.add_arc(0, 1).unwrap();
    g.add_arc(3, 0).unwrap();
    g.add_undirected(0, 2).unwrap();
    g.add_undirected(1, 2).unwrap();
    g.add_undirected(2, 3).unwrap();
    g
}

/// Undirected cycle 0-1-...-(n-1)-0.
pub(crate) fn und_cycle(n: usize) -> MixedGraph {
    let mut g = MixedGraph::new(n);
    for v in 0..n {
        g.add_undirected(v, (v + 1) % n).unwrap();
    }
    g
}

/// Directed cycle 0->1->...->(n-1)->0.
pub(crate) fn dir_cycle(n: usize) -> MixedGraph {
    let mut g = MixedGraph::new(n);
    for v in 0..n {
        g.add_arc(v, (v + 1) % n).unwrap();
    }
    g
}

/// Undirected path 0-1-2: both edges are bridges.
pub(crate) fn path3() -> MixedGraph {
    let mut g = MixedGraph::new(3);
    g.add_undirected(0, 1).unwrap();
    g.add_undirected(1, 2).unwrap();
    g
}

/// Undirected complete graph on n vertices.
pub(crate) fn complete(n: usize) -> MixedGraph {
    let mut g = MixedGraph::new(n);
    for a in 0..n {
        for b in (a + 1)..n {
            g.add_undirected(a, b).unwrap();
        }
    }
    g
}

/// Mixed triangle: arcs u->v, v->w (u=0, v=1, w=2), undirected wu. The
/// undirected edge lies on the orientable cycle u->v->w->u, so the graph is
/// bridgeless.
pub(crate) fn mixed_triangle() -> MixedGraph {
    let mut g = MixedGraph::new(3);
    g.add_arc(0, 1).unwrap();
    g.add_arc(1, 2).unwrap();
    g.add_undirected(2, 0).unwrap();
    g
}
