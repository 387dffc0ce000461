//! Mixed graphs: undirected edges and arcs over a dense vertex range.
//!
//! The underlying graph is always simple: at most one edge per unordered
//! vertex pair, no loops. Edges keep their insertion order, which fixes the
//! text serialization and every deterministic sweep order downstream.

use std::collections::BTreeMap;
use std::collections::BTreeSet;
use std::fmt::Write as _;

use crate::{Error, Result};

/// Dense 0-based vertex identifier.
pub type VertexId = usize;

/// Whether an edge is still undirected or already an arc.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EdgeKind {
    Undirected,
    Directed { tail: VertexId, head: VertexId },
}

/// One edge of a mixed graph. `a` and `b` are the endpoints in insertion
/// order; for an arc they equal `(tail, head)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EdgeRecord {
    pub a: VertexId,
    pub b: VertexId,
    pub kind: EdgeKind,
}

impl EdgeRecord {
    pub fn is_undirected(&self) -> bool {
        self.kind == EdgeKind::Undirected
    }

    /// The endpoint that is not `v`.
    pub fn other(&self, v: VertexId) -> VertexId {
        if self.a == v {
            self.b
        } else {
            self.a
        }
    }

    /// True when the edge can be traversed from `from` towards its other
    /// endpoint: always for undirected edges, only tail to head for arcs.
    pub fn traversable_from(&self, from: VertexId) -> bool {
        match self.kind {
            EdgeKind::Undirected => true,
            EdgeKind::Directed { tail, .. } => tail == from,
        }
    }
}

/// Undirected degree profile of one vertex: `total = d_out + d_in + d_und`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Degrees {
    pub total: usize,
    pub d_out: usize,
    pub d_in: usize,
    pub d_und: usize,
}

impl Degrees {
    /// Number of arcs at the vertex, regardless of direction.
    pub fn arc_sum(&self) -> usize {
        self.d_out + self.d_in
    }
}

/// An assignment of directions to undirected edges, keyed by the unordered
/// endpoint pair.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Orientation {
    map: BTreeMap<(VertexId, VertexId), (VertexId, VertexId)>,
}

fn pair_key(a: VertexId, b: VertexId) -> (VertexId, VertexId) {
    (a.min(b), a.max(b))
}

impl Orientation {
    pub fn new() -> Self {
        Self::default()
    }

    /// Record `tail -> head`. Recording the same direction twice is a no-op;
    /// the opposite direction is a conflict.
    pub fn orient(&mut self, tail: VertexId, head: VertexId) -> Result<()> {
        match self.map.insert(pair_key(tail, head), (tail, head)) {
            None => Ok(()),
            Some(prev) if prev == (tail, head) => Ok(()),
            Some(prev) => {
                self.map.insert(pair_key(tail, head), prev);
                Err(Error::IncompatibleOrientation(tail, head))
            }
        }
    }

    /// Record `tail -> head`, overwriting any previous direction.
    pub fn force(&mut self, tail: VertexId, head: VertexId) {
        self.map.insert(pair_key(tail, head), (tail, head));
    }

    pub fn get(&self, a: VertexId, b: VertexId) -> Option<(VertexId, VertexId)> {
        self.map.get(&pair_key(a, b)).copied()
    }

    pub fn contains(&self, a: VertexId, b: VertexId) -> bool {
        self.map.contains_key(&pair_key(a, b))
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.map.values().copied()
    }

    /// Merge every direction of `other` into `self`, failing on conflicts.
    pub fn merge(&mut self, other: &Orientation) -> Result<()> {
        for (t, h) in other.iter() {
            self.orient(t, h)?;
        }
        Ok(())
    }

    /// The same assignment with every direction flipped.
    pub fn reversed(&self) -> Orientation {
        let mut out = Orientation::new();
        for (t, h) in self.iter() {
            out.force(h, t);
        }
        out
    }
}

/// A mixed graph: `n` vertices, simple underlying graph, edges in insertion
/// order, adjacency sorted by neighbor id for deterministic traversals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MixedGraph {
    n: usize,
    edges: Vec<EdgeRecord>,
    adj: Vec<Vec<(VertexId, usize)>>,
}

impl MixedGraph {
    pub fn new(n: usize) -> Self {
        MixedGraph {
            n,
            edges: Vec::new(),
            adj: vec![Vec::new(); n],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[EdgeRecord] {
        &self.edges
    }

    pub fn edge(&self, idx: usize) -> &EdgeRecord {
        &self.edges[idx]
    }

    /// Incident edges of `v` as `(neighbor, edge index)`, ascending by
    /// neighbor id.
    pub fn incident(&self, v: VertexId) -> &[(VertexId, usize)] {
        &self.adj[v]
    }

    fn check_vertex(&self, v: VertexId) -> Result<()> {
        if v >= self.n {
            return Err(Error::BadVertex { id: v, n: self.n });
        }
        Ok(())
    }

    /// Index of the edge between `a` and `b`, if present.
    pub fn find_edge(&self, a: VertexId, b: VertexId) -> Option<usize> {
        if a >= self.n {
            return None;
        }
        self.adj[a]
            .binary_search_by_key(&b, |&(nb, _)| nb)
            .ok()
            .map(|pos| self.adj[a][pos].1)
    }

    pub fn add_edge(&mut self, rec: EdgeRecord) -> Result<usize> {
        if let EdgeKind::Directed { tail, head } = rec.kind {
            if (tail, head) != (rec.a, rec.b) && (tail, head) != (rec.b, rec.a) {
                return Err(Error::BadParam(format!(
                    "arc {tail}->{head} does not match endpoints ({}, {})",
                    rec.a, rec.b
                )));
            }
        }
        self.check_vertex(rec.a)?;
        self.check_vertex(rec.b)?;
        if rec.a == rec.b {
            return Err(Error::LoopRejected(rec.a));
        }
        if self.find_edge(rec.a, rec.b).is_some() {
            return Err(Error::DuplicatePair(rec.a, rec.b));
        }
        let idx = self.edges.len();
        self.edges.push(rec);
        for (v, w) in [(rec.a, rec.b), (rec.b, rec.a)] {
            let pos = self.adj[v]
                .binary_search_by_key(&w, |&(nb, _)| nb)
                .unwrap_err();
            self.adj[v].insert(pos, (w, idx));
        }
        Ok(idx)
    }

    pub fn add_undirected(&mut self, a: VertexId, b: VertexId) -> Result<usize> {
        self.add_edge(EdgeRecord {
            a,
            b,
            kind: EdgeKind::Undirected,
        })
    }

    pub fn add_arc(&mut self, tail: VertexId, head: VertexId) -> Result<usize> {
        self.add_edge(EdgeRecord {
            a: tail,
            b: head,
            kind: EdgeKind::Directed { tail, head },
        })
    }

    /// Out-, in-, and undirected neighbor sets of `u`; pairwise disjoint
    /// because the underlying graph is simple.
    pub fn neighbor_sets(
        &self,
        u: VertexId,
    ) -> Result<(BTreeSet<VertexId>, BTreeSet<VertexId>, BTreeSet<VertexId>)> {
        self.check_vertex(u)?;
        let mut out = BTreeSet::new();
        let mut inc = BTreeSet::new();
        let mut und = BTreeSet::new();
        for &(nb, idx) in &self.adj[u] {
            match self.edges[idx].kind {
                EdgeKind::Undirected => und.insert(nb),
                EdgeKind::Directed { tail, .. } if tail == u => out.insert(nb),
                EdgeKind::Directed { .. } => inc.insert(nb),
            };
        }
        Ok((out, inc, und))
    }

    pub fn degrees(&self, u: VertexId) -> Result<Degrees> {
        self.check_vertex(u)?;
        let mut d = Degrees {
            total: 0,
            d_out: 0,
            d_in: 0,
            d_und: 0,
        };
        for &(_, idx) in &self.adj[u] {
            d.total += 1;
            match self.edges[idx].kind {
                EdgeKind::Undirected => d.d_und += 1,
                EdgeKind::Directed { tail, .. } if tail == u => d.d_out += 1,
                EdgeKind::Directed { .. } => d.d_in += 1,
            }
        }
        Ok(d)
    }

    /// Maximum undirected degree and all vertices attaining it, ascending.
    pub fn max_undirected(&self) -> Result<(usize, Vec<VertexId>)> {
        if self.n == 0 {
            return Err(Error::EmptyGraph);
        }
        let und: Vec<usize> = (0..self.n)
            .map(|v| self.degrees(v).expect("vertex in range").d_und)
            .collect();
        let best = *und.iter().max().expect("nonempty");
        let argmax = (0..self.n).filter(|&v| und[v] == best).collect();
        Ok((best, argmax))
    }

    /// True when the graph has no arcs at all.
    pub fn is_undirected(&self) -> bool {
        self.edges.iter().all(EdgeRecord::is_undirected)
    }

    /// Indices of the undirected edges, in insertion order.
    pub fn undirected_edge_indices(&self) -> Vec<usize> {
        (0..self.edges.len())
            .filter(|&i| self.edges[i].is_undirected())
            .collect()
    }

    /// Copy with the edge at `idx` oriented `tail -> head`. The edge must be
    /// undirected or already point that way.
    pub fn with_oriented_edge(
        &self,
        idx: usize,
        tail: VertexId,
        head: VertexId,
    ) -> Result<MixedGraph> {
        let rec = &self.edges[idx];
        if pair_key(rec.a, rec.b) != pair_key(tail, head) {
            return Err(Error::NoEdge(tail, head));
        }
        match rec.kind {
            EdgeKind::Undirected => {}
            EdgeKind::Directed { tail: t, head: h } => {
                if (t, h) != (tail, head) {
                    return Err(Error::IncompatibleOrientation(tail, head));
                }
            }
        }
        let mut g = self.clone();
        g.edges[idx].kind = EdgeKind::Directed { tail, head };
        Ok(g)
    }

    /// Copy with the directions of `o` applied to the matching undirected
    /// edges. Directions that contradict existing arcs are rejected; edges
    /// not mentioned in `o` stay as they are.
    pub fn apply(&self, o: &Orientation) -> Result<MixedGraph> {
        let mut g = self.clone();
        for (tail, head) in o.iter() {
            let idx = self
                .find_edge(tail, head)
                .ok_or(Error::NoEdge(tail, head))?;
            match g.edges[idx].kind {
                EdgeKind::Undirected => {
                    g.edges[idx].kind = EdgeKind::Directed { tail, head };
                }
                EdgeKind::Directed { tail: t, head: h } => {
                    if (t, h) != (tail, head) {
                        return Err(Error::IncompatibleOrientation(tail, head));
                    }
                }
            }
        }
        Ok(g)
    }

    /// Copy with every arc reversed; undirected edges are untouched and all
    /// indices are preserved.
    pub fn reversed(&self) -> MixedGraph {
        let mut g = self.clone();
        for rec in &mut g.edges {
            if let EdgeKind::Directed { tail, head } = rec.kind {
                rec.kind = EdgeKind::Directed {
                    tail: head,
                    head: tail,
                };
            }
        }
        g
    }

    /// Parse the text format: first content line `n <N>`, then one edge per
    /// line, `u <a> <b>` for undirected edges and `d <tail> <head>` for arcs.
    /// `#` starts a comment; blank lines are ignored.
    pub fn parse(text: &str) -> Result<MixedGraph> {
        let mut g: Option<MixedGraph> = None;
        for (lineno, raw) in text.lines().enumerate() {
            let line = lineno + 1;
            let content = raw.split('#').next().unwrap_or("");
            let tokens: Vec<&str> = content.split_whitespace().collect();
            if tokens.is_empty() {
                continue;
            }
            let parse_id = |tok: &str| -> Result<usize> {
                tok.parse::<usize>().map_err(|_| Error::Parse {
                    line,
                    msg: format!("expected a vertex id, got {tok:?}"),
                })
            };
            match (&mut g, tokens[0]) {
                (None, "n") if tokens.len() == 2 => {
                    g = Some(MixedGraph::new(parse_id(tokens[1])?));
                }
                (None, _) => {
                    return Err(Error::Parse {
                        line,
                        msg: "expected `n <N>` before any edges".into(),
                    });
                }
                (Some(g), "u") | (Some(g), "d") if tokens.len() == 3 => {
                    let a = parse_id(tokens[1])?;
                    let b = parse_id(tokens[2])?;
                    let res = if tokens[0] == "u" {
                        g.add_undirected(a, b)
                    } else {
                        g.add_arc(a, b)
                    };
                    res.map_err(|e| Error::Parse {
                        line,
                        msg: e.to_string(),
                    })?;
                }
                (Some(_), tok) => {
                    return Err(Error::Parse {
                        line,
                        msg: format!("expected `u <a> <b>` or `d <tail> <head>`, got {tok:?}"),
                    });
                }
            }
        }
        g.ok_or(Error::Parse {
            line: 0,
            msg: "empty input".into(),
        })
    }

    /// Serialize in the text format, edges in insertion order. `parse` of the
    /// result reproduces the graph exactly.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        writeln!(out, "n {}", self.n).expect("string write");
        for rec in &self.edges {
            match rec.kind {
                EdgeKind::Undirected => writeln!(out, "u {} {}", rec.a, rec.b),
                EdgeKind::Directed { tail, head } => writeln!(out, "d {tail} {head}"),
            }
            .expect("string write");
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testgraphs::kite;

    #[test]
    fn neighbor_sets_split_by_kind() {
        let g = kite();
        let (out, inc, und) = g.neighbor_sets(0).unwrap();
        assert_eq!(out.into_iter().collect::<Vec<_>>(), vec![1]);
        assert_eq!(inc.into_iter().collect::<Vec<_>>(), vec![3]);
        assert_eq!(und.into_iter().collect::<Vec<_>>(), vec![2]);
    }

    #[test]
    fn degree_profiles() {
        let g = kite();
        let du = g.degrees(0).unwrap();
        assert_eq!((du.total, du.d_out, du.d_in, du.d_und), (3, 1, 1, 1));
        let dv = g.degrees(2).unwrap();
        assert_eq!((dv.total, dv.d_out, dv.d_in, dv.d_und), (3, 0, 0, 3));
        assert_eq!(g.max_undirected().unwrap(), (3, vec![2]));
    }

    #[test]
    fn simple_underlying_graph_enforced() {
        let mut g = MixedGraph::new(3);
        g.add_undirected(0, 1).unwrap();
        assert_eq!(g.add_arc(1, 0), Err(Error::DuplicatePair(1, 0)));
        assert_eq!(g.add_undirected(1, 1), Err(Error::LoopRejected(1)));
        assert_eq!(g.add_undirected(1, 7), Err(Error::BadVertex { id: 7, n: 3 }));
    }

    #[test]
    fn parse_round_trip_is_exact() {
        let text = "n 4\nd 0 1\nd 3 0\nu 0 2\nu 1 2\nu 2 3\n";
        let g = MixedGraph::parse(text).unwrap();
        assert_eq!(g, kite());
        assert_eq!(g.to_text(), text);
    }

    #[test]
    fn parse_accepts_comments_and_blanks() {
        let text = "# a kite\n\nn 4  # order\nd 0 1\nd 3 0\nu 0 2\nu 1 2 # mid\nu 2 3\n";
        assert_eq!(MixedGraph::parse(text).unwrap(), kite());
    }

    #[test]
    fn parse_rejects_malformed_input() {
        assert!(matches!(
            MixedGraph::parse("u 0 1\n"),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(
            MixedGraph::parse("n 2\nx 0 1\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            MixedGraph::parse("n 2\nu 0\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            MixedGraph::parse("n 2\nu 0 0\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(MixedGraph::parse(""), Err(Error::Parse { .. })));
    }

    #[test]
    fn orientation_conflicts_are_rejected() {
        let mut o = Orientation::new();
        o.orient(2, 5).unwrap();
        o.orient(2, 5).unwrap();
        assert_eq!(o.orient(5, 2), Err(Error::IncompatibleOrientation(5, 2)));
        assert_eq!(o.get(5, 2), Some((2, 5)));
        o.force(5, 2);
        assert_eq!(o.get(2, 5), Some((5, 2)));
    }

    #[test]
    fn apply_orients_only_matching_edges() {
        let g = kite();
        let mut o = Orientation::new();
        o.orient(2, 0).unwrap();
        let g2 = g.apply(&o).unwrap();
        assert_eq!(
            g2.edge(2).kind,
            EdgeKind::Directed { tail: 2, head: 0 }
        );
        assert_eq!(g2.edge(3).kind, EdgeKind::Undirected);

        let mut bad = Orientation::new();
        bad.orient(1, 0).unwrap();
        assert_eq!(g.apply(&bad), Err(Error::IncompatibleOrientation(1, 0)));
    }

    #[test]
    fn reversal_flips_arcs_only() {
        let g = kite().reversed();
        assert_eq!(g.edge(0).kind, EdgeKind::Directed { tail: 1, head: 0 });
        assert_eq!(g.edge(1).kind, EdgeKind::Directed { tail: 0, head: 3 });
        assert_eq!(g.edge(2).kind, EdgeKind::Undirected);
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #[test]
            fn text_round_trip(n in 1usize..8, codes in prop::collection::vec(0u8..4, 28)) {
                let mut g = MixedGraph::new(n);
                let mut k = 0;
                for a in 0..n {
                    for b in (a + 1)..n {
                        match codes[k] {
                            1 => {
                                g.add_undirected(a, b).unwrap();
                            }
                            2 => {
                                g.add_arc(a, b).unwrap();
                            }
                            3 => {
                                g.add_arc(b, a).unwrap();
                            }
                            _ => {}
                        }
                        k += 1;
                    }
                }
                let back = MixedGraph::parse(&g.to_text()).unwrap();
                prop_assert_eq!(back, g);
            }
        }
    }
}
