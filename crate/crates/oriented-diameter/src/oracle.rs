//! Exact oriented diameter by exhaustive search over all orientations of
//! the undirected edges.
//!
//! The search assigns directions edge by edge in insertion order and prunes
//! a branch as soon as the partially oriented graph loses mixed
//! connectivity: orienting more edges only removes traversals, so no
//! completion of such a branch can be strong. The pruning keeps both the
//! minimum and the count of strong orientations exact.

use crate::graph::{EdgeKind, MixedGraph, Orientation};
use crate::reach;
use crate::{Error, Result};

/// Default ceiling on the number of undirected edges the search accepts.
pub const DEFAULT_EDGE_LIMIT: usize = 24;

/// Outcome of the exhaustive search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleResult {
    /// Smallest diameter over all strong orientations, or `None` when no
    /// orientation is strong.
    pub value: Option<usize>,
    /// Directions of the originally undirected edges attaining `value`.
    pub witness: Option<Orientation>,
    /// Number of strong orientations of the input.
    pub strong_count: usize,
}

/// Minimize the diameter over all strong orientations of `g`. Fails with
/// `TooManyEdges` when more than `limit` undirected edges would have to be
/// enumerated.
pub fn oriented_diameter_exact(g: &MixedGraph, limit: usize) -> Result<OracleResult> {
    if g.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    let und = g.undirected_edge_indices();
    if und.len() > limit {
        return Err(Error::TooManyEdges {
            count: und.len(),
            limit,
        });
    }
    let mut res = OracleResult {
        value: None,
        witness: None,
        strong_count: 0,
    };
    search(g, &und, 0, &mut res);
    Ok(res)
}

fn search(cur: &MixedGraph, und: &[usize], pos: usize, res: &mut OracleResult) {
    if !reach::is_connected(cur) {
        return;
    }
    if pos == und.len() {
        res.strong_count += 1;
        let diam = reach::diameter(cur).expect("strong orientation has a finite diameter");
        if res.value.map_or(true, |best| diam < best) {
            res.value = Some(diam);
            let mut w = Orientation::new();
            for &idx in und {
                if let EdgeKind::Directed { tail, head } = cur.edge(idx).kind {
                    w.force(tail, head);
                }
            }
            res.witness = Some(w);
        }
        return;
    }
    let idx = und[pos];
    let rec = *cur.edge(idx);
    for (t, h) in [(rec.a, rec.b), (rec.b, rec.a)] {
        let next = cur
            .with_oriented_edge(idx, t, h)
            .expect("edge is undirected");
        search(&next, und, pos + 1, res);
    }
}

/// True when every strong orientation of `g` has diameter at least `bound`.
/// Vacuously true when no orientation is strong. A branch whose partially
/// oriented graph already has mixed diameter at least `bound`, or an
/// unreachable pair, passes without further enumeration: distances only
/// grow as edges are oriented.
pub fn verify_lower_bound(g: &MixedGraph, bound: usize, limit: usize) -> Result<bool> {
    if g.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    let und = g.undirected_edge_indices();
    if und.len() > limit {
        return Err(Error::TooManyEdges {
            count: und.len(),
            limit,
        });
    }
    if bound == 0 {
        return Ok(true);
    }
    Ok(all_at_least(g, &und, 0, bound))
}

fn all_at_least(cur: &MixedGraph, und: &[usize], pos: usize, bound: usize) -> bool {
    match reach::diameter(cur) {
        None => return true,
        Some(d) if d >= bound => return true,
        Some(_) => {}
    }
    if pos == und.len() {
        return false;
    }
    let idx = und[pos];
    let rec = *cur.edge(idx);
    [(rec.a, rec.b), (rec.b, rec.a)].into_iter().all(|(t, h)| {
        let next = cur
            .with_oriented_edge(idx, t, h)
            .expect("edge is undirected");
        all_at_least(&next, und, pos + 1, bound)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testgraphs::{complete, dir_cycle, path3, und_cycle};

    #[test]
    fn square_has_two_strong_orientations_of_diameter_three() {
        let res = oriented_diameter_exact(&und_cycle(4), DEFAULT_EDGE_LIMIT).unwrap();
        assert_eq!(res.value, Some(3));
        assert_eq!(res.strong_count, 2);
        let oriented = und_cycle(4).apply(&res.witness.unwrap()).unwrap();
        assert_eq!(reach::diameter(&oriented), Some(3));
    }

    #[test]
    fn complete_four_achieves_three() {
        let res = oriented_diameter_exact(&complete(4), DEFAULT_EDGE_LIMIT).unwrap();
        assert_eq!(res.value, Some(3));
    }

    #[test]
    fn cycles_force_the_long_way_round() {
        for n in 3..=8 {
            let res = oriented_diameter_exact(&und_cycle(n), DEFAULT_EDGE_LIMIT).unwrap();
            assert_eq!(res.value, Some(n - 1), "cycle on {n} vertices");
        }
    }

    #[test]
    fn bridges_leave_nothing_strong() {
        let res = oriented_diameter_exact(&path3(), DEFAULT_EDGE_LIMIT).unwrap();
        assert_eq!(res.value, None);
        assert_eq!(res.witness, None);
        assert_eq!(res.strong_count, 0);
    }

    #[test]
    fn single_vertex_is_trivially_strong() {
        let res = oriented_diameter_exact(&MixedGraph::new(1), DEFAULT_EDGE_LIMIT).unwrap();
        assert_eq!(res.value, Some(0));
        assert_eq!(res.strong_count, 1);
    }

    #[test]
    fn edge_limit_is_enforced() {
        assert_eq!(
            oriented_diameter_exact(&complete(8), DEFAULT_EDGE_LIMIT).unwrap_err(),
            Error::TooManyEdges {
                count: 28,
                limit: DEFAULT_EDGE_LIMIT
            }
        );
    }

    #[test]
    fn lower_bounds_on_the_square() {
        let g = und_cycle(4);
        assert!(verify_lower_bound(&g, 3, DEFAULT_EDGE_LIMIT).unwrap());
        assert!(!verify_lower_bound(&g, 4, DEFAULT_EDGE_LIMIT).unwrap());
    }

    #[test]
    fn lower_bounds_are_vacuous_without_strong_orientations() {
        assert!(verify_lower_bound(&path3(), 100, DEFAULT_EDGE_LIMIT).unwrap());
        assert!(verify_lower_bound(&dir_cycle(5), 4, DEFAULT_EDGE_LIMIT).unwrap());
        assert!(!verify_lower_bound(&dir_cycle(5), 5, DEFAULT_EDGE_LIMIT).unwrap());
    }
}
