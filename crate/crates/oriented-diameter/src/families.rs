//! Generators for the graph families with known extremal oriented
//! diameter, plus seeded random instances.
//!
//! Every generator self-validates before returning: the graph must be
//! connected with no undirected bridge, the base vertex must have exactly
//! the advertised degree profile, and declared bipartitions must be real.
//! A failed check is a `ConstructionMismatch`, never a silently wrong
//! graph. Parameter combinations a family cannot realize are `BadParam`;
//! the two members that exist in the source material only as one fixed
//! picture, with no general recipe, are `UnsupportedFigureOnly`.

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{MixedGraph, VertexId};
use crate::reach;
use crate::{Error, Result};

/// A generated instance: the graph, the intended base vertex when the
/// family fixes one, the bipartition when the family is bipartite, and
/// header comments for serialization.
#[derive(Debug, Clone)]
pub struct Generated {
    pub graph: MixedGraph,
    pub u: Option<VertexId>,
    pub part_a: Option<BTreeSet<VertexId>>,
    pub part_b: Option<BTreeSet<VertexId>>,
    pub comment: Vec<String>,
}

fn mismatch(msg: String) -> Error {
    Error::ConstructionMismatch(msg)
}

/// Shared self-check: connectivity, no bridges, base degrees as
/// advertised, bipartition (when present) disjoint, covering, crossing.
fn validate(gen: &Generated, want: Option<(usize, usize, usize)>) -> Result<()> {
    let g = &gen.graph;
    if !reach::is_connected(g) {
        return Err(mismatch("generated graph is not connected".into()));
    }
    if !reach::bridges(g)?.is_empty() {
        return Err(mismatch("generated graph has a bridge".into()));
    }
    if let (Some(u), Some((und, out, inc))) = (gen.u, want) {
        let d = g.degrees(u)?;
        if (d.d_und, d.d_out, d.d_in) != (und, out, inc) {
            return Err(mismatch(format!(
                "base {u} has degrees und={} out={} in={}, wanted und={und} out={out} in={inc}",
                d.d_und, d.d_out, d.d_in
            )));
        }
    }
    if let (Some(a), Some(b)) = (&gen.part_a, &gen.part_b) {
        let all: BTreeSet<VertexId> = (0..g.n()).collect();
        let union: BTreeSet<VertexId> = a.union(b).copied().collect();
        if union != all || !a.is_disjoint(b) {
            return Err(mismatch("declared parts do not partition the vertices".into()));
        }
        if let Some(rec) = g.edges().iter().find(|r| a.contains(&r.a) == a.contains(&r.b)) {
            return Err(mismatch(format!(
                "edge ({}, {}) does not cross the declared parts",
                rec.a, rec.b
            )));
        }
    }
    Ok(())
}

fn degree_comment(g: &MixedGraph, u: VertexId) -> String {
    let d = g.degrees(u).expect("base vertex in range");
    format!(
        "degrees at base: und={} out={} in={}",
        d.d_und, d.d_out, d.d_in
    )
}

/// Attach `budget` pendant vertices to `u`, ids from `start`: undirected
/// three-vertex paths while at least three remain, one undirected pair for
/// a remainder of two. A remainder of one cannot be attached bridge-free.
fn add_pendants(g: &mut MixedGraph, u: VertexId, start: VertexId, budget: usize) -> Result<()> {
    if budget % 3 == 1 {
        return Err(Error::BadParam(format!(
            "pendant budget {budget} leaves a lone vertex; change n or the degree target"
        )));
    }
    let mut next = start;
    let mut left = budget;
    while left >= 3 {
        g.add_undirected(next, next + 1)?;
        g.add_undirected(next + 1, next + 2)?;
        for v in next..next + 3 {
            g.add_undirected(u, v)?;
        }
        next += 3;
        left -= 3;
    }
    if left == 2 {
        g.add_undirected(next, next + 1)?;
        g.add_undirected(u, next)?;
        g.add_undirected(u, next + 1)?;
    }
    Ok(())
}

/// Attach the directed three-vertex path `x -> x+1 -> x+2`, all three
/// joined to `u` by undirected edges.
fn add_directed_p3(g: &mut MixedGraph, u: VertexId, x: VertexId) -> Result<()> {
    g.add_arc(x, x + 1)?;
    g.add_arc(x + 1, x + 2)?;
    for v in x..x + 3 {
        g.add_undirected(u, v)?;
    }
    Ok(())
}

fn und_cycle_on(g: &mut MixedGraph, ids: impl IntoIterator<Item = VertexId>) -> Result<()> {
    let ids: Vec<VertexId> = ids.into_iter().collect();
    for w in ids.windows(2) {
        g.add_undirected(w[0], w[1])?;
    }
    g.add_undirected(*ids.last().expect("cycle nonempty"), ids[0])?;
    Ok(())
}

/// Undirected cycle with one chord between the two neighbors of vertex 0,
/// so the maximum undirected degree is 3, attained at vertices 1 and n-1.
pub fn gen_ohat(n: usize) -> Result<Generated> {
    if n < 5 {
        return Err(Error::BadParam(format!("chorded cycle needs n >= 5, got {n}")));
    }
    let mut g = MixedGraph::new(n);
    und_cycle_on(&mut g, 0..n)?;
    g.add_undirected(n - 1, 1)?;
    let gen = Generated {
        graph: g,
        u: None,
        part_a: None,
        part_b: None,
        comment: vec![format!("chorded cycle, n={n}, chord ({}, 1)", n - 1)],
    };
    validate(&gen, None)?;
    Ok(gen)
}

/// Undirected cycle plus a pendant pair at vertex 0, giving it undirected
/// degree 4 and no arcs.
pub fn gen_s0n4(n: usize) -> Result<Generated> {
    if n < 6 {
        return Err(Error::BadParam(format!(
            "cycle with a pendant pair needs n >= 6, got {n}"
        )));
    }
    let mut g = MixedGraph::new(n);
    und_cycle_on(&mut g, 0..n - 2)?;
    g.add_undirected(n - 2, n - 1)?;
    g.add_undirected(0, n - 2)?;
    g.add_undirected(0, n - 1)?;
    let comment = vec![
        format!("cycle on {} vertices with a pendant pair at the base", n - 2),
        degree_comment(&g, 0),
    ];
    let gen = Generated {
        graph: g,
        u: Some(0),
        part_a: None,
        part_b: None,
        comment,
    };
    validate(&gen, Some((4, 0, 0)))?;
    Ok(gen)
}

/// Undirected bipartite family with base degree exactly `delta`: a long
/// alternating chain with one shortcut and a fan at the base. Even ids are
/// part A, odd ids part B, and the base is the fan vertex in B.
pub fn gen_rdelta(n: usize, delta: usize) -> Result<Generated> {
    if delta < 4 {
        return Err(Error::BadParam(format!(
            "bipartite chain family needs a degree target of at least 4, got {delta}"
        )));
    }
    if n % 2 != 0 || n < 2 * delta + 2 {
        return Err(Error::BadParam(format!(
            "bipartite chain family needs even n >= {}, got {n}",
            2 * delta + 2
        )));
    }
    let half = n / 2;
    let psi = half - delta + 3;
    let a = |i: usize| 2 * (i - 1);
    let b = |i: usize| 2 * i - 1;
    let mut g = MixedGraph::new(n);
    for i in 1..=half {
        g.add_undirected(b(i), a(i))?;
    }
    for i in 1..half {
        g.add_undirected(a(i), b(i + 1))?;
    }
    g.add_undirected(b(1), a(psi - 2))?;
    g.add_undirected(a(psi - 2), b(psi))?;
    for i in psi + 1..=half {
        g.add_undirected(b(psi), a(i))?;
    }
    let u = b(psi);
    let part_a: BTreeSet<VertexId> = (0..n).filter(|v| v % 2 == 0).collect();
    let part_b: BTreeSet<VertexId> = (0..n).filter(|v| v % 2 == 1).collect();
    let comment = vec![
        format!("bipartite chain with a fan, n={n}, base degree {delta}"),
        format!("base u={u}, parts by id parity"),
        degree_comment(&g, u),
    ];
    let gen = Generated {
        graph: g,
        u: Some(u),
        part_a: Some(part_a),
        part_b: Some(part_b),
        comment,
    };
    validate(&gen, Some((delta, 0, 0)))?;
    Ok(gen)
}

/// Arc-free family with base degree exactly `delta_star`, one member per
/// supported `(n, delta_star)`.
pub fn gen_g_family(n: usize, delta_star: usize) -> Result<Generated> {
    let gen = match delta_star {
        0 | 1 => {
            return Err(Error::BadParam(format!(
                "no bridgeless member has base degree {delta_star} without arcs"
            )));
        }
        2 => {
            if n < 3 {
                return Err(Error::BadParam(format!("cycle needs n >= 3, got {n}")));
            }
            let mut g = MixedGraph::new(n);
            und_cycle_on(&mut g, 0..n)?;
            Generated {
                graph: g,
                u: Some(0),
                part_a: None,
                part_b: None,
                comment: vec![format!("undirected cycle, n={n}")],
            }
        }
        3 => {
            let mut gen = gen_ohat(n)?;
            gen.u = Some(1);
            gen.comment.push(degree_comment(&gen.graph, 1));
            gen
        }
        4 => return gen_s0n4(n),
        5 => {
            if n < 6 {
                return Err(Error::BadParam(format!(
                    "cycle with a directed pendant path needs n >= 6, got {n}"
                )));
            }
            let mut g = MixedGraph::new(n);
            und_cycle_on(&mut g, 0..n - 3)?;
            add_directed_p3(&mut g, 0, n - 3)?;
            let comment = vec![
                format!("cycle on {} vertices with a directed pendant path", n - 3),
                degree_comment(&g, 0),
            ];
            Generated {
                graph: g,
                u: Some(0),
                part_a: None,
                part_b: None,
                comment,
            }
        }
        6 => {
            if n < 7 {
                return Err(Error::BadParam(format!(
                    "two chorded directed lobes need n >= 7, got {n}"
                )));
            }
            let mut g = MixedGraph::new(n);
            g.add_undirected(0, 1)?;
            g.add_arc(1, 2)?;
            g.add_arc(2, 3)?;
            g.add_undirected(3, 0)?;
            g.add_undirected(0, 2)?;
            g.add_undirected(0, 4)?;
            for v in 4..n - 1 {
                g.add_arc(v, v + 1)?;
            }
            g.add_undirected(n - 1, 0)?;
            g.add_undirected(0, 5)?;
            let comment = vec![
                "two directed lobes chorded at the base".into(),
                degree_comment(&g, 0),
            ];
            Generated {
                graph: g,
                u: Some(0),
                part_a: None,
                part_b: None,
                comment,
            }
        }
        d => {
            let budget = d - 5;
            if n < d + 1 {
                return Err(Error::BadParam(format!(
                    "base degree {d} without arcs needs n >= {}, got {n}",
                    d + 1
                )));
            }
            let c = n - d + 1;
            let mut g = MixedGraph::new(n);
            und_cycle_on(&mut g, 0..=c)?;
            add_directed_p3(&mut g, 0, c + 1)?;
            add_pendants(&mut g, 0, c + 4, budget)?;
            let comment = vec![
                format!("cycle on {} vertices, a directed pendant path, {budget} pendants", c + 1),
                degree_comment(&g, 0),
            ];
            Generated {
                graph: g,
                u: Some(0),
                part_a: None,
                part_b: None,
                comment,
            }
        }
    };
    validate(&gen, Some((delta_star, 0, 0)))?;
    Ok(gen)
}

/// Family with exactly one arc at the base (outgoing) and undirected base
/// degree `delta_star`.
pub fn gen_f_family(n: usize, delta_star: usize) -> Result<Generated> {
    let gen = match delta_star {
        0 => {
            return Err(Error::BadParam(
                "a base with one arc and no undirected edge sits on a bridge".into(),
            ));
        }
        7 => {
            return Err(Error::UnsupportedFigureOnly {
                family: "f".into(),
                delta_star: 7,
            });
        }
        1 => {
            if n < 3 {
                return Err(Error::BadParam(format!("directed cycle needs n >= 3, got {n}")));
            }
            let mut g = MixedGraph::new(n);
            for v in 0..n - 1 {
                g.add_arc(v, v + 1)?;
            }
            g.add_undirected(n - 1, 0)?;
            let comment = vec![
                format!("directed cycle with one undirected closing edge, n={n}"),
                degree_comment(&g, 0),
            ];
            Generated {
                graph: g,
                u: Some(0),
                part_a: None,
                part_b: None,
                comment,
            }
        }
        2 => {
            if n < 5 {
                return Err(Error::BadParam(format!("chorded cycle needs n >= 5, got {n}")));
            }
            let mut g = MixedGraph::new(n);
            und_cycle_on(&mut g, 0..n)?;
            g.add_arc(1, n - 1)?;
            let comment = vec![
                format!("undirected cycle with a directed chord, n={n}"),
                degree_comment(&g, 1),
            ];
            Generated {
                graph: g,
                u: Some(1),
                part_a: None,
                part_b: None,
                comment,
            }
        }
        3 => {
            if n < 6 {
                return Err(Error::BadParam(format!(
                    "cycle with a pendant pair needs n >= 6, got {n}"
                )));
            }
            let mut g = MixedGraph::new(n);
            g.add_arc(0, 1)?;
            for v in 1..n - 3 {
                g.add_undirected(v, v + 1)?;
            }
            g.add_undirected(n - 3, 0)?;
            g.add_undirected(n - 2, n - 1)?;
            g.add_undirected(0, n - 2)?;
            g.add_undirected(0, n - 1)?;
            let comment = vec![
                "cycle with one arc at the base and a pendant pair".into(),
                degree_comment(&g, 0),
            ];
            Generated {
                graph: g,
                u: Some(0),
                part_a: None,
                part_b: None,
                comment,
            }
        }
        4 => {
            if n < 6 {
                return Err(Error::BadParam(format!(
                    "cycle with a directed pendant path needs n >= 6, got {n}"
                )));
            }
            let mut g = MixedGraph::new(n);
            g.add_arc(0, 1)?;
            for v in 1..n - 4 {
                g.add_undirected(v, v + 1)?;
            }
            g.add_undirected(n - 4, 0)?;
            add_directed_p3(&mut g, 0, n - 3)?;
            let comment = vec![
                "cycle with one arc at the base and a directed pendant path".into(),
                degree_comment(&g, 0),
            ];
            Generated {
                graph: g,
                u: Some(0),
                part_a: None,
                part_b: None,
                comment,
            }
        }
        5 => {
            if n < 7 {
                return Err(Error::BadParam(format!(
                    "two chorded directed lobes need n >= 7, got {n}"
                )));
            }
            let mut g = MixedGraph::new(n);
            g.add_undirected(0, 1)?;
            g.add_arc(1, 2)?;
            g.add_arc(2, 3)?;
            g.add_undirected(3, 0)?;
            g.add_arc(0, 2)?;
            g.add_undirected(0, 4)?;
            for v in 4..n - 1 {
                g.add_arc(v, v + 1)?;
            }
            g.add_undirected(n - 1, 0)?;
            g.add_undirected(0, 5)?;
            let comment = vec![
                "two directed lobes, one chord directed out of the base".into(),
                degree_comment(&g, 0),
            ];
            Generated {
                graph: g,
                u: Some(0),
                part_a: None,
                part_b: None,
                comment,
            }
        }
        d => {
            let budget = d - 6;
            if n < d + 2 {
                return Err(Error::BadParam(format!(
                    "base degree {d} with one out-arc needs n >= {}, got {n}",
                    d + 2
                )));
            }
            let c = n - d;
            let mut g = MixedGraph::new(n);
            g.add_arc(0, 1)?;
            for v in 1..c {
                g.add_undirected(v, v + 1)?;
            }
            g.add_undirected(c, 0)?;
            add_directed_p3(&mut g, 0, c + 1)?;
            let (x4, x5) = (c + 4, c + 5);
            g.add_undirected(0, x4)?;
            g.add_undirected(0, x5)?;
            g.add_arc(c, x4)?;
            g.add_arc(x5, 1)?;
            add_pendants(&mut g, 0, c + 6, budget)?;
            let comment = vec![
                format!("cycle on {} vertices, a directed pendant path, two bypass vertices, {budget} pendants", c + 1),
                degree_comment(&g, 0),
            ];
            Generated {
                graph: g,
                u: Some(0),
                part_a: None,
                part_b: None,
                comment,
            }
        }
    };
    validate(&gen, Some((delta_star, 1, 0)))?;
    Ok(gen)
}

/// Family with at least two arcs worth of structure at the base and
/// undirected base degree `delta_star`. The `delta_star = 2` member is the
/// one exception: it carries a single in-arc at its base.
pub fn gen_m_family(n: usize, delta_star: usize) -> Result<Generated> {
    let want: (usize, usize, usize);
    let gen = match delta_star {
        1 => {
            return Err(Error::BadParam(
                "no member has undirected base degree 1 alongside arcs".into(),
            ));
        }
        5 => {
            return Err(Error::UnsupportedFigureOnly {
                family: "m".into(),
                delta_star: 5,
            });
        }
        0 => {
            if n < 3 {
                return Err(Error::BadParam(format!("directed cycle needs n >= 3, got {n}")));
            }
            let mut g = MixedGraph::new(n);
            for v in 0..n {
                g.add_arc(v, (v + 1) % n)?;
            }
            want = (0, 1, 1);
            let comment = vec![format!("directed cycle, n={n}"), degree_comment(&g, 0)];
            Generated {
                graph: g,
                u: Some(0),
                part_a: None,
                part_b: None,
                comment,
            }
        }
        2 => {
            if n < 5 {
                return Err(Error::BadParam(format!(
                    "directed path with two closing edges needs n >= 5, got {n}"
                )));
            }
            let mut g = MixedGraph::new(n);
            for v in 0..n - 1 {
                g.add_arc(v, v + 1)?;
            }
            g.add_undirected(n - 1, 0)?;
            g.add_undirected(n - 1, 1)?;
            want = (2, 0, 1);
            let comment = vec![
                "directed path, base at its head with two undirected closers".into(),
                degree_comment(&g, n - 1),
            ];
            Generated {
                graph: g,
                u: Some(n - 1),
                part_a: None,
                part_b: None,
                comment,
            }
        }
        3 => {
            if n % 2 != 0 || n < 12 {
                return Err(Error::BadParam(format!(
                    "partly directed chain family needs even n >= 12, got {n}"
                )));
            }
            let half = n / 2;
            let psi = half - 2;
            let a = |i: usize| 2 * (i - 1);
            let b = |i: usize| 2 * i - 1;
            let mut g = MixedGraph::new(n);
            for i in 1..=half {
                if i <= psi - 1 {
                    g.add_arc(a(i), b(i))?;
                } else {
                    g.add_undirected(b(i), a(i))?;
                }
            }
            for i in 1..half {
                g.add_undirected(a(i), b(i + 1))?;
            }
            g.add_undirected(b(1), a(psi - 2))?;
            g.add_undirected(a(psi - 2), b(psi))?;
            for i in psi + 1..=half {
                g.add_arc(b(psi), a(i))?;
            }
            want = (3, 2, 0);
            let u = b(psi);
            let comment = vec![
                format!("partly directed chain with an out-fan, n={n}"),
                format!("base u={u}"),
                degree_comment(&g, u),
            ];
            Generated {
                graph: g,
                u: Some(u),
                part_a: None,
                part_b: None,
                comment,
            }
        }
        d if d >= 4 => {
            let budget = d - 4;
            if n < d + 3 {
                return Err(Error::BadParam(format!(
                    "base degree {d} with arcs both ways needs n >= {}, got {n}",
                    d + 3
                )));
            }
            let c = n - d - 1;
            let mut g = MixedGraph::new(n);
            g.add_arc(0, 1)?;
            for v in 1..c {
                g.add_undirected(v, v + 1)?;
            }
            g.add_undirected(c, 0)?;
            let x1 = c + 1;
            g.add_arc(x1, x1 + 1)?;
            g.add_arc(x1 + 1, x1 + 2)?;
            g.add_undirected(0, x1)?;
            g.add_undirected(0, x1 + 2)?;
            g.add_arc(x1 + 1, 0)?;
            let y1 = c + 4;
            g.add_undirected(0, y1)?;
            g.add_arc(y1, 1)?;
            add_pendants(&mut g, 0, c + 5, budget)?;
            want = (d, 1, 1);
            let comment = vec![
                format!("cycle on {} vertices, a directed pendant path feeding the base, a bypass vertex, {budget} pendants", c + 1),
                degree_comment(&g, 0),
            ];
            Generated {
                graph: g,
                u: Some(0),
                part_a: None,
                part_b: None,
                comment,
            }
        }
        _ => unreachable!("all degree targets are covered"),
    };
    validate(&gen, Some(want))?;
    Ok(gen)
}

/// Shared body of the mixed bipartite family: one lobe with `k` chords
/// directed out of the base, one with `l` chords directed into it, each
/// lobe carrying an undirected square. Returns the graph and the id right
/// after the lobes.
fn r_mixed_lobes(n: usize, k: usize, l: usize) -> Result<(MixedGraph, usize)> {
    let mut g = MixedGraph::new(n);
    g.add_undirected(0, 1)?;
    for i in 1..2 * k + 3 {
        g.add_arc(i, i + 1)?;
    }
    g.add_undirected(2 * k + 3, 0)?;
    for d in 1..=k {
        g.add_arc(0, 1 + 2 * d)?;
    }
    let a1 = 2 * k + 4;
    g.add_undirected(1, a1)?;
    g.add_undirected(a1, a1 + 1)?;
    g.add_undirected(a1 + 1, a1 + 2)?;
    g.add_undirected(a1 + 2, 1)?;
    let y0 = 2 * k + 7;
    let yend = 2 * k + 2 * l + 9;
    g.add_undirected(0, y0)?;
    for i in y0..yend {
        g.add_arc(i, i + 1)?;
    }
    g.add_undirected(yend, 0)?;
    for d in 1..=l {
        g.add_arc(y0 + 2 * d, 0)?;
    }
    let b1 = yend + 1;
    g.add_undirected(yend, b1)?;
    g.add_undirected(b1, b1 + 1)?;
    g.add_undirected(b1 + 1, b1 + 2)?;
    g.add_undirected(b1 + 2, yend)?;
    Ok((g, b1 + 3))
}

/// Mixed bipartite family with undirected base degree `delta_star >= 5`,
/// `k` out-arcs and `l` in-arcs at the base. Even ids are part B (with the
/// base), odd ids part A; parts are equal.
pub fn gen_r_mixed(n: usize, delta_star: usize) -> Result<Generated> {
    if delta_star < 5 {
        return Err(Error::BadParam(format!(
            "mixed bipartite family needs a degree target of at least 5, got {delta_star}"
        )));
    }
    let (g, k, l) = if delta_star == 5 {
        if n % 2 != 0 || n < 18 {
            return Err(Error::BadParam(format!(
                "mixed bipartite family at degree 5 needs even n >= 18, got {n}"
            )));
        }
        let t = n / 2 - 7;
        let l = t / 2;
        let k = t - l;
        let (mut g, next) = r_mixed_lobes(n, k, l)?;
        g.add_undirected(next, 0)?;
        g.add_arc(next, 2)?;
        (g, k, l)
    } else {
        if n % 2 != 0 || n < 2 * delta_star + 8 {
            return Err(Error::BadParam(format!(
                "mixed bipartite family at degree {delta_star} needs even n >= {}, got {n}",
                2 * delta_star + 8
            )));
        }
        let t = n / 2 - delta_star - 2;
        let l = t / 2;
        let k = t - l;
        let (mut g, z0) = r_mixed_lobes(n, k, l)?;
        g.add_undirected(0, z0)?;
        for i in z0..n - 1 {
            g.add_undirected(i, i + 1)?;
        }
        g.add_undirected(n - 1, 0)?;
        for d in 1..=delta_star - 6 {
            g.add_undirected(0, z0 + 2 * d)?;
        }
        (g, k, l)
    };
    let part_a: BTreeSet<VertexId> = (0..n).filter(|v| v % 2 == 1).collect();
    let part_b: BTreeSet<VertexId> = (0..n).filter(|v| v % 2 == 0).collect();
    let comment = vec![
        format!("mixed bipartite family, n={n}, base degree {delta_star}, {k} out-chords, {l} in-chords"),
        "base u=0, part B = even ids".into(),
        degree_comment(&g, 0),
    ];
    let gen = Generated {
        graph: g,
        u: Some(0),
        part_a: Some(part_a),
        part_b: Some(part_b),
        comment,
    };
    validate(&gen, Some((delta_star, k, l)))?;
    Ok(gen)
}

/// Seeded random bridgeless mixed graph: a shuffled undirected spanning
/// cycle, `extra` undirected chords, then each edge independently turned
/// into an arc with probability `frac` (direction by fair coin). Retries
/// with fresh randomness until the result is connected and bridge-free.
/// The retry budget is generous because at `frac` near 1 a sparse graph
/// whose arcs all get fair-coin directions is rarely strong.
pub fn gen_random_bridgeless(n: usize, extra: usize, frac: f64, seed: u64) -> Result<Generated> {
    if n < 3 {
        return Err(Error::BadParam(format!("random graph needs n >= 3, got {n}")));
    }
    let max_extra = n * (n - 1) / 2 - n;
    if extra > max_extra {
        return Err(Error::BadParam(format!(
            "at most {max_extra} chords fit on {n} vertices, asked for {extra}"
        )));
    }
    if !(0.0..=1.0).contains(&frac) {
        return Err(Error::BadParam(format!(
            "arc probability must lie in [0, 1], got {frac}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..8192 {
        let mut perm: Vec<VertexId> = (0..n).collect();
        perm.shuffle(&mut rng);
        let mut pairs: Vec<(VertexId, VertexId)> = Vec::new();
        let mut on_cycle: BTreeSet<(VertexId, VertexId)> = BTreeSet::new();
        for i in 0..n {
            let (a, b) = (perm[i], perm[(i + 1) % n]);
            pairs.push((a, b));
            on_cycle.insert((a.min(b), a.max(b)));
        }
        let mut rest: Vec<(VertexId, VertexId)> = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                if !on_cycle.contains(&(a, b)) {
                    rest.push((a, b));
                }
            }
        }
        rest.shuffle(&mut rng);
        pairs.extend(rest.into_iter().take(extra));
        let mut g = MixedGraph::new(n);
        for (a, b) in pairs {
            if rng.gen_bool(frac) {
                if rng.gen_bool(0.5) {
                    g.add_arc(a, b)?;
                } else {
                    g.add_arc(b, a)?;
                }
            } else {
                g.add_undirected(a, b)?;
            }
        }
        if reach::is_connected(&g) && reach::bridges(&g)?.is_empty() {
            let comment = vec![format!(
                "random bridgeless graph, n={n}, extra={extra}, frac={frac}, seed={seed}"
            )];
            return Ok(Generated {
                graph: g,
                u: None,
                part_a: None,
                part_b: None,
                comment,
            });
        }
    }
    Err(Error::RetriesExhausted)
}

/// Seeded random undirected bipartite bridgeless graph: the cycle
/// 0-1-...-(n-1)-0 for even `n`, plus `extra` parity-crossing chords. The
/// base is a vertex of maximum degree; its parity class is part B.
pub fn gen_random_bipartite(n: usize, extra: usize, seed: u64) -> Result<Generated> {
    if n < 4 || n % 2 != 0 {
        return Err(Error::BadParam(format!(
            "random bipartite graph needs even n >= 4, got {n}"
        )));
    }
    let max_extra = (n / 2) * (n / 2) - n;
    if extra > max_extra {
        return Err(Error::BadParam(format!(
            "at most {max_extra} crossing chords fit on {n} vertices, asked for {extra}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = MixedGraph::new(n);
    und_cycle_on(&mut g, 0..n)?;
    let mut rest: Vec<(VertexId, VertexId)> = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            let adjacent = b == a + 1 || (a == 0 && b == n - 1);
            if (a + b) % 2 == 1 && !adjacent {
                rest.push((a, b));
            }
        }
    }
    rest.shuffle(&mut rng);
    for (a, b) in rest.into_iter().take(extra) {
        g.add_undirected(a, b)?;
    }
    let (_, argmax) = g.max_undirected()?;
    let u = argmax[0];
    let part_a: BTreeSet<VertexId> = (0..n).filter(|v| v % 2 != u % 2).collect();
    let part_b: BTreeSet<VertexId> = (0..n).filter(|v| v % 2 == u % 2).collect();
    let comment = vec![
        format!("random bipartite graph, n={n}, extra={extra}, seed={seed}"),
        format!("base u={u}, part B = ids with the base's parity"),
    ];
    let gen = Generated {
        graph: g,
        u: Some(u),
        part_a: Some(part_a),
        part_b: Some(part_b),
        comment,
    };
    validate(&gen, None)?;
    Ok(gen)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn degree_triple(gen: &Generated) -> (usize, usize, usize) {
        let u = gen.u.expect("base vertex");
        let d = gen.graph.degrees(u).unwrap();
        (d.d_und, d.d_out, d.d_in)
    }

    #[test]
    fn chorded_cycle_peaks_at_the_chord_ends() {
        let gen = gen_ohat(7).unwrap();
        assert_eq!(gen.graph.edge_count(), 8);
        assert_eq!(gen.graph.max_undirected().unwrap(), (3, vec![1, 6]));
        assert!(gen_ohat(4).is_err());
    }

    #[test]
    fn pendant_pair_family_has_base_degree_four() {
        let gen = gen_s0n4(8).unwrap();
        assert_eq!(gen.u, Some(0));
        assert_eq!(degree_triple(&gen), (4, 0, 0));
    }

    #[test]
    fn bipartite_chain_shape() {
        let gen = gen_rdelta(12, 4).unwrap();
        assert_eq!(gen.u, Some(9));
        assert_eq!(degree_triple(&gen), (4, 0, 0));
        assert_eq!(gen.part_a.as_ref().unwrap().len(), 6);
        assert_eq!(gen.part_b.as_ref().unwrap().len(), 6);
        assert!(gen_rdelta(11, 4).is_err());
        assert!(gen_rdelta(8, 4).is_err());
    }

    #[test]
    fn arc_free_family_degrees() {
        for (n, d) in [(7, 2), (7, 3), (8, 4), (9, 5), (9, 6), (11, 7), (12, 8)] {
            let gen = gen_g_family(n, d).unwrap();
            assert_eq!(degree_triple(&gen), (d, 0, 0), "target ({n}, {d})");
        }
        assert!(matches!(gen_g_family(12, 9), Err(Error::BadParam(_))));
        assert!(matches!(gen_g_family(7, 7), Err(Error::BadParam(_))));
    }

    #[test]
    fn one_out_arc_family_degrees() {
        for (n, d) in [(5, 1), (6, 2), (7, 3), (9, 4), (8, 5), (8, 6), (12, 8), (12, 9)] {
            let gen = gen_f_family(n, d).unwrap();
            assert_eq!(degree_triple(&gen), (d, 1, 0), "target ({n}, {d})");
        }
        assert!(matches!(
            gen_f_family(9, 7),
            Err(Error::UnsupportedFigureOnly { delta_star: 7, .. })
        ));
        assert!(matches!(gen_f_family(12, 10), Err(Error::BadParam(_))));
    }

    #[test]
    fn arcs_both_ways_family_degrees() {
        assert_eq!(degree_triple(&gen_m_family(6, 0).unwrap()), (0, 1, 1));
        assert_eq!(degree_triple(&gen_m_family(6, 2).unwrap()), (2, 0, 1));
        assert_eq!(degree_triple(&gen_m_family(12, 3).unwrap()), (3, 2, 0));
        for (n, d) in [(12, 4), (12, 6), (12, 7), (12, 9)] {
            let gen = gen_m_family(n, d).unwrap();
            assert_eq!(degree_triple(&gen), (d, 1, 1), "target ({n}, {d})");
        }
        assert!(matches!(
            gen_m_family(9, 5),
            Err(Error::UnsupportedFigureOnly { delta_star: 5, .. })
        ));
        assert!(matches!(gen_m_family(12, 8), Err(Error::BadParam(_))));
        assert!(matches!(gen_m_family(12, 1), Err(Error::BadParam(_))));
    }

    #[test]
    fn mixed_bipartite_family_degrees() {
        let five = gen_r_mixed(18, 5).unwrap();
        assert_eq!(degree_triple(&five), (5, 1, 1));
        let six = gen_r_mixed(20, 6).unwrap();
        assert_eq!(degree_triple(&six), (6, 1, 1));
        let seven = gen_r_mixed(22, 7).unwrap();
        assert_eq!(degree_triple(&seven), (7, 1, 1));
        assert_eq!(six.part_a.as_ref().unwrap().len(), 10);
        assert!(gen_r_mixed(19, 6).is_err());
        assert!(gen_r_mixed(18, 6).is_err());
    }

    #[test]
    fn random_graphs_are_reproducible() {
        let a = gen_random_bridgeless(8, 3, 0.5, 7).unwrap();
        let b = gen_random_bridgeless(8, 3, 0.5, 7).unwrap();
        assert_eq!(a.graph, b.graph);
        assert_eq!(a.graph.n(), 8);
        assert_eq!(a.graph.edge_count(), 11);
        assert!(reach::bridges(&a.graph).unwrap().is_empty());
    }

    #[test]
    fn random_bipartite_graphs_cross_parity() {
        let gen = gen_random_bipartite(10, 4, 1).unwrap();
        let a = gen.part_a.as_ref().unwrap();
        for rec in gen.graph.edges() {
            assert_ne!(a.contains(&rec.a), a.contains(&rec.b));
        }
        assert!(gen.part_b.as_ref().unwrap().contains(&gen.u.unwrap()));
    }
}
