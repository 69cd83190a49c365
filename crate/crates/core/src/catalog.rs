//! Small test catalogs: connected simple graphs up to isomorphism and
//! low-corank uniform matroids.

use std::collections::BTreeSet;

use crate::error::Result;
use crate::graph::Graph;
use crate::matroid::{uniform_matroid, Matroid};

/// Position of edge `(a, b)`, `a < b`, in the lexicographic list of pairs
/// of `0..v`.
fn pair_index(v: usize, a: usize, b: usize) -> usize {
    a * v - a * (a + 1) / 2 + (b - a - 1)
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut perm: Vec<usize> = (0..n).collect();
    fn rec(k: usize, perm: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k == perm.len() {
            out.push(perm.clone());
            return;
        }
        for i in k..perm.len() {
            perm.swap(k, i);
            rec(k + 1, perm, out);
            perm.swap(k, i);
        }
    }
    rec(0, &mut perm, &mut out);
    out
}

fn connected(v: usize, pairs: &[(usize, usize)], mask: u32) -> bool {
    let mut reached = 1u32;
    loop {
        let before = reached;
        for (i, &(a, b)) in pairs.iter().enumerate() {
            if mask >> i & 1 == 1 && (reached >> a & 1 == 1 || reached >> b & 1 == 1) {
                reached |= 1 << a | 1 << b;
            }
        }
        if reached == before {
            return reached == (1u32 << v) - 1;
        }
    }
}

/// One representative per isomorphism class of connected simple graphs on
/// `2..=max_vertices` vertices with at most `max_edges` edges. The
/// representative is the one whose edge mask is smallest; edges are listed
/// lexicographically. Ordered by vertex count, then edge count, then mask.
pub fn connected_graphs(max_vertices: usize, max_edges: usize) -> Vec<Graph> {
    let mut out = Vec::new();
    for v in 2..=max_vertices {
        let pairs: Vec<(usize, usize)> = (0..v)
            .flat_map(|a| (a + 1..v).map(move |b| (a, b)))
            .collect();
        // image of each pair index under each vertex permutation
        let tables: Vec<Vec<u32>> = permutations(v)
            .iter()
            .map(|p| {
                pairs
                    .iter()
                    .map(|&(a, b)| 1u32 << pair_index(v, p[a].min(p[b]), p[a].max(p[b])))
                    .collect()
            })
            .collect();
        let mut classes = BTreeSet::new();
        for mask in 0u32..1 << pairs.len() {
            let e = mask.count_ones() as usize;
            if e + 1 < v || e > max_edges || !connected(v, &pairs, mask) {
                continue;
            }
            let canonical = tables
                .iter()
                .map(|table| {
                    let mut image = 0u32;
                    let mut rest = mask;
                    while rest != 0 {
                        image |= table[rest.trailing_zeros() as usize];
                        rest &= rest - 1;
                    }
                    image
                })
                .min()
                .expect("at least one permutation");
            classes.insert((e, canonical));
        }
        for (_, mask) in classes {
            let edges = pairs
                .iter()
                .enumerate()
                .filter(|&(i, _)| mask >> i & 1 == 1)
                .map(|(_, &p)| p)
                .collect();
            out.push(Graph::new(v, edges).expect("catalog edges are in range"));
        }
    }
    out
}

/// `U` of corank `1..=max_corank`, rank at least 2, on at most
/// `max_ground` elements, as `(corank, rank, matroid)`.
pub fn uniform_catalog(
    max_corank: usize,
    max_ground: usize,
) -> Result<Vec<(usize, usize, Matroid)>> {
    let mut out = Vec::new();
    for corank in 1..=max_corank {
        for rank in 2..=max_ground.saturating_sub(corank) {
            out.push((corank, rank, uniform_matroid(corank, rank)?));
        }
    }
    Ok(out)
}

/// A named catalog matroid.
#[derive(Clone, Debug)]
pub struct Entry {
    pub name: String,
    pub matroid: Matroid,
}

/// Graphic matroids of the connected simple graphs with at most 6 vertices
/// and 8 edges, followed by the uniform matroids of corank 1 and 2 on at
/// most 8 elements.
pub fn standard_catalog() -> Result<Vec<Entry>> {
    let mut out = Vec::new();
    for g in connected_graphs(6, 8) {
        let name = format!("graph:{}:{:?}", g.vertex_count(), g.edges());
        out.push(Entry {
            name,
            matroid: g.graphic_matroid()?,
        });
    }
    for (corank, rank, m) in uniform_catalog(2, 8)? {
        out.push(Entry {
            name: format!("uniform:{corank},{rank}"),
            matroid: m,
        });
    }
    Ok(out)
}
