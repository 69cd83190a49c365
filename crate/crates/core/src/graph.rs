//! Undirected multigraphs, their graphic matroids, and the graph families
//! with closed-form Kazhdan-Lusztig polynomials.
//!
//! Edge order is the ground-set labeling of the graphic matroid, so every
//! family constructor fixes it:
//!
//! * `cycle:n`: vertices `0..n`, edges `(i, i+1 mod n)` in order; `cycle:2`
//!   is a single edge.
//! * `doublecycle:m,n`: parallel connection of `cycle:m` and `cycle:n` at
//!   their edge 0; the `m`-cycle edges come first.
//! * `saw:n,r`: an `n`-cycle (`n = 2` gives two parallel edges) followed by
//!   `r` triangles, triangle `i` attached at cycle edge `i` through a new
//!   apex vertex `n + i`.
//! * `fan:n`: hub `0`, rim `1..=n`; spokes `(0, i)` first, then rim path.
//! * `fanpartial:n,r`: `fan:n` without spokes `(0, n-r) .. (0, n-1)`.
//! * `thagomizer:n`: hubs `0, 1`, leaves `2..n+2`; edge 0 is the hub edge
//!   `(0, 1)`, then `(0, leaf), (1, leaf)` per leaf.
//! * `kbipartite:a,b`, `complete:n`, `path:n`: lexicographic edge order.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use crate::bitset::{ElementSet, MAX_ELEMENTS};
use crate::error::{Error, Result};
use crate::matroid::Matroid;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.0[x] != x {
            self.0[x] = self.0[self.0[x]];
            x = self.0[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.0[ra] = rb;
        true
    }
}

impl Graph {
    pub fn new(vertex_count: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        for &(a, b) in &edges {
            for v in [a, b] {
                if v >= vertex_count {
                    return Err(Error::InvalidVertex {
                        vertex: v,
                        vertices: vertex_count,
                    });
                }
            }
        }
        Ok(Graph {
            vertex_count,
            edges,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    fn check_edge(&self, e: usize) -> Result<(usize, usize)> {
        self.edges.get(e).copied().ok_or(Error::InvalidEdge(e))
    }

    /// Number of connected components of `(V, S)`.
    pub fn components_of(&self, s: ElementSet) -> usize {
        let mut uf = UnionFind::new(self.vertex_count);
        let merged = s
            .iter()
            .filter(|&e| {
                let (a, b) = self.edges[e];
                uf.union(a, b)
            })
            .count();
        self.vertex_count - merged
    }

    /// `|V| - #components(V, S)`.
    pub fn rank_of_edges(&self, s: ElementSet) -> usize {
        self.vertex_count - self.components_of(s)
    }

    pub fn is_connected(&self) -> bool {
        self.vertex_count <= 1 || self.components_of(ElementSet::full(self.edges.len())) == 1
    }

    /// Edges whose endpoints are joined by a path inside `s`.
    pub fn edge_closure(&self, s: ElementSet) -> ElementSet {
        let mut uf = UnionFind::new(self.vertex_count);
        for e in s.iter() {
            let (a, b) = self.edges[e];
            uf.union(a, b);
        }
        let mut out = ElementSet::EMPTY;
        for (i, &(a, b)) in self.edges.iter().enumerate() {
            if uf.find(a) == uf.find(b) {
                out = out.with(i);
            }
        }
        out
    }

    /// All closed edge sets, including loops and parallel edges (not
    /// simplified).
    pub fn closed_edge_sets(&self) -> Result<Vec<ElementSet>> {
        let m = self.edges.len();
        if m > MAX_ELEMENTS {
            return Err(Error::SizeCap {
                size: m,
                cap: MAX_ELEMENTS,
            });
        }
        let full = ElementSet::full(m);
        let bottom = self.edge_closure(ElementSet::EMPTY);
        let mut seen: HashSet<ElementSet> = HashSet::from([bottom]);
        let mut stack = vec![bottom];
        while let Some(f) = stack.pop() {
            let mut covered = f;
            for e in full.difference(f).iter() {
                if covered.contains(e) {
                    continue;
                }
                let g = self.edge_closure(f.with(e));
                covered = covered.union(g);
                if seen.insert(g) {
                    stack.push(g);
                }
            }
        }
        Ok(seen.into_iter().collect())
    }

    /// The graphic matroid on the edge set, simplified; element labels are
    /// edge indices of `self`.
    pub fn graphic_matroid(&self) -> Result<Matroid> {
        let flats = self.closed_edge_sets()?;
        let m = self.edges.len();
        Ok(Matroid::from_trusted(m, (0..m).collect(), flats).simplify())
    }

    /// Removes edge `e`; later edges shift down by one.
    pub fn delete_edge(&self, e: usize) -> Result<Graph> {
        self.check_edge(e)?;
        let mut edges = self.edges.clone();
        edges.remove(e);
        Ok(Graph {
            vertex_count: self.vertex_count,
            edges,
        })
    }

    /// Identifies the endpoints of `e` and removes it. The higher endpoint
    /// is merged into the lower one and vertex numbers above it shift down.
    /// Edges parallel to `e` become loops.
    pub fn contract_edge(&self, e: usize) -> Result<Graph> {
        let (a, b) = self.check_edge(e)?;
        if a == b {
            return Err(Error::LoopContraction(e));
        }
        let (keep, gone) = (a.min(b), a.max(b));
        let remap = |v: usize| match v {
            v if v == gone => keep,
            v if v > gone => v - 1,
            v => v,
        };
        let edges = self
            .edges
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != e)
            .map(|(_, &(x, y))| (remap(x), remap(y)))
            .collect();
        Ok(Graph {
            vertex_count: self.vertex_count - 1,
            edges,
        })
    }

    /// Merges parallel edges and drops loops, keeping first occurrences.
    pub fn simple_edges(&self) -> Graph {
        let mut seen = HashSet::new();
        let edges = self
            .edges
            .iter()
            .filter(|&&(a, b)| a != b && seen.insert((a.min(b), a.max(b))))
            .copied()
            .collect();
        Graph {
            vertex_count: self.vertex_count,
            edges,
        }
    }
}

/// Glues `h2` onto `h1` along `e1 = (x1, y1)` and `e2 = (x2, y2)`, pairing
/// `x2` with `x1` and `y2` with `y1`. The result lists the edges of `h1`
/// followed by those of `h2` other than `e2`; the remaining vertices of
/// `h2` are appended after those of `h1`. Returns the glued graph and the
/// index of the connection edge (`e1`).
pub fn parallel_connection(h1: &Graph, e1: usize, h2: &Graph, e2: usize) -> Result<(Graph, usize)> {
    let (x1, y1) = h1.check_edge(e1)?;
    let (x2, y2) = h2.check_edge(e2)?;
    if x1 == y1 {
        return Err(Error::LoopContraction(e1));
    }
    if x2 == y2 {
        return Err(Error::LoopContraction(e2));
    }
    let mut map = vec![usize::MAX; h2.vertex_count];
    map[x2] = x1;
    map[y2] = y1;
    let mut next = h1.vertex_count;
    for slot in map.iter_mut().filter(|s| **s == usize::MAX) {
        *slot = next;
        next += 1;
    }
    let mut edges = h1.edges.clone();
    edges.extend(
        h2.edges
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != e2)
            .map(|(_, &(a, b))| (map[a], map[b])),
    );
    Ok((
        Graph {
            vertex_count: next,
            edges,
        },
        e1,
    ))
}

/// A named graph family with its parameters, e.g. `saw:3,3`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    Cycle(usize),
    DoubleCycle(usize, usize),
    Saw(usize, usize),
    Fan(usize),
    FanPartial(usize, usize),
    Thagomizer(usize),
    CompleteBipartite(usize, usize),
    Complete(usize),
    Path(usize),
}

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::Cycle(_) => "cycle",
            Family::DoubleCycle(..) => "doublecycle",
            Family::Saw(..) => "saw",
            Family::Fan(_) => "fan",
            Family::FanPartial(..) => "fanpartial",
            Family::Thagomizer(_) => "thagomizer",
            Family::CompleteBipartite(..) => "kbipartite",
            Family::Complete(_) => "complete",
            Family::Path(_) => "path",
        }
    }

    pub fn params(&self) -> Vec<usize> {
        match *self {
            Family::Cycle(n)
            | Family::Fan(n)
            | Family::Thagomizer(n)
            | Family::Complete(n)
            | Family::Path(n) => vec![n],
            Family::DoubleCycle(a, b)
            | Family::Saw(a, b)
            | Family::FanPartial(a, b)
            | Family::CompleteBipartite(a, b) => vec![a, b],
        }
    }

    /// Builds a family member from its name and parameter list.
    pub fn from_parts(name: &str, params: &[usize]) -> Result<Family> {
        let arity = |k: usize| -> Result<()> {
            if params.len() == k {
                Ok(())
            } else {
                Err(Error::Parse(format!(
                    "family {name} takes {k} parameter(s), got {}",
                    params.len()
                )))
            }
        };
        let fam = match name {
            "cycle" => arity(1).map(|_| Family::Cycle(params[0])),
            "doublecycle" => arity(2).map(|_| Family::DoubleCycle(params[0], params[1])),
            "saw" => arity(2).map(|_| Family::Saw(params[0], params[1])),
            "fan" => arity(1).map(|_| Family::Fan(params[0])),
            "fanpartial" => arity(2).map(|_| Family::FanPartial(params[0], params[1])),
            "thagomizer" => arity(1).map(|_| Family::Thagomizer(params[0])),
            "kbipartite" => arity(2).map(|_| Family::CompleteBipartite(params[0], params[1])),
            "complete" => arity(1).map(|_| Family::Complete(params[0])),
            "path" => arity(1).map(|_| Family::Path(params[0])),
            other => Err(Error::Parse(format!("unknown family {other:?}"))),
        }?;
        fam.check()?;
        Ok(fam)
    }

    fn check(&self) -> Result<()> {
        let ok = match *self {
            Family::Cycle(n) => n >= 2,
            Family::DoubleCycle(m, n) => m >= 3 && n >= 3,
            Family::Saw(n, r) => n >= 2 && r <= n,
            Family::Fan(n) => n >= 1,
            Family::FanPartial(n, r) => n >= 2 && r + 2 <= n,
            Family::Thagomizer(n) => n >= 1,
            Family::CompleteBipartite(a, b) => a >= 1 && b >= 1,
            Family::Complete(n) => n >= 1,
            Family::Path(_) => true,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::Parameter(format!("{self} is out of range")))
        }
    }

    pub fn build(&self) -> Result<Graph> {
        self.check()?;
        match *self {
            Family::Cycle(n) => Ok(cycle(n)),
            Family::DoubleCycle(m, n) => Ok(parallel_connection(&cycle(m), 0, &cycle(n), 0)?.0),
            Family::Saw(n, r) => Ok(saw(n, r)),
            Family::Fan(n) => Ok(fan_partial(n, 0)),
            Family::FanPartial(n, r) => Ok(fan_partial(n, r)),
            Family::Thagomizer(n) => Ok(thagomizer(n)),
            Family::CompleteBipartite(a, b) => Ok(complete_bipartite(a, b)),
            Family::Complete(n) => Ok(complete(n)),
            Family::Path(n) => Ok(path(n)),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let params: Vec<String> = self.params().iter().map(|p| p.to_string()).collect();
        write!(f, "{}:{}", self.name(), params.join(","))
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Family> {
        let (name, rest) = s
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("family spec {s:?} must look like name:params")))?;
        let params = rest
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad parameter {p:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Family::from_parts(name.trim(), &params)
    }
}

fn cycle(n: usize) -> Graph {
    if n == 2 {
        return Graph {
            vertex_count: 2,
            edges: vec![(0, 1)],
        };
    }
    Graph {
        vertex_count: n,
        edges: (0..n).map(|i| (i, (i + 1) % n)).collect(),
    }
}

fn saw(n: usize, r: usize) -> Graph {
    let mut edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    for i in 0..r {
        let (a, b) = edges[i];
        let apex = n + i;
        edges.push((a, apex));
        edges.push((apex, b));
    }
    Graph {
        vertex_count: n + r,
        edges,
    }
}

fn fan_partial(n: usize, r: usize) -> Graph {
    let mut edges: Vec<(usize, usize)> = (1..=n)
        .filter(|&i| i + r < n || i == n)
        .map(|i| (0, i))
        .collect();
    edges.extend((1..n).map(|i| (i, i + 1)));
    Graph {
        vertex_count: n + 1,
        edges,
    }
}

fn thagomizer(n: usize) -> Graph {
    let mut edges = vec![(0, 1)];
    for j in 0..n {
        edges.push((0, 2 + j));
        edges.push((1, 2 + j));
    }
    Graph {
        vertex_count: n + 2,
        edges,
    }
}

fn complete_bipartite(a: usize, b: usize) -> Graph {
    let edges = (0..a)
        .flat_map(|i| (0..b).map(move |j| (i, a + j)))
        .collect();
    Graph {
        vertex_count: a + b,
        edges,
    }
}

fn complete(n: usize) -> Graph {
    let edges = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    Graph {
        vertex_count: n,
        edges,
    }
}

fn path(n: usize) -> Graph {
    Graph {
        vertex_count: n + 1,
        edges: (0..n).map(|i| (i, i + 1)).collect(),
    }
}
