//! Undirected simple graphs and vertex subsets.
//!
//! Vertices are labeled `1..=n` in all text formats and display output, and
//! `0..n` in the programmatic API. Adjacency lists are kept sorted; edges are
//! canonical `(u, v)` with `u < v`.

mod analysis;
mod generate;

pub use analysis::{
    boundary_concentration_check, cheeger_bruteforce, cheeger_sampled, edge_boundary,
    structure_report, ConcentrationReport, ExpansionReport, StructureReport,
};
pub use generate::{gen_gnp, gen_random_regular};

use crate::{Error, Result};
use std::fmt;
use std::io::{BufRead, Write};

/// Undirected simple graph on vertices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    m: usize,
}

impl Graph {
    /// Graph with no edges.
    pub fn empty(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::param("graph must have at least one vertex"));
        }
        Ok(Graph {
            adj: vec![Vec::new(); n],
            m: 0,
        })
    }

    /// Builds from a list of 0-based endpoint pairs. Self-loops, out-of-range
    /// endpoints, and duplicate edges (in either orientation) are rejected.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        let mut canon: Vec<(usize, usize)> = Vec::with_capacity(edges.len());
        for &(u, v) in edges {
            if u == v {
                return Err(Error::param(format!("self-loop at vertex {}", u + 1)));
            }
            if u >= n || v >= n {
                return Err(Error::param(format!(
                    "edge ({}, {}) out of range for n = {n}",
                    u + 1,
                    v + 1
                )));
            }
            canon.push((u.min(v), u.max(v)));
        }
        canon.sort_unstable();
        if canon.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::param("duplicate edge"));
        }
        for &(u, v) in &canon {
            g.adj[u].push(v);
            g.adj[v].push(u);
        }
        for list in &mut g.adj {
            list.sort_unstable();
        }
        g.m = canon.len();
        Ok(g)
    }

    pub fn complete(n: usize) -> Result<Self> {
        let mut edges = Vec::with_capacity(n * (n.max(1) - 1) / 2);
        for u in 0..n {
            for v in (u + 1)..n {
                edges.push((u, v));
            }
        }
        Self::from_edges(n, &edges)
    }

    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::param(format!("cycle needs n >= 3, got {n}")));
        }
        let edges: Vec<_> = (0..n).map(|u| (u, (u + 1) % n)).collect();
        Self::from_edges(n, &edges)
    }

    pub fn path(n: usize) -> Result<Self> {
        let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        Self::from_edges(n, &edges)
    }

    /// Complete bipartite graph: left part `0..l`, right part `l..l + r`.
    pub fn complete_bipartite(l: usize, r: usize) -> Result<Self> {
        if l == 0 || r == 0 {
            return Err(Error::param("both bipartition sides must be nonempty"));
        }
        let mut edges = Vec::with_capacity(l * r);
        for u in 0..l {
            for v in l..(l + r) {
                edges.push((u, v));
            }
        }
        Self::from_edges(l + r, &edges)
    }

    /// Star: one center (vertex 0) joined to `n - 1` leaves.
    pub fn star(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::param(format!("star needs n >= 2, got {n}")));
        }
        Self::complete_bipartite(1, n - 1)
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Canonical edge list: `(u, v)` with `u < v`, lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m);
        for u in 0..self.n() {
            for &v in &self.adj[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Copy of the graph with one extra edge. Errors if the edge exists or is
    /// a self-loop.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Self> {
        if u == v || u >= self.n() || v >= self.n() {
            return Err(Error::param("invalid endpoints"));
        }
        if self.has_edge(u, v) {
            return Err(Error::param("edge already present"));
        }
        let mut g = self.clone();
        let pos_v = g.adj[u].binary_search(&v).unwrap_err();
        g.adj[u].insert(pos_v, v);
        let pos_u = g.adj[v].binary_search(&u).unwrap_err();
        g.adj[v].insert(pos_u, u);
        g.m += 1;
        Ok(g)
    }

    /// Per-vertex neighborhood bitmasks; available only for `n <= 64`.
    pub fn adjacency_masks(&self) -> Option<Vec<u64>> {
        if self.n() > 64 {
            return None;
        }
        Some(
            self.adj
                .iter()
                .map(|list| list.iter().fold(0u64, |m, &v| m | (1 << v)))
                .collect(),
        )
    }

    /// Stable content fingerprint (`n`, `m`, FNV-1a of the canonical edge
    /// list), used as provenance in exported tables.
    pub fn signature(&self) -> String {
        const FNV_OFFSET: u64 = 0xcbf2_9ce4_8422_2325;
        const FNV_PRIME: u64 = 0x0000_0100_0000_01b3;
        let mut h = FNV_OFFSET;
        let mut eat = |x: u64| {
            for b in x.to_le_bytes() {
                h ^= b as u64;
                h = h.wrapping_mul(FNV_PRIME);
            }
        };
        eat(self.n() as u64);
        for (u, v) in self.edges() {
            eat(u as u64);
            eat(v as u64);
        }
        format!("n{}m{}-{:016x}", self.n(), self.m, h)
    }

    /// Writes the text edge-list format: a `n m` header line, then one
    /// `u v` line per edge with `1 <= u < v <= n`, lexicographic order.
    pub fn write_edge_list<W: Write>(&self, w: &mut W) -> Result<()> {
        writeln!(w, "{} {}", self.n(), self.m)?;
        for (u, v) in self.edges() {
            writeln!(w, "{} {}", u + 1, v + 1)?;
        }
        Ok(())
    }

    /// Parses the text edge-list format written by [`Graph::write_edge_list`].
    /// Rejects bad headers, vertex labels outside `1..=n`, self-loops,
    /// duplicate edges, and edge-count mismatches.
    pub fn read_edge_list<R: BufRead>(r: R) -> Result<Self> {
        let mut lines = r.lines();
        let header = lines
            .next()
            .ok_or_else(|| Error::EdgeList("empty input".into()))??;
        let mut it = header.split_whitespace();
        let n: usize = parse_field(it.next(), "vertex count")?;
        let m: usize = parse_field(it.next(), "edge count")?;
        if it.next().is_some() {
            return Err(Error::EdgeList("header must be exactly `n m`".into()));
        }
        if n == 0 {
            return Err(Error::EdgeList("vertex count must be at least 1".into()));
        }
        let mut edges = Vec::with_capacity(m);
        for line in lines {
            let line = line?;
            if line.trim().is_empty() {
                continue;
            }
            let mut it = line.split_whitespace();
            let u: usize = parse_field(it.next(), "edge endpoint")?;
            let v: usize = parse_field(it.next(), "edge endpoint")?;
            if it.next().is_some() {
                return Err(Error::EdgeList(format!(
                    "edge line `{line}` has extra fields"
                )));
            }
            if u == 0 || v == 0 || u > n || v > n {
                return Err(Error::EdgeList(format!(
                    "edge ({u}, {v}) outside vertex range 1..={n}"
                )));
            }
            if u == v {
                return Err(Error::EdgeList(format!("self-loop at vertex {u}")));
            }
            edges.push((u - 1, v - 1));
        }
        if edges.len() != m {
            return Err(Error::EdgeList(format!(
                "header promises {m} edges, found {}",
                edges.len()
            )));
        }
        Graph::from_edges(n, &edges).map_err(|e| Error::EdgeList(e.to_string()))
    }
}

fn parse_field(tok: Option<&str>, what: &str) -> Result<usize> {
    tok.ok_or_else(|| Error::EdgeList(format!("missing {what}")))?
        .parse()
        .map_err(|_| Error::EdgeList(format!("unparseable {what}")))
}

/// Canonical vertex subset: sorted, deduplicated 0-based vertex ids.
///
/// Subsets of graphs with `n <= 64` convert losslessly to bitmasks
/// (bit `k` = vertex `k`, i.e. external label `k + 1`).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    /// Canonicalizes (sorts and deduplicates) the given members.
    pub fn new(mut members: Vec<usize>) -> Self {
        members.sort_unstable();
        members.dedup();
        VertexSet(members)
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(vec![v])
    }

    pub fn full(n: usize) -> Self {
        VertexSet((0..n).collect())
    }

    pub fn from_mask(mask: u64) -> Self {
        VertexSet((0..64).filter(|&b| mask >> b & 1 == 1).collect())
    }

    /// Bitmask encoding; `None` if any member is >= 64.
    pub fn mask(&self) -> Option<u64> {
        if self.0.last().is_some_and(|&v| v >= 64) {
            return None;
        }
        Some(self.0.iter().fold(0u64, |m, &v| m | (1 << v)))
    }

    pub fn members(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn complement(&self, n: usize) -> Self {
        VertexSet((0..n).filter(|&v| !self.contains(v)).collect())
    }

    pub fn with_vertex(&self, v: usize) -> Self {
        let mut members = self.0.clone();
        if let Err(pos) = members.binary_search(&v) {
            members.insert(pos, v);
        }
        VertexSet(members)
    }
}

impl fmt::Display for VertexSet {
    /// External 1-based labels, e.g. `{1,3,4}`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", v + 1)?;
        }
        write!(f, "}}")
    }
}

/// Named small graphs used by the cross-validation suites: completes, empty
/// graphs, paths, cycles, stars, and complete bipartite splits up to `max_n`
/// vertices.
pub fn reference_corpus(max_n: usize) -> Vec<(String, Graph)> {
    let mut out = Vec::new();
    for n in 2..=max_n {
        out.push((format!("complete_{n}"), Graph::complete(n).unwrap()));
        out.push((format!("empty_{n}"), Graph::empty(n).unwrap()));
        if n >= 3 {
            out.push((format!("path_{n}"), Graph::path(n).unwrap()));
            out.push((format!("star_{n}"), Graph::star(n).unwrap()));
        }
        if n >= 4 {
            out.push((format!("cycle_{n}"), Graph::cycle(n).unwrap()));
        }
        for l in 2..=(n / 2) {
            let r = n - l;
            out.push((
                format!("bipartite_{l}_{r}"),
                Graph::complete_bipartite(l, r).unwrap(),
            ));
        }
    }
    out
}
