//! Simple undirected graphs with bitset adjacency, plus graph6 and DOT I/O.

use std::collections::VecDeque;
use std::fmt::Write as _;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// A finite simple graph on `0..n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<FixedBitSet>,
    nbrs: Vec<Vec<u32>>,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![FixedBitSet::with_capacity(n); n],
            nbrs: vec![Vec::new(); n],
        }
    }

    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Adds `{u, v}`; loops are rejected, repeated edges ignored.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let n = self.order();
        if u >= n {
            return Err(Error::VertexOutOfRange(u));
        }
        if v >= n {
            return Err(Error::VertexOutOfRange(v));
        }
        if u == v {
            return Err(Error::InvalidConnectionSet(format!("loop at vertex {u}")));
        }
        if !self.adj[u].contains(v) {
            self.adj[u].insert(v);
            self.adj[v].insert(u);
            self.nbrs[u].push(v as u32);
            self.nbrs[v].push(u as u32);
        }
        Ok(())
    }

    /// Sorts adjacency lists so that iteration order depends only on the
    /// edge set.
    pub(crate) fn normalize(mut self) -> Self {
        for list in &mut self.nbrs {
            list.sort_unstable();
        }
        self
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.nbrs.iter().map(Vec::len).sum::<usize>() / 2
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &[u32] {
        &self.nbrs[v]
    }

    pub fn adjacency_row(&self, v: usize) -> &FixedBitSet {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.nbrs[v].len()
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.nbrs.iter().enumerate().flat_map(|(u, list)| {
            list.iter()
                .map(move |&v| (u, v as usize))
                .filter(|&(u, v)| u < v)
        })
    }

    pub fn cycle(n: usize) -> Self {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
            .expect("cycle needs n >= 3")
            .normalize()
    }

    pub fn path(n: usize) -> Self {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))
            .expect("valid path")
            .normalize()
    }

    pub fn complete(n: usize) -> Self {
        Graph::from_edges(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))))
            .expect("valid complete graph")
            .normalize()
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        Graph::from_edges(a + b, (0..a).flat_map(|i| (a..a + b).map(move |j| (i, j))))
            .expect("valid complete bipartite graph")
            .normalize()
    }

    /// The star `K_{1,k}` with centre 0.
    pub fn star(k: usize) -> Self {
        Graph::complete_bipartite(1, k)
    }

    pub fn petersen() -> Self {
        let outer = (0..5).map(|i| (i, (i + 1) % 5));
        let spokes = (0..5).map(|i| (i, i + 5));
        let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
        Graph::from_edges(10, outer.chain(spokes).chain(inner))
            .expect("valid Petersen graph")
            .normalize()
    }

    /// Whether `p` maps every edge to an edge (and hence, being a bijection
    /// on a finite edge set, every non-edge to a non-edge).
    pub fn is_automorphism(&self, p: &Permutation) -> bool {
        p.degree() == self.order()
            && self
                .edges()
                .all(|(u, v)| self.has_edge(p.apply(u), p.apply(v)))
    }

    /// Whether `p` maps this graph onto `other`.
    pub fn is_isomorphism_to(&self, other: &Graph, p: &Permutation) -> bool {
        p.degree() == self.order()
            && self.order() == other.order()
            && self.edge_count() == other.edge_count()
            && self
                .edges()
                .all(|(u, v)| other.has_edge(p.apply(u), p.apply(v)))
    }

    /// Connected components, each sorted, ordered by least vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.order();
        let mut comp = vec![usize::MAX; n];
        let mut out = Vec::new();
        for s in 0..n {
            if comp[s] != usize::MAX {
                continue;
            }
            let id = out.len();
            comp[s] = id;
            let mut members = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &w in self.neighbors(u) {
                    let w = w as usize;
                    if comp[w] == usize::MAX {
                        comp[w] = id;
                        members.push(w);
                        queue.push_back(w);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.order() <= 1 || self.components().len() == 1
    }

    /// BFS distances from `v`, `usize::MAX` for unreachable vertices.
    pub fn distances_from(&self, v: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.order()];
        dist[v] = 0;
        let mut queue = VecDeque::from([v]);
        while let Some(u) = queue.pop_front() {
            for &w in self.neighbors(u) {
                let w = w as usize;
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Length of a shortest cycle, `None` for forests.
    pub fn girth(&self) -> Option<usize> {
        let n = self.order();
        let mut best: Option<usize> = None;
        for s in 0..n {
            let mut dist = vec![usize::MAX; n];
            let mut parent = vec![usize::MAX; n];
            dist[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &w in self.neighbors(u) {
                    let w = w as usize;
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        queue.push_back(w);
                    } else if parent[u] != w {
                        let len = dist[u] + dist[w] + 1;
                        best = Some(best.map_or(len, |b| b.min(len)));
                    }
                }
            }
        }
        best
    }

    /// The subgraph induced on `vertices`, relabelled `0..k` in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut local = vec![usize::MAX; self.order()];
        for (i, &v) in vertices.iter().enumerate() {
            local[v] = i;
        }
        let mut g = Graph::empty(vertices.len());
        for (i, &v) in vertices.iter().enumerate() {
            for &w in self.neighbors(v) {
                let j = local[w as usize];
                if j != usize::MAX && i < j {
                    g.add_edge(i, j).expect("in range");
                }
            }
        }
        g.normalize()
    }

    /// graph6 encoding (no `>>graph6<<` header).
    pub fn to_graph6(&self) -> String {
        let n = self.order();
        let mut out = String::new();
        let mut bytes: Vec<u8> = Vec::new();
        if n <= 62 {
            bytes.push(n as u8 + 63);
        } else if n <= 258_047 {
            bytes.push(126);
            for shift in [12, 6, 0] {
                bytes.push(((n >> shift) & 63) as u8 + 63);
            }
        } else {
            bytes.push(126);
            bytes.push(126);
            for shift in [30, 24, 18, 12, 6, 0] {
                bytes.push(((n >> shift) & 63) as u8 + 63);
            }
        }
        let mut acc = 0u8;
        let mut nbits = 0;
        for j in 1..n {
            for i in 0..j {
                acc = (acc << 1) | u8::from(self.has_edge(i, j));
                nbits += 1;
                if nbits == 6 {
                    bytes.push(acc + 63);
                    acc = 0;
                    nbits = 0;
                }
            }
        }
        if nbits > 0 {
            bytes.push((acc << (6 - nbits)) + 63);
        }
        for b in bytes {
            out.push(b as char);
        }
        out
    }

    pub fn from_graph6(text: &str) -> Result<Graph> {
        let text = text.trim();
        let text = text.strip_prefix(">>graph6<<").unwrap_or(text);
        let bytes = text.as_bytes();
        if bytes.iter().any(|&b| !(63..=126).contains(&b)) {
            return Err(Error::Graph6(format!("byte outside 63..=126 in `{text}`")));
        }
        let val = |b: u8| (b - 63) as usize;
        let (n, mut pos) = match bytes {
            [] => return Err(Error::Graph6("empty input".into())),
            [126, 126, rest @ ..] => {
                if rest.len() < 6 {
                    return Err(Error::Graph6("truncated size".into()));
                }
                (rest[..6].iter().fold(0, |acc, &b| (acc << 6) | val(b)), 8)
            }
            [126, rest @ ..] => {
                if rest.len() < 3 {
                    return Err(Error::Graph6("truncated size".into()));
                }
                (rest[..3].iter().fold(0, |acc, &b| (acc << 6) | val(b)), 4)
            }
            [b, ..] => (val(*b), 1),
        };
        let needed_bits = n * n.saturating_sub(1) / 2;
        let needed_bytes = needed_bits.div_ceil(6);
        if bytes.len() != pos + needed_bytes {
            return Err(Error::Graph6(format!(
                "expected {} data bytes for {n} vertices, found {}",
                needed_bytes,
                bytes.len().saturating_sub(pos)
            )));
        }
        let mut g = Graph::empty(n);
        let mut bit = 0;
        let mut cur = 0usize;
        for j in 1..n {
            for i in 0..j {
                if bit == 0 {
                    cur = val(bytes[pos]);
                    pos += 1;
                    bit = 6;
                }
                bit -= 1;
                if (cur >> bit) & 1 == 1 {
                    g.add_edge(i, j)?;
                }
            }
        }
        Ok(g.normalize())
    }

    /// DOT text; `color(v)` picks each vertex's fill colour.
    pub fn to_dot(
        &self,
        label: impl Fn(usize) -> String,
        color: impl Fn(usize) -> &'static str,
    ) -> String {
        let mut out = String::from("graph G {\n  node [style=filled];\n");
        for v in 0..self.order() {
            let _ = writeln!(
                out,
                "  {v} [label=\"{}\", fillcolor=\"{}\"];",
                label(v),
                color(v)
            );
        }
        for (u, v) in self.edges() {
            let _ = writeln!(out, "  {u} -- {v};");
        }
        out.push_str("}\n");
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graph6_known_encodings() {
        // K3 is "Bw", P4 (path 0-1-2-3) is "Ch"
        assert_eq!(Graph::complete(3).to_graph6(), "Bw");
        assert_eq!(Graph::path(4).to_graph6(), "Ch");
        assert_eq!(Graph::from_graph6("Bw").unwrap(), Graph::complete(3));
        assert_eq!(Graph::petersen().to_graph6(), "IheA@GUAo");
    }

    #[test]
    fn graph6_long_form() {
        let g = Graph::cycle(70);
        let text = g.to_graph6();
        assert!(text.starts_with('~'));
        assert_eq!(Graph::from_graph6(&text).unwrap(), g);
    }

    #[test]
    fn graph6_rejects_bad_input() {
        assert!(Graph::from_graph6("").is_err());
        assert!(Graph::from_graph6("C").is_err());
        assert!(Graph::from_graph6("B\n").is_err());
    }

    #[test]
    fn girth_of_standard_graphs() {
        assert_eq!(Graph::petersen().girth(), Some(5));
        assert_eq!(Graph::cycle(7).girth(), Some(7));
        assert_eq!(Graph::path(5).girth(), None);
        assert_eq!(Graph::complete_bipartite(3, 3).girth(), Some(4));
    }

    #[test]
    fn loops_rejected() {
        let mut g = Graph::empty(3);
        assert!(g.add_edge(1, 1).is_err());
        assert!(g.add_edge(1, 3).is_err());
    }
}
