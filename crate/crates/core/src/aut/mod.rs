//! Graph automorphism groups and isomorphism testing by partition
//! refinement with individualization.

mod oracle;
mod partition;

pub use oracle::{oracle_automorphisms, ORACLE_MAX_VERTICES};
pub use partition::{refine, ColoredPartition, Trace};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::perm::Permutation;
use crate::permgroup::PermGroup;

pub const DEFAULT_NODE_BUDGET: u64 = 10_000_000;
pub const ISOMORPHISM_MAX_VERTICES: usize = 512;

/// Output of an automorphism search.
#[derive(Clone, Debug)]
pub struct AutSearch {
    pub group: PermGroup,
    pub generators: Vec<Permutation>,
    pub nodes: u64,
}

struct Level {
    partition: ColoredPartition,
    target: std::ops::Range<usize>,
    chosen: usize,
    child_trace: Trace,
    child_cells: usize,
}

struct Search<'a> {
    source: &'a Graph,
    target: &'a Graph,
    levels: Vec<Level>,
    first_leaf: Vec<u32>,
    nodes: u64,
    budget: u64,
}

impl<'a> Search<'a> {
    fn first_path(
        source: &'a Graph,
        target: &'a Graph,
        root: ColoredPartition,
        budget: u64,
    ) -> Self {
        let mut levels = Vec::new();
        let mut node = root;
        while let Some(t) = node.target_cell() {
            let v = node.order()[t.start] as usize;
            let mut child = node.clone();
            let s = child.individualize(v);
            let tr = child.refine(source, &[s]);
            levels.push(Level {
                child_cells: child.cell_count(),
                partition: node,
                target: t,
                chosen: v,
                child_trace: tr,
            });
            node = child;
        }
        Search {
            source,
            target,
            levels,
            first_leaf: node.order().to_vec(),
            nodes: 0,
            budget,
        }
    }

    fn tick(&mut self) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::NodeBudgetExceeded(self.budget));
        }
        Ok(())
    }

    /// Child of `node` after individualizing `u`, if it matches the first
    /// path's child at `depth`.
    fn child(
        &mut self,
        node: &ColoredPartition,
        u: usize,
        depth: usize,
    ) -> Result<Option<ColoredPartition>> {
        self.tick()?;
        let mut child = node.clone();
        let s = child.individualize(u);
        let tr = child.refine(self.target, &[s]);
        let lvl = &self.levels[depth];
        if tr != lvl.child_trace || child.cell_count() != lvl.child_cells {
            return Ok(None);
        }
        Ok(Some(child))
    }

    /// Searches the subtree at `node` (at `depth`) for a leaf giving an
    /// isomorphism source -> target.
    fn explore(&mut self, node: ColoredPartition, depth: usize) -> Result<Option<Permutation>> {
        if node.is_discrete() {
            let mut images = vec![0u32; node.len()];
            for (i, &v) in self.first_leaf.iter().enumerate() {
                images[v as usize] = node.order()[i];
            }
            let gamma = Permutation::from_images_unchecked(images);
            return Ok(self
                .source
                .is_isomorphism_to(self.target, &gamma)
                .then_some(gamma));
        }
        if depth >= self.levels.len() {
            return Ok(None);
        }
        let t = match node.target_cell() {
            Some(t) if t == self.levels[depth].target => t,
            _ => return Ok(None),
        };
        for i in t {
            let u = node.order()[i] as usize;
            if let Some(child) = self.child(&node, u, depth)? {
                if let Some(g) = self.explore(child, depth + 1)? {
                    return Ok(Some(g));
                }
            }
        }
        Ok(None)
    }
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

    fn union_perm(&mut self, p: &Permutation) {
        for x in 0..p.degree() {
            let (a, b) = (self.find(x), self.find(p.apply(x)));
            if a != b {
                self.0[a.max(b)] = a.min(b);
            }
        }
    }
}

/// Automorphism group of `graph` with the default node budget.
pub fn automorphism_group(graph: &Graph) -> Result<PermGroup> {
    Ok(automorphism_search(graph, None, DEFAULT_NODE_BUDGET)?.group)
}

/// Automorphism group of `graph`, optionally restricted to colour-preserving
/// maps. Errors with `NodeBudgetExceeded` once `budget` search nodes are used.
pub fn automorphism_search(
    graph: &Graph,
    colors: Option<&[u32]>,
    budget: u64,
) -> Result<AutSearch> {
    let n = graph.order();
    if let Some(c) = colors {
        if c.len() != n {
            return Err(Error::DegreeMismatch {
                left: n,
                right: c.len(),
            });
        }
    }
    let mut root = match colors {
        Some(c) => ColoredPartition::from_colors(c),
        None => ColoredPartition::unit(n),
    };
    root.refine_all(graph);
    let mut search = Search::first_path(graph, graph, root, budget);
    let mut gens: Vec<Permutation> = Vec::new();
    for k in (0..search.levels.len()).rev() {
        let mut uf = UnionFind::new(n);
        for g in &gens {
            uf.union_perm(g);
        }
        let node = search.levels[k].partition.clone();
        let chosen = search.levels[k].chosen;
        let mut tested = vec![chosen];
        for i in search.levels[k].target.clone() {
            let w = node.order()[i] as usize;
            let rw = uf.find(w);
            if tested.iter().any(|&t| uf.find(t) == rw) {
                continue;
            }
            tested.push(w);
            if let Some(child) = search.child(&node, w, k)? {
                if let Some(g) = search.explore(child, k + 1)? {
                    uf.union_perm(&g);
                    gens.push(g);
                }
            }
        }
    }
    let group = PermGroup::from_generators(n, &gens)?;
    Ok(AutSearch {
        group,
        generators: gens,
        nodes: search.nodes,
    })
}

/// An isomorphism `a -> b` (as a vertex map) if one exists.
pub fn find_isomorphism(a: &Graph, b: &Graph) -> Result<Option<Permutation>> {
    let n = a.order();
    if n > ISOMORPHISM_MAX_VERTICES || b.order() > ISOMORPHISM_MAX_VERTICES {
        return Err(Error::ScaleExceeded(format!(
            "isomorphism test supports at most {ISOMORPHISM_MAX_VERTICES} vertices"
        )));
    }
    if n != b.order() || a.edge_count() != b.edge_count() {
        return Ok(None);
    }
    let mut da: Vec<usize> = (0..n).map(|v| a.degree(v)).collect();
    let mut db: Vec<usize> = (0..n).map(|v| b.degree(v)).collect();
    da.sort_unstable();
    db.sort_unstable();
    if da != db {
        return Ok(None);
    }
    let mut ra = ColoredPartition::unit(n);
    let mut rb = ColoredPartition::unit(n);
    if ra.refine_all(a) != rb.refine_all(b) || ra.cell_starts() != rb.cell_starts() {
        return Ok(None);
    }
    let mut search = Search::first_path(a, b, ra, DEFAULT_NODE_BUDGET);
    search.explore(rb, 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigUint;

    fn order(g: &Graph) -> BigUint {
        automorphism_group(g).unwrap().order()
    }

    #[test]
    fn small_graph_orders() {
        assert_eq!(order(&Graph::cycle(7)), BigUint::from(14u32));
        assert_eq!(order(&Graph::petersen()), BigUint::from(120u32));
        assert_eq!(order(&Graph::complete(5)), BigUint::from(120u32));
        assert_eq!(
            order(&Graph::complete_bipartite(3, 3)),
            BigUint::from(72u32)
        );
        assert_eq!(order(&Graph::path(4)), BigUint::from(2u32));
        assert_eq!(order(&Graph::empty(4)), BigUint::from(24u32));
    }

    #[test]
    fn large_complete_bipartite() {
        // 2 * 8!^2
        let expected = BigUint::from(2u32) * BigUint::from(40320u32) * BigUint::from(40320u32);
        assert_eq!(order(&Graph::complete_bipartite(8, 8)), expected);
    }

    #[test]
    fn colours_restrict_group() {
        let g = Graph::cycle(4);
        let s = automorphism_search(&g, Some(&[0, 1, 0, 1]), DEFAULT_NODE_BUDGET).unwrap();
        assert_eq!(s.group.order(), BigUint::from(4u32));
    }

    #[test]
    fn budget_is_enforced() {
        let err = automorphism_search(&Graph::petersen(), None, 1).unwrap_err();
        assert_eq!(err, Error::NodeBudgetExceeded(1));
    }

    #[test]
    fn isomorphism_found_and_rejected() {
        let c6 = Graph::cycle(6);
        let relabel =
            Graph::from_edges(6, [(0, 3), (3, 1), (1, 4), (4, 2), (2, 5), (5, 0)]).unwrap();
        let iso = find_isomorphism(&c6, &relabel).unwrap().unwrap();
        assert!(c6.is_isomorphism_to(&relabel, &iso));
        let two_triangles =
            Graph::from_edges(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
        assert!(find_isomorphism(&c6, &two_triangles).unwrap().is_none());
    }
}
