//! Ordered vertex partitions and equitable refinement.

use std::collections::VecDeque;

use crate::graph::Graph;

/// An ordered partition of `0..n`. Cells are contiguous ranges of `elems`
/// and are identified by their start position.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColoredPartition {
    elems: Vec<u32>,
    pos: Vec<u32>,
    cell_of: Vec<u32>,
    /// End of the cell starting at each position (meaningful at cell starts).
    cell_end: Vec<u32>,
    ncells: usize,
}

/// Fingerprint of a refinement run: a hash over every split performed,
/// recorded by cell position, neighbour counts and subcell sizes. Two
/// partitions related by an isomorphism produce equal traces.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct Trace(u64);

impl Trace {
    fn mix(&mut self, x: u64) {
        let mut h = self.0 ^ x.wrapping_mul(0x9e37_79b9_7f4a_7c15);
        h = (h ^ (h >> 29)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
        self.0 = h ^ (h >> 32);
    }
}

impl ColoredPartition {
    pub fn unit(n: usize) -> Self {
        let mut cell_end = vec![0u32; n];
        if n > 0 {
            cell_end[0] = n as u32;
        }
        ColoredPartition {
            elems: (0..n as u32).collect(),
            pos: (0..n as u32).collect(),
            cell_of: vec![0; n],
            cell_end,
            ncells: usize::from(n > 0),
        }
    }

    /// Cells ordered by colour value.
    pub fn from_colors(colors: &[u32]) -> Self {
        let n = colors.len();
        let mut elems: Vec<u32> = (0..n as u32).collect();
        elems.sort_by_key(|&v| colors[v as usize]);
        let mut p = ColoredPartition {
            pos: vec![0; n],
            cell_of: vec![0; n],
            cell_end: vec![0; n],
            ncells: 0,
            elems,
        };
        let mut start = 0;
        while start < n {
            let c = colors[p.elems[start] as usize];
            let mut end = start;
            while end < n && colors[p.elems[end] as usize] == c {
                end += 1;
            }
            p.cell_end[start] = end as u32;
            for i in start..end {
                let v = p.elems[i] as usize;
                p.pos[v] = i as u32;
                p.cell_of[v] = start as u32;
            }
            p.ncells += 1;
            start = end;
        }
        p
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn cell_count(&self) -> usize {
        self.ncells
    }

    pub fn is_discrete(&self) -> bool {
        self.ncells == self.elems.len()
    }

    /// Vertices in partition order; a bijection position -> vertex once discrete.
    pub fn order(&self) -> &[u32] {
        &self.elems
    }

    pub fn cell_index_of(&self, v: usize) -> usize {
        self.cell_of[v] as usize
    }

    pub fn cell_starts(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.ncells);
        let mut s = 0;
        while s < self.elems.len() {
            out.push(s);
            s = self.cell_end[s] as usize;
        }
        out
    }

    pub fn cells(&self) -> Vec<Vec<usize>> {
        self.cell_starts()
            .into_iter()
            .map(|s| {
                let mut c: Vec<usize> = self.elems[s..self.cell_end[s] as usize]
                    .iter()
                    .map(|&v| v as usize)
                    .collect();
                c.sort_unstable();
                c
            })
            .collect()
    }

    pub fn cell_range(&self, start: usize) -> std::ops::Range<usize> {
        start..self.cell_end[start] as usize
    }

    /// First smallest non-singleton cell, as a position range.
    pub fn target_cell(&self) -> Option<std::ops::Range<usize>> {
        let mut best: Option<std::ops::Range<usize>> = None;
        let mut s = 0;
        while s < self.elems.len() {
            let e = self.cell_end[s] as usize;
            if e - s > 1 && best.as_ref().is_none_or(|b| e - s < b.len()) {
                best = Some(s..e);
            }
            s = e;
        }
        best
    }

    /// Splits `v` off the front of its cell; returns the new singleton's start.
    pub fn individualize(&mut self, v: usize) -> usize {
        let start = self.cell_of[v] as usize;
        let end = self.cell_end[start] as usize;
        if end - start == 1 {
            return start;
        }
        let p = self.pos[v] as usize;
        let other = self.elems[start];
        self.elems.swap(start, p);
        self.pos[v] = start as u32;
        self.pos[other as usize] = p as u32;
        self.cell_end[start] = start as u32 + 1;
        self.cell_end[start + 1] = end as u32;
        for i in start + 1..end {
            self.cell_of[self.elems[i] as usize] = start as u32 + 1;
        }
        self.ncells += 1;
        start
    }

    /// Refines to the coarsest equitable partition finer than `self`,
    /// splitting against the cells whose starts are in `splitters` first.
    /// Subcells are ordered by neighbour count, so the result depends only
    /// on the graph and the input partition up to isomorphism.
    pub fn refine(&mut self, graph: &Graph, splitters: &[usize]) -> Trace {
        let n = self.elems.len();
        let mut trace = Trace::default();
        let mut in_queue = vec![false; n];
        let mut queue = VecDeque::new();
        for &s in splitters {
            if !in_queue[s] {
                in_queue[s] = true;
                queue.push_back(s);
            }
        }
        let mut count = vec![0u32; n];
        let mut touched: Vec<usize> = Vec::new();
        let mut hit: Vec<usize> = Vec::new();
        let mut members: Vec<(u32, u32)> = Vec::new();
        while let Some(w) = queue.pop_front() {
            in_queue[w] = false;
            if self.ncells == n {
                break;
            }
            trace.mix(w as u64);
            let wend = self.cell_end[w] as usize;
            for idx in w..wend {
                let v = self.elems[idx] as usize;
                for &u in graph.neighbors(v) {
                    let u = u as usize;
                    if count[u] == 0 {
                        touched.push(u);
                    }
                    count[u] += 1;
                }
            }
            hit.clear();
            hit.extend(touched.iter().map(|&u| self.cell_of[u] as usize));
            hit.sort_unstable();
            hit.dedup();
            for &x in &hit {
                let xend = self.cell_end[x] as usize;
                if xend - x == 1 {
                    continue;
                }
                members.clear();
                members.extend((x..xend).map(|i| (count[self.elems[i] as usize], self.elems[i])));
                let c0 = members[0].0;
                if members.iter().all(|m| m.0 == c0) {
                    continue;
                }
                members.sort_by_key(|m| m.0);
                trace.mix(x as u64);
                let was_queued = in_queue[x];
                // rewrite the range and record subcells
                let mut subcells: Vec<(usize, usize)> = Vec::new();
                let mut s = x;
                for (i, &(c, v)) in members.iter().enumerate() {
                    let at = x + i;
                    self.elems[at] = v;
                    self.pos[v as usize] = at as u32;
                    if i > 0 && c != members[i - 1].0 {
                        subcells.push((s, at));
                        s = at;
                    }
                }
                subcells.push((s, xend));
                for (k, &(s, e)) in subcells.iter().enumerate() {
                    self.cell_end[s] = e as u32;
                    for i in s..e {
                        self.cell_of[self.elems[i] as usize] = s as u32;
                    }
                    trace.mix(((members[s - x].0 as u64) << 32) | (e - s) as u64);
                    trace.mix(k as u64);
                }
                self.ncells += subcells.len() - 1;
                if was_queued {
                    for &(s, _) in &subcells[1..] {
                        in_queue[s] = true;
                        queue.push_back(s);
                    }
                } else {
                    let largest = subcells
                        .iter()
                        .enumerate()
                        .max_by(|a, b| {
                            (a.1 .1 - a.1 .0)
                                .cmp(&(b.1 .1 - b.1 .0))
                                .then(b.0.cmp(&a.0))
                        })
                        .map(|(i, _)| i)
                        .unwrap_or(0);
                    for (i, &(s, _)) in subcells.iter().enumerate() {
                        if i != largest {
                            in_queue[s] = true;
                            queue.push_back(s);
                        }
                    }
                }
            }
            for u in touched.drain(..) {
                count[u] = 0;
            }
        }
        trace.mix(self.ncells as u64);
        trace
    }

    /// Refines from scratch, using every cell as a splitter.
    pub fn refine_all(&mut self, graph: &Graph) -> Trace {
        let starts = self.cell_starts();
        self.refine(graph, &starts)
    }

    /// Whether every vertex of a cell has the same number of neighbours in
    /// every cell.
    pub fn is_equitable(&self, graph: &Graph) -> bool {
        let starts = self.cell_starts();
        for &w in &starts {
            let wr = self.cell_range(w);
            for &x in &starts {
                let counts: Vec<usize> = self.elems[self.cell_range(x)]
                    .iter()
                    .map(|&v| {
                        graph
                            .neighbors(v as usize)
                            .iter()
                            .filter(|&&u| wr.contains(&(self.pos[u as usize] as usize)))
                            .count()
                    })
                    .collect();
                if counts.windows(2).any(|p| p[0] != p[1]) {
                    return false;
                }
            }
        }
        true
    }
}

/// Coarsest equitable refinement of `partition`.
pub fn refine(graph: &Graph, partition: &ColoredPartition) -> ColoredPartition {
    let mut p = partition.clone();
    p.refine_all(graph);
    p
}
