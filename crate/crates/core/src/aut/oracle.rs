//! Plain backtracking automorphism search for small graphs. Shares no code
//! with the refinement search, so it serves as an independent check.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::perm::Permutation;
use crate::permgroup::{orbit_of, PermGroup};

pub const ORACLE_MAX_VERTICES: usize = 16;

/// Extends `map` (images of `0..map.len()`) to a full automorphism.
fn extend(g: &Graph, map: &mut Vec<usize>, used: &mut [bool]) -> bool {
    let n = g.order();
    let v = map.len();
    if v == n {
        return true;
    }
    for c in 0..n {
        if used[c] || g.degree(c) != g.degree(v) {
            continue;
        }
        if (0..v).any(|u| g.has_edge(u, v) != g.has_edge(map[u], c)) {
            continue;
        }
        map.push(c);
        used[c] = true;
        if extend(g, map, used) {
            return true;
        }
        used[c] = false;
        map.pop();
    }
    false
}

/// Full automorphism group of a graph on at most 16 vertices. For each
/// prefix `0..i` fixed pointwise, finds one automorphism mapping `i` to
/// each point outside the orbit found so far.
pub fn oracle_automorphisms(g: &Graph) -> Result<PermGroup> {
    let n = g.order();
    if n > ORACLE_MAX_VERTICES {
        return Err(Error::ScaleExceeded(format!(
            "oracle supports at most {ORACLE_MAX_VERTICES} vertices"
        )));
    }
    let mut all: Vec<Permutation> = Vec::new();
    for i in 0..n {
        let mut level: Vec<Permutation> = Vec::new();
        for j in i + 1..n {
            if orbit_of(n, &level, i).contains(&j) {
                continue;
            }
            let mut map: Vec<usize> = (0..i).collect();
            map.push(j);
            let mut used = vec![false; n];
            for &m in &map {
                used[m] = true;
            }
            let ok = (0..=i)
                .all(|u| (0..=i).all(|w| g.has_edge(u, w) == g.has_edge(map[u], map[w])))
                && g.degree(i) == g.degree(j)
                && extend(g, &mut map, &mut used);
            if ok {
                let p = Permutation::from_images(map.iter().map(|&x| x as u32).collect())?;
                debug_assert!(g.is_automorphism(&p));
                level.push(p);
            }
        }
        all.extend(level);
    }
    PermGroup::from_generators(n, &all)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigUint;

    #[test]
    fn known_orders() {
        let o = |g: &Graph| oracle_automorphisms(g).unwrap().order();
        assert_eq!(o(&Graph::petersen()), BigUint::from(120u32));
        assert_eq!(o(&Graph::cycle(8)), BigUint::from(16u32));
        assert_eq!(o(&Graph::star(4)), BigUint::from(24u32));
    }

    #[test]
    fn rejects_large_graphs() {
        assert!(oracle_automorphisms(&Graph::empty(17)).is_err());
    }
}
