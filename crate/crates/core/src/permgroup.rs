//! Permutation groups held as a base and strong generating set.
//!
//! Construction is the deterministic incremental Schreier–Sims algorithm:
//! every level keeps its own generating set `S_k` for the stabilizer of
//! the first `k` base points, and each Schreier generator of level `k` is
//! sifted into level `k + 1` as soon as it appears.

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};

use crate::error::{Error, Result};
use crate::perm::Permutation;

const ABSENT: u32 = u32::MAX;

#[derive(Clone, Debug)]
struct Level {
    base_point: usize,
    gens: Vec<Permutation>,
    orbit: Vec<usize>,
    /// `slot[x]` indexes `reps` for orbit points, `ABSENT` elsewhere.
    slot: Vec<u32>,
    /// `reps[i]` maps the base point to `orbit[i]`.
    reps: Vec<Permutation>,
    rep_invs: Vec<Permutation>,
}

impl Level {
    fn new(degree: usize, base_point: usize) -> Self {
        let mut slot = vec![ABSENT; degree];
        slot[base_point] = 0;
        Level {
            base_point,
            gens: Vec::new(),
            orbit: vec![base_point],
            slot,
            reps: vec![Permutation::identity(degree)],
            rep_invs: vec![Permutation::identity(degree)],
        }
    }
}

/// A permutation group with a verified base and strong generating set.
#[derive(Clone, Debug)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    levels: Vec<Level>,
}

impl PermGroup {
    pub fn trivial(degree: usize) -> Self {
        PermGroup {
            degree,
            generators: Vec::new(),
            levels: Vec::new(),
        }
    }

    /// Runs Schreier–Sims on `gens`. All generators must share `degree`.
    pub fn from_generators(degree: usize, gens: &[Permutation]) -> Result<Self> {
        Self::with_base_prefix(degree, gens, &[])
    }

    /// Like [`PermGroup::from_generators`] but the base starts with `prefix`.
    pub fn with_base_prefix(degree: usize, gens: &[Permutation], prefix: &[usize]) -> Result<Self> {
        let mut group = PermGroup::trivial(degree);
        for &b in prefix {
            if b >= degree {
                return Err(Error::VertexOutOfRange(b));
            }
            group.levels.push(Level::new(degree, b));
        }
        for g in gens {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch {
                    left: degree,
                    right: g.degree(),
                });
            }
            if g.is_identity() {
                continue;
            }
            group.generators.push(g.clone());
            group.extend(0, g.clone());
        }
        // Drop trailing prefix levels that carry no generators below them.
        while group
            .levels
            .last()
            .is_some_and(|l| l.gens.is_empty() && l.orbit.len() == 1)
        {
            group.levels.pop();
        }
        Ok(group)
    }

    fn extend(&mut self, k: usize, g: Permutation) {
        if self.sift_from(k, &g).0.is_identity() {
            return;
        }
        if k == self.levels.len() {
            let b = g
                .first_moved_point()
                .expect("non-identity permutation moves a point");
            self.levels.push(Level::new(self.degree, b));
        }
        self.levels[k].gens.push(g);
        let newest = self.levels[k].gens.len() - 1;
        let old_len = self.levels[k].orbit.len();
        let mut i = 0;
        while i < self.levels[k].orbit.len() {
            let range = if i < old_len {
                newest..newest + 1
            } else {
                0..self.levels[k].gens.len()
            };
            for j in range {
                let level = &mut self.levels[k];
                let x = level.orbit[i];
                let s = &level.gens[j];
                let y = s.apply(x);
                let step = level.reps[i].then(s);
                if level.slot[y] == ABSENT {
                    level.slot[y] = level.reps.len() as u32;
                    level.orbit.push(y);
                    level.rep_invs.push(step.inverse());
                    level.reps.push(step);
                } else {
                    let schreier = step.then(&level.rep_invs[level.slot[y] as usize]);
                    if !schreier.is_identity() {
                        self.extend(k + 1, schreier);
                    }
                }
            }
            i += 1;
        }
    }

    /// Sifts `g` through levels `k..`; returns the residue and the level
    /// where sifting stopped (`levels.len()` if it went all the way).
    fn sift_from(&self, k: usize, g: &Permutation) -> (Permutation, usize) {
        let mut h = g.clone();
        for (idx, level) in self.levels.iter().enumerate().skip(k) {
            let y = h.apply(level.base_point);
            let slot = level.slot[y];
            if slot == ABSENT {
                return (h, idx);
            }
            h = h.then(&level.rep_invs[slot as usize]);
        }
        (h, self.levels.len())
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// The non-identity generators the group was built from.
    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base_point).collect()
    }

    pub fn strong_generators(&self) -> Vec<Permutation> {
        let mut out: Vec<Permutation> = Vec::new();
        for level in &self.levels {
            for g in &level.gens {
                if !out.contains(g) {
                    out.push(g.clone());
                }
            }
        }
        out
    }

    pub fn basic_orbit_sizes(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    /// The transversal of level `k` as `(point, representative)` pairs.
    pub fn transversal(&self, k: usize) -> Vec<(usize, &Permutation)> {
        let level = &self.levels[k];
        level.orbit.iter().copied().zip(level.reps.iter()).collect()
    }

    pub fn order(&self) -> BigUint {
        self.levels
            .iter()
            .fold(BigUint::one(), |acc, l| acc * BigUint::from(l.orbit.len()))
    }

    /// The order if it fits in a `u64`.
    pub fn order_u64(&self) -> Option<u64> {
        self.order().to_u64()
    }

    pub fn is_trivial(&self) -> bool {
        self.levels.is_empty()
    }

    pub fn contains(&self, p: &Permutation) -> Result<bool> {
        if p.degree() != self.degree {
            return Err(Error::DegreeMismatch {
                left: self.degree,
                right: p.degree(),
            });
        }
        Ok(self.sift_from(0, p).0.is_identity())
    }

    /// Writes a member as the level-by-level transversal points it sifts
    /// through; `None` for non-members.
    pub fn factorize(&self, p: &Permutation) -> Option<Vec<usize>> {
        if p.degree() != self.degree {
            return None;
        }
        let mut h = p.clone();
        let mut points = Vec::with_capacity(self.levels.len());
        for level in &self.levels {
            let y = h.apply(level.base_point);
            let slot = level.slot[y];
            if slot == ABSENT {
                return None;
            }
            points.push(y);
            h = h.then(&level.rep_invs[slot as usize]);
        }
        h.is_identity().then_some(points)
    }

    /// Inverse of [`PermGroup::factorize`]: the product of representatives,
    /// deepest level first.
    pub fn reconstruct(&self, points: &[usize]) -> Permutation {
        let mut g = Permutation::identity(self.degree);
        for (level, &y) in self.levels.iter().zip(points).rev() {
            g = g.then(&level.reps[level.slot[y] as usize]);
        }
        g
    }

    /// Whether every generator of `other` lies in `self`.
    pub fn contains_group(&self, other: &PermGroup) -> bool {
        other
            .generators
            .iter()
            .all(|g| self.contains(g).unwrap_or(false))
    }

    pub fn same_group(&self, other: &PermGroup) -> bool {
        self.degree == other.degree
            && self.order() == other.order()
            && self.contains_group(other)
            && other.contains_group(self)
    }

    /// Orbit partition of the point set, cells sorted by least point.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        orbits_of(self.degree, &self.generators)
    }

    pub fn orbit(&self, v: usize) -> Vec<usize> {
        orbit_of(self.degree, &self.generators, v)
    }

    pub fn is_transitive(&self) -> bool {
        self.degree <= 1 || self.orbit(0).len() == self.degree
    }

    /// Stabilizer of the point `v`.
    pub fn stabilizer(&self, v: usize) -> Result<PermGroup> {
        if v >= self.degree {
            return Err(Error::VertexOutOfRange(v));
        }
        if self.is_trivial() {
            return Ok(PermGroup::trivial(self.degree));
        }
        let with_v = PermGroup::with_base_prefix(self.degree, &self.generators, &[v])?;
        if with_v.levels.first().map(|l| l.base_point) != Some(v) {
            // `v` is fixed by everything, so the group is its own stabilizer.
            return Ok(self.clone());
        }
        let levels: Vec<Level> = with_v.levels[1..].to_vec();
        let generators = levels.first().map(|l| l.gens.clone()).unwrap_or_default();
        Ok(PermGroup {
            degree: self.degree,
            generators,
            levels,
        })
    }

    /// Every point stabilizer is trivial, equivalently every orbit has
    /// length equal to the group order.
    pub fn is_semiregular(&self) -> bool {
        let order = self.order();
        self.orbits()
            .iter()
            .all(|o| BigUint::from(o.len()) == order)
    }

    pub fn is_regular(&self) -> bool {
        self.is_transitive() && self.is_semiregular()
    }

    /// Enumerates every element exactly once, provided the order is at
    /// most `cap`.
    pub fn elements(&self, cap: u64) -> Result<Elements<'_>> {
        let order = self.order();
        if order > BigUint::from(cap) {
            return Err(Error::OrderExceedsCap {
                order: order.to_string(),
                cap,
            });
        }
        Ok(self.elements_unbounded())
    }

    /// Lazy enumeration without an order check; the caller bounds how far
    /// it iterates.
    pub fn elements_unbounded(&self) -> Elements<'_> {
        Elements {
            group: self,
            counters: vec![0; self.levels.len()],
            done: false,
        }
    }
}

/// Iterator over all elements of a [`PermGroup`], in odometer order over
/// the transversals.
pub struct Elements<'a> {
    group: &'a PermGroup,
    counters: Vec<usize>,
    done: bool,
}

impl Iterator for Elements<'_> {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        if self.done {
            return None;
        }
        let levels = &self.group.levels;
        let mut g = Permutation::identity(self.group.degree);
        for (level, &c) in levels.iter().zip(&self.counters).rev() {
            g = g.then(&level.reps[c]);
        }
        // Advance the odometer, least significant digit at the deepest level.
        let mut k = levels.len();
        loop {
            if k == 0 {
                self.done = true;
                break;
            }
            k -= 1;
            self.counters[k] += 1;
            if self.counters[k] < levels[k].orbit.len() {
                break;
            }
            self.counters[k] = 0;
        }
        Some(g)
    }
}

pub fn orbit_of(degree: usize, gens: &[Permutation], v: usize) -> Vec<usize> {
    let mut seen = vec![false; degree];
    seen[v] = true;
    let mut orbit = vec![v];
    let mut i = 0;
    while i < orbit.len() {
        let x = orbit[i];
        for g in gens {
            let y = g.apply(x);
            if !seen[y] {
                seen[y] = true;
                orbit.push(y);
            }
        }
        i += 1;
    }
    orbit
}

/// Orbits of the group generated by `gens`, each sorted, ordered by least point.
pub fn orbits_of(degree: usize, gens: &[Permutation]) -> Vec<Vec<usize>> {
    let mut seen = vec![false; degree];
    let mut out = Vec::new();
    for v in 0..degree {
        if seen[v] {
            continue;
        }
        let mut orbit = orbit_of(degree, gens, v);
        for &x in &orbit {
            seen[x] = true;
        }
        orbit.sort_unstable();
        out.push(orbit);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyc(n: usize, cycles: &[&[usize]]) -> Permutation {
        Permutation::from_cycles(n, cycles).unwrap()
    }

    #[test]
    fn symmetric_group_of_degree_four() {
        let g =
            PermGroup::from_generators(4, &[cyc(4, &[&[0, 1]]), cyc(4, &[&[0, 1, 2, 3]])]).unwrap();
        assert_eq!(g.order(), BigUint::from(24u32));
        let stab = g.stabilizer(0).unwrap();
        assert_eq!(stab.order(), BigUint::from(6u32));
        assert!(!g.is_semiregular());
        assert!(g.is_transitive());
    }

    #[test]
    fn trivial_group_facts() {
        let g = PermGroup::from_generators(5, &[]).unwrap();
        assert_eq!(g.order(), BigUint::one());
        assert_eq!(g.orbits().len(), 5);
        let all: Vec<_> = g.elements(10).unwrap().collect();
        assert_eq!(all, vec![Permutation::identity(5)]);
        assert!(g.contains(&Permutation::identity(5)).unwrap());
    }

    #[test]
    fn alternating_group_rejects_odd_permutation() {
        let a4 =
            PermGroup::from_generators(4, &[cyc(4, &[&[0, 1, 2]]), cyc(4, &[&[1, 2, 3]])]).unwrap();
        assert_eq!(a4.order(), BigUint::from(12u32));
        let elems: Vec<_> = a4.elements(100).unwrap().collect();
        assert_eq!(elems.len(), 12);
        let odd = cyc(4, &[&[0, 1]]);
        assert!(!elems.contains(&odd));
        assert!(!a4.contains(&odd).unwrap());
    }

    #[test]
    fn dihedral_group_of_octagon_has_sixteen_elements() {
        let rot = cyc(8, &[&[0, 1, 2, 3, 4, 5, 6, 7]]);
        let refl = cyc(8, &[&[1, 7], &[2, 6], &[3, 5]]);
        let g = PermGroup::from_generators(8, &[rot, refl]).unwrap();
        let elems: Vec<_> = g.elements(1000).unwrap().collect();
        assert_eq!(elems.len(), 16);
        let mut dedup = elems.clone();
        dedup.sort();
        dedup.dedup();
        assert_eq!(dedup.len(), 16);
    }

    #[test]
    fn elements_respects_cap() {
        let g =
            PermGroup::from_generators(4, &[cyc(4, &[&[0, 1]]), cyc(4, &[&[0, 1, 2, 3]])]).unwrap();
        assert!(matches!(g.elements(10), Err(Error::OrderExceedsCap { .. })));
    }

    #[test]
    fn cyclic_regular_group() {
        let g = PermGroup::from_generators(4, &[cyc(4, &[&[0, 1, 2, 3]])]).unwrap();
        assert!(g.is_regular());
        assert!(g.stabilizer(2).unwrap().is_trivial());
    }

    #[test]
    fn semiregular_with_two_orbits() {
        let g = PermGroup::from_generators(6, &[cyc(6, &[&[0, 1, 2], &[3, 4, 5]])]).unwrap();
        assert!(g.is_semiregular());
        assert!(!g.is_regular());
        assert_eq!(g.orbits(), vec![vec![0, 1, 2], vec![3, 4, 5]]);
    }

    #[test]
    fn factorize_round_trips() {
        let g = PermGroup::from_generators(5, &[cyc(5, &[&[0, 1, 2, 3, 4]]), cyc(5, &[&[0, 1]])])
            .unwrap();
        for e in g.elements(200).unwrap() {
            let f = g.factorize(&e).unwrap();
            assert_eq!(g.reconstruct(&f), e);
        }
    }
}
