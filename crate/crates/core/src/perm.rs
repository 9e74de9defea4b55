//! Permutations of `{0, .., n-1}`.
//!
//! Composition is left to right throughout the crate: `p.then(&q)` maps
//! `x` to `q(p(x))`, matching exponent notation `x^{pq} = (x^p)^q`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A bijection on `0..degree`, stored as its image list.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree as u32).collect(),
        }
    }

    /// Builds a permutation from an image list, checking bijectivity.
    pub fn from_images(images: Vec<u32>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            let x = x as usize;
            if x >= n || seen[x] {
                return Err(Error::NotAPermutation(format!("{images:?}")));
            }
            seen[x] = true;
        }
        Ok(Permutation { images })
    }

    pub(crate) fn from_images_unchecked(images: Vec<u32>) -> Self {
        debug_assert!(Self::from_images(images.clone()).is_ok());
        Permutation { images }
    }

    /// Builds a permutation of the given degree from disjoint cycles.
    pub fn from_cycles(degree: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        for cycle in cycles {
            for (i, &x) in cycle.iter().enumerate() {
                let y = cycle[(i + 1) % cycle.len()];
                if x >= degree || y >= degree {
                    return Err(Error::NotAPermutation(format!("{cycles:?}")));
                }
                images[x] = y as u32;
            }
        }
        Self::from_images(images)
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.images[x] as usize
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    /// `self` followed by `other`.
    pub fn then(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            images: self
                .images
                .iter()
                .map(|&x| other.images[x as usize])
                .collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u32; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize] = i as u32;
        }
        Permutation { images: inv }
    }

    /// `g^{-1} self g`.
    pub fn conjugate_by(&self, g: &Permutation) -> Permutation {
        g.inverse().then(self).then(g)
    }

    pub fn first_moved_point(&self) -> Option<usize> {
        self.images
            .iter()
            .enumerate()
            .find(|&(i, &x)| i as u32 != x)
            .map(|(i, _)| i)
    }

    pub fn fixed_point_count(&self) -> usize {
        self.images
            .iter()
            .enumerate()
            .filter(|&(i, &x)| i as u32 == x)
            .count()
    }

    /// Disjoint cycles of length at least two, each starting at its least point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] || self.apply(start) == start {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.apply(start);
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.apply(x);
            }
            out.push(cycle);
        }
        out
    }

    /// Length of every cycle (including fixed points) if they all agree.
    pub fn uniform_cycle_length(&self) -> Option<usize> {
        let n = self.degree();
        if n == 0 {
            return Some(1);
        }
        let mut seen = vec![false; n];
        let mut len = None;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut l = 0;
            let mut x = start;
            loop {
                seen[x] = true;
                l += 1;
                x = self.apply(x);
                if x == start {
                    break;
                }
            }
            match len {
                None => len = Some(l),
                Some(m) if m != l => return None,
                _ => {}
            }
        }
        len
    }

    pub fn order(&self) -> u64 {
        fn gcd(a: u64, b: u64) -> u64 {
            if b == 0 {
                a
            } else {
                gcd(b, a % b)
            }
        }
        let mut lcm = 1u64;
        let n = self.degree();
        let mut seen = vec![false; n];
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut l = 0u64;
            let mut x = start;
            loop {
                seen[x] = true;
                l += 1;
                x = self.apply(x);
                if x == start {
                    break;
                }
            }
            lcm = lcm / gcd(lcm, l) * l;
        }
        lcm
    }

    /// Space-separated image list, e.g. `2 0 1`.
    pub fn to_image_line(&self) -> String {
        self.images
            .iter()
            .map(|x| x.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    }

    /// Disjoint-cycle text, e.g. `(0 2 1)(3 4)`; the identity prints as `()`.
    pub fn to_cycle_string(&self) -> String {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return "()".to_string();
        }
        cycles
            .iter()
            .map(|c| {
                let body: Vec<String> = c.iter().map(|x| x.to_string()).collect();
                format!("({})", body.join(" "))
            })
            .collect()
    }
}

/// Left-to-right composition: the result maps `x` to `q(p(x))`.
pub fn compose(p: &Permutation, q: &Permutation) -> Result<Permutation> {
    if p.degree() != q.degree() {
        return Err(Error::DegreeMismatch {
            left: p.degree(),
            right: q.degree(),
        });
    }
    Ok(p.then(q))
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_cycle_string())
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_cycle_string())
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Parses a one-line image list such as `2 0 1`.
    fn from_str(s: &str) -> Result<Self> {
        let images = s
            .split_whitespace()
            .map(|t| {
                t.parse::<u32>()
                    .map_err(|_| Error::NotAPermutation(s.to_string()))
            })
            .collect::<Result<Vec<_>>>()?;
        Permutation::from_images(images)
    }
}

impl TryFrom<Vec<u32>> for Permutation {
    type Error = Error;
    fn try_from(v: Vec<u32>) -> Result<Self> {
        Permutation::from_images(v)
    }
}

impl From<Permutation> for Vec<u32> {
    fn from(p: Permutation) -> Vec<u32> {
        p.images
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn three_cycle_then_transposition() {
        // (0 1 2) then (0 1): 0->1->0, 1->2->2, 2->0->1.
        let c = Permutation::from_cycles(3, &[&[0, 1, 2]]).unwrap();
        let t = Permutation::from_cycles(3, &[&[0, 1]]).unwrap();
        let r = compose(&c, &t).unwrap();
        assert_eq!(r.images(), &[0, 2, 1]);
        assert_eq!(r.to_cycle_string(), "(1 2)");
    }

    #[test]
    fn identity_and_inverse_laws() {
        let p: Permutation = "3 0 4 1 2".parse().unwrap();
        let e = Permutation::identity(5);
        assert_eq!(compose(&e, &p).unwrap(), p);
        assert!(compose(&p, &p.inverse()).unwrap().is_identity());
    }

    #[test]
    fn degree_mismatch_is_an_error() {
        let p = Permutation::identity(3);
        let q = Permutation::identity(4);
        assert!(matches!(
            compose(&p, &q),
            Err(Error::DegreeMismatch { left: 3, right: 4 })
        ));
    }

    #[test]
    fn rejects_non_bijection() {
        assert!("0 0 1".parse::<Permutation>().is_err());
        assert!("0 3 1".parse::<Permutation>().is_err());
    }

    #[test]
    fn cycle_text_and_order() {
        let p = Permutation::from_cycles(6, &[&[0, 2, 4], &[1, 5]]).unwrap();
        assert_eq!(p.to_cycle_string(), "(0 2 4)(1 5)");
        assert_eq!(p.order(), 6);
        assert_eq!(p.uniform_cycle_length(), None);
        let q = Permutation::from_cycles(4, &[&[0, 1], &[2, 3]]).unwrap();
        assert_eq!(q.uniform_cycle_length(), Some(2));
    }
}
