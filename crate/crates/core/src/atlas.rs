//! Group constructors and the named catalog.
//!
//! Presentations are realized by explicit constructions (cyclic,
//! metacyclic, direct and semidirect products); the defining relations of
//! each catalog entry are asserted in the tests rather than enforced by a
//! coset enumerator.
//!
//! Conjugation is written exponentially: `x^y = y^{-1} x y`, and a
//! semidirect-product action gives `x^k` for each generator `k` of the
//! acting group.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::group::{Elem, FiniteGroup, Generator};
use crate::perm::Permutation;

/// Upper bound on the group order for [`group_automorphisms`].
pub const AUT_ORDER_LIMIT: usize = 64;
/// Upper bound on the number of automorphisms materialized.
pub const AUT_COUNT_LIMIT: usize = 1 << 20;

/// An automorphism of a [`FiniteGroup`], as a permutation of its elements.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GroupAutomorphism {
    images: Permutation,
}

impl GroupAutomorphism {
    pub fn identity(g: &FiniteGroup) -> Self {
        GroupAutomorphism {
            images: Permutation::identity(g.order()),
        }
    }

    /// Wraps a permutation after checking it preserves the table.
    pub fn new(g: &FiniteGroup, images: Permutation) -> Result<Self> {
        let auto = GroupAutomorphism { images };
        if auto.images.degree() != g.order() || !auto.preserves(g) {
            return Err(Error::ActionNotWellDefined(
                "map is not a group automorphism".into(),
            ));
        }
        Ok(auto)
    }

    /// The unique automorphism sending each generator to the given image,
    /// if one exists.
    pub fn from_generator_images(g: &FiniteGroup, images: &[Elem]) -> Option<Self> {
        let gens = g.generator_elements();
        if gens.len() != images.len() {
            return None;
        }
        let map = extend_homomorphism(g, &gens, images)?;
        if map.len() != g.order() || map.iter().any(|&x| x == u32::MAX) {
            return None;
        }
        let perm = Permutation::from_images(map).ok()?;
        Some(GroupAutomorphism { images: perm })
    }

    #[inline]
    pub fn apply(&self, x: Elem) -> Elem {
        self.images.apply(x)
    }

    pub fn permutation(&self) -> &Permutation {
        &self.images
    }

    /// `self` followed by `other`.
    pub fn then(&self, other: &GroupAutomorphism) -> GroupAutomorphism {
        GroupAutomorphism {
            images: self.images.then(&other.images),
        }
    }

    pub fn inverse(&self) -> GroupAutomorphism {
        GroupAutomorphism {
            images: self.images.inverse(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.images.is_identity()
    }

    pub fn preserves(&self, g: &FiniteGroup) -> bool {
        if self.apply(0) != 0 {
            return false;
        }
        g.elements().all(|x| {
            g.elements()
                .all(|y| self.apply(g.mul(x, y)) == g.mul(self.apply(x), self.apply(y)))
        })
    }
}

/// Extends `gens[i] -> images[i]` along the Cayley graph of the subgroup
/// generated by `gens`. Returns the partial map (unset entries are
/// `u32::MAX`) when it is a well-defined injective homomorphism.
fn extend_homomorphism(g: &FiniteGroup, gens: &[Elem], images: &[Elem]) -> Option<Vec<u32>> {
    let n = g.order();
    let mut map = vec![u32::MAX; n];
    let mut used = vec![false; n];
    map[0] = 0;
    used[0] = true;
    let mut queue = VecDeque::from([0usize]);
    while let Some(x) = queue.pop_front() {
        let fx = map[x] as usize;
        for (&s, &t) in gens.iter().zip(images) {
            let y = g.mul(x, s);
            let fy = g.mul(fx, t);
            if map[y] == u32::MAX {
                if used[fy] {
                    return None;
                }
                used[fy] = true;
                map[y] = fy as u32;
                queue.push_back(y);
            } else if map[y] as usize != fy {
                return None;
            }
        }
    }
    Some(map)
}

fn letters(count: usize) -> Vec<String> {
    const LETTERS: &str = "abcdefghijklmnopqrstuvwxyz";
    (0..count)
        .map(|i| {
            LETTERS
                .chars()
                .nth(i)
                .map(String::from)
                .unwrap_or_else(|| format!("x{i}"))
        })
        .collect()
}

fn rename_sequential(g: FiniteGroup) -> Result<FiniteGroup> {
    let names = letters(g.generators().len());
    let refs: Vec<&str> = names.iter().map(String::as_str).collect();
    g.with_generator_names(&refs)
}

pub fn cyclic(n: usize) -> Result<FiniteGroup> {
    if n == 0 {
        return Err(Error::InvalidSize("cyclic group of order 0".into()));
    }
    let mut table = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            table.push(((i + j) % n) as u32);
        }
    }
    let generators = if n == 1 {
        Vec::new()
    } else {
        vec![Generator {
            name: "a".into(),
            element: 1,
        }]
    };
    let bounds = if n == 1 { Vec::new() } else { vec![n as u32] };
    FiniteGroup::from_table(format!("Z{n}"), n, table, generators, bounds)
}

fn mod_pow(base: u64, exp: u64, m: u64) -> u64 {
    let mut r = 1 % m;
    for _ in 0..exp {
        r = r * base % m;
    }
    r
}

/// `<a, b | a^m = 1, b^s = a^t, a^b = a^r>`, elements `a^i b^j` with
/// `i < m`, `j < s`.
pub fn metacyclic(m: usize, s: usize, t: usize, r: usize) -> Result<FiniteGroup> {
    if m < 1 || s < 1 {
        return Err(Error::InvalidSize(format!("metacyclic({m},{s},{t},{r})")));
    }
    let (mm, ss, tt, rr) = (m as u64, s as u64, (t % m) as u64, (r % m) as u64);
    if mod_pow(rr, ss, mm) != 1 % mm || (tt * rr) % mm != tt {
        return Err(Error::InvalidSize(format!(
            "metacyclic parameters ({m},{s},{t},{r}) violate r^s = 1 or t r = t"
        )));
    }
    let r_inv = (0..mm)
        .find(|&x| (x * rr) % mm == 1 % mm)
        .ok_or_else(|| Error::InvalidSize(format!("{r} is not a unit mod {m}")))?;
    let n = m * s;
    let idx = |i: u64, j: u64| (i * ss + j) as u32;
    let mut table = Vec::with_capacity(n * n);
    for i in 0..mm {
        for j in 0..ss {
            for k in 0..mm {
                for l in 0..ss {
                    // b^j a^k b^{-j} = a^{k r^{-j}}
                    let mut e = i + k * mod_pow(r_inv, j, mm);
                    let mut f = j + l;
                    if f >= ss {
                        f -= ss;
                        e += tt;
                    }
                    table.push(idx(e % mm, f));
                }
            }
        }
    }
    let generators = vec![
        Generator {
            name: "a".into(),
            element: idx(1 % mm, 0) as usize,
        },
        Generator {
            name: "b".into(),
            element: idx(0, 1 % ss) as usize,
        },
    ];
    FiniteGroup::from_table(
        format!("Meta({m},{s},{t},{r})"),
        n,
        table,
        generators,
        vec![m as u32, s as u32],
    )
}

/// The dihedral group of order `two_n`, `<a, b | a^n, b^2, a^b = a^{-1}>`.
pub fn dihedral(two_n: usize) -> Result<FiniteGroup> {
    if two_n < 4 || two_n % 2 != 0 {
        return Err(Error::InvalidSize(format!(
            "dihedral group needs even order >= 4, got {two_n}"
        )));
    }
    let n = two_n / 2;
    Ok(metacyclic(n, 2, 0, n - 1)?.with_name(format!("D{two_n}")))
}

/// `<a, b | a^4, a^2 = b^2, a^b = a^{-1}>`.
pub fn quaternion8() -> FiniteGroup {
    metacyclic(4, 2, 2, 3)
        .expect("valid parameters")
        .with_name("Q8")
}

/// Componentwise product; generators are those of `g` then `h`, renamed
/// `a, b, c, ...` in that order.
pub fn direct_product(g: &FiniteGroup, h: &FiniteGroup) -> Result<FiniteGroup> {
    let (n, m) = (g.order(), h.order());
    let order = n * m;
    let mut table = Vec::with_capacity(order * order);
    for x1 in 0..n {
        for y1 in 0..m {
            for x2 in 0..n {
                for y2 in 0..m {
                    table.push((g.mul(x1, x2) * m + h.mul(y1, y2)) as u32);
                }
            }
        }
    }
    let mut generators: Vec<Generator> = g
        .generators()
        .iter()
        .map(|gen| Generator {
            name: gen.name.clone(),
            element: gen.element * m,
        })
        .collect();
    generators.extend(h.generators().iter().map(|gen| Generator {
        name: gen.name.clone(),
        element: gen.element,
    }));
    let mut bounds = g.normal_form_bounds().to_vec();
    bounds.extend_from_slice(h.normal_form_bounds());
    let product = FiniteGroup::from_table(
        format!("{}x{}", g.name(), h.name()),
        order,
        table,
        generators,
        bounds,
    )?;
    rename_sequential(product)
}

/// `n ⋊ k`, where `action[i]` gives `x^{k_i}` for the `i`-th generator
/// `k_i` of `k`. Elements are pairs `x k` with `x` in `n` and `k` in `k`.
pub fn semidirect_product(
    n: &FiniteGroup,
    k: &FiniteGroup,
    action: &[GroupAutomorphism],
) -> Result<FiniteGroup> {
    let k_gens = k.generator_elements();
    if action.len() != k_gens.len() {
        return Err(Error::ActionNotWellDefined(format!(
            "{} images for {} generators",
            action.len(),
            k_gens.len()
        )));
    }
    for alpha in action {
        if alpha.permutation().degree() != n.order() || !alpha.preserves(n) {
            return Err(Error::ActionNotWellDefined(
                "action image is not an automorphism".into(),
            ));
        }
    }
    // phi[k] realizes x -> x^k; phi[k s] = phi[k] then action(s).
    let mut phi: Vec<Option<GroupAutomorphism>> = vec![None; k.order()];
    phi[0] = Some(GroupAutomorphism::identity(n));
    let mut queue = VecDeque::from([0usize]);
    while let Some(x) = queue.pop_front() {
        let fx = phi[x].clone().expect("visited");
        for (&s, alpha) in k_gens.iter().zip(action) {
            let y = k.mul(x, s);
            let fy = fx.then(alpha);
            match &phi[y] {
                None => {
                    phi[y] = Some(fy);
                    queue.push_back(y);
                }
                Some(existing) if *existing != fy => {
                    return Err(Error::ActionNotWellDefined(format!(
                        "conflicting images for element {} of {}",
                        k.element_name(y),
                        k.name()
                    )));
                }
                _ => {}
            }
        }
    }
    let phi: Vec<GroupAutomorphism> = phi
        .into_iter()
        .map(|p| p.ok_or_else(|| Error::ActionNotWellDefined("generators do not generate".into())))
        .collect::<Result<_>>()?;
    let (nn, kk) = (n.order(), k.order());
    let order = nn * kk;
    let mut table = Vec::with_capacity(order * order);
    for x1 in 0..nn {
        for y1 in 0..kk {
            // (x1 y1)(x2 y2) = x1 (y1 x2 y1^{-1}) y1 y2 = x1 x2^{y1^{-1}} y1 y2
            let twist = &phi[k.inv(y1)];
            for x2 in 0..nn {
                let xx = n.mul(x1, twist.apply(x2));
                for y2 in 0..kk {
                    table.push((xx * kk + k.mul(y1, y2)) as u32);
                }
            }
        }
    }
    let mut generators: Vec<Generator> = n
        .generators()
        .iter()
        .map(|g| Generator {
            name: g.name.clone(),
            element: g.element * kk,
        })
        .collect();
    generators.extend(k.generators().iter().map(|g| Generator {
        name: g.name.clone(),
        element: g.element,
    }));
    let mut bounds = n.normal_form_bounds().to_vec();
    bounds.extend_from_slice(k.normal_form_bounds());
    let product = FiniteGroup::from_table(
        format!("{}:{}", n.name(), k.name()),
        order,
        table,
        generators,
        bounds,
    )?;
    if !product.is_associative() {
        return Err(Error::ActionNotWellDefined(
            "twisted product is not associative".into(),
        ));
    }
    rename_sequential(product)
}

fn auto_from_words(g: &FiniteGroup, words: &[&str]) -> Result<GroupAutomorphism> {
    let images = words
        .iter()
        .map(|w| g.parse_word(w))
        .collect::<Result<Vec<_>>>()?;
    GroupAutomorphism::from_generator_images(g, &images).ok_or_else(|| {
        Error::ActionNotWellDefined(format!(
            "{words:?} does not define an automorphism of {}",
            g.name()
        ))
    })
}

/// Every automorphism of `g` (the identity first), by backtracking over
/// generator images with incremental homomorphism checks.
pub fn group_automorphisms(g: &FiniteGroup) -> Result<Vec<GroupAutomorphism>> {
    if g.order() > AUT_ORDER_LIMIT {
        return Err(Error::ScaleExceeded(format!(
            "Aut({}) needs order <= {AUT_ORDER_LIMIT}, got {}",
            g.name(),
            g.order()
        )));
    }
    let gens = g.generator_elements();
    let orders: Vec<usize> = g.elements().map(|x| g.element_order(x)).collect();
    let candidates: Vec<Vec<Elem>> = gens
        .iter()
        .map(|&s| g.elements().filter(|&x| orders[x] == orders[s]).collect())
        .collect();
    let mut out = Vec::new();
    let mut chosen = Vec::with_capacity(gens.len());
    backtrack_auts(g, &gens, &candidates, &mut chosen, &mut out)?;
    // identity first
    if let Some(pos) = out.iter().position(|a| a.is_identity()) {
        out.swap(0, pos);
    }
    Ok(out)
}

fn backtrack_auts(
    g: &FiniteGroup,
    gens: &[Elem],
    candidates: &[Vec<Elem>],
    chosen: &mut Vec<Elem>,
    out: &mut Vec<GroupAutomorphism>,
) -> Result<()> {
    let depth = chosen.len();
    if depth == gens.len() {
        if let Some(map) = extend_homomorphism(g, gens, chosen) {
            if map.iter().all(|&x| x != u32::MAX) {
                out.push(GroupAutomorphism {
                    images: Permutation::from_images_unchecked(map),
                });
                if out.len() > AUT_COUNT_LIMIT {
                    return Err(Error::ScaleExceeded(format!(
                        "more than {AUT_COUNT_LIMIT} automorphisms of {}",
                        g.name()
                    )));
                }
            }
        }
        return Ok(());
    }
    for &c in &candidates[depth] {
        chosen.push(c);
        if extend_homomorphism(g, &gens[..=depth], chosen).is_some() {
            backtrack_auts(g, gens, candidates, chosen, out)?;
        }
        chosen.pop();
    }
    Ok(())
}

/// The automorphism `x -> x^{-1}` of an abelian group.
pub fn inversion_automorphism(g: &FiniteGroup) -> Option<GroupAutomorphism> {
    if !g.is_abelian() {
        return None;
    }
    let images = g.elements().map(|x| g.inv(x) as u32).collect();
    Some(GroupAutomorphism {
        images: Permutation::from_images_unchecked(images),
    })
}

/// `D_{2n} x Z_p = <a, b, c | a^n, b^2, c^p, [a,c], [b,c], a^b = a^{-1}>`.
pub fn dihedral_cross_zp(n: usize, p: usize) -> Result<FiniteGroup> {
    let g = direct_product(&dihedral(2 * n)?, &cyclic(p)?)?;
    Ok(g.with_name(format!("D{}xZ{p}", 2 * n)))
}

/// `Q_8 x Z_p = <a, b, c | a^4, b^4, c^p, [a,c], [b,c], a^2 = b^2, a^b = a^{-1}>`.
pub fn q8_cross_zp(p: usize) -> Result<FiniteGroup> {
    let g = direct_product(&quaternion8(), &cyclic(p)?)?;
    Ok(g.with_name(format!("Q8xZ{p}")))
}

/// `<a, b, c | a^4, b^2, c^2, [a,b], [a,c], [b,c] = a^2>`, order 16.
fn order16_commutator_group() -> Result<FiniteGroup> {
    let n = direct_product(&cyclic(4)?, &cyclic(2)?)?;
    let k = cyclic(2)?;
    let act = auto_from_words(&n, &["a", "a^2b"])?;
    semidirect_product(&n, &k, &[act])
}

/// `Q_8 ⋊ Z_3` with `a^c = b^{e1}`, `b^c = a^{e2} b`, signs `e1, e2 = ±1`.
pub fn q8_by_z3(e1: i32, e2: i32) -> Result<FiniteGroup> {
    let q = quaternion8();
    let w1 = if e1 >= 0 { "b" } else { "b^-1" };
    let w2 = if e2 >= 0 { "ab" } else { "a^-1b" };
    let act = auto_from_words(&q, &[w1, w2])?;
    semidirect_product(&q, &cyclic(3)?, &[act])
}

/// `<a, c, b | a^p, c^p, b^2, [a,c], a^b = a^{-1}, c^b = c^{-1}>`.
pub fn generalized_dihedral_zp2(p: usize) -> Result<FiniteGroup> {
    let n = direct_product(&cyclic(p)?, &cyclic(p)?)?;
    let act = auto_from_words(&n, &["a^-1", "b^-1"])?;
    semidirect_product(&n, &cyclic(2)?, &[act])
}

/// `<a, b, c | a^p, b^p, c^2, [a,b], [a,c], b^c = b^{-1}>`.
fn zp_cross_dihedral(p: usize) -> Result<FiniteGroup> {
    let n = direct_product(&cyclic(p)?, &cyclic(p)?)?;
    let act = auto_from_words(&n, &["a", "b^-1"])?;
    semidirect_product(&n, &cyclic(2)?, &[act])
}

fn parse_param(name: &str, prefix: &str) -> Option<usize> {
    name.strip_prefix(prefix)?.strip_suffix(')')?.parse().ok()
}

fn is_prime(p: usize) -> bool {
    p >= 2 && (2..p).take_while(|d| d * d <= p).all(|d| p % d != 0)
}

fn basic_factor(name: &str) -> Result<FiniteGroup> {
    let num = |s: &str| s.parse::<usize>().ok();
    match name {
        "Q8" => Ok(quaternion8()),
        "Q16" => Ok(metacyclic(8, 2, 4, 7)?.with_name("Q16")),
        "SD16" => Ok(metacyclic(8, 2, 0, 3)?.with_name("SD16")),
        "F20" => Ok(metacyclic(5, 4, 0, 2)?
            .with_generator_names(&["a", "g"])?
            .with_name("F20")),
        "A4" => {
            let n = direct_product(&cyclic(2)?, &cyclic(2)?)?;
            let act = auto_from_words(&n, &["b", "ab"])?;
            Ok(semidirect_product(&n, &cyclic(3)?, &[act])?.with_name("A4"))
        }
        _ => {
            if let Some(n) = name.strip_prefix('Z').and_then(num) {
                return cyclic(n);
            }
            if let Some(n) = name.strip_prefix('D').and_then(num) {
                return dihedral(n);
            }
            Err(Error::UnknownName(name.to_string()))
        }
    }
}

/// Looks up a group by catalog name.
///
/// Recognized names: `H1`..`H8` and `H9(p)` (the small-order table rows),
/// `O16_1`..`O16_6` (non-abelian order-16 groups containing `D8` or `Q8`),
/// `H1(p)`, `H2(p)`, `H3(p)` (non-abelian groups of order `2p^2`),
/// `H6(e1,e2)` sign variants, the basic groups `Zn`, `D2n`, `Q8`, `Q16`,
/// `SD16`, `F20`, `A4`, and direct products of basic groups joined by `x`
/// such as `D6xZ3` or `Q8xZ2xZ2`.
pub fn atlas(name: &str) -> Result<FiniteGroup> {
    let name = name.trim();
    let named = |g: FiniteGroup| g.with_name(name);
    match name {
        "H1" | "O16_1" => return Ok(named(direct_product(&dihedral(8)?, &cyclic(2)?)?)),
        "H2" | "O16_2" => return Ok(named(order16_commutator_group()?)),
        "H3" | "O16_3" => return Ok(named(basic_factor("Q16")?)),
        "H4" | "O16_4" => return Ok(named(basic_factor("SD16")?)),
        "H5" => return Ok(named(atlas("Q8xZ2xZ2")?)),
        "O16_5" => return Ok(named(dihedral(16)?)),
        "O16_6" => return Ok(named(q8_cross_zp(2)?)),
        "H6" => return Ok(named(q8_by_z3(1, 1)?)),
        "H7" => return Ok(named(basic_factor("A4")?)),
        "H8" => return Ok(named(basic_factor("F20")?)),
        _ => {}
    }
    if let Some(args) = name.strip_prefix("H6(").and_then(|s| s.strip_suffix(')')) {
        let signs: Vec<i32> = args
            .split(',')
            .map(|s| s.trim().parse::<i32>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| Error::UnknownName(name.to_string()))?;
        if signs.len() == 2 && signs.iter().all(|s| s.abs() == 1) {
            return Ok(named(q8_by_z3(signs[0], signs[1])?));
        }
        return Err(Error::UnknownName(name.to_string()));
    }
    for (prefix, builder) in [
        (
            "H9(",
            generalized_dihedral_zp2 as fn(usize) -> Result<FiniteGroup>,
        ),
        ("H2(", generalized_dihedral_zp2),
        ("H3(", zp_cross_dihedral),
    ] {
        if let Some(p) = parse_param(name, prefix) {
            if !is_prime(p) || p == 2 {
                return Err(Error::InvalidSize(format!(
                    "{name}: p must be an odd prime"
                )));
            }
            let g = builder(p)?;
            let g = if prefix == "H9(" {
                g.with_generator_names(&["a", "c", "b"])?
            } else {
                g
            };
            return Ok(named(g));
        }
    }
    if let Some(p) = parse_param(name, "H1(") {
        if !is_prime(p) || p == 2 {
            return Err(Error::InvalidSize(format!(
                "{name}: p must be an odd prime"
            )));
        }
        return Ok(named(dihedral(2 * p * p)?));
    }
    let factors: Vec<&str> = name.split('x').collect();
    if factors.iter().any(|f| f.is_empty()) {
        return Err(Error::UnknownName(name.to_string()));
    }
    let mut group = basic_factor(factors[0]).map_err(|e| match e {
        Error::UnknownName(_) => Error::UnknownName(name.to_string()),
        other => other,
    })?;
    for f in &factors[1..] {
        let next = basic_factor(f).map_err(|e| match e {
            Error::UnknownName(_) => Error::UnknownName(name.to_string()),
            other => other,
        })?;
        group = direct_product(&group, &next)?;
    }
    Ok(named(group))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn word(g: &FiniteGroup, w: &str) -> Elem {
        g.parse_word(w).unwrap()
    }

    #[test]
    fn cyclic_one_is_trivial() {
        let g = cyclic(1).unwrap();
        assert_eq!(g.order(), 1);
        assert!(g.generators().is_empty());
        assert!(cyclic(0).is_err());
    }

    #[test]
    fn quaternion_has_one_involution() {
        let q = quaternion8();
        assert_eq!(q.order(), 8);
        assert_eq!(q.involutions().len(), 1);
        assert!(q.is_associative());
    }

    #[test]
    fn dihedral_twelve_has_seven_involutions() {
        let d = dihedral(12).unwrap();
        // oracle: count x != 1 with x*x == 1 directly on the table
        let n = d.order();
        let count = (1..n).filter(|&x| d.table()[x * n + x] == 0).count();
        assert_eq!(count, 7);
        assert_eq!(d.involutions().len(), 7);
        assert!(dihedral(6).is_ok());
        assert!(dihedral(7).is_err());
        assert!(dihedral(2).is_err());
    }

    #[test]
    fn q8_cross_z2_has_three_involutions() {
        let g = q8_cross_zp(2).unwrap();
        assert_eq!(g.order(), 16);
        assert_eq!(g.involutions().len(), 3);
    }

    #[test]
    fn direct_product_with_trivial_factor() {
        let h = dihedral(8).unwrap();
        let g = direct_product(&cyclic(1).unwrap(), &h).unwrap();
        assert_eq!(g.table(), h.table());
    }

    #[test]
    fn semidirect_with_trivial_action_is_direct() {
        let n = cyclic(5).unwrap();
        let k = cyclic(4).unwrap();
        let sd = semidirect_product(&n, &k, &[GroupAutomorphism::identity(&n)]).unwrap();
        let dp = direct_product(&n, &k).unwrap();
        assert_eq!(sd.table(), dp.table());
    }

    #[test]
    fn frobenius_twenty_from_semidirect() {
        let n = cyclic(5).unwrap();
        let k = cyclic(4).unwrap();
        let act = auto_from_words(&n, &["a^2"]).unwrap();
        let f = semidirect_product(&n, &k, &[act]).unwrap();
        assert_eq!(f.order(), 20);
        let (a, g) = (word(&f, "a"), word(&f, "b"));
        assert_eq!(f.conj(a, g), f.pow(a, 2));
        assert!(f.center() == vec![0]);
    }

    #[test]
    fn ill_defined_action_is_rejected() {
        // a -> a^2 has order 4 in Aut(Z5) so it cannot be a Z3 action.
        let n = cyclic(5).unwrap();
        let act = auto_from_words(&n, &["a^2"]).unwrap();
        assert!(matches!(
            semidirect_product(&n, &cyclic(3).unwrap(), &[act]),
            Err(Error::ActionNotWellDefined(_))
        ));
    }

    #[test]
    fn q8_by_z3_has_q8_normal() {
        let g = q8_by_z3(1, 1).unwrap();
        assert_eq!(g.order(), 24);
        let q8 = g.closure(&[word(&g, "a"), word(&g, "b")]);
        assert_eq!(q8.len(), 8);
        for &x in &q8 {
            for y in g.elements() {
                assert!(q8.contains(&g.conj(x, y)));
            }
        }
    }

    #[test]
    fn automorphism_group_orders() {
        assert_eq!(group_automorphisms(&quaternion8()).unwrap().len(), 24);
        assert_eq!(group_automorphisms(&dihedral(8).unwrap()).unwrap().len(), 8);
        assert_eq!(
            group_automorphisms(&q8_cross_zp(2).unwrap()).unwrap().len(),
            192
        );
        assert_eq!(group_automorphisms(&cyclic(1).unwrap()).unwrap().len(), 1);
        assert!(matches!(
            group_automorphisms(&dihedral(130).unwrap()),
            Err(Error::ScaleExceeded(_))
        ));
    }

    #[test]
    fn unknown_names_are_errors() {
        assert!(matches!(atlas("H10"), Err(Error::UnknownName(_))));
        assert!(matches!(atlas("Q9xZ2"), Err(Error::UnknownName(_))));
        assert!(atlas("H9(4)").is_err());
    }

    #[test]
    fn catalog_orders() {
        assert_eq!(atlas("H7").unwrap().order(), 12);
        assert_eq!(atlas("H1(3)").unwrap().order(), 18);
        assert_eq!(atlas("H3(5)").unwrap().order(), 50);
        assert_eq!(atlas("D6xZ3").unwrap().order(), 18);
        assert_eq!(atlas("Z2xZ4").unwrap().order(), 8);
    }
}
