//! Finite groups as explicit multiplication tables.
//!
//! Elements are indices `0..order` with `0` the identity. Every group
//! carries named generators and a normal form: each element is named by a
//! word `g1^e1 g2^e2 ...` in the generator order with `0 <= ei < bound_i`,
//! so connection sets written as words parse deterministically.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::permgroup::PermGroup;

/// Index of a group element.
pub type Elem = usize;

/// A named generator of a [`FiniteGroup`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Generator {
    pub name: String,
    pub element: Elem,
}

/// A finite group given by its multiplication table.
#[derive(Clone)]
pub struct FiniteGroup {
    name: String,
    order: usize,
    table: Vec<u32>,
    inverses: Vec<u32>,
    generators: Vec<Generator>,
    /// Normal-form exponent bound per generator.
    bounds: Vec<u32>,
    element_names: Vec<String>,
    name_index: HashMap<String, Elem>,
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("name", &self.name)
            .field("order", &self.order)
            .field("generators", &self.generators)
            .finish()
    }
}

impl FiniteGroup {
    /// Builds a group from a table whose identity is element `0`.
    ///
    /// `generators` pairs names with elements; `bounds` gives the
    /// normal-form exponent range of each generator and must multiply to
    /// the order, with every exponent tuple naming a distinct element.
    pub fn from_table(
        name: impl Into<String>,
        order: usize,
        table: Vec<u32>,
        generators: Vec<Generator>,
        bounds: Vec<u32>,
    ) -> Result<Self> {
        let name = name.into();
        if order == 0 || table.len() != order * order {
            return Err(Error::InvalidSize(format!(
                "table of length {} for order {order}",
                table.len()
            )));
        }
        if generators.len() != bounds.len() {
            return Err(Error::InvalidSize(
                "one normal-form bound per generator required".into(),
            ));
        }
        for i in 0..order {
            if table[i] as usize != i || table[i * order] as usize != i {
                return Err(Error::InvalidSize(format!(
                    "element 0 is not the identity of {name}"
                )));
            }
        }
        let mut inverses = vec![u32::MAX; order];
        for x in 0..order {
            for y in 0..order {
                if table[x * order + y] == 0 {
                    inverses[x] = y as u32;
                    break;
                }
            }
            if inverses[x] == u32::MAX {
                return Err(Error::InvalidSize(format!("element {x} has no inverse")));
            }
        }
        let mut group = FiniteGroup {
            name,
            order,
            table,
            inverses,
            generators,
            bounds,
            element_names: Vec::new(),
            name_index: HashMap::new(),
        };
        group.assign_names()?;
        Ok(group)
    }

    fn assign_names(&mut self) -> Result<()> {
        let total: usize = self.bounds.iter().map(|&b| b as usize).product();
        if total != self.order {
            return Err(Error::InvalidSize(format!(
                "normal-form bounds {:?} do not multiply to {}",
                self.bounds, self.order
            )));
        }
        let mut names = vec![String::new(); self.order];
        let mut assigned = vec![false; self.order];
        let k = self.bounds.len();
        let mut exps = vec![0u32; k];
        loop {
            let mut x = 0;
            let mut word = String::new();
            for (i, &e) in exps.iter().enumerate() {
                let g = self.generators[i].element;
                for _ in 0..e {
                    x = self.mul(x, g);
                }
                if e == 1 {
                    word.push_str(&self.generators[i].name);
                } else if e > 1 {
                    word.push_str(&format!("{}^{}", self.generators[i].name, e));
                }
            }
            if assigned[x] {
                return Err(Error::InvalidSize(format!(
                    "normal form of {} is not unique at {word}",
                    self.name
                )));
            }
            assigned[x] = true;
            names[x] = if word.is_empty() {
                "1".to_string()
            } else {
                word
            };
            // next exponent tuple, last generator fastest
            let mut i = k;
            loop {
                if i == 0 {
                    self.name_index = names
                        .iter()
                        .enumerate()
                        .map(|(i, n)| (n.clone(), i))
                        .collect();
                    self.element_names = names;
                    return Ok(());
                }
                i -= 1;
                exps[i] += 1;
                if exps[i] < self.bounds[i] {
                    break;
                }
                exps[i] = 0;
            }
        }
    }

    /// Renames generators in order, recomputing element names.
    pub fn with_generator_names(mut self, names: &[&str]) -> Result<Self> {
        if names.len() != self.generators.len() {
            return Err(Error::InvalidSize(format!(
                "{} generator names for {} generators",
                names.len(),
                self.generators.len()
            )));
        }
        for (g, n) in self.generators.iter_mut().zip(names) {
            g.name = n.to_string();
        }
        self.assign_names()?;
        Ok(self)
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn identity(&self) -> Elem {
        0
    }

    #[inline]
    pub fn mul(&self, x: Elem, y: Elem) -> Elem {
        self.table[x * self.order + y] as usize
    }

    #[inline]
    pub fn inv(&self, x: Elem) -> Elem {
        self.inverses[x] as usize
    }

    pub fn pow(&self, x: Elem, e: i64) -> Elem {
        let base = if e < 0 { self.inv(x) } else { x };
        let mut r = 0;
        for _ in 0..e.unsigned_abs() {
            r = self.mul(r, base);
        }
        r
    }

    /// `y^{-1} x y`.
    pub fn conj(&self, x: Elem, y: Elem) -> Elem {
        self.mul(self.mul(self.inv(y), x), y)
    }

    /// `x^{-1} y^{-1} x y`.
    pub fn commutator(&self, x: Elem, y: Elem) -> Elem {
        self.mul(self.mul(self.inv(x), self.inv(y)), self.mul(x, y))
    }

    pub fn element_order(&self, x: Elem) -> usize {
        let mut k = 1;
        let mut y = x;
        while y != 0 {
            y = self.mul(y, x);
            k += 1;
        }
        k
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        0..self.order
    }

    pub fn table(&self) -> &[u32] {
        &self.table
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn generator_elements(&self) -> Vec<Elem> {
        self.generators.iter().map(|g| g.element).collect()
    }

    pub fn normal_form_bounds(&self) -> &[u32] {
        &self.bounds
    }

    pub fn generator(&self, name: &str) -> Option<Elem> {
        self.generators
            .iter()
            .find(|g| g.name == name)
            .map(|g| g.element)
    }

    pub fn element_name(&self, x: Elem) -> &str {
        &self.element_names[x]
    }

    pub fn element_names(&self) -> &[String] {
        &self.element_names
    }

    /// Looks up an element by its exact normal-form name.
    pub fn element_by_name(&self, name: &str) -> Option<Elem> {
        self.name_index.get(name).copied()
    }

    /// Evaluates a word such as `abc^-1`, `a^{-1}bc^2`, `b^{-1}` or `1`.
    pub fn parse_word(&self, word: &str) -> Result<Elem> {
        let err = |reason: &str| Error::WordParse {
            word: word.to_string(),
            reason: reason.to_string(),
        };
        let chars: Vec<char> = word.chars().filter(|c| !c.is_whitespace()).collect();
        if chars.is_empty() {
            return Err(err("empty word"));
        }
        if chars == ['1'] {
            return Ok(0);
        }
        let mut x = 0;
        let mut i = 0;
        while i < chars.len() {
            let c = chars[i];
            if c == '*' || c == '.' {
                i += 1;
                continue;
            }
            if c == '1' {
                i += 1;
                continue;
            }
            let mut factor = if c == '(' {
                let mut depth = 1;
                let mut j = i + 1;
                while j < chars.len() && depth > 0 {
                    match chars[j] {
                        '(' => depth += 1,
                        ')' => depth -= 1,
                        _ => {}
                    }
                    j += 1;
                }
                if depth != 0 {
                    return Err(err("unbalanced parentheses"));
                }
                let inner: String = chars[i + 1..j - 1].iter().collect();
                i = j;
                self.parse_word(&inner)?
            } else if c.is_alphabetic() {
                let g = self
                    .generator(&c.to_string())
                    .ok_or_else(|| err(&format!("unknown generator `{c}`")))?;
                i += 1;
                g
            } else {
                return Err(err(&format!("unexpected character `{c}`")));
            };
            if i < chars.len() && chars[i] == '^' {
                i += 1;
                let braced = i < chars.len() && chars[i] == '{';
                if braced {
                    i += 1;
                }
                let start = i;
                if i < chars.len() && (chars[i] == '-' || chars[i] == '+') {
                    i += 1;
                }
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let exp: String = chars[start..i].iter().collect();
                let e: i64 = exp.parse().map_err(|_| err("bad exponent"))?;
                if braced {
                    if i >= chars.len() || chars[i] != '}' {
                        return Err(err("unclosed exponent brace"));
                    }
                    i += 1;
                }
                factor = self.pow(factor, e);
            }
            x = self.mul(x, factor);
        }
        Ok(x)
    }

    /// Parses a comma-separated word list, optionally wrapped in braces.
    pub fn parse_set(&self, text: &str) -> Result<Vec<Elem>> {
        let trimmed = text.trim().trim_start_matches('{').trim_end_matches('}');
        if trimmed.trim().is_empty() {
            return Ok(Vec::new());
        }
        let mut out = trimmed
            .split(',')
            .map(|w| self.parse_word(w.trim()))
            .collect::<Result<Vec<_>>>()?;
        out.sort_unstable();
        out.dedup();
        Ok(out)
    }

    pub fn is_abelian(&self) -> bool {
        let gens = self.generator_elements();
        gens.iter()
            .all(|&x| gens.iter().all(|&y| self.mul(x, y) == self.mul(y, x)))
    }

    /// Smallest subgroup containing `seed`, as a sorted element list.
    pub fn closure(&self, seed: &[Elem]) -> Vec<Elem> {
        let mut inside = vec![false; self.order];
        inside[0] = true;
        let mut members = vec![0];
        let gens: Vec<Elem> = seed.iter().copied().filter(|&s| s != 0).collect();
        let mut queue = VecDeque::from([0]);
        while let Some(x) = queue.pop_front() {
            for &s in &gens {
                let y = self.mul(x, s);
                if !inside[y] {
                    inside[y] = true;
                    members.push(y);
                    queue.push_back(y);
                }
            }
        }
        members.sort_unstable();
        members
    }

    pub fn center(&self) -> Vec<Elem> {
        let gens = self.generator_elements();
        self.elements()
            .filter(|&z| gens.iter().all(|&g| self.mul(z, g) == self.mul(g, z)))
            .collect()
    }

    pub fn involutions(&self) -> Vec<Elem> {
        self.elements()
            .filter(|&x| x != 0 && self.mul(x, x) == 0)
            .collect()
    }

    /// Checks associativity exhaustively up to order 64, on a fixed
    /// pseudo-random sample of `10^4` triples above that.
    pub fn is_associative(&self) -> bool {
        let n = self.order;
        let check =
            |x: Elem, y: Elem, z: Elem| self.mul(self.mul(x, y), z) == self.mul(x, self.mul(y, z));
        if n <= 64 {
            (0..n).all(|x| (0..n).all(|y| (0..n).all(|z| check(x, y, z))))
        } else {
            let mut state = 0x9e37_79b9_7f4a_7c15u64;
            let mut next = || {
                state ^= state << 13;
                state ^= state >> 7;
                state ^= state << 17;
                (state % n as u64) as usize
            };
            (0..10_000).all(|_| {
                let (x, y, z) = (next(), next(), next());
                check(x, y, z)
            })
        }
    }

    /// Whether the generators generate the whole group.
    pub fn generators_generate(&self) -> bool {
        self.closure(&self.generator_elements()).len() == self.order
    }

    /// Right translations `R(g): h -> hg` as a permutation group on the
    /// element indices.
    pub fn right_regular_representation(&self) -> PermGroup {
        let gens: Vec<Permutation> = self
            .generator_elements()
            .into_iter()
            .map(|g| self.right_translation(g))
            .collect();
        PermGroup::from_generators(self.order, &gens).expect("degrees agree")
    }

    pub fn right_translation(&self, g: Elem) -> Permutation {
        Permutation::from_images_unchecked((0..self.order).map(|h| self.mul(h, g) as u32).collect())
    }

    /// The subgroup on `elements` (which must be closed) as a group of its
    /// own, with the given generators. Returns the group and the embedding
    /// of its element indices into `self`.
    pub fn subgroup(&self, elements: &[Elem], gens: &[Elem]) -> Result<(FiniteGroup, Vec<Elem>)> {
        let mut embed: Vec<Elem> = elements.to_vec();
        embed.sort_unstable();
        embed.dedup();
        if embed.first() != Some(&0) {
            return Err(Error::InvalidSize(
                "subgroup must contain the identity".into(),
            ));
        }
        let m = embed.len();
        let mut local = vec![u32::MAX; self.order];
        for (i, &x) in embed.iter().enumerate() {
            local[x] = i as u32;
        }
        let mut table = Vec::with_capacity(m * m);
        for &x in &embed {
            for &y in &embed {
                let z = local[self.mul(x, y)];
                if z == u32::MAX {
                    return Err(Error::InvalidSize("element set is not closed".into()));
                }
                table.push(z);
            }
        }
        // Word names in the subgroup are inherited from the parent, so the
        // normal form is the trivial one over all elements.
        let gens: Vec<Generator> = gens
            .iter()
            .filter(|&&g| g != 0)
            .map(|&g| Generator {
                name: self.element_name(g).to_string(),
                element: local[g] as usize,
            })
            .collect();
        let name = format!(
            "<{}> in {}",
            gens.iter()
                .map(|g| g.name.clone())
                .collect::<Vec<_>>()
                .join(","),
            self.name
        );
        let sub = FiniteGroup::subgroup_from_parts(name, m, table, gens, &embed, self)?;
        Ok((sub, embed))
    }

    fn subgroup_from_parts(
        name: String,
        order: usize,
        table: Vec<u32>,
        generators: Vec<Generator>,
        embed: &[Elem],
        parent: &FiniteGroup,
    ) -> Result<Self> {
        let mut inverses = vec![0u32; order];
        for x in 0..order {
            for y in 0..order {
                if table[x * order + y] == 0 {
                    inverses[x] = y as u32;
                }
            }
        }
        let element_names: Vec<String> = embed
            .iter()
            .map(|&x| parent.element_name(x).to_string())
            .collect();
        let name_index = element_names
            .iter()
            .enumerate()
            .map(|(i, n)| (n.clone(), i))
            .collect();
        Ok(FiniteGroup {
            name,
            order,
            table,
            inverses,
            generators,
            bounds: Vec::new(),
            element_names,
            name_index,
        })
    }

    /// JSON export: `{name, order, generators, table}`.
    pub fn to_json(&self) -> serde_json::Value {
        let rows: Vec<Vec<u32>> = self.table.chunks(self.order).map(|r| r.to_vec()).collect();
        serde_json::json!({
            "name": self.name,
            "order": self.order,
            "generators": self.generators,
            "elements": self.element_names,
            "table": rows,
        })
    }
}

#[cfg(test)]
mod tests {
    use crate::atlas;

    #[test]
    fn parses_words_with_exponents() {
        let q = atlas::q8_cross_zp(7).unwrap();
        let a = q.generator("a").unwrap();
        let b = q.generator("b").unwrap();
        let c = q.generator("c").unwrap();
        let abc_inv = q.mul(q.mul(a, b), q.inv(c));
        assert_eq!(q.parse_word("abc^-1").unwrap(), abc_inv);
        assert_eq!(q.parse_word("abc^{-1}").unwrap(), abc_inv);
        assert_eq!(q.parse_word("(ab)c^{-1}").unwrap(), abc_inv);
        assert_eq!(q.parse_word("1").unwrap(), 0);
        assert!(q.parse_word("axz").is_err());
        assert!(q.parse_word("a^").is_err());
    }

    #[test]
    fn normal_form_names_round_trip() {
        let g = atlas::dihedral(12).unwrap();
        for x in g.elements() {
            assert_eq!(g.parse_word(g.element_name(x)).unwrap(), x);
        }
    }

    #[test]
    fn closure_of_empty_is_trivial() {
        let g = atlas::quaternion8();
        assert_eq!(g.closure(&[]), vec![0]);
    }
}
