//! Cayley, bi-Cayley and Haar graphs, the translation group `R(H)`, the
//! candidate automorphisms `δ_{α,x,y}` and `σ_{α,g}`, and the local
//! structure (neighbourhoods, 4-cycles, `S^{-1}S`) used to tell vertices
//! apart.
//!
//! A bi-Cayley graph on `H` has vertices `h_0` and `h_1`, encoded as
//! `2h` and `2h + 1`.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::atlas::GroupAutomorphism;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::group::{Elem, FiniteGroup};
use crate::perm::Permutation;
use crate::permgroup::PermGroup;

/// Budget on set-equation checks in [`compute_f`] and [`compute_i`].
pub const CANDIDATE_CHECK_LIMIT: u64 = 100_000_000;

#[inline]
pub fn vertex(h: Elem, part: usize) -> usize {
    2 * h + part
}

#[inline]
pub fn split_vertex(v: usize) -> (Elem, usize) {
    (v / 2, v % 2)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Role {
    R,
    L,
    S,
}

/// A subset of a group, tagged with the role it plays in a bi-Cayley graph.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ConnectionSet {
    elements: Vec<Elem>,
    role: Role,
}

impl ConnectionSet {
    /// Validates `elements` for `role`: `R` and `L` sets must be
    /// inverse-closed and avoid the identity.
    pub fn new(group: &FiniteGroup, elements: &[Elem], role: Role) -> Result<Self> {
        let mut elements = elements.to_vec();
        elements.sort_unstable();
        elements.dedup();
        if let Some(&x) = elements.iter().find(|&&x| x >= group.order()) {
            return Err(Error::InvalidConnectionSet(format!(
                "element {x} out of range"
            )));
        }
        if matches!(role, Role::R | Role::L) {
            if elements.contains(&group.identity()) {
                return Err(Error::InvalidConnectionSet(format!(
                    "{role:?} set contains the identity"
                )));
            }
            if let Some(&x) = elements
                .iter()
                .find(|&&x| elements.binary_search(&group.inv(x)).is_err())
            {
                return Err(Error::InvalidConnectionSet(format!(
                    "{role:?} set is not inverse-closed: missing inverse of {}",
                    group.element_name(x)
                )));
            }
        }
        Ok(ConnectionSet { elements, role })
    }

    pub fn spokes(group: &FiniteGroup, elements: &[Elem]) -> Result<Self> {
        Self::new(group, elements, Role::S)
    }

    /// Parses a word list such as `1,a,b,c,abc`. For a cyclic group with
    /// generator `a`, a list made only of integers such as `0,1,3` is read
    /// as residues `a^i`.
    pub fn parse(group: &FiniteGroup, text: &str, role: Role) -> Result<Self> {
        let body = text.trim().trim_start_matches('{').trim_end_matches('}');
        let tokens: Vec<&str> = body
            .split(',')
            .map(str::trim)
            .filter(|t| !t.is_empty())
            .collect();
        let cyclic =
            group.generators().len() == 1 && group.normal_form_bounds() == [group.order() as u32];
        if cyclic
            && !tokens.is_empty()
            && tokens.iter().all(|t| t.bytes().all(|b| b.is_ascii_digit()))
        {
            let a = group.generator_elements()[0];
            let elems = tokens
                .iter()
                .map(|t| t.parse::<i64>().map(|i| group.pow(a, i)))
                .collect::<std::result::Result<Vec<_>, _>>()
                .map_err(|e| Error::WordParse {
                    word: text.to_string(),
                    reason: e.to_string(),
                })?;
            return Self::new(group, &elems, role);
        }
        Self::new(group, &group.parse_set(text)?, role)
    }

    pub fn elements(&self) -> &[Elem] {
        &self.elements
    }

    pub fn role(&self) -> Role {
        self.role
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, x: Elem) -> bool {
        self.elements.binary_search(&x).is_ok()
    }

    /// Word form such as `{1,a,b}`.
    pub fn display(&self, group: &FiniteGroup) -> String {
        format!("{{{}}}", self.names(group).join(","))
    }

    pub fn names(&self, group: &FiniteGroup) -> Vec<String> {
        self.elements
            .iter()
            .map(|&x| group.element_name(x).to_string())
            .collect()
    }
}

/// A graph on `H_0 ∪ H_1` built from a group.
#[derive(Clone, Debug)]
pub struct BiGraph {
    group: Arc<FiniteGroup>,
    graph: Graph,
}

impl BiGraph {
    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn shared_group(&self) -> Arc<FiniteGroup> {
        Arc::clone(&self.group)
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn into_graph(self) -> Graph {
        self.graph
    }

    /// `|H|`.
    pub fn half_order(&self) -> usize {
        self.group.order()
    }

    pub fn vertex_name(&self, v: usize) -> String {
        let (h, part) = split_vertex(v);
        let name = self.group.element_name(h);
        if name.len() > 1 {
            format!("({name})_{part}")
        } else {
            format!("{name}_{part}")
        }
    }

    /// Parses `h_0`, `(abc)_1`, `a^{-1}_0`, ...
    pub fn parse_vertex(&self, text: &str) -> Result<usize> {
        let t = text.trim();
        let (word, part) = t.rsplit_once('_').ok_or_else(|| Error::WordParse {
            word: t.to_string(),
            reason: "missing part suffix _0 or _1".into(),
        })?;
        let part: usize = match part {
            "0" => 0,
            "1" => 1,
            _ => {
                return Err(Error::WordParse {
                    word: t.to_string(),
                    reason: "part must be 0 or 1".into(),
                })
            }
        };
        Ok(vertex(self.group.parse_word(word)?, part))
    }

    pub fn is_connected(&self) -> bool {
        self.graph.is_connected()
    }

    pub fn to_dot(&self) -> String {
        self.graph.to_dot(
            |v| self.vertex_name(v),
            |v| if v % 2 == 0 { "lightblue" } else { "salmon" },
        )
    }
}

/// `Cay(H, R)`: `h ~ xh` for `x` in `R`.
pub fn cayley_graph(group: &FiniteGroup, r: &ConnectionSet) -> Result<Graph> {
    let r = ConnectionSet::new(group, r.elements(), Role::R)?;
    let mut g = Graph::empty(group.order());
    for h in group.elements() {
        for &x in r.elements() {
            let y = group.mul(x, h);
            if h < y {
                g.add_edge(h, y)?;
            }
        }
    }
    Ok(g.normalize())
}

/// `BiCay(H, R, L, S)`: right edges `h_0 ~ (xh)_0` (`x ∈ R`), left edges
/// `h_1 ~ (xh)_1` (`x ∈ L`), spokes `h_0 ~ (xh)_1` (`x ∈ S`).
pub fn bicayley_graph(
    group: Arc<FiniteGroup>,
    r: &ConnectionSet,
    l: &ConnectionSet,
    s: &ConnectionSet,
) -> Result<BiGraph> {
    let r = ConnectionSet::new(&group, r.elements(), Role::R)?;
    let l = ConnectionSet::new(&group, l.elements(), Role::L)?;
    if s.is_empty() {
        return Err(Error::EmptyConnectionSet);
    }
    let mut g = Graph::empty(2 * group.order());
    for h in group.elements() {
        for &x in r.elements() {
            g.add_edge(vertex(h, 0), vertex(group.mul(x, h), 0))?;
        }
        for &x in l.elements() {
            g.add_edge(vertex(h, 1), vertex(group.mul(x, h), 1))?;
        }
        for &x in s.elements() {
            g.add_edge(vertex(h, 0), vertex(group.mul(x, h), 1))?;
        }
    }
    Ok(BiGraph {
        group,
        graph: g.normalize(),
    })
}

/// `H(H, S) = BiCay(H, ∅, ∅, S)`.
pub fn haar_graph(group: Arc<FiniteGroup>, s: &ConnectionSet) -> Result<BiGraph> {
    if s.is_empty() {
        return Err(Error::EmptyConnectionSet);
    }
    let empty_r = ConnectionSet::new(&group, &[], Role::R)?;
    let empty_l = ConnectionSet::new(&group, &[], Role::L)?;
    bicayley_graph(group, &empty_r, &empty_l, s)
}

/// Translates `S` to `x^{-1} S` for the least `x ∈ S`, so that it
/// contains the identity; the Haar graphs of both sets are isomorphic via
/// `h_0 -> h_0`, `h_1 -> (x^{-1} h)_1`.
pub fn normalize_connection_set(group: &FiniteGroup, s: &ConnectionSet) -> Result<ConnectionSet> {
    let &x = s.elements().first().ok_or(Error::EmptyConnectionSet)?;
    if s.contains(group.identity()) {
        return Ok(s.clone());
    }
    let xi = group.inv(x);
    let moved: Vec<Elem> = s.elements().iter().map(|&y| group.mul(xi, y)).collect();
    ConnectionSet::new(group, &moved, Role::S)
}

/// The isomorphism `H(H, S) -> H(H, x^{-1} S)` used by
/// [`normalize_connection_set`].
pub fn normalization_isomorphism(group: &FiniteGroup, s: &ConnectionSet) -> Permutation {
    let x = if s.contains(group.identity()) {
        group.identity()
    } else {
        s.elements()[0]
    };
    let xi = group.inv(x);
    let mut images = vec![0u32; 2 * group.order()];
    for h in group.elements() {
        images[vertex(h, 0)] = vertex(h, 0) as u32;
        images[vertex(h, 1)] = vertex(group.mul(xi, h), 1) as u32;
    }
    Permutation::from_images_unchecked(images)
}

/// `R(g): h_i -> (hg)_i`.
pub fn right_translation(group: &FiniteGroup, g: Elem) -> Permutation {
    let mut images = vec![0u32; 2 * group.order()];
    for h in group.elements() {
        let hg = group.mul(h, g);
        images[vertex(h, 0)] = vertex(hg, 0) as u32;
        images[vertex(h, 1)] = vertex(hg, 1) as u32;
    }
    Permutation::from_images_unchecked(images)
}

/// `R(H)` acting on `2|H|` vertices.
pub fn rh_action(group: &FiniteGroup) -> PermGroup {
    let gens: Vec<Permutation> = group
        .generator_elements()
        .into_iter()
        .map(|g| right_translation(group, g))
        .collect();
    PermGroup::from_generators(2 * group.order(), &gens).expect("degrees agree")
}

/// Whether `p` equals `R(g)` for some `g`.
pub fn is_right_translation(group: &FiniteGroup, p: &Permutation) -> bool {
    if p.degree() != 2 * group.order() {
        return false;
    }
    let (g, part) = split_vertex(p.apply(vertex(group.identity(), 0)));
    part == 0 && right_translation(group, g) == *p
}

/// `δ_{α,x,y}: h_0 -> (x h^α)_1, h_1 -> (y h^α)_0`.
pub fn delta_map(group: &FiniteGroup, alpha: &GroupAutomorphism, x: Elem, y: Elem) -> Permutation {
    let mut images = vec![0u32; 2 * group.order()];
    for h in group.elements() {
        let ha = alpha.apply(h);
        images[vertex(h, 0)] = vertex(group.mul(x, ha), 1) as u32;
        images[vertex(h, 1)] = vertex(group.mul(y, ha), 0) as u32;
    }
    Permutation::from_images_unchecked(images)
}

/// `σ_{α,g}: h_0 -> (h^α)_0, h_1 -> (g h^α)_1`.
pub fn sigma_map(group: &FiniteGroup, alpha: &GroupAutomorphism, g: Elem) -> Permutation {
    let mut images = vec![0u32; 2 * group.order()];
    for h in group.elements() {
        let ha = alpha.apply(h);
        images[vertex(h, 0)] = vertex(ha, 0) as u32;
        images[vertex(h, 1)] = vertex(group.mul(g, ha), 1) as u32;
    }
    Permutation::from_images_unchecked(images)
}

/// A subset of group elements as a bitmask.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub(crate) struct ElemSet(Vec<u64>);

impl ElemSet {
    pub(crate) fn from_iter(order: usize, it: impl IntoIterator<Item = Elem>) -> Self {
        let mut words = vec![0u64; order.div_ceil(64).max(1)];
        for x in it {
            words[x / 64] |= 1 << (x % 64);
        }
        ElemSet(words)
    }
}

/// A member of `F`: `σ_{α,g}` with `S^α = g^{-1} S`.
#[derive(Clone, Debug)]
pub struct FElement {
    pub alpha: GroupAutomorphism,
    pub g: Elem,
}

/// A member of `I`: `δ_{α,x,y}` with `S^α = y^{-1} S^{-1} x`.
#[derive(Clone, Debug)]
pub struct IElement {
    pub alpha: GroupAutomorphism,
    pub x: Elem,
    pub y: Elem,
}

impl FElement {
    pub fn permutation(&self, group: &FiniteGroup) -> Permutation {
        sigma_map(group, &self.alpha, self.g)
    }
}

impl IElement {
    pub fn permutation(&self, group: &FiniteGroup) -> Permutation {
        delta_map(group, &self.alpha, self.x, self.y)
    }
}

fn image_set(group: &FiniteGroup, alpha: &GroupAutomorphism, s: &ConnectionSet) -> ElemSet {
    ElemSet::from_iter(group.order(), s.elements().iter().map(|&x| alpha.apply(x)))
}

/// All `σ_{α,g}` with `S^α = g^{-1} S`. Requires `1 ∈ S`, which forces
/// `g ∈ S`.
pub fn compute_f(
    group: &FiniteGroup,
    auts: &[GroupAutomorphism],
    s: &ConnectionSet,
) -> Result<Vec<FElement>> {
    require_identity(group, s)?;
    let checks = auts.len() as u64 * s.len() as u64;
    if checks > CANDIDATE_CHECK_LIMIT {
        return Err(Error::ScaleExceeded(format!(
            "{checks} candidate checks for F"
        )));
    }
    let targets: Vec<(Elem, ElemSet)> = s
        .elements()
        .iter()
        .map(|&g| {
            let gi = group.inv(g);
            (
                g,
                ElemSet::from_iter(
                    group.order(),
                    s.elements().iter().map(|&t| group.mul(gi, t)),
                ),
            )
        })
        .collect();
    let mut out = Vec::new();
    for alpha in auts {
        let img = image_set(group, alpha, s);
        for (g, target) in &targets {
            if img == *target {
                out.push(FElement {
                    alpha: alpha.clone(),
                    g: *g,
                });
            }
        }
    }
    Ok(out)
}

/// All `δ_{α,x,y}` with `S^α = y^{-1} S^{-1} x`. Since `1 ∈ S`, `x = s y`
/// for some `s ∈ S`, so the search runs over `α`, `y` and `s`.
pub fn compute_i(
    group: &FiniteGroup,
    auts: &[GroupAutomorphism],
    s: &ConnectionSet,
) -> Result<Vec<IElement>> {
    require_identity(group, s)?;
    let checks = auts.len() as u64 * group.order() as u64 * s.len() as u64;
    if checks > CANDIDATE_CHECK_LIMIT {
        return Err(Error::ScaleExceeded(format!(
            "{checks} candidate checks for I"
        )));
    }
    // target sets y^{-1} S^{-1} x, keyed for lookup against S^α
    let mut targets: std::collections::HashMap<ElemSet, Vec<(Elem, Elem)>> =
        std::collections::HashMap::new();
    for y in group.elements() {
        let yi = group.inv(y);
        for &t in s.elements() {
            let x = group.mul(t, y);
            let set = ElemSet::from_iter(
                group.order(),
                s.elements()
                    .iter()
                    .map(|&u| group.mul(group.mul(yi, group.inv(u)), x)),
            );
            targets.entry(set).or_default().push((x, y));
        }
    }
    let mut out = Vec::new();
    for alpha in auts {
        if let Some(pairs) = targets.get(&image_set(group, alpha, s)) {
            for &(x, y) in pairs {
                out.push(IElement {
                    alpha: alpha.clone(),
                    x,
                    y,
                });
            }
        }
    }
    Ok(out)
}

fn require_identity(group: &FiniteGroup, s: &ConnectionSet) -> Result<()> {
    if !s.contains(group.identity()) {
        return Err(Error::InvalidConnectionSet(
            "S must contain the identity (normalize it first)".into(),
        ));
    }
    Ok(())
}

/// `S^{-1} S = {s^{-1} t : s, t ∈ S}`, sorted.
pub fn difference_set(group: &FiniteGroup, s: &ConnectionSet) -> Vec<Elem> {
    let mut out: Vec<Elem> = s
        .elements()
        .iter()
        .flat_map(|&a| {
            s.elements()
                .iter()
                .map(move |&b| group.mul(group.inv(a), b))
        })
        .collect();
    out.sort_unstable();
    out.dedup();
    out
}

/// `Γ(v)`, sorted.
pub fn neighborhood(graph: &Graph, v: usize) -> Result<Vec<usize>> {
    if v >= graph.order() {
        return Err(Error::VertexOutOfRange(v));
    }
    let mut out: Vec<usize> = graph.neighbors(v).iter().map(|&w| w as usize).collect();
    out.sort_unstable();
    Ok(out)
}

/// Vertices at distance exactly 2 from `v`, sorted.
pub fn distance2_set(graph: &Graph, v: usize) -> Result<Vec<usize>> {
    if v >= graph.order() {
        return Err(Error::VertexOutOfRange(v));
    }
    let dist = graph.distances_from(v);
    Ok((0..graph.order()).filter(|&w| dist[w] == 2).collect())
}

fn common_neighbors(graph: &Graph, a: usize, b: usize) -> usize {
    let ra = graph.adjacency_row(a);
    let rb = graph.adjacency_row(b);
    ra.intersection(rb).count()
}

/// A figure whose 4-cycles are counted.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Figure {
    Vertex(usize),
    Edge(usize, usize),
    /// A path `a - v - b` through the middle vertex `v`.
    Path(usize, usize, usize),
}

/// Number of distinct 4-cycles containing the figure.
pub fn four_cycles_through(graph: &Graph, figure: Figure) -> Result<usize> {
    let check = |v: usize| {
        if v >= graph.order() {
            Err(Error::VertexOutOfRange(v))
        } else {
            Ok(())
        }
    };
    match figure {
        Figure::Vertex(v) => {
            check(v)?;
            // each 4-cycle v-a-x-b-v is fixed by the unordered pair {a, b}
            let nbrs = graph.neighbors(v);
            let mut total = 0;
            for (i, &a) in nbrs.iter().enumerate() {
                for &b in &nbrs[i + 1..] {
                    total += common_neighbors(graph, a as usize, b as usize) - 1;
                }
            }
            Ok(total)
        }
        Figure::Edge(u, w) => {
            check(u)?;
            check(w)?;
            if !graph.has_edge(u, w) {
                return Err(Error::NotAnEdge(u, w));
            }
            // cycles u-w-x-y-u with x ∈ Γ(w)\{u}, y ∈ Γ(u) ∩ Γ(x) \ {w}
            let mut total = 0;
            for &x in graph.neighbors(w) {
                let x = x as usize;
                if x == u {
                    continue;
                }
                total += graph
                    .neighbors(u)
                    .iter()
                    .filter(|&&y| {
                        y as usize != w && y as usize != x && graph.has_edge(x, y as usize)
                    })
                    .count();
            }
            Ok(total)
        }
        Figure::Path(a, v, b) => {
            check(a)?;
            check(v)?;
            check(b)?;
            if !graph.has_edge(a, v) {
                return Err(Error::NotAnEdge(a, v));
            }
            if !graph.has_edge(v, b) {
                return Err(Error::NotAnEdge(v, b));
            }
            if a == b {
                return Ok(0);
            }
            Ok(common_neighbors(graph, a, b) - 1)
        }
    }
}
