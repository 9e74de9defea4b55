//! Vertex-transitivity, Cayley recognition (regular subgroups of the
//! automorphism group), GHRR detection and the normalizer of `R(H)`.

use std::collections::HashSet;
use std::sync::Arc;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::atlas::{group_automorphisms, GroupAutomorphism};
use crate::aut::{automorphism_search, find_isomorphism, DEFAULT_NODE_BUDGET};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::group::{Elem, FiniteGroup};
use crate::haar::{
    compute_f, compute_i, haar_graph, is_right_translation, normalization_isomorphism,
    normalize_connection_set, rh_action, right_translation, vertex, ConnectionSet,
};
use crate::perm::Permutation;
use crate::permgroup::PermGroup;

/// Closure steps allowed in the generic regular-subgroup search.
pub const SEARCH_BUDGET: u64 = 10_000_000;
/// Largest automorphism group enumerated by [`verify_normalizer`].
pub const NORMALIZER_ENUMERATION_CAP: u64 = 200_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum CayleyStatus {
    Cayley,
    NotCayley,
    UnknownBudget,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum NonCayleyReason {
    NotVertexTransitive,
    NoRegularSubgroup,
}

/// How a regular subgroup was found.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Method {
    /// `R(H)<δ>` for some `δ ∈ I` with `δ² ∈ R(H)`.
    DeltaShortcut,
    /// The automorphism group is itself regular.
    RegularAut,
    /// Backtracking over automorphisms.
    Search,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CayleyVerdict {
    pub status: CayleyStatus,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reason: Option<NonCayleyReason>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub method: Option<Method>,
    /// Generators of a regular subgroup, for `CAYLEY`.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub certificate: Vec<Permutation>,
    pub connected: bool,
    pub vertex_transitive: bool,
    /// Number of isomorphic components the certificate was lifted across.
    pub components: usize,
    pub aut_order: String,
    pub nodes_used: u64,
}

impl CayleyVerdict {
    fn unknown(connected: bool, nodes: u64) -> Self {
        CayleyVerdict {
            status: CayleyStatus::UnknownBudget,
            reason: None,
            method: None,
            certificate: Vec::new(),
            connected,
            vertex_transitive: false,
            components: 1,
            aut_order: String::new(),
            nodes_used: nodes,
        }
    }

    pub fn is_cayley(&self) -> bool {
        self.status == CayleyStatus::Cayley
    }
}

/// Whether `gens` generate a regular group of automorphisms of `graph`.
pub fn verify_certificate(graph: &Graph, gens: &[Permutation]) -> bool {
    let n = graph.order();
    if !gens
        .iter()
        .all(|g| g.degree() == n && graph.is_automorphism(g))
    {
        return false;
    }
    match PermGroup::from_generators(n, gens) {
        Ok(g) => g.order() == BigUint::from(n) && g.is_transitive() && g.is_semiregular(),
        Err(_) => false,
    }
}

/// One orbit of `Aut(graph)` on vertices.
pub fn is_vertex_transitive(graph: &Graph) -> Result<bool> {
    if graph.order() <= 1 {
        return Ok(true);
    }
    let d = graph.degree(0);
    if (0..graph.order()).any(|v| graph.degree(v) != d) {
        return Ok(false);
    }
    let aut = automorphism_search(graph, None, DEFAULT_NODE_BUDGET)?;
    Ok(aut.group.is_transitive())
}

enum Search {
    Found(Vec<Permutation>),
    Exhausted,
    Budget,
}

/// Explicit element set of a subgroup with trivial stabilizer of vertex 0,
/// indexed by the image of 0.
#[derive(Clone)]
struct Closure {
    by_image: Vec<Option<Permutation>>,
    members: Vec<usize>,
    gens: Vec<Permutation>,
}

impl Closure {
    fn new(n: usize) -> Self {
        let mut by_image = vec![None; n];
        by_image[0] = Some(Permutation::identity(n));
        Closure {
            by_image,
            members: vec![0],
            gens: Vec::new(),
        }
    }

    /// `<self, c>`, or `None` if it has a nonidentity element with a fixed
    /// point (two elements agreeing on 0, in particular).
    fn extend(&self, c: &Permutation, steps: &mut u64) -> Option<Closure> {
        let mut next = self.clone();
        next.gens.push(c.clone());
        let mut queue: Vec<usize> = next.members.clone();
        let mut head = 0;
        while head < queue.len() {
            let e = next.by_image[queue[head]].clone().expect("member");
            head += 1;
            for g in &next.gens {
                *steps += 1;
                let p = e.then(g);
                let img = p.apply(0);
                match &next.by_image[img] {
                    Some(q) => {
                        if *q != p {
                            return None;
                        }
                    }
                    None => {
                        if img != 0 && p.fixed_point_count() > 0 {
                            return None;
                        }
                        next.by_image[img] = Some(p);
                        next.members.push(img);
                        queue.push(img);
                    }
                }
            }
        }
        Some(next)
    }
}

/// Backtracking search for a regular subgroup of the transitive group
/// `aut`. Each step picks the least uncovered vertex `v` and tries every
/// fixed-point-free automorphism with uniform cycle type mapping 0 to `v`.
fn regular_subgroup_search(aut: &PermGroup, budget: u64, steps: &mut u64) -> Search {
    let n = aut.degree();
    if n <= 1 {
        return Search::Found(Vec::new());
    }
    let rebased = match PermGroup::with_base_prefix(n, aut.generators(), &[0]) {
        Ok(g) => g,
        Err(_) => return Search::Exhausted,
    };
    let mut reps: Vec<Option<Permutation>> = vec![None; n];
    for (pt, rep) in rebased.transversal(0) {
        reps[pt] = Some(rep.clone());
    }
    let stab = match rebased.stabilizer(0) {
        Ok(s) => s,
        Err(_) => return Search::Exhausted,
    };
    fn go(
        state: &Closure,
        reps: &[Option<Permutation>],
        stab: &PermGroup,
        budget: u64,
        steps: &mut u64,
    ) -> Search {
        let Some(v) = state.by_image.iter().position(|e| e.is_none()) else {
            return Search::Found(state.gens.clone());
        };
        let u = reps[v].as_ref().expect("transitive");
        for s in stab.elements_unbounded() {
            *steps += 1;
            if *steps > budget {
                return Search::Budget;
            }
            let c = s.then(u);
            if c.fixed_point_count() > 0 || c.uniform_cycle_length().is_none() {
                continue;
            }
            if let Some(next) = state.extend(&c, steps) {
                match go(&next, reps, stab, budget, steps) {
                    Search::Exhausted => {}
                    other => return other,
                }
            }
            if *steps > budget {
                return Search::Budget;
            }
        }
        Search::Exhausted
    }
    go(&Closure::new(n), &reps, &stab, budget, steps)
}

/// Lifts a regular subgroup of one component to the whole graph.
/// `isos[i][x]` is the vertex of component `i` matched with local vertex
/// `x` of component 0; `isos[0]` lists component 0 itself.
fn lift_certificate(n: usize, isos: &[Vec<usize>], local: &[Permutation]) -> Vec<Permutation> {
    let m = isos.len();
    let mut out = Vec::with_capacity(local.len() + 1);
    for g in local {
        let mut images = vec![0u32; n];
        for iso in isos {
            for (x, &vx) in iso.iter().enumerate() {
                images[vx] = iso[g.apply(x)] as u32;
            }
        }
        out.push(Permutation::from_images_unchecked(images));
    }
    if m > 1 {
        let mut images = vec![0u32; n];
        for (i, iso) in isos.iter().enumerate() {
            let next = &isos[(i + 1) % m];
            for (x, &vx) in iso.iter().enumerate() {
                images[vx] = next[x] as u32;
            }
        }
        out.push(Permutation::from_images_unchecked(images));
    }
    out
}

fn verdict_from_search(aut: &PermGroup, connected: bool, nodes: u64) -> CayleyVerdict {
    let n = aut.degree();
    let mut v = CayleyVerdict {
        status: CayleyStatus::Cayley,
        reason: None,
        method: None,
        certificate: Vec::new(),
        connected,
        vertex_transitive: true,
        components: 1,
        aut_order: aut.order().to_string(),
        nodes_used: nodes,
    };
    if aut.order() == BigUint::from(n) {
        v.method = Some(Method::RegularAut);
        v.certificate = aut.generators().to_vec();
        return v;
    }
    let mut steps = 0;
    match regular_subgroup_search(aut, SEARCH_BUDGET, &mut steps) {
        Search::Found(gens) => {
            v.method = Some(Method::Search);
            v.certificate = gens;
        }
        Search::Exhausted => {
            v.status = CayleyStatus::NotCayley;
            v.reason = Some(NonCayleyReason::NoRegularSubgroup);
        }
        Search::Budget => v.status = CayleyStatus::UnknownBudget,
    }
    v.nodes_used += steps;
    v
}

fn not_vt(connected: bool, aut: &PermGroup, nodes: u64) -> CayleyVerdict {
    CayleyVerdict {
        status: CayleyStatus::NotCayley,
        reason: Some(NonCayleyReason::NotVertexTransitive),
        method: None,
        certificate: Vec::new(),
        connected,
        vertex_transitive: false,
        components: 1,
        aut_order: aut.order().to_string(),
        nodes_used: nodes,
    }
}

/// Decides whether `graph` is a Cayley graph.
pub fn is_cayley(graph: &Graph) -> CayleyVerdict {
    let n = graph.order();
    let connected = graph.is_connected();
    let aut = match automorphism_search(graph, None, DEFAULT_NODE_BUDGET) {
        Ok(a) => a,
        Err(_) => return CayleyVerdict::unknown(connected, DEFAULT_NODE_BUDGET),
    };
    if !aut.group.is_transitive() {
        return not_vt(connected, &aut.group, aut.nodes);
    }
    if connected || n <= 1 {
        return verdict_from_search(&aut.group, connected, aut.nodes);
    }
    let comps = graph.components();
    let c0 = graph.induced(&comps[0]);
    let mut isos = vec![comps[0].clone()];
    for comp in &comps[1..] {
        let ci = graph.induced(comp);
        match find_isomorphism(&c0, &ci) {
            Ok(Some(phi)) => isos.push((0..c0.order()).map(|x| comp[phi.apply(x)]).collect()),
            _ => return CayleyVerdict::unknown(connected, aut.nodes),
        }
    }
    let mut inner = is_cayley(&c0);
    inner.nodes_used += aut.nodes;
    inner.connected = false;
    inner.aut_order = aut.group.order().to_string();
    if inner.is_cayley() {
        inner.certificate = lift_certificate(n, &isos, &inner.certificate);
        inner.components = comps.len();
        debug_assert!(verify_certificate(graph, &inner.certificate));
    }
    inner
}

/// `R(H)<δ>` for the first `δ ∈ I` with `δ² ∈ R(H)`, verified regular.
/// Requires `1 ∈ S`.
pub fn delta_shortcut(
    group: &FiniteGroup,
    auts: &[GroupAutomorphism],
    s: &ConnectionSet,
) -> Result<Option<Vec<Permutation>>> {
    let graph_order = 2 * group.order();
    for d in compute_i(group, auts, s)? {
        let p = d.permutation(group);
        if !is_right_translation(group, &p.then(&p)) {
            continue;
        }
        let mut gens: Vec<Permutation> = group
            .generator_elements()
            .into_iter()
            .map(|g| right_translation(group, g))
            .collect();
        gens.push(p);
        let sub = PermGroup::from_generators(graph_order, &gens)?;
        if sub.is_regular() {
            return Ok(Some(gens));
        }
    }
    Ok(None)
}

/// Cosets `K g` of the subgroup `k` as right-coset representatives, and
/// the map `K -> H` of the subgroup's own indexing.
fn right_coset_reps(group: &FiniteGroup, k: &[Elem]) -> Vec<Elem> {
    let mut seen = vec![false; group.order()];
    let mut reps = Vec::new();
    for h in group.elements() {
        if seen[h] {
            continue;
        }
        reps.push(h);
        for &x in k {
            seen[group.mul(x, h)] = true;
        }
    }
    reps
}

/// Cayley verdict for `H(H, S)`. Tries, in order: vertex-transitivity,
/// the δ-shortcut, reduction to the component `H(<S>, S)`, then the
/// generic regular-subgroup search.
pub fn haar_verdict(group: &Arc<FiniteGroup>, s: &ConnectionSet) -> Result<CayleyVerdict> {
    let t = normalize_connection_set(group, s)?;
    let phi = normalization_isomorphism(group, s);
    let mut v = haar_verdict_normalized(group, &t)?;
    if !phi.is_identity() && v.is_cayley() {
        let phi_inv = phi.inverse();
        v.certificate = v
            .certificate
            .iter()
            .map(|c| phi.then(c).then(&phi_inv))
            .collect();
    }
    Ok(v)
}

fn haar_verdict_normalized(group: &Arc<FiniteGroup>, s: &ConnectionSet) -> Result<CayleyVerdict> {
    let bg = haar_graph(Arc::clone(group), s)?;
    let graph = bg.graph();
    let n = graph.order();
    let connected = graph.is_connected();
    let aut = match automorphism_search(graph, None, DEFAULT_NODE_BUDGET) {
        Ok(a) => a,
        Err(Error::NodeBudgetExceeded(b)) => return Ok(CayleyVerdict::unknown(connected, b)),
        Err(e) => return Err(e),
    };
    if !aut.group.is_transitive() {
        return Ok(not_vt(connected, &aut.group, aut.nodes));
    }
    let base = CayleyVerdict {
        status: CayleyStatus::Cayley,
        reason: None,
        method: Some(Method::DeltaShortcut),
        certificate: Vec::new(),
        connected,
        vertex_transitive: true,
        components: 1,
        aut_order: aut.group.order().to_string(),
        nodes_used: aut.nodes,
    };
    if let Ok(auts) = group_automorphisms(group) {
        if let Ok(Some(cert)) = delta_shortcut(group, &auts, s) {
            return Ok(CayleyVerdict {
                certificate: cert,
                ..base
            });
        }
    }
    if !connected {
        let k = group.closure(s.elements());
        let (sub, embed) = group.subgroup(&k, s.elements())?;
        let sub = Arc::new(sub);
        let local_s: Vec<Elem> = s
            .elements()
            .iter()
            .map(|&x| embed.iter().position(|&e| e == x).expect("S in <S>"))
            .collect();
        let inner_s = ConnectionSet::spokes(&sub, &local_s)?;
        let mut inner = haar_verdict_normalized(&sub, &inner_s)?;
        let reps = right_coset_reps(group, &k);
        let isos: Vec<Vec<usize>> = reps
            .iter()
            .map(|&g| {
                (0..2 * sub.order())
                    .map(|x| vertex(group.mul(embed[x / 2], g), x % 2))
                    .collect()
            })
            .collect();
        inner.nodes_used += aut.nodes;
        inner.connected = false;
        inner.aut_order = base.aut_order;
        if inner.is_cayley() {
            inner.certificate = lift_certificate(n, &isos, &inner.certificate);
            inner.components = reps.len() * inner.components;
        }
        return Ok(inner);
    }
    Ok(verdict_from_search(&aut.group, connected, aut.nodes))
}

/// `Aut(H(H, S)) = R(H)` as permutation groups.
pub fn is_ghrr(group: &FiniteGroup, s: &ConnectionSet) -> Result<bool> {
    let arc = Arc::new(group.clone());
    let bg = haar_graph(arc, s)?;
    let aut = automorphism_search(bg.graph(), None, DEFAULT_NODE_BUDGET)?.group;
    Ok(aut.same_group(&rh_action(group)))
}

/// The normalizer of `R(H)` in `A = Aut(H(H, S))`, computed by enumerating
/// `A` and from the generators `R(H)`, `F` and one element of `I`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NormalizerReport {
    pub aut_order: u64,
    pub enumerated_order: u64,
    pub formula_order: u64,
    pub f_size: usize,
    pub i_size: usize,
    pub formula_transitive: bool,
    pub equal: bool,
}

pub fn verify_normalizer(group: &FiniteGroup, s: &ConnectionSet) -> Result<NormalizerReport> {
    let t = normalize_connection_set(group, s)?;
    let arc = Arc::new(group.clone());
    let bg = haar_graph(arc, &t)?;
    let n = bg.graph().order();
    let aut = automorphism_search(bg.graph(), None, DEFAULT_NODE_BUDGET)?.group;
    let aut_order = aut
        .order_u64()
        .filter(|&o| o <= NORMALIZER_ENUMERATION_CAP)
        .ok_or_else(|| {
            Error::ScaleExceeded(format!(
                "|Aut| = {} exceeds {NORMALIZER_ENUMERATION_CAP}",
                aut.order()
            ))
        })?;
    let rh_gens: Vec<Permutation> = group
        .generator_elements()
        .into_iter()
        .map(|g| right_translation(group, g))
        .collect();
    let mut normalizer: HashSet<Permutation> = HashSet::new();
    for a in aut.elements(NORMALIZER_ENUMERATION_CAP)? {
        let a_inv = a.inverse();
        if rh_gens
            .iter()
            .all(|r| is_right_translation(group, &a_inv.then(r).then(&a)))
        {
            normalizer.insert(a);
        }
    }
    let auts = group_automorphisms(group)?;
    let f = compute_f(group, &auts, &t)?;
    let i = compute_i(group, &auts, &t)?;
    let mut gens = rh_gens.clone();
    gens.extend(f.iter().map(|e| e.permutation(group)));
    if let Some(d) = i.first() {
        gens.push(d.permutation(group));
    }
    let formula = PermGroup::from_generators(n, &gens)?;
    let formula_order = formula.order_u64().unwrap_or(u64::MAX);
    let equal = formula_order == normalizer.len() as u64
        && formula.generators().iter().all(|g| normalizer.contains(g));
    Ok(NormalizerReport {
        aut_order,
        enumerated_order: normalizer.len() as u64,
        formula_order,
        f_size: f.len(),
        i_size: i.len(),
        formula_transitive: formula.is_transitive(),
        equal,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::atlas;
    use crate::haar::{cayley_graph, Role};

    fn verdict(g: FiniteGroup, s: &str) -> CayleyVerdict {
        let g = Arc::new(g);
        let s = ConnectionSet::parse(&g, s, Role::S).unwrap();
        let v = haar_verdict(&g, &s).unwrap();
        let graph = haar_graph(Arc::clone(&g), &s).unwrap();
        if v.is_cayley() {
            assert!(verify_certificate(graph.graph(), &v.certificate));
        }
        v
    }

    #[test]
    fn abelian_haar_graphs_use_the_shortcut() {
        let v = verdict(atlas::cyclic(6).unwrap(), "0,1,2");
        assert_eq!(v.status, CayleyStatus::Cayley);
        assert_eq!(v.method, Some(Method::DeltaShortcut));
    }

    #[test]
    fn disconnected_and_untranslated_sets() {
        let v = verdict(atlas::dihedral(8).unwrap(), "a,a^3");
        assert_eq!(v.status, CayleyStatus::Cayley);
        assert!(!v.connected);
    }

    #[test]
    fn petersen_is_vertex_transitive_but_not_cayley() {
        let v = is_cayley(&Graph::petersen());
        assert!(v.vertex_transitive);
        assert_eq!(v.status, CayleyStatus::NotCayley);
        assert_eq!(v.reason, Some(NonCayleyReason::NoRegularSubgroup));
    }

    #[test]
    fn cayley_graphs_are_recognised() {
        let d10 = atlas::dihedral(10).unwrap();
        let r = ConnectionSet::parse(&d10, "a,a^4,b", Role::R).unwrap();
        let g = cayley_graph(&d10, &r).unwrap();
        let v = is_cayley(&g);
        assert_eq!(v.status, CayleyStatus::Cayley);
        assert!(verify_certificate(&g, &v.certificate));
    }

    #[test]
    fn disconnected_generic_graph_lifts_certificate() {
        let g = Graph::from_edges(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
        let v = is_cayley(&g);
        assert_eq!(v.status, CayleyStatus::Cayley);
        assert_eq!(v.components, 2);
        assert!(verify_certificate(&g, &v.certificate));
    }

    #[test]
    fn not_vertex_transitive_graph() {
        let v = is_cayley(&Graph::path(4));
        assert_eq!(v.reason, Some(NonCayleyReason::NotVertexTransitive));
    }

    #[test]
    fn normalizer_formula_on_abelian_graph() {
        let z6 = atlas::cyclic(6).unwrap();
        let s = ConnectionSet::parse(&z6, "0,1,2", Role::S).unwrap();
        let r = verify_normalizer(&z6, &s).unwrap();
        assert!(r.equal);
        assert!(r.i_size > 0);
        assert!(r.formula_transitive);
    }
}
