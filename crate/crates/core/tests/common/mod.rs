//! Corpora and property checks shared by the integration and acceptance
//! suites.
#![allow(dead_code)]

use std::collections::HashSet;
use std::sync::Arc;

use haar_core::atlas::group_automorphisms;
use haar_core::haar::{compute_f, compute_i, normalize_connection_set, rh_action};
use haar_core::symmetry::{verify_normalizer, NORMALIZER_ENUMERATION_CAP};
use haar_core::{
    atlas, automorphism_group, haar_graph, oracle_automorphisms, ConnectionSet, FiniteGroup, Graph,
    PermGroup, Permutation, Role,
};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

pub const SMALL_GROUPS: &[&str] = &[
    "Z1", "Z2", "Z3", "Z4", "Z2xZ2", "Z5", "Z6", "D6", "Z7", "Z8", "Z2xZ4", "Z2xZ2xZ2", "D8", "Q8",
];
pub const PROPERTY_GROUPS: &[&str] = &[
    "Z3", "Z4", "Z2xZ2", "Z5", "Z6", "D6", "Z7", "Z8", "D8", "Q8", "Z2xZ4", "D10", "Z9", "D12",
    "Z2xZ6", "A4", "Q8xZ2", "D8xZ2", "D6xZ3", "F20",
];

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

pub fn random_subset(rng: &mut StdRng, n: usize, with_identity: bool) -> Vec<usize> {
    let mut s: Vec<usize> = (1..n).filter(|_| rng.gen_bool(0.4)).collect();
    if with_identity || s.is_empty() {
        s.push(0);
    }
    s.sort_unstable();
    s
}

/// Graphs on at most 16 vertices: random Haar graphs of groups of order at
/// most 8, cycles, complete and complete bipartite graphs.
pub fn oracle_corpus(seed: u64, haar_count: usize) -> Vec<(String, Graph)> {
    let mut out = Vec::new();
    for n in 3..=16 {
        out.push((format!("C{n}"), Graph::cycle(n)));
    }
    for n in 1..=8 {
        out.push((format!("K{n}"), Graph::complete(n)));
    }
    for a in 1..=6 {
        for b in a..=(16 - a).min(8) {
            out.push((format!("K{a},{b}"), Graph::complete_bipartite(a, b)));
        }
    }
    let mut r = rng(seed);
    let groups: Vec<Arc<FiniteGroup>> = SMALL_GROUPS
        .iter()
        .map(|n| Arc::new(atlas(n).unwrap()))
        .collect();
    for i in 0..haar_count {
        let g = groups[i % groups.len()].clone();
        let s = random_subset(&mut r, g.order(), false);
        let cs = ConnectionSet::new(&g, &s, Role::S).unwrap();
        let name = format!("H({},{})", g.name(), cs.display(&g));
        out.push((name, haar_graph(g, &cs).unwrap().into_graph()));
    }
    out
}

/// Order and membership agreement between the refinement engine and the
/// exhaustive oracle.
pub fn oracle_agrees(graph: &Graph, rng: &mut StdRng) -> Result<(), String> {
    let fast = automorphism_group(graph).map_err(|e| e.to_string())?;
    let slow = oracle_automorphisms(graph).map_err(|e| e.to_string())?;
    if fast.order() != slow.order() {
        return Err(format!("order {} vs oracle {}", fast.order(), slow.order()));
    }
    for g in slow.generators() {
        if !fast.contains(g).unwrap() {
            return Err("oracle generator outside engine group".into());
        }
    }
    for g in fast.generators() {
        if !slow.contains(g).unwrap() || !graph.is_automorphism(g) {
            return Err("engine generator not an automorphism".into());
        }
    }
    let n = graph.order();
    for _ in 0..20 {
        let mut images: Vec<u32> = (0..n as u32).collect();
        images.shuffle(rng);
        let p = Permutation::from_images(images).unwrap();
        let want = graph.is_automorphism(&p);
        if fast.contains(&p).unwrap() != want || slow.contains(&p).unwrap() != want {
            return Err("membership disagreement".into());
        }
    }
    Ok(())
}

/// `R(H) ≤ Aut(H(H, S))`.
pub fn right_translations_are_automorphisms(
    g: &Arc<FiniteGroup>,
    s: &[usize],
) -> Result<(), String> {
    let cs = ConnectionSet::new(g, s, Role::S).map_err(|e| e.to_string())?;
    let bg = haar_graph(Arc::clone(g), &cs).map_err(|e| e.to_string())?;
    let rh = rh_action(g);
    if !rh
        .generators()
        .iter()
        .all(|p| bg.graph().is_automorphism(p))
    {
        return Err("R(H) generator is not an automorphism".into());
    }
    let aut = automorphism_group(bg.graph()).map_err(|e| e.to_string())?;
    if !aut.contains_group(&rh) {
        return Err("R(H) not contained in Aut".into());
    }
    Ok(())
}

/// Every computed member of `F` and `I` is an automorphism.
pub fn f_and_i_are_automorphisms(g: &Arc<FiniteGroup>, s: &[usize]) -> Result<(), String> {
    let cs = ConnectionSet::new(g, s, Role::S).map_err(|e| e.to_string())?;
    let t = normalize_connection_set(g, &cs).map_err(|e| e.to_string())?;
    let bg = haar_graph(Arc::clone(g), &t).map_err(|e| e.to_string())?;
    let auts = group_automorphisms(g).map_err(|e| e.to_string())?;
    let f = compute_f(g, &auts, &t).map_err(|e| e.to_string())?;
    if f.is_empty() {
        return Err("F is empty, but the identity map belongs to it".into());
    }
    for x in &f {
        if !bg.graph().is_automorphism(&x.permutation(g)) {
            return Err("F member is not an automorphism".into());
        }
    }
    for x in compute_i(g, &auts, &t).map_err(|e| e.to_string())? {
        if !bg.graph().is_automorphism(&x.permutation(g)) {
            return Err("I member is not an automorphism".into());
        }
    }
    Ok(())
}

/// Connected exactly when `S` generates `H`, checked by breadth-first search.
pub fn connectivity_matches_span(g: &Arc<FiniteGroup>, s: &[usize]) -> Result<(), String> {
    let cs = ConnectionSet::new(g, s, Role::S).map_err(|e| e.to_string())?;
    let graph = haar_graph(Arc::clone(g), &cs)
        .map_err(|e| e.to_string())?
        .into_graph();
    let connected = bfs_connected(&graph);
    // <S^-1 S> with S ∋ 1 equals <S>
    let x = s[0];
    let xi = g.inv(x);
    let shifted: Vec<usize> = s.iter().map(|&y| g.mul(xi, y)).collect();
    let generates = subgroup_generated(g, &shifted).len() == g.order();
    if connected != generates {
        return Err(format!("connected {connected}, generates {generates}"));
    }
    Ok(())
}

pub fn bfs_connected(graph: &Graph) -> bool {
    let n = graph.order();
    if n == 0 {
        return true;
    }
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    let mut count = 1;
    while let Some(v) = stack.pop() {
        for &w in graph.neighbors(v) {
            if !seen[w as usize] {
                seen[w as usize] = true;
                count += 1;
                stack.push(w as usize);
            }
        }
    }
    count == n
}

/// The subgroup generated by `gens`, by closing under multiplication.
pub fn subgroup_generated(g: &FiniteGroup, gens: &[usize]) -> HashSet<usize> {
    let mut set: HashSet<usize> = HashSet::from([g.identity()]);
    let mut frontier = vec![g.identity()];
    while let Some(x) = frontier.pop() {
        for &y in gens {
            let z = g.mul(x, y);
            if set.insert(z) {
                frontier.push(z);
            }
        }
    }
    set
}

/// Normalizer of `R(H)` in `Aut` equals the group built from `R(H)`, `F`
/// and `I`. `Ok(false)` when `Aut` is too large to enumerate.
pub fn normalizer_formula_holds(g: &Arc<FiniteGroup>, s: &[usize]) -> Result<bool, String> {
    let cs = ConnectionSet::new(g, s, Role::S).map_err(|e| e.to_string())?;
    let bg = haar_graph(Arc::clone(g), &cs).map_err(|e| e.to_string())?;
    let order = automorphism_group(bg.graph())
        .map_err(|e| e.to_string())?
        .order_u64();
    if order.map_or(true, |o| o > NORMALIZER_ENUMERATION_CAP) {
        return Ok(false);
    }
    let report = verify_normalizer(g, &cs).map_err(|e| e.to_string())?;
    if !report.equal {
        return Err(format!("{report:?}"));
    }
    Ok(true)
}

pub fn random_permutation_group(rng: &mut StdRng) -> (usize, Vec<Permutation>) {
    let degree = rng.gen_range(1..=7);
    let k = rng.gen_range(0..=3);
    let gens = (0..k)
        .map(|_| {
            let mut images: Vec<u32> = (0..degree as u32).collect();
            images.shuffle(rng);
            Permutation::from_images(images).unwrap()
        })
        .collect();
    (degree, gens)
}

/// All elements, by closing the generators under composition.
pub fn brute_force_elements(degree: usize, gens: &[Permutation]) -> HashSet<Vec<u32>> {
    let id = Permutation::identity(degree);
    let mut set = HashSet::from([id.images().to_vec()]);
    let mut frontier = vec![id];
    while let Some(x) = frontier.pop() {
        for g in gens {
            let y = x.then(g);
            if set.insert(y.images().to_vec()) {
                frontier.push(y);
            }
        }
    }
    set
}

/// Order against brute force, orbit-stabilizer at every point, sifting of
/// generators and their pairwise products.
pub fn bsgs_invariants(degree: usize, gens: &[Permutation]) -> Result<(), String> {
    let g = PermGroup::from_generators(degree, gens).map_err(|e| e.to_string())?;
    let elements = brute_force_elements(degree, gens);
    let order = g.order_u64().ok_or("order overflow")?;
    if order != elements.len() as u64 {
        return Err(format!("order {order} vs {} enumerated", elements.len()));
    }
    let product: u64 = g.basic_orbit_sizes().iter().map(|&x| x as u64).product();
    if product != order {
        return Err("order differs from product of basic orbit sizes".into());
    }
    for v in 0..degree {
        let orbit = g.orbit(v).len() as u64;
        let stab = g.stabilizer(v).map_err(|e| e.to_string())?;
        if orbit * stab.order_u64().unwrap() != order {
            return Err(format!("orbit-stabilizer fails at {v}"));
        }
        if !stab.generators().iter().all(|p| p.apply(v) == v) {
            return Err("stabilizer generator moves the point".into());
        }
    }
    for a in gens {
        if !g.contains(a).unwrap() {
            return Err("generator not a member".into());
        }
        for b in gens {
            if !g.contains(&a.then(b)).unwrap() {
                return Err("product of generators not a member".into());
            }
        }
    }
    for p in &elements {
        if !g
            .contains(&Permutation::from_images(p.clone()).unwrap())
            .unwrap()
        {
            return Err("enumerated element not a member".into());
        }
    }
    if degree >= 2 {
        let t = Permutation::from_cycles(degree, &[&[0, 1]]).unwrap();
        if g.contains(&t).unwrap() != elements.contains(t.images()) {
            return Err("membership disagrees on a transposition".into());
        }
    }
    Ok(())
}
