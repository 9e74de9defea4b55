use haar_core::{atlas, FiniteGroup};

fn w(g: &FiniteGroup, word: &str) -> usize {
    g.parse_word(word).unwrap()
}

fn is_one(g: &FiniteGroup, word: &str) -> bool {
    w(g, word) == g.identity()
}

#[test]
fn dihedral_relations() {
    for n in 2..=8 {
        let g = atlas(&format!("D{}", 2 * n)).unwrap();
        assert_eq!(g.order(), 2 * n);
        assert!(is_one(&g, &format!("a^{n}")));
        assert!(is_one(&g, "b^2"));
        assert_eq!(g.conj(w(&g, "a"), w(&g, "b")), w(&g, "a^-1"));
        assert!(g.is_associative());
    }
}

#[test]
fn quaternion_relations() {
    let g = atlas("Q8").unwrap();
    assert!(is_one(&g, "a^4"));
    assert_eq!(w(&g, "a^2"), w(&g, "b^2"));
    assert_eq!(g.conj(w(&g, "a"), w(&g, "b")), w(&g, "a^-1"));
    assert_eq!(g.involutions().len(), 1);
}

#[test]
fn frobenius_relations() {
    let g = atlas("F20").unwrap();
    assert_eq!(g.order(), 20);
    assert!(is_one(&g, "a^5"));
    assert!(is_one(&g, "g^4"));
    assert_eq!(g.conj(w(&g, "a"), w(&g, "g")), w(&g, "a^2"));
    assert_eq!(g.center().len(), 1);
}

#[test]
fn table_groups_have_expected_orders() {
    for (name, order) in [
        ("H1", 16),
        ("H2", 16),
        ("H3", 16),
        ("H4", 16),
        ("H5", 32),
        ("H6", 24),
        ("H7", 12),
        ("H8", 20),
        ("H9(3)", 18),
        ("H9(5)", 50),
    ] {
        let g = atlas(name).unwrap();
        assert_eq!(g.order(), order, "{name}");
        assert!(!g.is_abelian(), "{name}");
        assert!(g.generators_generate(), "{name}");
    }
}

#[test]
fn generalized_dihedral_relations() {
    for p in [3, 5] {
        let g = atlas(&format!("H9({p})")).unwrap();
        assert!(is_one(&g, &format!("a^{p}")));
        assert!(is_one(&g, &format!("c^{p}")));
        assert!(is_one(&g, "b^2"));
        assert_eq!(g.commutator(w(&g, "a"), w(&g, "c")), g.identity());
        assert_eq!(g.conj(w(&g, "a"), w(&g, "b")), w(&g, "a^-1"));
        assert_eq!(g.conj(w(&g, "c"), w(&g, "b")), w(&g, "c^-1"));
    }
}

#[test]
fn direct_products() {
    let g = atlas("Q8xZ2xZ2").unwrap();
    assert_eq!(g.order(), 32);
    let h = atlas("D6xZ3").unwrap();
    assert_eq!(h.order(), 18);
    assert_eq!(h.commutator(w(&h, "a"), w(&h, "c")), h.identity());
    assert!(atlas("Nope").is_err());
    assert!(atlas("H9(4)").is_err());
}
