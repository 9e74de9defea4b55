mod common;

#[test]
fn refinement_engine_matches_oracle() {
    let corpus = common::oracle_corpus(7, 120);
    assert!(corpus.len() >= 150);
    let mut rng = common::rng(11);
    for (name, g) in &corpus {
        common::oracle_agrees(g, &mut rng).unwrap_or_else(|e| panic!("{name}: {e}"));
    }
}
