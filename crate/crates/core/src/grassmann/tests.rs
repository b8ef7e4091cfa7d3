use super::*;

#[test]
fn ring_sizes() {
    let g = GraphRing::new(2, 4, Chart::Permuted2n).unwrap();
    assert_eq!(g.len(), 11);
    assert_eq!(g.psi_vars().len(), 6);
    let g = GraphRing::new(3, 6, Chart::Intro).unwrap();
    assert_eq!(g.psi_vars().len(), 20);
    assert_eq!(g.xi_vars().len(), star_set(3, 6).len());
}

#[test]
fn family_counts_match_closed_form() {
    for n in 4..=7 {
        let (_, f) = lemma31_generators(n).unwrap();
        assert_eq!(f.len() as u64, lemma31_count(n as u64), "n = {n}");
    }
    assert_eq!(lemma31_count(4), 12);
    assert_eq!(lemma31_count(7), 120);
}

#[test]
fn families_vanish_on_parametrization() {
    let (g, fams) = lemma31_generators(5).unwrap();
    let imgs = g.images();
    for f in &fams {
        let sub = f.poly.substitute(&imgs);
        assert!(sub.is_zero(), "family {} member does not vanish", f.family);
    }
}

#[test]
fn relabeling_is_a_bijection() {
    let (perm, intro, map) = relabel_2n(5).unwrap();
    let mut seen = map.clone();
    seen.sort_unstable();
    seen.dedup();
    assert_eq!(seen.len(), perm.len());
    assert_eq!(intro.len(), perm.len());
}

#[test]
fn graph_ideal_2_4() {
    let gi = graph_ideal(2, 4, Chart::Permuted2n, &Budget::unlimited()).unwrap();
    let (deg_dim, deg) = groebner::initial_ideal(&gi.basis).dim_degree();
    assert_eq!(deg, 9.into());
    // projective dimension 4 in each factor summed: affine dim 4 + 2
    assert_eq!(deg_dim, 6);
}
