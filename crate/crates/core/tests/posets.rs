use ccdeg_core::grassmann::{graph_ideal, star_set, Chart, Side};
use ccdeg_core::groebner::{self, Budget};
use ccdeg_core::poset::*;

#[test]
fn chain_counts() {
    assert_eq!(count_maximal_chains(&young_poset(4).unwrap()), 2.into());
    assert_eq!(count_maximal_chains(&young_poset(6).unwrap()), 14.into());
    assert_eq!(young_poset(4).unwrap().len(), 6);
    let p4 = p2n_poset(4).unwrap();
    assert_eq!(p4.len(), 12);
    assert_eq!(count_maximal_chains(&p4), 9.into());
    assert_eq!(count_maximal_chains(&p2n_poset(5).unwrap()), 27.into());
    assert_eq!(count_maximal_chains(&p2n_poset(6).unwrap()), 83.into());
    assert_eq!(count_maximal_chains(&p2n_poset(10).unwrap()), 9723.into());
    assert_eq!(count_maximal_chains(&p2n_poset(12).unwrap()), 117_571.into());
}

#[test]
fn a_chain_has_one_maximal_chain() {
    let labels: Vec<String> = (0..5).map(|i| format!("c{i}")).collect();
    let p = Poset::new(labels, (0..4).map(|i| (i, i + 1)).collect()).unwrap();
    assert_eq!(count_maximal_chains(&p), 1.into());
}

#[test]
fn pbw_poset_3_6() {
    let p = pbw_poset(3, 6).unwrap();
    assert_eq!(p.len(), 20);
    assert_eq!(star_set(3, 6).len(), 10);
}

#[test]
fn pbw_for_two_rows_is_young() {
    for n in 4..=7 {
        let a = pbw_poset(2, n).unwrap();
        let b = young_poset(n).unwrap();
        assert_eq!(a.len(), b.len());
        assert_eq!(a.covers().len(), b.covers().len());
        assert_eq!(count_maximal_chains(&a), count_maximal_chains(&b));
    }
}

#[test]
fn chains_are_the_facets_of_the_initial_complex() {
    for n in 4..=6 {
        let g = graph_ideal(2, n, Chart::Permuted2n, &Budget::unlimited()).unwrap();
        let names: Vec<String> = (0..g.graph.len()).map(|v| g.graph.name(v).to_string()).collect();
        let c = stanley_reisner(&groebner::initial_ideal(&g.basis), &names).unwrap();
        let mut from_complex = c.facet_labels();
        let mut from_chains = p2n_chain_facets(n).unwrap();
        from_complex.sort();
        from_chains.sort();
        assert_eq!(from_complex, from_chains, "n={n}");
    }
}

#[test]
fn complexes_of_the_graphs() {
    for (d, n, facets, size) in [(2, 6, 83, 10), (3, 6, 250, 11)] {
        let g = graph_ideal(d, n, Chart::canonical(d), &Budget::unlimited()).unwrap();
        let names: Vec<String> = (0..g.graph.len()).map(|v| g.graph.name(v).to_string()).collect();
        let c = stanley_reisner(&groebner::initial_ideal(&g.basis), &names).unwrap();
        assert_eq!(complex_degree(&c).unwrap(), facets);
        assert!(c.facets.iter().all(|f| f.len() == size));
    }
}

#[test]
fn multidegree_of_the_smallest_graph() {
    let g = graph_ideal(2, 4, Chart::Permuted2n, &Budget::unlimited()).unwrap();
    let names: Vec<String> = (0..g.graph.len()).map(|v| g.graph.name(v).to_string()).collect();
    let c = stanley_reisner(&groebner::initial_ideal(&g.basis), &names).unwrap();
    let xi: Vec<bool> = (0..g.graph.len()).map(|v| g.graph.side_of(v) == Side::Xi).collect();
    let md = complex_multidegree(&c, &xi, 4, 5);
    assert_eq!(md.total(), 9);
    // the top ψ-degree coefficient is deg Gr(2,4)
    assert_eq!(md.coefficients_desc()[0], 2);
}
