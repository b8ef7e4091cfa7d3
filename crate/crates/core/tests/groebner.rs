use std::collections::BTreeMap;

use ccdeg_core::grassmann::{graph_ideal, lemma31_generators, prop35_generators, Chart, Side};
use ccdeg_core::groebner::{self, io, Budget, Ideal, MonomialIdeal};
use ccdeg_core::{Monomial, MonomialOrder, Polynomial, Ring, VariableTable};

fn ring(names: &[&str]) -> Ring {
    VariableTable::shared(names.iter().copied()).unwrap()
}

fn p(r: &Ring, s: &str) -> Polynomial {
    Polynomial::parse(s, r).unwrap()
}

#[test]
fn graph_generator_reduces_to_zero() {
    let gi = graph_ideal(2, 4, Chart::Intro, &Budget::unlimited()).unwrap();
    let g = &gi.graph;
    // coordinates indexed by sorted sets; a variable labeled by a descending pair carries a sign
    let v = |side, set: [u16; 2]| {
        let x = g.var_of_set(side, &set).unwrap();
        let t = g.vars[x].1.tuple();
        let p = Polynomial::var(x);
        if t[0] > t[1] { p.neg() } else { p }
    };
    let (psi, xi) = (Side::Psi, Side::Xi);
    let lead = v(psi, [1, 4]).mul(&v(xi, [2, 3]));
    let f = lead.sub(&v(psi, [1, 3]).mul(&v(xi, [2, 4]))).add(&v(psi, [3, 4]).mul(&v(xi, [1, 2])));
    assert!(gi.basis.contains(&f));
    assert!(!gi.basis.contains(&lead));
}

#[test]
fn is_groebner_on_families() {
    let (g, fam) = lemma31_generators(6).unwrap();
    let polys: Vec<Polynomial> = fam.iter().map(|m| m.poly.clone()).collect();
    assert_eq!(polys.len(), 65);
    let check = groebner::is_groebner(&polys, &g.canonical_order());
    assert!(check.is_groebner);
    assert_eq!(check.pairs_checked, 65 * 64 / 2);
    let (g, fam) = prop35_generators(5).unwrap();
    let polys: Vec<Polynomial> = fam.iter().map(|m| m.poly.clone()).collect();
    assert!(groebner::is_groebner(&polys, &g.canonical_order()).is_groebner);
}

#[test]
fn dropping_a_generator_breaks_the_basis() {
    let (g, fam) = lemma31_generators(5).unwrap();
    let polys: Vec<Polynomial> = fam.iter().skip(1).map(|m| m.poly.clone()).collect();
    let check = groebner::is_groebner(&polys, &g.canonical_order());
    assert!(!check.is_groebner);
    let (i, j, rem) = &check.failures[0];
    assert!(i < j && !rem.is_zero());
}

#[test]
fn two_element_lex_example() {
    let r = ring(&["x", "y"]);
    let gens = vec![p(&r, "x+y"), p(&r, "x")];
    // y > x: leading terms y and x are coprime
    let y_first = MonomialOrder::with_chain(ccdeg_core::OrderKind::Lex, &[1, 0]).unwrap();
    assert!(groebner::is_groebner(&gens, &y_first).is_groebner);
    assert!(!groebner::is_groebner(&gens, &MonomialOrder::lex(2)).is_groebner);
}

#[test]
fn graph_generator_counts() {
    let b = Budget::unlimited();
    let g4 = graph_ideal(2, 4, Chart::Permuted2n, &b).unwrap();
    assert_eq!(groebner::minimal_generators(&g4.ideal()).unwrap(), BTreeMap::from([(2, 12)]));
    let g5 = graph_ideal(2, 5, Chart::Permuted2n, &b).unwrap();
    assert_eq!(g5.basis.elements.len(), 31);
}

#[test]
fn elimination_by_substitution() {
    let r = ring(&["x", "t", "psi"]);
    let i = Ideal::new(r.clone(), vec![p(&r, "t - x"), p(&r, "psi - x^2")]);
    let e = groebner::eliminate(&i, &[0], None, &Budget::unlimited()).unwrap();
    let gens = &e.ideal.generators;
    assert_eq!(gens.len(), 1);
    let want = Polynomial::parse("psi - t^2", &e.ideal.ring).unwrap();
    assert!(gens[0] == want || gens[0] == want.neg(), "{:?}", gens);
}

#[test]
fn saturation_removes_the_variable() {
    let r = ring(&["x", "y", "v"]);
    let f = p(&r, "x^2 - y");
    let i = Ideal::new(r.clone(), vec![f.mul(&Polynomial::var(2))]);
    let s = groebner::saturate(&i, 2, &Budget::unlimited()).unwrap();
    let gb = groebner::buchberger(&s, &MonomialOrder::grevlex(3));
    assert_eq!(gb.elements.len(), 1);
    assert_eq!(gb.elements[0], f.monic(&gb.order));
}

#[test]
fn principal_ideal_is_monic() {
    let r = ring(&["x", "y"]);
    let f = p(&r, "3*x^2*y - 6*y + 1/2");
    let gb = groebner::buchberger(&Ideal::new(r, vec![f.clone()]), &MonomialOrder::grevlex(2));
    assert_eq!(gb.elements, vec![f.monic(&gb.order)]);
}

#[test]
fn monomial_ideal_invariants() {
    let m = MonomialIdeal::new(4, vec![]);
    assert_eq!(m.dim_degree(), (4, 1.into()));
    let m = MonomialIdeal::new(3, vec![Monomial::from_pairs([(0, 1), (1, 1)])]);
    assert_eq!(m.dim_degree(), (2, 2.into()));
    let r = ring(&["x", "y"]);
    let i = Ideal::new(r, vec![Polynomial::var(0).pow(2), Polynomial::var(1)]);
    let q = groebner::quotient_vector_space_dim(&i, &MonomialOrder::grevlex(2), &Budget::unlimited()).unwrap();
    assert_eq!(q, Some(2.into()));
    let single = groebner::buchberger(
        &Ideal::new(ring(&["a", "b"]), vec![Polynomial::var(0).mul(&Polynomial::var(1))]),
        &MonomialOrder::grevlex(2),
    );
    assert_eq!(groebner::initial_ideal(&single).generators(), &[Monomial::from_pairs([(0, 1), (1, 1)])]);
}

#[test]
fn initial_ideal_of_the_family_basis() {
    let (g, fam) = lemma31_generators(6).unwrap();
    let gi = graph_ideal(2, 6, Chart::Permuted2n, &Budget::unlimited()).unwrap();
    let m = groebner::initial_ideal(&gi.basis);
    assert_eq!(m.len(), 65);
    assert!(m.is_squarefree());
    assert_eq!(m.degree_histogram(), BTreeMap::from([(2, 65)]));
    let printed = MonomialIdeal::new(g.len(), fam.iter().map(|f| f.leading.clone()).collect());
    assert_eq!(m, printed);
}

#[test]
fn basis_files_round_trip_and_verify() {
    let gi = graph_ideal(2, 5, Chart::Permuted2n, &Budget::unlimited()).unwrap();
    let text = io::write_basis(&gi.basis);
    let back = io::read_basis(&text).unwrap();
    assert_eq!(back.elements, gi.basis.elements);
    assert_eq!(back.order, gi.basis.order);
    assert!(groebner::is_groebner(&back.elements, &back.order).is_groebner);
    assert_eq!(io::write_basis(&back), text);
}

#[test]
fn budget_truncates() {
    let b = Budget { max_basis: Some(3), ..Budget::unlimited() };
    let r = graph_ideal(2, 6, Chart::Permuted2n, &b);
    assert!(matches!(r, Err(ccdeg_core::Error::Budget(_))), "{:?}", r.map(|g| g.basis.elements.len()));
}
