use super::*;

fn ring(names: &[&str]) -> Ring {
    VariableTable::shared(names.iter().copied()).unwrap()
}

fn p(s: &str, r: &Ring) -> Polynomial {
    Polynomial::parse(s, r).unwrap()
}

#[test]
fn principal_ideal() {
    let r = ring(&["x", "y"]);
    let i = Ideal::new(r.clone(), vec![p("2*x^2-4*y", &r)]);
    let gb = buchberger(&i, &MonomialOrder::grevlex(2));
    assert_eq!(gb.elements, vec![p("x^2-2*y", &r)]);
    assert!(gb.reduced);
}

#[test]
fn lex_gb_of_small_system() {
    let r = ring(&["x", "y"]);
    let i = Ideal::new(r.clone(), vec![p("x+y", &r), p("x", &r)]);
    let gb = buchberger(&i, &MonomialOrder::lex(2));
    assert_eq!(gb.elements, vec![p("y", &r), p("x", &r)]);
    // with x > y both leading terms are x and the S-pair leaves y
    assert!(!is_groebner(&[p("x+y", &r), p("x", &r)], &MonomialOrder::lex(2)).is_groebner);
    let y_first = MonomialOrder::with_chain(OrderKind::Lex, &[1, 0]).unwrap();
    assert!(is_groebner(&[p("x+y", &r), p("x", &r)], &y_first).is_groebner);
}

#[test]
fn twisted_cubic() {
    let r = ring(&["a", "b", "c", "d"]);
    let gens = vec![p("a*c-b^2", &r), p("b*d-c^2", &r), p("a*d-b*c", &r)];
    let i = Ideal::new(r.clone(), gens);
    let gb = buchberger(&i, &MonomialOrder::grevlex(4));
    assert!(is_groebner(&gb.elements, &gb.order).is_groebner);
    let (dim, deg) = initial_ideal(&gb).dim_degree();
    assert_eq!((dim, deg), (2, 3.into()));
    assert_eq!(minimal_generators(&i).unwrap(), BTreeMap::from([(2, 3)]));
}

#[test]
fn failing_pair_reported() {
    let r = ring(&["x", "y"]);
    let gens = vec![p("x^2", &r), p("x*y-1", &r)];
    let c = is_groebner(&gens, &MonomialOrder::grevlex(2));
    assert!(!c.is_groebner);
    assert_eq!(c.failures[0].0, 0);
    assert_eq!(c.failures[0].1, 1);
}

#[test]
fn eliminate_substitution() {
    let r = ring(&["x", "t", "psi"]);
    let i = Ideal::new(r.clone(), vec![p("t-x", &r), p("psi-x^2", &r)]);
    let e = eliminate(&i, &[0], None, &Budget::unlimited()).unwrap();
    let sub = e.ideal.ring.clone();
    assert_eq!(e.basis.elements, vec![p("t^2-psi", &sub)]);
}

#[test]
fn saturation_removes_factor() {
    let r = ring(&["x", "y", "v"]);
    let f = p("x^2-y", &r);
    let i = Ideal::new(r.clone(), vec![f.mul(&p("v", &r))]);
    let s = saturate(&i, 2, &Budget::unlimited()).unwrap();
    assert_eq!(s.generators, vec![f.clone()]);
    let s2 = saturate(&s, 2, &Budget::unlimited()).unwrap();
    assert_eq!(s2.generators, s.generators);
}

#[test]
fn quotient_dimension() {
    let r = ring(&["x", "y"]);
    let i = Ideal::new(r.clone(), vec![p("x^2", &r), p("y", &r)]);
    let o = MonomialOrder::grevlex(2);
    assert_eq!(quotient_vector_space_dim(&i, &o, &Budget::unlimited()).unwrap(), Some(2.into()));
    let j = Ideal::new(r.clone(), vec![p("x*y", &r)]);
    assert_eq!(quotient_vector_space_dim(&j, &o, &Budget::unlimited()).unwrap(), None);
    let unit = Ideal::new(r.clone(), vec![p("x*y-1", &r), p("x", &r)]);
    assert_eq!(quotient_vector_space_dim(&unit, &o, &Budget::unlimited()).unwrap(), Some(0.into()));
}

#[test]
fn degree_bound_truncates() {
    let r = ring(&["a", "b", "c", "d"]);
    let gens = vec![p("a*c-b^2", &r), p("b*d-c^2", &r), p("a*d-b*c", &r)];
    let i = Ideal::new(r, gens);
    let gb = buchberger_with(&i, &MonomialOrder::lex(4), &Budget::degree(2));
    assert!(gb.truncated);
}

#[test]
fn minimal_generators_rejects_inhomogeneous() {
    let r = ring(&["x", "y"]);
    let i = Ideal::new(r.clone(), vec![p("x^2-y", &r)]);
    assert!(matches!(minimal_generators(&i), Err(Error::NotHomogeneous)));
}

#[test]
fn basis_file_round_trip() {
    let r = ring(&["a", "b", "c", "d"]);
    let gens = vec![p("a*c-b^2", &r), p("b*d-c^2", &r), p("a*d-b*c", &r)];
    let gb = buchberger(&Ideal::new(r, gens), &MonomialOrder::grevlex(4));
    let text = io::write_basis(&gb);
    let back = io::read_basis(&text).unwrap();
    assert_eq!(back.elements, gb.elements);
    assert_eq!(back.order, gb.order);
    assert_eq!(io::write_basis(&back), text);
}
