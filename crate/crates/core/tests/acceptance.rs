//! One line per acceptance criterion: PASS, FAIL or SKIP, with timings.
//!
//! Run with `cargo test -p ccdeg-core --test acceptance -- --nocapture`.

use std::collections::BTreeMap;
use std::io::Write;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

/// Straight to the process stdout so the lines show without --nocapture.
macro_rules! report {
    ($($t:tt)*) => {{
        let mut out = std::io::stdout().lock();
        let _ = writeln!(out, $($t)*);
        let _ = out.flush();
    }};
}

use ccdeg_core::grassmann::{
    self, cc_solution_count_on, graph_ideal, lemma31_generators, Chart, GraphIdeal, Hamiltonian, Side,
};
use ccdeg_core::groebner::{self, Budget, MonomialIdeal};
use ccdeg_core::poset::{self, complex_multidegree, ehrhart_from_unimodular, stanley_reisner};
use ccdeg_core::univariate::UniPoly;
use ccdeg_core::{polytope, toric, MonomialOrder, Polynomial, Rational};
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

enum Outcome {
    Pass(String),
    Skip(String),
}

type Check = Result<Outcome, String>;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn catalan_formula(n: u64) -> BigInt {
    // 2/n * C(2n-2, n-1) - 1
    let mut c = BigInt::from(1);
    for i in 0..(n - 1) {
        c = c * BigInt::from(2 * n - 2 - i) / BigInt::from(i + 1);
    }
    c * 2 / BigInt::from(n) - 1
}

fn graph(d: usize, n: usize) -> GraphIdeal {
    graph_ideal(d, n, Chart::canonical(d), &Budget::unlimited()).expect("graph ideal")
}

fn complex_of(g: &GraphIdeal) -> ccdeg_core::poset::SimplicialComplex {
    let names: Vec<String> = (0..g.graph.len()).map(|v| g.graph.name(v).to_string()).collect();
    stanley_reisner(&groebner::initial_ideal(&g.basis), &names).expect("squarefree initial ideal")
}

fn c1_chains() -> Check {
    for n in 3..=12u64 {
        let got = poset::count_maximal_chains(&poset::p2n_poset(n as usize).map_err(|e| e.to_string())?);
        ensure!(got == catalan_formula(n), "n={n}: {got} chains, formula {}", catalan_formula(n));
    }
    Ok(Outcome::Pass("n=3..12 match".into()))
}

fn c2_graph_2_6() -> Check {
    let g = graph(2, 6);
    let mins = groebner::minimal_generators(&g.ideal()).map_err(|e| e.to_string())?;
    ensure!(mins == BTreeMap::from([(2, 65)]), "minimal generators {mins:?}");
    let (_, deg) = groebner::initial_ideal(&g.basis).dim_degree();
    ensure!(deg == 83.into(), "degree {deg}");
    let c = complex_of(&g);
    let xi: Vec<bool> = (0..g.graph.len()).map(|v| g.graph.side_of(v) == Side::Xi).collect();
    let m = xi.iter().filter(|&&b| b).count() as u32 - 1;
    let n = xi.len() as u32 - m - 2;
    let md = complex_multidegree(&c, &xi, m, n);
    ensure!(md.coefficients_asc() == vec![1, 2, 4, 8, 12, 14, 14, 14, 14], "multidegree {md}");
    Ok(Outcome::Pass(format!("65 quadrics, degree 83, {md}")))
}

fn c3_lemma_family() -> Check {
    for n in 4..=7 {
        let (g, fam) = lemma31_generators(n).map_err(|e| e.to_string())?;
        let check = grassmann::check_families(&g, &fam, None);
        ensure!(check.is_groebner, "n={n}: {} failing S-pairs", check.failures.len());
        ensure!(check.wrong_leading.is_empty(), "n={n}: wrong leading terms {:?}", check.wrong_leading);
        let gi = graph(2, n);
        let printed = MonomialIdeal::new(g.len(), fam.iter().map(|m| m.leading.clone()).collect());
        ensure!(printed == groebner::initial_ideal(&gi.basis), "n={n}: initial ideal differs");
    }
    Ok(Outcome::Pass("n=4..7 Groebner, initial ideal = underlined set".into()))
}

fn c4_graph_3_6() -> Check {
    let g = graph(3, 6);
    let mins = groebner::minimal_generators(&g.ideal()).map_err(|e| e.to_string())?;
    ensure!(mins == BTreeMap::from([(2, 106)]), "minimal generators {mins:?}");
    let init = groebner::initial_ideal(&g.basis);
    let (_, deg) = init.dim_degree();
    ensure!(deg == 250.into(), "degree {deg}");
    let hist = init.degree_histogram();
    ensure!(hist == BTreeMap::from([(2, 106), (3, 21), (4, 5)]), "initial ideal {hist:?}");
    Ok(Outcome::Pass("106 quadrics, degree 250, initial 106/21/5".into()))
}

fn c5_toric() -> Check {
    let b = Budget::unlimited();
    for n in 4..=6 {
        let t = toric::toric_ideal(2, n, toric::Route::Elimination, &b).map_err(|e| e.to_string())?;
        let (_, fam) = lemma31_generators(n).map_err(|e| e.to_string())?;
        let m = MonomialIdeal::new(t.graph.len(), fam.iter().map(|f| f.leading.clone()).collect());
        ensure!(groebner::initial_ideal(&t.basis) == m, "n={n}: toric initial ideal differs from M");
    }
    let t = toric::toric_ideal(3, 6, toric::Route::Elimination, &b).map_err(|e| e.to_string())?;
    let (_, deg) = groebner::initial_ideal(&t.basis).dim_degree();
    ensure!(deg == 250.into(), "toric (3,6) degree {deg}");
    let mins = groebner::minimal_generators(&t.basis.ideal()).map_err(|e| e.to_string())?;
    ensure!(mins == BTreeMap::from([(2, 106), (3, 1)]), "toric minimal generators {mins:?}");
    let rep = toric::khovanskii_check(3, 6, &b).map_err(|e| e.to_string())?;
    ensure!(rep.passed(), "Khovanskii check failed");
    ensure!(rep.lifts.len() == t.basis.elements.len(), "missing lifts");
    Ok(Outcome::Pass(format!("n=4..6 match, (3,6) degree 250, {} lifts", rep.lifts.len())))
}

fn c6_polytopes() -> Check {
    for (n, vol) in [(4, 9), (5, 27), (6, 83)] {
        let p = polytope::cgt(n).map_err(|e| e.to_string())?;
        let v = polytope::normalized_volume(&p, &complex_of(&graph(2, n))).map_err(|e| e.to_string())?;
        ensure!(v == vol.into(), "CGT(2,{n}) volume {v}");
    }
    let p = polytope::cgt(4).map_err(|e| e.to_string())?;
    let l = ehrhart_from_unimodular(&complex_of(&graph(2, 4)));
    // (1/5!)(t+1)(t+2)(t+3)(9t^2+26t+20)
    let printed = [[1, 1], [2, 1], [3, 1]]
        .iter()
        .fold(UniPoly::from_ints(&[20, 26, 9]), |acc, c| acc.mul(&UniPoly::from_ints(c)))
        .scale(&Rational::new(1, 120));
    ensure!(l == printed, "Ehrhart polynomial differs");
    for t in 1..=4 {
        let brute = polytope::lattice_points(&p, t, 50_000_000).map_err(|e| e.to_string())?;
        ensure!(l.eval_int(t as i64) == Rational::from_int(brute as i64), "t={t}: brute force {brute}");
    }
    let f4 = polytope::face_lattice(&p).map_err(|e| e.to_string())?.f_vector;
    ensure!(f4 == vec![11, 32, 42, 28, 9], "f-vector CGT(2,4) {f4:?}");
    let f5 = polytope::face_lattice(&polytope::cgt(5).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?.f_vector;
    ensure!(f5 == vec![17, 77, 166, 200, 141, 57, 12], "f-vector CGT(2,5) {f5:?}");
    let fl6 = polytope::face_lattice(&polytope::cgt(6).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
    ensure!(fl6.facets.len() == 15, "CGT(2,6) has {} facets", fl6.facets.len());
    Ok(Outcome::Pass("volumes 9/27/83, Ehrhart, f-vectors, 15 facets".into()))
}

fn c7_solutions() -> Check {
    let b = Budget::unlimited();
    let mut counts = Vec::new();
    for (n, expected) in [(4, 9), (5, 27)] {
        let g = graph_ideal(2, n, Chart::Intro, &b).map_err(|e| e.to_string())?;
        let dim = g.graph.psi_vars().len();
        for seed in 1..=3u64 {
            let h = Hamiltonian::random(dim, seed);
            let c = cc_solution_count_on(&g, &h, seed, &b).map_err(|e| e.to_string())?;
            ensure!(c == expected.into(), "(2,{n}) seed {seed}: {c} solutions");
            counts.push(c.to_string());
        }
    }
    Ok(Outcome::Pass(format!("counts {}", counts.join(","))))
}

fn c8_large() -> Check {
    Ok(Outcome::Skip("574507 / 9239646 / 10907231 need hours of toric computation".into()))
}

/// 200 random cases of each property; the full suites live in `properties.rs`.
fn c9_properties() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let order = MonomialOrder::grevlex(3);
    let ring = ccdeg_core::VariableTable::shared(["x", "y", "z"]).unwrap();
    let poly = |rng: &mut ChaCha8Rng| {
        let mut p = Polynomial::zero();
        for _ in 0..rng.gen_range(1..4) {
            let m = ccdeg_core::Monomial::from_pairs((0..3).map(|v| (v, rng.gen_range(0..3u32))));
            p = p.add(&Polynomial::monomial(m, Rational::from_int(rng.gen_range(-5..=5))));
        }
        p
    };
    for case in 0..200 {
        let gens = vec![poly(&mut rng), poly(&mut rng)];
        let gb = groebner::buchberger(&groebner::Ideal::new(ring.clone(), gens.clone()), &order);
        ensure!(groebner::is_groebner(&gb.elements, &order).is_groebner, "case {case}: S-pair reduction");
        ensure!(gens.iter().all(|g| gb.contains(g)), "case {case}: generator not reduced to zero");
        let a = ccdeg_core::Monomial::from_pairs((0..3).map(|v| (v, rng.gen_range(0..4u32))));
        let b = ccdeg_core::Monomial::from_pairs((0..3).map(|v| (v, rng.gen_range(0..4u32))));
        let c = ccdeg_core::Monomial::from_pairs((0..3).map(|v| (v, rng.gen_range(0..4u32))));
        ensure!(order.compare(&a, &b) == order.compare(&a.mul(&c), &b.mul(&c)), "case {case}: order not multiplicative");
    }
    let ideal = groebner::Ideal::new(ring.clone(), vec![poly(&mut rng).mul(&Polynomial::var(2))]);
    let once = groebner::saturate(&ideal, 2, &Budget::unlimited()).map_err(|e| e.to_string())?;
    let twice = groebner::saturate(&once, 2, &Budget::unlimited()).map_err(|e| e.to_string())?;
    let g1 = groebner::buchberger(&once, &order);
    ensure!(groebner::buchberger(&twice, &order).elements == g1.elements, "saturation not idempotent");
    for n in 4..=6 {
        let p = polytope::cgt(n).map_err(|e| e.to_string())?;
        for f in &complex_of(&graph(2, n)).facets {
            ensure!(polytope::simplex_index(&p, f) == 1.into(), "CGT(2,{n}) facet {f:?} not unimodular");
        }
    }
    Ok(Outcome::Pass("sampled suites pass; see properties test target".into()))
}

#[test]
fn acceptance() {
    let criteria: [(&str, fn() -> Check); 9] = [
        ("1 chain-count formula", c1_chains),
        ("2 graph (2,6) numbers", c2_graph_2_6),
        ("3 quadric family is a Groebner basis", c3_lemma_family),
        ("4 graph (3,6) numbers", c4_graph_3_6),
        ("5 toric cross-check", c5_toric),
        ("6 polytope suite", c6_polytopes),
        ("7 solution counts", c7_solutions),
        ("8 large degrees", c8_large),
        ("9 property suites", c9_properties),
    ];
    let mut failed = Vec::new();
    // libtest has already written "test acceptance ... " on this line
    report!();
    for (name, f) in criteria {
        let start = Instant::now();
        let out = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match out {
            Ok(Outcome::Pass(msg)) => report!("PASS  criterion {name} ({secs:.1}s): {msg}"),
            Ok(Outcome::Skip(msg)) => report!("SKIP  criterion {name}: {msg}"),
            Err(msg) => {
                report!("FAIL  criterion {name} ({secs:.1}s): {msg}");
                failed.push(name);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
