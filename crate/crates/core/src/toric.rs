//! Monomial maps, toric ideals and Khovanskii lifts.

use std::cmp::Ordering;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::grassmann::{graph_ideal, map_kernel, Chart, GraphRing};
use crate::groebner::{self, Budget, GroebnerBasis, Ideal};
use crate::monomial::Monomial;
use crate::order::{MonomialOrder, OrderKind};
use crate::poly::Polynomial;
use crate::rational::Rational;
use crate::ring::Ring;

/// Every source variable goes to a monomial with coefficient 1.
#[derive(Debug, Clone)]
pub struct MonomialMap {
    pub source: Ring,
    pub target: Ring,
    pub images: Vec<Monomial>,
}

impl MonomialMap {
    pub fn image_of(&self, m: &Monomial) -> Monomial {
        m.iter()
            .fold(Monomial::one(), |acc, (v, e)| (0..e).fold(acc, |a, _| a.mul(&self.images[v])))
    }

    /// Exponent matrix, one column per source variable.
    pub fn matrix(&self) -> Vec<Vec<i64>> {
        let rows = self.target.len();
        (0..rows)
            .map(|r| self.images.iter().map(|m| m.exponent(r) as i64).collect())
            .collect()
    }
}

/// Diagonal leading terms of the parametrization in the canonical chart.
pub fn diagonal_map(d: usize, n: usize) -> Result<(GraphRing, MonomialMap)> {
    let g = GraphRing::canonical(d, n)?;
    let m = diagonal_map_of(&g);
    Ok((g, m))
}

pub fn diagonal_map_of(g: &GraphRing) -> MonomialMap {
    MonomialMap { source: g.ring.clone(), target: g.ambient.clone(), images: g.diagonal_images() }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Route {
    /// Eliminate the target variables from `v - image(v)`.
    Elimination,
    /// Lattice basis of the kernel of the exponent matrix, then saturation.
    Lattice,
}

#[derive(Debug, Clone)]
pub struct ToricIdeal {
    pub graph: GraphRing,
    pub map: MonomialMap,
    /// Reduced basis for graded revlex on the source ring as listed.
    pub basis: GroebnerBasis,
}

pub fn toric_ideal(d: usize, n: usize, route: Route, budget: &Budget) -> Result<ToricIdeal> {
    let (graph, map) = diagonal_map(d, n)?;
    let basis = toric_ideal_of(&map, route, budget)?;
    Ok(ToricIdeal { graph, map, basis })
}

pub fn toric_ideal_of(map: &MonomialMap, route: Route, budget: &Budget) -> Result<GroebnerBasis> {
    match route {
        Route::Elimination => {
            let images: Vec<Polynomial> = map.images.iter().map(|m| Polynomial::monomial(m.clone(), Rational::ONE)).collect();
            map_kernel(&map.source, &map.target, &images, budget)
        }
        Route::Lattice => lattice_route(map, budget),
    }
}

/// Integer kernel basis of `a` (rows × cols) by column reduction of `[a; I]`.
pub fn integer_kernel(a: &[Vec<i64>], cols: usize) -> Vec<Vec<i64>> {
    let rows = a.len();
    // column-major working copy: top part a, bottom part identity
    let mut c: Vec<Vec<i128>> = (0..cols)
        .map(|j| {
            let mut v: Vec<i128> = (0..rows).map(|i| a[i][j] as i128).collect();
            v.extend((0..cols).map(|k| (k == j) as i128));
            v
        })
        .collect();
    let mut pivot_col = 0;
    for r in 0..rows {
        if pivot_col == cols {
            break;
        }
        // Euclid on row r among columns pivot_col..
        loop {
            let nz: Vec<usize> = (pivot_col..cols).filter(|&j| c[j][r] != 0).collect();
            if nz.is_empty() {
                break;
            }
            let &best = nz.iter().min_by_key(|&&j| c[j][r].abs()).unwrap();
            c.swap(pivot_col, best);
            let mut done = true;
            for j in pivot_col + 1..cols {
                if c[j][r] != 0 {
                    let q = c[j][r] / c[pivot_col][r];
                    let (head, tail) = c.split_at_mut(j);
                    for (x, y) in tail[0].iter_mut().zip(&head[pivot_col]) {
                        *x -= q * y;
                    }
                    if tail[0][r] != 0 {
                        done = false;
                    }
                }
            }
            if done {
                pivot_col += 1;
                break;
            }
        }
    }
    c[pivot_col..]
        .iter()
        .map(|v| v[rows..].iter().map(|&x| x as i64).collect())
        .collect()
}

fn lattice_route(map: &MonomialMap, budget: &Budget) -> Result<GroebnerBasis> {
    let nv = map.source.len();
    let a = map.matrix();
    let ker = integer_kernel(&a, nv);
    let gens: Vec<Polynomial> = ker
        .iter()
        .map(|u| {
            let pos = Monomial::from_pairs(u.iter().enumerate().filter(|p| *p.1 > 0).map(|(i, &x)| (i, x as u32)));
            let neg = Monomial::from_pairs(u.iter().enumerate().filter(|p| *p.1 < 0).map(|(i, &x)| (i, (-x) as u32)));
            Polynomial::monomial(pos, Rational::ONE).sub(&Polynomial::monomial(neg, Rational::ONE))
        })
        .collect();
    let mut ideal = Ideal::new(map.source.clone(), gens);
    if !ideal.is_homogeneous() {
        return Err(Error::Invalid("lattice route needs a homogeneous toric ideal".into()));
    }
    for v in 0..nv {
        ideal = saturate_homogeneous(&ideal, v, budget)?;
    }
    let gb = groebner::buchberger_with(&ideal, &MonomialOrder::grevlex(nv), budget);
    if gb.truncated {
        return Err(Error::Budget("toric ideal".into()));
    }
    Ok(gb)
}

/// `I : v^∞` for homogeneous `I`: a graded revlex basis with `v` the smallest
/// variable, each element divided by its largest power of `v`.
pub fn saturate_homogeneous(ideal: &Ideal, v: usize, budget: &Budget) -> Result<Ideal> {
    let nv = ideal.ring.len();
    let mut chain: Vec<usize> = (0..nv).filter(|&x| x != v).collect();
    chain.push(v);
    let order = MonomialOrder::with_chain(OrderKind::GRevLex, &chain)?;
    let gb = groebner::buchberger_with(ideal, &order, budget);
    if gb.truncated {
        return Err(Error::Budget("saturation".into()));
    }
    let gens = gb
        .elements
        .iter()
        .map(|g| {
            let k = g.terms().iter().map(|(m, _)| m.exponent(v)).min().unwrap_or(0);
            if k == 0 {
                g.clone()
            } else {
                let x = Monomial::var_pow(v, k);
                Polynomial::from_terms(g.terms().iter().map(|(m, c)| (x.quotient_of(m), c.clone())))
            }
        })
        .collect();
    let mut out = Ideal::new(ideal.ring.clone(), gens);
    out.grading = ideal.grading.clone();
    Ok(out)
}

/// Generators with exactly two terms and coefficients `±1`.
#[derive(Debug, Clone)]
pub struct BinomialIdeal {
    pub ring: Ring,
    pub generators: Vec<Polynomial>,
}

impl BinomialIdeal {
    pub fn new(ring: Ring, generators: Vec<Polynomial>) -> Result<Self> {
        for g in &generators {
            let t = g.terms();
            if t.len() != 2 || !t.iter().all(|(_, c)| c.abs().is_one()) {
                return Err(Error::Invalid(format!("not a binomial: {}", g.to_text(&ring))));
            }
        }
        Ok(BinomialIdeal { ring, generators })
    }

    pub fn ideal(&self) -> Ideal {
        Ideal::new(self.ring.clone(), self.generators.clone())
    }
}

impl ToricIdeal {
    pub fn binomials(&self) -> Result<BinomialIdeal> {
        BinomialIdeal::new(self.graph.ring.clone(), self.basis.elements.clone())
    }
}

/// The binomial families for d = 2 as an ideal.
pub fn prop35_ideal(n: usize) -> Result<(GraphRing, BinomialIdeal)> {
    let (g, fams) = crate::grassmann::prop35_generators(n)?;
    let b = BinomialIdeal::new(g.ring.clone(), fams.into_iter().map(|f| f.poly).collect())?;
    Ok((g, b))
}

#[derive(Debug, Clone, Serialize)]
pub struct Lift {
    pub binomial: String,
    pub lift: String,
    /// The lift lies in the graph ideal.
    pub in_graph: bool,
    /// The terms of the lift of largest valuation are exactly the binomial.
    pub initial_form_ok: bool,
    /// The lift has the binomial's leading monomial for the canonical order.
    pub same_leading_term: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct KhovanskiiReport {
    pub d: usize,
    pub n: usize,
    pub chart: String,
    pub initial_equal: bool,
    pub squarefree_graph: bool,
    pub squarefree_toric: bool,
    pub all_lifted: bool,
    pub lifts: Vec<Lift>,
}

impl KhovanskiiReport {
    pub fn passed(&self) -> bool {
        self.initial_equal && self.squarefree_graph && self.squarefree_toric && self.all_lifted
    }
}

/// Terms of `f` whose image under `map` is largest for `target_order`.
pub fn initial_form(f: &Polynomial, map: &MonomialMap, target_order: &MonomialOrder) -> Polynomial {
    let imgs: Vec<Monomial> = f.terms().iter().map(|(m, _)| map.image_of(m)).collect();
    let Some(top) = imgs.iter().max_by(|a, b| target_order.compare(a, b)) else {
        return Polynomial::zero();
    };
    Polynomial::from_terms(
        f.terms()
            .iter()
            .zip(&imgs)
            .filter(|(_, i)| target_order.compare(i, top) == Ordering::Equal)
            .map(|((m, c), _)| (m.clone(), c.clone())),
    )
}

/// Lifts every element of a toric basis to the graph ideal and compares the
/// two initial ideals for the canonical order.
pub fn khovanskii_check(d: usize, n: usize, budget: &Budget) -> Result<KhovanskiiReport> {
    let graph = graph_ideal(d, n, Chart::canonical(d), budget)?;
    let toric = toric_ideal(d, n, Route::Elimination, budget)?;
    Ok(khovanskii_report(&graph.basis, &toric))
}

pub fn khovanskii_report(graph_basis: &GroebnerBasis, toric: &ToricIdeal) -> KhovanskiiReport {
    let g = &toric.graph;
    let order = &graph_basis.order;
    let diag = g.diagonal_order();
    let lifts: Vec<Lift> = toric
        .basis
        .elements
        .par_iter()
        .map(|b| {
            let lift = b.sub(&graph_basis.normal_form(b));
            let in_graph = graph_basis.normal_form(&lift).is_zero();
            let initial_form_ok = initial_form(&lift, &toric.map, &diag) == *b;
            let same_leading_term = lift.leading_monomial(order).ok() == b.leading_monomial(order).ok();
            Lift {
                binomial: b.to_text_with(&g.ring, order),
                lift: lift.to_text_with(&g.ring, order),
                in_graph,
                initial_form_ok,
                same_leading_term,
            }
        })
        .collect();
    let ig = groebner::initial_ideal(graph_basis);
    let it = groebner::initial_ideal(&toric.basis);
    KhovanskiiReport {
        d: g.d,
        n: g.n,
        chart: g.chart.name().to_string(),
        initial_equal: ig == it,
        squarefree_graph: ig.is_squarefree(),
        squarefree_toric: it.is_squarefree(),
        all_lifted: lifts.iter().all(|l| l.in_graph && l.initial_form_ok),
        lifts,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kernel_of_small_matrix() {
        // [1 1 1; 0 1 2]: kernel spanned by (1,-2,1)
        let k = integer_kernel(&[vec![1, 1, 1], vec![0, 1, 2]], 3);
        assert_eq!(k.len(), 1);
        let v = &k[0];
        assert!(v == &vec![1, -2, 1] || v == &vec![-1, 2, -1]);
    }

    #[test]
    fn independent_images_give_zero_ideal() {
        let src = crate::ring::VariableTable::shared(["a", "b"]).unwrap();
        let tgt = crate::ring::VariableTable::shared(["x", "y"]).unwrap();
        let map = MonomialMap { source: src, target: tgt, images: vec![Monomial::var(0), Monomial::var(1)] };
        for route in [Route::Elimination, Route::Lattice] {
            assert!(toric_ideal_of(&map, route, &Budget::unlimited()).unwrap().elements.is_empty());
        }
    }

    #[test]
    fn rational_normal_curve() {
        let src = crate::ring::VariableTable::shared(["a", "b", "c", "d"]).unwrap();
        let tgt = crate::ring::VariableTable::shared(["x", "y"]).unwrap();
        let images = (0..4u32).map(|k| Monomial::from_pairs([(0, 3 - k), (1, k)])).collect();
        let map = MonomialMap { source: src, target: tgt, images };
        let e = toric_ideal_of(&map, Route::Elimination, &Budget::unlimited()).unwrap();
        let l = toric_ideal_of(&map, Route::Lattice, &Budget::unlimited()).unwrap();
        assert_eq!(e.elements, l.elements);
        assert_eq!(e.elements.len(), 3);
    }
}
