//! Gröbner bases over ℚ: normal forms, Buchberger, elimination, saturation,
//! initial ideals and the numerical invariants read off from them.

mod engine;
mod int;
pub mod io;
mod monomial_ideal;

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::order::{MonomialOrder, OrderKind};
use crate::poly::Polynomial;
use crate::rational::Rational;
use crate::ring::{Ring, VariableTable};

pub use engine::{Budget, Stats, Stop};
pub use monomial_ideal::{HilbertSeries, MonomialIdeal};

use engine::{Engine, Reducers, Terms};

/// Generators over a fixed ring, with a per-variable grading.
#[derive(Debug, Clone)]
pub struct Ideal {
    pub ring: Ring,
    pub generators: Vec<Polynomial>,
    /// Degree of each variable; all 1 unless stated otherwise.
    pub grading: Vec<u32>,
}

impl Ideal {
    pub fn new(ring: Ring, generators: Vec<Polynomial>) -> Self {
        let n = ring.len();
        let generators = generators.into_iter().filter(|g| !g.is_zero()).collect();
        Ideal { ring, generators, grading: vec![1; n] }
    }

    pub fn is_homogeneous(&self) -> bool {
        self.generators.iter().all(|g| g.is_homogeneous_wrt(&self.grading))
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }
}

#[derive(Debug, Clone)]
pub struct GroebnerBasis {
    pub ring: Ring,
    pub order: MonomialOrder,
    pub elements: Vec<Polynomial>,
    pub reduced: bool,
    /// Set when a budget stopped the computation; the elements are then only
    /// part of a basis.
    pub truncated: bool,
    pub stats: Stats,
}

impl GroebnerBasis {
    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.elements
            .iter()
            .map(|g| g.leading_monomial(&self.order).expect("basis elements are nonzero"))
            .collect()
    }

    pub fn ideal(&self) -> Ideal {
        Ideal::new(self.ring.clone(), self.elements.clone())
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn normal_form(&self, f: &Polynomial) -> Polynomial {
        normal_form(f, &self.elements, &self.order)
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        self.normal_form(f).is_zero()
    }
}

pub(crate) fn to_terms(f: &Polynomial, order: &MonomialOrder) -> Terms {
    let mut t: Terms = f.terms().iter().map(|(m, c)| (order.to_position(m), c.clone())).collect();
    engine::sort_desc(&order.kind, &mut t);
    t
}

pub(crate) fn from_terms(t: &Terms, chain: &[usize]) -> Polynomial {
    Polynomial::from_terms(
        t.iter()
            .map(|(m, c)| (Monomial::from_pairs(m.iter().map(|(p, e)| (chain[p], e))), c.clone())),
    )
}

/// Remainder of `f` on division by `basis`: no term of the result is
/// divisible by a leading monomial of `basis`, and `f - r` lies in the ideal.
pub fn normal_form(f: &Polynomial, basis: &[Polynomial], order: &MonomialOrder) -> Polynomial {
    let chain = order.chain();
    let mut polys: Vec<Terms> = basis
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| to_terms(g, order))
        .collect();
    for p in polys.iter_mut() {
        engine::make_monic(p);
    }
    let red = Reducers::new(&order.kind, &polys, 0..polys.len());
    from_terms(&red.reduce(to_terms(f, order), None), &chain)
}

pub fn buchberger(ideal: &Ideal, order: &MonomialOrder) -> GroebnerBasis {
    buchberger_with(ideal, order, &Budget::unlimited())
}

/// Reduced Gröbner basis of `ideal`, unless `budget` stops the run first, in
/// which case the interreduced partial basis is returned flagged `truncated`.
pub fn buchberger_with(ideal: &Ideal, order: &MonomialOrder, budget: &Budget) -> GroebnerBasis {
    let chain = order.chain();
    let mut eng = Engine::new(order.kind.clone());
    let mut inputs: Vec<(Terms, u32)> = ideal
        .generators
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| (to_terms(g, order), g.total_degree().unwrap_or(0)))
        .collect();
    // deterministic insertion: ascending leading monomial
    let kind = order.kind.clone();
    inputs.sort_by(|a, b| kind.cmp_positioned(&a.0[0].0, &b.0[0].0));
    for (t, s) in inputs {
        let r = eng.reduce(t);
        if !r.is_empty() {
            eng.insert(r, s);
        }
    }
    let stop = eng.run(budget);
    let elements = eng.reduced_basis().iter().map(|t| from_terms(t, &chain)).collect();
    log::debug!(
        "buchberger: {} pairs reduced, {} to zero, {} pruned, stop {:?}",
        eng.stats.pairs_reduced,
        eng.stats.zero_reductions,
        eng.stats.pairs_pruned,
        stop
    );
    GroebnerBasis {
        ring: ideal.ring.clone(),
        order: order.clone(),
        elements,
        reduced: stop == Stop::Complete,
        truncated: stop != Stop::Complete,
        stats: eng.stats.clone(),
    }
}

/// Outcome of checking Buchberger's criterion.
#[derive(Debug, Clone)]
pub struct GbCheck {
    pub is_groebner: bool,
    /// `(i, j, remainder)` for every S-pair that does not reduce to zero.
    pub failures: Vec<(usize, usize, Polynomial)>,
    pub pairs_checked: usize,
}

pub fn is_groebner(gens: &[Polynomial], order: &MonomialOrder) -> GbCheck {
    let chain = order.chain();
    let polys: Vec<Terms> = gens.iter().map(|g| to_terms(g, order)).collect();
    assert!(polys.iter().all(|p| !p.is_empty()), "is_groebner: zero generator");
    let n = polys.len();
    let fails = engine::failing_pairs(&order.kind, &polys);
    let failures: Vec<_> = fails.into_iter().map(|(i, j, r)| (i, j, from_terms(&r, &chain))).collect();
    GbCheck { is_groebner: failures.is_empty(), failures, pairs_checked: n * n.saturating_sub(1) / 2 }
}

/// Result of eliminating a block of variables.
#[derive(Debug, Clone)]
pub struct Elimination {
    /// The elimination ideal over the ring of kept variables.
    pub ideal: Ideal,
    /// Its reduced Gröbner basis for the graded revlex order on `kept_chain`.
    pub basis: GroebnerBasis,
}

/// Intersects `ideal` with the subring of variables outside `block`.
///
/// `kept_chain` lists the kept variables from largest to smallest and fixes
/// the order of the returned basis; by default the ring order is used. The
/// kept variables appear in the new ring in the order of `kept_chain`.
pub fn eliminate(
    ideal: &Ideal,
    block: &[usize],
    kept_chain: Option<&[usize]>,
    budget: &Budget,
) -> Result<Elimination> {
    let n = ideal.ring.len();
    let mut in_block = vec![false; n];
    for &b in block {
        if b >= n {
            return Err(Error::Invalid(format!("variable {b} outside ring")));
        }
        in_block[b] = true;
    }
    let default_kept: Vec<usize> = (0..n).filter(|&v| !in_block[v]).collect();
    let kept: Vec<usize> = match kept_chain {
        Some(c) => c.to_vec(),
        None => default_kept.clone(),
    };
    let mut sorted = kept.clone();
    sorted.sort_unstable();
    if sorted != default_kept {
        return Err(Error::Invalid("kept chain must list exactly the non-eliminated variables".into()));
    }
    let order = MonomialOrder::elimination(block, &kept)?;
    let gb = buchberger_with(ideal, &order, budget);
    if gb.truncated {
        return Err(Error::Budget(format!(
            "elimination stopped after {} basis elements",
            gb.elements.len()
        )));
    }
    let sub = Arc::new(VariableTable::new(kept.iter().map(|&v| ideal.ring.name(v).to_string()))?);
    let mut map = vec![None; n];
    for (i, &v) in kept.iter().enumerate() {
        map[v] = Some(i);
    }
    let elements: Vec<Polynomial> = gb.elements.iter().filter_map(|g| g.remap(&map)).collect();
    let sub_order = MonomialOrder::grevlex(kept.len());
    let mut grading = vec![1; kept.len()];
    for (i, &v) in kept.iter().enumerate() {
        grading[i] = ideal.grading[v];
    }
    let mut elim = Ideal::new(sub.clone(), elements.clone());
    elim.grading = grading;
    Ok(Elimination {
        ideal: elim,
        basis: GroebnerBasis {
            ring: sub,
            order: sub_order,
            elements,
            reduced: true,
            truncated: false,
            stats: gb.stats,
        },
    })
}

/// `I : v^∞`, by adjoining `u` with `u·v - 1` and eliminating `u`.
pub fn saturate(ideal: &Ideal, v: usize, budget: &Budget) -> Result<Ideal> {
    let n = ideal.ring.len();
    if v >= n {
        return Err(Error::Invalid(format!("variable {v} outside ring")));
    }
    let mut fresh = "u".to_string();
    while ideal.ring.rank(&fresh).is_some() {
        fresh.push('u');
    }
    let ext = Arc::new(ideal.ring.extended([fresh])?);
    let u = n;
    let mut gens = ideal.generators.clone();
    gens.push(Polynomial::monomial(Monomial::from_pairs([(u, 1), (v, 1)]), Rational::ONE).sub(&Polynomial::one()));
    let mut ext_ideal = Ideal::new(ext, gens);
    ext_ideal.grading = ideal.grading.clone();
    ext_ideal.grading.push(1);
    let kept: Vec<usize> = (0..n).collect();
    let e = eliminate(&ext_ideal, &[u], Some(&kept), budget)?;
    let mut out = Ideal::new(ideal.ring.clone(), e.basis.elements);
    out.grading = ideal.grading.clone();
    Ok(out)
}

/// Minimal generators of the leading-term ideal.
pub fn initial_ideal(gb: &GroebnerBasis) -> MonomialIdeal {
    MonomialIdeal::new(gb.ring.len(), gb.leading_monomials())
}

/// Number of minimal generators in each degree of a homogeneous ideal.
///
/// Generators are visited by increasing degree; a generator of degree `k`
/// counts when it is not in the ideal generated by those accepted before,
/// which is decided against a Gröbner basis truncated at degree `k`.
pub fn minimal_generators(ideal: &Ideal) -> Result<BTreeMap<u32, usize>> {
    if !ideal.is_homogeneous() || ideal.grading.iter().any(|&w| w != 1) {
        return Err(Error::NotHomogeneous);
    }
    let order = MonomialOrder::grevlex(ideal.ring.len());
    let mut gens: Vec<(u32, Terms)> = ideal
        .generators
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| (g.total_degree().unwrap(), to_terms(g, &order)))
        .collect();
    let kind = order.kind.clone();
    gens.sort_by(|a, b| a.0.cmp(&b.0).then_with(|| kind.cmp_positioned(&a.1[0].0, &b.1[0].0)));
    let mut eng = Engine::new(order.kind.clone());
    let mut hist = BTreeMap::new();
    for (deg, g) in gens {
        eng.run(&Budget::degree(deg));
        let r = eng.reduce(g);
        if !r.is_empty() {
            *hist.entry(deg).or_insert(0) += 1;
            eng.insert(r, deg);
        }
    }
    Ok(hist)
}

/// Dimension of `k[x]/I` as a vector space, `None` when infinite.
pub fn quotient_vector_space_dim(ideal: &Ideal, order: &MonomialOrder, budget: &Budget) -> Result<Option<num_bigint::BigInt>> {
    let gb = buchberger_with(ideal, order, budget);
    if gb.truncated {
        return Err(Error::Budget("quotient dimension".into()));
    }
    Ok(standard_monomial_count(&gb))
}

pub fn standard_monomial_count(gb: &GroebnerBasis) -> Option<num_bigint::BigInt> {
    let m = initial_ideal(gb);
    if m.generators().iter().any(|g| g.degree() == 0) {
        return Some(num_bigint::BigInt::from(0));
    }
    let n = gb.ring.len();
    let pure: Vec<bool> = (0..n)
        .map(|v| m.generators().iter().any(|g| g.len() == 1 && g.exponent(v) > 0))
        .collect();
    if !pure.iter().all(|&p| p) {
        return None;
    }
    let (dim, deg) = m.dim_degree();
    debug_assert_eq!(dim, 0);
    Some(deg)
}

/// Order kind check used by callers that need a graded order.
pub fn is_degree_compatible(order: &MonomialOrder) -> bool {
    matches!(order.kind, OrderKind::GRevLex | OrderKind::Weighted(_))
}

#[cfg(test)]
mod tests;
