use num_bigint::BigInt;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::hamiltonian::random_rational;
use super::{determinant, graph_ideal, Chart, GraphIdeal, GraphRing, Hamiltonian, Side};
use crate::error::{Error, Result};
use crate::groebner::{self, Budget, Ideal};
use crate::order::MonomialOrder;
use crate::poly::Polynomial;
use crate::poset;
use crate::rational::Rational;
use crate::ring::{Ring, VariableTable};
use crate::toric;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    /// Maximal chains of the d = 2 poset.
    Chains,
    /// Degree of the initial ideal of the graph.
    Groebner,
    /// Degree of the toric degeneration.
    Toric,
}

impl Method {
    pub fn name(&self) -> &'static str {
        match self {
            Method::Chains => "chains",
            Method::Groebner => "groebner",
            Method::Toric => "toric",
        }
    }

    pub fn parse(s: &str) -> Result<Method> {
        match s {
            "chains" => Ok(Method::Chains),
            "groebner" => Ok(Method::Groebner),
            "toric" => Ok(Method::Toric),
            _ => Err(Error::Invalid(format!("unknown method '{s}'"))),
        }
    }
}

pub fn cc_degree(d: usize, n: usize, method: Method, budget: &Budget) -> Result<BigInt> {
    match method {
        Method::Chains => {
            if d != 2 {
                return Err(Error::Invalid("the chains method requires d = 2".into()));
            }
            Ok(poset::count_maximal_chains(&poset::p2n_poset(n)?))
        }
        Method::Groebner => {
            let g = graph_ideal(d, n, Chart::canonical(d), budget)?;
            Ok(groebner::initial_ideal(&g.basis).dim_degree().1)
        }
        Method::Toric => {
            let t = toric::toric_ideal(d, n, toric::Route::Elimination, budget)?;
            Ok(groebner::initial_ideal(&t.basis).dim_degree().1)
        }
    }
}

/// Number of solutions, with multiplicity, of `(Hψ)_* = λ ξ` on the graph.
///
/// Computes the graph ideal in the intro chart; see
/// [`cc_solution_count_on`] to reuse one.
pub fn cc_solution_count(d: usize, n: usize, h: &Hamiltonian, seed: u64, budget: &Budget) -> Result<BigInt> {
    let g = graph_ideal(d, n, Chart::Intro, budget)?;
    cc_solution_count_on(&g, h, seed, budget)
}

/// Counts on the affine chart `ψ_{1..d} = 1`, where the graph is the
/// Grassmannian and `ξ` is the projection of `ψ` to the starred coordinates.
///
/// The count is returned once the complement is shown to carry no solution:
/// off the base locus of the projection this is a radical membership test for
/// each starred coordinate in a homogeneous ideal on the Grassmannian; over
/// the base locus, `ξ` is forced to be `(Hψ)_*`. When a test fails, falls back
/// to [`cc_solution_count_direct`].
pub fn cc_solution_count_on(g: &GraphIdeal, h: &Hamiltonian, seed: u64, budget: &Budget) -> Result<BigInt> {
    let graph = &g.graph;
    let psi = check_size(g, h)?;
    let base: Vec<u16> = (1..=graph.d as u16).collect();
    let side = PsiSide::new(g, &psi);
    let Some(base_pos) = psi.iter().position(|&v| graph.vars[v].1.sorted_set() == base) else {
        return cc_solution_count_direct(g, h, seed, budget);
    };
    if side.xi_sign[base_pos].is_none() {
        return cc_solution_count_direct(g, h, seed, budget);
    }
    let main = ChartSystem::new(graph, &psi, h, &base);
    let order = MonomialOrder::grevlex(main.ring.len());
    let Some(count) = groebner::quotient_vector_space_dim(&main.ideal(), &order, budget)? else {
        return Err(Error::Degenerate);
    };
    if side.off_base_empty(h, base_pos, budget)? && side.base_empty(g, &psi, h, budget)? {
        Ok(count)
    } else {
        log::info!("solutions off the main chart, counting on the whole graph");
        cc_solution_count_direct(g, h, seed, budget)
    }
}

/// The Plücker ideal in the ψ variables (position `k` is `psi[k]`) and the
/// sign relating each starred `ξ_r` to `ψ_r` under the parametrization.
struct PsiSide {
    ring: Ring,
    plucker: Vec<Polynomial>,
    xi_sign: Vec<Option<Rational>>,
}

impl PsiSide {
    fn new(g: &GraphIdeal, psi: &[usize]) -> Self {
        let graph = &g.graph;
        let map: Vec<Option<usize>> = (0..graph.len()).map(|v| psi.iter().position(|&p| p == v)).collect();
        // the basis is bihomogeneous, so its ξ-free part generates the ξ-free part of the ideal
        let plucker = g.basis.elements.iter().filter_map(|e| e.remap(&map)).collect();
        let units: Vec<Polynomial> = (0..graph.ambient.len())
            .map(|v| if v == graph.t() || v == graph.s() { Polynomial::one() } else { Polynomial::var(v) })
            .collect();
        let xi_sign = psi
            .iter()
            .map(|&pv| {
                let xv = graph.var_of_set(Side::Xi, &graph.vars[pv].1.sorted_set())?;
                let a = graph.image(pv).substitute(&units);
                let b = graph.image(xv).substitute(&units);
                Some(if a == b { Rational::ONE } else { Rational::from_int(-1) })
            })
            .collect();
        let names: Vec<String> = psi.iter().map(|&v| graph.ring.name(v).to_string()).collect();
        let ring = VariableTable::shared(names).expect("distinct names");
        PsiSide { ring, plucker, xi_sign }
    }

    fn hpsi(&self, h: &Hamiltonian, r: usize) -> Polynomial {
        let vars: Vec<Polynomial> = (0..self.ring.len()).map(Polynomial::var).collect();
        h_row(h, r, &vars)
    }

    /// Every point of the Grassmannian with `ψ_base = 0` and
    /// `rank[(Hψ)_*, ±ψ_*] ≤ 1` lies in the base locus.
    fn off_base_empty(&self, h: &Hamiltonian, base: usize, budget: &Budget) -> Result<bool> {
        let np = self.ring.len();
        let star: Vec<usize> = (0..np).filter(|&r| self.xi_sign[r].is_some()).collect();
        let mut gens = self.plucker.clone();
        gens.push(Polynomial::var(base));
        let cols: Vec<(Polynomial, Polynomial)> = star
            .iter()
            .map(|&r| (self.hpsi(h, r), Polynomial::var(r).scale(self.xi_sign[r].as_ref().unwrap())))
            .collect();
        for a in 0..cols.len() {
            for b in a + 1..cols.len() {
                let m = cols[a].0.mul(&cols[b].1).sub(&cols[b].0.mul(&cols[a].1));
                if !m.is_zero() {
                    gens.push(m);
                }
            }
        }
        for &s in star.iter().filter(|&&s| s != base) {
            // with s last, a power of s lies in the ideal iff one is in the basis
            let mut perm: Vec<usize> = (0..np).filter(|&k| k != s).collect();
            perm.push(s);
            let inv: Vec<Option<usize>> = (0..np).map(|k| perm.iter().position(|&q| q == k)).collect();
            let ring = VariableTable::shared(perm.iter().map(|&k| self.ring.name(k).to_string())).expect("distinct names");
            let gs = gens.iter().map(|p| p.remap(&inv).expect("total map")).collect();
            let gb = groebner::buchberger_with(&Ideal::new(ring, gs), &MonomialOrder::grevlex(np), budget);
            if gb.truncated {
                return Err(Error::Budget("boundary check".into()));
            }
            let pure = gb.elements.iter().any(|e| e.len() == 1 && e.terms()[0].0.iter().all(|(v, _)| v == np - 1));
            if !pure {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Over the base locus the only candidates are `ξ = (Hψ)_*`, or any `ξ`
    /// when `(Hψ)_* = 0`; both systems must have only the trivial zero.
    fn base_empty(&self, g: &GraphIdeal, psi: &[usize], h: &Hamiltonian, budget: &Budget) -> Result<bool> {
        let graph = &g.graph;
        let np = self.ring.len();
        let free: Vec<usize> = (0..np).filter(|&r| self.xi_sign[r].is_none()).collect();
        if free.is_empty() {
            return Ok(true);
        }
        let ring = VariableTable::shared(free.iter().map(|&k| self.ring.name(k).to_string())).expect("distinct names");
        let on_base: Vec<Polynomial> = (0..np)
            .map(|k| free.iter().position(|&f| f == k).map_or_else(Polynomial::zero, Polynomial::var))
            .collect();
        let hrow: Vec<Option<Polynomial>> = (0..np)
            .map(|r| self.xi_sign[r].as_ref().map(|_| self.hpsi(h, r).substitute(&on_base)))
            .collect();
        let mut killed: Vec<Polynomial> = self.plucker.iter().map(|p| p.substitute(&on_base)).collect();
        killed.extend(hrow.iter().flatten().cloned());
        let mut images = vec![Polynomial::zero(); graph.len()];
        for (k, &v) in psi.iter().enumerate() {
            images[v] = on_base[k].clone();
            if let Some(xv) = graph.var_of_set(Side::Xi, &graph.vars[v].1.sorted_set()) {
                images[xv] = hrow[k].clone().expect("starred row");
            }
        }
        let forced: Vec<Polynomial> = g.basis.elements.iter().map(|e| e.substitute(&images)).collect();
        for gens in [killed, forced] {
            let gens: Vec<Polynomial> = gens.into_iter().filter(|p| !p.is_zero()).collect();
            let q = groebner::quotient_vector_space_dim(&Ideal::new(ring.clone(), gens), &MonomialOrder::grevlex(ring.len()), budget)?;
            if q.is_none() {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

fn check_size(g: &GraphIdeal, h: &Hamiltonian) -> Result<Vec<usize>> {
    let psi = g.graph.by_subset(Side::Psi);
    if h.dim() != psi.len() {
        return Err(Error::Invalid(format!(
            "Hamiltonian has size {}, expected {}",
            h.dim(),
            psi.len()
        )));
    }
    Ok(psi)
}

fn h_row(h: &Hamiltonian, r: usize, psi: &[Polynomial]) -> Polynomial {
    let mut out = Polynomial::zero();
    for (c, p) in psi.iter().enumerate() {
        if !h.entries[r][c].is_zero() {
            out = out.add(&p.scale(&h.entries[r][c]));
        }
    }
    out
}

/// `(Hψ)_r = λ ξ_r` for starred `r` on the Plücker chart `ψ_sigma = 1`.
struct ChartSystem {
    ring: Ring,
    eqs: Vec<Polynomial>,
}

impl ChartSystem {
    fn new(graph: &GraphRing, psi_vars: &[usize], h: &Hamiltonian, sigma: &[u16]) -> Self {
        let d = graph.d as u16;
        let free: Vec<u16> = (1..=graph.n as u16).filter(|c| !sigma.contains(c)).collect();
        // row by row, columns ascending
        let mut names = Vec::new();
        for r in 1..=d {
            names.extend(free.iter().map(|c| format!("y{r}_{c}")));
        }
        let cols: Vec<Vec<Polynomial>> = (1..=graph.n as u16)
            .map(|c| match sigma.iter().position(|&k| k == c) {
                Some(k) => (0..d).map(|r| if r as usize == k { Polynomial::one() } else { Polynomial::zero() }).collect(),
                None => {
                    let j = free.iter().position(|&f| f == c).unwrap();
                    (0..d as usize).map(|r| Polynomial::var(r * free.len() + j)).collect()
                }
            })
            .collect();
        names.push("lambda".into());
        let lam = Polynomial::var(names.len() - 1);
        let ring = VariableTable::shared(names).expect("distinct names");
        let minor = |v: usize| {
            let sel: Vec<Vec<Polynomial>> = graph.vars[v].1.tuple().iter().map(|&c| cols[c as usize - 1].clone()).collect();
            determinant(&sel)
        };
        let psi: Vec<Polynomial> = psi_vars.iter().map(|&v| minor(v)).collect();
        let eqs = psi_vars
            .iter()
            .enumerate()
            .filter_map(|(r, &v)| {
                let xv = graph.var_of_set(Side::Xi, &graph.vars[v].1.sorted_set())?;
                Some(h_row(h, r, &psi).sub(&lam.mul(&minor(xv))))
            })
            .filter(|p| !p.is_zero())
            .collect();
        ChartSystem { ring, eqs }
    }

    fn ideal(&self) -> Ideal {
        Ideal::new(self.ring.clone(), self.eqs.clone())
    }
}

fn affine_forms(graph: &GraphRing, seed: u64) -> Vec<Polynomial> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    [Side::Xi, Side::Psi]
        .into_iter()
        .map(|side| {
            let mut l = Polynomial::constant(Rational::from_int(-1));
            for v in graph.by_subset(side) {
                l = l.add(&Polynomial::var(v).scale(&random_rational(&mut rng)));
            }
            l
        })
        .collect()
}

/// Adjoins the 2×2 minors of `[(Hψ)_*, ξ]` and one random affine hyperplane
/// per factor to the graph ideal and counts standard monomials.
pub fn cc_solution_count_direct(g: &GraphIdeal, h: &Hamiltonian, seed: u64, budget: &Budget) -> Result<BigInt> {
    let graph = &g.graph;
    let psi = check_size(g, h)?;
    let psi_polys: Vec<Polynomial> = psi.iter().map(|&v| Polynomial::var(v)).collect();
    // rows of (Hψ)_* paired with their ξ variable
    let mut rows: Vec<(Polynomial, usize)> = Vec::new();
    for (r, &pv) in psi.iter().enumerate() {
        if let Some(xv) = graph.var_of_set(Side::Xi, &graph.vars[pv].1.sorted_set()) {
            rows.push((h_row(h, r, &psi_polys), xv));
        }
    }
    let mut gens = g.basis.elements.clone();
    for a in 0..rows.len() {
        for b in a + 1..rows.len() {
            let m = rows[a].0.mul(&Polynomial::var(rows[b].1)).sub(&rows[b].0.mul(&Polynomial::var(rows[a].1)));
            if !m.is_zero() {
                gens.push(m);
            }
        }
    }
    gens.extend(affine_forms(graph, seed));
    let ideal = Ideal::new(graph.ring.clone(), gens);
    let order = MonomialOrder::grevlex(graph.len());
    match groebner::quotient_vector_space_dim(&ideal, &order, budget)? {
        Some(c) => Ok(c),
        None => Err(Error::Degenerate),
    }
}
