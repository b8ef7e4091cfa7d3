//! Plücker coordinates, the parametrizations of the graph variety and its
//! defining ideal, and the coupled-cluster degree pipelines.

mod cc;
mod hamiltonian;
mod index;

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::groebner::{self, Budget, GroebnerBasis, Ideal};
use crate::monomial::Monomial;
use crate::order::MonomialOrder;
use crate::poly::Polynomial;
use crate::rational::Rational;
use crate::ring::{Ring, VariableTable};

pub use cc::{cc_degree, cc_solution_count, cc_solution_count_direct, cc_solution_count_on, Method};
pub use hamiltonian::Hamiltonian;
pub use index::{binomial, pbw_cmp, pbw_tuples, star_set, subsets, PluckerIndex};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Chart {
    /// `[I_d | X]`: identity in the first d columns.
    Intro,
    /// d = 2 only: columns `(1,0)`, `(x_1j, x_2j)` for `1 < j < n`, `(0,1)`.
    Permuted2n,
}

impl Chart {
    pub fn name(&self) -> &'static str {
        match self {
            Chart::Intro => "intro",
            Chart::Permuted2n => "permuted2n",
        }
    }

    pub fn parse(s: &str) -> Result<Chart> {
        match s {
            "intro" => Ok(Chart::Intro),
            "permuted2n" | "permuted" => Ok(Chart::Permuted2n),
            _ => Err(Error::Invalid(format!("unknown chart '{s}'"))),
        }
    }

    /// The chart used for all d = 2 work and the one used for d ≥ 3.
    pub fn canonical(d: usize) -> Chart {
        if d == 2 {
            Chart::Permuted2n
        } else {
            Chart::Intro
        }
    }
}

/// Which side of the product of projective spaces a graph variable lives on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    Xi,
    Psi,
}

/// The polynomial ring of the graph (`ξ_σ`, `ψ_σ`) together with the ambient
/// ring (`t`, `s`, `x_ij`) of the parametrization.
///
/// Graph variables are listed from largest to smallest in the canonical
/// variable order of the chart, so the canonical monomial order is graded
/// revlex on the ring as listed.
#[derive(Debug, Clone)]
pub struct GraphRing {
    pub d: usize,
    pub n: usize,
    pub chart: Chart,
    pub ring: Ring,
    pub ambient: Ring,
    /// `(side, label)` of each graph variable.
    pub vars: Vec<(Side, PluckerIndex)>,
    lookup: HashMap<(Side, Vec<u16>), usize>,
    x_lookup: HashMap<(u16, u16), usize>,
}

impl GraphRing {
    pub fn new(d: usize, n: usize, chart: Chart) -> Result<Self> {
        if d < 1 || d >= n {
            return Err(Error::Invalid(format!("need 1 <= d < n, got d={d}, n={n}")));
        }
        if chart == Chart::Permuted2n && d != 2 {
            return Err(Error::Invalid("the permuted chart requires d = 2".into()));
        }
        if n > 60 {
            return Err(Error::Invalid("n too large".into()));
        }
        let vars = match chart {
            Chart::Intro => {
                let mut psi = pbw_tuples(d, n);
                psi.sort_by(pbw_cmp);
                let mut v = Vec::new();
                for s in psi {
                    let star = s.is_star();
                    v.push((Side::Psi, s.clone()));
                    if star {
                        v.push((Side::Xi, s));
                    }
                }
                v
            }
            Chart::Permuted2n => {
                // ascending chain: ξ_ij (if {i,j} meets {1,n}) just before ψ_ij,
                // pairs in lexicographic order
                let mut asc = Vec::new();
                for s in subsets(2, n) {
                    if s[0] == 1 || s[1] as usize == n {
                        asc.push((Side::Xi, PluckerIndex::raw(s.clone())));
                    }
                    asc.push((Side::Psi, PluckerIndex::raw(s)));
                }
                asc.reverse();
                asc
            }
        };
        let names: Vec<String> = vars
            .iter()
            .map(|(side, s)| {
                let p = if *side == Side::Psi { "p" } else { "q" };
                format!("{p}{}", s.label(n))
            })
            .collect();
        let ring = VariableTable::shared(names)?;
        let lookup = vars
            .iter()
            .enumerate()
            .map(|(i, (side, s))| ((*side, s.tuple().to_vec()), i))
            .collect();

        let mut anames = vec!["t".to_string(), "s".to_string()];
        let mut x_lookup = HashMap::new();
        let cols: Vec<u16> = match chart {
            Chart::Intro => (d as u16 + 1..=n as u16).collect(),
            Chart::Permuted2n => (2..n as u16).collect(),
        };
        for r in 1..=d as u16 {
            for &c in &cols {
                x_lookup.insert((r, c), anames.len());
                anames.push(if n >= 10 { format!("x{r}_{c}") } else { format!("x{r}{c}") });
            }
        }
        let ambient = VariableTable::shared(anames)?;
        Ok(GraphRing { d, n, chart, ring, ambient, vars, lookup, x_lookup })
    }

    pub fn canonical(d: usize, n: usize) -> Result<Self> {
        Self::new(d, n, Chart::canonical(d))
    }

    pub fn len(&self) -> usize {
        self.vars.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vars.is_empty()
    }

    pub fn var(&self, side: Side, tuple: &[u16]) -> Option<usize> {
        self.lookup.get(&(side, tuple.to_vec())).copied()
    }

    /// Variable of `ψ_σ` (or `ξ_σ`) for the subset `set`, written in the
    /// chart's label convention.
    pub fn var_of_set(&self, side: Side, set: &[u16]) -> Option<usize> {
        let label = match self.chart {
            Chart::Intro => PluckerIndex::from_set(self.d, set),
            Chart::Permuted2n => {
                let mut s = set.to_vec();
                s.sort_unstable();
                PluckerIndex::raw(s)
            }
        };
        self.var(side, label.tuple())
    }

    pub fn psi_vars(&self) -> Vec<usize> {
        (0..self.len()).filter(|&v| self.vars[v].0 == Side::Psi).collect()
    }

    pub fn xi_vars(&self) -> Vec<usize> {
        (0..self.len()).filter(|&v| self.vars[v].0 == Side::Xi).collect()
    }

    /// Graph variables of one side, ordered by the lexicographic order of
    /// their underlying subsets (the row/column order of Hamiltonians).
    pub fn by_subset(&self, side: Side) -> Vec<usize> {
        let mut v: Vec<usize> = (0..self.len()).filter(|&v| self.vars[v].0 == side).collect();
        v.sort_by_key(|&i| self.vars[i].1.sorted_set());
        v
    }

    /// Per-variable bigrading: `(1,0)` for ξ, `(0,1)` for ψ.
    pub fn side_of(&self, v: usize) -> Side {
        self.vars[v].0
    }

    /// Graded revlex on the listed variables.
    pub fn canonical_order(&self) -> MonomialOrder {
        MonomialOrder::grevlex(self.len())
    }

    pub fn t(&self) -> usize {
        0
    }

    pub fn s(&self) -> usize {
        1
    }

    pub fn x(&self, row: u16, col: u16) -> Option<usize> {
        self.x_lookup.get(&(row, col)).copied()
    }

    /// Column `c` (1-based) of the chart matrix.
    pub fn column(&self, c: u16) -> Vec<Polynomial> {
        let d = self.d as u16;
        let unit = |k: u16| -> Vec<Polynomial> {
            (1..=d).map(|r| if r == k { Polynomial::one() } else { Polynomial::zero() }).collect()
        };
        match self.chart {
            Chart::Intro if c <= d => unit(c),
            Chart::Permuted2n if c == 1 => unit(1),
            Chart::Permuted2n if c as usize == self.n => unit(2),
            _ => (1..=d).map(|r| Polynomial::var(self.x(r, c).expect("column in chart"))).collect(),
        }
    }

    /// Lex order on the ambient ring, `t > s > x` row by row, columns
    /// ascending. It selects the diagonal term of every minor.
    pub fn diagonal_order(&self) -> MonomialOrder {
        MonomialOrder::lex(self.ambient.len())
    }

    /// Image of graph variable `v` under the parametrization:
    /// the determinant of the chart columns in label order, times `t` (ψ) or `s` (ξ).
    pub fn image(&self, v: usize) -> Polynomial {
        let (side, label) = &self.vars[v];
        let cols: Vec<Vec<Polynomial>> = label.tuple().iter().map(|&c| self.column(c)).collect();
        let f = Polynomial::var(if *side == Side::Psi { self.t() } else { self.s() });
        f.mul(&determinant(&cols))
    }

    pub fn images(&self) -> Vec<Polynomial> {
        (0..self.len()).map(|v| self.image(v)).collect()
    }

    /// Leading terms of the images under [`Self::diagonal_order`].
    pub fn diagonal_images(&self) -> Vec<Monomial> {
        let o = self.diagonal_order();
        (0..self.len())
            .map(|v| self.image(v).leading_monomial(&o).expect("images are nonzero"))
            .collect()
    }

    pub fn name(&self, v: usize) -> &str {
        self.ring.name(v)
    }
}

/// Determinant by expansion along the first column.
pub fn determinant(cols: &[Vec<Polynomial>]) -> Polynomial {
    let k = cols.len();
    if k == 0 {
        return Polynomial::one();
    }
    let rows: Vec<usize> = (0..k).collect();
    det_rec(cols, 0, &rows)
}

fn det_rec(cols: &[Vec<Polynomial>], c: usize, rows: &[usize]) -> Polynomial {
    if rows.len() == 1 {
        return cols[c][rows[0]].clone();
    }
    let mut acc = Polynomial::zero();
    for (i, &r) in rows.iter().enumerate() {
        let e = &cols[c][r];
        if e.is_zero() {
            continue;
        }
        let rest: Vec<usize> = rows.iter().copied().filter(|&x| x != r).collect();
        let term = e.mul(&det_rec(cols, c + 1, &rest));
        acc = if i % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
    }
    acc
}

/// `t` times the minor of the chart columns taken in the order of `tuple`.
pub fn minor_image(d: usize, n: usize, tuple: &[u16], chart: Chart) -> Result<(GraphRing, Polynomial)> {
    let g = GraphRing::new(d, n, chart)?;
    let mut sorted = tuple.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if tuple.len() != d || sorted.len() != d || sorted.iter().any(|&c| c == 0 || c as usize > n) {
        return Err(Error::Invalid(format!("{tuple:?} is not a {d}-subset of 1..{n}")));
    }
    let cols: Vec<Vec<Polynomial>> = tuple.iter().map(|&c| g.column(c)).collect();
    let f = Polynomial::var(g.t()).mul(&determinant(&cols));
    Ok((g, f))
}

/// Kernel of the ring map `source → target`, `v ↦ images[v]`, as the reduced
/// Gröbner basis for graded revlex on `source` as listed.
pub fn map_kernel(source: &Ring, target: &Ring, images: &[Polynomial], budget: &Budget) -> Result<GroebnerBasis> {
    let ka = target.len();
    let combined = std::sync::Arc::new(target.extended(source.names().iter().cloned())?);
    let gens: Vec<Polynomial> = images
        .iter()
        .enumerate()
        .map(|(v, img)| Polynomial::var(ka + v).sub(img))
        .collect();
    let ideal = Ideal::new(combined, gens);
    let block: Vec<usize> = (0..ka).collect();
    let kept: Vec<usize> = (ka..ka + source.len()).collect();
    let e = groebner::eliminate(&ideal, &block, Some(&kept), budget)?;
    let mut gb = e.basis;
    gb.ring = source.clone();
    Ok(gb)
}

/// The graph ideal with its reduced Gröbner basis for the canonical order.
#[derive(Debug, Clone)]
pub struct GraphIdeal {
    pub graph: GraphRing,
    pub basis: GroebnerBasis,
}

impl GraphIdeal {
    pub fn ideal(&self) -> Ideal {
        self.basis.ideal()
    }
}

/// Ideal of the closure of the graph of the parametrization, by eliminating
/// `t`, `s` and the chart variables.
pub fn graph_ideal(d: usize, n: usize, chart: Chart, budget: &Budget) -> Result<GraphIdeal> {
    if d < 2 || n < d + 2 {
        return Err(Error::Invalid(format!("graph ideal needs 2 <= d <= n-2, got ({d},{n})")));
    }
    let graph = GraphRing::new(d, n, chart)?;
    let basis = map_kernel(&graph.ring, &graph.ambient, &graph.images(), budget)?;
    Ok(GraphIdeal { graph, basis })
}

/// A generator of the explicit quadric families for d = 2, with its
/// distinguished (leading) monomial.
#[derive(Debug, Clone)]
pub struct FamilyMember {
    pub family: usize,
    pub poly: Polynomial,
    pub leading: Monomial,
}

/// Signed monomial terms `(coefficient, [vars])`.
type Spec = Vec<(i64, [usize; 2])>;

fn two_n_families(graph: &GraphRing, trailing: bool) -> Vec<FamilyMember> {
    assert_eq!(graph.chart, Chart::Permuted2n);
    let n = graph.n as u16;
    let p = |i: u16, j: u16| graph.var(Side::Psi, &[i, j]).unwrap();
    let q = |i: u16, j: u16| graph.var(Side::Xi, &[i, j]).unwrap();
    let mut out = Vec::new();
    let mut push = |family: usize, spec: Spec| {
        let spec: Spec = if trailing { spec } else { spec.into_iter().take(2).collect() };
        let terms = spec
            .iter()
            .map(|(c, v)| (Monomial::from_pairs(v.iter().map(|&x| (x, 1))), Rational::from_int(*c)));
        let lead = Monomial::from_pairs(spec[0].1.iter().map(|&x| (x, 1)));
        out.push(FamilyMember { family, poly: Polynomial::from_terms(terms), leading: lead });
    };
    for i in 1..=n {
        for j in i + 1..=n {
            for k in j + 1..=n {
                for l in k + 1..=n {
                    push(1, vec![(1, [p(i, l), p(j, k)]), (-1, [p(i, k), p(j, l)]), (1, [p(i, j), p(k, l)])]);
                }
            }
        }
    }
    for i in 1..n {
        for j in i + 1..n {
            push(2, vec![(1, [p(i, n), q(j, n)]), (-1, [p(j, n), q(i, n)])]);
        }
    }
    for j in 2..n {
        for k in 2..n {
            push(3, vec![(1, [p(1, j), q(k, n)]), (-1, [p(k, n), q(1, j)])]);
        }
    }
    for k in 2..=n {
        for l in k + 1..=n {
            push(4, vec![(1, [p(1, k), q(1, l)]), (-1, [p(1, l), q(1, k)])]);
        }
    }
    for j in 2..n {
        for k in j + 1..n {
            for l in k + 1..n {
                push(5, vec![(1, [q(1, l), p(j, k)]), (-1, [q(1, k), p(j, l)]), (1, [q(1, j), p(k, l)])]);
            }
        }
    }
    for i in 1..n {
        for j in i + 1..n {
            for k in j + 1..n {
                push(6, vec![(1, [q(i, n), p(j, k)]), (-1, [q(j, n), p(i, k)]), (1, [q(k, n), p(i, j)])]);
            }
        }
    }
    out
}

/// The six quadric families generating the d = 2 graph ideal, over
/// `GraphRing::new(2, n, Chart::Permuted2n)`.
pub fn lemma31_generators(n: usize) -> Result<(GraphRing, Vec<FamilyMember>)> {
    if n < 4 {
        return Err(Error::Invalid("need n >= 4".into()));
    }
    let g = GraphRing::new(2, n, Chart::Permuted2n)?;
    let f = two_n_families(&g, true);
    Ok((g, f))
}

/// The binomial truncations of the same families, generating the toric ideal.
pub fn prop35_generators(n: usize) -> Result<(GraphRing, Vec<FamilyMember>)> {
    if n < 4 {
        return Err(Error::Invalid("need n >= 4".into()));
    }
    let g = GraphRing::new(2, n, Chart::Permuted2n)?;
    let f = two_n_families(&g, false);
    Ok((g, f))
}

/// Outcome of checking a generator family against its printed leading terms
/// and, optionally, a reference basis of the same ideal.
#[derive(Debug, Clone)]
pub struct FamilyCheck {
    pub per_family: Vec<usize>,
    pub is_groebner: bool,
    /// Failing S-pairs as `(i, j, remainder)`.
    pub failures: Vec<(usize, usize, Polynomial)>,
    /// Members whose leading monomial is not the printed one.
    pub wrong_leading: Vec<usize>,
    /// Same initial ideal and same ideal as the reference.
    pub matches_reference: Option<bool>,
}

impl FamilyCheck {
    pub fn passed(&self) -> bool {
        self.is_groebner && self.wrong_leading.is_empty() && self.matches_reference != Some(false)
    }
}

pub fn check_families(
    graph: &GraphRing,
    members: &[FamilyMember],
    reference: Option<&GroebnerBasis>,
) -> FamilyCheck {
    let order = graph.canonical_order();
    let polys: Vec<Polynomial> = members.iter().map(|m| m.poly.clone()).collect();
    let gb = groebner::is_groebner(&polys, &order);
    let wrong_leading = members
        .iter()
        .enumerate()
        .filter(|(_, m)| m.poly.leading_monomial(&order).ok().as_ref() != Some(&m.leading))
        .map(|(i, _)| i)
        .collect();
    let mut per_family = vec![0; members.iter().map(|m| m.family).max().unwrap_or(0)];
    for m in members {
        per_family[m.family - 1] += 1;
    }
    let matches_reference = reference.map(|r| {
        let mine = groebner::MonomialIdeal::new(graph.len(), members.iter().map(|m| m.leading.clone()).collect());
        mine == groebner::initial_ideal(r)
            && polys.iter().all(|p| r.contains(p))
            && r.elements.iter().all(|e| groebner::normal_form(e, &polys, &order).is_zero())
    });
    FamilyCheck { per_family, is_groebner: gb.is_groebner, failures: gb.failures, wrong_leading, matches_reference }
}

/// `(n-1)(n-2)(n²+5n+12)/24`.
pub fn lemma31_count(n: u64) -> u64 {
    (n - 1) * (n - 2) * (n * n + 5 * n + 12) / 24
}

/// The revlex order for d = 2 on the permuted chart's ring: ψ's by
/// lexicographic index pair, each ξ immediately below its ψ.
pub fn termorder_2n(n: usize) -> Result<(GraphRing, MonomialOrder)> {
    let g = GraphRing::new(2, n, Chart::Permuted2n)?;
    let o = g.canonical_order();
    Ok((g, o))
}

/// The revlex order on the intro chart's ring following a linear extension
/// of the PBW poset from the top, each ξ right after its ψ.
pub fn pbw_order(d: usize, n: usize) -> Result<(GraphRing, MonomialOrder)> {
    let g = GraphRing::new(d, n, Chart::Intro)?;
    let o = g.canonical_order();
    Ok((g, o))
}

/// For d = 2: graph variable of the intro chart matching each variable of
/// the permuted chart. Columns are relabeled by `1 ↦ 1`, `n ↦ 2`,
/// `j ↦ j+1`; no signs are needed.
pub fn relabel_2n(n: usize) -> Result<(GraphRing, GraphRing, Vec<usize>)> {
    let perm = GraphRing::new(2, n, Chart::Permuted2n)?;
    let intro = GraphRing::new(2, n, Chart::Intro)?;
    let pi = |c: u16| -> u16 {
        if c == 1 {
            1
        } else if c as usize == n {
            2
        } else {
            c + 1
        }
    };
    let map = perm
        .vars
        .iter()
        .map(|(side, l)| {
            let set: Vec<u16> = l.tuple().iter().map(|&c| pi(c)).collect();
            intro.var_of_set(*side, &set).expect("relabeled variable exists")
        })
        .collect();
    Ok((perm, intro, map))
}

#[cfg(test)]
mod tests;
