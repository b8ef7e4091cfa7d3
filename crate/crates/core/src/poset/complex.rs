use std::collections::{BTreeMap, HashSet};
use std::fmt;

use crate::error::{Error, Result};
use crate::groebner::MonomialIdeal;
use crate::rational::Rational;
use crate::univariate::UniPoly;

/// Simplicial complex given by its facets (sorted vertex indices).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    pub vertices: Vec<String>,
    pub facets: Vec<Vec<usize>>,
}

fn bits(v: &[usize]) -> u128 {
    v.iter().fold(0u128, |m, &i| m | 1u128 << i)
}

impl SimplicialComplex {
    pub fn new(vertices: Vec<String>, facets: Vec<Vec<usize>>) -> Result<Self> {
        if vertices.len() > 128 {
            return Err(Error::Invalid("at most 128 vertices supported".into()));
        }
        let mut fs: Vec<Vec<usize>> = facets
            .into_iter()
            .map(|mut f| {
                f.sort_unstable();
                f.dedup();
                f
            })
            .collect();
        if fs.iter().flatten().any(|&v| v >= vertices.len()) {
            return Err(Error::Invalid("facet vertex out of range".into()));
        }
        fs.sort();
        fs.dedup();
        let masks: Vec<u128> = fs.iter().map(|f| bits(f)).collect();
        for (i, &a) in masks.iter().enumerate() {
            if masks.iter().enumerate().any(|(j, &b)| i != j && a & b == a) {
                return Err(Error::Invalid("a facet is contained in another".into()));
            }
        }
        Ok(SimplicialComplex { vertices, facets: fs })
    }

    pub fn is_pure(&self) -> bool {
        self.facets.windows(2).all(|w| w[0].len() == w[1].len())
            && self.facets.iter().map(Vec::len).min() == self.facets.iter().map(Vec::len).max()
    }

    /// Dimension of the largest facet.
    pub fn dim(&self) -> Option<usize> {
        self.facets.iter().map(|f| f.len()).max().and_then(|k| k.checked_sub(1))
    }

    /// `f[j]` = number of faces with `j+1` vertices.
    pub fn f_vector(&self) -> Vec<u64> {
        let mut seen: HashSet<u128> = HashSet::new();
        let mut f = vec![0u64; self.dim().map_or(0, |d| d + 1)];
        for facet in &self.facets {
            let k = facet.len();
            // every nonempty subset of the facet
            for sub in 1u32..(1u32 << k) {
                let mut m = 0u128;
                for (b, &v) in facet.iter().enumerate() {
                    if sub >> b & 1 == 1 {
                        m |= 1u128 << v;
                    }
                }
                if seen.insert(m) {
                    f[m.count_ones() as usize - 1] += 1;
                }
            }
        }
        f
    }

    /// One facet per line, vertex labels separated by commas.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for f in &self.facets {
            let names: Vec<&str> = f.iter().map(|&v| self.vertices[v].as_str()).collect();
            s.push_str(&names.join(","));
            s.push('\n');
        }
        s
    }

    pub fn facet_labels(&self) -> Vec<Vec<String>> {
        self.facets
            .iter()
            .map(|f| {
                let mut l: Vec<String> = f.iter().map(|&v| self.vertices[v].clone()).collect();
                l.sort();
                l
            })
            .collect()
    }
}

/// Complex whose minimal non-faces are the supports of the generators of `m`.
pub fn stanley_reisner(m: &MonomialIdeal, vertices: &[String]) -> Result<SimplicialComplex> {
    let n = m.nvars();
    if vertices.len() != n {
        return Err(Error::Invalid("one vertex label per variable required".into()));
    }
    if n > 128 {
        return Err(Error::Invalid("at most 128 vertices supported".into()));
    }
    if let Some(g) = m.generators().iter().find(|g| !g.is_squarefree()) {
        return Err(Error::NotSquarefree(format!("{g:?}")));
    }
    let gens: Vec<u128> = m.generators().iter().map(|g| g.support().fold(0u128, |a, v| a | 1u128 << v)).collect();
    let mut by_vertex: Vec<Vec<u128>> = vec![Vec::new(); n];
    for &g in &gens {
        for (v, list) in by_vertex.iter_mut().enumerate() {
            if g >> v & 1 == 1 {
                list.push(g);
            }
        }
    }
    let mut facets = Vec::new();
    // include/exclude search; an excluded vertex must stay blockable by a
    // generator whose other vertices are not excluded
    fn rec(
        i: usize,
        n: usize,
        face: u128,
        excluded: u128,
        by_vertex: &[Vec<u128>],
        out: &mut Vec<Vec<usize>>,
    ) {
        if i == n {
            let maximal = (0..n).filter(|&v| excluded >> v & 1 == 1).all(|v| {
                let with = face | 1u128 << v;
                by_vertex[v].iter().any(|&g| g & with == g)
            });
            if maximal {
                out.push((0..n).filter(|&v| face >> v & 1 == 1).collect());
            }
            return;
        }
        let bit = 1u128 << i;
        let with = face | bit;
        if !by_vertex[i].iter().any(|&g| g & with == g) {
            rec(i + 1, n, with, excluded, by_vertex, out);
        }
        if by_vertex[i].iter().any(|&g| g & (excluded | bit) == bit) {
            // still possible that i ends up blocked
            let excluded = excluded | bit;
            let ok = (0..i).filter(|&v| excluded >> v & 1 == 1).all(|v| {
                by_vertex[v].iter().any(|&g| g & excluded == 1u128 << v)
            });
            if ok {
                rec(i + 1, n, face, excluded, by_vertex, out);
            }
        }
    }
    rec(0, n, 0, 0, &by_vertex, &mut facets);
    SimplicialComplex::new(vertices.to_vec(), facets)
}

/// Number of facets of a pure complex.
pub fn complex_degree(c: &SimplicialComplex) -> Result<usize> {
    if !c.is_pure() {
        return Err(Error::NotPure);
    }
    Ok(c.facets.len())
}

/// Class in the cohomology of `P^m × P^n`, stored as coefficients of
/// `s^i t^j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BidegreeClass {
    pub m: u32,
    pub n: u32,
    pub coefficients: BTreeMap<(u32, u32), u64>,
}

impl BidegreeClass {
    pub fn total(&self) -> u64 {
        self.coefficients.values().sum()
    }

    /// Coefficients by ascending power of `s`.
    pub fn coefficients_asc(&self) -> Vec<u64> {
        self.coefficients.values().copied().collect()
    }

    /// Coefficients by descending power of `s`.
    pub fn coefficients_desc(&self) -> Vec<u64> {
        self.coefficients.iter().rev().map(|(_, &c)| c).collect()
    }
}

impl fmt::Display for BidegreeClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coefficients.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&(i, j), &c) in self.coefficients.iter().rev() {
            if !first {
                write!(f, "+")?;
            }
            first = false;
            let mut parts = Vec::new();
            if c != 1 {
                parts.push(c.to_string());
            }
            let pw = |v: &str, e: u32| if e == 1 { v.to_string() } else { format!("{v}^{e}") };
            if i > 0 {
                parts.push(pw("s", i));
            }
            if j > 0 {
                parts.push(pw("t", j));
            }
            if parts.is_empty() {
                parts.push("1".into());
            }
            write!(f, "{}", parts.join("*"))?;
        }
        Ok(())
    }
}

/// A facet with `a` vertices on the first side and `b` on the second
/// contributes `s^(m-a+1) t^(n-b+1)`; facets missing a side contribute
/// nothing.
pub fn complex_multidegree(c: &SimplicialComplex, first_side: &[bool], m: u32, n: u32) -> BidegreeClass {
    let mut coefficients = BTreeMap::new();
    for f in &c.facets {
        let a = f.iter().filter(|&&v| first_side[v]).count() as u32;
        let b = f.len() as u32 - a;
        if a == 0 || b == 0 || a > m + 1 || b > n + 1 {
            continue;
        }
        *coefficients.entry((m + 1 - a, n + 1 - b)).or_insert(0) += 1;
    }
    BidegreeClass { m, n, coefficients }
}

/// `L(t) = Σ_j f_j · C(t-1, j)` for a unimodular triangulation with f-vector `f`.
pub fn ehrhart_from_unimodular(c: &SimplicialComplex) -> UniPoly {
    let f = c.f_vector();
    let mut l = UniPoly::zero();
    for (j, &fj) in f.iter().enumerate() {
        l = l.add(&UniPoly::binomial_shifted(j).scale(&Rational::from_int(fj as i64)));
    }
    l
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::Monomial;

    fn names(k: usize) -> Vec<String> {
        (0..k).map(|i| format!("v{i}")).collect()
    }

    #[test]
    fn single_edge_nonface() {
        let m = MonomialIdeal::new(3, vec![Monomial::from_pairs([(0, 1), (1, 1)])]);
        let c = stanley_reisner(&m, &names(3)).unwrap();
        assert_eq!(c.facets, vec![vec![0, 2], vec![1, 2]]);
        assert_eq!(complex_degree(&c).unwrap(), 2);
        assert_eq!(c.f_vector(), vec![3, 2]);
    }

    #[test]
    fn simplex() {
        let c = SimplicialComplex::new(names(4), vec![vec![0, 1, 2, 3]]).unwrap();
        assert_eq!(c.f_vector(), vec![4, 6, 4, 1]);
        assert_eq!(complex_degree(&c).unwrap(), 1);
        // a unimodular simplex of dimension 3: C(t+3, 3)
        let l = ehrhart_from_unimodular(&c);
        assert_eq!(l.eval_int(1), Rational::from_int(4));
        assert_eq!(l.eval_int(2), Rational::from_int(10));
        assert_eq!(l.eval_int(0), Rational::from_int(1));
    }

    #[test]
    fn non_pure_and_non_squarefree() {
        let c = SimplicialComplex::new(names(3), vec![vec![0, 1], vec![2]]).unwrap();
        assert!(matches!(complex_degree(&c), Err(Error::NotPure)));
        let m = MonomialIdeal::new(2, vec![Monomial::from_pairs([(0, 2)])]);
        assert!(matches!(stanley_reisner(&m, &names(2)), Err(Error::NotSquarefree(_))));
    }

    #[test]
    fn multidegree_display() {
        let c = SimplicialComplex::new(names(4), vec![vec![0, 2], vec![0, 3], vec![1, 3]]).unwrap();
        let md = complex_multidegree(&c, &[true, true, false, false], 1, 1);
        assert_eq!(md.total(), 3);
        assert_eq!(md.to_string(), "3*s*t");
    }
}
