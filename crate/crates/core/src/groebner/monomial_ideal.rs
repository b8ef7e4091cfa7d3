use std::collections::BTreeMap;

use num_bigint::BigInt;

use crate::monomial::Monomial;

/// Monomial ideal stored by its (unique) minimal generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialIdeal {
    nvars: usize,
    gens: Vec<Monomial>,
}

/// `numerator / (1-t)^nvars`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertSeries {
    pub numerator: Vec<i128>,
    pub nvars: usize,
}

fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| a.cmp(b)));
    gens.dedup();
    let mut out: Vec<Monomial> = Vec::with_capacity(gens.len());
    let mut masks: Vec<u64> = Vec::with_capacity(gens.len());
    for g in gens {
        let gm = g.mask();
        if !out.iter().zip(&masks).any(|(h, &hm)| hm & !gm == 0 && h.divides(&g)) {
            masks.push(gm);
            out.push(g);
        }
    }
    out
}

impl MonomialIdeal {
    pub fn new(nvars: usize, gens: Vec<Monomial>) -> Self {
        MonomialIdeal { nvars, gens: minimalize(gens) }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Minimal generators sorted by degree, then by exponent pattern.
    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(|g| g.is_squarefree())
    }

    /// Number of minimal generators per degree.
    pub fn degree_histogram(&self) -> BTreeMap<u32, usize> {
        let mut h = BTreeMap::new();
        for g in &self.gens {
            *h.entry(g.degree()).or_insert(0) += 1;
        }
        h
    }

    pub fn hilbert_series(&self) -> HilbertSeries {
        HilbertSeries { numerator: numerator(self.gens.clone(), self.nvars), nvars: self.nvars }
    }

    /// Krull dimension and degree of the quotient ring.
    pub fn dim_degree(&self) -> (usize, BigInt) {
        let hs = self.hilbert_series();
        let mut q = hs.numerator;
        trim(&mut q);
        if q.is_empty() {
            // the unit ideal
            return (0, BigInt::from(0));
        }
        let mut k = 0;
        while q.iter().sum::<i128>() == 0 {
            q = divide_one_minus_t(&q);
            k += 1;
        }
        (hs.nvars - k, BigInt::from(q.iter().sum::<i128>()))
    }
}

fn trim(p: &mut Vec<i128>) {
    while p.last() == Some(&0) {
        p.pop();
    }
}

/// `p / (1-t)`, exact when `p(1) = 0`.
fn divide_one_minus_t(p: &[i128]) -> Vec<i128> {
    // p = (1-t) q  =>  q_i = p_0 + ... + p_i
    let mut q = Vec::with_capacity(p.len().saturating_sub(1));
    let mut acc = 0i128;
    for &c in &p[..p.len() - 1] {
        acc += c;
        q.push(acc);
    }
    q
}

fn add_shifted(a: &mut Vec<i128>, b: &[i128], shift: usize) {
    if a.len() < b.len() + shift {
        a.resize(b.len() + shift, 0);
    }
    for (i, &c) in b.iter().enumerate() {
        a[i + shift] += c;
    }
}

fn mul_one_minus_tk(p: &[i128], k: usize) -> Vec<i128> {
    let mut out = p.to_vec();
    let neg: Vec<i128> = p.iter().map(|c| -c).collect();
    add_shifted(&mut out, &neg, k);
    out
}

/// Hilbert numerator by pivot splitting:
/// `N(M) = N(M + (x)) + t·N(M : x)` for a variable `x` of highest frequency.
fn numerator(gens: Vec<Monomial>, nvars: usize) -> Vec<i128> {
    if gens.is_empty() {
        return vec![1];
    }
    if gens.iter().any(|g| g.is_one()) {
        return vec![0];
    }
    let mut count = vec![0usize; nvars];
    for g in &gens {
        for v in g.support() {
            count[v] += 1;
        }
    }
    let (pivot, &best) = count.iter().enumerate().max_by_key(|&(v, c)| (*c, std::cmp::Reverse(v))).unwrap();
    if best <= 1 {
        // pairwise coprime generators
        let mut p = vec![1i128];
        for g in &gens {
            p = mul_one_minus_tk(&p, g.degree() as usize);
        }
        return p;
    }
    // linear generators split off as factors (1 - t)
    if let Some(i) = gens.iter().position(|g| g.degree() == 1) {
        let v = gens[i].support().next().unwrap();
        let rest: Vec<Monomial> = gens.into_iter().filter(|g| g.exponent(v) == 0).collect();
        return mul_one_minus_tk(&numerator(rest, nvars), 1);
    }
    let without: Vec<Monomial> = gens.iter().filter(|g| g.exponent(pivot) == 0).cloned().collect();
    let x = Monomial::var(pivot);
    let colon: Vec<Monomial> = gens
        .iter()
        .map(|g| if g.exponent(pivot) > 0 { x.quotient_of(g) } else { g.clone() })
        .collect();
    let mut n = mul_one_minus_tk(&numerator(without, nvars), 1);
    let c = numerator(minimalize(colon), nvars);
    add_shifted(&mut n, &c, 1);
    n
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(p: &[(usize, u32)]) -> Monomial {
        Monomial::from_pairs(p.iter().copied())
    }

    #[test]
    fn zero_ideal() {
        let z = MonomialIdeal::new(4, vec![]);
        assert_eq!(z.dim_degree(), (4, BigInt::from(1)));
    }

    #[test]
    fn points_and_lines() {
        // (x^2, y) in k[x,y]: two points
        let i = MonomialIdeal::new(2, vec![m(&[(0, 2)]), m(&[(1, 1)])]);
        assert_eq!(i.dim_degree(), (0, BigInt::from(2)));
        // (xy) in k[x,y,z]: two planes
        let j = MonomialIdeal::new(3, vec![m(&[(0, 1), (1, 1)])]);
        assert_eq!(j.dim_degree(), (2, BigInt::from(2)));
        // (xy, yz, xz): three coordinate axes
        let k = MonomialIdeal::new(3, vec![m(&[(0, 1), (1, 1)]), m(&[(1, 1), (2, 1)]), m(&[(0, 1), (2, 1)])]);
        assert_eq!(k.dim_degree(), (1, BigInt::from(3)));
    }

    #[test]
    fn minimalization() {
        let i = MonomialIdeal::new(3, vec![m(&[(0, 2), (1, 1)]), m(&[(0, 1)]), m(&[(0, 1)]), m(&[(2, 3)])]);
        assert_eq!(i.generators(), &[m(&[(0, 1)]), m(&[(2, 3)])]);
        assert!(i.contains(&m(&[(0, 1), (1, 5)])));
        assert!(!i.contains(&m(&[(1, 5), (2, 2)])));
    }
}
