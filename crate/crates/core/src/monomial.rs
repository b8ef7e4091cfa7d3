use std::fmt;

use smallvec::SmallVec;

use crate::ring::VariableTable;

pub type Var = u16;
pub type Exp = u16;

/// Sparse monomial: `(variable, exponent)` pairs sorted by variable with no
/// zero exponents. Equality and hashing work on that canonical form.
#[derive(Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct Monomial {
    pub(crate) pairs: SmallVec<[(Var, Exp); 6]>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn var(v: usize) -> Self {
        Self::var_pow(v, 1)
    }

    pub fn var_pow(v: usize, e: u32) -> Self {
        let mut m = Monomial::one();
        if e > 0 {
            m.pairs.push((v as Var, e as Exp));
        }
        m
    }

    /// Builds from arbitrary `(var, exp)` pairs, merging repeats.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (usize, u32)>) -> Self {
        let mut v: SmallVec<[(Var, Exp); 6]> = pairs
            .into_iter()
            .filter(|&(_, e)| e > 0)
            .map(|(x, e)| (x as Var, e as Exp))
            .collect();
        v.sort_unstable_by_key(|p| p.0);
        let mut out: SmallVec<[(Var, Exp); 6]> = SmallVec::with_capacity(v.len());
        for (x, e) in v {
            match out.last_mut() {
                Some(last) if last.0 == x => last.1 += e,
                _ => out.push((x, e)),
            }
        }
        Monomial { pairs: out }
    }

    pub fn from_dense(exps: &[u32]) -> Self {
        Self::from_pairs(exps.iter().enumerate().map(|(i, &e)| (i, e)))
    }

    pub fn to_dense(&self, nvars: usize) -> Vec<u32> {
        let mut v = vec![0; nvars];
        for &(x, e) in &self.pairs {
            v[x as usize] = e as u32;
        }
        v
    }

    pub fn is_one(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.pairs.iter().map(|p| p.1 as u32).sum()
    }

    pub fn exponent(&self, v: usize) -> u32 {
        self.pairs
            .binary_search_by_key(&(v as Var), |p| p.0)
            .map(|i| self.pairs[i].1 as u32)
            .unwrap_or(0)
    }

    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.pairs.iter().map(|p| p.0 as usize)
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, u32)> + '_ {
        self.pairs.iter().map(|&(v, e)| (v as usize, e as u32))
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn is_squarefree(&self) -> bool {
        self.pairs.iter().all(|p| p.1 == 1)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (a, b) = (&self.pairs, &other.pairs);
        let mut out = SmallVec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    out.push((a[i].0, a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial { pairs: out }
    }

    /// True if `self` divides `other`.
    pub fn divides(&self, other: &Monomial) -> bool {
        let (a, b) = (&self.pairs, &other.pairs);
        if a.len() > b.len() {
            return false;
        }
        let mut j = 0;
        for &(x, e) in a.iter() {
            while j < b.len() && b[j].0 < x {
                j += 1;
            }
            if j == b.len() || b[j].0 != x || b[j].1 < e {
                return false;
            }
            j += 1;
        }
        true
    }

    /// `other / self`, assuming `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Monomial {
        let mut out = SmallVec::with_capacity(other.pairs.len());
        let mut i = 0;
        for &(x, e) in other.pairs.iter() {
            if i < self.pairs.len() && self.pairs[i].0 == x {
                let d = e - self.pairs[i].1;
                if d > 0 {
                    out.push((x, d));
                }
                i += 1;
            } else {
                out.push((x, e));
            }
        }
        debug_assert_eq!(i, self.pairs.len(), "quotient_of: not a divisor");
        Monomial { pairs: out }
    }

    fn merge_with(&self, other: &Monomial, f: impl Fn(Exp, Exp) -> Exp) -> Monomial {
        let (a, b) = (&self.pairs, &other.pairs);
        let mut out = SmallVec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        loop {
            let (x, e) = match (a.get(i), b.get(j)) {
                (None, None) => break,
                (Some(&(x, e)), None) => {
                    i += 1;
                    (x, f(e, 0))
                }
                (None, Some(&(x, e))) => {
                    j += 1;
                    (x, f(0, e))
                }
                (Some(&(x, e)), Some(&(y, g))) => {
                    if x < y {
                        i += 1;
                        (x, f(e, 0))
                    } else if y < x {
                        j += 1;
                        (y, f(0, g))
                    } else {
                        i += 1;
                        j += 1;
                        (x, f(e, g))
                    }
                }
            };
            if e > 0 {
                out.push((x, e));
            }
        }
        Monomial { pairs: out }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        self.merge_with(other, |a, b| a.max(b))
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        self.merge_with(other, |a, b| a.min(b))
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        let (a, b) = (&self.pairs, &other.pairs);
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => return false,
            }
        }
        true
    }

    /// 64-bit presence mask; `a | b` is impossible unless `mask(a) ⊆ mask(b)`.
    pub fn mask(&self) -> u64 {
        self.pairs.iter().fold(0u64, |m, p| m | (1u64 << (p.0 % 64)))
    }

    /// Renames variables through `map`; `None` entries must not occur in the support.
    pub fn remap(&self, map: &[Option<usize>]) -> Option<Monomial> {
        let mut pairs = Vec::with_capacity(self.pairs.len());
        for &(x, e) in &self.pairs {
            pairs.push((map[x as usize]?, e as u32));
        }
        Some(Monomial::from_pairs(pairs))
    }

    pub fn display<'a>(&'a self, ring: &'a VariableTable) -> MonomialDisplay<'a> {
        MonomialDisplay { m: self, ring }
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.pairs.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .pairs
            .iter()
            .map(|&(v, e)| if e == 1 { format!("v{v}") } else { format!("v{v}^{e}") })
            .collect();
        write!(f, "{}", parts.join("*"))
    }
}

pub struct MonomialDisplay<'a> {
    m: &'a Monomial,
    ring: &'a VariableTable,
}

impl fmt::Display for MonomialDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.m.is_one() {
            return write!(f, "1");
        }
        for (i, (v, e)) in self.m.iter().enumerate() {
            if i > 0 {
                write!(f, "*")?;
            }
            write!(f, "{}", self.ring.name(v))?;
            if e != 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn divisibility_and_lcm() {
        let a = Monomial::from_pairs([(0, 2), (3, 1)]);
        let b = Monomial::from_pairs([(0, 3), (1, 1), (3, 1)]);
        assert!(a.divides(&b));
        assert!(!b.divides(&a));
        assert_eq!(a.quotient_of(&b), Monomial::from_pairs([(0, 1), (1, 1)]));
        assert_eq!(a.lcm(&b), b);
        assert_eq!(a.gcd(&b), a);
        assert!(Monomial::var(2).is_coprime(&a));
        assert_eq!(a.mul(&b).degree(), 8);
    }

    #[test]
    fn from_pairs_merges() {
        let m = Monomial::from_pairs([(3, 1), (1, 2), (3, 2), (5, 0)]);
        assert_eq!(m.to_dense(6), vec![0, 2, 0, 3, 0, 0]);
    }
}
