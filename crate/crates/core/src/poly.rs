//! Sparse multivariate polynomials over ℚ and their text format.
//!
//! Terms are kept sorted in descending *natural* graded-revlex order (rank 0
//! is the largest variable), so two equal polynomials have identical term
//! vectors. Printing under a different order is available through
//! [`Polynomial::to_text_with`].

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, ParseError, Result};
use crate::monomial::Monomial;
use crate::order::{MonomialOrder, OrderKind};
use crate::rational::{content, Rational};
use crate::ring::VariableTable;

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    terms: Vec<(Monomial, Rational)>,
}

fn natural_cmp(a: &Monomial, b: &Monomial) -> Ordering {
    OrderKind::GRevLex.cmp_positioned(a, b)
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial::default()
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(Monomial::one(), c)
    }

    pub fn one() -> Self {
        Self::constant(Rational::ONE)
    }

    pub fn var(v: usize) -> Self {
        Self::monomial(Monomial::var(v), Rational::ONE)
    }

    pub fn monomial(m: Monomial, c: Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Polynomial { terms: vec![(m, c)] }
    }

    /// Collects terms, summing repeated monomials and dropping zeros.
    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let mut acc: HashMap<Monomial, Rational> = HashMap::new();
        for (m, c) in terms {
            let e = acc.entry(m).or_insert(Rational::ZERO);
            *e = &*e + &c;
        }
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_by(|a, b| natural_cmp(&b.0, &a.0));
        Polynomial { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[(Monomial, Rational)] {
        &self.terms
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms
            .iter()
            .find(|(x, _)| x == m)
            .map(|(_, c)| c.clone())
            .unwrap_or(Rational::ZERO)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut it = self.terms.iter().map(|(m, _)| m.degree());
        match it.next() {
            None => true,
            Some(d) => it.all(|e| e == d),
        }
    }

    /// Homogeneous with respect to per-variable weights.
    pub fn is_homogeneous_wrt(&self, weights: &[u32]) -> bool {
        let w = |m: &Monomial| -> u64 { m.iter().map(|(v, e)| weights[v] as u64 * e as u64).sum() };
        let mut it = self.terms.iter().map(|(m, _)| w(m));
        match it.next() {
            None => true,
            Some(d) => it.all(|e| e == d),
        }
    }

    pub fn variables(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.terms.iter().flat_map(|(m, _)| m.support()).collect();
        v.sort_unstable();
        v.dedup();
        v
    }

    fn merge(&self, other: &Polynomial, scale: &Rational) -> Polynomial {
        let (a, b) = (&self.terms, &other.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match natural_cmp(&a[i].0, &b[j].0) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push((b[j].0.clone(), &b[j].1 * scale));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = &a[i].1 + &(&b[j].1 * scale);
                    if !c.is_zero() {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(b[j..].iter().map(|(m, c)| (m.clone(), c * scale)));
        Polynomial { terms: out }
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        self.merge(other, &Rational::ONE)
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.merge(other, &Rational::from_int(-1))
    }

    pub fn neg(&self) -> Polynomial {
        self.scale(&Rational::from_int(-1))
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial { terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect() }
    }

    /// Multiplication by a monomial preserves any monomial order, so the
    /// natural term order survives without re-sorting.
    pub fn mul_monomial(&self, m: &Monomial, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial { terms: self.terms.iter().map(|(x, k)| (x.mul(m), k * c)).collect() }
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        let mut acc: HashMap<Monomial, Rational> =
            HashMap::with_capacity(self.terms.len() * other.terms.len());
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let e = acc.entry(m1.mul(m2)).or_insert(Rational::ZERO);
                *e = &*e + &(c1 * c2);
            }
        }
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_by(|a, b| natural_cmp(&b.0, &a.0));
        Polynomial { terms }
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut out = Polynomial::one();
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    /// Order-maximal term.
    pub fn leading_term(&self, order: &MonomialOrder) -> Result<(Monomial, Rational)> {
        self.terms
            .iter()
            .max_by(|a, b| order.compare(&a.0, &b.0))
            .cloned()
            .ok_or(Error::NoLeadingTerm)
    }

    pub fn leading_monomial(&self, order: &MonomialOrder) -> Result<Monomial> {
        self.leading_term(order).map(|t| t.0)
    }

    /// Terms listed in descending `order`.
    pub fn sorted_terms(&self, order: &MonomialOrder) -> Vec<(Monomial, Rational)> {
        let mut t = self.terms.clone();
        t.sort_by(|a, b| order.compare(&b.0, &a.0));
        t
    }

    /// Scales so the leading coefficient under `order` is 1.
    pub fn monic(&self, order: &MonomialOrder) -> Polynomial {
        match self.leading_term(order) {
            Ok((_, c)) => self.scale(&c.recip()),
            Err(_) => self.clone(),
        }
    }

    /// Divides out the rational content, leaving coprime integer coefficients
    /// with a positive leading coefficient in the natural order.
    pub fn primitive(&self) -> Polynomial {
        if self.is_zero() {
            return self.clone();
        }
        let mut c = content(self.terms.iter().map(|t| &t.1));
        if self.terms[0].1.is_negative() {
            c = -c;
        }
        self.scale(&c.recip())
    }

    /// Substitutes `images[v]` for each variable `v`.
    pub fn substitute(&self, images: &[Polynomial]) -> Polynomial {
        let mut out = Polynomial::zero();
        let mut cache: HashMap<(usize, u32), Polynomial> = HashMap::new();
        for (m, c) in &self.terms {
            let mut t = Polynomial::constant(c.clone());
            for (v, e) in m.iter() {
                let p = cache.entry((v, e)).or_insert_with(|| images[v].pow(e)).clone();
                t = t.mul(&p);
            }
            out = out.add(&t);
        }
        out
    }

    pub fn evaluate(&self, point: &[Rational]) -> Rational {
        let mut acc = Rational::ZERO;
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (v, e) in m.iter() {
                for _ in 0..e {
                    t = &t * &point[v];
                }
            }
            acc = &acc + &t;
        }
        acc
    }

    /// Renames variables; returns `None` if some variable has no image.
    pub fn remap(&self, map: &[Option<usize>]) -> Option<Polynomial> {
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            terms.push((m.remap(map)?, c.clone()));
        }
        Some(Polynomial::from_terms(terms))
    }

    pub fn to_text(&self, ring: &VariableTable) -> String {
        self.format_terms(&self.terms, ring)
    }

    pub fn to_text_with(&self, ring: &VariableTable, order: &MonomialOrder) -> String {
        self.format_terms(&self.sorted_terms(order), ring)
    }

    fn format_terms(&self, terms: &[(Monomial, Rational)], ring: &VariableTable) -> String {
        if terms.is_empty() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (i, (m, c)) in terms.iter().enumerate() {
            if c.is_negative() {
                s.push('-');
            } else if i > 0 {
                s.push('+');
            }
            let a = c.abs();
            if m.is_one() {
                s.push_str(&a.to_string());
            } else {
                if !a.is_one() {
                    s.push_str(&a.to_string());
                    s.push('*');
                }
                s.push_str(&m.display(ring).to_string());
            }
        }
        s
    }

    /// Parses the text format: `[-]term(+|-term)*`, each term
    /// `[c*]v1[^e1]*...`, `c` an integer or `p/q`.
    pub fn parse(s: &str, ring: &VariableTable) -> std::result::Result<Polynomial, ParseError> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(ParseError::new("empty polynomial"));
        }
        let mut terms = Vec::new();
        let mut start = 0;
        let bytes = s.as_bytes();
        let mut i = 0;
        while i <= bytes.len() {
            let at_split = i == bytes.len() || ((bytes[i] == b'+' || bytes[i] == b'-') && i > start);
            if at_split {
                terms.push(Self::parse_term(&s[start..i], ring)?);
                start = i;
            }
            i += 1;
        }
        Ok(Polynomial::from_terms(terms))
    }

    fn parse_term(t: &str, ring: &VariableTable) -> std::result::Result<(Monomial, Rational), ParseError> {
        let (neg, body) = match t.as_bytes().first() {
            Some(b'-') => (true, &t[1..]),
            Some(b'+') => (false, &t[1..]),
            _ => (false, t),
        };
        if body.is_empty() {
            return Err(ParseError::new(format!("empty term in '{t}'")));
        }
        let mut coef = Rational::ONE;
        let mut pairs = Vec::new();
        for f in body.split('*') {
            if f.is_empty() {
                return Err(ParseError::new(format!("empty factor in '{t}'")));
            }
            if f.as_bytes()[0].is_ascii_digit() {
                let c: Rational = f.parse()?;
                coef = &coef * &c;
            } else {
                let (name, e) = match f.split_once('^') {
                    Some((n, e)) => (
                        n,
                        e.parse::<u32>()
                            .map_err(|_| ParseError::new(format!("bad exponent in '{f}'")))?,
                    ),
                    None => (f, 1),
                };
                let v = ring
                    .rank(name)
                    .ok_or_else(|| ParseError::new(format!("unknown variable '{name}'")))?;
                pairs.push((v, e));
            }
        }
        if neg {
            coef = -coef;
        }
        Ok((Monomial::from_pairs(pairs), coef))
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(m, c)| format!("{c}*{m:?}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}
