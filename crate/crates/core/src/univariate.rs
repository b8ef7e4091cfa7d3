//! Univariate polynomials in `t` with rational coefficients (Ehrhart data).

use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniPoly {
    /// Ascending: `coeffs[k]` multiplies `t^k`.
    pub coeffs: Vec<Rational>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn from_ints(c: &[i64]) -> Self {
        Self::new(c.iter().map(|&x| Rational::from_int(x)).collect())
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or(Rational::ZERO)
    }

    pub fn add(&self, o: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        let z = Rational::ZERO;
        Self::new(
            (0..n)
                .map(|i| self.coeffs.get(i).unwrap_or(&z) + o.coeffs.get(i).unwrap_or(&z))
                .collect(),
        )
    }

    pub fn mul(&self, o: &UniPoly) -> UniPoly {
        if self.coeffs.is_empty() || o.coeffs.is_empty() {
            return Self::zero();
        }
        let mut c = vec![Rational::ZERO; self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in o.coeffs.iter().enumerate() {
                c[i + j] = &c[i + j] + &(a * b);
            }
        }
        Self::new(c)
    }

    pub fn scale(&self, k: &Rational) -> UniPoly {
        Self::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    pub fn eval(&self, t: &Rational) -> Rational {
        self.coeffs.iter().rev().fold(Rational::ZERO, |acc, c| &(&acc * t) + c)
    }

    pub fn eval_int(&self, t: i64) -> Rational {
        self.eval(&Rational::from_int(t))
    }

    /// `C(t - 1, j)` as a polynomial in `t`.
    pub fn binomial_shifted(j: usize) -> UniPoly {
        let mut p = UniPoly::from_ints(&[1]);
        for i in 0..j {
            p = p.mul(&UniPoly::from_ints(&[-1 - i as i64, 1]));
        }
        let fact: i64 = (1..=j as i64).product();
        p.scale(&Rational::new(1, fact))
    }

    /// `1/k!*(t+a)*...*(rest)` when `k!·p` has integer coefficients, `k` the
    /// degree; integer roots are split off as linear factors.
    pub fn factored(&self) -> Option<String> {
        let k = self.degree()?;
        let fact: BigInt = (1..=k as u64).map(BigInt::from).product();
        let fr = Rational::from(fact);
        let scaled = self.scale(&fr);
        if !scaled.coeffs.iter().all(|c| c.is_integer()) {
            return None;
        }
        let mut p: Vec<BigInt> = scaled.coeffs.iter().map(|c| c.numer()).collect();
        let mut roots = Vec::new();
        'outer: loop {
            if p.len() <= 2 {
                break;
            }
            let c0 = p[0].abs();
            if c0.is_zero() {
                roots.push(BigInt::zero());
                p.remove(0);
                continue;
            }
            let bound = c0.to_u64()?.min(10_000);
            for r in 1..=bound {
                for sign in [-1i64, 1] {
                    let r = BigInt::from(sign * r as i64);
                    if p[0].clone() % &r != BigInt::zero() {
                        continue;
                    }
                    if let Some(q) = synthetic_division(&p, &r) {
                        roots.push(r);
                        p = q;
                        continue 'outer;
                    }
                }
            }
            break;
        }
        if roots.is_empty() {
            return None;
        }
        roots.sort_by(|a, b| b.cmp(a));
        let mut s = format!("1/{k}!");
        for r in roots {
            s.push_str(&format!("*({})", linear_text(&r)));
        }
        let rest = UniPoly::new(p.into_iter().map(Rational::from).collect());
        if rest.coeffs != vec![Rational::ONE] {
            s.push_str(&format!("*({rest})"));
        }
        Some(s)
    }
}

fn linear_text(root: &BigInt) -> String {
    if root.is_zero() {
        "t".into()
    } else if root.is_negative() {
        format!("t+{}", -root)
    } else {
        format!("t-{root}")
    }
}

/// Quotient of `p` by `(t - r)` when the remainder vanishes.
fn synthetic_division(p: &[BigInt], r: &BigInt) -> Option<Vec<BigInt>> {
    let n = p.len() - 1;
    let mut q = vec![BigInt::zero(); n];
    let mut acc = BigInt::zero();
    for i in (0..=n).rev() {
        acc = &acc * r + &p[i];
        if i > 0 {
            q[i - 1] = acc.clone();
        }
    }
    acc.is_zero().then_some(q)
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if c.is_negative() {
                write!(f, "-")?;
            } else if !first {
                write!(f, "+")?;
            }
            first = false;
            let a = c.abs();
            match k {
                0 => write!(f, "{a}")?,
                _ => {
                    if !a.is_one() {
                        write!(f, "{a}*")?;
                    }
                    if k == 1 {
                        write!(f, "t")?
                    } else {
                        write!(f, "t^{k}")?
                    }
                }
            }
        }
        Ok(())
    }
}
