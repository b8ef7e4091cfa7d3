use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::rational::Rational;

/// Square matrix of rationals indexed by the d-subsets of `[n]` in
/// lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hamiltonian {
    pub entries: Vec<Vec<Rational>>,
}

/// Uniform from `{-99..99}/{1..9}`.
pub fn random_rational(rng: &mut impl Rng) -> Rational {
    Rational::new(rng.gen_range(-99..=99), rng.gen_range(1..=9))
}

impl Hamiltonian {
    pub fn zero(dim: usize) -> Self {
        Hamiltonian { entries: vec![vec![Rational::ZERO; dim]; dim] }
    }

    pub fn random(dim: usize, seed: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let entries = (0..dim)
            .map(|_| (0..dim).map(|_| random_rational(&mut rng)).collect())
            .collect();
        Hamiltonian { entries }
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    /// One row per line, entries separated by spaces.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for row in &self.entries {
            let r: Vec<String> = row.iter().map(|c| c.to_string()).collect();
            s.push_str(&r.join(" "));
            s.push('\n');
        }
        s
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut entries = Vec::new();
        for line in text.lines().map(str::trim) {
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let row = line
                .split_whitespace()
                .map(|x| x.parse::<Rational>().map_err(Error::from))
                .collect::<Result<Vec<_>>>()?;
            entries.push(row);
        }
        let dim = entries.len();
        if entries.iter().any(|r| r.len() != dim) {
            return Err(Error::Invalid("Hamiltonian must be square".into()));
        }
        Ok(Hamiltonian { entries })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_round_trip_and_determinism() {
        let h = Hamiltonian::random(6, 7);
        assert_eq!(Hamiltonian::parse(&h.to_text()).unwrap(), h);
        assert_eq!(Hamiltonian::random(6, 7), h);
        assert_ne!(Hamiltonian::random(6, 8), h);
        assert!(Hamiltonian::parse("1 2\n3\n").is_err());
    }
}
