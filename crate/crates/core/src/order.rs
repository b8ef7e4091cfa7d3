//! Monomial orders.
//!
//! Every order is a [`OrderKind`] together with a *ranking*: a bijection
//! from variables to positions, position 0 being the largest variable. The
//! kind decides how exponent vectors are compared once variables are listed
//! by position. Hot loops (the Gröbner engine) remap monomials into position
//! space once and then use [`OrderKind::cmp_positioned`] directly.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::monomial::{Exp, Monomial, Var};
use crate::ring::VariableTable;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum OrderKind {
    Lex,
    GRevLex,
    /// Weighted degree (weights indexed by position), ties broken by graded revlex.
    Weighted(Vec<u32>),
    /// The first `block` positions are compared by their total degree first,
    /// then the whole monomial by the inner order.
    Elimination { block: usize, inner: Box<OrderKind> },
}

fn graded_cmp(a: &[(Var, Exp)], b: &[(Var, Exp)]) -> Ordering {
    let da: u32 = a.iter().map(|p| p.1 as u32).sum();
    let db: u32 = b.iter().map(|p| p.1 as u32).sum();
    da.cmp(&db).then_with(|| revlex_cmp(a, b))
}

/// Reverse-lexicographic tie break: the monomial with the smaller exponent in
/// the smallest variable where the two differ is larger.
fn revlex_cmp(a: &[(Var, Exp)], b: &[(Var, Exp)]) -> Ordering {
    let (mut i, mut j) = (a.len(), b.len());
    while i > 0 && j > 0 {
        let (va, ea) = a[i - 1];
        let (vb, eb) = b[j - 1];
        if va == vb {
            if ea != eb {
                return eb.cmp(&ea);
            }
            i -= 1;
            j -= 1;
        } else if va > vb {
            return Ordering::Less;
        } else {
            return Ordering::Greater;
        }
    }
    match (i, j) {
        (0, 0) => Ordering::Equal,
        (_, 0) => Ordering::Less,
        _ => Ordering::Greater,
    }
}

fn lex_cmp(a: &[(Var, Exp)], b: &[(Var, Exp)]) -> Ordering {
    for (x, y) in a.iter().zip(b.iter()) {
        if x.0 == y.0 {
            if x.1 != y.1 {
                return x.1.cmp(&y.1);
            }
        } else if x.0 < y.0 {
            return Ordering::Greater;
        } else {
            return Ordering::Less;
        }
    }
    a.len().cmp(&b.len())
}

impl OrderKind {
    /// Compares monomials whose variables are already positions.
    pub fn cmp_positioned(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.cmp_pairs(&a.pairs, &b.pairs)
    }

    fn cmp_pairs(&self, a: &[(Var, Exp)], b: &[(Var, Exp)]) -> Ordering {
        match self {
            OrderKind::Lex => lex_cmp(a, b),
            OrderKind::GRevLex => graded_cmp(a, b),
            OrderKind::Weighted(w) => {
                let wa: u64 = a.iter().map(|p| w[p.0 as usize] as u64 * p.1 as u64).sum();
                let wb: u64 = b.iter().map(|p| w[p.0 as usize] as u64 * p.1 as u64).sum();
                wa.cmp(&wb).then_with(|| graded_cmp(a, b))
            }
            OrderKind::Elimination { block, inner } => {
                let k = *block as Var;
                let ba: u32 = a.iter().take_while(|p| p.0 < k).map(|p| p.1 as u32).sum();
                let bb: u32 = b.iter().take_while(|p| p.0 < k).map(|p| p.1 as u32).sum();
                ba.cmp(&bb).then_with(|| inner.cmp_pairs(a, b))
            }
        }
    }

    /// The sugar/degree used for pair selection in position space.
    pub fn is_graded(&self) -> bool {
        match self {
            OrderKind::Lex => false,
            OrderKind::GRevLex | OrderKind::Weighted(_) => true,
            OrderKind::Elimination { .. } => false,
        }
    }

    fn tag(&self) -> String {
        match self {
            OrderKind::Lex => "lex".into(),
            OrderKind::GRevLex => "grevlex".into(),
            OrderKind::Weighted(w) => format!(
                "weights:{}",
                w.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
            ),
            OrderKind::Elimination { block, inner } => format!("elim:{block}:{}", inner.tag()),
        }
    }

    fn parse_tag(s: &str) -> Result<OrderKind> {
        if s == "lex" {
            return Ok(OrderKind::Lex);
        }
        if s == "grevlex" {
            return Ok(OrderKind::GRevLex);
        }
        if let Some(rest) = s.strip_prefix("weights:") {
            let w = rest
                .split(',')
                .map(|x| x.trim().parse::<u32>())
                .collect::<std::result::Result<Vec<_>, _>>()
                .map_err(|_| Error::Invalid(format!("bad weights '{rest}'")))?;
            return Ok(OrderKind::Weighted(w));
        }
        if let Some(rest) = s.strip_prefix("elim:") {
            let (k, inner) = rest
                .split_once(':')
                .ok_or_else(|| Error::Invalid(format!("bad elimination order '{s}'")))?;
            let block = k
                .parse()
                .map_err(|_| Error::Invalid(format!("bad block size '{k}'")))?;
            return Ok(OrderKind::Elimination { block, inner: Box::new(Self::parse_tag(inner)?) });
        }
        Err(Error::Invalid(format!("unknown order kind '{s}'")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonomialOrder {
    pub kind: OrderKind,
    /// `position[v]` is the place of variable `v` in the chain, 0 = largest.
    position: Vec<usize>,
}

impl MonomialOrder {
    /// Order whose variable chain is the ring order (rank 0 largest).
    pub fn natural(kind: OrderKind, nvars: usize) -> Self {
        MonomialOrder { kind, position: (0..nvars).collect() }
    }

    pub fn grevlex(nvars: usize) -> Self {
        Self::natural(OrderKind::GRevLex, nvars)
    }

    pub fn lex(nvars: usize) -> Self {
        Self::natural(OrderKind::Lex, nvars)
    }

    /// `chain` lists variables from largest to smallest.
    pub fn with_chain(kind: OrderKind, chain: &[usize]) -> Result<Self> {
        let n = chain.len();
        let mut position = vec![usize::MAX; n];
        for (p, &v) in chain.iter().enumerate() {
            if v >= n || position[v] != usize::MAX {
                return Err(Error::Invalid("variable chain is not a permutation".into()));
            }
            position[v] = p;
        }
        if let OrderKind::Weighted(w) = &kind {
            if w.len() != n || w.contains(&0) {
                return Err(Error::Invalid("weights must be positive, one per variable".into()));
            }
        }
        Ok(MonomialOrder { kind, position })
    }

    /// Elimination order: every variable of `block` is larger than the rest,
    /// compared first by block degree; inner order is graded revlex on the
    /// chain `block ++ rest` (each in the given sequence).
    pub fn elimination(block: &[usize], rest: &[usize]) -> Result<Self> {
        let chain: Vec<usize> = block.iter().chain(rest.iter()).copied().collect();
        Self::with_chain(
            OrderKind::Elimination { block: block.len(), inner: Box::new(OrderKind::GRevLex) },
            &chain,
        )
    }

    pub fn nvars(&self) -> usize {
        self.position.len()
    }

    pub fn position(&self, v: usize) -> usize {
        self.position[v]
    }

    /// Variables from largest to smallest.
    pub fn chain(&self) -> Vec<usize> {
        let mut c = vec![0; self.position.len()];
        for (v, &p) in self.position.iter().enumerate() {
            c[p] = v;
        }
        c
    }

    pub fn to_position(&self, m: &Monomial) -> Monomial {
        Monomial::from_pairs(m.iter().map(|(v, e)| (self.position[v], e)))
    }

    pub fn from_position(&self, m: &Monomial, chain: &[usize]) -> Monomial {
        Monomial::from_pairs(m.iter().map(|(p, e)| (chain[p], e)))
    }

    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        if a == b {
            return Ordering::Equal;
        }
        self.kind.cmp_positioned(&self.to_position(a), &self.to_position(b))
    }

    /// Serialized as `<kind> <v_largest>,...,<v_smallest>`.
    pub fn display<'a>(&'a self, ring: &'a VariableTable) -> impl fmt::Display + 'a {
        struct D<'a>(&'a MonomialOrder, &'a VariableTable);
        impl fmt::Display for D<'_> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                let names: Vec<&str> = self.0.chain().into_iter().map(|v| self.1.name(v)).collect();
                write!(f, "{} {}", self.0.kind.tag(), names.join(","))
            }
        }
        D(self, ring)
    }

    pub fn parse(s: &str, ring: &VariableTable) -> Result<Self> {
        let (tag, names) = s
            .trim()
            .split_once(' ')
            .ok_or_else(|| Error::Invalid(format!("bad order line '{s}'")))?;
        let kind = OrderKind::parse_tag(tag.trim())?;
        let chain = names
            .split(',')
            .map(|n| ring.rank_of(n.trim()))
            .collect::<Result<Vec<_>>>()?;
        if chain.len() != ring.len() {
            return Err(Error::Invalid("order chain must list every variable".into()));
        }
        Self::with_chain(kind, &chain)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(p: &[(usize, u32)]) -> Monomial {
        Monomial::from_pairs(p.iter().copied())
    }

    #[test]
    fn grevlex_basics() {
        let o = MonomialOrder::grevlex(3);
        // x^2 vs xy with x > y
        assert_eq!(o.compare(&m(&[(0, 2)]), &m(&[(0, 1), (1, 1)])), Ordering::Greater);
        // xz vs y^2: same degree, xz contains the smallest variable
        assert_eq!(o.compare(&m(&[(0, 1), (2, 1)]), &m(&[(1, 2)])), Ordering::Less);
        let x = m(&[(0, 1), (1, 3)]);
        assert_eq!(o.compare(&x, &x), Ordering::Equal);
        // degree dominates
        assert_eq!(o.compare(&m(&[(2, 3)]), &m(&[(0, 2)])), Ordering::Greater);
    }

    #[test]
    fn lex_basics() {
        let o = MonomialOrder::lex(3);
        assert_eq!(o.compare(&m(&[(0, 1)]), &m(&[(1, 5)])), Ordering::Greater);
        assert_eq!(o.compare(&m(&[(0, 1), (2, 1)]), &m(&[(0, 1), (1, 1)])), Ordering::Less);
    }

    #[test]
    fn chain_reorders_variables() {
        // chain: z > y > x
        let o = MonomialOrder::with_chain(OrderKind::Lex, &[2, 1, 0]).unwrap();
        assert_eq!(o.compare(&m(&[(0, 3)]), &m(&[(2, 1)])), Ordering::Less);
        assert_eq!(o.chain(), vec![2, 1, 0]);
    }

    #[test]
    fn elimination_block_dominates() {
        // block {0}: any monomial containing variable 0 beats any without
        let o = MonomialOrder::elimination(&[0], &[1, 2]).unwrap();
        assert_eq!(o.compare(&m(&[(0, 1)]), &m(&[(1, 4), (2, 4)])), Ordering::Greater);
        assert_eq!(o.compare(&m(&[(1, 2)]), &m(&[(1, 1), (2, 1)])), Ordering::Greater);
    }

    #[test]
    fn serialization_round_trip() {
        let ring = VariableTable::new(["a", "b", "c"]).unwrap();
        let o = MonomialOrder::elimination(&[2], &[0, 1]).unwrap();
        let s = o.display(&ring).to_string();
        assert_eq!(s, "elim:1:grevlex c,a,b");
        assert_eq!(MonomialOrder::parse(&s, &ring).unwrap(), o);
        let w = MonomialOrder::with_chain(OrderKind::Weighted(vec![1, 2, 3]), &[0, 1, 2]).unwrap();
        assert_eq!(MonomialOrder::parse(&w.display(&ring).to_string(), &ring).unwrap(), w);
    }

    fn arb_mono(n: usize) -> impl Strategy<Value = Monomial> {
        proptest::collection::vec(0u32..4, n).prop_map(|v| Monomial::from_dense(&v))
    }

    fn arb_order(n: usize) -> impl Strategy<Value = MonomialOrder> {
        let perm = Just((0..n).collect::<Vec<_>>()).prop_shuffle();
        (perm, 0usize..4, proptest::collection::vec(1u32..5, n), 1usize..n).prop_map(
            move |(chain, k, w, b)| {
                let kind = match k {
                    0 => OrderKind::Lex,
                    1 => OrderKind::GRevLex,
                    2 => OrderKind::Weighted(w),
                    _ => OrderKind::Elimination { block: b, inner: Box::new(OrderKind::GRevLex) },
                };
                MonomialOrder::with_chain(kind, &chain).unwrap()
            },
        )
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(256))]
        #[test]
        fn order_axioms(o in arb_order(5), a in arb_mono(5), b in arb_mono(5), c in arb_mono(5)) {
            let ab = o.compare(&a, &b);
            prop_assert_eq!(ab, o.compare(&b, &a).reverse());
            prop_assert_eq!(ab == Ordering::Equal, a == b);
            // multiplicativity
            prop_assert_eq!(o.compare(&a.mul(&c), &b.mul(&c)), ab);
            // transitivity
            if ab != Ordering::Greater && o.compare(&b, &c) != Ordering::Greater {
                prop_assert_ne!(o.compare(&a, &c), Ordering::Greater);
            }
            // 1 is the minimum
            prop_assert_ne!(o.compare(&a, &Monomial::one()), Ordering::Less);
            if o.kind.is_graded() && matches!(o.kind, OrderKind::GRevLex) && a.degree() < b.degree() {
                prop_assert_eq!(ab, Ordering::Less);
            }
        }
    }
}
