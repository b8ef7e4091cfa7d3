use std::cmp::Ordering;
use std::fmt;

/// A d-subset of `[n]` written as its PBW tuple: entries `≤ d` sit at their
/// own position, larger entries fill the remaining positions in increasing
/// order from left to right. Entries are 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PluckerIndex {
    tuple: Vec<u16>,
}

impl PluckerIndex {
    /// PBW tuple of the subset `set` (any order, distinct entries).
    pub fn from_set(d: usize, set: &[u16]) -> Self {
        assert_eq!(set.len(), d, "subset size must be d");
        let mut big: Vec<u16> = set.iter().copied().filter(|&x| x as usize > d).collect();
        big.sort_unstable();
        let small: Vec<bool> = (1..=d).map(|i| set.contains(&(i as u16))).collect();
        let mut it = big.into_iter();
        let tuple = (0..d)
            .map(|i| if small[i] { (i + 1) as u16 } else { it.next().unwrap() })
            .collect();
        PluckerIndex { tuple }
    }

    /// A tuple taken literally, without normalization. Used for the index
    /// pairs of the permuted chart, which are written sorted.
    pub fn raw(tuple: Vec<u16>) -> Self {
        PluckerIndex { tuple }
    }

    pub fn tuple(&self) -> &[u16] {
        &self.tuple
    }

    pub fn d(&self) -> usize {
        self.tuple.len()
    }

    pub fn sorted_set(&self) -> Vec<u16> {
        let mut s = self.tuple.clone();
        s.sort_unstable();
        s
    }

    /// At most one entry exceeds d.
    pub fn is_star(&self) -> bool {
        let d = self.d();
        self.tuple.iter().filter(|&&x| x as usize > d).count() <= 1
    }

    /// Partition profile `λ_i = max{σ_j - d : j ≤ i, σ_j > d}` (0 when no
    /// such j). Nondecreasing with entries in `0..=n-d`.
    pub fn profile(&self) -> Vec<usize> {
        let d = self.d();
        let mut cur = 0;
        self.tuple
            .iter()
            .map(|&x| {
                if x as usize > d {
                    cur = cur.max(x as usize - d);
                }
                cur
            })
            .collect()
    }

    pub fn from_profile(d: usize, lambda: &[usize]) -> Self {
        let mut prev = 0;
        let tuple = lambda
            .iter()
            .enumerate()
            .map(|(i, &l)| {
                let v = if l > prev { (l + d) as u16 } else { (i + 1) as u16 };
                prev = l;
                v
            })
            .collect();
        PluckerIndex { tuple }
    }

    /// Height in the PBW poset.
    pub fn height(&self) -> usize {
        self.profile().iter().sum()
    }

    /// Digits concatenated, or separated by `_` once n has two digits.
    pub fn label(&self, n: usize) -> String {
        let parts: Vec<String> = self.tuple.iter().map(|x| x.to_string()).collect();
        if n >= 10 {
            parts.join("_")
        } else {
            parts.concat()
        }
    }
}

impl fmt::Display for PluckerIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.tuple.iter().map(|x| x.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// All d-subsets of `[n]` in lexicographic order, as sorted vectors.
pub fn subsets(d: usize, n: usize) -> Vec<Vec<u16>> {
    fn rec(start: u16, n: u16, left: usize, cur: &mut Vec<u16>, out: &mut Vec<Vec<u16>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for x in start..=n {
            if (n - x + 1) as usize >= left {
                cur.push(x);
                rec(x + 1, n, left - 1, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(1, n as u16, d, &mut Vec::new(), &mut out);
    out
}

/// PBW tuples of all d-subsets, in lexicographic order of the subsets.
pub fn pbw_tuples(d: usize, n: usize) -> Vec<PluckerIndex> {
    subsets(d, n).iter().map(|s| PluckerIndex::from_set(d, s)).collect()
}

/// The `d(n-d)+1` tuples with at most one entry exceeding d.
pub fn star_set(d: usize, n: usize) -> Vec<PluckerIndex> {
    pbw_tuples(d, n).into_iter().filter(|s| s.is_star()).collect()
}

/// The linear extension used for the PBW order: descending height, ties
/// broken by ascending tuple.
pub fn pbw_cmp(a: &PluckerIndex, b: &PluckerIndex) -> Ordering {
    b.height().cmp(&a.height()).then_with(|| a.tuple.cmp(&b.tuple))
}

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(v: &[u16]) -> Vec<u16> {
        v.to_vec()
    }

    #[test]
    fn pbw_normal_form() {
        assert_eq!(PluckerIndex::from_set(3, &[1, 4, 5]).tuple(), &t(&[1, 4, 5]));
        assert_eq!(PluckerIndex::from_set(3, &[3, 4, 5]).tuple(), &t(&[4, 5, 3]));
        assert_eq!(PluckerIndex::from_set(3, &[2, 3, 6]).tuple(), &t(&[6, 2, 3]));
        assert_eq!(PluckerIndex::from_set(3, &[4, 3, 1]).tuple(), &t(&[1, 4, 3]));
    }

    #[test]
    fn profile_round_trip() {
        for s in pbw_tuples(3, 7) {
            let l = s.profile();
            assert!(l.windows(2).all(|w| w[0] <= w[1]));
            assert_eq!(PluckerIndex::from_profile(3, &l), s);
        }
    }

    #[test]
    fn heights_in_the_36_poset() {
        let h = |v: &[u16]| PluckerIndex::raw(v.to_vec()).height();
        assert_eq!(h(&[6, 2, 3]), 9);
        assert_eq!(h(&[5, 6, 3]), 8);
        assert_eq!(h(&[4, 5, 6]), 6);
        assert_eq!(h(&[1, 2, 3]), 0);
    }

    #[test]
    fn star_set_size() {
        for (d, n) in [(2, 4), (2, 6), (3, 6), (3, 7), (4, 8)] {
            let s = star_set(d, n);
            assert_eq!(s.len(), d * (n - d) + 1);
            assert!(s.contains(&PluckerIndex::raw((1..=d as u16).collect())));
        }
        assert_eq!(pbw_tuples(3, 6).len(), 20);
    }

    #[test]
    fn labels() {
        assert_eq!(PluckerIndex::raw(vec![6, 2, 3]).label(6), "623");
        assert_eq!(PluckerIndex::raw(vec![1, 10, 3]).label(10), "1_10_3");
    }
}
