//! Finite posets, maximal chains and the simplicial complexes of squarefree
//! initial ideals.

mod complex;

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::grassmann::{pbw_tuples, subsets, PluckerIndex};

pub use complex::{
    complex_degree, complex_multidegree, ehrhart_from_unimodular, stanley_reisner, BidegreeClass,
    SimplicialComplex,
};

/// Finite poset given by its cover relations `(lower, upper)`.
#[derive(Debug, Clone)]
pub struct Poset {
    labels: Vec<String>,
    covers: Vec<(usize, usize)>,
    up: Vec<Vec<usize>>,
    down: Vec<Vec<usize>>,
    topo: Vec<usize>,
}

impl Poset {
    /// Checks acyclicity and that no cover is implied by the others.
    pub fn new(labels: Vec<String>, mut covers: Vec<(usize, usize)>) -> Result<Self> {
        let n = labels.len();
        covers.sort_unstable();
        covers.dedup();
        let mut up = vec![Vec::new(); n];
        let mut down = vec![Vec::new(); n];
        for &(a, b) in &covers {
            if a >= n || b >= n || a == b {
                return Err(Error::Invalid(format!("bad cover ({a},{b})")));
            }
            up[a].push(b);
            down[b].push(a);
        }
        // Kahn's algorithm
        let mut indeg: Vec<usize> = down.iter().map(Vec::len).collect();
        let mut stack: Vec<usize> = (0..n).rev().filter(|&v| indeg[v] == 0).collect();
        let mut topo = Vec::with_capacity(n);
        while let Some(v) = stack.pop() {
            topo.push(v);
            for &w in up[v].iter().rev() {
                indeg[w] -= 1;
                if indeg[w] == 0 {
                    stack.push(w);
                }
            }
        }
        if topo.len() != n {
            return Err(Error::Invalid("cover relation has a cycle".into()));
        }
        let p = Poset { labels, covers, up, down, topo };
        if n <= 4096 {
            for &(a, b) in &p.covers {
                if p.up[a].iter().any(|&c| c != b && p.leq(c, b)) {
                    return Err(Error::Invalid(format!(
                        "cover {} < {} is implied by transitivity",
                        p.labels[a], p.labels[b]
                    )));
                }
            }
        }
        Ok(p)
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn upper_covers(&self, i: usize) -> &[usize] {
        &self.up[i]
    }

    pub fn minimal_elements(&self) -> Vec<usize> {
        (0..self.len()).filter(|&v| self.down[v].is_empty()).collect()
    }

    pub fn maximal_elements(&self) -> Vec<usize> {
        (0..self.len()).filter(|&v| self.up[v].is_empty()).collect()
    }

    /// `a ≤ b`.
    pub fn leq(&self, a: usize, b: usize) -> bool {
        if a == b {
            return true;
        }
        let mut seen = vec![false; self.len()];
        let mut stack = vec![a];
        while let Some(v) = stack.pop() {
            for &w in &self.up[v] {
                if w == b {
                    return true;
                }
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        false
    }

    /// Strict upper sets as bitsets, one per element.
    fn above_sets(&self) -> Vec<Vec<u64>> {
        let words = self.len().div_ceil(64);
        let mut above = vec![vec![0u64; words]; self.len()];
        for &v in self.topo.iter().rev() {
            let mut acc = vec![0u64; words];
            for &w in &self.up[v] {
                acc[w / 64] |= 1 << (w % 64);
                for (a, b) in acc.iter_mut().zip(&above[w]) {
                    *a |= *b;
                }
            }
            above[v] = acc;
        }
        above
    }

    pub fn incomparable_pairs(&self) -> Vec<(usize, usize)> {
        let above = self.above_sets();
        let bit = |s: &Vec<u64>, i: usize| s[i / 64] >> (i % 64) & 1 == 1;
        let mut out = Vec::new();
        for a in 0..self.len() {
            for b in a + 1..self.len() {
                if !bit(&above[a], b) && !bit(&above[b], a) {
                    out.push((a, b));
                }
            }
        }
        out
    }

    /// Number of maximal chains, i.e. source-to-sink paths in the cover graph.
    pub fn count_maximal_chains(&self) -> BigInt {
        let mut paths = vec![BigInt::zero(); self.len()];
        for &v in self.topo.iter().rev() {
            paths[v] = if self.up[v].is_empty() {
                BigInt::one()
            } else {
                self.up[v].iter().map(|&w| &paths[w]).sum()
            };
        }
        self.minimal_elements().iter().map(|&v| &paths[v]).sum()
    }

    /// All maximal chains, bottom to top. Exponential; for small posets.
    pub fn maximal_chains(&self) -> Vec<Vec<usize>> {
        fn rec(p: &Poset, v: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            cur.push(v);
            if p.up[v].is_empty() {
                out.push(cur.clone());
            } else {
                for &w in &p.up[v] {
                    rec(p, w, cur, out);
                }
            }
            cur.pop();
        }
        let mut out = Vec::new();
        for m in self.minimal_elements() {
            rec(self, m, &mut Vec::new(), &mut out);
        }
        out
    }

    /// Hasse diagram in DOT format, edges pointing upwards.
    pub fn to_dot(&self, name: &str) -> String {
        let mut s = format!("digraph \"{name}\" {{\n  rankdir=BT;\n");
        for l in &self.labels {
            s.push_str(&format!("  \"{l}\";\n"));
        }
        for &(a, b) in &self.covers {
            s.push_str(&format!("  \"{}\" -> \"{}\";\n", self.labels[a], self.labels[b]));
        }
        s.push_str("}\n");
        s
    }
}

pub fn count_maximal_chains(p: &Poset) -> BigInt {
    p.count_maximal_chains()
}

fn pair_label(prefix: &str, i: u16, j: u16, n: usize) -> String {
    format!("{prefix}{}", PluckerIndex::raw(vec![i, j]).label(n))
}

fn young_covers(n: usize, offset: usize, index: &HashMap<(u16, u16), usize>) -> Vec<(usize, usize)> {
    let mut covers = Vec::new();
    for (&(i, j), &a) in index {
        if i + 1 < j {
            covers.push((a + offset, index[&(i + 1, j)] + offset));
        }
        if (j as usize) < n {
            covers.push((a + offset, index[&(i, j + 1)] + offset));
        }
    }
    covers
}

fn pair_index(n: usize) -> (Vec<(u16, u16)>, HashMap<(u16, u16), usize>) {
    let pairs: Vec<(u16, u16)> = subsets(2, n).into_iter().map(|s| (s[0], s[1])).collect();
    let index = pairs.iter().enumerate().map(|(k, &p)| (p, k)).collect();
    (pairs, index)
}

/// 2-subsets of `[n]`, ordered componentwise. Elements are labeled `pij`.
pub fn young_poset(n: usize) -> Result<Poset> {
    if n < 2 {
        return Err(Error::Invalid("need n >= 2".into()));
    }
    let (pairs, index) = pair_index(n);
    let labels = pairs.iter().map(|&(i, j)| pair_label("p", i, j, n)).collect();
    Poset::new(labels, young_covers(n, 0, &index))
}

/// Two copies of Young's poset, `qij` below `pij`, linked by `qij → pij`
/// whenever `{i,j}` meets `{1,n}`.
pub fn p2n_poset(n: usize) -> Result<Poset> {
    if n < 3 {
        return Err(Error::Invalid("need n >= 3".into()));
    }
    let (pairs, index) = pair_index(n);
    let m = pairs.len();
    let mut labels: Vec<String> = pairs.iter().map(|&(i, j)| pair_label("q", i, j, n)).collect();
    labels.extend(pairs.iter().map(|&(i, j)| pair_label("p", i, j, n)));
    let mut covers = young_covers(n, 0, &index);
    covers.extend(young_covers(n, m, &index));
    for (k, &(i, j)) in pairs.iter().enumerate() {
        if i == 1 || j as usize == n {
            covers.push((k, k + m));
        }
    }
    Poset::new(labels, covers)
}

/// Maximal chains of [`p2n_poset`] as vertex sets after relabeling every
/// artificial `qij` (with `{i,j}` disjoint from `{1,n}`) to `pij`. The labels
/// are the variable names of the permuted-chart graph ring.
pub fn p2n_chain_facets(n: usize) -> Result<Vec<Vec<String>>> {
    let p = p2n_poset(n)?;
    let relabel = |l: &str| -> String {
        if let Some(rest) = l.strip_prefix('q') {
            let parts: Vec<u16> = if n >= 10 {
                rest.split('_').map(|x| x.parse().unwrap()).collect()
            } else {
                rest.chars().map(|c| c.to_digit(10).unwrap() as u16).collect()
            };
            if parts[0] != 1 && parts[1] as usize != n {
                return format!("p{rest}");
            }
        }
        l.to_string()
    };
    Ok(p
        .maximal_chains()
        .into_iter()
        .map(|c| {
            let mut f: Vec<String> = c.iter().map(|&v| relabel(p.label(v))).collect();
            f.sort();
            f
        })
        .collect())
}

/// The PBW poset on d-subsets: tuples compared through their partition
/// profiles, componentwise. Elements are labeled `p<tuple>` and listed in
/// lexicographic order of the subsets.
pub fn pbw_poset(d: usize, n: usize) -> Result<Poset> {
    if d < 1 || d > n {
        return Err(Error::Invalid("need 1 <= d <= n".into()));
    }
    let tuples = pbw_tuples(d, n);
    let profiles: Vec<Vec<usize>> = tuples.iter().map(|t| t.profile()).collect();
    let index: HashMap<Vec<usize>, usize> = profiles.iter().cloned().enumerate().map(|(k, p)| (p, k)).collect();
    let mut covers = Vec::new();
    for (a, p) in profiles.iter().enumerate() {
        for i in 0..d {
            let mut q = p.clone();
            q[i] += 1;
            if let Some(&b) = index.get(&q) {
                covers.push((a, b));
            }
        }
    }
    let labels = tuples.iter().map(|t| format!("p{}", t.label(n))).collect();
    Poset::new(labels, covers)
}
