//! Buchberger's algorithm in position space.
//!
//! Monomials handed to the engine have already been remapped so that
//! variable `p` is the `p`-th largest variable of the active order. Basis
//! elements are kept monic. Pairs are selected by the sugar strategy and
//! pruned with the Gebauer–Möller criteria.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::time::Instant;

use rayon::prelude::*;

use super::int::{self, Int};
use crate::monomial::Monomial;
use crate::order::OrderKind;
use crate::rational::Rational;

pub(crate) type Terms = Vec<(Monomial, Rational)>;
/// Integer terms with content 1 and positive leading coefficient.
pub(crate) type ITerms = Vec<(Monomial, Int)>;

#[derive(Debug, Clone, Default)]
pub struct Budget {
    /// Pairs whose sugar exceeds this are not processed.
    pub max_sugar: Option<u32>,
    /// Stop once this many basis elements have been produced.
    pub max_basis: Option<usize>,
    pub deadline: Option<Instant>,
}

impl Budget {
    pub fn unlimited() -> Self {
        Budget::default()
    }

    pub fn degree(d: u32) -> Self {
        Budget { max_sugar: Some(d), ..Budget::default() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Stop {
    Complete,
    DegreeBound,
    BasisLimit,
    Deadline,
}

#[derive(Debug, Clone)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

#[derive(Debug, Default, Clone)]
pub struct Stats {
    pub pairs_reduced: usize,
    pub zero_reductions: usize,
    pub pairs_pruned: usize,
}

pub(crate) fn sort_desc(kind: &OrderKind, t: &mut Terms) {
    t.sort_by(|a, b| kind.cmp_positioned(&b.0, &a.0));
}

/// `a - c*m*b`, both inputs sorted descending; output sorted descending.
pub(crate) fn sub_mul(kind: &OrderKind, a: &[(Monomial, Rational)], c: &Rational, m: &Monomial, b: &[(Monomial, Rational)]) -> Terms {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let mut i = 0;
    let mut bi = b.iter().map(|(x, k)| (x.mul(m), k)).peekable();
    while i < a.len() {
        match bi.peek() {
            None => break,
            Some((bm, bk)) => match kind.cmp_positioned(&a[i].0, bm) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let (bm, bk) = bi.next().unwrap();
                    out.push((bm, -(c * bk)));
                }
                Ordering::Equal => {
                    let v = &a[i].1 - &(c * bk);
                    if !v.is_zero() {
                        out.push((a[i].0.clone(), v));
                    }
                    i += 1;
                    bi.next();
                }
            },
        }
    }
    out.extend(a[i..].iter().cloned());
    for (bm, bk) in bi {
        out.push((bm, -(c * bk)));
    }
    out
}

pub(crate) fn make_monic(t: &mut Terms) {
    if let Some((_, lc)) = t.first() {
        if !lc.is_one() {
            let inv = lc.recip();
            for (_, c) in t.iter_mut() {
                *c = &*c * &inv;
            }
        }
    }
}

/// Read-only view used for reductions.
pub(crate) struct Reducers<'a> {
    pub kind: &'a OrderKind,
    pub polys: &'a [Terms],
    pub lm: Vec<&'a Monomial>,
    pub mask: Vec<u64>,
    pub idx: Vec<usize>,
}

impl<'a> Reducers<'a> {
    pub fn new(kind: &'a OrderKind, polys: &'a [Terms], active: impl Iterator<Item = usize>) -> Self {
        let idx: Vec<usize> = active.collect();
        let lm: Vec<&Monomial> = idx.iter().map(|&i| &polys[i][0].0).collect();
        let mask = lm.iter().map(|m| m.mask()).collect();
        Reducers { kind, polys, lm, mask, idx }
    }

    fn find(&self, m: &Monomial, skip: Option<usize>) -> Option<usize> {
        let mm = m.mask();
        (0..self.idx.len()).find(|&k| {
            Some(self.idx[k]) != skip && self.mask[k] & !mm == 0 && self.lm[k].divides(m)
        })
    }

    /// Full reduction (leading and tail terms).
    pub fn reduce(&self, f: Terms, skip: Option<usize>) -> Terms {
        let mut f = f;
        let mut result = Vec::new();
        let mut pos = 0;
        while pos < f.len() {
            match self.find(&f[pos].0, skip) {
                Some(k) => {
                    let g = &self.polys[self.idx[k]];
                    let q = self.lm[k].quotient_of(&f[pos].0);
                    let c = f[pos].1.clone();
                    f = sub_mul(self.kind, &f[pos + 1..], &c, &q, &g[1..]);
                    pos = 0;
                }
                None => {
                    result.push(f[pos].clone());
                    pos += 1;
                    if pos > 64 {
                        f.drain(..pos);
                        pos = 0;
                    }
                }
            }
        }
        result
    }
}

pub(crate) fn spoly(kind: &OrderKind, f: &Terms, g: &Terms, lcm: &Monomial) -> Terms {
    let mf = f[0].0.quotient_of(lcm);
    let mg = g[0].0.quotient_of(lcm);
    let left: Terms = f[1..].iter().map(|(m, c)| (m.mul(&mf), c.clone())).collect();
    sub_mul(kind, &left, &Rational::ONE, &mg, &g[1..])
}

/// Primitive integer multiple of `t` with positive leading coefficient.
pub(crate) fn to_int(t: Terms) -> ITerms {
    let coeffs: Vec<Rational> = t.iter().map(|(_, c)| c.clone()).collect();
    let (ints, _) = int::primitive_part(&coeffs);
    let mut out: ITerms = t.into_iter().map(|(m, _)| m).zip(ints).collect();
    if out.first().is_some_and(|(_, c)| c.is_negative()) {
        out.iter_mut().for_each(|(_, c)| *c = c.neg());
    }
    out
}

pub(crate) fn to_monic(t: &ITerms) -> Terms {
    let Some((_, lc)) = t.first() else { return Vec::new() };
    let inv = int::to_rational(lc).recip();
    t.iter().map(|(m, c)| (m.clone(), &int::to_rational(c) * &inv)).collect()
}

/// `ca*a - c*m*b`, both inputs sorted descending; output sorted descending.
fn sub_mul_int(kind: &OrderKind, a: &[(Monomial, Int)], ca: &Int, c: &Int, m: &Monomial, b: &[(Monomial, Int)]) -> ITerms {
    let scale = |x: &Int| if ca.is_one() { x.clone() } else { x.mul(ca) };
    let mut out = Vec::with_capacity(a.len() + b.len());
    let mut i = 0;
    let mut bi = b.iter().map(|(x, k)| (x.mul(m), k)).peekable();
    while i < a.len() {
        match bi.peek() {
            None => break,
            Some((bm, bk)) => match kind.cmp_positioned(&a[i].0, bm) {
                Ordering::Greater => {
                    out.push((a[i].0.clone(), scale(&a[i].1)));
                    i += 1;
                }
                Ordering::Less => {
                    let (bm, bk) = bi.next().unwrap();
                    out.push((bm, c.mul(bk).neg()));
                }
                Ordering::Equal => {
                    let v = scale(&a[i].1).sub(&c.mul(bk));
                    if !v.is_zero() {
                        out.push((a[i].0.clone(), v));
                    }
                    i += 1;
                    bi.next();
                }
            },
        }
    }
    out.extend(a[i..].iter().map(|(m, x)| (m.clone(), scale(x))));
    for (bm, bk) in bi {
        out.push((bm, c.mul(bk).neg()));
    }
    out
}

fn make_primitive(t: &mut ITerms) {
    let g = int::content(t.iter().map(|(_, c)| c));
    let neg = t.first().is_some_and(|(_, c)| c.is_negative());
    if !g.is_one() && !g.is_zero() {
        let g = if neg { g.neg() } else { g };
        t.iter_mut().for_each(|(_, c)| *c = c.div_exact(&g));
    } else if neg {
        t.iter_mut().for_each(|(_, c)| *c = c.neg());
    }
}

/// Fraction-free counterpart of [`Reducers`]; results are primitive.
pub(crate) struct IReducers<'a> {
    pub kind: &'a OrderKind,
    pub polys: &'a [ITerms],
    pub lm: Vec<&'a Monomial>,
    pub mask: Vec<u64>,
    pub idx: Vec<usize>,
}

impl<'a> IReducers<'a> {
    pub fn new(kind: &'a OrderKind, polys: &'a [ITerms], active: impl Iterator<Item = usize>) -> Self {
        let idx: Vec<usize> = active.collect();
        let lm: Vec<&Monomial> = idx.iter().map(|&i| &polys[i][0].0).collect();
        let mask = lm.iter().map(|m| m.mask()).collect();
        IReducers { kind, polys, lm, mask, idx }
    }

    fn find(&self, m: &Monomial, skip: Option<usize>) -> Option<usize> {
        let mm = m.mask();
        (0..self.idx.len()).find(|&k| {
            Some(self.idx[k]) != skip && self.mask[k] & !mm == 0 && self.lm[k].divides(m)
        })
    }

    /// Full reduction up to a nonzero scalar; the first `keep` terms are left alone.
    pub fn reduce(&self, f: ITerms, skip: Option<usize>, keep: usize) -> ITerms {
        let mut f = f;
        let mut result: ITerms = f.drain(..keep.min(f.len())).collect();
        let mut pos = 0;
        let mut steps = 0u32;
        while pos < f.len() {
            match self.find(&f[pos].0, skip) {
                Some(k) => {
                    let g = &self.polys[self.idx[k]];
                    let q = self.lm[k].quotient_of(&f[pos].0);
                    let a = &g[0].1;
                    let c = &f[pos].1;
                    let gg = a.gcd(c);
                    let (fa, fc) = (a.div_exact(&gg), c.div_exact(&gg));
                    if !fa.is_one() {
                        result.iter_mut().for_each(|(_, x)| *x = x.mul(&fa));
                    }
                    f = sub_mul_int(self.kind, &f[pos + 1..], &fa, &fc, &q, &g[1..]);
                    pos = 0;
                    steps += 1;
                    if steps.is_multiple_of(8) {
                        let g = int::content(result.iter().chain(f[pos..].iter()).map(|(_, c)| c));
                        if !g.is_one() && !g.is_zero() {
                            result.iter_mut().chain(f.iter_mut()).for_each(|(_, c)| *c = c.div_exact(&g));
                        }
                    }
                }
                None => {
                    result.push(f[pos].clone());
                    pos += 1;
                    if pos > 64 {
                        f.drain(..pos);
                        pos = 0;
                    }
                }
            }
        }
        make_primitive(&mut result);
        result
    }
}

fn spoly_int(kind: &OrderKind, f: &ITerms, g: &ITerms, lcm: &Monomial) -> ITerms {
    let mf = f[0].0.quotient_of(lcm);
    let mg = g[0].0.quotient_of(lcm);
    let gg = f[0].1.gcd(&g[0].1);
    let (cf, cg) = (g[0].1.div_exact(&gg), f[0].1.div_exact(&gg));
    let left: ITerms = f[1..].iter().map(|(m, c)| (m.mul(&mf), c.clone())).collect();
    sub_mul_int(kind, &left, &cf, &cg, &mg, &g[1..])
}

pub(crate) struct Engine {
    pub kind: OrderKind,
    pub polys: Vec<ITerms>,
    sugar: Vec<u32>,
    pub active: Vec<bool>,
    pairs: BTreeMap<u32, (Vec<Pair>, bool)>,
    pub stats: Stats,
}

impl Engine {
    pub fn new(kind: OrderKind) -> Self {
        Engine {
            kind,
            polys: Vec::new(),
            sugar: Vec::new(),
            active: Vec::new(),
            pairs: BTreeMap::new(),
            stats: Stats::default(),
        }
    }

    pub fn active_indices(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.polys.len()).filter(move |&i| self.active[i])
    }

    /// Reduction of `f` modulo the active elements, up to a scalar.
    pub fn reduce(&self, f: Terms) -> ITerms {
        self.reduce_int(to_int(f))
    }

    fn reduce_int(&self, f: ITerms) -> ITerms {
        IReducers::new(&self.kind, &self.polys, self.active_indices()).reduce(f, None, 0)
    }

    /// Adds a primitive polynomial (sorted, nonzero) with the given sugar.
    pub fn insert(&mut self, h: ITerms, sugar: u32) {
        debug_assert!(!h.is_empty());
        let hi = self.polys.len();
        let hlm = h[0].0.clone();
        self.polys.push(h);
        self.sugar.push(sugar);
        self.active.push(true);

        let lm = |e: &Engine, i: usize| e.polys[i][0].0.clone();
        // candidate pairs with h
        let cands: Vec<(usize, Monomial, bool)> = (0..hi)
            .filter(|&i| self.active[i])
            .map(|i| {
                let l = lm(self, i);
                (i, l.lcm(&hlm), l.is_coprime(&hlm))
            })
            .collect();
        // Gebauer–Möller: drop (i,h) if another candidate's lcm divides it,
        // keeping one representative of equal lcms; coprime pairs survive
        // this step and are removed by the first criterion below.
        let mut keep = vec![false; cands.len()];
        for a in 0..cands.len() {
            let (_, ref la, cop) = cands[a];
            keep[a] = cop
                || (!(a + 1..cands.len()).any(|b| cands[b].1.divides(la))
                    && !(0..a).any(|b| keep[b] && cands[b].1.divides(la)));
        }
        let mut new_pairs = Vec::new();
        for (a, (i, l, cop)) in cands.into_iter().enumerate() {
            if !keep[a] {
                self.stats.pairs_pruned += 1;
                continue;
            }
            if cop {
                // Buchberger's first criterion
                self.stats.pairs_pruned += 1;
                continue;
            }
            new_pairs.push(Pair { i, j: hi, lcm: l });
        }
        // chain criterion on the old pairs
        let polys = &self.polys;
        let mut pruned = 0;
        for (bucket, _) in self.pairs.values_mut() {
            let before = bucket.len();
            bucket.retain(|p| {
                if !hlm.divides(&p.lcm) {
                    return true;
                }
                let li = polys[p.i][0].0.lcm(&hlm);
                let lj = polys[p.j][0].0.lcm(&hlm);
                li == p.lcm || lj == p.lcm
            });
            pruned += before - bucket.len();
        }
        self.stats.pairs_pruned += pruned;
        self.pairs.retain(|_, (b, _)| !b.is_empty());
        for i in 0..hi {
            if self.active[i] && hlm.divides(&self.polys[i][0].0) {
                self.active[i] = false;
            }
        }
        for p in new_pairs {
            let s = self.pair_sugar(&p);
            let e = self.pairs.entry(s).or_insert_with(|| (Vec::new(), true));
            e.0.push(p);
            e.1 = false;
        }
    }

    fn pair_sugar(&self, p: &Pair) -> u32 {
        let d = p.lcm.degree();
        let si = self.sugar[p.i] + d - self.polys[p.i][0].0.degree();
        let sj = self.sugar[p.j] + d - self.polys[p.j][0].0.degree();
        si.max(sj)
    }

    fn pop_pair(&mut self) -> Option<(u32, Pair)> {
        let (&s, _) = self.pairs.iter().next()?;
        let kind = self.kind.clone();
        let (bucket, sorted) = self.pairs.get_mut(&s).unwrap();
        if !*sorted {
            // descending, so the smallest lcm sits at the end
            bucket.sort_by(|a, b| {
                kind.cmp_positioned(&b.lcm, &a.lcm)
                    .then_with(|| (b.i, b.j).cmp(&(a.i, a.j)))
            });
            *sorted = true;
        }
        let p = bucket.pop().unwrap();
        if bucket.is_empty() {
            self.pairs.remove(&s);
        }
        Some((s, p))
    }

    pub fn min_pair_sugar(&self) -> Option<u32> {
        self.pairs.keys().next().copied()
    }

    pub fn has_pairs(&self) -> bool {
        !self.pairs.is_empty()
    }

    pub fn run(&mut self, budget: &Budget) -> Stop {
        loop {
            if let Some(d) = budget.deadline {
                if Instant::now() >= d {
                    return Stop::Deadline;
                }
            }
            if let Some(b) = budget.max_basis {
                if self.polys.len() >= b && self.has_pairs() {
                    return Stop::BasisLimit;
                }
            }
            match self.min_pair_sugar() {
                None => return Stop::Complete,
                Some(s) => {
                    if budget.max_sugar.is_some_and(|m| s > m) {
                        return Stop::DegreeBound;
                    }
                }
            }
            let (s, p) = self.pop_pair().unwrap();
            let sp = spoly_int(&self.kind, &self.polys[p.i], &self.polys[p.j], &p.lcm);
            self.stats.pairs_reduced += 1;
            let r = self.reduce_int(sp);
            if r.is_empty() {
                self.stats.zero_reductions += 1;
            } else {
                self.insert(r, s);
            }
        }
    }

    /// Reduced basis of the active elements, sorted by ascending leading monomial.
    pub fn reduced_basis(&self) -> Vec<Terms> {
        let act: Vec<usize> = self.active_indices().collect();
        let red = IReducers::new(&self.kind, &self.polys, act.iter().copied());
        let mut out: Vec<Terms> = act
            .par_iter()
            .map(|&i| to_monic(&red.reduce(self.polys[i].clone(), Some(i), 1)))
            .collect();
        let kind = &self.kind;
        out.sort_by(|a, b| kind.cmp_positioned(&a[0].0, &b[0].0));
        out
    }
}

/// Checks Buchberger's criterion for `basis` (sorted, nonzero, any scaling).
/// Returns the index pairs whose S-polynomial has a nonzero remainder.
pub(crate) fn failing_pairs(kind: &OrderKind, basis: &[Terms]) -> Vec<(usize, usize, Terms)> {
    let mut monic: Vec<Terms> = basis.to_vec();
    for t in monic.iter_mut() {
        make_monic(t);
    }
    let red = Reducers::new(kind, &monic, 0..monic.len());
    let pairs: Vec<(usize, usize)> = (0..monic.len())
        .flat_map(|i| (i + 1..monic.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| !monic[i][0].0.is_coprime(&monic[j][0].0))
        .collect();
    let mut fails: Vec<(usize, usize, Terms)> = pairs
        .par_iter()
        .filter_map(|&(i, j)| {
            let l = monic[i][0].0.lcm(&monic[j][0].0);
            let r = red.reduce(spoly(kind, &monic[i], &monic[j], &l), None);
            (!r.is_empty()).then_some((i, j, r))
        })
        .collect();
    fails.sort_by_key(|f| (f.0, f.1));
    fails
}
